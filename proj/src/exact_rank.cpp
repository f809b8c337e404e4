#include "susygraph/exact_rank.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

namespace susygraph {

namespace {

using u64 = std::uint64_t;

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2 || n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

struct ModPrime {
  u64 p = 0;
  u64 sqrt_minus_one = 0;
  double log2p = 0.0;
};

// 31-bit primes p ≡ 1 (mod 4), descending from 2^31; products of two
// residues fit in 64 bits.
const std::vector<ModPrime>& prime_table() {
  static const std::vector<ModPrime> table = [] {
    std::vector<ModPrime> out;
    for (u64 candidate = (u64{1} << 31U) - 3; out.size() < 512; candidate -= 4) {
      if (candidate % 4 != 1 || !is_prime(candidate)) continue;
      u64 g = 2;
      while (pow_mod(g, (candidate - 1) / 2, candidate) != candidate - 1) ++g;
      out.push_back(ModPrime{candidate, pow_mod(g, (candidate - 1) / 4, candidate), std::log2(static_cast<double>(candidate))});
    }
    return out;
  }();
  return table;
}

u64 residue(const BigInt& x, u64 p) {
  BigInt r = x % p;
  if (r < 0) r += p;
  return r.convert_to<u64>();
}

// Connected pieces of the bipartite row/column incidence of the nonzeros.
struct Block {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::vector<const Entry*> entries;
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

std::vector<Block> split_blocks(const LinearMap& m) {
  const std::size_t R = m.rows();
  const std::size_t C = m.cols();
  std::vector<std::size_t> parent(R + C);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (const auto& e : m.entries()) {
    const auto a = find_root(parent, e.row);
    const auto b = find_root(parent, R + e.col);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<bool> used(R + C, false);
  for (const auto& e : m.entries()) {
    used[e.row] = true;
    used[R + e.col] = true;
  }
  constexpr auto none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> block_of(R + C, none);
  std::vector<Block> blocks;
  for (std::size_t x = 0; x < R + C; ++x) {
    if (!used[x]) continue;
    const auto root = find_root(parent, x);
    if (block_of[root] == none) {
      block_of[root] = blocks.size();
      blocks.emplace_back();
    }
    auto& b = blocks[block_of[root]];
    if (x < R) {
      b.rows.push_back(x);
    } else {
      b.cols.push_back(x - R);
    }
  }
  for (const auto& e : m.entries()) blocks[block_of[find_root(parent, e.row)]].entries.push_back(&e);
  return blocks;
}

struct LocalEntry {
  std::size_t row;
  std::size_t col;
  const GaussInt* value;
};

struct ModRank {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> pivot_cols;
};

ModRank rank_mod(std::size_t R, std::size_t C, const std::vector<LocalEntry>& entries, const ModPrime& mp) {
  const u64 p = mp.p;
  std::vector<std::uint32_t> storage(R * C, 0);
  for (const auto& e : entries) {
    const u64 re = residue(e.value->real(), p);
    const u64 im = residue(e.value->imag(), p);
    storage[e.row * C + e.col] = static_cast<std::uint32_t>((re + im * mp.sqrt_minus_one) % p);
  }
  std::vector<std::uint32_t*> row(R);
  std::vector<std::size_t> row_id(R);
  for (std::size_t i = 0; i < R; ++i) {
    row[i] = storage.data() + i * C;
    row_id[i] = i;
  }

  ModRank out;
  for (std::size_t c = 0; c < C && out.rank < R; ++c) {
    std::size_t piv = out.rank;
    while (piv < R && row[piv][c] == 0) ++piv;
    if (piv == R) continue;
    std::swap(row[piv], row[out.rank]);
    std::swap(row_id[piv], row_id[out.rank]);
    std::uint32_t* prow = row[out.rank];
    const u64 inv = pow_mod(prow[c], p - 2, p);
    for (std::size_t j = c; j < C; ++j) prow[j] = static_cast<std::uint32_t>(prow[j] * inv % p);
    for (std::size_t i = out.rank + 1; i < R; ++i) {
      std::uint32_t* target = row[i];
      const u64 f = target[c];
      if (f == 0) continue;
      const u64 neg = p - f;
      for (std::size_t j = c; j < C; ++j) {
        if (prow[j] != 0) target[j] = static_cast<std::uint32_t>((target[j] + neg * prow[j]) % p);
      }
    }
    out.pivot_rows.push_back(row_id[out.rank]);
    out.pivot_cols.push_back(c);
    ++out.rank;
  }
  return out;
}

// log2 of the Euclidean norm of every row and column, each sorted descending
// and turned into prefix sums: prefix[k] bounds log2 |det| of any k x k minor.
std::pair<std::vector<double>, std::vector<double>> hadamard_prefix(std::size_t R, std::size_t C,
                                                                    const std::vector<LocalEntry>& entries) {
  std::vector<double> row_sq(R, 0.0);
  std::vector<double> col_sq(C, 0.0);
  for (const auto& e : entries) {
    const double n = e.value->norm().convert_to<double>();
    row_sq[e.row] += n;
    col_sq[e.col] += n;
  }
  auto prefix = [](std::vector<double>& sq) {
    std::vector<double> logs;
    logs.reserve(sq.size());
    for (double s : sq) logs.push_back(s > 0.0 ? 0.5 * std::log2(s) : 0.0);
    std::sort(logs.begin(), logs.end(), std::greater<>());
    std::vector<double> out(logs.size() + 1, 0.0);
    for (std::size_t k = 0; k < logs.size(); ++k) out[k + 1] = out[k] + logs[k];
    return out;
  };
  return {prefix(row_sq), prefix(col_sq)};
}

struct BlockRank {
  ModRank best;
  std::size_t primes_used = 0;
};

BlockRank certified_block_rank(const Block& block, bool is_real) {
  const std::size_t R = block.rows.size();
  const std::size_t C = block.cols.size();
  std::vector<LocalEntry> local;
  local.reserve(block.entries.size());
  for (const Entry* e : block.entries) {
    const auto r = static_cast<std::size_t>(std::lower_bound(block.rows.begin(), block.rows.end(), e->row) - block.rows.begin());
    const auto c = static_cast<std::size_t>(std::lower_bound(block.cols.begin(), block.cols.end(), e->col) - block.cols.begin());
    local.push_back(LocalEntry{r, c, &e->value});
  }
  const auto [row_prefix, col_prefix] = hadamard_prefix(R, C, local);
  const double factor = is_real ? 1.0 : 2.0;
  const std::size_t full = std::min(R, C);

  BlockRank out;
  double bits = 0.0;
  for (const auto& mp : prime_table()) {
    ModRank mr = rank_mod(R, C, local, mp);
    ++out.primes_used;
    bits += mp.log2p;
    if (out.primes_used == 1 || mr.rank > out.best.rank) out.best = std::move(mr);
    if (out.best.rank == full) return out;
    const std::size_t k = out.best.rank + 1;
    const double needed = factor * std::min(row_prefix[k], col_prefix[k]) + 1.0;
    if (bits > needed) return out;
  }
  throw std::runtime_error("exact_rank: prime table exhausted");
}

}  // namespace

RankCertificate exact_rank_certificate(const LinearMap& m) {
  RankCertificate cert;
  const bool real = m.is_real();
  for (const auto& block : split_blocks(m)) {
    const auto br = certified_block_rank(block, real);
    cert.rank += br.best.rank;
    cert.primes_used = std::max(cert.primes_used, br.primes_used);
    for (std::size_t r : br.best.pivot_rows) cert.pivot_rows.push_back(block.rows[r]);
    for (std::size_t c : br.best.pivot_cols) cert.pivot_cols.push_back(block.cols[c]);
  }
  std::sort(cert.pivot_rows.begin(), cert.pivot_rows.end());
  std::sort(cert.pivot_cols.begin(), cert.pivot_cols.end());
  return cert;
}

std::size_t exact_rank(const LinearMap& m) { return exact_rank_certificate(m).rank; }

namespace {

// Fraction-free Gauss-Jordan on the independent rows of one block. Returns
// kernel vectors keyed by their free column, as (global column, value) lists.
using SparseVector = std::vector<std::pair<std::size_t, BigInt>>;

std::vector<std::pair<std::size_t, SparseVector>> block_kernel(const LinearMap& m, const Block& block) {
  const auto br = certified_block_rank(block, true);
  const std::size_t r = br.best.rank;
  const std::size_t C = block.cols.size();

  std::vector<std::vector<BigInt>> a(r, std::vector<BigInt>(C));
  std::vector<std::size_t> col_pos(m.cols(), 0);
  for (std::size_t c = 0; c < C; ++c) col_pos[block.cols[c]] = c;
  for (std::size_t k = 0; k < r; ++k) {
    for (const auto& e : m.row(block.rows[br.best.pivot_rows[k]])) a[k][col_pos[e.col]] = e.value.real();
  }
  std::vector<std::size_t> pivots = br.best.pivot_cols;  // local, ascending
  std::vector<bool> is_pivot(C, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  BigInt prev = 1;
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t pc = pivots[k];
    std::size_t piv = k;
    while (piv < r && a[piv][pc].is_zero()) ++piv;
    if (piv == r) throw std::logic_error("exact_kernel: certified pivot block is singular");
    std::swap(a[piv], a[k]);
    const BigInt pk = a[k][pc];
    for (std::size_t i = 0; i < r; ++i) {
      if (i == k) continue;
      const BigInt f = a[i][pc];
      for (std::size_t j = 0; j < C; ++j) {
        if (a[i][j].is_zero() && (f.is_zero() || a[k][j].is_zero())) continue;
        BigInt value = pk * a[i][j] - f * a[k][j];
        BigInt q;
        BigInt rem;
        boost::multiprecision::divide_qr(value, prev, q, rem);
        if (!rem.is_zero()) throw std::logic_error("exact_kernel: inexact fraction-free step");
        a[i][j] = std::move(q);
      }
    }
    prev = pk;
  }

  std::vector<std::pair<std::size_t, SparseVector>> out;
  for (std::size_t j = 0; j < C; ++j) {
    if (is_pivot[j]) continue;
    // Row k now reads a[k][pivots[k]] * x_pivot + a[k][j] * x_j = 0, with all
    // pivot entries equal to the final determinant.
    SparseVector vec;
    const BigInt det = r > 0 ? a[0][pivots[0]] : BigInt(1);
    for (std::size_t k = 0; k < r; ++k) {
      if (a[k][pivots[k]] != det) throw std::logic_error("exact_kernel: unequal fraction-free pivots");
      if (!a[k][j].is_zero()) vec.emplace_back(block.cols[pivots[k]], -a[k][j]);
    }
    vec.emplace_back(block.cols[j], det);
    BigInt g = 0;
    for (const auto& [c, v] : vec) g = boost::multiprecision::gcd(g, v);
    if (det < 0) g = -g;
    for (auto& [c, v] : vec) v /= g;
    std::sort(vec.begin(), vec.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    out.emplace_back(block.cols[j], std::move(vec));
  }
  return out;
}

}  // namespace

LinearMap exact_kernel(const LinearMap& m) {
  if (!m.is_real()) throw std::invalid_argument("exact_kernel: map has non-real entries");
  // Keyed by the free column, for a deterministic row order.
  std::vector<std::pair<std::size_t, SparseVector>> vectors;
  std::vector<bool> covered(m.cols(), false);
  for (const auto& block : split_blocks(m)) {
    for (std::size_t c : block.cols) covered[c] = true;
    for (auto& keyed : block_kernel(m, block)) vectors.push_back(std::move(keyed));
  }
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!covered[c]) vectors.emplace_back(c, SparseVector{{c, BigInt(1)}});
  }
  std::stable_sort(vectors.begin(), vectors.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

  std::vector<Entry> entries;
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    for (auto& [c, v] : vectors[k].second) entries.push_back(Entry{k, c, GaussInt(std::move(v), BigInt(0))});
  }
  LinearMap kernel = LinearMap::from_entries(m.domain(), SpaceTag{m.domain().kind, vectors.size()}, std::move(entries));
  if (!compose(m, adjoint(kernel)).is_zero()) throw std::logic_error("exact_kernel: basis vector not annihilated");
  return kernel;
}

LinearMap stack_rows(const LinearMap& top, const LinearMap& bottom) {
  if (top.domain() != bottom.domain()) throw SpaceMismatch("stack_rows: domains differ");
  std::vector<Entry> entries(top.entries().begin(), top.entries().end());
  for (const auto& e : bottom.entries()) entries.push_back(Entry{e.row + top.rows(), e.col, e.value});
  return LinearMap::from_entries(top.domain(), SpaceTag{top.codomain().kind, top.rows() + bottom.rows()},
                                 std::move(entries));
}

}  // namespace susygraph
