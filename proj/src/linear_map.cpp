#include "susygraph/linear_map.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace susygraph {

std::string_view to_string(Space space) {
  switch (space) {
    case Space::vertex: return "H0";
    case Space::edge: return "H1";
    case Space::super: return "H";
  }
  return "?";
}

std::string to_string(const SpaceTag& tag) {
  return std::string(to_string(tag.kind)) + "[" + std::to_string(tag.dim) + "]";
}

namespace {

bool coord_less(const Entry& a, const Entry& b) {
  return a.row != b.row ? a.row < b.row : a.col < b.col;
}

[[noreturn]] void mismatch(std::string_view op, const SpaceTag& a, const SpaceTag& b) {
  throw SpaceMismatch(std::string(op) + ": " + to_string(a) + " vs " + to_string(b));
}

}  // namespace

LinearMap::LinearMap(SpaceTag domain, SpaceTag codomain) : domain_(domain), codomain_(codomain) { index_rows(); }

LinearMap::LinearMap(SpaceTag domain, SpaceTag codomain, std::vector<Entry> sorted_entries)
    : domain_(domain), codomain_(codomain), entries_(std::move(sorted_entries)) {
  index_rows();
}

void LinearMap::index_rows() {
  row_start_.assign(codomain_.dim + 1, 0);
  for (const auto& e : entries_) ++row_start_[e.row + 1];
  for (std::size_t r = 0; r < codomain_.dim; ++r) row_start_[r + 1] += row_start_[r];
}

LinearMap LinearMap::from_entries(SpaceTag domain, SpaceTag codomain, std::vector<Entry> entries) {
  for (const auto& e : entries) {
    if (e.row >= codomain.dim || e.col >= domain.dim) {
      throw std::out_of_range("LinearMap: entry (" + std::to_string(e.row) + ", " + std::to_string(e.col) +
                              ") outside " + to_string(codomain) + " x " + to_string(domain));
    }
  }
  if (!std::is_sorted(entries.begin(), entries.end(), coord_less)) {
    std::stable_sort(entries.begin(), entries.end(), coord_less);
  }
  std::vector<Entry> merged;
  merged.reserve(entries.size());
  for (auto& e : entries) {
    if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col) {
      merged.back().value += e.value;
    } else {
      if (!merged.empty() && merged.back().value.is_zero()) merged.pop_back();
      merged.push_back(std::move(e));
    }
  }
  if (!merged.empty() && merged.back().value.is_zero()) merged.pop_back();
  return LinearMap(domain, codomain, std::move(merged));
}

LinearMap LinearMap::identity(SpaceTag space) {
  std::vector<Entry> entries;
  entries.reserve(space.dim);
  for (std::size_t k = 0; k < space.dim; ++k) entries.push_back(Entry{k, k, GaussInt(1)});
  return LinearMap(space, space, std::move(entries));
}

std::span<const Entry> LinearMap::row(std::size_t r) const {
  if (r >= rows()) throw std::out_of_range("LinearMap::row");
  return std::span<const Entry>(entries_).subspan(row_start_[r], row_start_[r + 1] - row_start_[r]);
}

GaussInt LinearMap::at(std::size_t r, std::size_t c) const {
  if (c >= cols()) throw std::out_of_range("LinearMap::at");
  const auto rw = row(r);
  auto it = std::lower_bound(rw.begin(), rw.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != rw.end() && it->col == c) return it->value;
  return GaussInt{};
}

bool LinearMap::is_real() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.value.is_real(); });
}

BigInt LinearMap::max_norm() const {
  BigInt best = 0;
  for (const auto& e : entries_) best = std::max(best, e.value.norm());
  return best;
}

LinearMap LinearMap::submatrix(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const {
  constexpr auto absent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> col_pos(cols(), absent);
  for (std::size_t k = 0; k < col_ids.size(); ++k) col_pos.at(col_ids[k]) = k;
  std::vector<Entry> out;
  for (std::size_t k = 0; k < row_ids.size(); ++k) {
    for (const auto& e : row(row_ids[k])) {
      if (col_pos[e.col] != absent) out.push_back(Entry{k, col_pos[e.col], e.value});
    }
  }
  return from_entries(SpaceTag{domain_.kind, col_ids.size()}, SpaceTag{codomain_.kind, row_ids.size()},
                      std::move(out));
}

namespace {

LinearMap linear_combination(const LinearMap& a, const LinearMap& b, bool subtract_b, std::string_view op) {
  if (a.domain() != b.domain()) mismatch(op, a.domain(), b.domain());
  if (a.codomain() != b.codomain()) mismatch(op, a.codomain(), b.codomain());
  std::vector<Entry> rhs;
  rhs.reserve(b.nonzeros());
  for (const auto& e : b.entries()) rhs.push_back(Entry{e.row, e.col, subtract_b ? -e.value : e.value});
  // Both inputs are sorted, so a merge keeps from_entries from sorting again.
  std::vector<Entry> entries;
  entries.reserve(a.nonzeros() + rhs.size());
  std::merge(a.entries().begin(), a.entries().end(), std::make_move_iterator(rhs.begin()),
             std::make_move_iterator(rhs.end()), std::back_inserter(entries), coord_less);
  return LinearMap::from_entries(a.domain(), a.codomain(), std::move(entries));
}

}  // namespace

LinearMap add(const LinearMap& a, const LinearMap& b) { return linear_combination(a, b, false, "add"); }

LinearMap subtract(const LinearMap& a, const LinearMap& b) { return linear_combination(a, b, true, "subtract"); }

LinearMap scale(const GaussInt& c, const LinearMap& m) {
  std::vector<Entry> entries;
  if (!c.is_zero()) {
    entries.reserve(m.nonzeros());
    for (const auto& e : m.entries()) entries.push_back(Entry{e.row, e.col, c * e.value});
  }
  return LinearMap::from_entries(m.domain(), m.codomain(), std::move(entries));
}

LinearMap compose(const LinearMap& a, const LinearMap& b) {
  if (a.domain() != b.codomain()) mismatch("compose", a.domain(), b.codomain());
  std::vector<Entry> out;
  std::vector<GaussInt> acc(b.cols());
  std::vector<bool> used(b.cols(), false);
  std::vector<std::size_t> touched;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    touched.clear();
    for (const auto& ea : a.row(r)) {
      for (const auto& eb : b.row(ea.col)) {
        if (!used[eb.col]) {
          used[eb.col] = true;
          touched.push_back(eb.col);
          acc[eb.col] = ea.value * eb.value;
        } else {
          acc[eb.col] += ea.value * eb.value;
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    for (std::size_t c : touched) {
      if (!acc[c].is_zero()) out.push_back(Entry{r, c, std::move(acc[c])});
      acc[c] = GaussInt{};
      used[c] = false;
    }
  }
  return LinearMap::from_entries(b.domain(), a.codomain(), std::move(out));
}

LinearMap adjoint(const LinearMap& m) {
  std::vector<Entry> entries;
  entries.reserve(m.nonzeros());
  for (const auto& e : m.entries()) entries.push_back(Entry{e.col, e.row, e.value.conj()});
  return LinearMap::from_entries(m.codomain(), m.domain(), std::move(entries));
}

LinearMap commutator(const LinearMap& a, const LinearMap& b) { return subtract(compose(a, b), compose(b, a)); }

LinearMap anticommutator(const LinearMap& a, const LinearMap& b) { return add(compose(a, b), compose(b, a)); }

LinearMap halve(const LinearMap& m) {
  std::vector<Entry> entries;
  entries.reserve(m.nonzeros());
  for (const auto& e : m.entries()) entries.push_back(Entry{e.row, e.col, e.value.halved()});
  return LinearMap::from_entries(m.domain(), m.codomain(), std::move(entries));
}

LinearMap assemble_blocks(const LinearMap& vv, const LinearMap& ve, const LinearMap& ev, const LinearMap& ee) {
  const SpaceTag h0 = vv.domain();
  const SpaceTag h1 = ee.domain();
  if (h0.kind != Space::vertex) mismatch("assemble_blocks", h0, SpaceTag{Space::vertex, h0.dim});
  if (h1.kind != Space::edge) mismatch("assemble_blocks", h1, SpaceTag{Space::edge, h1.dim});
  if (vv.codomain() != h0) mismatch("assemble_blocks", vv.codomain(), h0);
  if (ee.codomain() != h1) mismatch("assemble_blocks", ee.codomain(), h1);
  if (ve.domain() != h1 || ve.codomain() != h0) mismatch("assemble_blocks", ve.domain(), h1);
  if (ev.domain() != h0 || ev.codomain() != h1) mismatch("assemble_blocks", ev.domain(), h0);

  const SpaceTag h{Space::super, h0.dim + h1.dim};
  std::vector<Entry> entries;
  entries.reserve(vv.nonzeros() + ve.nonzeros() + ev.nonzeros() + ee.nonzeros());
  const std::size_t off = h0.dim;
  for (const auto& e : vv.entries()) entries.push_back(Entry{e.row, e.col, e.value});
  for (const auto& e : ve.entries()) entries.push_back(Entry{e.row, e.col + off, e.value});
  for (const auto& e : ev.entries()) entries.push_back(Entry{e.row + off, e.col, e.value});
  for (const auto& e : ee.entries()) entries.push_back(Entry{e.row + off, e.col + off, e.value});
  return LinearMap::from_entries(h, h, std::move(entries));
}

std::string to_triplet_text(const LinearMap& m) {
  std::ostringstream os;
  for (const auto& e : m.entries()) {
    os << "(" << e.row << ", " << e.col << ", " << e.value.real() << ", " << e.value.imag() << ")\n";
  }
  return os.str();
}

StateVector::StateVector(SpaceTag tag, std::vector<std::complex<double>> coeffs)
    : space(tag), coefficients(std::move(coeffs)) {
  if (coefficients.size() != space.dim) {
    throw SpaceMismatch("StateVector: " + std::to_string(coefficients.size()) + " coefficients for " +
                        to_string(space));
  }
}

StateVector apply(const LinearMap& m, const StateVector& v) {
  if (v.space != m.domain()) mismatch("apply", m.domain(), v.space);
  StateVector out = StateVector::zero(m.codomain());
  for (const auto& e : m.entries()) out[e.row] += e.value.to_complex() * v[e.col];
  return out;
}

}  // namespace susygraph
