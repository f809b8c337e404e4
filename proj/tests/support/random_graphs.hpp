#pragma once

#include "susygraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace testgen {

using susygraph::DirectedGraph;
using susygraph::Edge;
using susygraph::Mode;
using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

inline std::vector<Edge> shuffled(Rng& rng, std::vector<Edge> edges) {
  std::shuffle(edges.begin(), edges.end(), rng);
  return edges;
}

/// Every ordered pair (i, j), i != j, independently with probability p.
/// Reciprocal pairs can occur.
inline DirectedGraph directed_er(Rng& rng, std::size_t n, double p) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && coin(rng, p)) edges.push_back({i, j});
    }
  }
  return DirectedGraph(n, shuffled(rng, std::move(edges)));
}

/// Every unordered pair with probability p, in a random direction.
inline DirectedGraph oriented_er(Rng& rng, std::size_t n, double p) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng, p)) edges.push_back(coin(rng, 0.5) ? Edge{i, j} : Edge{j, i});
    }
  }
  return DirectedGraph(n, shuffled(rng, std::move(edges)));
}

inline DirectedGraph symmetric_er(Rng& rng, std::size_t n, double p) {
  return susygraph::symmetrize(oriented_er(rng, n, p));
}

/// Uniform random recursive tree on a shuffled vertex order, random directions.
inline DirectedGraph random_tree(Rng& rng, std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> edges;
  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t a = order[k];
    const std::size_t b = order[uniform(rng, 0, k - 1)];
    edges.push_back(coin(rng, 0.5) ? Edge{a, b} : Edge{b, a});
  }
  return DirectedGraph(n, shuffled(rng, std::move(edges)));
}

/// A random tree plus extra edges on unordered pairs with probability p. With
/// `reciprocal` > 0 some edges also get their reversal.
inline DirectedGraph random_connected(Rng& rng, std::size_t n, double p, double reciprocal = 0.0) {
  const DirectedGraph tree = random_tree(rng, n);
  std::vector<Edge> edges = tree.edges();
  std::set<std::pair<std::size_t, std::size_t>> used;
  for (const auto& e : edges) used.insert(std::minmax(e.tail, e.head));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!used.count({i, j}) && coin(rng, p)) edges.push_back(coin(rng, 0.5) ? Edge{i, j} : Edge{j, i});
    }
  }
  const std::size_t base = edges.size();
  for (std::size_t k = 0; k < base; ++k) {
    if (coin(rng, reciprocal)) edges.push_back({edges[k].head, edges[k].tail});
  }
  return DirectedGraph(n, shuffled(rng, std::move(edges)));
}

/// Random subset of the edges that can be reversed without a collision.
inline std::set<std::size_t> random_flips(Rng& rng, const DirectedGraph& g) {
  std::set<std::size_t> flips;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (!g.reverse_of(k) && coin(rng, 0.5)) flips.insert(k);
  }
  return flips;
}

}  // namespace testgen
