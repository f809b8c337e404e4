#include "susygraph/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <sstream>

namespace susygraph {

std::string_view to_string(Mode mode) {
  return mode == Mode::oriented ? "oriented" : "symmetric";
}

std::string_view to_string(GraphErrorKind kind) {
  switch (kind) {
    case GraphErrorKind::malformed_line: return "MalformedLine";
    case GraphErrorKind::self_loop: return "SelfLoop";
    case GraphErrorKind::duplicate_edge: return "DuplicateEdge";
    case GraphErrorKind::index_out_of_range: return "IndexOutOfRange";
    case GraphErrorKind::symmetric_mode_violation: return "SymmetricModeViolation";
  }
  return "Unknown";
}

namespace {

std::string edge_label(std::size_t k, const Edge& e) {
  std::ostringstream os;
  os << "edge #" << k << " (" << e.tail << ", " << e.head << ")";
  return os.str();
}

}  // namespace

DirectedGraph::DirectedGraph(std::size_t n, std::vector<Edge> edges, Mode mode)
    : n_(n), edges_(std::move(edges)), mode_(mode), in_degree_(n, 0), out_degree_(n, 0), neighbours_(n) {
  if (n_ == 0) {
    throw GraphError(GraphErrorKind::malformed_line, "vertex count must be positive");
  }
  lookup_.reserve(edges_.size());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if (e.tail >= n_ || e.head >= n_) {
      throw GraphError(GraphErrorKind::index_out_of_range, edge_label(k, e) + " has a vertex index outside [0, n)");
    }
    if (e.tail == e.head) {
      throw GraphError(GraphErrorKind::self_loop, edge_label(k, e) + " is a self-loop");
    }
    lookup_.emplace_back(e, k);
  }
  std::sort(lookup_.begin(), lookup_.end());
  for (std::size_t k = 1; k < lookup_.size(); ++k) {
    if (lookup_[k].first == lookup_[k - 1].first) {
      throw GraphError(GraphErrorKind::duplicate_edge,
                       edge_label(lookup_[k].second, lookup_[k].first) + " duplicates edge #" +
                           std::to_string(lookup_[k - 1].second));
    }
  }
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    ++out_degree_[e.tail];
    ++in_degree_[e.head];
    neighbours_[e.tail].push_back(e.head);
    neighbours_[e.head].push_back(e.tail);
    if (mode_ == Mode::symmetric && !has_edge(e.head, e.tail)) {
      throw GraphError(GraphErrorKind::symmetric_mode_violation,
                       edge_label(k, e) + " has no reversal in symmetric mode");
    }
  }
  for (auto& nb : neighbours_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
}

std::optional<std::size_t> DirectedGraph::find_edge(std::size_t tail, std::size_t head) const {
  const Edge key{tail, head};
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), key,
                             [](const auto& entry, const Edge& e) { return entry.first < e; });
  if (it != lookup_.end() && it->first == key) return it->second;
  return std::nullopt;
}

std::optional<std::size_t> DirectedGraph::reverse_of(std::size_t k) const {
  const Edge& e = edges_.at(k);
  return find_edge(e.head, e.tail);
}

int DirectedGraph::multiplicity(std::size_t a, std::size_t b) const {
  return static_cast<int>(has_edge(a, b)) + static_cast<int>(has_edge(b, a));
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\v\f";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(GraphErrorKind kind, std::size_t line, const std::string& msg) {
  throw GraphError(kind, "line " + std::to_string(line) + ": " + msg);
}

// Parses a whole token as a signed integer.
std::optional<long long> parse_integer(std::string_view token) {
  long long value = 0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  if (begin != end && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || begin == end) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

DirectedGraph parse_edge_list(std::istream& in) {
  std::optional<std::size_t> n;
  Mode mode = Mode::oriented;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  std::map<Edge, std::size_t> seen;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!n) {
      if (!line.starts_with("n=")) fail(GraphErrorKind::malformed_line, line_no, "expected 'n=<count>'");
      const auto value = parse_integer(trim(line.substr(2)));
      if (!value) fail(GraphErrorKind::malformed_line, line_no, "vertex count is not an integer");
      if (*value <= 0) fail(GraphErrorKind::malformed_line, line_no, "vertex count must be positive");
      n = static_cast<std::size_t>(*value);
      continue;
    }
    if (line.starts_with("mode=")) {
      if (!edges.empty()) fail(GraphErrorKind::malformed_line, line_no, "mode line must precede the edges");
      const auto value = trim(line.substr(5));
      if (value == "oriented") {
        mode = Mode::oriented;
      } else if (value == "symmetric") {
        mode = Mode::symmetric;
      } else {
        fail(GraphErrorKind::malformed_line, line_no, "unknown mode '" + std::string(value) + "'");
      }
      continue;
    }

    const auto tokens = split_ws(line);
    if (tokens.size() != 2) fail(GraphErrorKind::malformed_line, line_no, "expected '<tail> <head>'");
    const auto tail = parse_integer(tokens[0]);
    const auto head = parse_integer(tokens[1]);
    if (!tail || !head) fail(GraphErrorKind::malformed_line, line_no, "non-integer vertex index");
    const auto count = static_cast<long long>(*n);
    if (*tail < 0 || *head < 0 || *tail >= count || *head >= count) {
      fail(GraphErrorKind::index_out_of_range, line_no, "vertex index outside [0, " + std::to_string(*n) + ")");
    }
    const Edge e{static_cast<std::size_t>(*tail), static_cast<std::size_t>(*head)};
    if (e.tail == e.head) fail(GraphErrorKind::self_loop, line_no, "self-loop at vertex " + std::to_string(e.tail));
    if (auto it = seen.find(e); it != seen.end()) {
      fail(GraphErrorKind::duplicate_edge, line_no, "duplicates the edge on line " + std::to_string(it->second));
    }
    seen.emplace(e, line_no);
    edges.push_back(e);
    edge_lines.push_back(line_no);
  }
  if (!n) throw GraphError(GraphErrorKind::malformed_line, "missing 'n=<count>' line");

  if (mode == Mode::symmetric) {
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (!seen.contains(Edge{edges[k].head, edges[k].tail})) {
        fail(GraphErrorKind::symmetric_mode_violation, edge_lines[k], "edge has no reversal in symmetric mode");
      }
    }
  }
  return DirectedGraph(*n, std::move(edges), mode);
}

DirectedGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string format_edge_list(const DirectedGraph& g) {
  std::ostringstream os;
  os << "n=" << g.vertex_count() << "\n";
  os << "mode=" << to_string(g.mode()) << "\n";
  for (const auto& e : g.edges()) os << e.tail << " " << e.head << "\n";
  return os.str();
}

DirectedGraph symmetrize(const DirectedGraph& g) {
  std::vector<Edge> edges;
  edges.reserve(2 * g.edge_count());
  for (const auto& e : g.edges()) {
    edges.push_back(e);
    if (!g.has_edge(e.head, e.tail)) edges.push_back(Edge{e.head, e.tail});
  }
  return DirectedGraph(g.vertex_count(), std::move(edges), Mode::symmetric);
}

DirectedGraph reorient(const DirectedGraph& g, const std::set<std::size_t>& flips) {
  std::vector<Edge> edges = g.edges();
  for (std::size_t k : flips) {
    if (k >= edges.size()) {
      throw GraphError(GraphErrorKind::index_out_of_range, "flip index " + std::to_string(k) + " is not an edge");
    }
    std::swap(edges[k].tail, edges[k].head);
  }
  return DirectedGraph(g.vertex_count(), std::move(edges), g.mode());
}

DirectedGraph relabel(const DirectedGraph& g, const std::vector<std::size_t>& perm) {
  const std::size_t n = g.vertex_count();
  if (perm.size() != n) throw std::invalid_argument("relabel: permutation has the wrong length");
  std::vector<bool> hit(n, false);
  for (std::size_t v : perm) {
    if (v >= n || hit[v]) throw std::invalid_argument("relabel: not a permutation");
    hit[v] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.push_back(Edge{perm[e.tail], perm[e.head]});
  return DirectedGraph(n, std::move(edges), g.mode());
}

Components connected_components(const DirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  Components out;
  out.label.assign(n, unset);
  for (std::size_t start = 0; start < n; ++start) {
    if (out.label[start] != unset) continue;
    const std::size_t id = out.members.size();
    std::vector<std::size_t> members{start};
    out.label[start] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (std::size_t nb : g.neighbours(members[head])) {
        if (out.label[nb] == unset) {
          out.label[nb] = id;
          members.push_back(nb);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.members.push_back(std::move(members));
  }
  return out;
}

std::vector<UndirectedEdge> undirected_edges(const DirectedGraph& g) {
  std::vector<UndirectedEdge> out;
  out.reserve(g.edge_count());
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const auto rev = g.reverse_of(k);
    if (rev && *rev < k) continue;
    out.push_back(UndirectedEdge{k, rev});
  }
  return out;
}

SpanningTree spanning_tree(const DirectedGraph& g, std::size_t root) {
  const std::size_t n = g.vertex_count();
  if (root >= n) throw std::out_of_range("spanning_tree: root out of range");

  const auto undirected = undirected_edges(g);
  // adjacency[v] = (neighbour, representative edge), in representative order.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency(n);
  for (const auto& u : undirected) {
    const Edge& e = g.edge(u.edge);
    adjacency[e.tail].emplace_back(e.head, u.edge);
    adjacency[e.head].emplace_back(e.tail, u.edge);
  }

  SpanningTree tree;
  tree.root = root;
  tree.vertex_count = n;
  tree.edge_count = g.edge_count();
  tree.parent_edge.assign(n, std::nullopt);
  tree.parent.assign(n, root);
  tree.depth.assign(n, 0);

  std::vector<bool> visited(n, false);
  std::deque<std::size_t> queue{root};
  visited[root] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    tree.vertices.push_back(v);
    for (const auto& [nb, rep] : adjacency[v]) {
      if (visited[nb]) continue;
      visited[nb] = true;
      tree.parent_edge[nb] = rep;
      tree.parent[nb] = v;
      tree.depth[nb] = tree.depth[v] + 1;
      tree.tree_edges.push_back(rep);
      queue.push_back(nb);
    }
  }
  std::sort(tree.vertices.begin(), tree.vertices.end());
  std::sort(tree.tree_edges.begin(), tree.tree_edges.end());

  for (const auto& u : undirected) {
    if (!visited[g.edge(u.edge).tail]) continue;
    if (u.partner) tree.reciprocal_pairs.emplace_back(u.edge, *u.partner);
    if (!std::binary_search(tree.tree_edges.begin(), tree.tree_edges.end(), u.edge)) {
      tree.non_tree_edges.push_back(u.edge);
    }
  }
  return tree;
}

std::vector<SpanningTree> spanning_forest(const DirectedGraph& g) {
  std::vector<SpanningTree> forest;
  for (const auto& members : connected_components(g).members) forest.push_back(spanning_tree(g, members.front()));
  return forest;
}

BfsLayers bfs_spheres(const DirectedGraph& g, std::size_t root) {
  const std::size_t n = g.vertex_count();
  if (root >= n) throw std::out_of_range("bfs_spheres: root out of range");
  BfsLayers out;
  out.root = root;
  out.dist.assign(n, BfsLayers::unreachable);
  out.dist[root] = 0;
  std::vector<std::size_t> frontier{root};
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end());
    std::vector<std::size_t> next;
    const std::size_t level = out.layers.size() + 1;
    for (std::size_t v : frontier) {
      for (std::size_t nb : g.neighbours(v)) {
        if (out.dist[nb] != BfsLayers::unreachable) continue;
        out.dist[nb] = level;
        next.push_back(nb);
      }
    }
    out.layers.push_back(std::move(frontier));
    frontier = std::move(next);
  }
  return out;
}

}  // namespace susygraph
