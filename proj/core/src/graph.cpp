#include "pvc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace pvc {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<Label> labels(n);
  std::iota(labels.begin(), labels.end(), Label{1});
  return from_edges(std::move(labels), edges);
}

Graph Graph::from_edges(std::vector<Label> labels, std::span<const Edge> edges) {
  const std::size_t n = labels.size();
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  Graph g;
  g.labels_ = std::move(labels);
  g.offsets_.assign(n + 1, 0);
  for (auto [u, v] : canon) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.targets_.resize(2 * canon.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // canon is sorted by (u, v) with u < v, so each list receives its smaller
  // neighbors first, then its larger ones, both ascending.
  for (auto [u, v] : canon) {
    g.targets_[fill[u]++] = v;
    g.targets_[fill[v]++] = u;
  }
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (!contains(u) || !contains(v)) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (VertexId u = 0; u < num_vertices(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<bool> vertex_mask(const Graph& g, std::span<const VertexId> s) {
  std::vector<bool> mask(g.num_vertices(), false);
  for (VertexId v : s) {
    if (!g.contains(v)) throw std::invalid_argument("unknown vertex id " + std::to_string(v));
    mask[v] = true;
  }
  return mask;
}

InducedSubgraph delete_vertices(const Graph& g, std::span<const VertexId> s) {
  const auto removed = vertex_mask(g, s);
  InducedSubgraph out;
  out.old_to_new.assign(g.num_vertices(), kNoVertex);
  std::vector<Label> labels;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (removed[v]) continue;
    out.old_to_new[v] = static_cast<VertexId>(labels.size());
    labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (!removed[u] && !removed[v]) edges.emplace_back(out.old_to_new[u], out.old_to_new[v]);
  }
  out.graph = Graph::from_edges(std::move(labels), edges);
  return out;
}

std::size_t edges_after_delete(const Graph& g, std::span<const VertexId> s) {
  const auto removed = vertex_mask(g, s);
  std::size_t count = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (removed[u]) continue;
    for (VertexId v : g.neighbors(u)) {
      if (u < v && !removed[v]) ++count;
    }
  }
  return count;
}

std::uint32_t BipartiteView::a_position(VertexId v) const {
  auto it = std::lower_bound(a_.begin(), a_.end(), v);
  return (it != a_.end() && *it == v) ? static_cast<std::uint32_t>(it - a_.begin()) : kNoVertex;
}

std::uint32_t BipartiteView::b_position(VertexId v) const {
  auto it = std::lower_bound(b_.begin(), b_.end(), v);
  return (it != b_.end() && *it == v) ? static_cast<std::uint32_t>(it - b_.begin()) : kNoVertex;
}

BipartiteView BipartiteView::restrict_to(const std::vector<bool>& keep_a,
                                         const std::vector<bool>& keep_b) const {
  if (keep_a.size() != a_.size() || keep_b.size() != b_.size()) {
    throw std::invalid_argument("restrict_to: mask size mismatch");
  }
  std::vector<std::uint32_t> new_a(a_.size(), kNoVertex), new_b(b_.size(), kNoVertex);
  BipartiteView out;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (keep_a[i]) {
      new_a[i] = static_cast<std::uint32_t>(out.a_.size());
      out.a_.push_back(a_[i]);
    }
  }
  for (std::size_t j = 0; j < b_.size(); ++j) {
    if (keep_b[j]) {
      new_b[j] = static_cast<std::uint32_t>(out.b_.size());
      out.b_.push_back(b_[j]);
    }
  }
  out.a_adj_.resize(out.a_.size());
  out.b_adj_.resize(out.b_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!keep_a[i]) continue;
    for (auto j : a_adj_[i]) {
      if (!keep_b[j]) continue;
      out.a_adj_[new_a[i]].push_back(new_b[j]);
      out.b_adj_[new_b[j]].push_back(new_a[i]);
      ++out.num_edges_;
    }
  }
  return out;
}

BipartiteView bipartite_view(const Graph& g, std::span<const VertexId> a,
                             std::span<const VertexId> b) {
  const auto in_a = vertex_mask(g, a);
  const auto in_b = vertex_mask(g, b);
  BipartiteView h;
  std::vector<std::uint32_t> pos(g.num_vertices(), kNoVertex);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (in_a[v] && in_b[v]) {
      throw std::invalid_argument("bipartite_view: vertex " + std::to_string(v) +
                                  " is in both sides");
    }
    if (in_a[v]) {
      pos[v] = static_cast<std::uint32_t>(h.a_.size());
      h.a_.push_back(v);
    } else if (in_b[v]) {
      pos[v] = static_cast<std::uint32_t>(h.b_.size());
      h.b_.push_back(v);
    }
  }
  h.a_adj_.resize(h.a_.size());
  h.b_adj_.resize(h.b_.size());
  for (std::size_t i = 0; i < h.a_.size(); ++i) {
    for (VertexId w : g.neighbors(h.a_[i])) {
      if (!in_b[w]) continue;
      h.a_adj_[i].push_back(pos[w]);
      h.b_adj_[pos[w]].push_back(static_cast<std::uint32_t>(i));
      ++h.num_edges_;
    }
  }
  return h;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  bool have_header = false;
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate 'p' header");
      if (tok.size() != 4 || tok[1] != "edge") {
        throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
      }
      const auto nn = parse_uint(tok[2], line_no, "vertex count");
      parse_uint(tok[3], line_no, "edge count");
      if (nn >= kNoVertex) throw ParseError(line_no, "vertex count too large");
      n = static_cast<std::size_t>(nn);
      have_header = true;
    } else if (tok[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge line before 'p edge' header");
      if (tok.size() != 3) throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
      const auto u = parse_uint(tok[1], line_no, "vertex id");
      const auto v = parse_uint(tok[2], line_no, "vertex id");
      if (u < 1 || u > n || v < 1 || v > n) {
        throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(n));
      }
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      edges.emplace_back(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing 'p edge <n> <m>' header");
  return Graph::from_edges(n, edges);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
  return out.str();
}

}  // namespace pvc
