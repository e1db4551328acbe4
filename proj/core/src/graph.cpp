#include "broadcast/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>

namespace broadcast {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) {
    throw GraphError("self-loop at vertex " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int vertex_count) : Graph(vertex_count, std::vector<Edge>{}) {}

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(vertex_count) + " outside [0, 64]");
  }
  for (Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
      throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") out of range for " + std::to_string(n_) + " vertices");
    }
    e = make_edge(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adj_.assign(static_cast<std::size_t>(n_), 0);
  for (const Edge& e : edges_) {
    adj_[static_cast<std::size_t>(e.u)] |= bit(e.v);
    adj_[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
}

Graph::Graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> pairs)
    : Graph(vertex_count, [&] {
        std::vector<Edge> es;
        es.reserve(pairs.size());
        for (auto [a, b] : pairs) es.push_back(Edge{a, b});
        return es;
      }()) {}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  return mask_has(adj_[static_cast<std::size_t>(a)], b);
}

std::vector<Vertex> Graph::neighbor_list(Vertex v) const { return mask_to_vertices(neighbors(v)); }

int Graph::degree(Vertex v) const { return std::popcount(neighbors(v)); }

int Graph::edge_index(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

VertexMask Graph::all_vertices() const {
  return n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
}

bool Graph::contains_edges_of(const Graph& sub) const {
  if (sub.vertex_count() != n_) return false;
  return std::includes(edges_.begin(), edges_.end(), sub.edges_.begin(), sub.edges_.end());
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_) {
    throw GraphError("label count does not match vertex count");
  }
  Graph copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

std::string Graph::label(Vertex v) const {
  if (labels_.empty()) return std::to_string(v);
  return labels_[static_cast<std::size_t>(v)];
}

std::vector<Vertex> mask_to_vertices(VertexMask m) {
  std::vector<Vertex> out;
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

namespace {

bool parse_int(std::string_view token, int& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size() && out >= 0;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int max_index = -1;
  int declared = -1;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      // "# vertices N" keeps isolated trailing vertices across a round trip.
      auto tokens = split_ws(line.substr(hash + 1));
      int n = 0;
      if (tokens.size() == 2 && tokens[0] == "vertices" && parse_int(tokens[1], n)) declared = n;
      line = line.substr(0, hash);
    }
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    int a = 0;
    int b = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], a) || !parse_int(tokens[1], b)) {
      throw GraphError("malformed edge on line " + std::to_string(line_no) + ": '" +
                       std::string(line) + "'");
    }
    if (a == b) {
      throw GraphError("self-loop on line " + std::to_string(line_no));
    }
    if (std::max(a, b) >= Graph::kMaxVertices) {
      throw GraphError("vertex index too large on line " + std::to_string(line_no));
    }
    edges.push_back(make_edge(a, b));
    max_index = std::max({max_index, a, b});
  }
  int n = std::max(max_index + 1, declared);
  return Graph(std::max(n, 0), std::move(edges));
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# vertices " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open edge list '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

}  // namespace broadcast
