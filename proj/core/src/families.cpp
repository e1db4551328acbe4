#include "broadcast/families.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace broadcast {

namespace {

int parse_positive(std::string_view token, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 1) {
    throw GraphError("invalid size '" + std::string(token) + "' in '" + std::string(context) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(sep, start);
    parts.push_back(text.substr(start, end == std::string_view::npos ? end : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

void require_size(int n, int min, const char* name) {
  if (n < min) {
    throw GraphError(std::string(name) + " needs size >= " + std::to_string(min));
  }
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw GraphError("graph spec '" + std::string(text) + "' must look like family:params");
  }
  std::string_view name = text.substr(0, colon);
  std::string_view params = text.substr(colon + 1);
  if (name == "file") {
    if (params.empty()) throw GraphError("file: spec needs a path");
    return family::File{std::string(params)};
  }
  if (name == "path") return family::Path{parse_positive(params, text)};
  if (name == "cycle") return family::Cycle{parse_positive(params, text)};
  if (name == "clique" || name == "complete") return family::Clique{parse_positive(params, text)};
  if (name == "bintree" || name == "binary-tree") {
    int depth = 0;
    auto [ptr, ec] = std::from_chars(params.data(), params.data() + params.size(), depth);
    if (ec != std::errc{} || ptr != params.data() + params.size() || depth < 0) {
      throw GraphError("invalid depth in '" + std::string(text) + "'");
    }
    return family::BinaryTree{depth};
  }
  if (name == "grid") {
    auto dims = split(params, 'x');
    if (dims.size() != 2) throw GraphError("grid spec must be grid:RxC");
    return family::Grid{parse_positive(dims[0], text), parse_positive(dims[1], text)};
  }
  if (name == "theta") {
    family::Theta theta;
    for (auto part : split(params, ',')) theta.lengths.push_back(parse_positive(part, text));
    return theta;
  }
  throw GraphError("unknown graph family '" + std::string(name) + "'");
}

std::string to_string(const FamilySpec& spec) {
  struct Visitor {
    std::string operator()(const family::Path& p) const { return "path:" + std::to_string(p.n); }
    std::string operator()(const family::Cycle& c) const { return "cycle:" + std::to_string(c.n); }
    std::string operator()(const family::Clique& c) const { return "clique:" + std::to_string(c.n); }
    std::string operator()(const family::Grid& g) const {
      return "grid:" + std::to_string(g.rows) + "x" + std::to_string(g.cols);
    }
    std::string operator()(const family::Theta& t) const {
      std::string out = "theta:";
      for (std::size_t i = 0; i < t.lengths.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(t.lengths[i]);
      }
      return out;
    }
    std::string operator()(const family::BinaryTree& b) const {
      return "bintree:" + std::to_string(b.depth);
    }
    std::string operator()(const family::File& f) const { return "file:" + f.path; }
  };
  return std::visit(Visitor{}, spec);
}

Graph path_graph(int n) {
  require_size(n, 1, "path");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back(Edge{i, i + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  require_size(n, 3, "cycle");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  require_size(n, 1, "clique");
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges.push_back(Edge{a, b});
  }
  return Graph(n, std::move(edges));
}

Graph grid_graph(int rows, int cols) {
  require_size(rows, 1, "grid rows");
  require_size(cols, 1, "grid cols");
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) edges.push_back(Edge{v, v + 1});
      if (r + 1 < rows) edges.push_back(Edge{v, v + cols});
    }
  }
  return Graph(rows * cols, std::move(edges));
}

Graph theta_graph(const std::vector<int>& lengths) {
  if (lengths.empty()) throw GraphError("theta needs at least one path");
  if (std::count(lengths.begin(), lengths.end(), 1) > 1) {
    throw GraphError("theta with two unit-length paths would need a parallel edge");
  }
  int n = 2;
  std::vector<Edge> edges;
  for (int len : lengths) {
    require_size(len, 1, "theta path length");
    Vertex prev = 0;
    for (int step = 1; step < len; ++step) {
      edges.push_back(make_edge(prev, n));
      prev = n++;
    }
    edges.push_back(make_edge(prev, 1));
  }
  return Graph(n, std::move(edges));
}

Graph binary_tree(int depth) {
  if (depth < 0) throw GraphError("binary tree depth must be >= 0");
  if (depth > 5) throw GraphError("binary tree depth > 5 exceeds the 64-vertex limit");
  int n = (1 << (depth + 1)) - 1;
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back(Edge{(v - 1) / 2, v});
  return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.push_back(Edge{0, v});
  return Graph(leaves + 1, std::move(edges));
}

Graph generate(const FamilySpec& spec) {
  struct Visitor {
    Graph operator()(const family::Path& p) const { return path_graph(p.n); }
    Graph operator()(const family::Cycle& c) const { return cycle_graph(c.n); }
    Graph operator()(const family::Clique& c) const { return complete_graph(c.n); }
    Graph operator()(const family::Grid& g) const { return grid_graph(g.rows, g.cols); }
    Graph operator()(const family::Theta& t) const { return theta_graph(t.lengths); }
    Graph operator()(const family::BinaryTree& b) const { return binary_tree(b.depth); }
    Graph operator()(const family::File& f) const { return read_edge_list_file(f.path); }
  };
  return std::visit(Visitor{}, spec);
}

Graph graph_from_spec(std::string_view text) { return generate(parse_family_spec(text)); }

}  // namespace broadcast
