#include "chroma/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace chroma {

Graph::Graph(std::size_t vertex_count) : Graph(vertex_count, {}) {}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count) {
  for (auto& [u, v] : edges) {
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    if (u >= vertex_count || v >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  offsets_.assign(vertex_count + 1, 0);
  for (const auto& [u, v] : edges) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::size_t i = 0; i < vertex_count; ++i) offsets_[i + 1] += offsets_[i];
  adjacency_.resize(offsets_[vertex_count]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Sorted edge order places lower endpoints first, so u's list is filled with
  // increasing v, but v's list receives u values interleaved; sort afterwards.
  for (const auto& [u, v] : edges) {
    adjacency_[fill[u]++] = v;
    adjacency_[fill[v]++] = u;
  }
  for (std::size_t i = 0; i < vertex_count; ++i) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
  }

  if (vertex_count > 0 && vertex_count <= kBitsetLimit) {
    words_per_row_ = (vertex_count + 63) / 64;
    bits_.assign(words_per_row_ * vertex_count, 0);
    for (const auto& [u, v] : edges) {
      bits_[u * words_per_row_ + v / 64] |= std::uint64_t{1} << (v % 64);
      bits_[v * words_per_row_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= vertex_count_ || v >= vertex_count_) return false;
  if (!bits_.empty()) {
    return (bits_[u * words_per_row_ + v / 64] >> (v % 64)) & 1U;
  }
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  std::vector<Vertex> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("induced_subgraph: repeated vertex");
  }
  if (!sorted.empty() && sorted.back() >= g.vertex_count()) {
    throw std::invalid_argument("induced_subgraph: vertex out of range");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (g.has_edge(sorted[i], sorted[j])) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph(sorted.size(), std::move(edges));
}

Graph relabel(const Graph& g, std::span<const Vertex> new_label) {
  if (new_label.size() != g.vertex_count()) {
    throw std::invalid_argument("relabel: permutation size mismatch");
  }
  std::vector<Edge> edges = g.edges();
  for (auto& [u, v] : edges) {
    u = new_label[u];
    v = new_label[v];
  }
  return Graph(g.vertex_count(), std::move(edges));
}

namespace {

bool parse_index(std::string_view token, std::uint64_t& out) {
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::uint64_t declared = 0;
  bool has_header = false;
  std::uint64_t max_seen = 0;
  bool any_vertex = false;
  std::size_t line_no = 0;

  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;

    const std::string where = "line " + std::to_string(line_no);
    if (tokens[0] == "n") {
      if (has_header || !edges.empty() || tokens.size() != 2 || !parse_index(tokens[1], declared)) {
        throw ParseError(where + ": malformed header");
      }
      has_header = true;
      continue;
    }
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (tokens.size() != 2 || !parse_index(tokens[0], u) || !parse_index(tokens[1], v)) {
      throw ParseError(where + ": expected two nonnegative integers");
    }
    if (u == v) throw ParseError(where + ": self-loop at vertex " + std::to_string(u));
    if (u > UINT32_MAX - 1 || v > UINT32_MAX - 1) throw ParseError(where + ": vertex index too large");
    max_seen = std::max({max_seen, u, v});
    any_vertex = true;
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }

  std::uint64_t n = any_vertex ? max_seen + 1 : 0;
  if (has_header) {
    if (declared < n) {
      throw ParseError("header declares " + std::to_string(declared) +
                       " vertices but edges mention vertex " + std::to_string(max_seen));
    }
    n = declared;
  }
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace chroma
