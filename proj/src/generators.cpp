#include "chroma/generators.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace chroma {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

Graph complete_graph(std::size_t n) {
  require(n >= 1, "complete graph needs at least one vertex");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, std::move(edges));
}

Graph path_graph(std::size_t n) {
  require(n >= 1, "path needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph star_graph(std::size_t r) {
  require(r >= 1, "star needs at least one leaf");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= r; ++v) edges.emplace_back(0, v);
  return Graph(r + 1, std::move(edges));
}

Graph wheel_graph(std::size_t n) {
  require(n >= 3, "wheel rim needs at least three vertices");
  std::vector<Edge> edges;
  edges.reserve(2 * n);
  for (Vertex i = 1; i <= n; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, static_cast<Vertex>(i % n + 1));
  }
  return Graph(n + 1, std::move(edges));
}

Graph complete_multipartite(std::span<const std::size_t> part_sizes) {
  require(!part_sizes.empty(), "multipartite graph needs at least one part");
  std::vector<std::size_t> start{0};
  for (std::size_t s : part_sizes) {
    require(s >= 1, "multipartite part sizes must be positive");
    start.push_back(start.back() + s);
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < part_sizes.size(); ++a) {
    for (std::size_t b = a + 1; b < part_sizes.size(); ++b) {
      for (std::size_t u = start[a]; u < start[a + 1]; ++u) {
        for (std::size_t v = start[b]; v < start[b + 1]; ++v) {
          edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
      }
    }
  }
  return Graph(start.back(), std::move(edges));
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::size_t offset = 0;
  std::vector<Edge> edges;
  for (const Graph& g : parts) {
    for (const auto& [u, v] : g.edges()) {
      edges.emplace_back(static_cast<Vertex>(u + offset), static_cast<Vertex>(v + offset));
    }
    offset += g.vertex_count();
  }
  return Graph(offset, std::move(edges));
}

Graph disjoint_copies(const Graph& h, std::size_t count) {
  const std::size_t k = h.vertex_count();
  const auto base = h.edges();
  std::vector<Edge> edges;
  edges.reserve(base.size() * count);
  for (std::size_t c = 0; c < count; ++c) {
    for (const auto& [u, v] : base) {
      edges.emplace_back(static_cast<Vertex>(u + c * k), static_cast<Vertex>(v + c * k));
    }
  }
  return Graph(k * count, std::move(edges));
}

Graph erdos_renyi(std::size_t n, double p, Stream& stream) {
  require(n >= 1, "G(n,p) needs at least one vertex");
  require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0,1]");
  const BernoulliThreshold coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin.sample(stream)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  Stream stream(seed, 0);
  return erdos_renyi(n, p, stream);
}

Graph pyramid(const Graph& h, std::size_t n) {
  const std::size_t v = h.vertex_count();
  if (v < 2) throw std::invalid_argument("pyramid pattern needs at least two vertices");
  if (!is_connected(h)) throw std::invalid_argument("pyramid pattern must be connected");
  require(n >= 1, "pyramid height must be positive");
  const Vertex apex = static_cast<Vertex>(v - 1);
  std::vector<Edge> edges;
  for (const auto& [a, b] : h.edges()) {
    if (a != apex && b != apex) edges.emplace_back(a, b);
  }
  for (std::size_t copy = 0; copy < n; ++copy) {
    const auto z = static_cast<Vertex>(v - 1 + copy);
    for (Vertex b : h.neighbors(apex)) edges.emplace_back(b, z);
  }
  return Graph(v - 1 + n, std::move(edges));
}

bool is_star(const Graph& h) {
  const std::size_t v = h.vertex_count();
  if (v < 2 || h.edge_count() != v - 1) return false;
  for (Vertex x = 0; x < v; ++x) {
    if (h.degree(x) == v - 1) return true;
  }
  return false;
}

Graph counterexample_graph(const Graph& h, std::size_t n, double lambda) {
  if (is_star(h)) throw std::invalid_argument("counterexample pattern must not be a star");
  require(lambda > 0.0 && std::isfinite(lambda), "lambda must be positive");
  const auto extra = static_cast<std::size_t>(std::ceil(lambda * static_cast<double>(n)));
  const Graph parts[] = {pyramid(h, n), disjoint_copies(h, extra)};
  return disjoint_union(parts);
}

namespace {

bool suffix_number(std::string_view name, std::string_view prefix, std::size_t& out) {
  if (name.substr(0, prefix.size()) != prefix) return false;
  std::string_view rest = name.substr(prefix.size());
  if (!rest.empty() && rest.front() == '_') rest.remove_prefix(1);
  if (rest.empty()) return false;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), out);
  return ec == std::errc{} && ptr == rest.data() + rest.size();
}

}  // namespace

Graph named_graph(std::string_view name) {
  std::size_t k = 0;
  try {
    if (name == "diamond") return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    if (name == "tadpole") return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    if (name == "bowtie") return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    if (name == "k4-pendant") {
      return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    }
    // "k1_<r>" needs the underscore so that "k12" still means K_12.
    if (name.starts_with("k1_") && suffix_number(name, "k1", k)) return star_graph(k);
    if (suffix_number(name, "k", k)) return complete_graph(k);
    if (suffix_number(name, "c", k)) return cycle_graph(k);
    if (suffix_number(name, "path", k) || suffix_number(name, "p", k)) return path_graph(k);
    if (suffix_number(name, "wheel", k)) return wheel_graph(k);
  } catch (const std::invalid_argument& e) {
    throw ParseError("bad pattern '" + std::string(name) + "': " + e.what());
  }
  throw ParseError("unknown pattern name: " + std::string(name));
}

}  // namespace chroma
