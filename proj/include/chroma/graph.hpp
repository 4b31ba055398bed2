#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chroma {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Raised when an input text or spec cannot be interpreted.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a computation would exceed a configured state-space or memory cap.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Neighbor lists are sorted; graphs with at most
/// kBitsetLimit vertices also keep one adjacency bitset row per vertex so that
/// has_edge() is a single word lookup.
class Graph {
 public:
  static constexpr std::size_t kBitsetLimit = 4096;

  Graph() = default;
  explicit Graph(std::size_t vertex_count);
  /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
  /// Duplicate edges (in either orientation) collapse to one.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const {
    return vertex_count_ == other.vertex_count_ && offsets_ == other.offsets_ &&
           adjacency_ == other.adjacency_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

bool is_connected(const Graph& g);

/// Connected components, each sorted ascending; components ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Vertices of s relabeled 0..|s|-1 in ascending original order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// Vertex v of g becomes new_label[v].
Graph relabel(const Graph& g, std::span<const Vertex> new_label);

/// Edge-list text: optional header "n <count>", one "u v" per line, '#' comments.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);
std::string to_edge_list(const Graph& g);

}  // namespace chroma
