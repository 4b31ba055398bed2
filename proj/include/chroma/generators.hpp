#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "chroma/graph.hpp"
#include "chroma/random.hpp"

namespace chroma {

Graph complete_graph(std::size_t n);
/// n >= 3 vertices arranged 0-1-...-(n-1)-0.
Graph cycle_graph(std::size_t n);
/// Path on n vertices.
Graph path_graph(std::size_t n);
/// Hub 0 joined to leaves 1..r.
Graph star_graph(std::size_t r);
/// Hub 0 joined to the cycle 1..n (n >= 3).
Graph wheel_graph(std::size_t n);
/// Parts occupy consecutive label ranges in the given order.
Graph complete_multipartite(std::span<const std::size_t> part_sizes);
/// Components are laid out consecutively in the given order.
Graph disjoint_union(std::span<const Graph> parts);
Graph disjoint_copies(const Graph& h, std::size_t count);

/// G(n, p): pairs (u, v), u < v, visited in lexicographic order, one draw each.
Graph erdos_renyi(std::size_t n, double p, Stream& stream);
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// n copies of h glued on the base vertices 0..|V(h)|-2; the last vertex of h is
/// the apex and gets a fresh label |V(h)|-1+a in copy a.
Graph pyramid(const Graph& h, std::size_t n);

/// pyramid(h, n) followed by ceil(lambda * n) disjoint copies of h.
Graph counterexample_graph(const Graph& h, std::size_t n, double lambda);

bool is_star(const Graph& h);

/// Named fixtures: k<s>, k_<s>, k1_<r>, c<n>, path<n>, p<n>, wheel<n> (underscore
/// optional), diamond, tadpole, bowtie, k4-pendant. Throws ParseError.
Graph named_graph(std::string_view name);

}  // namespace chroma
