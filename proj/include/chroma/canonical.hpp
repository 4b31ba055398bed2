#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "chroma/graph.hpp"

namespace chroma {

/// Opaque isomorphism-class key: vertex count (4 bytes, little endian) followed by
/// the upper-triangle adjacency bits of the canonically relabeled graph, row major,
/// most significant bit first.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  auto operator<=>(const CanonicalForm&) const = default;
  std::string hex() const;
};

CanonicalForm canonical_form(const Graph& g);

/// new_label[v] for each vertex v; relabel(g, canonical_labeling(g)) has the
/// same adjacency for every graph in the isomorphism class.
std::vector<Vertex> canonical_labeling(const Graph& g);
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// |Aut(g)|, from the orbit-stabilizer product along a chain of pointwise
/// stabilizers. Intended for pattern-sized graphs.
mpz_class automorphism_count(const Graph& g);

/// Symmetry-breaking order constraints (a, b) meaning image(a) < image(b), in the
/// style of Grochow and Kellis: every injective homomorphism class modulo Aut(g)
/// has exactly one member satisfying all of them.
std::vector<std::pair<Vertex, Vertex>> symmetry_breaking_pairs(const Graph& g);

}  // namespace chroma
