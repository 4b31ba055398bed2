#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "chroma/canonical.hpp"
#include "chroma/graph.hpp"

namespace chroma {

/// `threads` = 0 means one worker per hardware thread. Results never depend on it.
mpz_class count_injective_homs(const Graph& h, const Graph& g, unsigned threads = 0);

/// Copies of h in g (subgraphs isomorphic to h). Computed with symmetry breaking,
/// one embedding per copy, rather than by dividing the homomorphism count.
mpz_class count_copies(const Graph& h, const Graph& g, unsigned threads = 0);

/// Vertex subsets S with g[S] isomorphic to f.
mpz_class count_induced_copies(const Graph& f, const Graph& g, unsigned threads = 0);

/// Vertex sets of the copies of a pattern, one entry per copy (so a vertex set
/// carrying several copies repeats). Entries are sorted original labels.
class CopyList {
 public:
  CopyList() = default;
  CopyList(std::size_t pattern_size, std::vector<Vertex> flat)
      : k_(pattern_size), flat_(std::move(flat)) {}

  std::size_t pattern_size() const { return k_; }
  std::size_t size() const { return k_ == 0 ? 0 : flat_.size() / k_; }
  std::span<const Vertex> operator[](std::size_t i) const { return {flat_.data() + i * k_, k_}; }
  const std::vector<Vertex>& flat() const { return flat_; }

 private:
  std::size_t k_ = 0;
  std::vector<Vertex> flat_;
};

inline constexpr std::size_t kDefaultCopyCap = 10'000'000;

/// Throws GuardError when more than `cap` copies exist.
CopyList enumerate_copies(const Graph& h, const Graph& g, std::size_t cap = kDefaultCopyCap,
                          unsigned threads = 0);

/// |K(t,h,g)| for every t in [2, |V(h)|]: ordered pairs of distinct copies whose
/// vertex sets share exactly t vertices.
std::map<int, mpz_class> overlap_profile(const CopyList& copies);
std::map<int, mpz_class> overlap_profile(const Graph& h, const Graph& g, unsigned threads = 0);
mpz_class count_overlap_pairs(const Graph& h, const Graph& g, int t, unsigned threads = 0);

/// Union of h and a copy h' in which j2[a] is identified with j1[a].
/// Vertices of h keep their labels; the remaining vertices of h' follow in
/// ascending order.
Graph t_join(const Graph& h, std::span<const Vertex> j1, std::span<const Vertex> j2);

struct GraphClass {
  CanonicalForm form;
  Graph representative;  // canonically labeled
};

struct JoinCatalog {
  Graph pattern;
  std::map<int, std::vector<GraphClass>> by_t;  // t in [2, |V(h)|-1], sorted by form
};

inline constexpr double kMaxJoinPivotPairs = 2e6;
/// Throws GuardError when the (J1, J2) pivot pairs to try exceed the cap, which
/// admits patterns up to 8 vertices.
JoinCatalog enumerate_t_joins(const Graph& h);

struct SupergraphClasses {
  Graph pattern;
  std::map<int, std::vector<GraphClass>> by_k;  // every k in [1, N(h, K_|V(h)|)]
};

inline constexpr std::size_t kMaxSupergraphClasses = 300'000;

/// Throws GuardError when |V(h)| > 10 or the class count exceeds the cap.
SupergraphClasses enumerate_supergraph_classes(const Graph& h);

/// |D_k(h,g)| for every k in [1, N(h, K_|V(h)|)].
std::map<int, mpz_class> count_Dk(const SupergraphClasses& classes, const Graph& g,
                                  unsigned threads = 0);
std::map<int, mpz_class> count_Dk(const Graph& h, const Graph& g, unsigned threads = 0);

}  // namespace chroma
