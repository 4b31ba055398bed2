#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "chroma/counting.hpp"
#include "chroma/graph.hpp"

namespace chroma {

struct OverlapTerm {
  mpz_class count;      // |K(t,h,g)|
  double contribution;  // its share of r2
};

struct MomentReport {
  mpz_class copies;
  std::uint64_t colors = 0;
  int pattern_vertices = 0;
  double mean = 0;
  double variance = 0;
  double r1 = 0;
  double r2 = 0;
  std::map<int, OverlapTerm> per_t_overlap;
  mpq_class mean_exact;
  mpq_class variance_exact;
};

/// N(h,g) / c^(|V(h)|-1). Requires c >= 1.
double mean_T(const Graph& h, const Graph& g, std::uint64_t c, unsigned threads = 0);
mpq_class mean_T_exact(const mpz_class& copies, int pattern_vertices, std::uint64_t c);

/// Variance of T through its decomposition r1 + r2 over overlap sizes.
MomentReport variance_T(const Graph& h, const Graph& g, std::uint64_t c, unsigned threads = 0);
MomentReport variance_T(const CopyList& copies, std::uint64_t c);

/// Distribution on a nonnegative integer support. `exact` is filled only by
/// computations that have it; `tail_bound` is mass not listed in `support`.
struct Pmf {
  std::vector<std::uint64_t> support;  // ascending
  std::vector<double> probabilities;
  std::vector<mpq_class> exact;
  double tail_bound = 0;

  double probability(std::uint64_t value) const;
  double mean() const;
  double variance() const;
};

inline constexpr double kExactDistributionLimit = 1e8;
inline constexpr double kExactRationalLimit = 1e6;

/// Exact law of T by enumerating all c^|V(g)| colorings.
/// Throws GuardError when c^|V(g)| exceeds kExactDistributionLimit.
Pmf exact_distribution_T(const Graph& h, const Graph& g, std::uint64_t c, unsigned threads = 0);

}  // namespace chroma
