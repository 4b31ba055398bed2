#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "chroma/counting.hpp"
#include "chroma/graph.hpp"
#include "chroma/limit_theory.hpp"
#include "chroma/moments.hpp"
#include "chroma/random.hpp"

namespace chroma {

/// Colors are 1..c, one per vertex.
struct Coloring {
  std::vector<std::uint32_t> colors;
  std::uint64_t c = 0;
};

/// Vertex v receives the v-th draw from the stream.
Coloring sample_coloring(std::size_t vertex_count, std::uint64_t c, Stream& stream);
Coloring sample_coloring(const Graph& g, std::uint64_t c, Stream& stream);

/// Copies in the list whose vertices all share one color.
std::uint64_t evaluate_T(const CopyList& copies, const Coloring& coloring);

struct EmpiricalDistribution {
  std::map<std::uint64_t, std::uint64_t> histogram;
  std::uint64_t replicates = 0;
  std::uint64_t seed = 0;
  std::uint64_t colors = 0;
  double sample_mean = 0;
  double sample_variance = 0;  // unbiased
  // Set by monte_carlo_er.
  double edge_probability = std::numeric_limits<double>::quiet_NaN();
  double realized_lambda = std::numeric_limits<double>::quiet_NaN();

  double frequency(std::uint64_t value) const;
};

/// Replicate r colors g with Stream(seed, r). Copies rooted at vertices with few
/// copies are listed once; the rest are recounted per replicate under the color
/// filter, so no copy-list cap applies. Histograms do not depend on `threads`.
EmpiricalDistribution monte_carlo(const Graph& h, const Graph& g, std::uint64_t c,
                                  std::uint64_t replicates, std::uint64_t seed,
                                  unsigned threads = 0);

/// Replicate r draws its coloring from Stream(seed, r) and then a fresh
/// G(n, kappa n^-alpha) from a second stream; c comes from required_colors.
/// alpha = 0 accepts kappa in (0,1].
EmpiricalDistribution monte_carlo_er(const Graph& h, std::uint64_t n, const mpq_class& alpha,
                                     double kappa, double lambda, std::uint64_t replicates,
                                     std::uint64_t seed, unsigned threads = 0);

/// Law of the mixture on [0, upto]; components are truncated where their
/// Poisson tail drops below 1e-12. tail_bound covers everything not listed.
Pmf mixture_pmf(const PoissonMixture& mixture, std::uint64_t upto);
Pmf poisson_pmf(double lambda, std::uint64_t upto);

/// (1/2) sum |empirical - pmf| over the union of supports, plus pmf.tail_bound.
double tv_distance(const EmpiricalDistribution& emp, const Pmf& pmf);

/// Summary statistics of a histogram.
void finalize_moments(EmpiricalDistribution& emp);

}  // namespace chroma
