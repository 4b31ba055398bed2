#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "chroma/canonical.hpp"
#include "chroma/graph.hpp"
#include "chroma/moments.hpp"

namespace chroma {

/// m(h): max over non-empty vertex subsets S of e(h[S]) / |S|.
mpq_class density_exponent(const Graph& h);
bool is_balanced(const Graph& h);

/// gamma(h) by scanning proper connected induced subgraphs. Throws
/// std::invalid_argument for balanced or disconnected h.
mpq_class gamma_exponent(const Graph& h);
/// Same minimum taken over every proper subgraph (each vertex subset with each
/// subset of its edges, isolated vertices allowed). Exponential; a test oracle.
mpq_class gamma_exponent_exhaustive(const Graph& h);

struct ColorChoice {
  std::uint64_t colors = 0;
  double raw = 0;              // unrounded solution
  double realized_lambda = 0;  // expected T under G(n,p) with the integer color count
  bool clamped = false;        // raw rounded below 2
};

/// c with E T = E N(h, G(n,p)) / c^(|V(h)|-1) closest to lambda.
ColorChoice required_colors(const Graph& h, std::uint64_t n, double p, double lambda);

struct MixtureComponent {
  std::uint64_t coefficient;
  double rate;
};

/// Law of sum_k k X_k with independent X_k ~ Poisson(rate_k).
struct PoissonMixture {
  std::vector<MixtureComponent> components;  // distinct coefficients, ascending

  double mean() const;
  /// Sorts by coefficient and merges equal coefficients.
  void normalize();
};

PoissonMixture dense_mixture(const Graph& h, double p, double lambda);
PoissonMixture sequence_mixture(const Graph& h, const Graph& g, std::uint64_t c,
                                unsigned threads = 0);

enum class Regime { invalid, sparse_poisson, unbalanced_zero, unbalanced_critical, dense_mixture };
const char* regime_name(Regime r);

enum class LimitKind { none, poisson_mixture, degenerate_zero, non_poisson };
const char* limit_kind_name(LimitKind k);

struct RegimeReport {
  Graph pattern;
  bool balanced = false;
  mpq_class m;
  std::optional<mpq_class> gamma;
  mpq_class alpha;
  mpq_class threshold;  // |V(h)| / |E(h)|
  double kappa = 0;
  double lambda = 0;
  Regime regime = Regime::invalid;
  LimitKind limit = LimitKind::none;
  std::optional<PoissonMixture> predicted_limit;
  std::string note;
};

/// Phase of G(n, kappa n^-alpha) colored so that E T -> lambda.
RegimeReport classify_er_regime(const Graph& h, const mpq_class& alpha, double kappa,
                                double lambda);

struct JoinRatio {
  int t = 0;
  GraphClass join;
  mpz_class copies;  // N(join, g)
  double ratio = 0;  // copies / c^(2|V(h)|-t-1)
};

struct SecondMomentReport {
  MomentReport moments;
  double epsilon = 0;
  std::vector<JoinRatio> joins;
  double full_overlap_ratio = 0;  // |K(|V(h)|,h,g)| / c^(|V(h)|-1)
  bool mean_variance_close = false;
  bool joins_small = false;
  bool overlap_small = false;
  bool poisson_consistent = false;
};

SecondMomentReport check_second_moment(const Graph& h, const Graph& g, std::uint64_t c,
                                       double epsilon, unsigned threads = 0);

}  // namespace chroma
