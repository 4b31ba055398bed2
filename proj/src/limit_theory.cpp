#include "chroma/limit_theory.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "chroma/counting.hpp"
#include "chroma/generators.hpp"

namespace chroma {

namespace {

constexpr std::size_t kSubsetScanLimit = 24;

std::vector<Vertex> members(std::uint32_t mask, std::size_t n) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (mask >> v & 1U) out.push_back(v);
  }
  return out;
}

std::size_t edges_inside(const Graph& h, std::uint32_t mask) {
  std::size_t e = 0;
  for (const auto& [u, v] : h.edges()) e += (mask >> u & 1U) && (mask >> v & 1U);
  return e;
}

void require_scannable(const Graph& h) {
  if (h.vertex_count() > kSubsetScanLimit) {
    throw GuardError("pattern too large for subset scans (|V| > 24)");
  }
  if (h.edge_count() == 0) throw std::invalid_argument("pattern has no edges");
}

// Candidate value for a subgraph with v1 vertices and e1 edges, or nothing when
// the denominator is not positive.
std::optional<mpq_class> gamma_candidate(const Graph& h, std::size_t v1, std::size_t e1) {
  const long v = static_cast<long>(h.vertex_count());
  const long e = static_cast<long>(h.edge_count());
  const long den = static_cast<long>(e1) * (v - 1) - e * (static_cast<long>(v1) - 1);
  if (den <= 0) return std::nullopt;
  mpq_class q(v - static_cast<long>(v1), den);
  q.canonicalize();
  return q;
}

void require_unbalanced_connected(const Graph& h) {
  require_scannable(h);
  if (!is_connected(h)) throw std::invalid_argument("gamma needs a connected pattern");
  if (is_balanced(h)) throw std::invalid_argument("gamma is defined only for unbalanced patterns");
}

}  // namespace

mpq_class density_exponent(const Graph& h) {
  require_scannable(h);
  const std::size_t n = h.vertex_count();
  mpq_class best = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    mpq_class ratio(static_cast<long>(edges_inside(h, mask)), std::popcount(mask));
    ratio.canonicalize();
    best = std::max(best, ratio);
  }
  return best;
}

bool is_balanced(const Graph& h) {
  mpq_class whole(static_cast<long>(h.edge_count()), static_cast<long>(h.vertex_count()));
  whole.canonicalize();
  return density_exponent(h) == whole;
}

mpq_class gamma_exponent(const Graph& h) {
  require_unbalanced_connected(h);
  const std::size_t n = h.vertex_count();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::optional<mpq_class> best;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const auto s = members(mask, n);
    if (!is_connected(induced_subgraph(h, s))) continue;
    auto q = gamma_candidate(h, s.size(), edges_inside(h, mask));
    if (q && (!best || *q < *best)) best = q;
  }
  if (!best) throw std::logic_error("no admissible subgraph for gamma");
  return *best;
}

mpq_class gamma_exponent_exhaustive(const Graph& h) {
  require_unbalanced_connected(h);
  const std::size_t n = h.vertex_count();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  const auto all_edges = h.edges();
  std::optional<mpq_class> best;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::vector<Edge> inside;
    for (const auto& [u, v] : all_edges) {
      if ((mask >> u & 1U) && (mask >> v & 1U)) inside.push_back({u, v});
    }
    if (inside.size() > 20) throw GuardError("pattern too large for exhaustive gamma");
    const std::size_t v1 = static_cast<std::size_t>(std::popcount(mask));
    for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << inside.size()); ++pick) {
      const std::size_t e1 = static_cast<std::size_t>(std::popcount(pick));
      if (mask == full && e1 == all_edges.size()) continue;  // h itself is not proper
      auto q = gamma_candidate(h, v1, e1);
      if (q && (!best || *q < *best)) best = q;
    }
  }
  if (!best) throw std::logic_error("no admissible subgraph for gamma");
  return *best;
}

ColorChoice required_colors(const Graph& h, std::uint64_t n, double p, double lambda) {
  const std::size_t v = h.vertex_count();
  if (v < 2) throw std::invalid_argument("pattern needs at least two vertices");
  if (n < v) throw std::invalid_argument("host size must be at least |V(h)|");
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in (0,1]");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("lambda must be positive");

  // E N(h, G(n,p)) = n(n-1)...(n-v+1) p^e / |Aut(h)|, accumulated in logs.
  long double log_expected = 0;
  for (std::size_t i = 0; i < v; ++i) log_expected += std::log(static_cast<long double>(n - i));
  log_expected += static_cast<long double>(h.edge_count()) * std::log(static_cast<long double>(p));
  log_expected -= std::log(static_cast<long double>(automorphism_count(h).get_d()));

  ColorChoice out;
  const long double exponent = 1.0L / static_cast<long double>(v - 1);
  out.raw = static_cast<double>(std::exp((log_expected - std::log(static_cast<long double>(lambda))) * exponent));
  const double rounded = std::round(out.raw);
  out.clamped = rounded < 2.0;
  out.colors = out.clamped ? 2 : static_cast<std::uint64_t>(rounded);
  out.realized_lambda = static_cast<double>(
      std::exp(log_expected - static_cast<long double>(v - 1) * std::log(static_cast<long double>(out.colors))));
  return out;
}

double PoissonMixture::mean() const {
  double m = 0;
  for (const auto& c : components) m += static_cast<double>(c.coefficient) * c.rate;
  return m;
}

void PoissonMixture::normalize() {
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.coefficient < b.coefficient; });
  std::vector<MixtureComponent> merged;
  for (const auto& c : components) {
    if (!merged.empty() && merged.back().coefficient == c.coefficient) {
      merged.back().rate += c.rate;
    } else {
      merged.push_back(c);
    }
  }
  components = std::move(merged);
}

PoissonMixture dense_mixture(const Graph& h, double p, double lambda) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("dense mixture needs p in (0,1)");
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  const auto classes = enumerate_supergraph_classes(h);
  const double aut_h = automorphism_count(h).get_d();
  const std::size_t v = h.vertex_count();
  const double pairs = static_cast<double>(v * (v - 1) / 2);
  PoissonMixture mixture;
  for (const auto& [k, members] : classes.by_k) {
    for (const auto& f : members) {
      const double extra = static_cast<double>(f.representative.edge_count() - h.edge_count());
      const double missing = pairs - static_cast<double>(f.representative.edge_count());
      const double rate = lambda * aut_h / automorphism_count(f.representative).get_d() *
                          std::pow(p, extra) * std::pow(1.0 - p, missing);
      mixture.components.push_back({static_cast<std::uint64_t>(k), rate});
    }
  }
  mixture.normalize();
  return mixture;
}

PoissonMixture sequence_mixture(const Graph& h, const Graph& g, std::uint64_t c, unsigned threads) {
  if (c < 1) throw std::invalid_argument("color count must be at least 1");
  PoissonMixture mixture;
  for (const auto& [k, count] : count_Dk(h, g, threads)) {
    if (count == 0) continue;
    const double rate = mean_T_exact(count, static_cast<int>(h.vertex_count()), c).get_d();
    mixture.components.push_back({static_cast<std::uint64_t>(k), rate});
  }
  mixture.normalize();
  return mixture;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::invalid: return "invalid";
    case Regime::sparse_poisson: return "sparse_poisson";
    case Regime::unbalanced_zero: return "unbalanced_zero";
    case Regime::unbalanced_critical: return "unbalanced_critical";
    case Regime::dense_mixture: return "dense_mixture";
  }
  return "invalid";
}

const char* limit_kind_name(LimitKind k) {
  switch (k) {
    case LimitKind::none: return "none";
    case LimitKind::poisson_mixture: return "poisson_mixture";
    case LimitKind::degenerate_zero: return "degenerate_zero";
    case LimitKind::non_poisson: return "non_poisson";
  }
  return "none";
}

RegimeReport classify_er_regime(const Graph& h, const mpq_class& alpha, double kappa,
                                double lambda) {
  if (h.edge_count() == 0) throw std::invalid_argument("pattern has no edges");
  if (alpha < 0) throw std::invalid_argument("alpha must be nonnegative");
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  if (alpha == 0 && !(kappa > 0.0 && kappa < 1.0)) {
    throw std::invalid_argument("alpha = 0 needs kappa in (0,1)");
  }
  if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be positive");

  RegimeReport r;
  r.pattern = h;
  r.alpha = alpha;
  r.kappa = kappa;
  r.lambda = lambda;
  r.m = density_exponent(h);
  r.balanced = is_balanced(h);
  r.threshold = mpq_class(static_cast<long>(h.vertex_count()), static_cast<long>(h.edge_count()));
  r.threshold.canonicalize();
  if (!r.balanced) r.gamma = gamma_exponent(h);

  auto poisson = [&] {
    r.limit = LimitKind::poisson_mixture;
    r.predicted_limit = PoissonMixture{{{1, lambda}}};
  };

  if (alpha >= r.threshold) {
    r.regime = Regime::invalid;
    r.note = "c_n does not diverge: alpha must be below |V(H)|/|E(H)|";
  } else if (alpha == 0) {
    r.regime = Regime::dense_mixture;
    r.limit = LimitKind::poisson_mixture;
    r.predicted_limit = dense_mixture(h, kappa, lambda);
  } else if (r.balanced || alpha < *r.gamma) {
    r.regime = Regime::sparse_poisson;
    poisson();
  } else if (alpha == *r.gamma) {
    r.regime = Regime::unbalanced_critical;
    r.limit = LimitKind::non_poisson;
    r.note = "non-Poisson, moments converge";
  } else {
    r.regime = Regime::unbalanced_zero;
    r.limit = LimitKind::degenerate_zero;
    r.predicted_limit = PoissonMixture{};
  }
  return r;
}

SecondMomentReport check_second_moment(const Graph& h, const Graph& g, std::uint64_t c,
                                       double epsilon, unsigned threads) {
  if (c < 2) throw std::invalid_argument("color count must be at least 2");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  const int v = static_cast<int>(h.vertex_count());

  SecondMomentReport report;
  report.epsilon = epsilon;
  report.moments = variance_T(h, g, c, threads);

  const CanonicalForm self = canonical_form(h);
  bool joins_small = true;
  if (v >= 3) {
    for (auto& [t, classes] : enumerate_t_joins(h).by_t) {
      for (auto& cls : classes) {
        if (cls.form == self) continue;
        JoinRatio jr;
        jr.t = t;
        jr.copies = count_copies(cls.representative, g, threads);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(c),
                      static_cast<unsigned long>(2 * v - t - 1));
        jr.ratio = mpq_class(jr.copies, scale).get_d();
        joins_small = joins_small && jr.ratio <= epsilon;
        jr.join = std::move(cls);
        report.joins.push_back(std::move(jr));
      }
    }
  }
  const auto full = report.moments.per_t_overlap.find(v);
  const mpz_class overlap = full == report.moments.per_t_overlap.end() ? mpz_class(0) : full->second.count;
  report.full_overlap_ratio = mean_T_exact(overlap, v, c).get_d();

  const double mean = report.moments.mean;
  report.mean_variance_close = std::abs(report.moments.variance - mean) <= epsilon * mean;
  report.joins_small = joins_small;
  report.overlap_small = report.full_overlap_ratio <= epsilon;
  report.poisson_consistent = report.mean_variance_close && report.joins_small && report.overlap_small;
  return report;
}

}  // namespace chroma
