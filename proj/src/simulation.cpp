#include "chroma/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "parallel.hpp"
#include "search.hpp"

namespace chroma {

using detail::Count;
using detail::HostIndex;
using detail::PatternPlan;
using detail::Searcher;

namespace {

constexpr std::size_t kReplicateChunk = 256;
// Roots with at most this many copies are listed; larger ones are recounted.
constexpr Count kLightRootCopies = 4096;
constexpr std::uint64_t kGraphStreamSalt = 0x6A09E667F3BCC909ULL;

void require_replicates(std::uint64_t replicates, std::uint64_t c) {
  if (replicates < 1) throw std::invalid_argument("replicates must be at least 1");
  if (c < 1 || c > (std::uint64_t{1} << 32)) throw std::invalid_argument("color count out of range");
}

using Histogram = std::map<std::uint64_t, std::uint64_t>;

// Runs `one(worker, replicate)` for every replicate and merges the histograms.
template <class MakeState, class One>
EmpiricalDistribution run_replicates(std::uint64_t replicates, std::uint64_t seed, unsigned threads,
                                     MakeState&& make_state, One&& one) {
  const unsigned workers = detail::resolve_threads(threads);
  std::vector<Histogram> partial(workers);
  std::vector<decltype(make_state())> states;
  states.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) states.push_back(make_state());
  detail::for_each_chunk(replicates, kReplicateChunk, threads,
                         [&](unsigned w, std::size_t begin, std::size_t end, std::size_t) {
                           for (std::size_t r = begin; r < end; ++r) {
                             ++partial[w][one(*states[w], r)];
                           }
                         });
  EmpiricalDistribution emp;
  emp.replicates = replicates;
  emp.seed = seed;
  for (const auto& part : partial) {
    for (const auto& [t, count] : part) emp.histogram[t] += count;
  }
  finalize_moments(emp);
  return emp;
}

}  // namespace

Coloring sample_coloring(std::size_t vertex_count, std::uint64_t c, Stream& stream) {
  if (c < 1 || c > (std::uint64_t{1} << 32)) throw std::invalid_argument("color count out of range");
  Coloring out;
  out.c = c;
  out.colors.resize(vertex_count);
  for (auto& x : out.colors) x = stream.below(c) + 1;
  return out;
}

Coloring sample_coloring(const Graph& g, std::uint64_t c, Stream& stream) {
  return sample_coloring(g.vertex_count(), c, stream);
}

std::uint64_t evaluate_T(const CopyList& copies, const Coloring& coloring) {
  const std::size_t k = copies.pattern_size();
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < copies.size(); ++i) {
    auto set = copies[i];
    const std::uint32_t first = coloring.colors[set[0]];
    std::size_t j = 1;
    while (j < k && coloring.colors[set[j]] == first) ++j;
    t += j == k;
  }
  return t;
}

double EmpiricalDistribution::frequency(std::uint64_t value) const {
  auto it = histogram.find(value);
  if (it == histogram.end() || replicates == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(replicates);
}

void finalize_moments(EmpiricalDistribution& emp) {
  long double sum = 0;
  std::uint64_t total = 0;
  for (const auto& [t, count] : emp.histogram) {
    sum += static_cast<long double>(t) * count;
    total += count;
  }
  emp.replicates = total;
  if (total == 0) return;
  const long double mean = sum / total;
  long double squares = 0;
  for (const auto& [t, count] : emp.histogram) {
    const long double d = static_cast<long double>(t) - mean;
    squares += d * d * count;
  }
  emp.sample_mean = static_cast<double>(mean);
  emp.sample_variance = total > 1 ? static_cast<double>(squares / (total - 1)) : 0.0;
}

EmpiricalDistribution monte_carlo(const Graph& h, const Graph& g, std::uint64_t c,
                                  std::uint64_t replicates, std::uint64_t seed, unsigned threads) {
  require_replicates(replicates, c);
  const std::size_t n = g.vertex_count();
  const std::size_t k = h.vertex_count();
  if (k == 0) throw std::invalid_argument("pattern must have at least one vertex");

  const PatternPlan plan = PatternPlan::build(h, false, true);
  const HostIndex host(g, true);

  // Split roots into listed (light) and recounted (heavy) ones.
  std::vector<Vertex> light_flat;
  std::vector<Vertex> heavy;
  if (k <= n) {
    Searcher probe(plan, host);
    std::size_t listed = 0;
    for (Vertex r = 0; r < n; ++r) {
      const Count copies = probe.count_from_root(r);
      if (copies == 0) continue;
      if (copies <= kLightRootCopies && listed + static_cast<std::size_t>(copies) <= kDefaultCopyCap) {
        listed += static_cast<std::size_t>(copies);
        probe.enumerate_from_root(r, [&](const Vertex* images) {
          light_flat.insert(light_flat.end(), images, images + k);
        });
      } else {
        heavy.push_back(r);
      }
    }
  }

  struct State {
    Searcher searcher;
    std::vector<std::uint32_t> internal_colors;
  };
  auto make_state = [&] {
    auto s = std::make_unique<State>(State{Searcher(plan, host), std::vector<std::uint32_t>(n)});
    s->searcher.set_colors(s->internal_colors.data());
    return s;
  };
  auto one = [&](State& s, std::uint64_t r) -> std::uint64_t {
    Stream stream(seed, r);
    for (std::size_t v = 0; v < n; ++v) {
      s.internal_colors[host.internal(static_cast<Vertex>(v))] = stream.below(c);
    }
    s.searcher.set_colors(s.internal_colors.data());
    const auto& color = s.internal_colors;
    Count t = 0;
    for (std::size_t i = 0; i < light_flat.size(); i += k) {
      const std::uint32_t first = color[light_flat[i]];
      std::size_t j = 1;
      while (j < k && color[light_flat[i + j]] == first) ++j;
      t += j == k;
    }
    for (Vertex root : heavy) t += s.searcher.count_from_root(root);
    return static_cast<std::uint64_t>(t);
  };
  EmpiricalDistribution emp = run_replicates(replicates, seed, threads, make_state, one);
  emp.colors = c;
  return emp;
}

EmpiricalDistribution monte_carlo_er(const Graph& h, std::uint64_t n, const mpq_class& alpha,
                                     double kappa, double lambda, std::uint64_t replicates,
                                     std::uint64_t seed, unsigned threads) {
  if (alpha < 0) throw std::invalid_argument("alpha must be nonnegative");
  if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be positive");
  if (n < h.vertex_count()) throw std::invalid_argument("host size must be at least |V(h)|");
  const double p = kappa * std::pow(static_cast<double>(n), -alpha.get_d());
  if (p > 1.0) throw std::invalid_argument("kappa * n^-alpha exceeds 1");
  const ColorChoice choice = required_colors(h, n, p, lambda);
  const std::uint64_t c = choice.colors;
  require_replicates(replicates, c);

  const PatternPlan plan = PatternPlan::build(h, false, true);
  const BernoulliThreshold coin(p);
  const std::uint64_t graph_seed = Stream::mix(seed ^ kGraphStreamSalt);

  struct State {
    std::vector<std::uint32_t> colors;
    std::vector<Edge> mono;
  };
  auto make_state = [&] { return std::make_unique<State>(State{std::vector<std::uint32_t>(n), {}}); };
  auto one = [&](State& s, std::uint64_t r) -> std::uint64_t {
    Stream color_stream(seed, r);
    for (auto& x : s.colors) x = color_stream.below(c);
    // Every pair consumes its draw; only monochromatic edges can lie in a
    // monochromatic copy, so only those are kept.
    Stream graph_stream(graph_seed, r);
    s.mono.clear();
    for (Vertex u = 0; u < n; ++u) {
      const std::uint32_t cu = s.colors[u];
      for (Vertex v = u + 1; v < n; ++v) {
        if (coin.sample(graph_stream) && s.colors[v] == cu) s.mono.emplace_back(u, v);
      }
    }
    const HostIndex host(n, s.mono);
    Searcher searcher(plan, host);
    searcher.set_colors(s.colors.data());
    Count t = 0;
    for (Vertex root = 0; root < n; ++root) t += searcher.count_from_root(root);
    return static_cast<std::uint64_t>(t);
  };
  EmpiricalDistribution emp = run_replicates(replicates, seed, threads, make_state, one);
  emp.colors = c;
  emp.edge_probability = p;
  emp.realized_lambda = choice.realized_lambda;
  return emp;
}

Pmf poisson_pmf(double lambda, std::uint64_t upto) {
  return mixture_pmf(PoissonMixture{{{1, lambda}}}, upto);
}

Pmf mixture_pmf(const PoissonMixture& mixture, std::uint64_t upto) {
  constexpr double kTruncation = 1e-12;
  std::vector<double> dist(upto + 1, 0.0);
  dist[0] = 1.0;
  for (const auto& comp : mixture.components) {
    if (comp.rate < 0) throw std::invalid_argument("mixture rates must be nonnegative");
    if (comp.rate == 0 || comp.coefficient == 0) continue;
    const double lambda = comp.rate;
    const std::uint64_t k = comp.coefficient;
    // Poisson weights up to the point where the remaining tail is negligible.
    std::vector<double> weight;
    double cumulative = 0;
    for (std::uint64_t j = 0;; ++j) {
      const double w = std::exp(static_cast<double>(j) * std::log(lambda) - lambda -
                                std::lgamma(static_cast<double>(j) + 1.0));
      weight.push_back(w);
      cumulative += w;
      const bool past_mode = static_cast<double>(j) >= lambda;
      if ((past_mode && 1.0 - cumulative < kTruncation) || j * k > upto) break;
    }
    std::vector<double> next(upto + 1, 0.0);
    for (std::uint64_t v = 0; v <= upto; ++v) {
      if (dist[v] == 0) continue;
      for (std::uint64_t j = 0; j < weight.size() && v + j * k <= upto; ++j) {
        next[v + j * k] += dist[v] * weight[j];
      }
    }
    dist = std::move(next);
  }
  Pmf pmf;
  double listed = 0;
  for (std::uint64_t v = 0; v <= upto; ++v) {
    pmf.support.push_back(v);
    pmf.probabilities.push_back(dist[v]);
    listed += dist[v];
  }
  pmf.tail_bound = std::max(0.0, 1.0 - listed);
  return pmf;
}

double tv_distance(const EmpiricalDistribution& emp, const Pmf& pmf) {
  double sum = 0;
  for (std::size_t i = 0; i < pmf.support.size(); ++i) {
    sum += std::abs(emp.frequency(pmf.support[i]) - pmf.probabilities[i]);
  }
  for (const auto& [value, count] : emp.histogram) {
    if (!std::binary_search(pmf.support.begin(), pmf.support.end(), value)) {
      sum += static_cast<double>(count) / static_cast<double>(emp.replicates);
    }
  }
  return 0.5 * sum + pmf.tail_bound;
}

}  // namespace chroma
