#include "chroma/moments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parallel.hpp"

namespace chroma {

namespace {

mpz_class power(std::uint64_t base, unsigned long exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exponent);
  return out;
}

void require_colors(std::uint64_t c) {
  if (c < 1) throw std::invalid_argument("color count must be at least 1");
}

}  // namespace

mpq_class mean_T_exact(const mpz_class& copies, int pattern_vertices, std::uint64_t c) {
  require_colors(c);
  mpq_class mean(copies, power(c, static_cast<unsigned long>(std::max(pattern_vertices - 1, 0))));
  mean.canonicalize();
  return mean;
}

double mean_T(const Graph& h, const Graph& g, std::uint64_t c, unsigned threads) {
  require_colors(c);
  return mean_T_exact(count_copies(h, g, threads), static_cast<int>(h.vertex_count()), c).get_d();
}

MomentReport variance_T(const CopyList& copies, std::uint64_t c) {
  require_colors(c);
  const int v = static_cast<int>(copies.pattern_size());
  MomentReport report;
  report.copies = static_cast<unsigned long>(copies.size());
  report.colors = c;
  report.pattern_vertices = v;
  report.mean_exact = mean_T_exact(report.copies, v, c);

  // Each copy is monochromatic with probability q = c^-(v-1); two copies sharing
  // t >= 1 vertices are jointly monochromatic with probability c^-(2v-t-1).
  const mpq_class one = 1;
  const mpq_class q(1, power(c, static_cast<unsigned long>(std::max(v - 1, 0))));
  mpq_class r1 = report.mean_exact * (one - q);
  mpq_class r2 = 0;
  for (const auto& [t, count] : overlap_profile(copies)) {
    mpq_class joint(1, power(c, static_cast<unsigned long>(2 * v - t - 1)));
    mpq_class decay(1, power(c, static_cast<unsigned long>(t - 1)));
    mpq_class term = count * joint * (one - decay);
    term.canonicalize();
    report.per_t_overlap[t] = {count, term.get_d()};
    r2 += term;
  }
  r1.canonicalize();
  r2.canonicalize();
  report.variance_exact = r1 + r2;
  report.r1 = r1.get_d();
  report.r2 = r2.get_d();
  report.mean = report.mean_exact.get_d();
  report.variance = report.variance_exact.get_d();
  return report;
}

MomentReport variance_T(const Graph& h, const Graph& g, std::uint64_t c, unsigned threads) {
  return variance_T(enumerate_copies(h, g, kDefaultCopyCap, threads), c);
}

double Pmf::probability(std::uint64_t value) const {
  auto it = std::lower_bound(support.begin(), support.end(), value);
  if (it == support.end() || *it != value) return 0.0;
  return probabilities[static_cast<std::size_t>(it - support.begin())];
}

double Pmf::mean() const {
  double m = 0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    m += static_cast<double>(support[i]) * probabilities[i];
  }
  return m;
}

double Pmf::variance() const {
  const double m = mean();
  double s = 0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    const double d = static_cast<double>(support[i]) - m;
    s += d * d * probabilities[i];
  }
  return s;
}

Pmf exact_distribution_T(const Graph& h, const Graph& g, std::uint64_t c, unsigned threads) {
  if (c < 1) throw std::invalid_argument("color count must be at least 1");
  const std::size_t n = g.vertex_count();
  const double states = std::pow(static_cast<double>(c), static_cast<double>(n));
  if (states > kExactDistributionLimit) {
    throw GuardError("coloring state space c^n = " + std::to_string(states) +
                     " exceeds the limit of 1e8");
  }
  const CopyList copies = enumerate_copies(h, g, kDefaultCopyCap, threads);
  const std::size_t k = copies.pattern_size();

  // Vertex 0 keeps color 0; every count is then multiplied by c, since shifting
  // all colors by one is a bijection preserving T.
  const std::size_t free = n == 0 ? 0 : n - 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < free; ++i) total *= c;

  constexpr std::size_t kChunk = 1 << 14;
  // Integer histograms per worker; addition commutes, so the merge is deterministic.
  std::vector<std::vector<std::uint64_t>> partial(
      detail::resolve_threads(threads), std::vector<std::uint64_t>(copies.size() + 1, 0));
  detail::for_each_chunk(
      total, kChunk, threads, [&](unsigned worker, std::size_t begin, std::size_t end, std::size_t) {
        std::vector<std::uint32_t> color(n, 0);
        std::uint64_t rest = begin;
        for (std::size_t i = 1; i < n; ++i) {
          color[i] = static_cast<std::uint32_t>(rest % c);
          rest /= c;
        }
        auto& hist = partial[worker];
        for (std::size_t index = begin; index < end; ++index) {
          std::uint64_t t = 0;
          for (std::size_t i = 0; i < copies.size(); ++i) {
            auto set = copies[i];
            const std::uint32_t first = color[set[0]];
            std::size_t j = 1;
            while (j < k && color[set[j]] == first) ++j;
            t += j == k;
          }
          ++hist[t];
          for (std::size_t i = 1; i < n; ++i) {
            if (++color[i] < c) break;
            color[i] = 0;
          }
        }
      });

  std::map<std::uint64_t, std::uint64_t> hist;
  for (const auto& part : partial) {
    for (std::size_t t = 0; t < part.size(); ++t) {
      if (part[t] > 0) hist[t] += part[t];
    }
  }
  Pmf pmf;
  const bool exact = states <= kExactRationalLimit;
  const mpz_class denominator = total;
  for (const auto& [t, count] : hist) {
    pmf.support.push_back(t);
    mpq_class p(mpz_class(static_cast<unsigned long>(count)), denominator);
    p.canonicalize();
    pmf.probabilities.push_back(p.get_d());
    if (exact) pmf.exact.push_back(p);
  }
  return pmf;
}

}  // namespace chroma
