#include "chroma/json_io.hpp"

#include <cmath>

namespace chroma {

Json integer_json(const mpz_class& value) {
  if (mpz_fits_slong_p(value.get_mpz_t())) return static_cast<std::int64_t>(value.get_si());
  if (value > 0 && mpz_sizeinbase(value.get_mpz_t(), 2) <= 64) {
    const mpz_class high = value >> 32;
    const mpz_class low = value - (high << 32);
    return (static_cast<std::uint64_t>(high.get_ui()) << 32) | static_cast<std::uint64_t>(low.get_ui());
  }
  return value.get_str();
}

Json rational_json(const mpq_class& value) { return value.get_str(); }

namespace {

// JSON has no NaN; absent values serialize as null.
Json real(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"vertex_count", g.vertex_count()}, {"edge_count", g.edge_count()}, {"edges", edges}};
}

Json to_json(const GraphClass& cls) {
  Json out = to_json(cls.representative);
  out["canonical_form"] = cls.form.hex();
  return out;
}

Json to_json(const MomentReport& report) {
  Json overlaps = Json::array();
  for (const auto& [t, term] : report.per_t_overlap) {
    overlaps.push_back({{"t", t}, {"count", integer_json(term.count)}, {"contribution", real(term.contribution)}});
  }
  return Json{{"copies", integer_json(report.copies)},
              {"colors", report.colors},
              {"pattern_vertices", report.pattern_vertices},
              {"mean", real(report.mean)},
              {"variance", real(report.variance)},
              {"r1", real(report.r1)},
              {"r2", real(report.r2)},
              {"mean_exact", rational_json(report.mean_exact)},
              {"variance_exact", rational_json(report.variance_exact)},
              {"per_t_overlap", overlaps}};
}

Json to_json(const Pmf& pmf) {
  Json points = Json::array();
  for (std::size_t i = 0; i < pmf.support.size(); ++i) {
    points.push_back({pmf.support[i], real(pmf.probabilities[i])});
  }
  Json out{{"pmf", points}, {"tail_bound", real(pmf.tail_bound)}};
  if (!pmf.exact.empty()) {
    Json exact = Json::array();
    for (std::size_t i = 0; i < pmf.support.size(); ++i) {
      exact.push_back({pmf.support[i], rational_json(pmf.exact[i])});
    }
    out["exact"] = exact;
  }
  return out;
}

Json to_json(const PoissonMixture& mixture) {
  Json comps = Json::array();
  for (const auto& c : mixture.components) {
    comps.push_back({{"coefficient", c.coefficient}, {"rate", real(c.rate)}});
  }
  return Json{{"components", comps}, {"mean", real(mixture.mean())}};
}

Json to_json(const RegimeReport& report) {
  Json out{{"pattern", to_json(report.pattern)},
           {"balanced", report.balanced},
           {"m", rational_json(report.m)},
           {"gamma", report.gamma ? rational_json(*report.gamma) : Json(nullptr)},
           {"alpha", rational_json(report.alpha)},
           {"threshold", rational_json(report.threshold)},
           {"kappa", real(report.kappa)},
           {"lambda", real(report.lambda)},
           {"regime", regime_name(report.regime)},
           {"limit_kind", limit_kind_name(report.limit)},
           {"predicted_limit", report.predicted_limit ? to_json(*report.predicted_limit) : Json(nullptr)}};
  if (!report.note.empty()) out["note"] = report.note;
  return out;
}

Json to_json(const EmpiricalDistribution& emp) {
  Json hist = Json::array();
  for (const auto& [value, count] : emp.histogram) hist.push_back({value, count});
  Json out{{"replicates", emp.replicates},
           {"seed", emp.seed},
           {"colors", emp.colors},
           {"sample_mean", real(emp.sample_mean)},
           {"sample_variance", real(emp.sample_variance)},
           {"histogram", hist}};
  if (std::isfinite(emp.edge_probability)) out["edge_probability"] = emp.edge_probability;
  if (std::isfinite(emp.realized_lambda)) out["realized_lambda"] = emp.realized_lambda;
  return out;
}

Json to_json(const SecondMomentReport& report) {
  Json joins = Json::array();
  for (const auto& j : report.joins) {
    joins.push_back({{"t", j.t},
                     {"join", to_json(j.join)},
                     {"copies", integer_json(j.copies)},
                     {"ratio", real(j.ratio)}});
  }
  return Json{{"moments", to_json(report.moments)},
              {"epsilon", real(report.epsilon)},
              {"joins", joins},
              {"full_overlap_ratio", real(report.full_overlap_ratio)},
              {"mean_variance_close", report.mean_variance_close},
              {"joins_small", report.joins_small},
              {"overlap_small", report.overlap_small},
              {"verdict", report.poisson_consistent ? "Poisson-consistent" : "not Poisson-consistent"}};
}

Json to_json(const ColorChoice& choice) {
  return Json{{"colors", choice.colors},
              {"raw", real(choice.raw)},
              {"realized_lambda", real(choice.realized_lambda)},
              {"out_of_regime", choice.clamped}};
}

Json to_json(const JoinCatalog& catalog) {
  Json by_t = Json::array();
  for (const auto& [t, classes] : catalog.by_t) {
    Json members = Json::array();
    for (const auto& cls : classes) members.push_back(to_json(cls));
    by_t.push_back({{"t", t}, {"classes", members}});
  }
  return Json{{"pattern", to_json(catalog.pattern)}, {"joins", by_t}};
}

Json to_json(const SupergraphClasses& classes) {
  Json by_k = Json::array();
  for (const auto& [k, members] : classes.by_k) {
    Json list = Json::array();
    for (const auto& cls : members) list.push_back(to_json(cls));
    by_k.push_back({{"k", k}, {"classes", list}});
  }
  return Json{{"pattern", to_json(classes.pattern)}, {"supergraph_classes", by_k}};
}

Json to_json(const MatchResult& result) {
  Json out{{"probability", real(result.probability)},
           {"kind", "approximation"},
           {"expected_matches", real(result.expected)},
           {"cliques", integer_json(result.cliques)}};
  if (result.exact_classical) out["exact_classical"] = *result.exact_classical;
  if (!result.warning.empty()) out["warning"] = result.warning;
  return out;
}

Json to_json(const GroupSize& result) {
  Json out{{"n", result.n},
           {"probability", real(result.probability)},
           {"probability_below", real(result.probability_below)},
           {"kind", "approximation"}};
  if (result.exact_classical_n) out["exact_classical_n"] = *result.exact_classical_n;
  return out;
}

}  // namespace chroma
