#include "chroma/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "chroma/birthday.hpp"
#include "chroma/counting.hpp"
#include "chroma/generators.hpp"
#include "chroma/json_io.hpp"
#include "chroma/limit_theory.hpp"
#include "chroma/moments.hpp"
#include "chroma/simulation.hpp"

namespace chroma::cli {

namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      out.emplace_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::uint64_t to_u64(const std::string& text, const char* what) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') {
    throw ParseError(std::string("expected a nonnegative integer for ") + what + ", got '" + text + "'");
  }
  return value;
}

double to_double(const std::string& text, const char* what) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw ParseError(std::string("expected a number for ") + what + ", got '" + text + "'");
  }
  return value;
}

Graph generator(const std::string& kind, const std::string& params) {
  auto args = split(params, ',');
  auto want = [&](std::size_t count) {
    if (args.size() != count) {
      throw ParseError("generator '" + kind + "' takes " + std::to_string(count) + " parameter(s)");
    }
  };
  try {
    if (kind == "complete") return want(1), complete_graph(to_u64(args[0], "complete"));
    if (kind == "cycle") return want(1), cycle_graph(to_u64(args[0], "cycle"));
    if (kind == "path") return want(1), path_graph(to_u64(args[0], "path"));
    if (kind == "star") return want(1), star_graph(to_u64(args[0], "star"));
    if (kind == "wheel") return want(1), wheel_graph(to_u64(args[0], "wheel"));
    if (kind == "multipartite") {
      std::vector<std::size_t> parts;
      for (const auto& a : args) parts.push_back(to_u64(a, "multipartite"));
      return complete_multipartite(parts);
    }
    if (kind == "er") {
      want(3);
      return erdos_renyi(to_u64(args[0], "er n"), to_double(args[1], "er p"), to_u64(args[2], "er seed"));
    }
    if (kind == "pyramid") return want(2), pyramid(named_graph(args[0]), to_u64(args[1], "pyramid"));
    if (kind == "counterexample") {
      want(3);
      return counterexample_graph(named_graph(args[0]), to_u64(args[1], "counterexample n"),
                                  to_double(args[2], "counterexample lambda"));
    }
    if (kind == "copies") return want(2), disjoint_copies(named_graph(args[0]), to_u64(args[1], "copies"));
  } catch (const std::invalid_argument& e) {
    throw ParseError("generator '" + kind + "': " + e.what());
  }
  throw ParseError("unknown generator: " + kind);
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::ostringstream out;
  out << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

// path,value rows; values go through the JSON serializer so numbers match exactly.
void flatten(const Json& node, const std::string& path, std::ostream& out) {
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it) {
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    }
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "." + std::to_string(i), out);
  } else {
    std::string value = node.is_string() ? node.get<std::string>() : node.dump();
    if (value.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char ch : value) {
        if (ch == '"') quoted += '"';
        quoted += ch;
      }
      value = quoted + "\"";
    }
    out << path << ',' << value << '\n';
  }
}

struct Options {
  std::string pattern;
  std::string graph;
  std::string output;
  std::string format = "json";
  std::string alpha;
  std::string compare;
  std::string shape = "complete";
  std::uint64_t colors = 0;
  std::uint64_t replicates = 10000;
  std::uint64_t upto = 0;
  std::uint64_t n = 0;
  std::uint64_t types = 0;
  std::uint64_t c = 0;
  int s = 0;
  double kappa = 1.0;
  double lambda = 1.0;
  double p = kUnset;
  double epsilon = 0.05;
  double target = kUnset;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  bool no_meta = false;
};

Graph need_pattern(const Options& o) {
  if (o.pattern.empty()) throw UsageError("--pattern is required");
  return parse_graph_spec(o.pattern);
}

Graph need_graph(const Options& o) {
  if (o.graph.empty()) throw UsageError("--graph is required");
  return parse_graph_spec(o.graph);
}

std::uint64_t need_colors(const Options& o) {
  if (o.colors == 0) throw UsageError("--colors is required and must be positive");
  return o.colors;
}

Json host_summary(const Graph& g) {
  return Json{{"vertex_count", g.vertex_count()}, {"edge_count", g.edge_count()}};
}

std::uint64_t auto_upto(const PoissonMixture& m) {
  double var = 0;
  for (const auto& c : m.components) var += static_cast<double>(c.coefficient * c.coefficient) * c.rate;
  return static_cast<std::uint64_t>(std::ceil(m.mean() + 12.0 * std::sqrt(var) + 10.0));
}

Json cmd_count(const Options& o) {
  const Graph h = need_pattern(o);
  const Graph g = need_graph(o);
  return Json{{"pattern", to_json(h)},
              {"host", host_summary(g)},
              {"copies", integer_json(count_copies(h, g, o.threads))},
              {"induced_copies", integer_json(count_induced_copies(h, g, o.threads))},
              {"injective_homs", integer_json(count_injective_homs(h, g, o.threads))},
              {"automorphisms", integer_json(automorphism_count(h))}};
}

Json cmd_joins(const Options& o) {
  const Graph h = need_pattern(o);
  Json out{{"pattern", to_json(h)}};
  out["joins"] = h.vertex_count() >= 3 ? to_json(enumerate_t_joins(h))["joins"] : Json::array();
  out["supergraph_classes"] = to_json(enumerate_supergraph_classes(h))["supergraph_classes"];
  return out;
}

Json cmd_moments(const Options& o) {
  const Graph h = need_pattern(o);
  const Graph g = need_graph(o);
  return to_json(variance_T(h, g, need_colors(o), o.threads));
}

Json cmd_exact(const Options& o) {
  const Graph h = need_pattern(o);
  const Graph g = need_graph(o);
  const Pmf pmf = exact_distribution_T(h, g, need_colors(o), o.threads);
  Json out = to_json(pmf);
  out["mean"] = pmf.mean();
  out["variance"] = pmf.variance();
  return out;
}

Json cmd_classify(const Options& o) {
  const Graph h = need_pattern(o);
  if (o.alpha.empty()) throw UsageError("--alpha is required");
  return to_json(classify_er_regime(h, parse_rational(o.alpha), o.kappa, o.lambda));
}

Json cmd_limit(const Options& o) {
  const Graph h = need_pattern(o);
  PoissonMixture mixture;
  Json out;
  if (!o.graph.empty()) {
    mixture = sequence_mixture(h, parse_graph_spec(o.graph), need_colors(o), o.threads);
    out["kind"] = "sequence";
  } else {
    if (std::isnan(o.p)) throw UsageError("limit needs --p (dense) or --graph with --colors (sequence)");
    mixture = dense_mixture(h, o.p, o.lambda);
    out["kind"] = "dense";
  }
  out["mixture"] = to_json(mixture);
  out["distribution"] = to_json(mixture_pmf(mixture, o.upto > 0 ? o.upto : auto_upto(mixture)));
  return out;
}

Json cmd_simulate(const Options& o, std::uint64_t seed) {
  const Graph h = need_pattern(o);
  EmpiricalDistribution emp;
  Json out;
  if (!o.graph.empty()) {
    emp = monte_carlo(h, parse_graph_spec(o.graph), need_colors(o), o.replicates, seed, o.threads);
    out["kind"] = "fixed_host";
  } else {
    if (o.n == 0 || o.alpha.empty()) throw UsageError("simulate needs --graph, or --n with --alpha");
    emp = monte_carlo_er(h, o.n, parse_rational(o.alpha), o.kappa, o.lambda, o.replicates, seed,
                         o.threads);
    out["kind"] = "erdos_renyi";
  }
  out["empirical"] = to_json(emp);
  const std::uint64_t observed_max = emp.histogram.empty() ? 0 : emp.histogram.rbegin()->first;
  auto compare = [&](const PoissonMixture& m) {
    const std::uint64_t upto = o.upto > 0 ? o.upto : std::max(observed_max, auto_upto(m));
    return Json{{"mixture", to_json(m)}, {"upto", upto}, {"tv_distance", tv_distance(emp, mixture_pmf(m, upto))}};
  };
  if (!o.compare.empty()) out["comparison"] = compare(parse_mixture(o.compare));
  if (std::isfinite(emp.realized_lambda)) {
    out["poisson_realized"] = compare(PoissonMixture{{{1, emp.realized_lambda}}});
  }
  return out;
}

Json cmd_check(const Options& o) {
  const Graph h = need_pattern(o);
  const Graph g = need_graph(o);
  return to_json(check_second_moment(h, g, need_colors(o), o.epsilon, o.threads));
}

Json cmd_birthday(const Options& o) {
  if (o.s < 2) throw UsageError("--s must be at least 2");
  if (o.c < 2) throw UsageError("--c must be at least 2");
  BirthdayShape shape;
  if (o.shape == "complete") {
    shape = BirthdayShape::complete(o.n);
  } else if (o.shape == "multipartite") {
    if (o.types == 0) throw UsageError("--types is required for the multipartite shape");
    shape = BirthdayShape::multipartite(o.types, o.n);
  } else if (o.shape == "graph") {
    shape = BirthdayShape::explicit_graph(need_graph(o));
  } else {
    throw UsageError("unknown shape: " + o.shape);
  }
  Json out{{"shape", shape.name()}, {"s", o.s}, {"c", o.c}};
  if (shape.kind == BirthdayShape::Kind::multipartite) out["types"] = o.types;
  if (!std::isnan(o.target)) {
    out["target"] = o.target;
    out["min_group_size"] = to_json(min_group_size(shape, o.s, o.c, o.target));
  } else {
    if (shape.kind != BirthdayShape::Kind::graph && o.n == 0) {
      throw UsageError("birthday needs --n or --target");
    }
    out["n"] = shape.n;
    out["match"] = to_json(match_probability(shape, o.s, o.c));
  }
  return out;
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv(kSeedEnvVar); env && *env) return to_u64(env, kSeedEnvVar);
  return kDefaultSeed;
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  const auto fail = [&] { return ParseError("not a rational number: '" + s + "'"); };
  if (s.empty()) throw fail();
  mpq_class q;
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t places = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || s.find('/') != std::string::npos) throw fail();
    mpz_class num;
    if (num.set_str(digits, 10) != 0) throw fail();
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, places);
    q = mpq_class(num, den);
  } else {
    if (q.set_str(s, 10) != 0) throw fail();
    if (q.get_den() == 0) throw fail();
  }
  q.canonicalize();
  return q;
}

PoissonMixture parse_mixture(std::string_view text) {
  PoissonMixture m;
  for (const auto& item : split(text, ',')) {
    auto parts = split(item, ':');
    if (parts.size() != 2) throw ParseError("mixture components look like k:rate, got '" + item + "'");
    const std::uint64_t k = to_u64(parts[0], "mixture coefficient");
    const double rate = parse_rational(parts[1]).get_d();
    if (k == 0 || rate < 0) throw ParseError("mixture needs positive coefficients and nonnegative rates");
    m.components.push_back({k, rate});
  }
  m.normalize();
  return m;
}

Graph parse_graph_spec(const std::string& spec) {
  if (spec.empty()) throw ParseError("empty graph spec");
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) return read_edge_list_file(spec);
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    const std::string params = spec.substr(colon + 1);
    if (kind == "union") {
      std::vector<Graph> parts;
      for (const auto& part : split(params, ';')) parts.push_back(parse_graph_spec(part));
      return disjoint_union(parts);
    }
    return generator(kind, params);
  }
  try {
    return named_graph(spec);
  } catch (const ParseError&) {
    throw ParseError("'" + spec + "' is not a readable file, generator, or pattern name");
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monochromatic subgraph statistics under uniform random colorings"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads, "worker threads (0 = all cores)");
    sub->add_option("--output", o.output, "write the report to this file");
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--no-meta", o.no_meta, "omit the timestamp block");
  };
  auto add_pattern = [&](CLI::App* sub) { sub->add_option("--pattern", o.pattern, "pattern name or edge list"); };
  auto add_graph = [&](CLI::App* sub) { sub->add_option("--graph", o.graph, "host: file, generator, or name"); };
  auto add_colors = [&](CLI::App* sub) { sub->add_option("--colors", o.colors, "number of colors c"); };

  auto* count = app.add_subcommand("count", "copies, induced copies, injective homomorphisms, |Aut|");
  auto* joins = app.add_subcommand("joins", "t-join catalog and supergraph classes of a pattern");
  auto* moments = app.add_subcommand("moments", "exact mean and variance decomposition of T");
  auto* exact = app.add_subcommand("exact-dist", "exact law of T by enumerating colorings");
  auto* classify = app.add_subcommand("classify", "Erdos-Renyi regime of p = kappa n^-alpha");
  auto* limit = app.add_subcommand("limit", "dense or finite-host Poisson mixture and its pmf");
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo law of T");
  auto* check = app.add_subcommand("check", "second-moment diagnostics");
  auto* birthday = app.add_subcommand("birthday", "generalized birthday problem");

  for (auto* sub : {count, joins, moments, exact, classify, limit, simulate, check, birthday}) add_common(sub);
  for (auto* sub : {count, joins, moments, exact, classify, limit, simulate, check}) add_pattern(sub);
  for (auto* sub : {count, moments, exact, limit, simulate, check, birthday}) add_graph(sub);
  for (auto* sub : {moments, exact, limit, simulate, check}) add_colors(sub);

  for (auto* sub : {classify, simulate}) {
    sub->add_option("--alpha", o.alpha, "exponent alpha as a/b");
    sub->add_option("--kappa", o.kappa, "prefactor kappa");
  }
  for (auto* sub : {classify, limit, simulate}) sub->add_option("--lambda", o.lambda, "target mean");
  limit->add_option("--p", o.p, "fixed edge probability for the dense mixture");
  for (auto* sub : {limit, simulate}) sub->add_option("--upto", o.upto, "largest value in the pmf");
  simulate->add_option("--replicates", o.replicates, "number of replicates");
  simulate->add_option("--seed", o.seed, "random seed (default 1729 or $CHROMA_SEED)");
  simulate->add_option("--compare", o.compare, "mixture k:rate,... for a TV comparison");
  simulate->add_option("--n", o.n, "G(n,p) host size");
  check->add_option("--epsilon", o.epsilon, "tolerance for the verdict");
  birthday->add_option("--shape", o.shape, "complete, multipartite or graph")
      ->check(CLI::IsMember({"complete", "multipartite", "graph"}));
  birthday->add_option("--s", o.s, "clique size");
  birthday->add_option("--c", o.c, "number of days");
  birthday->add_option("--target", o.target, "probability to reach");
  birthday->add_option("--types", o.types, "number of types (multipartite)");
  birthday->add_option("--n", o.n, "people, or people per type");

  std::vector<const char*> argv{"chroma"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, err);
    out << help.str();
    return code == 0 ? 0 : 1;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  Json doc{{"schema", 1}, {"command", name}};
  try {
    const std::uint64_t seed = resolve_seed(o);
    Json params = Json::object();
    for (const CLI::Option* opt : chosen->get_options()) {
      const std::string flag = opt->get_name();
      if (opt->count() == 0 || flag == "--help" || flag == "--no-meta" || flag == "--output" || flag == "--threads") {
        continue;
      }
      const auto& results = opt->results();
      params[flag.substr(2)] = results.empty() ? Json(true) : Json(results.back());
    }
    if (name == "simulate") params["seed"] = seed;
    doc["parameters"] = params;

    Json result;
    if (name == "count") result = cmd_count(o);
    else if (name == "joins") result = cmd_joins(o);
    else if (name == "moments") result = cmd_moments(o);
    else if (name == "exact-dist") result = cmd_exact(o);
    else if (name == "classify") result = cmd_classify(o);
    else if (name == "limit") result = cmd_limit(o);
    else if (name == "simulate") result = cmd_simulate(o, seed);
    else if (name == "check") result = cmd_check(o);
    else result = cmd_birthday(o);
    doc["result"] = std::move(result);
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  if (!o.no_meta) {
    doc["meta"] = Json{{"generated_at", timestamp()}, {"threads", o.threads}};
  }

  std::ostringstream text;
  if (o.format == "csv") {
    text << "path,value\n";
    flatten(doc, "", text);
  } else {
    text << doc.dump(2) << '\n';
  }
  if (o.output.empty()) {
    out << text.str();
  } else {
    std::ofstream file(o.output);
    if (!file) {
      err << "error: cannot write " << o.output << '\n';
      return 1;
    }
    file << text.str();
  }
  return 0;
}

}  // namespace chroma::cli
