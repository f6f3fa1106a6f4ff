#include "cli.hpp"

#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cardguess/correlation.hpp"
#include "cardguess/enumeration.hpp"
#include "cardguess/errors.hpp"
#include "cardguess/exact.hpp"
#include "cardguess/limit_laws.hpp"
#include "cardguess/models.hpp"
#include "cardguess/moments.hpp"
#include "cardguess/phi.hpp"
#include "cardguess/series.hpp"
#include "cardguess/simulate.hpp"
#include "cardguess/version.hpp"

namespace cardguess::cli {

namespace {

using nlohmann::json;

json decimal(double x) { return round_significant(x, 12); }
json decimal(const Rational& q) { return decimal(to_double(q)); }

// Rows for --format csv; JSON output carries the same data in `result`.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

struct Output {
  json result = json::object();
  Table table;
  bool verified = true;
  std::optional<std::uint64_t> seed;
};

std::string csv_cell(const json& v) {
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
  }
  return v.dump();
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }
}

// ---- payload builders -------------------------------------------------------

Output pmf_output(const DiscretePMF& pmf, const std::string& variable) {
  Output o;
  json exact = json::object();
  json dec = json::object();
  o.table.columns = {variable, "exact", "decimal"};
  for (const auto& [v, q] : pmf.masses()) {
    exact[std::to_string(v)] = to_string(q);
    dec[std::to_string(v)] = decimal(q);
    o.table.rows.push_back({v, to_string(q), decimal(q)});
  }
  o.result = {{"exact", exact}, {"decimal", dec}, {"variable", variable}};
  return o;
}

Output joint_output(const JointPMF& pmf) {
  Output o;
  json exact = json::object();
  json dec = json::object();
  o.table.columns = {"W", "T", "exact", "decimal"};
  for (const auto& [key, q] : pmf.masses()) {
    const std::string name = std::to_string(key.first) + "," + std::to_string(key.second);
    exact[name] = to_string(q);
    dec[name] = decimal(q);
    o.table.rows.push_back({key.first, key.second, to_string(q), decimal(q)});
  }
  o.result = {{"exact", exact}, {"decimal", dec}, {"variables", "W,T"}};
  return o;
}

json exact_pair(const Rational& q) { return {{"exact", to_string(q)}, {"decimal", decimal(q)}}; }

struct Checks {
  json list = json::array();
  bool ok = true;

  void add(const std::string& name, std::int64_t cases, std::int64_t failures) {
    list.push_back({{"check", name}, {"cases", cases}, {"failures", failures}});
    ok = ok && failures == 0;
  }

  Output finish(json extra = json::object()) const {
    Output o;
    o.result = std::move(extra);
    o.result["checks"] = list;
    o.result["status"] = ok ? "all equal" : "mismatch";
    o.table.columns = {"check", "cases", "failures"};
    for (const auto& c : list) o.table.rows.push_back({c["check"], c["cases"], c["failures"]});
    o.verified = ok;
    return o;
  }
};

std::vector<DeckComposition> decks_up_to(int max_total) {
  std::vector<DeckComposition> out;
  for (int total = 1; total <= max_total; ++total)
    for (int m2 = 0; 2 * m2 <= total; ++m2) out.emplace_back(total - m2, m2);
  return out;
}

// Values below `lo` are domain errors, values above the cap `hi` are refused.
void require_range(const std::string& flag, std::int64_t value, std::int64_t lo, std::int64_t hi) {
  const std::string message = flag + " must lie in [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "], got " + std::to_string(value);
  if (value < lo) throw DomainError(message);
  if (value > hi) throw ResourceLimitError(message);
}

// ---- commands ---------------------------------------------------------------

struct DeckArgs {
  int m1 = 0;
  int m2 = 0;
  DeckComposition deck() const { return {m1, m2}; }
};

void add_deck_options(CLI::App* cmd, DeckArgs& d) {
  cmd->add_option("--m1", d.m1, "Majority colour count")->required();
  cmd->add_option("--m2", d.m2, "Minority colour count")->required();
}

Output run_pmf(const std::string& kind, const DeckArgs& d) {
  const auto deck = d.deck();
  if (kind == "joint") return joint_output(joint_pmf_WT(deck));
  if (kind == "T") return pmf_output(marginal_T(deck), "T");
  if (kind == "W") return pmf_output(marginal_W(deck), "W");
  if (kind == "L") return pmf_output(pmf_L(deck), "L");
  if (kind == "P") return pmf_output(pmf_P_from_W(deck), "P");
  return pmf_output(pmf_C(deck), "C");
}

Output run_cdf(const std::string& kind, const DeckArgs& d, int k, int l) {
  const auto deck = d.deck();
  const Rational value = kind == "joint" ? joint_cdf_WT(deck, k, l) : one_sided_cdf_WT(deck, k, l);
  Output o;
  o.result = exact_pair(value);
  o.result["event"] = kind == "joint" ? "W<=k,T<=l" : "W<=k,T=l";
  o.table.columns = {"k", "l", "exact", "decimal"};
  o.table.rows.push_back({k, l, to_string(value), decimal(value)});
  return o;
}

Output run_moments(const DeckArgs& d, int max_order) {
  require_range("--order", max_order, 1, 12);
  const auto deck = d.deck();
  const bool balanced = deck.m1() == deck.m2() && deck.m1() >= 1;
  Output o;
  json rows = json::array();
  o.table.columns = {"s", "factorial_W", "factorial_W_decimal", "factorial_Chat",
                     "factorial_Chat_decimal", "raw_Chat", "raw_Chat_decimal"};
  if (balanced) {
    o.table.columns.push_back("asymptotic");
    o.table.columns.push_back("ratio");
  }
  for (int s = 1; s <= max_order; ++s) {
    const Rational fw = factorial_moment_W(deck, s);
    const Rational fc = factorial_moment_Chat(deck, s);
    const Rational rc = raw_moment_Chat(deck, s);
    json row = {{"s", s},
                {"factorial_W", exact_pair(fw)},
                {"factorial_Chat", exact_pair(fc)},
                {"raw_Chat", exact_pair(rc)}};
    std::vector<json> cells = {s, to_string(fw), decimal(fw), to_string(fc), decimal(fc),
                               to_string(rc), decimal(rc)};
    if (balanced) {
      const double asym = asym_raw_moment_Chat_equal(deck.m1(), s);
      const double ratio = to_double(rc) / asym;
      row["asymptotic"] = decimal(asym);
      row["ratio"] = decimal(ratio);
      cells.push_back(decimal(asym));
      cells.push_back(decimal(ratio));
    }
    rows.push_back(row);
    o.table.rows.push_back(cells);
  }
  o.result = {{"moments", rows}};
  return o;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  const char* env = std::getenv(kSeedEnvironmentVariable);
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const std::string text(env);
    const auto value = std::stoull(text, &used, 10);
    if (used != text.size() || text.front() == '-') throw std::invalid_argument("trailing");
    return value;
  } catch (const std::exception&) {
    throw CLI::ValidationError(std::string(kSeedEnvironmentVariable) +
                               " must be an unsigned 64-bit integer");
  }
}

Output run_simulate(const DeckArgs& d, std::uint64_t trials, std::uint64_t seed,
                    std::uint32_t streams, unsigned threads, std::size_t budget_mb) {
  SimulationConfig cfg{d.deck(), trials, seed, streams};
  cfg.threads = threads;
  cfg.memory_budget = budget_mb << 20;
  const auto r = simulate_many(cfg);
  Output o;
  o.seed = seed;
  const auto counts = [](const std::map<std::int64_t, std::uint64_t>& m) {
    json j = json::object();
    for (const auto& [v, c] : m) j[std::to_string(v)] = c;
    return j;
  };
  const auto means = r.means();
  json wt = json::object();
  for (const auto& [key, c] : r.counts_WT())
    wt[std::to_string(key.first) + "," + std::to_string(key.second)] = c;
  o.result = {{"trials", r.trials},
              {"streams", streams},
              {"invariants_held", r.invariants_held},
              {"counts",
               {{"T", counts(r.counts_T())},
                {"L", counts(r.counts_L())},
                {"P", counts(r.counts_P())},
                {"W", counts(r.counts_W())},
                {"C", counts(r.counts_C())},
                {"W,T", wt}}},
              {"means",
               {{"T", decimal(means.t)},
                {"L", decimal(means.l)},
                {"P", decimal(means.p)},
                {"W", decimal(means.w)},
                {"C", decimal(means.c)}}}};
  o.table.columns = {"t", "l", "p", "w", "c", "count"};
  for (const auto& [g, c] : r.table) o.table.rows.push_back({g.t, g.l, g.p, g.w, g.c, c});
  return o;
}

struct RegimeArgs {
  std::string name;
  std::optional<double> rho;
  std::optional<double> alpha;
  std::optional<int> fixed_m2;
  RegimeSpec spec() const { return RegimeSpec::from_name(name, rho, alpha, fixed_m2); }
};

void add_regime_options(CLI::App* cmd, RegimeArgs& r) {
  cmd->add_option("--regime", r.name, "Regime tag")->required()->check(
      CLI::IsMember(regime_names()));
  cmd->add_option("--rho", r.rho, "Ratio parameter (T-linear, W-linear, joint-central)");
  cmd->add_option("--alpha", r.alpha, "Scaled difference (W-near-diagonal-alpha)");
  cmd->add_option("--fixed-m2", r.fixed_m2, "Minority count (T-fixed-m2)");
}

Output run_limits_law(const RegimeArgs& args, int points, double x_max) {
  require_range("--points", points, 2, 100000);
  const auto regime = args.spec();
  Output o;
  o.result["regime"] = regime.name();
  if (regime.family() == RegimeFamily::JointCentral) {
    const double rho = *regime.rho();
    json rows = json::array();
    o.table.columns = {"k", "l", "pmf"};
    for (int k = 0; k < points; ++k)
      for (int l = 1; l <= points; ++l) {
        const double p = joint_limit_pmf(rho, k, l);
        rows.push_back({{"k", k}, {"l", l}, {"pmf", decimal(p)}});
        o.table.rows.push_back({k, l, decimal(p)});
      }
    o.result["description"] = "joint law of (W, T)";
    o.result["discrete"] = true;
    o.result["points"] = rows;
    return o;
  }
  const auto law = limit_law(regime);
  o.result["description"] = law.description;
  o.result["discrete"] = law.discrete();
  json rows = json::array();
  if (law.discrete()) {
    const int first = regime.about_T() ? 1 : 0;
    o.table.columns = {"x", "pmf", "cdf"};
    for (int i = 0; i < points; ++i) {
      const int x = first + i;
      const double p = (*law.pmf)(x);
      const double c = law.cdf(x);
      rows.push_back({{"x", x}, {"pmf", decimal(p)}, {"cdf", decimal(c)}});
      o.table.rows.push_back({x, decimal(p), decimal(c)});
    }
  } else {
    if (!(x_max > 0.0)) throw DomainError("--x-max must be positive");
    o.table.columns = {"x", "cdf"};
    for (int i = 0; i < points; ++i) {
      const double x = x_max * i / (points - 1);
      const double c = law.cdf(x);
      rows.push_back({{"x", decimal(x)}, {"cdf", decimal(c)}});
      o.table.rows.push_back({decimal(x), decimal(c)});
    }
  }
  o.result["points"] = rows;
  return o;
}

Output run_limits_distance(const RegimeArgs& args, const std::vector<int>& m1s,
                           const std::vector<int>& m2s, bool independence) {
  if (m1s.size() != m2s.size()) throw CLI::ValidationError("--m1 and --m2 need equal lengths");
  const auto regime = args.spec();
  Output o;
  json rows = json::array();
  o.table.columns = {"m1", "m2", "distance", "ratio", "scaled_difference",
                     "relative_difference"};
  if (independence) o.table.columns.push_back("independence");
  for (std::size_t i = 0; i < m1s.size(); ++i) {
    const DeckComposition deck(m1s[i], m2s[i]);
    require_range("m1 + m2", deck.total(), 0, 1'000'000);
    const double dist = convergence_distance(deck, regime);
    const auto diag = regime_diagnostics(deck);
    json row = {{"m1", deck.m1()},
                {"m2", deck.m2()},
                {"distance", decimal(dist)},
                {"ratio", decimal(diag.ratio)},
                {"scaled_difference", decimal(diag.scaled_difference)},
                {"relative_difference", decimal(diag.relative_difference)}};
    std::vector<json> cells = {deck.m1(), deck.m2(), decimal(dist), decimal(diag.ratio),
                               decimal(diag.scaled_difference),
                               decimal(diag.relative_difference)};
    if (independence) {
      const double ind = independence_distance(deck);
      row["independence"] = decimal(ind);
      cells.push_back(decimal(ind));
    }
    rows.push_back(row);
    o.table.rows.push_back(cells);
  }
  o.result = {{"regime", regime.name()}, {"sequence", rows}};
  return o;
}

Output run_correlate_curve(int points) {
  require_range("--points", points, 2, 1'000'000);
  Output o;
  json rows = json::array();
  o.table.columns = {"rho", "correlation"};
  for (const auto& [rho, c] : correlation_curve(points)) {
    rows.push_back({{"rho", decimal(rho)}, {"correlation", decimal(c)}});
    o.table.rows.push_back({decimal(rho), decimal(c)});
  }
  o.result = {{"curve", rows}};
  return o;
}

Output run_correlate_min() {
  const auto m = min_correlation();
  Output o;
  o.result = {{"rho", decimal(m.rho)},
              {"correlation", decimal(m.correlation)},
              {"kappa_at_root", m.kappa_at_root}};
  o.table.columns = {"rho", "correlation", "kappa_at_root"};
  o.table.rows.push_back({decimal(m.rho), decimal(m.correlation), m.kappa_at_root});
  return o;
}

Output run_verify_oracles(int max_total, int enum_cap, int series_max_m1) {
  require_range("--enum-cap", enum_cap, 0, kHardEnumerationCap);
  require_range("--max-total", max_total, 1, enum_cap);
  require_range("--series-max-m1", series_max_m1, 0, kDefaultSeriesMaxM1);
  Checks checks;
  const auto decks = decks_up_to(max_total);
  const auto table = phi_table(std::max(max_total, 2 * series_max_m1));

  std::int64_t enum_fail = 0, phi_fail = 0, marg_fail = 0, c_fail = 0;
  for (const auto& deck : decks) {
    const auto joint = joint_pmf_WT(deck);
    const auto law = enumerate_decks(deck, enum_cap);
    if (counter_law_WT(law) != joint || counter_law_C(law) != pmf_C(deck) ||
        counter_law_P(law) != pmf_P_from_W(deck) || counter_law_L(law) != pmf_L(deck))
      ++enum_fail;
    if (phi_joint_WT(table[deck.m1()][deck.m2()], deck) != joint) ++phi_fail;
    if (joint.first_marginal() != marginal_W(deck) || joint.second_marginal() != marginal_T(deck))
      ++marg_fail;
    if (pmf_C(deck) != pmf_P_from_W(deck).shifted(deck.m1())) ++c_fail;
  }
  const auto n = static_cast<std::int64_t>(decks.size());
  checks.add("enumeration", n, enum_fail);
  checks.add("phi-recurrence", n, phi_fail);
  checks.add("marginals", n, marg_fail);
  checks.add("binomial-mixture", n, c_fail);

  std::int64_t series_cases = 0, series_fail = 0;
  if (series_max_m1 >= 1) {
    const auto fhat = series_Fhat(series_max_m1);
    for (int m1 = 1; m1 <= series_max_m1; ++m1)
      for (int m2 = 0; m2 <= m1; ++m2) {
        ++series_cases;
        const auto& phi = table[m1][m2];
        bool ok = true;
        for (int l = 0; l <= series_max_m1 && ok; ++l)
          for (int k = 0; k <= series_max_m1 && ok; ++k) {
            Rational expected = 0;
            for (const auto& [mono, c] : phi.terms())
              if (mono.u2 == l && mono.w == k) expected += c;
            ok = fhat_coefficient(fhat, m1, m2, l, k) == expected;
          }
        series_fail += !ok;
      }
  }
  checks.add("series", series_cases, series_fail);
  return checks.finish({{"max_total", max_total}, {"series_max_m1", series_max_m1}});
}

Output run_verify_bijections(int max_total, int cap) {
  require_range("--cap", cap, 0, kHardModelCap);
  require_range("--max-total", max_total, 1, cap);
  Checks checks;
  std::int64_t urn_fail = 0, walk_fail = 0, mirror_fail = 0;
  const auto decks = decks_up_to(max_total);
  for (const auto& deck : decks) {
    const auto w = marginal_W(deck);
    urn_fail += urn_equality_dist(deck, cap) != w;
    walk_fail += dyck_return_dist(deck.total(), deck.m2() - deck.m1(), cap) != w;
    mirror_fail += !mirror_fiber_check(deck, cap).ok();
  }
  const auto n = static_cast<std::int64_t>(decks.size());
  checks.add("urn-equality", n, urn_fail);
  checks.add("walk-returns", n, walk_fail);
  checks.add("mirror-fibers", n, mirror_fail);
  return checks.finish({{"max_total", max_total}});
}

Output run_verify_local_limit(int max_m) {
  require_range("--max-m", max_m, 2, 2000);
  Checks checks;
  std::int64_t cases = 0, fail = 0, misprint_agrees = 0;
  for (int m = 2; m <= max_m; ++m) {
    const auto w = marginal_W({m, m});
    for (int k = 1; k <= m; ++k) {
      ++cases;
      fail += balanced_W_mass(m, k) != w.mass(k);
      misprint_agrees += balanced_W_mass_misprinted(m, k) == w.mass(k);
    }
  }
  checks.add("lower-index-m-1", cases, fail);
  return checks.finish({{"max_m", max_m},
                        {"lower_index_m_minus_2_agreements", misprint_agrees},
                        {"cases", cases}});
}

json parameters_of(const CLI::App& app) {
  json p = json::object();
  for (const CLI::App* sub = &app; sub != nullptr;) {
    for (const CLI::Option* opt : sub->get_options()) {
      if (opt->count() == 0 || opt->get_name() == "--help" || opt->get_name() == "-h") continue;
      std::string name = opt->get_single_name();
      const auto& results = opt->results();
      if (name == "format") continue;
      p[name] = results.size() == 1 ? json(results.front()) : json(results);
    }
    const auto subs = sub->get_subcommands();
    sub = subs.empty() ? nullptr : subs.front();
  }
  return p;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact laws, moments, limits and simulations for two-colour card guessing",
               "cardguess"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  DeckArgs deck;
  std::function<Output()> action;
  std::string command;

  auto* pmf = app.add_subcommand("pmf", "Exact probability mass functions");
  std::string pmf_kind;
  pmf->add_option("kind", pmf_kind, "joint|T|W|L|P|C")
      ->required()
      ->check(CLI::IsMember({"joint", "T", "W", "L", "P", "C"}));
  add_deck_options(pmf, deck);
  pmf->callback([&] {
    command = "pmf " + pmf_kind;
    action = [&] { return run_pmf(pmf_kind, deck); };
  });

  auto* cdf = app.add_subcommand("cdf", "Closed-form joint CDFs of (W, T)");
  std::string cdf_kind;
  int cdf_k = 0, cdf_l = 0;
  cdf->add_option("kind", cdf_kind, "joint|one-sided")
      ->required()
      ->check(CLI::IsMember({"joint", "one-sided"}));
  add_deck_options(cdf, deck);
  cdf->add_option("--k", cdf_k, "Bound on W")->required();
  cdf->add_option("--l", cdf_l, "Bound on (or value of) T")->required();
  cdf->callback([&] {
    command = "cdf " + cdf_kind;
    action = [&] { return run_cdf(cdf_kind, deck, cdf_k, cdf_l); };
  });

  auto* moments = app.add_subcommand("moments", "Factorial and raw moments of W and C - m1");
  int order = 4;
  add_deck_options(moments, deck);
  moments->add_option("--order", order, "Highest order s")->capture_default_str();
  moments->callback([&] {
    command = "moments";
    action = [&] { return run_moments(deck, order); };
  });

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo play-throughs");
  std::uint64_t trials = 100000;
  std::optional<std::uint64_t> seed_flag;
  std::uint32_t streams = 1;
  unsigned threads = 0;
  std::size_t budget_mb = kDefaultSimulationMemoryBudget >> 20;
  add_deck_options(simulate, deck);
  simulate->add_option("--trials", trials, "Number of play-throughs")->capture_default_str();
  simulate->add_option("--seed", seed_flag,
                       std::string("Seed (default: $") + kSeedEnvironmentVariable + " or 0)");
  simulate->add_option("--streams", streams, "Independent substreams")->capture_default_str();
  simulate->add_option("--threads", threads, "Worker threads, 0 = all cores");
  simulate->add_option("--memory-mb", budget_mb, "Count-table memory budget")
      ->capture_default_str();
  simulate->callback([&] {
    command = "simulate";
    action = [&] {
      return run_simulate(deck, trials, resolve_seed(seed_flag), streams, threads, budget_mb);
    };
  });

  auto* limits = app.add_subcommand("limits", "Limit laws and convergence distances");
  limits->require_subcommand(1);
  RegimeArgs regime;
  auto* law = limits->add_subcommand("law", "Tabulate a limit law");
  int law_points = 51;
  double x_max = 5.0;
  add_regime_options(law, regime);
  law->add_option("--points", law_points, "Grid size")->capture_default_str();
  law->add_option("--x-max", x_max, "Right end of the grid (continuous laws)")
      ->capture_default_str();
  law->callback([&] {
    command = "limits law";
    action = [&] { return run_limits_law(regime, law_points, x_max); };
  });
  auto* distance = limits->add_subcommand("distance", "Distance of the exact law to its limit");
  std::vector<int> m1s, m2s;
  bool independence = false;
  add_regime_options(distance, regime);
  distance->add_option("--m1", m1s, "Majority counts (comma separated)")
      ->required()
      ->delimiter(',');
  distance->add_option("--m2", m2s, "Minority counts (comma separated)")
      ->required()
      ->delimiter(',');
  distance->add_flag("--independence", independence,
                     "Also report the distance of (W, T) to the product of its marginals");
  distance->callback([&] {
    command = "limits distance";
    action = [&] { return run_limits_distance(regime, m1s, m2s, independence); };
  });

  auto* correlate = app.add_subcommand("correlate", "Correlation of the joint limit");
  correlate->require_subcommand(1);
  auto* curve = correlate->add_subcommand("curve", "(rho, C_rho) on an even grid");
  int curve_points = 101;
  curve->add_option("--points", curve_points, "Grid size")->capture_default_str();
  curve->callback([&] {
    command = "correlate curve";
    action = [&] { return run_correlate_curve(curve_points); };
  });
  auto* minimum = correlate->add_subcommand("min", "Minimising ratio and correlation");
  minimum->callback([&] {
    command = "correlate min";
    action = [&] { return run_correlate_min(); };
  });

  auto* verify = app.add_subcommand("verify", "Cross-check closed forms against oracles");
  verify->require_subcommand(1);
  auto* oracles = verify->add_subcommand("oracles", "Enumeration, recurrence and series");
  int oracle_total = 10, enum_cap = kDefaultEnumerationCap, series_m1 = 8;
  oracles->add_option("--max-total", oracle_total, "Largest m1 + m2")->capture_default_str();
  oracles->add_option("--enum-cap", enum_cap, "Enumeration size cap")->capture_default_str();
  oracles->add_option("--series-max-m1", series_m1, "Largest m1 read from the series")
      ->capture_default_str();
  oracles->callback([&] {
    command = "verify oracles";
    action = [&] { return run_verify_oracles(oracle_total, enum_cap, series_m1); };
  });
  auto* bijections = verify->add_subcommand("bijections", "Urn, walk and mirror-map models");
  int bij_total = 12, bij_cap = kDefaultUrnCap;
  bijections->add_option("--max-total", bij_total, "Largest m1 + m2")->capture_default_str();
  bijections->add_option("--cap", bij_cap, "Enumeration size cap")->capture_default_str();
  bijections->callback([&] {
    command = "verify bijections";
    action = [&] { return run_verify_bijections(bij_total, bij_cap); };
  });
  auto* local = verify->add_subcommand("local-limit", "Balanced-deck closed form for W");
  int local_m = 40;
  local->add_option("--max-m", local_m, "Largest m")->capture_default_str();
  local->callback([&] {
    command = "verify local-limit";
    action = [&] { return run_verify_local_limit(local_m); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  Output output;
  try {
    output = action();
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  if (format == "csv") {
    write_csv(output.table, out);
  } else {
    json metadata = {{"version", kVersion}};
    if (output.seed) metadata["seed"] = *output.seed;
    const json doc = {{"command", command},
                      {"parameters", parameters_of(app)},
                      {"result", output.result},
                      {"metadata", metadata}};
    out << doc.dump(2) << '\n';
  }
  if (!output.verified) {
    err << "verification failed\n";
    return kVerificationFailed;
  }
  return kOk;
}

}  // namespace cardguess::cli
