#include "jacobi_walk/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "jacobi_walk/integrate.hpp"
#include "jacobi_walk/jacobi_core.hpp"
#include "jacobi_walk/spectral_chain.hpp"
#include "jacobi_walk/table.hpp"
#include "jacobi_walk/urn_sim.hpp"

namespace jacobi_walk::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Common {
  int alpha = 0;
  int beta = 0;
  std::string engine = "float";
  std::string format = "csv";
  std::string output;

  Engine engine_kind() const { return engine == "exact" ? Engine::exact : Engine::floating; }
  ModelParams params() const { return ModelParams(alpha, beta); }
};

struct Options {
  Common common;
  State n_max = 10;
  State i_max = 5;
  std::string x = "0";
  State t = 1;
  State i = 0;
  std::optional<State> j_max;
  std::string method = "km";
  std::optional<std::uint64_t> trajectories;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  State n0 = 0;
  int points = 5;
};

std::string text(double v) { return to_decimal_string(v); }
std::string text(const BigRational& v) { return to_fraction_string(v); }

template <Scalar T>
params_t<T> params_for(const Common& c) {
  if constexpr (std::is_same_v<T, double>) {
    return RealParams(c.params());
  } else {
    return c.params();
  }
}

template <Scalar T>
Table coeffs_table(const Options& o) {
  Table tb{{"n", "A", "B", "C", "sum"}, {}};
  const auto p = params_for<T>(o.common);
  for (State n = 0; n <= o.n_max; ++n) {
    const auto k = step_coefficients<T>(n, p);
    tb.rows.push_back({n, text(k.a), text(k.b), text(k.c), text(k.sum())});
  }
  return tb;
}

double parse_double(const std::string& s, const char* flag) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    // Accept fraction syntax in float mode too.
    try {
      return parse_rational(s).get_d();
    } catch (const std::invalid_argument&) {
      throw UsageError(std::string(flag) + ": not a number: '" + s + "'");
    }
  }
  return v;
}

template <Scalar T>
Table eval_table(const Options& o) {
  Table tb{{"n", "Q"}, {}};
  const auto p = params_for<T>(o.common);
  T x;
  if constexpr (std::is_same_v<T, double>) {
    x = parse_double(o.x, "--x");
  } else {
    try {
      x = parse_rational(o.x);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--x: ") + e.what());
    }
  }
  const auto q = eval_q_all<T>(o.n_max, x, p);
  for (State n = 0; n <= o.n_max; ++n) tb.rows.push_back({n, text(q[static_cast<std::size_t>(n)])});
  return tb;
}

template <Scalar T>
Table transition_table(const Options& o, State j_max) {
  Table tb{{"j", "probability"}, {}};
  const auto p = params_for<T>(o.common);
  std::vector<T> row;
  if (o.method == "matrix") {
    row = matrix_power_row<T>(o.t, o.i, j_max, p);
  } else {
    row = transition_row<T>(o.t, o.i, j_max, p);
  }
  for (State j = 0; j <= j_max; ++j) tb.rows.push_back({j, text(row[static_cast<std::size_t>(j)])});
  return tb;
}

Table mc_transition_table(const Options& o, State j_max) {
  if (!o.trajectories) throw UsageError("--trajectories is required with --method mc");
  if (!o.seed) throw UsageError("--seed is required with --method mc");
  if (o.common.engine_kind() == Engine::exact) throw UsageError("--engine exact is not available with --method mc");
  const auto hist = terminal_histogram(o.i, o.t, o.common.params(), *o.trajectories, *o.seed, o.threads);
  Table tb{{"j", "probability", "stderr"}, {}};
  for (State j = 0; j <= j_max; ++j) {
    const std::uint64_t hits = j < static_cast<State>(hist.size()) ? hist[static_cast<std::size_t>(j)] : 0;
    const auto e = make_estimate(hits, *o.trajectories, o.t, o.i, j);
    tb.rows.push_back({j, text(e.probability), text(e.standard_error)});
  }
  return tb;
}

template <Scalar T>
Table stationary_table(const Options& o) {
  Table tb{{"i", "pi", "residual"}, {}};
  const auto p = params_for<T>(o.common);
  const auto residuals = stationarity_residuals<T>(o.n_max + 1, p);
  for (State i = 0; i <= o.n_max; ++i) {
    Cell r;
    if (i < o.n_max) r = text(residuals[static_cast<std::size_t>(i)]);
    tb.rows.push_back({i, text(invariant_measure<T>(i, p)), std::move(r)});
  }
  return tb;
}

Table orthocheck_table(const Options& o) {
  Table tb{{"i", "j", "value"}, {}};
  if (o.common.engine_kind() == Engine::exact) {
    ExactKarlinMcGregor km(o.common.params());
    for (State i = 0; i <= o.i_max; ++i) {
      for (State j = 0; j <= o.i_max; ++j) tb.rows.push_back({i, j, text(km.gram(i, j))});
    }
  } else {
    FloatKarlinMcGregor km(o.common.params());
    for (State i = 0; i <= o.i_max; ++i) {
      for (State j = 0; j <= o.i_max; ++j) tb.rows.push_back({i, j, text(km.gram(i, j))});
    }
  }
  return tb;
}

Table simulate_table(const Options& o) {
  const std::uint64_t trajectories = o.trajectories.value_or(0);
  if (trajectories == 0) throw UsageError("--trajectories must be >= 1");
  const auto hist = terminal_histogram(o.n0, o.t, o.common.params(), trajectories, o.seed.value_or(0), o.threads);
  Table tb{{"state", "count", "probability", "stderr"}, {}};
  for (std::size_t s = 0; s < hist.size(); ++s) {
    const auto e = make_estimate(hist[s], trajectories, o.t, o.n0, static_cast<State>(s));
    tb.rows.push_back(
        {static_cast<std::int64_t>(s), static_cast<std::int64_t>(hist[s]), text(e.probability), text(e.standard_error)});
  }
  return tb;
}

Table quadrule_table(const Options& o) {
  if (o.common.engine_kind() == Engine::exact) throw UsageError("--engine: quadrule supports only float");
  const auto rule = gauss_jacobi_rule(o.points, RealParams(o.common.params()));
  Table tb{{"k", "node", "weight"}, {}};
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    tb.rows.push_back({static_cast<std::int64_t>(k), text(rule.nodes[k]), text(rule.weights[k])});
  }
  return tb;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--alpha", c.alpha, "Weight exponent alpha (integer >= 0)")->check(CLI::NonNegativeNumber);
  sub->add_option("--beta", c.beta, "Weight exponent beta (integer >= 0)")->check(CLI::NonNegativeNumber);
  sub->add_option("--engine", c.engine, "Arithmetic engine")->check(CLI::IsMember({"float", "exact"}));
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--output", c.output, "Output path (default: stdout)");
}

template <class T>
Table by_engine(const Options& o, T&& build) {
  return o.common.engine_kind() == Engine::exact ? build(BigRational{}) : build(0.0);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jacobi-polynomial urn random walk: coefficients, spectral transition probabilities, simulation",
               "jacobi-walk"};
  app.require_subcommand(1);
  Options o;

  auto* coeffs = app.add_subcommand("coeffs", "One-step coefficients A_n, B_n, C_n");
  add_common(coeffs, o.common);
  coeffs->add_option("--n-max", o.n_max, "Largest state n")->required()->check(CLI::NonNegativeNumber);

  auto* eval = app.add_subcommand("eval", "Q_0(x) .. Q_{n-max}(x)");
  add_common(eval, o.common);
  eval->add_option("--n-max", o.n_max, "Largest degree")->required()->check(CLI::NonNegativeNumber);
  eval->add_option("--x", o.x, "Evaluation point (decimal or p/q)")->required();

  auto* transition = app.add_subcommand("transition", "Row of the t-step transition matrix");
  add_common(transition, o.common);
  transition->add_option("--t", o.t, "Number of steps")->required()->check(CLI::NonNegativeNumber);
  transition->add_option("--i", o.i, "Starting state")->required()->check(CLI::NonNegativeNumber);
  transition->add_option("--j-max", o.j_max, "Last target state (default i + t)")->check(CLI::NonNegativeNumber);
  transition->add_option("--method", o.method, "km | matrix | mc")->check(CLI::IsMember({"km", "matrix", "mc"}));
  transition->add_option("--trajectories", o.trajectories, "Monte Carlo trajectories (mc)")
      ->check(CLI::PositiveNumber);
  transition->add_option("--seed", o.seed, "Monte Carlo seed (mc)");
  transition->add_option("--threads", o.threads, "Worker threads for mc (0 = hardware)");

  auto* stationary = app.add_subcommand("stationary", "Invariant measure and stationarity residuals");
  add_common(stationary, o.common);
  stationary->add_option("--n-max", o.n_max, "Largest state")->required()->check(CLI::PositiveNumber);

  auto* orthocheck = app.add_subcommand("orthocheck", "Gram matrix pi_j * int Q_i Q_j W");
  add_common(orthocheck, o.common);
  orthocheck->add_option("--i-max", o.i_max, "Largest degree")->required()->check(CLI::NonNegativeNumber);

  auto* simulate = app.add_subcommand("simulate", "Terminal-state histogram of the urn walk");
  add_common(simulate, o.common);
  simulate->add_option("--n0", o.n0, "Initial state")->check(CLI::NonNegativeNumber);
  simulate->add_option("--t", o.t, "Number of steps")->required()->check(CLI::NonNegativeNumber);
  simulate->add_option("--trajectories", o.trajectories, "Number of trajectories")
      ->required()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", o.seed, "Seed (default 0)");
  simulate->add_option("--threads", o.threads, "Worker threads (0 = hardware)");

  auto* quadrule = app.add_subcommand("quadrule", "Gauss-Jacobi nodes and weights on [0,1]");
  add_common(quadrule, o.common);
  quadrule->add_option("--points", o.points, "Number of nodes M")->required()->check(CLI::PositiveNumber);

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("jacobi-walk");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::string command;
  Table table;
  try {
    if (coeffs->parsed()) {
      command = "coeffs";
      table = by_engine(o, [&](auto tag) { return coeffs_table<decltype(tag)>(o); });
    } else if (eval->parsed()) {
      command = "eval";
      table = by_engine(o, [&](auto tag) { return eval_table<decltype(tag)>(o); });
    } else if (transition->parsed()) {
      command = "transition";
      const State j_max = o.j_max.value_or(o.i + o.t);
      if (o.method == "mc") {
        table = mc_transition_table(o, j_max);
      } else {
        table = by_engine(o, [&](auto tag) { return transition_table<decltype(tag)>(o, j_max); });
      }
    } else if (stationary->parsed()) {
      command = "stationary";
      table = by_engine(o, [&](auto tag) { return stationary_table<decltype(tag)>(o); });
    } else if (orthocheck->parsed()) {
      command = "orthocheck";
      table = orthocheck_table(o);
    } else if (simulate->parsed()) {
      command = "simulate";
      table = simulate_table(o);
    } else if (quadrule->parsed()) {
      command = "quadrule";
      table = quadrule_table(o);
    }
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream rendered;
  if (o.common.format == "json") {
    nlohmann::ordered_json meta;
    meta["command"] = command;
    meta["alpha"] = o.common.alpha;
    meta["beta"] = o.common.beta;
    meta["engine"] = o.common.engine;
    write_json(table, meta, rendered);
  } else {
    write_csv(table, rendered);
  }

  if (o.common.output.empty() || o.common.output == "-") {
    out << rendered.str();
  } else {
    std::ofstream file(o.common.output, std::ios::binary);
    if (!file) {
      err << "error: --output: cannot open '" << o.common.output << "'\n";
      return kExitUsage;
    }
    file << rendered.str();
  }
  return kExitOk;
}

}  // namespace jacobi_walk::cli
