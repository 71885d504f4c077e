// qchan: validation, Birkhoff decomposition, extremality testing, unitary
// mixture fitting and the tensor-power experiment, from channel JSON and
// matrix CSV files.  Exit codes: 0 success, 1 I/O or parse failure,
// 2 semantic failure (invalid channel, non-unital input, no matching).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "qchan/catlaws.hpp"
#include "qchan/io.hpp"

using nlohmann::json;
using namespace qchan;

namespace {

struct RunConfig {
  std::string input;
  std::string output;
  std::string format = "json";
  std::uint64_t seed = 0;
  double tol = kEqTol;
  std::vector<int> m;
  int n_max = 2;
  int restarts = 5;
  int power = 1;
  int samples = 25;
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
  } else {
    io::write_file(cfg.output, text.back() == '\n' ? text : text + "\n");
  }
}

void emit_json(const RunConfig& cfg, const json& j) {
  emit(cfg, j.dump(2));
}

int cmd_validate(const RunConfig& cfg) {
  if (ends_with(cfg.input, ".csv")) {
    const ComplexMatrix m = io::load_matrix_csv(cfg.input);
    const bool ok = m.square() && is_doubly_stochastic(m, cfg.tol);
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["doubly_stochastic"] = ok;
    j["tolerance"] = cfg.tol;
    if (cfg.format == "text") {
      emit(cfg, std::string("doubly_stochastic: ") + (ok ? "true" : "false"));
    } else {
      emit_json(cfg, j);
    }
    return ok ? 0 : 2;
  }
  const KrausChannel k = io::load_channel(cfg.input);
  const ValidationReport rep = validate_channel(k, cfg.tol);
  if (cfg.format == "text") {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "dim=%d kraus=%d trace_preserving=%s unital=%s "
                  "tp_dev=%.3e unital_dev=%.3e",
                  rep.dim, rep.kraus_count,
                  rep.trace_preserving ? "true" : "false",
                  rep.unital ? "true" : "false",
                  rep.max_trace_preserving_deviation,
                  rep.max_unital_deviation);
    emit(cfg, buf);
  } else {
    emit_json(cfg, io::validation_report_to_json(rep));
  }
  return rep.trace_preserving ? 0 : 2;
}

int cmd_decompose(const RunConfig& cfg) {
  const ComplexMatrix m = io::load_matrix_csv(cfg.input);
  const DoublyStochasticMatrix d(m, cfg.tol);
  const BirkhoffDecomposition dec = birkhoff_decompose(d, cfg.tol);
  if (cfg.format == "text") {
    std::string out = "terms: " + std::to_string(dec.terms.size()) +
                      ", reconstruction_error: " +
                      std::to_string(dec.reconstruction_error);
    emit(cfg, out);
  } else {
    emit_json(cfg, io::decomposition_to_json(dec));
  }
  return 0;
}

int cmd_extremal(const RunConfig& cfg) {
  const KrausChannel k = io::load_channel(cfg.input);
  const ExtremalityReport rep =
      cfg.power <= 1 ? landau_streater_extremal(k, cfg.tol)
                     : tensor_power_extremal(k, cfg.power, cfg.tol);
  if (cfg.format == "text") {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "kraus_count=%d test_vectors=%d ambient=%d rank=%d "
                  "extremal=%s",
                  rep.kraus_count, rep.test_vector_count, rep.ambient_dim,
                  rep.rank, rep.extremal ? "true" : "false");
    emit(cfg, buf);
  } else {
    emit_json(cfg, io::extremality_report_to_json(rep));
  }
  return 0;
}

int cmd_fit(const RunConfig& cfg) {
  const KrausChannel k = io::load_channel(cfg.input);
  const int m = cfg.m.empty() ? 1 : cfg.m.front();
  const FitReport rep = fit_unitary_mixture(k, m, cfg.restarts, cfg.seed);
  if (cfg.format == "text") {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "m=%d best_distance=%.12e iterations=%d converged=%s",
                  m, rep.best_distance, rep.iterations,
                  rep.converged ? "true" : "false");
    emit(cfg, buf);
  } else {
    emit_json(cfg, io::fit_report_to_json(rep));
  }
  return 0;
}

int cmd_experiment(const RunConfig& cfg) {
  const KrausChannel k = io::load_channel(cfg.input);
  std::vector<int> schedule = cfg.m;
  if (schedule.empty()) {
    // Default: full mixture budget (d^k)^2 per row.
    long long dk = 1;
    for (int i = 1; i <= cfg.n_max; ++i) {
      dk *= k.dim;
      schedule.push_back(static_cast<int>(std::min<long long>(dk * dk, 64)));
    }
  } else if (static_cast<int>(schedule.size()) == 1) {
    schedule.assign(cfg.n_max, schedule.front());
  }
  const ExperimentTable table =
      tensor_power_experiment(k, cfg.n_max, schedule, cfg.restarts, cfg.seed);
  if (cfg.format == "csv") {
    emit(cfg, io::experiment_to_csv(table));
  } else if (cfg.format == "text") {
    std::string out = "k m best_distance chain_copies\n";
    for (const auto& r : table.rows) {
      char buf[128];
      std::snprintf(buf, sizeof(buf), "%d %d %.6e %lld\n", r.k, r.m,
                    r.best_distance, r.chain_copies);
      out += buf;
    }
    emit(cfg, out);
  } else {
    emit_json(cfg, io::experiment_to_json(table));
  }
  return 0;
}

int cmd_laws(const RunConfig& cfg) {
  const KrausChannel k = io::load_channel(cfg.input);
  // Partner channels for the binary/ternary laws, derived from the seed.
  const KrausChannel p1 = random_unital_channel(k.dim, 2, cfg.seed + 1);
  const KrausChannel p2 = random_unital_channel(k.dim, 3, cfg.seed + 2);
  std::vector<LawReport> reports;
  reports.push_back(check_identity_law(k, cfg.samples, cfg.seed, cfg.tol));
  reports.push_back(check_associativity(k, p1, p2, cfg.tol));
  reports.push_back(check_bifunctor_law(k, p1, cfg.samples, cfg.seed, cfg.tol));
  {
    const ValidationReport v = validate_channel(compose(k, p1), cfg.tol);
    LawReport composite;
    composite.law_name = "composite_trace_preserving";
    composite.max_deviation = v.max_trace_preserving_deviation;
    composite.samples = 0;
    composite.passed = v.trace_preserving;
    composite.tolerance = cfg.tol;
    reports.push_back(composite);
  }
  if (is_unital(k, cfg.tol)) {
    reports.push_back(check_unitality_power(k, cfg.power >= 2 ? cfg.power : 2,
                                            cfg.tol));
  }
  bool all = true;
  json arr = json::array();
  for (const auto& r : reports) {
    all = all && r.passed;
    arr.push_back(io::law_report_to_json(r));
  }
  if (cfg.format == "text") {
    std::string out;
    for (const auto& r : reports) {
      char buf[160];
      std::snprintf(buf, sizeof(buf), "%-28s max_dev=%.3e %s\n",
                    r.law_name.c_str(), r.max_deviation,
                    r.passed ? "pass" : "FAIL");
      out += buf;
    }
    out += all ? "all laws passed" : "law violations found";
    emit(cfg, out);
  } else {
    json j;
    j["laws"] = std::move(arr);
    j["all_passed"] = all;
    emit_json(cfg, j);
  }
  return all ? 0 : 2;
}

void add_common(CLI::App* sub, RunConfig* cfg, bool needs_input = true) {
  auto* opt = sub->add_option("--input,-i", cfg->input,
                              "channel JSON or matrix CSV file");
  if (needs_input) opt->required();
  sub->add_option("--output,-o", cfg->output, "output file (default stdout)");
  sub->add_option("--format,-f", cfg->format, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--seed", cfg->seed, "random seed (default 0)");
  sub->add_option("--tol", cfg->tol, "tolerance (default 1e-10)");
  sub->add_option("--m", cfg->m,
                  "mixture size; repeatable for per-power schedules");
  sub->add_option("--n-max", cfg->n_max, "largest tensor power");
  sub->add_option("--restarts", cfg->restarts, "optimizer restarts");
  sub->add_option("--power", cfg->power, "tensor power for extremal/laws");
  sub->add_option("--samples", cfg->samples, "random samples for law checks");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unital quantum channel toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* validate = app.add_subcommand(
      "validate", "validate a channel (JSON) or doubly stochastic matrix (CSV)");
  auto* decompose = app.add_subcommand(
      "decompose", "Birkhoff decomposition of a doubly stochastic matrix");
  auto* extremal = app.add_subcommand(
      "extremal", "Landau-Streater extremality test (optionally --power n)");
  auto* fit = app.add_subcommand(
      "fit", "fit a unitary mixture to a unital channel");
  auto* experiment = app.add_subcommand(
      "experiment", "tensor-power mixture-fit experiment");
  auto* laws = app.add_subcommand(
      "laws", "category-law verification suite");
  for (CLI::App* sub : {validate, decompose, extremal, fit, experiment, laws}) {
    add_common(sub, &cfg);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (validate->parsed()) return cmd_validate(cfg);
    if (decompose->parsed()) return cmd_decompose(cfg);
    if (extremal->parsed()) return cmd_extremal(cfg);
    if (fit->parsed()) return cmd_fit(cfg);
    if (experiment->parsed()) return cmd_experiment(cfg);
    if (laws->parsed()) return cmd_laws(cfg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
