#include "degpow/cli/run.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "degpow/cli/csv.hpp"
#include "degpow/cli/graph6.hpp"
#include "degpow/cli/verify.hpp"
#include "degpow/continuous/analyzer.hpp"
#include "degpow/core/model.hpp"
#include "degpow/exact/optimizer.hpp"
#include "degpow/oracle/oracle.hpp"

namespace degpow::cli {

namespace {

namespace cont = degpow::continuous;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int report(std::ostream& err, int code, std::string_view kind, std::string reason) {
  for (char& c : reason)
    if (c == '\n' || c == '\r') c = ' ';
  err << "error: code=" << code << " kind=" << kind << " reason=" << reason << '\n';
  return code;
}

int need_r(const CommandSpec& c) {
  if (!c.r) throw UsageError("--r is required");
  if (*c.r < 2) throw UsageError("--r must be at least 2");
  return *c.r;
}

double need_p(const CommandSpec& c) {
  if (!c.p) throw UsageError("--p is required");
  if (!(*c.p > 0.0)) throw UsageError("--p must be positive");
  return *c.p;
}

int need_n(const CommandSpec& c, int at_least) {
  if (!c.n) throw UsageError("--n is required");
  if (*c.n < at_least) throw UsageError("--n must be at least " + std::to_string(at_least));
  return *c.n;
}

std::string join_sizes(const std::vector<ClassSizes>& all) {
  std::string out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (i > 0) out += ';';
    out += all[i].to_string();
  }
  return out;
}

std::string join_graphs(const std::vector<SmallGraph>& all) {
  std::string out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (i > 0) out += ';';
    out += encode_graph6(all[i]);
  }
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

SmallGraph load_forbidden_graph(const std::string& source) {
  std::string text = source;
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::ifstream in(source);
    if (!in || !std::getline(in, text)) throw UsageError("cannot read graph6 file " + source);
  }
  while (!text.empty() && (text.back() == '\r' || text.back() == ' ')) text.pop_back();
  return parse_graph6(text);
}

std::vector<CsvRow> scan_rows(const std::vector<cont::ScanRow>& table) {
  std::vector<CsvRow> rows;
  for (const auto& row : table)
    rows.push_back({format_real(row.p), format_real(row.excess), format_real(row.argmax_x)});
  return rows;
}

const CsvSchema scan_schema{{"p", "excess", "argmax_x"}};

void phi_exact_command(const CommandSpec& c, std::ostream& out) {
  const int r = need_r(c);
  const double p = need_p(c);
  const int n = need_n(c, r);
  const auto res = c.restricted
                       ? exact::phi_restricted(r, p, n)
                       : exact::phi_exact(r, p, n, {.cap = c.cap, .workers = c.workers});
  if (c.csv) {
    std::vector<CsvRow> rows;
    for (const auto& m : res.maximizers)
      rows.push_back({m.to_string(), format_real(f_complete_multipartite(m, p))});
    emit_csv(out, {{"class_sizes", "value"}}, rows);
    return;
  }
  out << "phi=" << format_real(res.value) << " maximizers=" << join_sizes(res.maximizers)
      << " turan_optimal=" << bool_text(res.turan_optimal) << '\n';
}

void turan_command(const CommandSpec& c, std::ostream& out) {
  const int r = need_r(c);
  const double p = need_p(c);
  const int n = need_n(c, r);
  out << "f_turan=" << format_real(f_turan(r, p, n)) << '\n';
}

void psi_command(const CommandSpec& c, std::ostream& out) {
  const int r = need_r(c);
  const double p = need_p(c);
  const auto res = cont::psi(r, p);
  if (c.csv) {
    std::vector<CsvRow> rows;
    for (const auto& m : res.local_maxima) rows.push_back({format_real(m.x), format_real(m.value)});
    emit_csv(out, {{"x", "value"}}, rows);
    return;
  }
  out << "psi=" << format_real(res.value) << " argmax_x=" << format_real(res.argmax_x)
      << " turan_point=" << cont::to_string(res.turan_point_class)
      << " tie_detected=" << bool_text(res.tie_detected) << '\n';
}

void landscape_command(const CommandSpec& c, std::ostream& out) {
  const int r = need_r(c);
  const double p = need_p(c);
  if (c.count < 2) throw UsageError("--count must be at least 2");
  std::vector<CsvRow> rows;
  for (const auto& row : cont::landscape_samples(r, p, c.count))
    rows.push_back({format_real(row.x), format_real(row.g)});
  emit_csv(out, {{"x", "g"}}, rows);
}

void threshold_command(const CommandSpec& c, std::ostream& out) {
  const int r = need_r(c);
  if (!(c.tol > 0.0)) throw UsageError("--tol must be positive");
  cont::ThresholdOptions opt;
  opt.tolerance = c.tol;
  if (c.bracket_lo || c.bracket_hi) {
    opt.bracket_lo = c.bracket_lo.value_or(1.0);
    opt.bracket_hi = c.bracket_hi.value_or(3.0 * r);
    if (!(opt.bracket_lo > 0.0 && opt.bracket_lo < opt.bracket_hi))
      throw UsageError("bracket must satisfy 0 < lo < hi");
  }
  cont::ThresholdResult res;
  try {
    res = cont::critical_exponent(r, opt);
  } catch (const cont::ThresholdError& e) {
    // The scan table is the evidence; emit it before failing.
    emit_csv(out, scan_schema, scan_rows(e.scan_table()));
    throw VerificationFailure(e.what());
  }
  if (c.csv) {
    emit_csv(out, scan_schema, scan_rows(res.scan_table));
    return;
  }
  out << "p_star=" << format_real(res.p_star) << " bracket=[" << format_real(res.p_lo) << ","
      << format_real(res.p_hi) << "] margin=" << format_real(res.margin) << '\n';
}

void scan_command(const CommandSpec& c, std::ostream& out) {
  const int r = need_r(c);
  if (!(c.p_lo > 0.0 && c.p_lo < c.p_hi)) throw UsageError("scan needs 0 < --p-lo < --p-hi");
  if (!(c.step > 0.0)) throw UsageError("--step must be positive");
  emit_csv(out, scan_schema, scan_rows(cont::scan_excess(r, c.p_lo, c.p_hi, c.step)));
}

void oracle_command(const CommandSpec& c, std::ostream& out) {
  const double p = need_p(c);
  const oracle::OracleOptions opt{.allow_n8 = c.allow_n8, .workers = c.workers};
  if (!c.forbid_graph.empty() && c.r) throw UsageError("give either --r or --forbid-graph, not both");
  std::optional<oracle::ForbiddenPattern> pattern;
  if (!c.forbid_graph.empty()) {
    pattern = oracle::ForbiddenPattern::subgraph(load_forbidden_graph(c.forbid_graph));
  } else {
    pattern = oracle::ForbiddenPattern::clique(need_r(c) + 1);
  }

  if (c.trend) {
    const int n_hi = need_n(c, 1);
    std::vector<CsvRow> rows;
    for (const auto& t : oracle::forbidden_trend(*pattern, p, c.n_lo, n_hi, opt))
      rows.push_back({std::to_string(t.n), format_real(t.phi_forbidden), format_real(t.phi_clique),
                      format_real(t.scaled_forbidden), format_real(t.scaled_clique),
                      format_real(t.psi)});
    emit_csv(out,
             {{"n", "phi_forbidden", "phi_clique", "scaled_forbidden", "scaled_clique", "psi"}},
             rows);
    return;
  }

  if (c.compare) {
    const int r = need_r(c);
    const int n = need_n(c, r);
    const auto rep = oracle::verify_multipartite_optimality(n, r, p, opt);
    out << "verified=" << bool_text(rep.passed) << " oracle=" << format_real(rep.oracle_value)
        << " exact=" << format_real(rep.exact_value) << " gap=" << format_real(rep.relative_gap)
        << " witnesses=" << join_graphs(rep.oracle_witnesses)
        << " maximizers=" << join_sizes(rep.exact_maximizers) << '\n';
    if (!rep.passed)
      throw VerificationFailure("oracle and partition optimum disagree at n=" + std::to_string(n) +
                                " r=" + std::to_string(r) + " p=" + format_real(p));
    return;
  }

  const int n = need_n(c, 1);
  const auto res = oracle::brute_force_max(n, *pattern, p, opt);
  out << "phi_oracle=" << format_real(res.value) << " pattern=" << res.pattern.describe()
      << " graphs_scanned=" << res.graphs_scanned << " pattern_free=" << res.pattern_free_graphs
      << " maximizing_graphs=" << res.maximizing_graphs
      << " witnesses=" << join_graphs(res.witness_graphs) << '\n';
}

void verify_command(const CommandSpec& c, std::ostream& out) {
  const auto results = run_suite(c.suite, {.seed = c.seed, .workers = c.workers});
  int failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.suite << '/' << r.name << ' ' << r.detail << '\n';
    failed += !r.passed;
  }
  out << "verify: suite=" << c.suite << " checks=" << results.size() << " failed=" << failed
      << " seed=" << c.seed << '\n';
  if (failed > 0) throw VerificationFailure(std::to_string(failed) + " invariant checks failed");
}

int dispatch(const CommandSpec& c, std::ostream& out) {
  if (c.subcommand == "phi-exact") phi_exact_command(c, out);
  else if (c.subcommand == "turan") turan_command(c, out);
  else if (c.subcommand == "psi") psi_command(c, out);
  else if (c.subcommand == "landscape") landscape_command(c, out);
  else if (c.subcommand == "threshold") threshold_command(c, out);
  else if (c.subcommand == "scan") scan_command(c, out);
  else if (c.subcommand == "oracle") oracle_command(c, out);
  else if (c.subcommand == "verify") verify_command(c, out);
  else throw UsageError("unknown subcommand '" + c.subcommand + "'");
  return exit_ok;
}

} // namespace

int run(const CommandSpec& command, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!command.out_path.empty()) {
    file.open(command.out_path, std::ios::binary);
    if (!file) return report(err, exit_usage, "usage", "cannot open --out path " + command.out_path);
    sink = &file;
  }
  try {
    return dispatch(command, *sink);
  } catch (const VerificationFailure& e) {
    return report(err, exit_verification, "verification", e.what());
  } catch (const exact::ResourceError& e) {
    return report(err, exit_resource, "resource", e.what());
  } catch (const oracle::ResourceError& e) {
    return report(err, exit_resource, "resource", e.what());
  } catch (const std::invalid_argument& e) {
    return report(err, exit_usage, "usage", e.what());
  } catch (const std::domain_error& e) {
    return report(err, exit_usage, "usage", e.what());
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree-power sums over clique-free graphs"};
  app.require_subcommand(1);
  CommandSpec spec;

  auto numeric = [&](CLI::App* sub, bool with_n) {
    sub->add_option("--r", spec.r, "forbidden clique is K_{r+1}");
    sub->add_option("--p", spec.p, "degree exponent");
    if (with_n) sub->add_option("--n", spec.n, "graph order");
  };
  auto common = [&](CLI::App* sub) {
    sub->add_flag("--csv", spec.csv, "emit CSV");
    sub->add_option("--out", spec.out_path, "write output to this path");
    sub->add_option("--workers", spec.workers, "worker threads (default $DEGPOW_WORKERS)");
  };

  auto* phi = app.add_subcommand("phi-exact", "exact maximum over complete r-partite graphs");
  numeric(phi, true);
  common(phi);
  phi->add_option("--cap", spec.cap, "maximum partition count to enumerate");
  phi->add_flag("--restricted", spec.restricted, "scan only the near-equal restricted family");

  auto* turan = app.add_subcommand("turan", "degree-power sum of the Turán graph");
  numeric(turan, true);
  common(turan);

  auto* psi = app.add_subcommand("psi", "continuous relaxation maximum");
  numeric(psi, false);
  common(psi);

  auto* land = app.add_subcommand("landscape", "samples of g over its domain (CSV)");
  numeric(land, false);
  common(land);
  land->add_option("--count", spec.count, "number of samples");

  auto* thr = app.add_subcommand("threshold", "critical exponent where the Turán point stops being optimal");
  thr->add_option("--r", spec.r);
  common(thr);
  thr->add_option("--tol", spec.tol, "bisection width");
  thr->add_option("--bracket-lo", spec.bracket_lo);
  thr->add_option("--bracket-hi", spec.bracket_hi);

  auto* scan = app.add_subcommand("scan", "excess table over a p range (CSV)");
  scan->add_option("--r", spec.r);
  common(scan);
  scan->add_option("--p-lo", spec.p_lo)->required();
  scan->add_option("--p-hi", spec.p_hi)->required();
  scan->add_option("--step", spec.step);

  auto* orc = app.add_subcommand("oracle", "exhaustive search over labeled graphs");
  numeric(orc, true);
  common(orc);
  orc->add_option("--forbid-graph", spec.forbid_graph, "graph6 string or file of the forbidden graph");
  orc->add_flag("--allow-n8", spec.allow_n8, "permit the 2^28-graph enumeration at n=8");
  orc->add_flag("--compare", spec.compare, "check against the partition optimum");
  orc->add_flag("--trend", spec.trend, "CSV of scaled maxima for n in [--n-lo, --n]");
  orc->add_option("--n-lo", spec.n_lo);

  auto* ver = app.add_subcommand("verify", "run the invariant suites");
  ver->add_option("--suite", spec.suite, "core, exact, continuous, oracle, cli or all");
  ver->add_option("--seed", spec.seed, "seed for sampled checks");
  ver->add_option("--workers", spec.workers);
  ver->add_option("--out", spec.out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    return report(err, exit_usage, "usage", e.what());
  }
  for (auto* sub : app.get_subcommands()) spec.subcommand = sub->get_name();
  return run(spec, out, err);
}

} // namespace degpow::cli
