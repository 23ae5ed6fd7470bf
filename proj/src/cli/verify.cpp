#include "degpow/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "degpow/cli/csv.hpp"
#include "degpow/cli/graph6.hpp"
#include "degpow/continuous/analyzer.hpp"
#include "degpow/core/model.hpp"
#include "degpow/exact/optimizer.hpp"
#include "degpow/oracle/oracle.hpp"

namespace degpow::cli {

namespace {

namespace cont = degpow::continuous;

// Collects the outcome of one named property over many cases; keeps the
// first few counterexamples for the report.
class Check {
public:
  Check(std::string suite, std::string name) : suite_(std::move(suite)), name_(std::move(name)) {}

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++cases_;
    if (ok) return;
    ++failures_;
    if (examples_.size() < 3) examples_.push_back(describe());
  }

  void note(std::string text) { note_ = std::move(text); }

  CheckResult result() const {
    std::ostringstream detail;
    detail << "cases=" << cases_ << " failures=" << failures_;
    if (!note_.empty()) detail << ' ' << note_;
    for (const auto& e : examples_) detail << " [" << e << "]";
    return {suite_, name_, cases_ > 0 && failures_ == 0, detail.str()};
  }

private:
  std::string suite_;
  std::string name_;
  std::string note_;
  std::uint64_t cases_ = 0;
  std::uint64_t failures_ = 0;
  std::vector<std::string> examples_;
};

bool rel_close(double a, double b, double rel) { return nearly_equal(a, b, rel); }

std::string fmt(double v) { return format_real(v); }

template <typename Fn>
void for_each_graph(int max_order, Fn&& fn) {
  for (int n = 1; n <= max_order; ++n) {
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) fn(SmallGraph::from_edge_mask(n, mask));
  }
}

// p(n, k) = p(n-1, k-1) + p(n-k, k): an independent route to the partition
// count used by the cap guard.
std::uint64_t partitions_exact_parts(int n, int k) {
  std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  t[0][0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int j = 1; j <= std::min(m, k); ++j) t[m][j] = t[m - 1][j - 1] + t[m - j][j];
  return t[n][k];
}

std::vector<double> p_grid(double lo, double hi, double step) {
  std::vector<double> out;
  for (int i = 0; lo + i * step <= hi + 1e-9; ++i) out.push_back(lo + i * step);
  return out;
}

// ---------------------------------------------------------------- core

std::vector<CheckResult> core_suite() {
  std::vector<CheckResult> out;
  const std::vector<double> ps = {0.5, 1.0, 1.5, 2.0, 3.0, 4.5, 8.0};

  {
    Check c("core", "regular-graph-identity");
    for (int m = 3; m <= 8; ++m)
      for (double p : ps) {
        const double cyc = f_degree_powers(make_cycle(m), p);
        c.expect(rel_close(cyc, m * std::pow(2.0, p), 1e-12),
                 [&] { return "C" + std::to_string(m) + " p=" + fmt(p); });
        const double kn = f_degree_powers(make_complete(m), p);
        c.expect(rel_close(kn, m * std::pow(m - 1.0, p), 1e-12),
                 [&] { return "K" + std::to_string(m) + " p=" + fmt(p); });
      }
    out.push_back(c.result());
  }
  {
    Check c("core", "f1-equals-twice-edges");
    for_each_graph(6, [&](const SmallGraph& g) {
      c.expect(f_degree_powers(g, 1.0) == 2.0 * g.edge_count(),
               [&] { return "mask=" + std::to_string(g.edge_mask()); });
    });
    out.push_back(c.result());
  }
  {
    Check c("core", "multipartite-matches-explicit-graph");
    for (int n = 2; n <= 8; ++n)
      for (int r = 2; r <= n; ++r)
        for (const auto& sizes : exact::enumerate_class_sizes(n, r)) {
          const auto g = make_complete_multipartite(sizes);
          for (double p : ps)
            c.expect(rel_close(f_complete_multipartite(sizes, p), f_degree_powers(g, p), 1e-12),
                     [&] { return sizes.to_string() + " p=" + fmt(p); });
          for (int ip = 1; ip <= 8; ++ip)
            c.expect(exact_f_complete_multipartite(sizes, ip) == exact_f_degree_powers(g, ip),
                     [&] { return sizes.to_string() + " exact p=" + std::to_string(ip); });
        }
    out.push_back(c.result());
  }
  {
    Check c("core", "turan-balanced-fixed-point");
    for (int n = 2; n <= 200; ++n)
      for (int r = 2; r <= std::min(n, 12); ++r) {
        const auto t = turan_class_sizes(n, r);
        const bool balanced = t[t.parts() - 1] - t[0] <= 1 && t.order() == n && t.parts() == r;
        c.expect(balanced && turan_class_sizes(t.order(), t.parts()) == t,
                 [&] { return "n=" + std::to_string(n) + " r=" + std::to_string(r); });
      }
    out.push_back(c.result());
  }
  return out;
}

// ---------------------------------------------------------------- exact

std::vector<CheckResult> exact_suite(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const exact::ExactOptions eo{.workers = opt.workers};

  {
    Check dom("exact", "dominates-turan");
    Check ub("exact", "below-upper-bound");
    for (int r = 2; r <= 4; ++r)
      for (double p : {0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0})
        for (int n = r; n <= 40; ++n) {
          const auto res = exact::phi_exact(r, p, n, eo);
          const double turan = f_turan(r, p, n);
          const bool equal = rel_close(res.value, turan, NumericPolicy::tie_tolerance);
          dom.expect(res.value >= turan * (1 - 1e-15) && equal == res.turan_optimal, [&] {
            return "r=" + std::to_string(r) + " p=" + fmt(p) + " n=" + std::to_string(n);
          });
          ub.expect(res.value <= exact::phi_upper_bound(r, p, n) * (1 + 1e-12), [&] {
            return "r=" + std::to_string(r) + " p=" + fmt(p) + " n=" + std::to_string(n);
          });
        }
    out.push_back(dom.result());
    out.push_back(ub.result());
  }
  {
    Check c("exact", "turan-optimal-below-r-minus-1");
    for (int r = 2; r <= 4; ++r)
      for (double p : p_grid(0.5, r - 1.0, 0.5))
        for (int n = r; n <= 80; ++n)
          c.expect(exact::phi_exact(r, p, n, eo).turan_optimal, [&] {
            return "r=" + std::to_string(r) + " p=" + fmt(p) + " n=" + std::to_string(n);
          });
    out.push_back(c.result());
  }
  {
    Check c("exact", "restricted-equals-exact");
    for (int r = 2; r <= 3; ++r)
      for (int p = 1; p <= 8; ++p)
        for (int n = 10; n <= 40; ++n) {
          const double full = exact::phi_exact(r, p, n, eo).value;
          const double restricted = exact::phi_restricted(r, p, n).value;
          c.expect(restricted <= full * (1 + 1e-15) && rel_close(restricted, full, 1e-12), [&] {
            return "restricted<exact at r=" + std::to_string(r) + " p=" + std::to_string(p) +
                   " n=" + std::to_string(n) + " (" + fmt(restricted) + " vs " + fmt(full) + ")";
          });
        }
    out.push_back(c.result());
  }
  {
    Check c("exact", "partition-stream-count");
    for (int n = 2; n <= 60; ++n)
      for (int r = 2; r <= std::min(n, 8); ++r) {
        const auto stream = exact::enumerate_class_sizes(n, r);
        const auto expected = partitions_exact_parts(n, r);
        bool ordered = std::is_sorted(stream.begin(), stream.end()) &&
                       std::adjacent_find(stream.begin(), stream.end()) == stream.end();
        c.expect(ordered && stream.size() == expected && exact::count_class_sizes(n, r) == expected,
                 [&] { return "n=" + std::to_string(n) + " r=" + std::to_string(r); });
      }
    out.push_back(c.result());
  }
  return out;
}

// ---------------------------------------------------------------- continuous

std::vector<CheckResult> continuous_suite(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  {
    Check c("continuous", "derivative-finite-difference");
    c.note("seed=" + std::to_string(opt.seed));
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> pick_r(2, 6);
    std::uniform_real_distribution<double> pick_p(0.5, 20.0);
    std::uniform_real_distribution<double> pick_t(0.05, 0.95);
    for (int i = 0; i < 1000; ++i) {
      const int r = pick_r(rng);
      const double p = pick_p(rng);
      const double x = pick_t(rng) * cont::x_max(r);
      auto g = [&](double t) { return cont::g(r, p, t); };
      const double h1 = 1e-6;
      const double fd1 = (g(x + h1) - g(x - h1)) / (2 * h1);
      const double d1 = cont::g_d1(r, p, x);
      const double h2 = 1e-4;
      const double fd2 = (-g(x + 2 * h2) + 16 * g(x + h2) - 30 * g(x) + 16 * g(x - h2) - g(x - 2 * h2)) /
                         (12 * h2 * h2);
      const double d2 = cont::g_d2(r, p, x);
      c.expect(std::fabs(d1 - fd1) <= 1e-6 * (1 + std::fabs(d1)) &&
                   std::fabs(d2 - fd2) <= 1e-6 * (1 + std::fabs(d2)),
               [&] { return "r=" + std::to_string(r) + " p=" + fmt(p) + " x=" + fmt(x); });
    }
    out.push_back(c.result());
  }
  const auto ps = p_grid(0.5, 10.0, 0.5);
  {
    Check c("continuous", "turan-point-identity");
    Check s("continuous", "turan-point-stationary");
    for (int r = 2; r <= 8; ++r)
      for (double p : ps) {
        c.expect(rel_close(cont::g(r, p, 1.0 / r), std::pow((r - 1.0) / r, p), 1e-12),
                 [&] { return "r=" + std::to_string(r) + " p=" + fmt(p); });
        s.expect(std::fabs(cont::g_d1(r, p, 1.0 / r)) <= 1e-9,
                 [&] { return "r=" + std::to_string(r) + " p=" + fmt(p); });
      }
    out.push_back(c.result());
    out.push_back(s.result());
  }
  {
    Check c("continuous", "triangle-free-concavity");
    for (double p : p_grid(2.05, 3.0, 0.05)) {
      double worst = -INFINITY;
      for (int i = 1; i <= 10000; ++i) worst = std::max(worst, cont::g_d2(2, p, i / 10001.0));
      c.expect(worst <= 1e-9, [&] { return "p=" + fmt(p) + " max g''=" + fmt(worst); });
    }
    out.push_back(c.result());
  }
  {
    Check c("continuous", "turan-point-local-min");
    for (int r = 2; r <= 4; ++r) {
      for (double p : {2 * r - 0.5, 2 * r + 1.0, 3.0 * r})
        c.expect(cont::classify_turan_point(r, p) == cont::TuranPointClass::local_min,
                 [&] { return "r=" + std::to_string(r) + " p=" + fmt(p); });
      c.expect(cont::classify_turan_point(r, 1.0) == cont::TuranPointClass::local_max,
               [&] { return "r=" + std::to_string(r) + " p=1"; });
    }
    out.push_back(c.result());
  }
  {
    Check feas("continuous", "psi-feasibility");
    Check chain("continuous", "bound-chain");
    for (int r = 2; r <= 5; ++r)
      for (double p : p_grid(std::max(1.0, r - 2.0), 3.0 * r, 0.5)) {
        const auto res = cont::psi(r, p);
        const double turan = cont::g(r, p, 1.0 / r);
        feas.expect(res.value >= turan && res.value - cont::turan_density(r, p) >= -1e-12,
                    [&] { return "r=" + std::to_string(r) + " p=" + fmt(p); });
        const auto b = cont::sandwich_bounds(r, p);
        const double e = std::numbers::e;
        chain.expect(b.lower <= res.value * (1 + 1e-12) && res.value <= b.upper * (1 + 1e-12) &&
                         b.upper <= r / (p * e) * (1 + 1e-12) &&
                         b.upper <= r / (p * e) * (p + 1) / p &&
                         b.lower >= (r - 1) / ((p + 1) * e) * (1 - 1e-12),
                     [&] { return "r=" + std::to_string(r) + " p=" + fmt(p); });
      }
    out.push_back(feas.result());
    out.push_back(chain.result());
  }
  {
    Check c("continuous", "epsilon-bound-holds");
    for (int r = 2; r <= 6; ++r) {
      int q = 0;
      while (q * q < 2 * r) ++q;
      const double p = r + q;
      const double lhs = cont::psi(r, p).value;
      const double rhs = (1 + cont::epsilon_lower_bound(r)) * cont::turan_density(r, p);
      c.expect(lhs >= rhs + 1e-12, [&] {
        return "r=" + std::to_string(r) + " psi=" + fmt(lhs) + " bound=" + fmt(rhs);
      });
    }
    out.push_back(c.result());
  }
  {
    Check c("continuous", "relaxation-dominance");
    for (int r = 2; r <= 3; ++r)
      for (int p = 1; p <= 8; ++p) {
        const double psi = cont::psi(r, p).value;
        for (int n : {20, 40, 80}) {
          const double scaled =
              exact::phi_exact(r, p, n, {.workers = opt.workers}).value / std::pow(n, p + 1.0);
          c.expect(scaled <= psi + 5.0 / n, [&] {
            return "r=" + std::to_string(r) + " p=" + std::to_string(p) + " n=" + std::to_string(n);
          });
        }
      }
    out.push_back(c.result());
  }
  return out;
}

// ---------------------------------------------------------------- oracle

std::vector<CheckResult> oracle_suite(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const oracle::OracleOptions oo{.workers = opt.workers};
  {
    Check c("oracle", "oracle-equals-partition-optimum");
    const std::vector<double> ps = {0.5, 1.0, 2.0, 3.0, 4.0};
    for (int r = 2; r <= 3; ++r)
      for (int n = r; n <= 7; ++n) {
        const auto brute = oracle::brute_force_max(n, oracle::ForbiddenPattern::clique(r + 1), ps, oo);
        for (std::size_t k = 0; k < ps.size(); ++k) {
          const double exact = exact::phi_exact(r, ps[k], n, {.workers = opt.workers}).value;
          c.expect(rel_close(brute[k].value, exact, 1e-9), [&] {
            return "n=" + std::to_string(n) + " r=" + std::to_string(r) + " p=" + fmt(ps[k]);
          });
        }
      }
    out.push_back(c.result());
  }
  {
    Check c("oracle", "freedom-monotone-in-r");
    for (int n = 1; n <= 6; ++n) {
      const std::uint64_t total = std::uint64_t{1} << pair_count(n);
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        const auto g = SmallGraph::from_edge_mask(n, mask);
        bool ok = true;
        for (int r = 2; r <= 5; ++r)
          if (!oracle::contains_clique(g, r + 1)) ok = ok && !oracle::contains_clique(g, r + 2);
        c.expect(ok, [&] { return "n=" + std::to_string(n) + " mask=" + std::to_string(mask); });
      }
    }
    for (int n = 4; n <= 7; ++n) {
      std::uint64_t previous = 0;
      for (int r = 2; r <= 5; ++r) {
        const auto free = oracle::brute_force_max(n, oracle::ForbiddenPattern::clique(r + 1), 1.0, oo)
                              .pattern_free_graphs;
        c.expect(free >= previous, [&] { return "count n=" + std::to_string(n) + " r=" + std::to_string(r); });
        previous = free;
      }
    }
    out.push_back(c.result());
  }
  auto witness_valid = [](const SmallGraph& g, int r, const oracle::ClassAssignment& a) {
    if (a.classes < 1 || a.classes > r) return false;
    std::vector<int> count(a.classes, 0);
    for (int cls : a.class_of) {
      if (cls < 0 || cls >= a.classes) return false;
      ++count[cls];
    }
    for (int v = 0; v < g.order(); ++v)
      if (g.order() - count[a.class_of[v]] < g.degree(v)) return false;
    return true;
  };
  {
    Check c("oracle", "majorization-exhaustive");
    for (int r = 2; r <= 3; ++r)
      for_each_graph(6, [&](const SmallGraph& g) {
        if (oracle::contains_clique(g, r + 1)) return;
        const auto w = oracle::erdos_majorization_witness(g, r);
        c.expect(w && witness_valid(g, r, *w), [&] {
          return "r=" + std::to_string(r) + " g6=" + encode_graph6(g);
        });
      });
    out.push_back(c.result());
  }
  {
    Check c("oracle", "majorization-random-order7");
    c.note("seed=" + std::to_string(opt.seed));
    std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < 7; ++v)
      for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
    for (int i = 0; i < 10000; ++i) {
      const int r = 2 + i % 2;
      std::shuffle(pairs.begin(), pairs.end(), rng);
      const int budget = std::uniform_int_distribution<int>(0, 21)(rng);
      SmallGraph g(7);
      int added = 0;
      for (auto [u, v] : pairs) {
        if (added == budget) break;
        g.add_edge(u, v);
        if (oracle::contains_clique(g, r + 1)) g.remove_edge(u, v);
        else ++added;
      }
      const auto w = oracle::erdos_majorization_witness(g, r);
      c.expect(w && witness_valid(g, r, *w),
               [&] { return "r=" + std::to_string(r) + " g6=" + encode_graph6(g); });
    }
    out.push_back(c.result());
  }
  {
    Check c("oracle", "clique-vs-subgraph-coherence");
    for_each_graph(6, [&](const SmallGraph& g) {
      for (int k = 3; k <= 5; ++k) {
        if (k > g.order()) break;
        c.expect(oracle::contains_clique(g, k) == oracle::contains_subgraph(g, make_complete(k)),
                 [&] { return "k=" + std::to_string(k) + " g6=" + encode_graph6(g); });
      }
    });
    out.push_back(c.result());
  }
  {
    Check c("oracle", "forbidden-c5-dominance");
    const auto c5 = oracle::ForbiddenPattern::subgraph(make_cycle(5));
    const std::vector<double> ps = {1.0, 2.0, 4.0};
    for (int n = 5; n <= 7; ++n) {
      const auto brute = oracle::brute_force_max(n, c5, ps, oo);
      for (std::size_t k = 0; k < ps.size(); ++k) {
        const double exact = exact::phi_exact(2, ps[k], n, {.workers = opt.workers}).value;
        c.expect(brute[k].value >= exact * (1 - 1e-12),
                 [&] { return "n=" + std::to_string(n) + " p=" + fmt(ps[k]); });
      }
    }
    out.push_back(c.result());
  }
  return out;
}

// ---------------------------------------------------------------- cli

std::vector<CheckResult> cli_suite() {
  std::vector<CheckResult> out;
  {
    Check c("cli", "graph6-round-trip");
    for_each_graph(6, [&](const SmallGraph& g) {
      c.expect(parse_graph6(encode_graph6(g)) == g,
               [&] { return "mask=" + std::to_string(g.edge_mask()); });
    });
    out.push_back(c.result());
  }
  {
    Check c("cli", "landscape-csv-endpoints");
    std::ostringstream csv;
    std::vector<CsvRow> rows;
    for (const auto& row : cont::landscape_samples(2, 3.0, 3)) rows.push_back({fmt(row.x), fmt(row.g)});
    emit_csv(csv, {{"x", "g"}}, rows);
    c.expect(csv.str() == "x,g\n0,0\n0.5,0.125\n1,0\n", [&] { return csv.str(); });
    out.push_back(c.result());
  }
  return out;
}

} // namespace

std::vector<std::string> suite_names() { return {"core", "exact", "continuous", "oracle", "cli"}; }

std::vector<CheckResult> run_suite(std::string_view name, const VerifyOptions& options) {
  if (name == "all") {
    std::vector<CheckResult> all;
    for (const auto& suite : suite_names()) {
      auto part = run_suite(suite, options);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  if (name == "core") return core_suite();
  if (name == "exact") return exact_suite(options);
  if (name == "continuous") return continuous_suite(options);
  if (name == "oracle") return oracle_suite(options);
  if (name == "cli") return cli_suite();
  throw std::invalid_argument("unknown verify suite '" + std::string(name) + "'");
}

} // namespace degpow::cli
