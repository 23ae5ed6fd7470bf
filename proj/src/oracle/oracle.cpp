#include "degpow/oracle/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "degpow/continuous/analyzer.hpp"
#include "degpow/core/parallel.hpp"
#include "degpow/exact/optimizer.hpp"

namespace degpow::oracle {

ForbiddenPattern ForbiddenPattern::clique(int k) {
  if (k < 3) throw std::invalid_argument("forbidden clique must have at least 3 vertices");
  ForbiddenPattern p;
  p.kind_ = Kind::clique;
  p.clique_size_ = k;
  p.chromatic_ = k;
  return p;
}

ForbiddenPattern ForbiddenPattern::subgraph(SmallGraph h) {
  if (h.edge_count() < 1) throw std::invalid_argument("forbidden graph needs at least one edge");
  ForbiddenPattern p;
  p.kind_ = Kind::subgraph;
  p.chromatic_ = chromatic_number(h);
  p.graph_ = std::move(h);
  return p;
}

bool ForbiddenPattern::occurs_in(const SmallGraph& g) const {
  if (kind_ == Kind::clique) return contains_clique(g, clique_size_);
  return contains_subgraph(g, *graph_);
}

std::string ForbiddenPattern::describe() const {
  if (kind_ == Kind::clique) return "K" + std::to_string(clique_size_);
  return "H(order=" + std::to_string(graph_->order()) + ",edges=" +
         std::to_string(graph_->edge_count()) + ",chromatic=" + std::to_string(chromatic_) + ")";
}

namespace {

struct Tally {
  double best = -std::numeric_limits<double>::infinity();
  std::uint64_t hits = 0;
  std::vector<std::uint64_t> witnesses;
};

void record(Tally& t, double value, std::uint64_t mask, std::size_t cap) {
  if (t.hits > 0 && nearly_equal(value, t.best, NumericPolicy::tie_tolerance)) {
    t.best = std::max(t.best, value);
    ++t.hits;
    if (t.witnesses.size() < cap) t.witnesses.push_back(mask);
  } else if (t.hits == 0 || value > t.best) {
    t.best = value;
    t.hits = 1;
    t.witnesses.assign(1, mask);
  }
}

void absorb(Tally& into, const Tally& chunk, std::size_t cap) {
  if (chunk.hits == 0) return;
  if (into.hits > 0 && nearly_equal(chunk.best, into.best, NumericPolicy::tie_tolerance)) {
    into.best = std::max(into.best, chunk.best);
    into.hits += chunk.hits;
    for (auto m : chunk.witnesses)
      if (into.witnesses.size() < cap) into.witnesses.push_back(m);
  } else if (into.hits == 0 || chunk.best > into.best) {
    into = chunk;
  }
}

} // namespace

std::vector<OracleResult> brute_force_max(int n, const ForbiddenPattern& pattern,
                                          std::span<const double> exponents,
                                          const OracleOptions& options) {
  if (n < 1 || n > SmallGraph::max_order)
    throw std::invalid_argument("brute force order must be in [1, 8]");
  if (n == 8 && !options.allow_n8)
    throw ResourceError("n=8 enumerates 268435456 graphs; pass the n8 override to allow it");
  for (double p : exponents)
    if (!(p > 0.0)) throw std::invalid_argument("p must be positive");

  const int pairs = pair_count(n);
  const std::uint64_t total = std::uint64_t{1} << pairs;
  std::vector<std::pair<int, int>> endpoints;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) endpoints.emplace_back(u, v);

  // Degree powers tabulated once; f is summed over the degree histogram so
  // graphs with equal degree sequences get bit-identical values.
  std::vector<std::vector<double>> powers(exponents.size(), std::vector<double>(n, 0.0));
  for (std::size_t k = 0; k < exponents.size(); ++k)
    for (int d = 0; d < n; ++d) powers[k][d] = power(d, exponents[k]);

  struct Chunk {
    std::vector<Tally> tallies;
    std::uint64_t free = 0;
  };
  const std::uint64_t chunk_count = std::min<std::uint64_t>(total, 256);
  const std::uint64_t span = (total + chunk_count - 1) / chunk_count;
  const std::size_t cap = options.witness_cap;

  auto chunks = run_indexed<Chunk>(
      static_cast<std::size_t>(chunk_count), resolve_workers(options.workers),
      [&](std::size_t idx) {
        Chunk chunk;
        chunk.tallies.resize(exponents.size());
        const std::uint64_t begin = idx * span;
        const std::uint64_t end = std::min(total, begin + span);
        SmallGraph g(n);
        std::vector<int> histogram(n);
        for (std::uint64_t mask = begin; mask < end; ++mask) {
          g = SmallGraph(n);
          for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
            const auto [u, v] = endpoints[std::countr_zero(bits)];
            g.add_edge(u, v);
          }
          if (pattern.occurs_in(g)) continue;
          ++chunk.free;
          std::fill(histogram.begin(), histogram.end(), 0);
          for (int v = 0; v < n; ++v) ++histogram[g.degree(v)];
          for (std::size_t k = 0; k < exponents.size(); ++k) {
            double value = 0.0;
            for (int d = 0; d < n; ++d) value += histogram[d] * powers[k][d];
            record(chunk.tallies[k], value, mask, cap);
          }
        }
        return chunk;
      });

  std::vector<Tally> merged(exponents.size());
  std::uint64_t free = 0;
  for (const auto& chunk : chunks) {
    free += chunk.free;
    for (std::size_t k = 0; k < exponents.size(); ++k) absorb(merged[k], chunk.tallies[k], cap);
  }

  std::vector<OracleResult> out;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    OracleResult res{.value = merged[k].best,
                     .witness_graphs = {},
                     .maximizing_graphs = merged[k].hits,
                     .graphs_scanned = total,
                     .pattern_free_graphs = free,
                     .pattern = pattern};
    for (auto mask : merged[k].witnesses)
      res.witness_graphs.push_back(SmallGraph::from_edge_mask(n, mask));
    out.push_back(std::move(res));
  }
  return out;
}

OracleResult brute_force_max(int n, const ForbiddenPattern& pattern, double p,
                             const OracleOptions& options) {
  const double exponents[] = {p};
  return std::move(brute_force_max(n, pattern, exponents, options).front());
}

MultipartiteReport verify_multipartite_optimality(int n, int r, double p,
                                                  const OracleOptions& options) {
  Parameters{r, p, n}.validate();
  const auto brute = brute_force_max(n, ForbiddenPattern::clique(r + 1), p, options);
  const auto exact = exact::phi_exact(r, p, n, {.workers = options.workers});
  MultipartiteReport report;
  report.n = n;
  report.r = r;
  report.p = p;
  report.oracle_value = brute.value;
  report.exact_value = exact.value;
  const double scale = std::max(std::fabs(brute.value), std::fabs(exact.value));
  report.relative_gap = scale == 0.0 ? 0.0 : std::fabs(brute.value - exact.value) / scale;
  report.passed = report.relative_gap <= 1e-9;
  report.oracle_witnesses = brute.witness_graphs;
  report.exact_maximizers = exact.maximizers;
  return report;
}

std::vector<TrendRow> forbidden_trend(const ForbiddenPattern& pattern, double p, int n_lo,
                                      int n_hi, const OracleOptions& options) {
  const int r = pattern.related_r();
  if (r < 2) throw std::invalid_argument("trend tables need a pattern of chromatic number >= 3");
  const double psi = continuous::psi(r, p).value;
  std::vector<TrendRow> rows;
  for (int n = std::max(n_lo, r); n <= n_hi; ++n) {
    TrendRow row;
    row.n = n;
    row.phi_forbidden = brute_force_max(n, pattern, p, options).value;
    row.phi_clique = exact::phi_exact(r, p, n, {.workers = options.workers}).value;
    const double scale = std::pow(static_cast<double>(n), p + 1.0);
    row.scaled_forbidden = row.phi_forbidden / scale;
    row.scaled_clique = row.phi_clique / scale;
    row.psi = psi;
    rows.push_back(row);
  }
  return rows;
}

} // namespace degpow::oracle
