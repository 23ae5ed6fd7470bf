#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "degpow/exact/optimizer.hpp"
#include "degpow/oracle/oracle.hpp"

using namespace degpow;
using namespace degpow::oracle;

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix to_matrix(const SmallGraph& g) {
  Matrix m(g.order(), std::vector<int>(g.order(), 0));
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v) m[u][v] = g.has_edge(u, v);
  return m;
}

// Tries every k-subset.
bool naive_clique(const Matrix& m, int k) {
  const int n = static_cast<int>(m.size());
  for (unsigned s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) != k) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((s >> u & 1) && (s >> v & 1) && !m[u][v]) ok = false;
    if (ok) return true;
  }
  return false;
}

// Tries every injective map via permutations of the host vertices.
bool naive_subgraph(const Matrix& host, const Matrix& pat) {
  const int n = static_cast<int>(host.size());
  const int k = static_cast<int>(pat.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < k && ok; ++u)
      for (int v = 0; v < k && ok; ++v)
        if (pat[u][v] && !host[perm[u]][perm[v]]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Smallest k admitting a proper coloring, by trying every assignment.
int naive_chromatic(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  for (int k = 1; k <= n; ++k) {
    std::vector<int> col(n, 0);
    while (true) {
      bool ok = true;
      for (int u = 0; u < n && ok; ++u)
        for (int v = u + 1; v < n && ok; ++v)
          if (m[u][v] && col[u] == col[v]) ok = false;
      if (ok) return k;
      int i = 0;
      while (i < n && ++col[i] == k) col[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

// Independent brute force with a triangle-loop filter.
double naive_triangle_free_max(int n, double p) {
  const int pairs = n * (n - 1) / 2;
  double best = 0.0;
  for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
    Matrix m(n, std::vector<int>(n, 0));
    int bit = 0;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u, ++bit)
        if (mask >> bit & 1) m[u][v] = m[v][u] = 1;
    bool triangle = false;
    for (int a = 0; a < n && !triangle; ++a)
      for (int b = a + 1; b < n && !triangle; ++b)
        for (int c = b + 1; c < n && !triangle; ++c) triangle = m[a][b] && m[b][c] && m[a][c];
    if (triangle) continue;
    double f = 0.0;
    for (int u = 0; u < n; ++u) {
      const int d = std::accumulate(m[u].begin(), m[u].end(), 0);
      if (d > 0) f += std::pow(d, p);
    }
    best = std::max(best, f);
  }
  return best;
}

SmallGraph random_graph(std::mt19937_64& rng, int n) {
  const auto mask = rng() & ((std::uint64_t{1} << pair_count(n)) - 1);
  return SmallGraph::from_edge_mask(n, mask);
}

std::vector<int> sorted_degrees(const SmallGraph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

} // namespace

TEST_CASE("contains_clique examples") {
  CHECK(contains_clique(make_complete(4), 3));
  CHECK_FALSE(contains_clique(make_cycle(5), 3));
  CHECK_FALSE(contains_clique(make_complete_multipartite(ClassSizes({2, 2, 2})), 4));
  CHECK(contains_clique(make_complete_multipartite(ClassSizes({2, 2, 2})), 3));
  CHECK(contains_clique(make_edgeless(3), 1));
  CHECK_FALSE(contains_clique(make_complete(3), 4));
}

TEST_CASE("contains_clique matches subset search") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 400; ++t) {
    const auto g = random_graph(rng, 1 + static_cast<int>(rng() % 8));
    const auto m = to_matrix(g);
    for (int k = 1; k <= g.order(); ++k) CHECK(contains_clique(g, k) == naive_clique(m, k));
  }
}

TEST_CASE("contains_subgraph examples") {
  const auto k23 = make_complete_multipartite(ClassSizes({2, 3}));
  CHECK(contains_subgraph(k23, make_cycle(4)));
  CHECK_FALSE(contains_subgraph(k23, make_cycle(5)));
  CHECK(contains_subgraph(make_complete(3), make_path(3)));
  CHECK_FALSE(contains_subgraph(make_path(3), make_complete(3)));
}

TEST_CASE("contains_subgraph matches permutation search") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 300; ++t) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const int k = 2 + static_cast<int>(rng() % (n - 1));
    const auto host = random_graph(rng, n);
    auto pat = random_graph(rng, k);
    CHECK(contains_subgraph(host, pat) == naive_subgraph(to_matrix(host), to_matrix(pat)));
  }
}

TEST_CASE("chromatic_number") {
  CHECK(chromatic_number(make_cycle(5)) == 3);
  CHECK(chromatic_number(make_complete(4)) == 4);
  CHECK(chromatic_number(make_complete_multipartite(ClassSizes({3, 3}))) == 2);
  CHECK(chromatic_number(make_edgeless(4)) == 1);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto g = random_graph(rng, 1 + static_cast<int>(rng() % 7));
    CHECK(chromatic_number(g) == naive_chromatic(to_matrix(g)));
  }
}

TEST_CASE("ForbiddenPattern") {
  CHECK_THROWS_AS(ForbiddenPattern::clique(2), std::invalid_argument);
  CHECK_THROWS_AS(ForbiddenPattern::subgraph(make_edgeless(3)), std::invalid_argument);
  const auto c5 = ForbiddenPattern::subgraph(make_cycle(5));
  CHECK(c5.chromatic() == 3);
  CHECK(c5.related_r() == 2);
  CHECK(ForbiddenPattern::clique(4).related_r() == 3);
}

TEST_CASE("brute_force_max examples") {
  const auto a = brute_force_max(5, ForbiddenPattern::clique(3), 4.0);
  CHECK(a.value == 260.0);
  CHECK(a.value == naive_triangle_free_max(5, 4.0));
  REQUIRE_FALSE(a.witness_graphs.empty());
  CHECK(sorted_degrees(a.witness_graphs.front()) == std::vector<int>{1, 1, 1, 1, 4});
  CHECK(a.maximizing_graphs == 5); // one labeled star per centre
  CHECK(a.graphs_scanned == 1024);

  const auto b = brute_force_max(4, ForbiddenPattern::clique(3), 1.0);
  CHECK(b.value == 8.0);
  CHECK(sorted_degrees(b.witness_graphs.front()) == std::vector<int>{2, 2, 2, 2});
  CHECK(b.maximizing_graphs == 3); // the three labeled 4-cycles

  const auto c = brute_force_max(5, ForbiddenPattern::clique(4), 2.0);
  CHECK(c.value == 52.0);
  CHECK(sorted_degrees(c.witness_graphs.front()) == std::vector<int>{3, 3, 3, 3, 4});
  CHECK(c.value == exact::phi_exact(3, 2.0, 5).value);
}

TEST_CASE("brute force agrees with the naive triangle filter") {
  for (int n = 2; n <= 6; ++n)
    for (double p : {0.5, 1.0, 2.5, 5.0})
      CHECK(brute_force_max(n, ForbiddenPattern::clique(3), p).value ==
            doctest::Approx(naive_triangle_free_max(n, p)).epsilon(1e-12));
}

TEST_CASE("witnesses are pattern-free, optimal and capped") {
  const auto res = brute_force_max(6, ForbiddenPattern::clique(3), 2.0);
  CHECK(res.witness_graphs.size() <= 10);
  CHECK(res.maximizing_graphs >= res.witness_graphs.size());
  std::uint64_t last = 0;
  for (const auto& w : res.witness_graphs) {
    CHECK_FALSE(contains_clique(w, 3));
    CHECK(f_degree_powers(w, 2.0) == res.value);
    CHECK(w.edge_mask() >= last);
    last = w.edge_mask();
  }
}

TEST_CASE("multi-exponent pass matches single calls and worker counts agree") {
  const std::vector<double> ps = {0.5, 3.0, 4.0};
  const auto pattern = ForbiddenPattern::clique(3);
  const auto multi = brute_force_max(6, pattern, ps, {.workers = 3});
  for (std::size_t k = 0; k < ps.size(); ++k) {
    const auto single = brute_force_max(6, pattern, ps[k], {.workers = 1});
    CHECK(multi[k].value == single.value);
    CHECK(multi[k].maximizing_graphs == single.maximizing_graphs);
    CHECK(multi[k].witness_graphs == single.witness_graphs);
  }
}

TEST_CASE("n = 8 needs the override") {
  CHECK_THROWS_AS(brute_force_max(8, ForbiddenPattern::clique(3), 2.0), ResourceError);
  CHECK_THROWS_AS(brute_force_max(9, ForbiddenPattern::clique(3), 2.0, {.allow_n8 = true}),
                  std::invalid_argument);
}

TEST_CASE("erdos_majorization_witness examples") {
  auto c5 = erdos_majorization_witness(make_cycle(5), 2);
  REQUIRE(c5.has_value());
  CHECK(c5->sizes() == ClassSizes({2, 3}));

  auto k3 = erdos_majorization_witness(make_complete(3), 3);
  REQUIRE(k3.has_value());
  CHECK(k3->sizes() == ClassSizes({1, 1, 1}));

  auto empty = erdos_majorization_witness(make_edgeless(5), 2);
  REQUIRE(empty.has_value());
  CHECK(empty->classes >= 1);

  CHECK_THROWS_AS(erdos_majorization_witness(make_complete(3), 2), std::invalid_argument);
}

TEST_CASE("majorization witnesses dominate degrees on every K4-free graph with 6 vertices") {
  for (std::uint64_t mask = 0; mask < (1u << 15); ++mask) {
    const auto g = SmallGraph::from_edge_mask(6, mask);
    if (contains_clique(g, 4)) continue;
    const auto w = erdos_majorization_witness(g, 3);
    REQUIRE(w.has_value());
    CHECK(w->classes <= 3);
    std::vector<int> size(w->classes, 0);
    for (int c : w->class_of) ++size[c];
    for (int v = 0; v < 6; ++v) CHECK(6 - size[w->class_of[v]] >= g.degree(v));
  }
}

TEST_CASE("verify_multipartite_optimality examples") {
  const auto a = verify_multipartite_optimality(5, 2, 4.0);
  CHECK(a.passed);
  CHECK(a.oracle_value == 260.0);
  CHECK(a.exact_value == 260.0);

  const auto b = verify_multipartite_optimality(6, 3, 2.0);
  CHECK(b.passed);
  CHECK(b.exact_value == 96.0);

  const auto c = verify_multipartite_optimality(4, 2, 1.0);
  CHECK(c.passed);
  CHECK(c.oracle_value == 8.0);
}

TEST_CASE("C5-free maxima dominate the triangle-free partition optimum") {
  const auto c5 = ForbiddenPattern::subgraph(make_cycle(5));
  for (int n = 5; n <= 6; ++n)
    for (double p : {1.0, 2.0, 4.0})
      CHECK(brute_force_max(n, c5, p).value >= exact::phi_exact(2, p, n).value);
}

TEST_CASE("forbidden_trend rows") {
  const auto rows = forbidden_trend(ForbiddenPattern::subgraph(make_cycle(5)), 2.0, 2, 6);
  REQUIRE(rows.size() == 5);
  CHECK(rows.front().n == 2);
  for (const auto& row : rows) {
    CHECK(row.phi_forbidden >= row.phi_clique);
    CHECK(row.scaled_clique <= row.psi + 1e-12);
  }
}
