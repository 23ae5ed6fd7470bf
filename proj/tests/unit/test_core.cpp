#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "degpow/core/model.hpp"
#include "degpow/core/parallel.hpp"
#include "degpow/exact/optimizer.hpp"

using namespace degpow;

namespace {

// Adjacency-matrix degree sum, independent of the bitmask rows.
double naive_power_sum(int n, const std::vector<std::pair<int, int>>& edges, double p) {
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  for (auto [u, v] : edges) adj[u][v] = adj[v][u] = 1;
  double total = 0.0;
  for (int u = 0; u < n; ++u) {
    int d = 0;
    for (int v = 0; v < n; ++v) d += adj[u][v];
    if (d > 0) total += std::pow(d, p);
  }
  return total;
}

} // namespace

TEST_CASE("f_degree_powers on named graphs") {
  CHECK(f_degree_powers(make_cycle(5), 2.0) == doctest::Approx(20.0).epsilon(1e-15));
  CHECK(f_degree_powers(make_edgeless(6), 0.3) == 0.0);
  CHECK(f_degree_powers(make_edgeless(6), 7.0) == 0.0);
  CHECK(f_degree_powers(make_complete(4), 3.0) == doctest::Approx(108.0).epsilon(1e-15));
}

TEST_CASE("f_degree_powers agrees with an adjacency-matrix sum on random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u)
        if (rng() % 2) edges.emplace_back(u, v);
    const auto g = SmallGraph::from_edges(n, edges);
    const double p = 0.25 + (rng() % 40) * 0.25;
    CHECK(f_degree_powers(g, p) == doctest::Approx(naive_power_sum(n, edges, p)).epsilon(1e-13));
  }
}

TEST_CASE("f_complete_multipartite examples") {
  CHECK(f_complete_multipartite(ClassSizes({3, 4}), 1.0) == 24.0);
  // 2*4 + 2*4, and the explicit K_{2,2}.
  CHECK(f_complete_multipartite(ClassSizes({2, 2}), 2.0) == 16.0);
  CHECK(f_degree_powers(make_complete_multipartite(ClassSizes({2, 2})), 2.0) == 16.0);
  // 2*8^4 + 8*2^4.
  CHECK(f_complete_multipartite(ClassSizes({2, 8}), 4.0) == 2 * 4096.0 + 8 * 16.0);
  CHECK(f_complete_multipartite(ClassSizes({2, 8}), 4.0) == 8320.0);
  CHECK(exact_f_complete_multipartite(ClassSizes({2, 8}), 4) == ExactInt{8320});
}

TEST_CASE("complete multipartite formula matches the explicit graph") {
  const double ps[] = {0.5, 1.0, 1.7, 2.0, 3.0, 6.5};
  for (int n = 2; n <= 8; ++n)
    for (int r = 2; r <= n; ++r)
      for (const auto& sizes : exact::enumerate_class_sizes(n, r)) {
        const auto g = make_complete_multipartite(sizes);
        for (double p : ps)
          CHECK(f_complete_multipartite(sizes, p) ==
                doctest::Approx(f_degree_powers(g, p)).epsilon(1e-12));
        CHECK(exact_f_complete_multipartite(sizes, 5) == exact_f_degree_powers(g, 5));
      }
}

TEST_CASE("regular graphs give m * d^p") {
  for (int m = 3; m <= 8; ++m)
    for (double p : {0.5, 1.0, 2.5, 4.0}) {
      CHECK(f_degree_powers(make_cycle(m), p) == doctest::Approx(m * std::pow(2.0, p)).epsilon(1e-12));
      CHECK(f_degree_powers(make_complete(m), p) ==
            doctest::Approx(m * std::pow(m - 1.0, p)).epsilon(1e-12));
    }
}

TEST_CASE("f at p=1 is twice the edge count") {
  for (int n = 1; n <= 5; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(n)); ++mask) {
      const auto g = SmallGraph::from_edge_mask(n, mask);
      CHECK(f_degree_powers(g, 1.0) == 2.0 * g.edge_count());
    }
}

TEST_CASE("turan_class_sizes") {
  CHECK(turan_class_sizes(10, 3) == ClassSizes({3, 3, 4}));
  CHECK(turan_class_sizes(6, 3) == ClassSizes({2, 2, 2}));
  CHECK(turan_class_sizes(7, 2) == ClassSizes({3, 4}));
  CHECK_THROWS_AS(turan_class_sizes(2, 3), std::invalid_argument);

  for (int n = 2; n <= 120; ++n)
    for (int r = 2; r <= std::min(n, 9); ++r) {
      const auto t = turan_class_sizes(n, r);
      CHECK(t.order() == n);
      CHECK(t[t.parts() - 1] - t[0] <= 1);
      CHECK(turan_class_sizes(t.order(), t.parts()) == t);
    }
}

TEST_CASE("f_turan examples") {
  CHECK(f_turan(2, 2.0, 4) == 16.0);
  CHECK(f_turan(2, 4.0, 10) == doctest::Approx(10 * 625.0).epsilon(1e-15));
  CHECK(f_turan(3, 2.0, 6) == 96.0);
}

TEST_CASE("ClassSizes validation and ordering") {
  CHECK_THROWS_AS(ClassSizes({}), std::invalid_argument);
  CHECK_THROWS_AS(ClassSizes({0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(ClassSizes({3, 2}), std::invalid_argument);
  CHECK(ClassSizes::from_unsorted({5, 1, 3}) == ClassSizes({1, 3, 5}));
  CHECK(ClassSizes({1, 4}) < ClassSizes({2, 3}));
  CHECK(ClassSizes({1, 2, 3}).to_string() == "(1,2,3)");
}

TEST_CASE("SmallGraph invariants") {
  CHECK_THROWS_AS(SmallGraph(0), std::invalid_argument);
  CHECK_THROWS_AS(SmallGraph(9), std::invalid_argument);
  SmallGraph g(4);
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(SmallGraph::from_edge_mask(3, 0b1000), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto mask = rng() & ((std::uint64_t{1} << pair_count(n)) - 1);
    const auto h = SmallGraph::from_edge_mask(n, mask);
    CHECK(h.edge_mask() == mask);
    for (int u = 0; u < n; ++u) {
      CHECK_FALSE(h.has_edge(u, u));
      CHECK((h.row(u) >> n) == 0);
      for (int v = 0; v < n; ++v) CHECK(h.has_edge(u, v) == h.has_edge(v, u));
    }
  }
}

TEST_CASE("pair_index follows column-major upper-triangle order") {
  CHECK(pair_index(0, 1) == 0);
  CHECK(pair_index(0, 2) == 1);
  CHECK(pair_index(1, 2) == 2);
  CHECK(pair_index(0, 3) == 3);
  CHECK(pair_index(3, 2) == 5);
}

TEST_CASE("exact integer power sums") {
  CHECK(exact_f_degree_powers(make_complete(4), 3) == ExactInt{108});
  CHECK(to_string(ExactInt{0}) == "0");
  CHECK(to_string(*checked_power(10, 20)) == "100000000000000000000");
  CHECK_FALSE(checked_power(1000, 20).has_value());
}

TEST_CASE("Parameters validation") {
  CHECK_NOTHROW(Parameters{2, 0.5, 2}.validate());
  CHECK_THROWS_AS((Parameters{1, 1.0, 4}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((Parameters{2, 0.0, 4}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((Parameters{3, 1.0, 2}.validate()), std::invalid_argument);
}

TEST_CASE("run_indexed keeps index order for any worker count") {
  for (int workers : {1, 2, 5}) {
    auto out = run_indexed<int>(37, workers, [](std::size_t i) { return static_cast<int>(i * i); });
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i * i));
  }
}
