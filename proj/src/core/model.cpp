#include "degpow/core/model.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace degpow {

void Parameters::validate() const {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  if (!(p > 0.0)) throw std::invalid_argument("p must be positive");
  if (n < r) throw std::invalid_argument("n must be at least r");
}

ClassSizes::ClassSizes(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw std::invalid_argument("class sizes must be nonempty");
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (sizes_[i] < 1) throw std::invalid_argument("class sizes must be positive");
    if (i > 0 && sizes_[i] < sizes_[i - 1])
      throw std::invalid_argument("class sizes must be nondecreasing");
  }
  order_ = std::accumulate(sizes_.begin(), sizes_.end(), 0);
}

ClassSizes ClassSizes::from_unsorted(std::vector<int> sizes) {
  std::sort(sizes.begin(), sizes.end());
  return ClassSizes(std::move(sizes));
}

std::string ClassSizes::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(sizes_[i]);
  }
  return out + ")";
}

SmallGraph::SmallGraph(int order) : order_(order) {
  if (order < 1 || order > max_order)
    throw std::invalid_argument("SmallGraph order must be in [1, 8]");
}

SmallGraph SmallGraph::from_edge_mask(int order, std::uint64_t mask) {
  SmallGraph g(order);
  if (order < 64 && pair_count(order) < 64 && (mask >> pair_count(order)) != 0)
    throw std::invalid_argument("edge mask has bits beyond the vertex pairs");
  int bit = 0;
  for (int v = 1; v < order; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if ((mask >> bit) & 1u) g.add_edge(u, v);
    }
  }
  return g;
}

SmallGraph SmallGraph::from_edges(int order, std::span<const std::pair<int, int>> edges) {
  SmallGraph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int SmallGraph::degree(int v) const { return std::popcount(adj_[v]); }

int SmallGraph::edge_count() const {
  int total = 0;
  for (int v = 0; v < order_; ++v) total += degree(v);
  return total / 2;
}

std::vector<int> SmallGraph::degrees() const {
  std::vector<int> out(order_);
  for (int v = 0; v < order_; ++v) out[v] = degree(v);
  return out;
}

std::uint64_t SmallGraph::edge_mask() const {
  std::uint64_t mask = 0;
  for (int v = 1; v < order_; ++v)
    for (int u = 0; u < v; ++u)
      if (has_edge(u, v)) mask |= std::uint64_t{1} << pair_index(u, v);
  return mask;
}

void SmallGraph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (u < 0 || v < 0 || u >= order_ || v >= order_)
    throw std::invalid_argument("edge endpoint out of range");
  adj_[u] |= static_cast<Row>(1u << v);
  adj_[v] |= static_cast<Row>(1u << u);
}

void SmallGraph::remove_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order_ || v >= order_)
    throw std::invalid_argument("edge endpoint out of range");
  adj_[u] &= static_cast<Row>(~(1u << v));
  adj_[v] &= static_cast<Row>(~(1u << u));
}

SmallGraph make_edgeless(int order) { return SmallGraph(order); }

SmallGraph make_complete(int order) {
  SmallGraph g(order);
  for (int v = 1; v < order; ++v)
    for (int u = 0; u < v; ++u) g.add_edge(u, v);
  return g;
}

SmallGraph make_cycle(int order) {
  if (order < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  SmallGraph g(order);
  for (int v = 0; v < order; ++v) g.add_edge(v, (v + 1) % order);
  return g;
}

SmallGraph make_path(int order) {
  SmallGraph g(order);
  for (int v = 0; v + 1 < order; ++v) g.add_edge(v, v + 1);
  return g;
}

SmallGraph make_star(int leaves) {
  SmallGraph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

SmallGraph make_complete_multipartite(const ClassSizes& sizes) {
  SmallGraph g(sizes.order());
  std::vector<int> class_of;
  for (int c = 0; c < sizes.parts(); ++c)
    for (int k = 0; k < sizes[c]; ++k) class_of.push_back(c);
  for (int v = 1; v < sizes.order(); ++v)
    for (int u = 0; u < v; ++u)
      if (class_of[u] != class_of[v]) g.add_edge(u, v);
  return g;
}

double f_degree_powers(const SmallGraph& g, double p) {
  double total = 0.0;
  for (int v = 0; v < g.order(); ++v) total += power(g.degree(v), p);
  return total;
}

double f_complete_multipartite(const ClassSizes& sizes, double p) {
  const int n = sizes.order();
  double total = 0.0;
  for (int size : sizes.sizes()) total += size * power(n - size, p);
  return total;
}

std::optional<ExactInt> exact_f_degree_powers(const SmallGraph& g, int p) {
  ExactInt total = 0;
  for (int v = 0; v < g.order(); ++v) {
    auto term = checked_power(static_cast<ExactInt>(g.degree(v)), p);
    if (!term || __builtin_add_overflow(total, *term, &total)) return std::nullopt;
  }
  return total;
}

std::optional<ExactInt> exact_f_complete_multipartite(const ClassSizes& sizes, int p) {
  const int n = sizes.order();
  ExactInt total = 0;
  for (int size : sizes.sizes()) {
    auto term = checked_power(static_cast<ExactInt>(n - size), p);
    if (!term) return std::nullopt;
    ExactInt scaled;
    if (__builtin_mul_overflow(*term, static_cast<ExactInt>(size), &scaled)) return std::nullopt;
    if (__builtin_add_overflow(total, scaled, &total)) return std::nullopt;
  }
  return total;
}

ClassSizes turan_class_sizes(int n, int r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (n < r) throw std::invalid_argument("turan_class_sizes requires n >= r");
  const int base = n / r;
  const int big = n % r;
  std::vector<int> sizes(r, base);
  for (int i = r - big; i < r; ++i) ++sizes[i];
  return ClassSizes(std::move(sizes));
}

double f_turan(int r, double p, int n) {
  return f_complete_multipartite(turan_class_sizes(n, r), p);
}

} // namespace degpow
