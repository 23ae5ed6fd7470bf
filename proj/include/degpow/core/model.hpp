#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "degpow/core/numeric.hpp"

namespace degpow {

/// Problem parameters: forbidden clique K_{r+1}, degree exponent p, order n.
struct Parameters {
  int r = 2;
  double p = 1.0;
  int n = 2;

  /// Throws std::invalid_argument unless r >= 2, p > 0 and n >= r.
  void validate() const;
};

/// Class sizes of a complete r-partite graph, kept nondecreasing.
class ClassSizes {
public:
  /// Requires a nonempty nondecreasing sequence of positive entries.
  explicit ClassSizes(std::vector<int> sizes);

  /// Sorts the input first; entries must still be positive.
  static ClassSizes from_unsorted(std::vector<int> sizes);

  std::span<const int> sizes() const { return sizes_; }
  int parts() const { return static_cast<int>(sizes_.size()); }
  int order() const { return order_; }
  int operator[](std::size_t i) const { return sizes_[i]; }

  std::string to_string() const;

  friend bool operator==(const ClassSizes&, const ClassSizes&) = default;
  friend auto operator<=>(const ClassSizes& a, const ClassSizes& b) {
    return a.sizes_ <=> b.sizes_;
  }

private:
  std::vector<int> sizes_;
  int order_ = 0;
};

/// Simple undirected graph on at most 8 vertices with bitmask adjacency rows.
class SmallGraph {
public:
  static constexpr int max_order = 8;
  using Row = std::uint8_t;

  explicit SmallGraph(int order);

  /// Edge i of the mask is the i-th pair in column-major upper-triangle
  /// order (0,1), (0,2), (1,2), (0,3), ... which is also the graph6 bit order.
  static SmallGraph from_edge_mask(int order, std::uint64_t mask);
  static SmallGraph from_edges(int order, std::span<const std::pair<int, int>> edges);

  int order() const { return order_; }
  Row row(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  int degree(int v) const;
  int edge_count() const;
  std::vector<int> degrees() const;
  std::uint64_t edge_mask() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;

private:
  int order_ = 0;
  std::array<Row, max_order> adj_{};
};

/// Number of vertex pairs on `order` vertices.
constexpr int pair_count(int order) { return order * (order - 1) / 2; }

/// Index of the pair (u, v), u != v, in column-major upper-triangle order.
constexpr int pair_index(int u, int v) {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

SmallGraph make_edgeless(int order);
SmallGraph make_complete(int order);
SmallGraph make_cycle(int order);
SmallGraph make_path(int order);
SmallGraph make_star(int leaves);
/// Explicit complete multipartite graph; vertices are laid out class by class.
SmallGraph make_complete_multipartite(const ClassSizes& sizes);

/// Sum of d(u)^p over all vertices.
double f_degree_powers(const SmallGraph& g, double p);

/// Sum of n_i (n - n_i)^p, the degree-power sum of the complete multipartite graph.
double f_complete_multipartite(const ClassSizes& sizes, double p);

/// Integer-arithmetic versions for integral p; nullopt on overflow.
std::optional<ExactInt> exact_f_degree_powers(const SmallGraph& g, int p);
std::optional<ExactInt> exact_f_complete_multipartite(const ClassSizes& sizes, int p);

/// Balanced partition of n into r classes (n mod r of them of size ceil(n/r)).
ClassSizes turan_class_sizes(int n, int r);

double f_turan(int r, double p, int n);

} // namespace degpow
