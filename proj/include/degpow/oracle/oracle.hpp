#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "degpow/core/model.hpp"

namespace degpow::oracle {

/// True iff g has a complete subgraph on k vertices.
bool contains_clique(const SmallGraph& g, int k);

/// True iff some (not necessarily induced) subgraph of g is isomorphic to h.
bool contains_subgraph(const SmallGraph& g, const SmallGraph& h);

/// Exact chromatic number by branch-and-bound (DSATUR ordering).
int chromatic_number(const SmallGraph& h);

/// Either K_k or an explicit graph H, forbidden as a (not necessarily
/// induced) subgraph.
class ForbiddenPattern {
public:
  enum class Kind { clique, subgraph };

  static ForbiddenPattern clique(int k);
  static ForbiddenPattern subgraph(SmallGraph h);

  Kind kind() const { return kind_; }
  int clique_size() const { return clique_size_; }
  const std::optional<SmallGraph>& graph() const { return graph_; }
  int chromatic() const { return chromatic_; }
  /// chromatic() - 1: the r whose K_{r+1}-free extremal problem matches.
  int related_r() const { return chromatic_ - 1; }

  bool occurs_in(const SmallGraph& g) const;
  std::string describe() const;

private:
  ForbiddenPattern() = default;

  Kind kind_ = Kind::clique;
  int clique_size_ = 0;
  std::optional<SmallGraph> graph_;
  int chromatic_ = 0;
};

class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  /// Labeled enumeration on 8 vertices means 2^28 graphs.
  bool allow_n8 = false;
  int workers = 0;
  std::size_t witness_cap = 10;
};

struct OracleResult {
  double value = 0.0;
  /// Smallest-edge-mask maximizers, at most witness_cap of them.
  std::vector<SmallGraph> witness_graphs;
  /// Exact number of labeled graphs attaining value.
  std::uint64_t maximizing_graphs = 0;
  std::uint64_t graphs_scanned = 0;
  std::uint64_t pattern_free_graphs = 0;
  ForbiddenPattern pattern;
};

/// Maximum of f(p, G) over all labeled pattern-free graphs on n vertices.
OracleResult brute_force_max(int n, const ForbiddenPattern& pattern, double p,
                             const OracleOptions& options = {});

/// One enumeration pass shared across several exponents.
std::vector<OracleResult> brute_force_max(int n, const ForbiddenPattern& pattern,
                                          std::span<const double> exponents,
                                          const OracleOptions& options = {});

struct ClassAssignment {
  /// class_of[v] in [0, classes).
  std::vector<int> class_of;
  int classes = 0;

  /// Class sizes in canonical nondecreasing form.
  ClassSizes sizes() const;
};

/// Partition of V(G) into at most r classes such that every vertex u has
/// n - |class(u)| >= d_G(u), i.e. the complete multipartite graph on the
/// classes dominates G's degrees. Rejects graphs containing K_{r+1}.
std::optional<ClassAssignment> erdos_majorization_witness(const SmallGraph& g, int r);

struct MultipartiteReport {
  int n = 0;
  int r = 0;
  double p = 0.0;
  double oracle_value = 0.0;
  double exact_value = 0.0;
  double relative_gap = 0.0;
  bool passed = false;
  std::vector<SmallGraph> oracle_witnesses;
  std::vector<ClassSizes> exact_maximizers;
};

/// Compares brute_force_max(n, K_{r+1}, p) with phi_exact(r, p, n).
MultipartiteReport verify_multipartite_optimality(int n, int r, double p,
                                                  const OracleOptions& options = {});

struct TrendRow {
  int n = 0;
  double phi_forbidden = 0.0;
  double phi_clique = 0.0;
  double scaled_forbidden = 0.0;
  double scaled_clique = 0.0;
  double psi = 0.0;
};

/// phi(H,p,n)/n^{p+1} next to phi(r,p,n)/n^{p+1} and psi(r,p) for small n.
/// Exploratory only; nothing is asserted about convergence.
std::vector<TrendRow> forbidden_trend(const ForbiddenPattern& pattern, double p, int n_lo,
                                      int n_hi, const OracleOptions& options = {});

} // namespace degpow::oracle
