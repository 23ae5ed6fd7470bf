#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace degpow::continuous {

// Profile with r-1 classes of relative size x and one class of size
// 1-(r-1)x:
//
//   g(r,p,x) = (r-1) x (1-x)^p + (1-(r-1)x) ((r-1)x)^p,   0 <= x <= 1/(r-1).
//
// x = 1/r is the balanced (Turán) point, where g = ((r-1)/r)^p.

double g(int r, double p, double x);

/// dg/dx on the open domain (0, 1/(r-1)).
double g_d1(int r, double p, double x);

/// d^2g/dx^2 on the open domain (0, 1/(r-1)).
double g_d2(int r, double p, double x);

/// Upper end of the feasible x range, 1/(r-1).
inline double x_max(int r) { return 1.0 / (r - 1); }

/// Value of g at the balanced point, ((r-1)/r)^p.
double turan_density(int r, double p);

enum class TuranPointClass { local_max, local_min, degenerate };

std::string_view to_string(TuranPointClass c);

struct LocalMax {
  double x = 0.0;
  double value = 0.0;
};

struct PsiResult {
  double value = 0.0;
  double argmax_x = 0.0;
  /// Refined local maxima within 1e-9 relative of value, sorted by x.
  std::vector<LocalMax> local_maxima;
  TuranPointClass turan_point_class = TuranPointClass::degenerate;
  bool tie_detected = false;
};

struct PsiOptions {
  int grid_points = 100001;
  /// Golden-section stopping width.
  double x_tolerance = 1e-12;
  /// Relative value window for reporting near-global maxima and ties.
  double tie_value_tolerance = 1e-9;
  /// Minimum x separation for two maxima to count as a tie.
  double tie_x_separation = 1e-4;
};

/// Maximum of g over [0, 1/(r-1)] by uniform grid scan plus golden-section
/// refinement around every grid-local maximum.
PsiResult psi(int r, double p, const PsiOptions& options = {});

/// Sign of g_d2 at x = 1/r, with |g_d2| <= 1e-9 classed as degenerate.
TuranPointClass classify_turan_point(int r, double p);

/// g(r, p, 1/p); requires p >= r-1.
double psi_lower_bound_at_inv_p(int r, double p);

/// ceil(sqrt(2r)) / ((r + ceil(sqrt(2r)))^2 (r-1)).
double epsilon_lower_bound(int r);

struct Bounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// ((r-1)/(p+1)) (p/(p+1))^p <= psi(r,p) <= (r/(p+1)) (p/(p+1))^p;
/// requires p >= max(1, r-2).
Bounds sandwich_bounds(int r, double p);

/// psi(r,p) - ((r-1)/r)^p.
double excess(int r, double p, const PsiOptions& options = {});

struct ScanRow {
  double p = 0.0;
  double excess = 0.0;
  double argmax_x = 0.0;
};

/// Samples p = p_lo + i*step for every i with p <= p_hi (plus a small
/// rounding allowance).
std::vector<ScanRow> scan_excess(int r, double p_lo, double p_hi, double step,
                                 const PsiOptions& options = {});

struct ThresholdOptions {
  double tolerance = 1e-3;
  /// Default bracket is (1, 3r) when both ends are left at 0.
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double margin = 1e-9;
  double scan_step = 0.1;
  PsiOptions psi{};
};

struct ThresholdResult {
  int r = 2;
  double p_star = 0.0;
  double p_lo = 0.0;
  double p_hi = 0.0;
  double margin = 0.0;
  std::vector<ScanRow> scan_table;
  int bisection_steps = 0;
};

/// Raised when the pre-scan does not show exactly one sign change of
/// excess > margin.
class ThresholdError : public std::runtime_error {
public:
  ThresholdError(const std::string& what, std::vector<ScanRow> table)
      : std::runtime_error(what), table_(std::move(table)) {}
  const std::vector<ScanRow>& scan_table() const { return table_; }

private:
  std::vector<ScanRow> table_;
};

/// Infimum p at which excess(r, p) exceeds the margin, by pre-scan and
/// bisection.
ThresholdResult critical_exponent(int r, const ThresholdOptions& options = {});

struct LandscapeRow {
  double x = 0.0;
  double g = 0.0;
};

/// `count` uniform samples of g over [0, 1/(r-1)], endpoints included.
std::vector<LandscapeRow> landscape_samples(int r, double p, int count);

} // namespace degpow::continuous
