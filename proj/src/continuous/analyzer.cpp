#include "degpow/continuous/analyzer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "degpow/core/numeric.hpp"

namespace degpow::continuous {

namespace {

void require_parameters(int r, double p) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("p must be positive and finite");
}

void require_closed_domain(int r, double x) {
  if (!(x >= 0.0) || x > x_max(r))
    throw std::domain_error("x must lie in [0, 1/(r-1)]");
}

// Derivatives need a positive base in every power; for r >= 3 the upper end
// is still interior to (0, 1) so it is allowed.
void require_derivative_domain(int r, double x) {
  if (!(x > 0.0) || x > x_max(r) || !(x < 1.0))
    throw std::domain_error("derivatives need 0 < x <= 1/(r-1) and x < 1");
}

double golden_section_max(int r, double p, double lo, double hi, double tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double gc = g(r, p, c);
  double gd = g(r, p, d);
  while (b - a > tol) {
    if (gc >= gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - inv_phi * (b - a);
      gc = g(r, p, c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + inv_phi * (b - a);
      gd = g(r, p, d);
    }
    if (b - a <= std::numeric_limits<double>::epsilon() * 4 * std::max(1.0, std::fabs(a))) break;
  }
  return gc >= gd ? c : d;
}

} // namespace

double g(int r, double p, double x) {
  require_parameters(r, p);
  require_closed_domain(r, x);
  const double s = r - 1;
  const double last = std::max(0.0, 1.0 - s * x);
  return s * x * power(1.0 - x, p) + last * power(s * x, p);
}

double g_d1(int r, double p, double x) {
  require_parameters(r, p);
  require_derivative_domain(r, x);
  const double s = r - 1;
  return s * std::pow(1.0 - x, p - 1.0) * (1.0 - (p + 1.0) * x) +
         std::pow(s, p) * std::pow(x, p - 1.0) * (p - s * (p + 1.0) * x);
}

double g_d2(int r, double p, double x) {
  require_parameters(r, p);
  require_derivative_domain(r, x);
  const double s = r - 1;
  return s * p * std::pow(1.0 - x, p - 2.0) * ((p + 1.0) * x - 2.0) +
         s * s * p * std::pow(s * x, p - 2.0) * ((p - 1.0) - (p + 1.0) * s * x);
}

double turan_density(int r, double p) {
  require_parameters(r, p);
  return std::pow((r - 1.0) / r, p);
}

std::string_view to_string(TuranPointClass c) {
  switch (c) {
    case TuranPointClass::local_max: return "local-max";
    case TuranPointClass::local_min: return "local-min";
    case TuranPointClass::degenerate: return "degenerate";
  }
  return "degenerate";
}

PsiResult psi(int r, double p, const PsiOptions& options) {
  require_parameters(r, p);
  if (options.grid_points < 3) throw std::invalid_argument("psi needs at least 3 grid points");
  const int n = options.grid_points;
  const double hi = x_max(r);
  auto grid_x = [&](int i) { return i == n - 1 ? hi : hi * i / (n - 1); };

  std::vector<double> values(n);
  for (int i = 0; i < n; ++i) values[i] = g(r, p, grid_x(i));

  struct Candidate {
    int index;
    double x;
    double value;
  };
  std::vector<Candidate> refined;
  for (int i = 0; i < n; ++i) {
    const bool left_ok = i == 0 || values[i] >= values[i - 1];
    const bool right_ok = i == n - 1 || values[i] >= values[i + 1];
    if (!left_ok || !right_ok) continue;
    const double a = grid_x(std::max(i - 1, 0));
    const double b = grid_x(std::min(i + 1, n - 1));
    Candidate best{i, grid_x(i), values[i]};
    const double x = golden_section_max(r, p, a, b, options.x_tolerance);
    if (const double v = g(r, p, x); v > best.value) best = {i, x, v};
    // The balanced point is feasible by construction; test it exactly.
    if (const double t = 1.0 / r; a <= t && t <= b) {
      if (const double v = g(r, p, t); v >= best.value) best = {i, t, v};
    }
    refined.push_back(best);
  }

  // Neighbouring candidates with no real valley between them are the same
  // hump split up by rounding noise on a flat top.
  std::vector<Candidate> humps;
  for (const auto& c : refined) {
    if (!humps.empty()) {
      auto& prev = humps.back();
      double valley = std::numeric_limits<double>::infinity();
      for (int k = prev.index; k <= c.index; ++k) valley = std::min(valley, values[k]);
      const double floor = std::min(prev.value, c.value);
      if (valley >= floor - 1e-13 * std::fabs(floor)) {
        if (c.value > prev.value) prev = c;
        continue;
      }
    }
    humps.push_back(c);
  }

  PsiResult result;
  result.value = -std::numeric_limits<double>::infinity();
  for (const auto& h : humps) result.value = std::max(result.value, h.value);
  const double window = options.tie_value_tolerance * std::fabs(result.value);
  result.argmax_x = std::numeric_limits<double>::infinity();
  for (const auto& h : humps) {
    if (h.value >= result.value - window) result.local_maxima.push_back({h.x, h.value});
    if (h.value >= result.value - NumericPolicy::tie_tolerance * std::fabs(result.value))
      result.argmax_x = std::min(result.argmax_x, h.x);
  }
  for (std::size_t i = 0; i < result.local_maxima.size() && !result.tie_detected; ++i)
    for (std::size_t j = i + 1; j < result.local_maxima.size(); ++j)
      if (std::fabs(result.local_maxima[i].x - result.local_maxima[j].x) > options.tie_x_separation) {
        result.tie_detected = true;
        break;
      }
  result.turan_point_class = classify_turan_point(r, p);
  return result;
}

TuranPointClass classify_turan_point(int r, double p) {
  const double curvature = g_d2(r, p, 1.0 / r);
  if (std::fabs(curvature) <= 1e-9) return TuranPointClass::degenerate;
  return curvature < 0 ? TuranPointClass::local_max : TuranPointClass::local_min;
}

double psi_lower_bound_at_inv_p(int r, double p) {
  require_parameters(r, p);
  if (p < r - 1) throw std::invalid_argument("x = 1/p is infeasible unless p >= r-1");
  return g(r, p, std::min(1.0 / p, x_max(r)));
}

double epsilon_lower_bound(int r) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  int q = 0;
  while (q * q < 2 * r) ++q;
  const double shifted = r + q;
  return q / (shifted * shifted * (r - 1));
}

Bounds sandwich_bounds(int r, double p) {
  require_parameters(r, p);
  if (p < std::max(1.0, r - 2.0))
    throw std::invalid_argument("sandwich bounds need p >= max(1, r-2)");
  const double common = std::pow(p / (p + 1.0), p) / (p + 1.0);
  return {(r - 1) * common, r * common};
}

double excess(int r, double p, const PsiOptions& options) {
  return psi(r, p, options).value - turan_density(r, p);
}

std::vector<ScanRow> scan_excess(int r, double p_lo, double p_hi, double step,
                                 const PsiOptions& options) {
  if (!(p_lo < p_hi)) throw std::invalid_argument("scan needs p_lo < p_hi");
  if (!(step > 0.0)) throw std::invalid_argument("scan step must be positive");
  const auto samples = static_cast<long long>(std::floor((p_hi - p_lo) / step + 1e-9)) + 1;
  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(samples));
  for (long long i = 0; i < samples; ++i) {
    const double p = p_lo + static_cast<double>(i) * step;
    const auto res = psi(r, p, options);
    rows.push_back({p, res.value - turan_density(r, p), res.argmax_x});
  }
  return rows;
}

ThresholdResult critical_exponent(int r, const ThresholdOptions& options) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  if (!(options.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  double lo = options.bracket_lo;
  double hi = options.bracket_hi;
  if (lo == 0.0 && hi == 0.0) {
    lo = 1.0;
    hi = 3.0 * r;
  }
  auto table = scan_excess(r, lo, hi, options.scan_step, options.psi);
  auto above = [&](double e) { return e > options.margin; };

  int changes = 0;
  std::size_t first_above = table.size();
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (above(table[i].excess) != above(table[i - 1].excess)) {
      ++changes;
      if (first_above == table.size()) first_above = i;
    }
  }
  if (changes != 1 || above(table.front().excess)) {
    throw ThresholdError("expected exactly one sign change of excess-margin in the bracket, found " +
                             std::to_string(changes),
                         std::move(table));
  }

  ThresholdResult result;
  result.r = r;
  result.margin = options.margin;
  double p_lo = table[first_above - 1].p;
  double p_hi = table[first_above].p;
  while (p_hi - p_lo > options.tolerance) {
    const double mid = 0.5 * (p_lo + p_hi);
    if (above(excess(r, mid, options.psi))) p_hi = mid;
    else p_lo = mid;
    ++result.bisection_steps;
  }
  result.p_lo = p_lo;
  result.p_hi = p_hi;
  result.p_star = 0.5 * (p_lo + p_hi);
  result.scan_table = std::move(table);
  return result;
}

std::vector<LandscapeRow> landscape_samples(int r, double p, int count) {
  require_parameters(r, p);
  if (count < 2) throw std::invalid_argument("landscape needs at least 2 samples");
  const double hi = x_max(r);
  std::vector<LandscapeRow> rows;
  rows.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double x = i == count - 1 ? hi : hi * i / (count - 1);
    rows.push_back({x, g(r, p, x)});
  }
  return rows;
}

} // namespace degpow::continuous
