#include "circcop/circular_joint.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "circcop/error.hpp"

namespace circcop {

double JointDistribution::extend(double theta, double phi) const {
  constexpr double kLimit = 2.0 * kTwoPi;
  if (!(theta >= 0.0 && theta < kLimit && phi >= 0.0 && phi < kLimit)) {
    std::ostringstream msg;
    msg << "extended joint argument outside [0, 4pi)^2: (" << theta << ", " << phi << ")";
    throw DomainError(msg.str());
  }
  const bool theta_wraps = theta >= kTwoPi;
  const bool phi_wraps = phi >= kTwoPi;
  const CircularCdf& f = *marginal_theta();
  const CircularCdf& g = *marginal_phi();
  if (!theta_wraps && !phi_wraps) return (*this)(theta, phi);
  if (!theta_wraps) return f(theta) + (*this)(theta, phi - kTwoPi);
  if (!phi_wraps) return g(phi) + (*this)(theta - kTwoPi, phi);
  const double t = theta - kTwoPi;
  const double p = phi - kTwoPi;
  return 1.0 + f(t) + g(p) + (*this)(t, p);
}

// ---------------------------------------------------------------------------

CircularJoint::CircularJoint(CopulaPtr copula, CdfPtr marginal_theta, CdfPtr marginal_phi)
    : copula_(std::move(copula)), f_(std::move(marginal_theta)), g_(std::move(marginal_phi)) {
  if (!copula_ || !f_ || !g_) throw DomainError("circular joint needs a copula and two margins");
}

double CircularJoint::operator()(double theta, double phi) const {
  return (*copula_)((*f_)(theta), (*g_)(phi));
}

JointPtr make_joint(CopulaPtr copula, CdfPtr marginal_theta, CdfPtr marginal_phi) {
  return std::make_shared<CircularJoint>(std::move(copula), std::move(marginal_theta),
                                         std::move(marginal_phi));
}

// ---------------------------------------------------------------------------

ShiftedJoint::ShiftedJoint(JointPtr base, OriginShift shift)
    : base_(std::move(base)),
      shift_(shift),
      f_(shift_origin(base_->marginal_theta(), shift.alpha)),
      g_(shift_origin(base_->marginal_phi(), shift.beta)),
      corner_(base_->extend(shift.alpha.value(), shift.beta.value())) {}

double ShiftedJoint::operator()(double theta, double phi) const {
  const double a = shift_.alpha.value();
  const double b = shift_.beta.value();
  const double t = std::clamp(theta, 0.0, kTwoPi) + a;
  const double p = std::clamp(phi, 0.0, kTwoPi) + b;
  return base_->extend(t, p) - base_->extend(a, p) - base_->extend(t, b) + corner_;
}

JointPtr shift_joint(JointPtr joint, OriginShift shift) {
  if (shift.alpha.value() == 0.0 && shift.beta.value() == 0.0) return joint;
  return std::make_shared<ShiftedJoint>(std::move(joint), shift);
}

// ---------------------------------------------------------------------------

namespace {

double snap_to_range(const std::optional<std::vector<double>>& range, double x, const char* axis) {
  if (!range) return x;
  auto it = std::lower_bound(range->begin(), range->end(), x);
  double best = it == range->end() ? range->back() : *it;
  if (it != range->begin() && std::abs(*std::prev(it) - x) < std::abs(best - x)) {
    best = *std::prev(it);
  }
  if (std::abs(best - x) > 1e-12) {
    std::ostringstream msg;
    msg << axis << " argument " << x << " is not in the range of the discrete margin";
    throw RangeRestrictionError(msg.str());
  }
  return best;
}

}  // namespace

ShiftedCopula::ShiftedCopula(JointPtr joint, OriginShift shift)
    : shifted_(shift_joint(std::move(joint), shift)),
      range_theta_(shifted_->marginal_theta()->range_values()),
      range_phi_(shifted_->marginal_phi()->range_values()) {}

double ShiftedCopula::operator()(double u, double v) const {
  u = snap_to_range(range_theta_, u, "u");
  v = snap_to_range(range_phi_, v, "v");
  const double theta = shifted_->marginal_theta()->quasi_inverse(u);
  const double phi = shifted_->marginal_phi()->quasi_inverse(v);
  return (*shifted_)(theta, phi);
}

double shifted_copula(JointPtr joint, OriginShift shift, UnitValue u, UnitValue v) {
  return ShiftedCopula(std::move(joint), shift)(u.value(), v.value());
}

// ---------------------------------------------------------------------------

UnitValue theorem1_parameter(UnitValue f_alpha, UnitValue g_beta) {
  const double fa = f_alpha.value();
  const double gb = g_beta.value();
  return UnitValue(fa <= gb ? 1.0 - (gb - fa) : fa - gb);
}

double appendix_region_eval(UnitValue f_alpha, UnitValue g_beta, double u, double v) {
  const double fa = f_alpha.value();
  const double gb = g_beta.value();
  const bool u_first_lap = u < 1.0 - fa;  // F_alpha^(-1)(u) + alpha < 2pi
  const bool v_first_lap = v < 1.0 - gb;  // G_beta^(-1)(v) + beta < 2pi

  if (gb > fa) {
    const double d = gb - fa;
    const double e = 1.0 - d;
    if (u_first_lap && v_first_lap) {  // I1
      if (u <= d) return 0.0;
      if (v > u - d) return u - d;
      return v;
    }
    if (u_first_lap) {  // I2
      if (u <= d && v <= e) return 0.0;
      if (u > d && v <= e) return u - d;
      if (v > u + e) return u;
      if (u <= d) return v - e;
      return u + v - 1.0;
    }
    if (v_first_lap) return v;  // I3
    // I4
    if (v <= u - d) return v;
    if (v <= e) return u - d;
    return u + v - 1.0;
  }

  const double d = fa - gb;
  const double e = 1.0 - d;
  if (u_first_lap && v_first_lap) {  // I1
    if (v <= d) return 0.0;
    if (v <= u + d) return v - d;
    return u;
  }
  if (u_first_lap) return u;  // I2
  if (v_first_lap) {          // I3
    if (u <= e && v <= d) return 0.0;
    if (v <= u - e) return v;
    if (u > e && v <= d) return u - e;
    if (u <= e) return v - d;
    return u + v - 1.0;
  }
  // I4
  if (v > u + d) return u;
  if (u <= e) return v - d;
  return u + v - 1.0;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<double> lattice(Grid grid) {
  if (grid.points < 2) throw DomainError("grid needs at least 2 points per axis");
  std::vector<double> xs(static_cast<std::size_t>(grid.points));
  const double step = 1.0 / (grid.points - 1);
  for (int i = 0; i < grid.points; ++i) xs[static_cast<std::size_t>(i)] = i * step;
  xs.back() = 1.0;
  return xs;
}

}  // namespace

double max_deviation(const Copula& a, const Copula& b, Grid grid) {
  const auto xs = lattice(grid);
  double worst = 0.0;
  for (double u : xs) {
    for (double v : xs) worst = std::max(worst, std::abs(a(u, v) - b(u, v)));
  }
  return worst;
}

double Theorem1Check::max() const noexcept {
  return std::max({shift_vs_upper, table_vs_upper, shift_vs_table});
}

Theorem1Check check_theorem1(const CdfPtr& f, const CdfPtr& g, OriginShift shift, Grid grid) {
  const UnitValue fa((*f)(shift.alpha.value()));
  const UnitValue gb((*g)(shift.beta.value()));
  Theorem1Check out;
  out.a = theorem1_parameter(fa, gb).value();

  const ShiftedCopula shifted(make_joint(std::make_shared<UpperBoundCopula>(), f, g), shift);
  const CircularUpperBound upper{UnitValue(out.a)};
  const auto xs = lattice(grid);
  for (double u : xs) {
    for (double v : xs) {
      const double s = shifted(u, v);
      const double t = appendix_region_eval(fa, gb, u, v);
      const double m = upper(u, v);
      out.shift_vs_upper = std::max(out.shift_vs_upper, std::abs(s - m));
      out.table_vs_upper = std::max(out.table_vs_upper, std::abs(t - m));
      out.shift_vs_table = std::max(out.shift_vs_table, std::abs(s - t));
    }
  }
  return out;
}

LowerBoundFit fit_lower_bound_parameter(const Copula& copula, Grid grid) {
  const auto xs = lattice(grid);
  std::vector<double> values;
  values.reserve(xs.size() * xs.size());
  for (double u : xs) {
    for (double v : xs) values.push_back(copula(u, v));
  }
  auto deviation = [&](double a) {
    const CircularLowerBound w{UnitValue(a)};
    double worst = 0.0;
    std::size_t k = 0;
    for (double u : xs) {
      for (double v : xs) worst = std::max(worst, std::abs(values[k++] - w(u, v)));
    }
    return worst;
  };

  constexpr int kScan = 1000;
  LowerBoundFit best{0.0, deviation(0.0)};
  for (int i = 1; i <= kScan; ++i) {
    const double a = static_cast<double>(i) / kScan;
    const double dev = deviation(a);
    if (dev < best.max_deviation) best = {a, dev};
  }

  // Golden-section search in the neighbouring scan cells.
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = std::max(0.0, best.a - 1.0 / kScan);
  double hi = std::min(1.0, best.a + 1.0 / kScan);
  double x1 = hi - invphi * (hi - lo);
  double x2 = lo + invphi * (hi - lo);
  double f1 = deviation(x1);
  double f2 = deviation(x2);
  while (hi - lo > 1e-14) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = deviation(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = deviation(x2);
    }
  }
  for (double a : {x1, x2}) {
    const double dev = deviation(a);
    if (dev < best.max_deviation) best = {a, dev};
  }
  return best;
}

}  // namespace circcop
