#pragma once

#include <memory>

#include "circcop/angle.hpp"
#include "circcop/circular_cdf.hpp"
#include "circcop/copula.hpp"

namespace circcop {

/// Zero directions (alpha, beta) for the theta and phi axes.
struct OriginShift {
  Angle alpha;
  Angle beta;
};

/// A circular joint distribution function H on [0, 2pi)^2 with its margins.
///
/// Like CircularCdf, the call operator accepts the closed square [0, 2pi]^2
/// and returns the left limits on the far edges: H(theta, 2pi) = F(theta),
/// H(2pi, phi) = G(phi).
class JointDistribution {
 public:
  virtual ~JointDistribution() = default;

  [[nodiscard]] virtual double operator()(double theta, double phi) const = 0;
  [[nodiscard]] virtual const CdfPtr& marginal_theta() const noexcept = 0;
  [[nodiscard]] virtual const CdfPtr& marginal_phi() const noexcept = 0;

  [[nodiscard]] double eval(Angle theta, Angle phi) const {
    return (*this)(theta.value(), phi.value());
  }

  /// H~ on [0, 4pi)^2. An argument equal to 2pi takes the second-lap branch.
  /// Throws DomainError outside [0, 4pi)^2.
  [[nodiscard]] double extend(double theta, double phi) const;
};

using JointPtr = std::shared_ptr<const JointDistribution>;

/// Sklar composition H(theta, phi) = C(F(theta), G(phi)).
class CircularJoint final : public JointDistribution {
 public:
  CircularJoint(CopulaPtr copula, CdfPtr marginal_theta, CdfPtr marginal_phi);

  [[nodiscard]] double operator()(double theta, double phi) const override;
  [[nodiscard]] const CdfPtr& marginal_theta() const noexcept override { return f_; }
  [[nodiscard]] const CdfPtr& marginal_phi() const noexcept override { return g_; }
  [[nodiscard]] const CopulaPtr& copula() const noexcept { return copula_; }

 private:
  CopulaPtr copula_;
  CdfPtr f_;
  CdfPtr g_;
};

/// H_{alpha,beta}: the joint law re-read from the zero directions (alpha, beta).
class ShiftedJoint final : public JointDistribution {
 public:
  ShiftedJoint(JointPtr base, OriginShift shift);

  [[nodiscard]] double operator()(double theta, double phi) const override;
  [[nodiscard]] const CdfPtr& marginal_theta() const noexcept override { return f_; }
  [[nodiscard]] const CdfPtr& marginal_phi() const noexcept override { return g_; }

  [[nodiscard]] const JointPtr& base() const noexcept { return base_; }
  [[nodiscard]] OriginShift shift() const noexcept { return shift_; }

 private:
  JointPtr base_;
  OriginShift shift_;
  CdfPtr f_;
  CdfPtr g_;
  double corner_;  // H~(alpha, beta)
};

[[nodiscard]] JointPtr make_joint(CopulaPtr copula, CdfPtr marginal_theta, CdfPtr marginal_phi);

/// Re-origins a joint law. A zero shift returns the argument unchanged.
[[nodiscard]] JointPtr shift_joint(JointPtr joint, OriginShift shift);

/// C_{alpha,beta}(u, v) = H_{alpha,beta}(F_alpha^(-1)(u), G_beta^(-1)(v)).
///
/// For a discrete margin the arguments are restricted to its range; values
/// further than 1e-12 from Ran F_alpha (or Ran G_beta) raise
/// RangeRestrictionError.
class ShiftedCopula final : public Copula {
 public:
  ShiftedCopula(JointPtr joint, OriginShift shift);

  [[nodiscard]] double operator()(double u, double v) const override;

  [[nodiscard]] const JointPtr& shifted_joint() const noexcept { return shifted_; }

 private:
  JointPtr shifted_;
  std::optional<std::vector<double>> range_theta_;
  std::optional<std::vector<double>> range_phi_;
};

[[nodiscard]] double shifted_copula(JointPtr joint, OriginShift shift, UnitValue u, UnitValue v);

/// The M_a parameter of the shifted upper bound, from F(alpha) and G(beta):
/// 1 - (G(beta) - F(alpha)) when F(alpha) <= G(beta), else F(alpha) - G(beta).
[[nodiscard]] UnitValue theorem1_parameter(UnitValue f_alpha, UnitValue g_beta);

/// C_{alpha,beta}(u, v) for H = min(F, G) evaluated from the piecewise case
/// tables over the quadrants I1..I4 and their sub-regions. Depends only on
/// F(alpha) and G(beta); independent of both the numerical shift and M_a.
[[nodiscard]] double appendix_region_eval(UnitValue f_alpha, UnitValue g_beta, double u, double v);

/// Boundary-inclusive square lattice {0, 1/(n-1), ..., 1}^2.
struct Grid {
  int points = 51;
};

/// max |A(u,v) - B(u,v)| over the lattice.
[[nodiscard]] double max_deviation(const Copula& a, const Copula& b, Grid grid = {});

struct Theorem1Check {
  double a = 0.0;                 // theorem1_parameter(F(alpha), G(beta))
  double shift_vs_upper = 0.0;    // shifted copula vs M_a
  double table_vs_upper = 0.0;    // case tables vs M_a
  double shift_vs_table = 0.0;    // shifted copula vs case tables
  [[nodiscard]] double max() const noexcept;
};

/// Evaluates the shifted comonotone joint M(F, G) three ways on the grid.
[[nodiscard]] Theorem1Check check_theorem1(const CdfPtr& f, const CdfPtr& g, OriginShift shift,
                                           Grid grid = {});

struct LowerBoundFit {
  double a = 0.0;
  double max_deviation = 0.0;
};

/// Finds a in [0, 1] minimising the grid max-deviation between `copula` and
/// W_a: a dense scan followed by golden-section refinement.
[[nodiscard]] LowerBoundFit fit_lower_bound_parameter(const Copula& copula, Grid grid = {});

}  // namespace circcop
