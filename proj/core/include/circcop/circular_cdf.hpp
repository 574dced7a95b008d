#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "circcop/angle.hpp"

namespace circcop {

/// Absolute tolerance, in radians, of the bisection quasi-inverse.
inline constexpr double kQuasiInverseTolerance = 1e-12;

/// A circular distribution function F on [0, 2pi): nondecreasing, F(0) = 0,
/// and F(theta) -> 1 as theta -> 2pi.
///
/// Implementations are immutable. The call operator accepts theta in the
/// closed interval [0, 2pi] and returns the left limit 1 at 2pi, which lets
/// the origin-shift and copula machinery evaluate the end of the circle
/// without special cases.
class CircularCdf {
 public:
  virtual ~CircularCdf() = default;

  [[nodiscard]] virtual double operator()(double theta) const = 0;

  [[nodiscard]] double eval(Angle theta) const { return (*this)(theta.value()); }

  /// F extended to [0, 4pi) by F(theta - 2pi) + 1 on the second lap.
  /// Throws DomainError outside [0, 4pi).
  [[nodiscard]] double extend(double theta) const;

  /// inf{theta | F(theta) >= u}, in [0, 2pi]. The value 2pi is returned only
  /// when F reaches u in the limit at the end of the circle.
  ///
  /// The default implementation is exact for distributions that report
  /// jump_points() and bisects to kQuasiInverseTolerance otherwise.
  [[nodiscard]] virtual double quasi_inverse(double u) const;

  /// Sorted locations in (0, 2pi] of every jump of a purely discrete F, or
  /// nullopt for a continuous F. An atom at the origin jumps at 2pi.
  [[nodiscard]] virtual std::optional<std::vector<double>> jump_points() const {
    return std::nullopt;
  }

  /// Ran F for discrete F (0, every jump value, and 1); nullopt otherwise.
  [[nodiscard]] std::optional<std::vector<double>> range_values() const;

 protected:
  [[nodiscard]] double bisect_quasi_inverse(double u) const;
};

using CdfPtr = std::shared_ptr<const CircularCdf>;

/// F(theta) = theta / 2pi.
class UniformCircularCdf final : public CircularCdf {
 public:
  [[nodiscard]] double operator()(double theta) const override;
  [[nodiscard]] double quasi_inverse(double u) const override;
};

/// Cardioid law with CDF (rho/pi) sin(theta - mu) + theta/2pi + (rho/pi) sin(mu).
/// Requires |rho| <= 1/2 so that the density 1 + 2 rho cos(theta - mu) stays
/// nonnegative.
class CardioidCdf final : public CircularCdf {
 public:
  CardioidCdf(double rho, Angle mu);

  [[nodiscard]] double operator()(double theta) const override;

  [[nodiscard]] double rho() const noexcept { return rho_; }
  [[nodiscard]] Angle mu() const noexcept { return mu_; }

 private:
  double rho_;
  Angle mu_;
  double offset_;
};

struct Atom {
  Angle angle;
  double mass = 0.0;
};

/// Discrete circular law with finitely many atoms.
///
/// F(theta) sums the masses of atoms in (0, theta]. An atom at the origin is
/// only collected at the end of the circle, keeping F(0) = 0.
class EmpiricalCircularCdf final : public CircularCdf {
 public:
  /// Atoms are sorted by angle; masses must be positive and sum to 1 within
  /// 1e-12, and angles must be distinct.
  explicit EmpiricalCircularCdf(std::vector<Atom> atoms);

  /// Equal-mass atoms at the given angles; duplicates accumulate mass.
  static EmpiricalCircularCdf from_sample(std::span<const Angle> sample);

  [[nodiscard]] double operator()(double theta) const override;
  [[nodiscard]] double quasi_inverse(double u) const override;
  [[nodiscard]] std::optional<std::vector<double>> jump_points() const override;

  [[nodiscard]] const std::vector<Atom>& atoms() const noexcept { return atoms_; }

 private:
  std::vector<Atom> atoms_;
  // (location in (0, 2pi], cumulative mass) after moving an origin atom to 2pi.
  std::vector<double> jumps_;
  std::vector<double> cumulative_;
};

/// F_alpha(theta) = F~(theta + alpha) - F~(alpha): F seen from origin alpha.
class ShiftedCdf final : public CircularCdf {
 public:
  ShiftedCdf(CdfPtr base, Angle alpha);

  [[nodiscard]] double operator()(double theta) const override;
  [[nodiscard]] std::optional<std::vector<double>> jump_points() const override;

  [[nodiscard]] const CdfPtr& base() const noexcept { return base_; }
  [[nodiscard]] Angle alpha() const noexcept { return alpha_; }

 private:
  CdfPtr base_;
  Angle alpha_;
  double base_at_alpha_;
};

[[nodiscard]] CdfPtr make_uniform();
[[nodiscard]] CdfPtr make_cardioid(double rho, Angle mu);

/// The origin-shifted distribution function F_alpha. Shifting by 0 returns F.
[[nodiscard]] CdfPtr shift_origin(CdfPtr cdf, Angle alpha);

/// Quasi-inverse reported as an Angle: the end-of-circle value 2pi wraps to 0.
[[nodiscard]] Angle quasi_inverse_angle(const CircularCdf& cdf, UnitValue u);

}  // namespace circcop
