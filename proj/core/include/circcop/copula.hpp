#pragma once

#include <memory>

#include "circcop/angle.hpp"

namespace circcop {

/// A bivariate copula C: I^2 -> I. Arguments must lie in [0, 1].
class Copula {
 public:
  virtual ~Copula() = default;
  [[nodiscard]] virtual double operator()(double u, double v) const = 0;
};

using CopulaPtr = std::shared_ptr<const Copula>;

[[nodiscard]] double eval_pi(double u, double v) noexcept;
/// M(u, v) = min(u, v).
[[nodiscard]] double eval_frechet_upper(double u, double v) noexcept;
/// W(u, v) = max(u + v - 1, 0).
[[nodiscard]] double eval_frechet_lower(double u, double v) noexcept;

class IndependenceCopula final : public Copula {
 public:
  [[nodiscard]] double operator()(double u, double v) const override { return eval_pi(u, v); }
};

class UpperBoundCopula final : public Copula {
 public:
  [[nodiscard]] double operator()(double u, double v) const override {
    return eval_frechet_upper(u, v);
  }
};

class LowerBoundCopula final : public Copula {
 public:
  [[nodiscard]] double operator()(double u, double v) const override {
    return eval_frechet_lower(u, v);
  }
};

/// M_a: the class of upper bounds reachable by moving the zero directions.
/// Mass 1 - a sits uniformly on (0,a)-(1-a,1) and mass a on (1-a,0)-(1,a),
/// i.e. v = u + a (mod 1). M_0 = M_1 = M.
class CircularUpperBound final : public Copula {
 public:
  explicit CircularUpperBound(UnitValue a) : a_(a.value()) {}

  [[nodiscard]] double operator()(double u, double v) const override;
  [[nodiscard]] double a() const noexcept { return a_; }

 private:
  double a_;
};

/// W_a: the lower-bound counterpart. Mass a on (0,a)-(a,0) and mass 1 - a on
/// (a,1)-(1,a), i.e. v = a - u (mod 1). W_0 = W_1 = W.
class CircularLowerBound final : public Copula {
 public:
  explicit CircularLowerBound(UnitValue a) : a_(a.value()) {}

  [[nodiscard]] double operator()(double u, double v) const override;
  [[nodiscard]] double a() const noexcept { return a_; }

 private:
  double a_;
};

struct MixtureWeights {
  double upper = 0.0;        // gamma^2 (1 + gamma) / 2
  double independent = 0.0;  // 1 - gamma^2
  double lower = 0.0;        // gamma^2 (1 - gamma) / 2
};

/// Circular Mardia family: weights.upper M_a + weights.independent Pi +
/// weights.lower W_b, with gamma in [-1, 1].
class MardiaMixture final : public Copula {
 public:
  MardiaMixture(double gamma, UnitValue a, UnitValue b);

  [[nodiscard]] double operator()(double u, double v) const override;

  [[nodiscard]] double gamma() const noexcept { return gamma_; }
  [[nodiscard]] const CircularUpperBound& upper() const noexcept { return upper_; }
  [[nodiscard]] const CircularLowerBound& lower() const noexcept { return lower_; }
  [[nodiscard]] MixtureWeights weights() const noexcept { return weights_; }

 private:
  double gamma_;
  CircularUpperBound upper_;
  CircularLowerBound lower_;
  MixtureWeights weights_;
};

[[nodiscard]] MixtureWeights mardia_weights(double gamma);

struct Rect {
  double u1 = 0.0;
  double u2 = 1.0;
  double v1 = 0.0;
  double v2 = 1.0;
};

/// C-volume C(u2,v2) - C(u2,v1) - C(u1,v2) + C(u1,v1). Not clamped, so
/// rounding can leave it a few ulps below zero. Throws DomainError unless
/// 0 <= u1 <= u2 <= 1 and 0 <= v1 <= v2 <= 1.
[[nodiscard]] double c_volume(const Copula& copula, const Rect& rect);

}  // namespace circcop
