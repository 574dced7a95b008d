#include "circcop/copula.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "circcop/error.hpp"

namespace circcop {
namespace {

// Copula values on the boundary of I^2 are fixed by groundedness and the
// uniform margins. Returning them directly keeps them exact; the interior
// formulas would otherwise lose an ulp in expressions such as (u + 1) - 1.
std::optional<double> boundary_value(double u, double v) noexcept {
  if (u <= 0.0 || v <= 0.0) return 0.0;
  if (u >= 1.0) return std::min(v, 1.0);
  if (v >= 1.0) return u;
  return std::nullopt;
}

}  // namespace

double eval_pi(double u, double v) noexcept { return u * v; }

double eval_frechet_upper(double u, double v) noexcept { return std::min(u, v); }

double eval_frechet_lower(double u, double v) noexcept {
  if (auto b = boundary_value(u, v)) return *b;
  return std::max(u + v - 1.0, 0.0);
}

double CircularUpperBound::operator()(double u, double v) const {
  if (auto b = boundary_value(u, v)) return *b;
  const double a = a_;
  const double one_minus_a = 1.0 - a;
  if (u <= one_minus_a && v >= a) return std::min(u, v - a);
  if (u >= one_minus_a && v <= a) return std::min(u - one_minus_a, v);
  return std::max(u + v - 1.0, 0.0);
}

double CircularLowerBound::operator()(double u, double v) const {
  if (auto b = boundary_value(u, v)) return *b;
  const double a = a_;
  if (u <= a && v <= a) return std::max(u + v - a, 0.0);
  if (u >= a && v >= a) return std::max(u + v - 1.0, a);
  return std::min(u, v);
}

MixtureWeights mardia_weights(double gamma) {
  if (!(gamma >= -1.0 && gamma <= 1.0)) {
    std::ostringstream msg;
    msg << "mixture gamma must lie in [-1, 1], got " << gamma;
    throw DomainError(msg.str());
  }
  const double g2 = gamma * gamma;
  return {g2 * (1.0 + gamma) / 2.0, 1.0 - g2, g2 * (1.0 - gamma) / 2.0};
}

MardiaMixture::MardiaMixture(double gamma, UnitValue a, UnitValue b)
    : gamma_(gamma), upper_(a), lower_(b), weights_(mardia_weights(gamma)) {}

double MardiaMixture::operator()(double u, double v) const {
  if (auto b = boundary_value(u, v)) return *b;
  double value = weights_.independent * eval_pi(u, v);
  if (weights_.upper != 0.0) value += weights_.upper * upper_(u, v);
  if (weights_.lower != 0.0) value += weights_.lower * lower_(u, v);
  return value;
}

double c_volume(const Copula& copula, const Rect& r) {
  const bool ok = 0.0 <= r.u1 && r.u1 <= r.u2 && r.u2 <= 1.0 &&  //
                  0.0 <= r.v1 && r.v1 <= r.v2 && r.v2 <= 1.0;
  if (!ok) {
    std::ostringstream msg;
    msg << "malformed rectangle [" << r.u1 << ", " << r.u2 << "] x [" << r.v1 << ", " << r.v2
        << "]";
    throw DomainError(msg.str());
  }
  return copula(r.u2, r.v2) - copula(r.u2, r.v1) - copula(r.u1, r.v2) + copula(r.u1, r.v1);
}

}  // namespace circcop
