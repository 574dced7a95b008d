#include "circcop/circular_cdf.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "circcop/error.hpp"

namespace circcop {

double CircularCdf::extend(double theta) const {
  if (!(theta >= 0.0 && theta < 2.0 * kTwoPi)) {
    throw DomainError("extended argument outside [0, 4pi): " + std::to_string(theta));
  }
  if (theta < kTwoPi) return (*this)(theta);
  return (*this)(theta - kTwoPi) + 1.0;
}

double CircularCdf::quasi_inverse(double u) const {
  if (u <= 0.0) return 0.0;
  if (auto jumps = jump_points()) {
    for (double j : *jumps) {
      if ((*this)(j) >= u) return j;
    }
    return kTwoPi;
  }
  return bisect_quasi_inverse(u);
}

double CircularCdf::bisect_quasi_inverse(double u) const {
  if ((*this)(0.0) >= u) return 0.0;
  double lo = 0.0;
  double hi = kTwoPi;
  // Invariant: F(lo) < u <= F(hi), with F(2pi) = 1 as the left limit.
  while (hi - lo > kQuasiInverseTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if ((*this)(mid) >= u) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

std::optional<std::vector<double>> CircularCdf::range_values() const {
  auto jumps = jump_points();
  if (!jumps) return std::nullopt;
  std::vector<double> values{0.0, 1.0};
  values.reserve(jumps->size() + 2);
  for (double j : *jumps) values.push_back((*this)(j));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

// ---------------------------------------------------------------------------

double UniformCircularCdf::operator()(double theta) const {
  if (theta <= 0.0) return 0.0;
  if (theta >= kTwoPi) return 1.0;
  return theta / kTwoPi;
}

double UniformCircularCdf::quasi_inverse(double u) const {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return kTwoPi;
  return u * kTwoPi;
}

// ---------------------------------------------------------------------------

CardioidCdf::CardioidCdf(double rho, Angle mu) : rho_(rho), mu_(mu) {
  if (!(std::abs(rho) <= 0.5)) {
    throw DomainError("cardioid concentration must satisfy |rho| <= 1/2, got " +
                      std::to_string(rho));
  }
  offset_ = rho_ / kPi * std::sin(mu_.value());
}

double CardioidCdf::operator()(double theta) const {
  if (theta <= 0.0) return 0.0;
  if (theta >= kTwoPi) return 1.0;
  const double f = rho_ / kPi * std::sin(theta - mu_.value()) + theta / kTwoPi + offset_;
  return std::clamp(f, 0.0, 1.0);
}

// ---------------------------------------------------------------------------

EmpiricalCircularCdf::EmpiricalCircularCdf(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw DomainError("empirical circular cdf needs at least one atom");
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& a, const Atom& b) { return a.angle < b.angle; });
  double total = 0.0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!(atoms_[i].mass > 0.0)) throw DomainError("atom masses must be positive");
    if (i > 0 && atoms_[i].angle == atoms_[i - 1].angle) {
      throw DomainError("atom angles must be distinct");
    }
    total += atoms_[i].mass;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw DomainError("atom masses must sum to 1, got " + std::to_string(total));
  }

  // An origin atom is first after sorting; its jump belongs to the end of the circle.
  std::vector<Atom> ordered(atoms_.begin(), atoms_.end());
  if (ordered.front().angle.value() == 0.0) {
    std::rotate(ordered.begin(), ordered.begin() + 1, ordered.end());
  }
  double running = 0.0;
  for (const Atom& a : ordered) {
    running += a.mass;
    jumps_.push_back(a.angle.value() == 0.0 ? kTwoPi : a.angle.value());
    cumulative_.push_back(running);
  }
  cumulative_.back() = 1.0;
}

EmpiricalCircularCdf EmpiricalCircularCdf::from_sample(std::span<const Angle> sample) {
  if (sample.empty()) throw DomainError("empirical circular cdf needs a nonempty sample");
  std::map<double, std::size_t> counts;
  for (Angle a : sample) ++counts[a.value()];
  const double n = static_cast<double>(sample.size());
  std::vector<Atom> atoms;
  atoms.reserve(counts.size());
  for (auto [angle, count] : counts) atoms.push_back({Angle(angle), static_cast<double>(count) / n});
  // Rounding in count/n can leave the total a few ulps off 1; fold it into the last atom.
  double total = 0.0;
  for (const Atom& a : atoms) total += a.mass;
  atoms.back().mass += 1.0 - total;
  return EmpiricalCircularCdf(std::move(atoms));
}

double EmpiricalCircularCdf::operator()(double theta) const {
  if (theta <= 0.0) return 0.0;
  if (theta >= kTwoPi) return 1.0;
  auto it = std::upper_bound(jumps_.begin(), jumps_.end(), theta);
  if (it == jumps_.begin()) return 0.0;
  return cumulative_[static_cast<std::size_t>(it - jumps_.begin()) - 1];
}

double EmpiricalCircularCdf::quasi_inverse(double u) const {
  if (u <= 0.0) return 0.0;
  auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) return kTwoPi;
  return jumps_[static_cast<std::size_t>(it - cumulative_.begin())];
}

std::optional<std::vector<double>> EmpiricalCircularCdf::jump_points() const { return jumps_; }

// ---------------------------------------------------------------------------

ShiftedCdf::ShiftedCdf(CdfPtr base, Angle alpha)
    : base_(std::move(base)), alpha_(alpha), base_at_alpha_((*base_)(alpha.value())) {}

double ShiftedCdf::operator()(double theta) const {
  if (theta <= 0.0) return 0.0;
  if (theta >= kTwoPi) return 1.0;
  const double f = base_->extend(theta + alpha_.value()) - base_at_alpha_;
  return std::clamp(f, 0.0, 1.0);
}

std::optional<std::vector<double>> ShiftedCdf::jump_points() const {
  auto jumps = base_->jump_points();
  if (!jumps) return std::nullopt;
  for (double& j : *jumps) {
    const double shifted = reduce_angle(j - alpha_.value());
    j = shifted == 0.0 ? kTwoPi : shifted;
  }
  std::sort(jumps->begin(), jumps->end());
  return jumps;
}

// ---------------------------------------------------------------------------

CdfPtr make_uniform() { return std::make_shared<UniformCircularCdf>(); }

CdfPtr make_cardioid(double rho, Angle mu) { return std::make_shared<CardioidCdf>(rho, mu); }

CdfPtr shift_origin(CdfPtr cdf, Angle alpha) {
  if (alpha.value() == 0.0) return cdf;
  return std::make_shared<ShiftedCdf>(std::move(cdf), alpha);
}

Angle quasi_inverse_angle(const CircularCdf& cdf, UnitValue u) {
  return Angle(cdf.quasi_inverse(u.value()));
}

}  // namespace circcop
