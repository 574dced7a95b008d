#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "circcop/angle.hpp"

namespace circcop {

enum class Direction { nondecreasing, nonincreasing };

/// Planar test: for all (x,y), (u,v) in the set, x < u implies y <= v
/// (nondecreasing) or y >= v (nonincreasing). Points sharing x are unconstrained
/// among themselves.
[[nodiscard]] bool is_planar_monotone(std::span<const std::pair<double, double>> points,
                                      Direction direction);

/// A finite support on the torus: nonempty, duplicates removed, sorted by (theta, phi).
class SupportSet {
 public:
  explicit SupportSet(std::vector<std::pair<Angle, Angle>> points);

  [[nodiscard]] const std::vector<std::pair<Angle, Angle>>& points() const noexcept {
    return points_;
  }
  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }

 private:
  std::vector<std::pair<Angle, Angle>> points_;
};

/// Zero directions at which the support is re-drawn: theta -> theta - alpha,
/// phi -> phi - beta (mod 2pi).
struct OriginCut {
  Angle alpha;
  Angle beta;
};

/// The support re-drawn from the given zero directions, as planar points in [0, 2pi)^2.
[[nodiscard]] std::vector<std::pair<double, double>> redraw(const SupportSet& support,
                                                            OriginCut cut);

enum class MonotoneKind { nondecreasing, nonincreasing, both, neither };

enum class MonotoneQuery { nondecreasing, nonincreasing, either };

struct MonotoneVerdict {
  MonotoneKind direction = MonotoneKind::neither;
  std::optional<OriginCut> nondecreasing_cut;
  std::optional<OriginCut> nonincreasing_cut;

  /// The witness for `direction`; the nondecreasing one when both hold.
  [[nodiscard]] std::optional<OriginCut> witness_cut() const {
    return nondecreasing_cut ? nondecreasing_cut : nonincreasing_cut;
  }
};

/// Decides whether some pair of zero directions makes the support planar
/// monotone in the queried direction(s).
///
/// Cuts are searched at the distinct coordinate values, in increasing
/// (theta-rank, phi-rank) order, so the returned witness is the
/// lexicographically smallest. Coordinates closer than `snap_tolerance`
/// (after sorting, no wrap-around) are treated as tied; with the default 0,
/// only exact equality ties and every witness is sound under redraw().
[[nodiscard]] MonotoneVerdict circular_monotone(const SupportSet& support,
                                                MonotoneQuery query = MonotoneQuery::either,
                                                double snap_tolerance = 0.0);

/// Complete dependence phi = sign * theta + alpha0 (mod 2pi).
struct CompleteDependence {
  int sign = 1;
  Angle alpha0;
};

/// Checks phi - theta (then phi + theta) for a common value within
/// `tolerance` radians; alpha0 is the circular mean of those differences.
[[nodiscard]] std::optional<CompleteDependence> fl83_test(const SupportSet& support,
                                                          double tolerance = 1e-9);

}  // namespace circcop
