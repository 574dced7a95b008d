#include "circcop/dependence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "circcop/error.hpp"

namespace circcop {

bool is_planar_monotone(std::span<const std::pair<double, double>> points, Direction direction) {
  std::vector<std::pair<double, double>> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  const bool up = direction == Direction::nondecreasing;

  // Running extreme of y over all strictly smaller x.
  bool have_prev = false;
  double prev = 0.0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    double lo = sorted[i].second;
    double hi = sorted[i].second;
    for (; j < sorted.size() && sorted[j].first == sorted[i].first; ++j) {
      lo = std::min(lo, sorted[j].second);
      hi = std::max(hi, sorted[j].second);
    }
    if (have_prev && (up ? prev > lo : prev < hi)) return false;
    prev = have_prev ? (up ? std::max(prev, hi) : std::min(prev, lo)) : (up ? hi : lo);
    have_prev = true;
    i = j;
  }
  return true;
}

SupportSet::SupportSet(std::vector<std::pair<Angle, Angle>> points) : points_(std::move(points)) {
  if (points_.empty()) throw DomainError("support set must be nonempty");
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

std::vector<std::pair<double, double>> redraw(const SupportSet& support, OriginCut cut) {
  auto shift = [](double x, double origin) {
    double d = x - origin;
    if (d < 0.0) d += kTwoPi;
    return d;
  };
  std::vector<std::pair<double, double>> out;
  out.reserve(support.size());
  for (const auto& [theta, phi] : support.points()) {
    out.emplace_back(shift(theta.value(), cut.alpha.value()), shift(phi.value(), cut.beta.value()));
  }
  return out;
}

namespace {

struct Ranking {
  std::vector<int> rank;            // per input value
  std::vector<double> representative;  // smallest value of each rank
};

Ranking rank_values(const std::vector<double>& values, double tolerance) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  Ranking r;
  r.rank.assign(values.size(), 0);
  double previous = 0.0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const double x = values[order[k]];
    if (k == 0 || x - previous > tolerance) r.representative.push_back(x);
    r.rank[order[k]] = static_cast<int>(r.representative.size()) - 1;
    previous = x;
  }
  return r;
}

// The support reduced to ranks: groups[s] holds the phi ranks at theta rank s.
class RankedSupport {
 public:
  RankedSupport(const SupportSet& support, double tolerance) {
    std::vector<double> thetas;
    std::vector<double> phis;
    for (const auto& [t, p] : support.points()) {
      thetas.push_back(t.value());
      phis.push_back(p.value());
    }
    theta_ = rank_values(thetas, tolerance);
    phi_ = rank_values(phis, tolerance);
    groups_.resize(theta_.representative.size());
    for (std::size_t i = 0; i < thetas.size(); ++i) {
      groups_[static_cast<std::size_t>(theta_.rank[i])].push_back(phi_.rank[i]);
    }
    for (auto& g : groups_) {
      std::sort(g.begin(), g.end());
      g.erase(std::unique(g.begin(), g.end()), g.end());
    }
  }

  std::optional<OriginCut> find_cut(Direction direction) const {
    const int p = static_cast<int>(groups_.size());
    const int q = static_cast<int>(phi_.representative.size());
    const bool up = direction == Direction::nondecreasing;
    std::vector<int> candidates;
    for (int s = 0; s < p; ++s) {
      // The first group must hold the smallest (largest) re-drawn phi.
      candidates.clear();
      for (int r : groups_[static_cast<std::size_t>(s)]) candidates.push_back(up ? r : (r + 1) % q);
      std::sort(candidates.begin(), candidates.end());
      for (int t : candidates) {
        if (linearizes(s, t, up)) {
          return OriginCut{Angle(theta_.representative[static_cast<std::size_t>(s)]),
                           Angle(phi_.representative[static_cast<std::size_t>(t)])};
        }
      }
    }
    return std::nullopt;
  }

 private:
  bool linearizes(int s, int t, bool up) const {
    const int p = static_cast<int>(groups_.size());
    const int q = static_cast<int>(phi_.representative.size());
    int prev = up ? -1 : q;
    for (int k = 0; k < p; ++k) {
      const auto& group = groups_[static_cast<std::size_t>((s + k) % p)];
      int lo = q;
      int hi = -1;
      for (int r : group) {
        const int shifted = ((r - t) % q + q) % q;
        lo = std::min(lo, shifted);
        hi = std::max(hi, shifted);
      }
      if (up) {
        if (prev > lo) return false;
        prev = hi;
      } else {
        if (prev < hi) return false;
        prev = lo;
      }
    }
    return true;
  }

  Ranking theta_;
  Ranking phi_;
  std::vector<std::vector<int>> groups_;
};

}  // namespace

MonotoneVerdict circular_monotone(const SupportSet& support, MonotoneQuery query,
                                  double snap_tolerance) {
  const RankedSupport ranked(support, snap_tolerance);
  MonotoneVerdict verdict;
  if (query != MonotoneQuery::nonincreasing) {
    verdict.nondecreasing_cut = ranked.find_cut(Direction::nondecreasing);
  }
  if (query != MonotoneQuery::nondecreasing) {
    verdict.nonincreasing_cut = ranked.find_cut(Direction::nonincreasing);
  }
  const bool up = verdict.nondecreasing_cut.has_value();
  const bool down = verdict.nonincreasing_cut.has_value();
  verdict.direction = up && down ? MonotoneKind::both
                      : up       ? MonotoneKind::nondecreasing
                      : down     ? MonotoneKind::nonincreasing
                                 : MonotoneKind::neither;
  return verdict;
}

namespace {

std::optional<Angle> common_direction(const std::vector<double>& angles, double tolerance) {
  double s = 0.0;
  double c = 0.0;
  for (double x : angles) {
    s += std::sin(x);
    c += std::cos(x);
  }
  if (std::hypot(s, c) == 0.0) return std::nullopt;
  const Angle mean(std::atan2(s, c));
  for (double x : angles) {
    if (std::abs(angular_difference(x, mean.value())) > tolerance) return std::nullopt;
  }
  return mean;
}

}  // namespace

std::optional<CompleteDependence> fl83_test(const SupportSet& support, double tolerance) {
  std::vector<double> diff;
  std::vector<double> sum;
  for (const auto& [theta, phi] : support.points()) {
    diff.push_back(phi.value() - theta.value());
    sum.push_back(phi.value() + theta.value());
  }
  if (auto a = common_direction(diff, tolerance)) return CompleteDependence{+1, *a};
  if (auto a = common_direction(sum, tolerance)) return CompleteDependence{-1, *a};
  return std::nullopt;
}

}  // namespace circcop
