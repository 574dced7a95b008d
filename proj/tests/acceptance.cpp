// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "circcop/circular_joint.hpp"
#include "circcop/copula.hpp"
#include "circcop/dependence.hpp"
#include "circcop/sampling.hpp"
#include "circcop_cli/cli.hpp"
#include "support/oracles.hpp"

using namespace circcop;

namespace {

// Tolerances and sizes, fixed before any run.
constexpr double kVolumeTol = 1e-12;
constexpr int kRectangles = 10000;
constexpr double kAxiomsBudget = 5.0;
constexpr int kSandwichGrid = 101;
constexpr double kSandwichTol = 1e-12;
constexpr int kShifts = 20;
constexpr int kShiftGrid = 51;
constexpr double kShiftTol = 1e-8;
constexpr double kShiftBudget = 30.0;
constexpr std::size_t kMixtureN = 500;
constexpr std::uint64_t kMixtureSeed = 20190101;
constexpr double kSigmas = 3.0;
constexpr double kOnSegmentTol = 1e-9;
constexpr std::size_t kKsN = 10000;
constexpr double kKsCritical1pct = 1.628;  // sqrt(n) * D at alpha = 0.01, Stephens form
constexpr double kMixtureBudget = 10.0;
constexpr std::size_t kEmpiricalN = 100000;
constexpr int kEmpiricalGrid = 21;
constexpr std::uint64_t kEmpiricalSeed = 20190101;
constexpr int kMonotoneRuns = 50;
constexpr std::size_t kMonotoneN = 500;
constexpr std::size_t kIndependentN = 100;
constexpr int kIndependentNeitherMin = 49;
constexpr double kFl83Tol = 1e-9;

constexpr double kMuF = kPi;
constexpr double kMuG = kPi / 3.0;
constexpr double kRhoF = 0.1;
constexpr double kRhoG = 0.3;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  while (!o.detail.empty() && (o.detail.back() == ' ' || o.detail.back() == ';')) o.detail.pop_back();
  std::printf("%s  %d  %-34s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", id, name, secs,
              o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string num(const char* spec, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Named {
  std::string name;
  CopulaPtr copula;
};

std::vector<Named> criterion_copulas() {
  std::vector<Named> out{{"Pi", std::make_shared<IndependenceCopula>()},
                         {"M", std::make_shared<UpperBoundCopula>()},
                         {"W", std::make_shared<LowerBoundCopula>()}};
  for (double a : {0.0, 0.25, 0.5, 0.7, 1.0}) {
    out.push_back({"M_a(" + num("%g", a) + ")", std::make_shared<CircularUpperBound>(UnitValue(a))});
  }
  for (double a : {0.0, 0.4, 0.5, 1.0}) {
    out.push_back({"W_a(" + num("%g", a) + ")", std::make_shared<CircularLowerBound>(UnitValue(a))});
  }
  for (double g : {-0.7, -0.5, -0.3, 0.3, 0.5, 0.7}) {
    out.push_back({"mardia(" + num("%g", g) + ")",
                   std::make_shared<MardiaMixture>(g, UnitValue(0.7), UnitValue(0.4))});
  }
  return out;
}

CdfPtr theta_margin() { return make_cardioid(kRhoF, Angle(kMuF)); }
CdfPtr phi_margin() { return make_cardioid(kRhoG, Angle(kMuG)); }

std::vector<OriginShift> random_shifts(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::vector<OriginShift> out;
  for (int i = 0; i < kShifts; ++i) out.push_back({Angle(angle(gen)), Angle(angle(gen))});
  return out;
}

Outcome axioms() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> ts = oracle::unit_lattice(1001);
  for (int i = 0; i < 1000; ++i) ts.push_back(unit(gen));

  std::string bad;
  double worst_volume = 0.0;
  for (const auto& [name, c] : criterion_copulas()) {
    for (double t : ts) {
      if ((*c)(t, 0.0) != 0.0 || (*c)(0.0, t) != 0.0 || (*c)(t, 1.0) != t || (*c)(1.0, t) != t) {
        bad += name + " margin at t=" + num("%.17g", t) + "; ";
        break;
      }
    }
    for (int i = 0; i < kRectangles; ++i) {
      double u1 = unit(gen), u2 = unit(gen), v1 = unit(gen), v2 = unit(gen);
      if (u1 > u2) std::swap(u1, u2);
      if (v1 > v2) std::swap(v1, v2);
      worst_volume = std::min(worst_volume, c_volume(*c, {u1, u2, v1, v2}));
    }
  }
  const double secs = seconds_since(t0);
  const bool ok = bad.empty() && worst_volume >= -kVolumeTol && secs < kAxiomsBudget;
  return {ok, std::to_string(criterion_copulas().size()) + " copulas, min volume " +
                  num("%.3g", worst_volume) + (bad.empty() ? "" : ", " + bad)};
}

Outcome sandwich() {
  double worst = 0.0;
  const auto grid = oracle::unit_lattice(kSandwichGrid);
  for (const auto& [name, c] : criterion_copulas()) {
    for (double u : grid) {
      for (double v : grid) {
        const double x = (*c)(u, v);
        worst = std::max({worst, eval_frechet_lower(u, v) - x, x - eval_frechet_upper(u, v)});
      }
    }
  }
  return {worst <= kSandwichTol, "max violation " + num("%.3g", worst)};
}

Outcome shifted_upper() {
  const auto t0 = std::chrono::steady_clock::now();
  const CdfPtr f = theta_margin();
  const CdfPtr g = phi_margin();
  double worst = 0.0;
  for (const OriginShift& s : random_shifts(101)) {
    worst = std::max(worst, check_theorem1(f, g, s, Grid{kShiftGrid}).max());
  }
  const double secs = seconds_since(t0);
  return {worst < kShiftTol && secs < kShiftBudget,
          "worst pairwise disagreement " + num("%.3g", worst) + " over " +
              std::to_string(kShifts) + " shifts"};
}

Outcome shifted_lower() {
  const CdfPtr f = theta_margin();
  const CdfPtr g = phi_margin();
  const JointPtr joint = make_joint(std::make_shared<LowerBoundCopula>(), f, g);
  double worst = 0.0;
  double worst_mapping = 0.0;
  for (const OriginShift& s : random_shifts(202)) {
    const LowerBoundFit fit = fit_lower_bound_parameter(ShiftedCopula(joint, s), Grid{kShiftGrid});
    worst = std::max(worst, fit.max_deviation);
    double guess = 1.0 - f->eval(s.alpha) - g->eval(s.beta);
    guess -= std::floor(guess);
    const double gap = std::abs(fit.a - guess);
    worst_mapping = std::max(worst_mapping, std::min(gap, 1.0 - gap));
  }
  return {worst < kShiftTol, "worst fit " + num("%.3g", worst) +
                                 "; |a - (1-F(alpha)-G(beta) mod 1)| <= " +
                                 num("%.2g", worst_mapping)};
}

bool on_upper(const CopulaDraw& d, double a) {
  double target = d.u + a;
  if (target > 1.0) target -= 1.0;
  const double gap = std::abs(d.v - target);
  return std::min(gap, 1.0 - gap) < kOnSegmentTol;
}

bool on_lower(const CopulaDraw& d, double b) {
  double target = b - d.u;
  if (target < 0.0) target += 1.0;
  const double gap = std::abs(d.v - target);
  return std::min(gap, 1.0 - gap) < kOnSegmentTol;
}

Outcome mixture_sample() {
  const auto t0 = std::chrono::steady_clock::now();
  constexpr double a = 0.7;
  constexpr double b = 0.4;
  bool ok = true;
  std::string detail;
  for (double gamma : {0.7, -0.7}) {
    const MardiaMixture model(gamma, UnitValue(a), UnitValue(b));
    const MixtureWeights w = model.weights();
    const auto draws = sample_copula_chunked(model, kMixtureN, kMixtureSeed);
    double up = 0;
    double down = 0;
    for (const auto& d : draws) {
      up += on_upper(d, a) ? 1.0 : 0.0;
      down += on_lower(d, b) ? 1.0 : 0.0;
    }
    const double n = static_cast<double>(kMixtureN);
    const double su = std::sqrt(w.upper * (1 - w.upper) / n);
    const double sd = std::sqrt(w.lower * (1 - w.lower) / n);
    const double zu = (up / n - w.upper) / su;
    const double zd = (down / n - w.lower) / sd;
    ok = ok && std::abs(zu) <= kSigmas && std::abs(zd) <= kSigmas;
    detail += "g=" + num("%+.1f", gamma) + ": M " + num("%.3f", up / n) + " (z " + num("%+.2f", zu) +
              "), W " + num("%.3f", down / n) + " (z " + num("%+.2f", zd) + "); ";

    const auto pairs = to_circular(sample_copula_chunked(model, kKsN, kMixtureSeed + 1),
                                   *theta_margin(), *phi_margin());
    std::vector<double> th;
    std::vector<double> ph;
    for (const auto& [t, p] : pairs) {
      th.push_back(t.value());
      ph.push_back(p.value());
    }
    const double sn = std::sqrt(static_cast<double>(kKsN));
    const double scale = sn + 0.12 + 0.11 / sn;
    const double df = scale * oracle::ks_statistic(th, [](double x) {
      return oracle::cardioid_cdf_by_quadrature(kRhoF, kMuF, x);
    });
    const double dg = scale * oracle::ks_statistic(ph, [](double x) {
      return oracle::cardioid_cdf_by_quadrature(kRhoG, kMuG, x);
    });
    ok = ok && df < kKsCritical1pct && dg < kKsCritical1pct;
    detail += "KS " + num("%.3f", df) + "/" + num("%.3f", dg) + "; ";
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < kMixtureBudget;
  return {ok, detail + "critical " + num("%.3f", kKsCritical1pct)};
}

Outcome empirical() {
  bool ok = true;
  std::string detail;
  const auto grid = oracle::unit_lattice(kEmpiricalGrid);
  for (double gamma : {-0.5, 0.5}) {
    const MardiaMixture model(gamma, UnitValue(0.7), UnitValue(0.4));
    const auto draws = sample_copula_chunked(model, kEmpiricalN, kEmpiricalSeed);
    // Bin to the grid cell index, then accumulate counts into C_n on the lattice.
    const int m = kEmpiricalGrid;
    std::vector<double> counts(static_cast<std::size_t>(m * m), 0.0);
    for (const auto& d : draws) {
      // Smallest lattice index i with grid[i] >= u.
      auto index = [&](double x) {
        return static_cast<int>(std::lower_bound(grid.begin(), grid.end(), x) - grid.begin());
      };
      counts[static_cast<std::size_t>(index(d.u) * m + index(d.v))] += 1.0;
    }
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const double left = i > 0 ? counts[static_cast<std::size_t>((i - 1) * m + j)] : 0.0;
        const double below = j > 0 ? counts[static_cast<std::size_t>(i * m + j - 1)] : 0.0;
        const double diag = i > 0 && j > 0 ? counts[static_cast<std::size_t>((i - 1) * m + j - 1)] : 0.0;
        counts[static_cast<std::size_t>(i * m + j)] += left + below - diag;
      }
    }
    int exceed = 0;
    double worst_ratio = 0.0;
    const double n = static_cast<double>(kEmpiricalN);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const double c = model(grid[static_cast<std::size_t>(i)], grid[static_cast<std::size_t>(j)]);
        const double cn = counts[static_cast<std::size_t>(i * m + j)] / n;
        const double band = kSigmas * std::sqrt(c * (1.0 - c) / n);
        const double dev = std::abs(cn - c);
        if (dev > band) ++exceed;
        if (band > 0.0) worst_ratio = std::max(worst_ratio, dev / band);
      }
    }
    ok = ok && exceed == 0;
    detail += "g=" + num("%+.1f", gamma) + ": " + std::to_string(exceed) + "/" +
              std::to_string(m * m) + " outside band, max |dev|/band " + num("%.2f", worst_ratio) + "; ";
  }
  return {ok, detail};
}

SupportSet sample_support(double gamma, std::size_t n, std::uint64_t seed) {
  const MardiaMixture model(gamma, UnitValue(0.7), UnitValue(0.4));
  return SupportSet(
      to_circular(sample_copula_chunked(model, n, seed), *theta_margin(), *phi_margin()));
}

Outcome monotone() {
  int up = 0;
  int down = 0;
  int neither = 0;
  for (int k = 0; k < kMonotoneRuns; ++k) {
    const auto seed = static_cast<std::uint64_t>(1000 + k);
    up += circular_monotone(sample_support(1.0, kMonotoneN, seed)).direction == MonotoneKind::nondecreasing;
    down += circular_monotone(sample_support(-1.0, kMonotoneN, seed)).direction == MonotoneKind::nonincreasing;
    neither += circular_monotone(sample_support(0.0, kIndependentN, seed)).direction == MonotoneKind::neither;
  }
  int fl83_ok = 0;
  int fl83_total = 0;
  for (int sign : {+1, -1}) {
    for (double alpha0 : {0.0, kPi, 1.5 * kPi}) {
      std::vector<std::pair<Angle, Angle>> pts;
      for (int k = 0; k < 12; ++k) {
        const double theta = kTwoPi * k / 12.0;
        pts.emplace_back(Angle(theta), Angle(sign * theta + alpha0));
      }
      const auto dep = fl83_test(SupportSet(std::move(pts)), kFl83Tol);
      ++fl83_total;
      fl83_ok += dep && dep->sign == sign &&
                 std::abs(angular_difference(dep->alpha0.value(), alpha0)) <= kFl83Tol;
    }
  }
  const bool ok = up == kMonotoneRuns && down == kMonotoneRuns &&
                  neither >= kIndependentNeitherMin && fl83_ok == fl83_total;
  return {ok, "g=1 nondecreasing " + std::to_string(up) + "/50, g=-1 nonincreasing " +
                  std::to_string(down) + "/50, g=0 neither " + std::to_string(neither) +
                  "/50, rotation grids " + std::to_string(fl83_ok) + "/" + std::to_string(fl83_total)};
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "circcop_acceptance";
  fs::create_directories(dir);
  std::ostringstream sink;
  auto run = [&](const fs::path& out) {
    return cli::run_cli({"simulate", "--seed", "424242", "-o", out.string()}, sink, sink);
  };
  const int c1 = run(dir / "first.csv");
  const int c2 = run(dir / "second.csv");
  auto slurp = [](const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  };
  const std::string a = slurp(dir / "first.csv");
  const std::string b = slurp(dir / "second.csv");
  fs::remove_all(dir);
  const bool ok = c1 == 0 && c2 == 0 && !a.empty() && a == b;
  return {ok, std::to_string(a.size()) + " bytes, identical: " + (a == b ? "yes" : "no")};
}

}  // namespace

int main() {
  report(1, "copula axioms", axioms);
  report(2, "Frechet sandwich", sandwich);
  report(3, "upper bound under origin shifts", shifted_upper);
  report(4, "lower bound under origin shifts", shifted_lower);
  report(5, "mixture sample at n=500", mixture_sample);
  report(6, "empirical copula, n=1e5", empirical);
  report(7, "monotone support detection", monotone);
  report(8, "simulate determinism", determinism);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
