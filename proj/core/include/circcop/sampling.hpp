#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "circcop/angle.hpp"
#include "circcop/circular_cdf.hpp"
#include "circcop/copula.hpp"
#include "circcop/rng.hpp"

namespace circcop {

/// Mass spread uniformly along the segment start -> end in I^2.
struct SegmentMass {
  std::array<double, 2> start{};
  std::array<double, 2> end{};
  double mass = 0.0;
};

/// (0,a)->(1-a,1) with mass 1-a, then (1-a,0)->(1,a) with mass a.
[[nodiscard]] std::array<SegmentMass, 2> segments_of_upper(UnitValue a);
/// (0,a)->(a,0) with mass a, then (a,1)->(1,a) with mass 1-a.
[[nodiscard]] std::array<SegmentMass, 2> segments_of_lower(UnitValue a);

enum class Component : std::uint8_t { upper, independent, lower };

struct CopulaDraw {
  double u = 0.0;
  double v = 0.0;
  Component component = Component::independent;
  int segment = -1;  // index into segments_of_upper/lower; -1 for the independent part
};

/// Number of uniforms consumed per draw, whatever the component.
inline constexpr int kUniformsPerDraw = 3;

/// One draw from the circular Mardia mixture. gamma = 1, 0, -1 give exact
/// draws from M_a, Pi and W_b.
///
/// The singular parts use that both segments of M_a (and of W_b) tile the
/// u-axis with mass equal to their u-extent: u ~ U(0,1) selects the segment
/// with the right probability and places the point uniformly along it.
[[nodiscard]] CopulaDraw draw_copula(const MardiaMixture& model, SeededRng& rng);

/// n i.i.d. draws consuming `rng` sequentially.
[[nodiscard]] std::vector<CopulaDraw> sample_copula(const MardiaMixture& model, std::size_t n,
                                                    SeededRng& rng);

/// Draws per substream in sample_copula_chunked.
inline constexpr std::size_t kChunkSize = 4096;

/// n draws where chunk k (draws [k*kChunkSize, (k+1)*kChunkSize)) comes from
/// SeededRng(seed).substream(k). The output depends only on (model, n, seed);
/// `threads` only changes how chunks are scheduled.
[[nodiscard]] std::vector<CopulaDraw> sample_copula_chunked(const MardiaMixture& model,
                                                            std::size_t n, std::uint64_t seed,
                                                            unsigned threads = 1);

using AnglePair = std::pair<Angle, Angle>;

/// Inverse transform theta_i = F^(-1)(u_i), phi_i = G^(-1)(v_i).
[[nodiscard]] std::vector<AnglePair> to_circular(std::span<const CopulaDraw> draws,
                                                 const CircularCdf& f, const CircularCdf& g);

struct SimulationParams {
  double gamma = 0.7;
  double a = 0.7;
  double b = 0.4;
  double rho_f = 0.1;
  double mu_f = kPi;
  double rho_g = 0.3;
  double mu_g = kPi / 3.0;
  std::size_t n = 500;
  std::uint64_t seed = 20190101;
  unsigned threads = 1;
};

struct SampleSet {
  std::vector<AnglePair> pairs;
  SimulationParams meta;
};

/// Mixture draws pushed through Cardioid margins.
[[nodiscard]] SampleSet simulate(const SimulationParams& params);

}  // namespace circcop
