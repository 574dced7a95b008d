#include "circcop/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace circcop {

std::array<SegmentMass, 2> segments_of_upper(UnitValue a) {
  const double x = a.value();
  return {{{{0.0, x}, {1.0 - x, 1.0}, 1.0 - x}, {{1.0 - x, 0.0}, {1.0, x}, x}}};
}

std::array<SegmentMass, 2> segments_of_lower(UnitValue a) {
  const double x = a.value();
  return {{{{0.0, x}, {x, 0.0}, x}, {{x, 1.0}, {1.0, x}, 1.0 - x}}};
}

CopulaDraw draw_copula(const MardiaMixture& model, SeededRng& rng) {
  const double pick = rng.uniform();
  const double r1 = rng.uniform();
  const double r2 = rng.uniform();
  const MixtureWeights w = model.weights();

  CopulaDraw d;
  d.u = r1;
  if (pick < w.upper) {
    const double a = model.upper().a();
    d.component = Component::upper;
    if (r1 < 1.0 - a) {
      d.segment = 0;
      d.v = r1 + a;
    } else {
      d.segment = 1;
      d.v = r1 - (1.0 - a);
    }
  } else if (pick < w.upper + w.independent) {
    d.component = Component::independent;
    d.v = r2;
  } else {
    const double b = model.lower().a();
    d.component = Component::lower;
    if (r1 < b) {
      d.segment = 0;
      d.v = b - r1;
    } else {
      d.segment = 1;
      d.v = 1.0 + b - r1;
    }
  }
  d.v = std::clamp(d.v, 0.0, 1.0);
  return d;
}

std::vector<CopulaDraw> sample_copula(const MardiaMixture& model, std::size_t n, SeededRng& rng) {
  std::vector<CopulaDraw> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(draw_copula(model, rng));
  return out;
}

std::vector<CopulaDraw> sample_copula_chunked(const MardiaMixture& model, std::size_t n,
                                              std::uint64_t seed, unsigned threads) {
  std::vector<CopulaDraw> out(n);
  const std::size_t chunks = (n + kChunkSize - 1) / kChunkSize;
  const SeededRng root(seed);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t k = next.fetch_add(1); k < chunks; k = next.fetch_add(1)) {
      SeededRng rng = root.substream(k);
      const std::size_t begin = k * kChunkSize;
      const std::size_t end = std::min(n, begin + kChunkSize);
      for (std::size_t i = begin; i < end; ++i) out[i] = draw_copula(model, rng);
    }
  };

  const auto workers = static_cast<unsigned>(
      std::min<std::size_t>(std::max(threads, 1U), std::max<std::size_t>(chunks, 1)));
  if (workers <= 1) {
    worker();
    return out;
  }
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  return out;
}

std::vector<AnglePair> to_circular(std::span<const CopulaDraw> draws, const CircularCdf& f,
                                   const CircularCdf& g) {
  std::vector<AnglePair> out;
  out.reserve(draws.size());
  for (const CopulaDraw& d : draws) {
    out.emplace_back(Angle(f.quasi_inverse(d.u)), Angle(g.quasi_inverse(d.v)));
  }
  return out;
}

SampleSet simulate(const SimulationParams& params) {
  const MardiaMixture model(params.gamma, UnitValue(params.a), UnitValue(params.b));
  const CardioidCdf f(params.rho_f, Angle(params.mu_f));
  const CardioidCdf g(params.rho_g, Angle(params.mu_g));
  const auto draws = sample_copula_chunked(model, params.n, params.seed, params.threads);
  return {to_circular(draws, f, g), params};
}

}  // namespace circcop
