#include "mc.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "rng.hpp"

namespace phasecov {

namespace {

constexpr std::uint64_t kProbeBatch = 1'000'000;

std::array<std::uint64_t, 16> count_chunk(Surface s, std::uint64_t seed,
                                          std::uint64_t begin, std::uint64_t end) {
  const std::size_t dim = surface_dimension(s);
  std::array<std::uint64_t, 16> hist{};
  std::array<double, 3> q{};
  for (std::uint64_t i = begin; i < end; ++i) {
    sample_point(seed, i, std::span<double>(q.data(), dim));
    hist[classify_point(s, std::span<const double>(q.data(), dim)).bits()]++;
  }
  return hist;
}

}  // namespace

std::uint64_t RegionCounts::count(Region r) const {
  std::uint64_t n = 0;
  for (unsigned b = 0; b < 16; ++b)
    if (RegionMask::from_bits(b).in(r)) n += histogram[b];
  return n;
}

VolumeEstimate RegionCounts::estimate(Region r) const {
  const double scale = bounding_box(surface).lebesgue() * measure_density(surface);
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(count(r)) / n;
  VolumeEstimate e;
  e.hit_fraction = p;
  e.hits = count(r);
  e.samples = samples;
  e.seed = seed;
  e.mean = p * scale;
  e.std_error = std::sqrt(p * (1.0 - p) / n) * scale;
  return e;
}

RegionCounts mc_region_counts(Surface s, std::uint64_t samples, std::uint64_t seed,
                              int workers) {
  if (samples < 1) throw std::invalid_argument("mc: samples must be >= 1");
  if (workers < 1) throw std::invalid_argument("mc: workers must be >= 1");

  RegionCounts out;
  out.surface = s;
  out.samples = samples;
  out.seed = seed;

  const std::uint64_t w =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), samples);
  if (w == 1) {
    out.histogram = count_chunk(s, seed, 0, samples);
    return out;
  }

  std::vector<std::array<std::uint64_t, 16>> partial(w);
  std::vector<std::thread> pool;
  pool.reserve(w);
  for (std::uint64_t k = 0; k < w; ++k) {
    const std::uint64_t begin = samples * k / w;
    const std::uint64_t end = samples * (k + 1) / w;
    pool.emplace_back(
        [&, k, begin, end] { partial[k] = count_chunk(s, seed, begin, end); });
  }
  for (auto& t : pool) t.join();
  for (const auto& h : partial)
    for (unsigned b = 0; b < 16; ++b) out.histogram[b] += h[b];
  return out;
}

VolumeEstimate mc_volume(const RegionSpec& spec, std::uint64_t samples,
                         std::uint64_t seed, int workers) {
  return mc_region_counts(spec.surface, samples, seed, workers).estimate(spec.region);
}

RatioEstimate mc_ratio(const RegionCounts& counts, Region num, Region den) {
  RatioEstimate r;
  r.num_hits = counts.count(num);
  r.den_hits = counts.count(den);
  if (r.den_hits == 0) return r;
  const double f = static_cast<double>(r.num_hits) / static_cast<double>(r.den_hits);
  r.value = f;
  r.std_error = std::sqrt(f * (1.0 - f) / static_cast<double>(r.den_hits));
  return r;
}

std::vector<std::array<double, 3>> sample_with_predicate(
    Surface s, const std::function<bool(const Channel&)>& accept,
    std::uint64_t count, std::uint64_t seed) {
  const std::size_t dim = surface_dimension(s);
  std::vector<std::array<double, 3>> pts;
  pts.reserve(count);
  std::array<double, 3> q{};
  std::uint64_t accepted = 0;
  for (std::uint64_t i = 0; accepted < count; ++i) {
    if (i == kProbeBatch && accepted == 0)
      throw EmptyRegionTimeout("sample_region: acceptance rate below 1e-6");
    sample_point(seed, i, std::span<double>(q.data(), dim));
    const Channel c = embed(s, std::span<const double>(q.data(), dim));
    if (accept(c)) {
      pts.push_back({c.lambda1, c.lambda3, c.lambda_star});
      ++accepted;
    }
  }
  return pts;
}

std::vector<std::array<double, 3>> sample_region(const RegionSpec& spec,
                                                 std::uint64_t count,
                                                 std::uint64_t seed) {
  return sample_with_predicate(
      spec.surface,
      [&](const Channel& c) { return classify_channel(spec.surface, c).in(spec.region); },
      count, seed);
}

}  // namespace phasecov
