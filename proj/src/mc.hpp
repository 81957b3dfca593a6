#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "regions.hpp"

namespace phasecov {

// Thrown by sample_region when the first probe batch of candidates yields an
// acceptance rate below 1e-6.
class EmptyRegionTimeout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VolumeEstimate {
  double mean = 0.0;        // hit_fraction x box Lebesgue x surface density
  double std_error = 0.0;   // binomial: sqrt(p(1-p)/N) x box x density
  double hit_fraction = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  double ci99_low() const { return mean - 2.5758293035489 * std_error; }
  double ci99_high() const { return mean + 2.5758293035489 * std_error; }
};

// Histogram of the 4-bit (PT, CPT, EBC, TLG) membership mask over one
// hit-or-miss pass. All region and cell counts derive from it, so a single
// pass serves every region of a surface with the identical sample stream
// that mc_volume sees at the same seed.
struct RegionCounts {
  Surface surface = Surface::Full3D;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::array<std::uint64_t, 16> histogram{};

  std::uint64_t count(Region r) const;
  VolumeEstimate estimate(Region r) const;
};

// One pass over `samples` boxed points; deterministic for fixed (seed,
// samples) regardless of worker count (counter-based stream, contiguous
// index ranges per worker, order-free integer reduction).
RegionCounts mc_region_counts(Surface s, std::uint64_t samples, std::uint64_t seed,
                              int workers);

// Hit-or-miss volume of one region.
VolumeEstimate mc_volume(const RegionSpec& spec, std::uint64_t samples,
                         std::uint64_t seed, int workers);

// Conditional fraction count(num)/count(den) for nested regions, with the
// binomial standard error on the conditional draw.
struct RatioEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t num_hits = 0;
  std::uint64_t den_hits = 0;
};
RatioEstimate mc_ratio(const RegionCounts& counts, Region num, Region den);

// Rejection sampling: accepted points are uniform w.r.t. Lebesgue measure on
// the free coordinates. Returned points are embedded channels (l1, l3, l*).
std::vector<std::array<double, 3>> sample_region(const RegionSpec& spec,
                                                 std::uint64_t count,
                                                 std::uint64_t seed);

// Same machinery with an arbitrary membership predicate on the embedded
// channel (used by tests; sample_region delegates here).
std::vector<std::array<double, 3>> sample_with_predicate(
    Surface s, const std::function<bool(const Channel&)>& accept,
    std::uint64_t count, std::uint64_t seed);

}  // namespace phasecov
