#pragma once

#include <cstdint>

#include "dcov/pointset.hpp"
#include "dcov/rng.hpp"

namespace dcov {

enum class SamplerKind { MC, LHS };

struct SamplerSpec {
    SamplerKind kind = SamplerKind::MC;
    int d = 1;
    std::size_t n = 1;
    std::uint64_t seed = 0;
};

// N i.i.d. uniform points; coordinates drawn row by row from the given
// substream of spec.seed.
PointSet mc_sample(const SamplerSpec& spec, std::uint64_t stream = 0);

// Jittered Latin hypercube sample: per coordinate j an independent uniform
// permutation pi_j of {0..N-1} (Fisher-Yates) and jitter U in [0,1), giving
// coordinate (pi_j(i) + U_ij)/N. Every 1-d projection hits each stratum
// [k/N,(k+1)/N) exactly once. The jittered (not centered) variant is the one
// whose dependence structure the downstream probability bounds assume.
PointSet lhs_sample(const SamplerSpec& spec, std::uint64_t stream = 0);

// Dispatch on spec.kind.
PointSet draw_sample(const SamplerSpec& spec, std::uint64_t stream = 0);

// Uniformly random permutation of the point order (Fisher-Yates).
PointSet shuffle_exchangeable(const PointSet& p, std::uint64_t seed);

}  // namespace dcov
