#pragma once

#include <cstdint>

#include "hstree/metric.hpp"
#include "hstree/sampler.hpp"

namespace hstree {

// One draw from the classic random-permutation tree embedding: a single
// uniform permutation and a single radius multiplier beta0 in [1,2) are
// shared across all levels, clusters at level i collect the points within
// beta0 * 2^(i-1) of their first-ranked center, and the node for a level-i
// cluster carries eta = 2^(i+1) so that every sample is expanding outright.
HstEmbedding frt_sample(const MetricSpace& m, std::uint64_t seed);

// Same construction on a subset of points (global point ids, restricted
// distances).
HstEmbedding frt_sample(const MetricSpace& m, const std::vector<int>& points,
                        std::uint64_t seed);

SamplerPtr frt_sampler(const MetricSpace& m);
SamplerPtr frt_sampler(const MetricSpace& m, std::vector<int> points);

}  // namespace hstree
