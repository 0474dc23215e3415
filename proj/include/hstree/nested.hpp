#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hstree/metric.hpp"
#include "hstree/sampler.hpp"

namespace hstree {

// Produces a sampler for an arbitrary small point set (global ids) of the
// given metric. The default rule embeds the restricted metric with frt.
using FamilyRule =
    std::function<SamplerPtr(const MetricSpace&, const std::vector<int>&)>;

// Everything the composition needs: a distinguished sampler for S plus a rule
// covering every cluster-plus-anchor set drawn from the rest.
struct Assortment {
    const MetricSpace* metric = nullptr;
    Subset s;
    SamplerPtr sampler_s;
    double c_s = 1.0;
    FamilyRule family_rule;  // empty -> frt on the restricted metric
};

// Record of the partition-side randomness of one composition run: anchor map,
// the radius multiplier b, the processing order of the non-S points and the
// clusters they formed. Depends only on (metric, S, partition seed), never on
// the embedding draws; the obliviousness tests rely on that.
struct NestedTrace {
    double b = 0.0;
    std::vector<int> pi;  // non-S points in processing order
    std::vector<std::pair<int, int>> gamma;  // (point, nearest anchor), sorted
    struct Cluster {
        int center = -1;
        std::vector<int> members;
        bool operator==(const Cluster&) const = default;
    };
    std::vector<Cluster> clusters;  // one entry per iteration, possibly empty

    bool operator==(const NestedTrace&) const = default;
};

struct NestedResult {
    HstEmbedding embedding;  // expanding on all pairs (scaled)
    HstEmbedding unscaled;   // raw composition before the scale-up
    NestedTrace trace;
};

// Closest point of S to u; ties break toward the lowest index.
int nearest_anchor(const MetricSpace& m, const Subset& s, int u);

// One draw of the composition: sample an embedding of S, partition the rest
// into clusters around randomly ordered centers (radius multiplier b drawn
// from [2,4]), embed each cluster together with its center's anchor, and fold
// everything into one tree via merge_hst. The final scale-up by beta^2 turns
// the bounded contraction of the raw composition into an expanding embedding.
NestedResult nested_compose(const Assortment& a, std::uint64_t embed_seed,
                            std::uint64_t partition_seed);
// Convenience form splitting a master seed into the two streams.
NestedResult nested_compose(const Assortment& a, std::uint64_t master_seed);

std::string trace_to_json(const NestedTrace& t, const MetricSpace& m);

}  // namespace hstree
