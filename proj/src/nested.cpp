#include "hstree/nested.hpp"

#include <algorithm>

#include "hstree/errors.hpp"
#include "hstree/frt.hpp"
#include "hstree/merge.hpp"
#include "hstree/rng.hpp"
#include "json.hpp"

namespace hstree {

namespace {
constexpr std::uint64_t kEmbedStream = 0x45;
constexpr std::uint64_t kPartitionStream = 0x50;
}  // namespace

int nearest_anchor(const MetricSpace& m, const Subset& s, int u) {
    if (s.members.empty()) fail("EmptyS", "anchor lookup needs a nonempty S");
    int best = s.members[0];
    for (int v : s.members)
        if (m(u, v) < m(u, best)) best = v;
    return best;
}

NestedResult nested_compose(const Assortment& a, std::uint64_t master_seed) {
    return nested_compose(a, derive_seed(master_seed, kEmbedStream),
                          derive_seed(master_seed, kPartitionStream));
}

NestedResult nested_compose(const Assortment& a, std::uint64_t embed_seed,
                            std::uint64_t partition_seed) {
    const MetricSpace& m = *a.metric;
    const Subset outliers = a.s.complement(m);
    const int k = outliers.size();
    if (k > 0 && a.s.members.empty())
        fail("EmptyS", "composition with outliers needs a nonempty S");

    NestedTrace trace;
    for (int u : outliers.members)
        trace.gamma.push_back({u, nearest_anchor(m, a.s, u)});

    Rng prng(partition_seed);
    trace.b = prng.uniform(2.0, 4.0);
    trace.pi = outliers.members;
    prng.shuffle(trace.pi);

    auto anchor_of = [&](int u) {
        auto it = std::lower_bound(trace.gamma.begin(), trace.gamma.end(),
                                   std::pair<int, int>{u, -1});
        return it->second;
    };

    HstEmbedding alpha = a.sampler_s->sample(derive_seed(embed_seed, 0));

    std::vector<int> remaining = outliers.members;  // sorted
    for (int i = 1; i <= k; ++i) {
        const int center = trace.pi[i - 1];
        NestedTrace::Cluster cluster;
        cluster.center = center;
        for (int v : remaining)
            if (m(v, center) <= trace.b * m(v, anchor_of(v)))
                cluster.members.push_back(v);
        trace.clusters.push_back(cluster);
        if (cluster.members.empty()) continue;

        std::vector<int> piece = cluster.members;
        piece.push_back(anchor_of(center));
        std::sort(piece.begin(), piece.end());
        SamplerPtr sub = a.family_rule ? a.family_rule(m, piece) : frt_sampler(m, piece);
        HstEmbedding alpha_i = sub->sample(derive_seed(embed_seed, i));
        try {
            alpha = merge_hst(alpha, alpha_i);
        } catch (const Error& e) {
            fail("MergePreconditionViolated", e.what());
        }

        std::vector<int> left;
        left.reserve(remaining.size() - cluster.members.size());
        std::set_difference(remaining.begin(), remaining.end(), cluster.members.begin(),
                            cluster.members.end(), std::back_inserter(left));
        remaining = std::move(left);
    }

    NestedResult out;
    out.unscaled = alpha;
    out.embedding = scale_up(alpha, 2);
    out.trace = std::move(trace);
    return out;
}

std::string trace_to_json(const NestedTrace& t, const MetricSpace& m) {
    nlohmann::json j;
    j["b"] = t.b;
    nlohmann::json pi = nlohmann::json::array();
    for (int u : t.pi) pi.push_back(m.label(u));
    j["pi"] = std::move(pi);
    nlohmann::json gamma = nlohmann::json::object();
    for (auto [u, anchor] : t.gamma) gamma[m.label(u)] = m.label(anchor);
    j["gamma"] = std::move(gamma);
    nlohmann::json clusters = nlohmann::json::array();
    for (const auto& c : t.clusters) {
        nlohmann::json entry;
        entry["center"] = m.label(c.center);
        nlohmann::json members = nlohmann::json::array();
        for (int v : c.members) members.push_back(m.label(v));
        entry["members"] = std::move(members);
        clusters.push_back(std::move(entry));
    }
    j["clusters"] = std::move(clusters);
    return j.dump(2);
}

}  // namespace hstree
