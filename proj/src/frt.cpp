#include "hstree/frt.hpp"

#include <algorithm>
#include <cmath>

#include "hstree/errors.hpp"
#include "hstree/rng.hpp"

namespace hstree {

namespace {

// Smallest e >= 0 with 2^e >= x (x >= 1).
int ceil_log2(double x) {
    int e = 0;
    double v = 1.0;
    while (v < x) {
        v *= 2.0;
        ++e;
    }
    return e;
}

class FrtSampler : public EmbeddingSampler {
public:
    FrtSampler(const MetricSpace& m, std::vector<int> points)
        : ids_(std::move(points)) {
        const int k = static_cast<int>(ids_.size());
        dist_.resize(static_cast<std::size_t>(k) * k);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                dist_[static_cast<std::size_t>(a) * k + b] = m(ids_[a], ids_[b]);
    }

    HstEmbedding sample(std::uint64_t seed) const override;
    const std::vector<int>& domain() const override { return ids_; }
    std::string kind() const override { return "frt"; }

private:
    double d(int a, int b) const {
        return dist_[static_cast<std::size_t>(a) * ids_.size() + b];
    }

    std::vector<int> ids_;      // global point ids, sorted
    std::vector<double> dist_;  // restricted distances, local indexing
};

HstEmbedding FrtSampler::sample(std::uint64_t seed) const {
    const int n = static_cast<int>(ids_.size());
    if (n == 0) fail("EmptyDomain", "cannot embed an empty point set");
    HstEmbedding e;
    e.tree.beta = 2.0;
    if (n == 1) {
        int leaf = e.tree.add_node(0, -1);
        e.tree.nodes[leaf].point = ids_[0];
        e.tree.root = leaf;
        e.leaf_of[ids_[0]] = leaf;
        return e;
    }

    double diam = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) diam = std::max(diam, d(a, b));

    Rng rng(seed);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(order);
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;
    const double beta0 = rng.uniform(1.0, 2.0);

    const int top = ceil_log2(diam) + 1;

    // Level-i cluster nodes sit at height i+2; a cluster that becomes a
    // singleton hangs its leaf under a unary chain.
    auto attach_leaf = [&](int node, int local) {
        int at = node;
        for (int h = e.tree.nodes[node].height - 1; h >= 0; --h)
            at = e.tree.add_node(h, at);
        e.tree.nodes[at].point = ids_[local];
        e.leaf_of[ids_[local]] = at;
    };

    struct Cluster {
        int node;
        std::vector<int> members;  // local indices
    };

    e.tree.root = e.tree.add_node(top + 2, -1);
    std::vector<Cluster> current;
    {
        Cluster c;
        c.node = e.tree.root;
        c.members.resize(n);
        for (int i = 0; i < n; ++i) c.members[i] = i;
        current.push_back(std::move(c));
    }

    for (int level = top - 1; level >= 0 && !current.empty(); --level) {
        const double radius = beta0 * power_int(2.0, level - 1);
        std::vector<Cluster> next;
        for (auto& c : current) {
            if (c.members.size() == 1) {
                attach_leaf(c.node, c.members[0]);
                continue;
            }
            // Assign each member to the permutation-first center in range;
            // centers range over the whole embedded set.
            std::vector<std::pair<int, int>> assigned;  // (center local id, member)
            for (int p : c.members) {
                int best = -1, best_rank = n;
                for (int u = 0; u < n; ++u)
                    if (rank[u] < best_rank && d(p, u) <= radius) {
                        best = u;
                        best_rank = rank[u];
                    }
                assigned.push_back({best, p});
            }
            std::stable_sort(assigned.begin(), assigned.end(),
                             [&](const auto& a, const auto& b) {
                                 return rank[a.first] < rank[b.first];
                             });
            std::size_t i = 0;
            while (i < assigned.size()) {
                std::size_t j = i;
                Cluster child;
                child.node = e.tree.add_node(level + 2, c.node);
                while (j < assigned.size() && assigned[j].first == assigned[i].first)
                    child.members.push_back(assigned[j++].second);
                if (child.members.size() == 1 || level == 0) {
                    // min distance >= 1 makes level-0 clusters singletons;
                    // should several points ever land here they still satisfy
                    // d <= 2*radius < eta of the cluster node
                    for (int p : child.members) attach_leaf(child.node, p);
                } else {
                    next.push_back(std::move(child));
                }
                i = j;
            }
        }
        current = std::move(next);
    }
    return e;
}

class FixedSampler : public EmbeddingSampler {
public:
    explicit FixedSampler(HstEmbedding e) : e_(std::move(e)), domain_(e_.domain()) {}
    HstEmbedding sample(std::uint64_t) const override { return e_; }
    const std::vector<int>& domain() const override { return domain_; }
    std::string kind() const override { return "deterministic"; }

private:
    HstEmbedding e_;
    std::vector<int> domain_;
};

class ListSampler : public EmbeddingSampler {
public:
    explicit ListSampler(std::vector<HstEmbedding> list) : list_(std::move(list)) {
        if (list_.empty()) fail("EmptyList", "list sampler needs at least one embedding");
        domain_ = list_.front().domain();
    }
    HstEmbedding sample(std::uint64_t seed) const override {
        return list_[seed % list_.size()];
    }
    const std::vector<int>& domain() const override { return domain_; }
    std::string kind() const override { return "user-supplied"; }

private:
    std::vector<HstEmbedding> list_;
    std::vector<int> domain_;
};

}  // namespace

HstEmbedding frt_sample(const MetricSpace& m, std::uint64_t seed) {
    std::vector<int> all(m.size());
    for (int i = 0; i < m.size(); ++i) all[i] = i;
    return FrtSampler(m, std::move(all)).sample(seed);
}

HstEmbedding frt_sample(const MetricSpace& m, const std::vector<int>& points,
                        std::uint64_t seed) {
    auto s = Subset::of(m, points);  // validates ids
    return FrtSampler(m, s.members).sample(seed);
}

SamplerPtr frt_sampler(const MetricSpace& m) {
    std::vector<int> all(m.size());
    for (int i = 0; i < m.size(); ++i) all[i] = i;
    return std::make_shared<FrtSampler>(m, std::move(all));
}

SamplerPtr frt_sampler(const MetricSpace& m, std::vector<int> points) {
    auto s = Subset::of(m, std::move(points));
    return std::make_shared<FrtSampler>(m, std::move(s.members));
}

HstEmbedding singleton_embedding(int point) {
    HstEmbedding e;
    e.tree.beta = 2.0;
    int leaf = e.tree.add_node(0, -1);
    e.tree.nodes[leaf].point = point;
    e.tree.root = leaf;
    e.leaf_of[point] = leaf;
    return e;
}

SamplerPtr fixed_sampler(HstEmbedding e) {
    return std::make_shared<FixedSampler>(std::move(e));
}

SamplerPtr singleton_sampler(int point) {
    return fixed_sampler(singleton_embedding(point));
}

SamplerPtr list_sampler(std::vector<HstEmbedding> embeddings) {
    return std::make_shared<ListSampler>(std::move(embeddings));
}

}  // namespace hstree
