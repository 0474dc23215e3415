#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hstree/metric.hpp"

namespace hstree {

// Integer power, exact for powers of two.
double power_int(double base, int exp);

struct HstNode {
    int height = 0;
    int parent = -1;
    std::vector<int> children;
    int point = -1;  // embedded point id for leaves, -1 otherwise
};

// Exact beta-HST: child height = parent height - 1 everywhere, leaves at
// height 0, node label eta = beta^(height-1). Heights are stored as integers
// so that trees from different constructions align level-by-level without
// floating-point drift.
struct Hst {
    double beta = 2.0;
    std::vector<HstNode> nodes;
    int root = -1;

    int add_node(int height, int parent);
    bool is_leaf(int v) const { return nodes[v].children.empty(); }
    double eta(int v) const { return power_int(beta, nodes[v].height - 1); }
    int lca(int a, int b) const;
    int leaf_count() const;
};

struct HstViolation {
    std::string kind;  // EmptyTree | HeightSkip | LeafNotAtZero | RootTooLow | PointlessLeaf
    std::string path;  // root-relative child positions, e.g. "/0/2"
    std::string detail;
};

// First structural violation, or nullopt for a well-formed tree.
std::optional<HstViolation> validate_hst(const Hst& t);

// Embedding of metric points into the leaves of an HST. Distances follow the
// least-common-ancestor rule. Point ids refer to the metric space the
// embedding was built from; an embedding may cover only a subset of it.
struct HstEmbedding {
    Hst tree;
    std::map<int, int> leaf_of;  // point id -> leaf node

    bool embeds(int p) const { return leaf_of.count(p) != 0; }
    std::vector<int> domain() const;
    double distance(int x, int y) const;
};

// Multiplies every pairwise distance by beta^t: all heights go up by t and
// each leaf is re-attached under a fresh unary chain so leaves stay at 0.
HstEmbedding scale_up(const HstEmbedding& e, int t);

bool is_ultrametric(const MetricSpace& m);

// Pairwise distance matrix over the sorted domain of the embedding.
std::vector<std::vector<double>> distance_matrix(const HstEmbedding& e);

// JSON form: {"h": h, "children": [...]}, leaves {"h": 0, "point": "<label>"}.
std::string hst_to_json(const HstEmbedding& e, const MetricSpace& m);
HstEmbedding hst_from_json(const std::string& text, const MetricSpace& m);

}  // namespace hstree
