#include "hstree/hst.hpp"

#include <algorithm>
#include <cmath>

#include "hstree/errors.hpp"
#include "json.hpp"

namespace hstree {

double power_int(double base, int exp) {
    if (exp < 0) return 1.0 / power_int(base, -exp);
    double out = 1.0, acc = base;
    while (exp > 0) {
        if (exp & 1) out *= acc;
        acc *= acc;
        exp >>= 1;
    }
    return out;
}

int Hst::add_node(int height, int parent) {
    HstNode node;
    node.height = height;
    node.parent = parent;
    int id = static_cast<int>(nodes.size());
    nodes.push_back(std::move(node));
    if (parent >= 0) nodes[parent].children.push_back(id);
    return id;
}

int Hst::lca(int a, int b) const {
    while (nodes[a].height < nodes[b].height) a = nodes[a].parent;
    while (nodes[b].height < nodes[a].height) b = nodes[b].parent;
    while (a != b) {
        a = nodes[a].parent;
        b = nodes[b].parent;
    }
    return a;
}

int Hst::leaf_count() const {
    int c = 0;
    for (const auto& n : nodes)
        if (n.children.empty()) ++c;
    return c;
}

namespace {

std::optional<HstViolation> check_node(const Hst& t, int v, const std::string& path) {
    const HstNode& node = t.nodes[v];
    if (node.children.empty()) {
        if (node.height != 0)
            return HstViolation{"LeafNotAtZero", path,
                                "leaf at height " + std::to_string(node.height)};
        if (node.point < 0)
            return HstViolation{"PointlessLeaf", path, "leaf carries no point"};
        return std::nullopt;
    }
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        int c = node.children[i];
        if (t.nodes[c].height != node.height - 1)
            return HstViolation{"HeightSkip", path + "/" + std::to_string(i),
                                "child height " + std::to_string(t.nodes[c].height) +
                                    " under height " + std::to_string(node.height)};
        if (auto bad = check_node(t, c, path + "/" + std::to_string(i))) return bad;
    }
    return std::nullopt;
}

}  // namespace

std::optional<HstViolation> validate_hst(const Hst& t) {
    if (t.root < 0 || t.nodes.empty())
        return HstViolation{"EmptyTree", "", "tree has no nodes"};
    if (t.leaf_count() >= 2 && t.nodes[t.root].height < 1)
        return HstViolation{"RootTooLow", "", "root must sit above multiple leaves"};
    return check_node(t, t.root, "");
}

std::vector<int> HstEmbedding::domain() const {
    std::vector<int> out;
    out.reserve(leaf_of.size());
    for (const auto& [p, leaf] : leaf_of) out.push_back(p);
    return out;
}

double HstEmbedding::distance(int x, int y) const {
    auto ix = leaf_of.find(x);
    auto iy = leaf_of.find(y);
    if (ix == leaf_of.end() || iy == leaf_of.end())
        fail("PointNotEmbedded",
             "point " + std::to_string(ix == leaf_of.end() ? x : y) + " is not embedded");
    if (x == y) return 0.0;
    return tree.eta(tree.lca(ix->second, iy->second));
}

HstEmbedding scale_up(const HstEmbedding& e, int t) {
    if (t == 0) return e;
    HstEmbedding out;
    out.tree.beta = e.tree.beta;
    out.tree.nodes = e.tree.nodes;
    out.tree.root = e.tree.root;
    for (auto& node : out.tree.nodes) node.height += t;
    for (const auto& [p, leaf] : e.leaf_of) {
        int at = leaf;
        out.tree.nodes[at].point = -1;
        for (int h = out.tree.nodes[leaf].height - 1; h >= 0; --h)
            at = out.tree.add_node(h, at);
        out.tree.nodes[at].point = p;
        out.leaf_of[p] = at;
    }
    return out;
}

bool is_ultrametric(const MetricSpace& m) {
    const double tol = 1e-9 * m.diameter();
    for (int x = 0; x < m.size(); ++x)
        for (int y = 0; y < m.size(); ++y)
            for (int z = 0; z < m.size(); ++z)
                if (m(x, y) > std::max(m(x, z), m(z, y)) + tol) return false;
    return true;
}

std::vector<std::vector<double>> distance_matrix(const HstEmbedding& e) {
    std::vector<int> pts = e.domain();
    const int k = static_cast<int>(pts.size());
    std::vector<std::vector<double>> d(k, std::vector<double>(k, 0.0));
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            d[a][b] = d[b][a] = e.distance(pts[a], pts[b]);
    return d;
}

namespace {

nlohmann::json node_to_json(const HstEmbedding& e, const MetricSpace& m, int v) {
    const HstNode& node = e.tree.nodes[v];
    nlohmann::json j;
    j["h"] = node.height;
    if (node.children.empty()) {
        j["point"] = m.label(node.point);
    } else {
        nlohmann::json kids = nlohmann::json::array();
        for (int c : node.children) kids.push_back(node_to_json(e, m, c));
        j["children"] = std::move(kids);
    }
    return j;
}

int node_from_json(const nlohmann::json& j, const MetricSpace& m, HstEmbedding& e,
                   int parent) {
    int h = j.at("h").get<int>();
    int v = e.tree.add_node(h, parent);
    if (j.contains("children")) {
        for (const auto& c : j["children"]) node_from_json(c, m, e, v);
    } else {
        std::string label = j.at("point").get<std::string>();
        int p = m.index_of(label);
        if (p < 0) fail("UnknownPoint", "no point labeled " + label);
        e.tree.nodes[v].point = p;
        if (!e.leaf_of.emplace(p, v).second)
            fail("DuplicateLeaf", "point " + label + " appears on two leaves");
    }
    return v;
}

}  // namespace

std::string hst_to_json(const HstEmbedding& e, const MetricSpace& m) {
    return node_to_json(e, m, e.tree.root).dump(2);
}

HstEmbedding hst_from_json(const std::string& text, const MetricSpace& m) {
    nlohmann::json j = nlohmann::json::parse(text);
    HstEmbedding e;
    e.tree.root = node_from_json(j, m, e, -1);
    if (auto bad = validate_hst(e.tree))
        fail(bad->kind, "invalid tree at " + bad->path + ": " + bad->detail);
    return e;
}

}  // namespace hstree
