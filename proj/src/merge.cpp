#include "hstree/merge.hpp"

#include <algorithm>

#include "hstree/errors.hpp"

namespace hstree {

namespace {

// Deep copy of b's subtree rooted at src under out[parent].
void graft(HstEmbedding& out, const HstEmbedding& b, int src, int parent) {
    const HstNode& node = b.tree.nodes[src];
    int copy = out.tree.add_node(node.height, parent);
    if (node.children.empty()) {
        out.tree.nodes[copy].point = node.point;
        out.leaf_of[node.point] = copy;
        return;
    }
    for (int c : node.children) graft(out, b, c, copy);
}

std::vector<int> path_to_root(const Hst& t, int leaf) {
    std::vector<int> path;
    for (int v = leaf; v >= 0; v = t.nodes[v].parent) path.push_back(v);
    return path;  // path[h] is the ancestor at height h
}

}  // namespace

HstEmbedding merge_hst(const HstEmbedding& a, const HstEmbedding& b) {
    if (a.tree.beta != b.tree.beta)
        fail("BetaMismatch", "cannot merge HSTs with different ratios");
    if (auto bad = validate_hst(a.tree))
        fail("InvalidInputTree", "first input: " + bad->kind + " at " + bad->path);
    if (auto bad = validate_hst(b.tree))
        fail("InvalidInputTree", "second input: " + bad->kind + " at " + bad->path);

    int shared = -1, shared_count = 0;
    for (const auto& [p, leaf] : a.leaf_of)
        if (b.embeds(p)) {
            shared = p;
            ++shared_count;
        }
    if (shared_count != 1)
        fail("SharedPointCountNotOne",
             "domains share " + std::to_string(shared_count) + " points, need exactly 1");

    HstEmbedding out = a;
    const int target = std::max(out.tree.nodes[out.tree.root].height,
                                b.tree.nodes[b.tree.root].height);
    while (out.tree.nodes[out.tree.root].height < target) {
        int old_root = out.tree.root;
        int raised = out.tree.add_node(out.tree.nodes[old_root].height + 1, -1);
        out.tree.nodes[old_root].parent = raised;
        out.tree.nodes[raised].children.push_back(old_root);
        out.tree.root = raised;
    }

    const std::vector<int> path1 = path_to_root(out.tree, out.leaf_of.at(shared));
    const std::vector<int> path2 = path_to_root(b.tree, b.leaf_of.at(shared));
    for (std::size_t h = 1; h < path2.size(); ++h) {
        for (int c : b.tree.nodes[path2[h]].children)
            if (c != path2[h - 1]) graft(out, b, c, path1[h]);
    }
    return out;
}

}  // namespace hstree
