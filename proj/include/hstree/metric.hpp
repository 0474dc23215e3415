#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hstree {

// Finite metric space over dense symmetric distances. Instances are built by
// validate()/from_graph()/compose() and never mutated afterwards, so sharing
// across threads is safe. Distances are normalized at ingestion so that the
// minimum distance between distinct points is at least 1; `scale` records the
// divisor that was applied.
class MetricSpace {
public:
    MetricSpace() = default;

    int size() const { return n_; }
    double operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[i]; }
    double scale() const { return scale_; }

    double diameter() const;
    double min_positive() const;
    // Index for a label, -1 when absent.
    int index_of(const std::string& label) const;

    friend MetricSpace validate(std::vector<std::vector<double>> dist,
                                std::vector<std::string> labels);

private:
    int n_ = 0;
    std::vector<double> d_;  // row-major n*n
    std::vector<std::string> labels_;
    double scale_ = 1.0;
};

// Checks symmetry, zero diagonal, positivity off the diagonal and the
// triangle inequality (tolerance 1e-9 * max distance), then normalizes.
// Labels default to p0..p{n-1}.
MetricSpace validate(std::vector<std::vector<double>> dist,
                     std::vector<std::string> labels = {});

struct Edge {
    std::string u, v;
    double w = 1.0;
};

// Shortest-path closure of a connected, positively weighted undirected graph.
MetricSpace from_graph(const std::vector<Edge>& edges);

// Sorted set of point indices of some metric space.
struct Subset {
    std::vector<int> members;

    static Subset of(const MetricSpace& m, std::vector<int> indices);
    Subset complement(const MetricSpace& m) const;
    bool contains(int p) const;
    int size() const { return static_cast<int>(members.size()); }
};

MetricSpace restrict_to(const MetricSpace& m, const Subset& s);

// Composition of an outer metric with one block metric per outer point:
// distances are intra-block inside a block and beta * Delta * d_m across
// blocks, Delta being the largest block diameter (floored to 1 when all
// blocks are singletons). Result is validated, hence possibly re-normalized.
MetricSpace compose(const MetricSpace& m, const std::vector<MetricSpace>& blocks,
                    double beta);

// Hard instance family: a small dense random graph (3-regular when the node
// count allows it) bridged by a unit edge to a unit-weight clique.
MetricSpace gen_expander_clique(int n, std::uint64_t seed);
// The underlying edge list, exposed so tests can re-derive the metric.
std::vector<Edge> expander_clique_edges(int n, std::uint64_t seed);

// Serialization. JSON: {"labels": [...], "dist": [[...]]}. CSV: header row of
// labels followed by the square matrix. Graph text: "u v weight" per line.
MetricSpace metric_from_json(const std::string& text);
std::string metric_to_json(const MetricSpace& m);
MetricSpace metric_from_csv(const std::string& text);
std::string metric_to_csv(const MetricSpace& m);
std::vector<Edge> edges_from_text(const std::string& text);

}  // namespace hstree
