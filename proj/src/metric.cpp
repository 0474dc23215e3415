#include "hstree/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "hstree/errors.hpp"
#include "hstree/rng.hpp"
#include "json.hpp"

namespace hstree {

namespace {

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    return labels;
}

}  // namespace

double MetricSpace::diameter() const {
    double best = 0.0;
    for (double v : d_) best = std::max(best, v);
    return best;
}

double MetricSpace::min_positive() const {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) best = std::min(best, (*this)(i, j));
    return best;
}

int MetricSpace::index_of(const std::string& label) const {
    for (int i = 0; i < n_; ++i)
        if (labels_[i] == label) return i;
    return -1;
}

MetricSpace validate(std::vector<std::vector<double>> dist, std::vector<std::string> labels) {
    const int n = static_cast<int>(dist.size());
    if (n == 0) fail("EmptyMatrix", "metric needs at least one point");
    for (const auto& row : dist)
        if (static_cast<int>(row.size()) != n)
            fail("NotSquare", "distance matrix must be square");
    if (labels.empty()) labels = default_labels(n);
    if (static_cast<int>(labels.size()) != n)
        fail("LabelCountMismatch", "expected " + std::to_string(n) + " labels");

    double maxd = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double v = dist[i][j];
            if (!std::isfinite(v) || v < 0.0)
                fail("NegativeDistance", "d(" + labels[i] + "," + labels[j] + ") = " +
                                             std::to_string(v));
            maxd = std::max(maxd, v);
        }
        if (dist[i][i] != 0.0)
            fail("NonzeroDiagonal", "d(" + labels[i] + "," + labels[i] + ") must be 0");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (dist[i][j] != dist[j][i])
                fail("AsymmetricMatrix",
                     "d(" + labels[i] + "," + labels[j] + ") != d(" + labels[j] + "," +
                         labels[i] + ")");
            if (dist[i][j] == 0.0)
                fail("ZeroOffDiagonal", "d(" + labels[i] + "," + labels[j] + ") = 0");
        }

    const double tol = 1e-9 * maxd;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (dist[i][k] > dist[i][j] + dist[j][k] + tol)
                    fail("TriangleViolation", "d(" + labels[i] + "," + labels[k] +
                                                  ") > d(" + labels[i] + "," + labels[j] +
                                                  ") + d(" + labels[j] + "," + labels[k] +
                                                  ")");

    MetricSpace m;
    m.n_ = n;
    m.labels_ = std::move(labels);
    m.d_.resize(static_cast<std::size_t>(n) * n);
    double scale = 1.0;
    if (n > 1) {
        double minp = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) minp = std::min(minp, dist[i][j]);
        if (minp < 1.0) scale = minp;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.d_[static_cast<std::size_t>(i) * n + j] = dist[i][j] / scale;
    m.scale_ = scale;
    return m;
}

MetricSpace from_graph(const std::vector<Edge>& edges) {
    std::map<std::string, int> ids;
    for (const auto& e : edges) {
        if (!(e.w > 0.0) || !std::isfinite(e.w))
            fail("NonpositiveWeight", "edge " + e.u + "-" + e.v + " has weight " +
                                          std::to_string(e.w));
        ids.emplace(e.u, 0);
        ids.emplace(e.v, 0);
    }
    if (ids.empty()) fail("EmptyGraph", "graph has no edges");
    std::vector<std::string> labels;
    labels.reserve(ids.size());
    for (auto& [name, id] : ids) {
        id = static_cast<int>(labels.size());
        labels.push_back(name);
    }
    const int n = static_cast<int>(labels.size());
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
    for (int i = 0; i < n; ++i) d[i][i] = 0.0;
    for (const auto& e : edges) {
        int a = ids[e.u], b = ids[e.v];
        d[a][b] = std::min(d[a][b], e.w);
        d[b][a] = d[a][b];
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!std::isfinite(d[i][j]))
                fail("DisconnectedGraph",
                     "no path between " + labels[i] + " and " + labels[j]);
    return validate(std::move(d), std::move(labels));
}

Subset Subset::of(const MetricSpace& m, std::vector<int> indices) {
    std::sort(indices.begin(), indices.end());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 0 || indices[i] >= m.size())
            fail("InvalidSubset", "index " + std::to_string(indices[i]) + " out of range");
        if (i > 0 && indices[i] == indices[i - 1])
            fail("InvalidSubset", "duplicate index " + std::to_string(indices[i]));
    }
    Subset s;
    s.members = std::move(indices);
    return s;
}

Subset Subset::complement(const MetricSpace& m) const {
    Subset out;
    std::size_t pos = 0;
    for (int i = 0; i < m.size(); ++i) {
        if (pos < members.size() && members[pos] == i) {
            ++pos;
        } else {
            out.members.push_back(i);
        }
    }
    return out;
}

bool Subset::contains(int p) const {
    return std::binary_search(members.begin(), members.end(), p);
}

MetricSpace restrict_to(const MetricSpace& m, const Subset& s) {
    const int k = s.size();
    std::vector<std::vector<double>> d(k, std::vector<double>(k, 0.0));
    std::vector<std::string> labels(k);
    for (int a = 0; a < k; ++a) {
        labels[a] = m.label(s.members[a]);
        for (int b = 0; b < k; ++b) d[a][b] = m(s.members[a], s.members[b]);
    }
    return validate(std::move(d), std::move(labels));
}

MetricSpace compose(const MetricSpace& m, const std::vector<MetricSpace>& blocks,
                    double beta) {
    if (beta < 0.5) fail("BetaTooSmall", "composition requires beta >= 1/2");
    if (static_cast<int>(blocks.size()) != m.size())
        fail("BlockCountMismatch", "need exactly one block per outer point");

    double delta = 0.0;
    for (const auto& b : blocks) delta = std::max(delta, b.diameter());
    if (delta == 0.0) delta = 1.0;  // all-singleton blocks would collapse the metric

    std::vector<int> offset(blocks.size() + 1, 0);
    for (std::size_t x = 0; x < blocks.size(); ++x)
        offset[x + 1] = offset[x] + blocks[x].size();
    const int total = offset.back();

    std::vector<std::vector<double>> d(total, std::vector<double>(total, 0.0));
    std::vector<std::string> labels(total);
    for (std::size_t x = 0; x < blocks.size(); ++x)
        for (int u = 0; u < blocks[x].size(); ++u)
            labels[offset[x] + u] = m.label(static_cast<int>(x)) + "." + blocks[x].label(u);

    for (std::size_t x = 0; x < blocks.size(); ++x)
        for (std::size_t y = 0; y < blocks.size(); ++y)
            for (int u = 0; u < blocks[x].size(); ++u)
                for (int v = 0; v < blocks[y].size(); ++v) {
                    double val = (x == y) ? blocks[x](u, v)
                                          : beta * delta * m(static_cast<int>(x),
                                                             static_cast<int>(y));
                    d[offset[x] + u][offset[y] + v] = val;
                }
    return validate(std::move(d), std::move(labels));
}

std::vector<Edge> expander_clique_edges(int n, std::uint64_t seed) {
    if (n < 8) fail("TooSmall", "expander-clique instances need n >= 8");
    int p = 0;
    while ((1 << p) < n) ++p;  // ceil(log2 n)
    const int q = n - p;

    auto ename = [](int i) { return "e" + std::to_string(i); };
    auto cname = [](int i) { return "c" + std::to_string(i); };

    std::vector<Edge> edges;
    Rng rng(seed);
    if (p <= 4) {
        // Too few nodes for a 3-regular draw; the complete graph is the
        // densest stand-in at this size.
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j) edges.push_back({ename(i), ename(j), 1.0});
    } else {
        // Configuration model with rejection. One vertex takes degree 4 when
        // the degree sum would otherwise be odd.
        std::vector<int> degree(p, 3);
        if ((3 * p) % 2 == 1) degree[0] = 4;
        while (true) {
            std::vector<int> stubs;
            for (int i = 0; i < p; ++i)
                for (int d = 0; d < degree[i]; ++d) stubs.push_back(i);
            rng.shuffle(stubs);
            std::set<std::pair<int, int>> got;
            bool ok = true;
            for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
                int a = stubs[i], b = stubs[i + 1];
                if (a == b) { ok = false; break; }
                auto key = std::minmax(a, b);
                if (!got.insert({key.first, key.second}).second) { ok = false; break; }
            }
            if (!ok) continue;
            // connectivity check
            std::vector<std::vector<int>> adj(p);
            for (auto [a, b] : got) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
            std::vector<char> seen(p, 0);
            std::vector<int> stack{0};
            seen[0] = 1;
            int count = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : adj[v])
                    if (!seen[w]) {
                        seen[w] = 1;
                        ++count;
                        stack.push_back(w);
                    }
            }
            if (count != p) continue;
            for (auto [a, b] : got) edges.push_back({ename(a), ename(b), 1.0});
            break;
        }
    }
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) edges.push_back({cname(i), cname(j), 1.0});
    edges.push_back({ename(0), cname(0), 1.0});  // bridge
    return edges;
}

MetricSpace gen_expander_clique(int n, std::uint64_t seed) {
    return from_graph(expander_clique_edges(n, seed));
}

MetricSpace metric_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    auto dist = j.at("dist").get<std::vector<std::vector<double>>>();
    return validate(std::move(dist), std::move(labels));
}

std::string metric_to_json(const MetricSpace& m) {
    nlohmann::json j;
    j["labels"] = m.labels();
    std::vector<std::vector<double>> d(m.size(), std::vector<double>(m.size()));
    for (int i = 0; i < m.size(); ++i)
        for (int k = 0; k < m.size(); ++k) d[i][k] = m(i, k);
    j["dist"] = d;
    j["scale"] = m.scale();
    return j.dump(2);
}

MetricSpace metric_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) fail("EmptyMatrix", "empty csv");
    std::vector<std::string> labels;
    {
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' '))
                cell.pop_back();
            while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
            if (!cell.empty()) labels.push_back(cell);
        }
    }
    std::vector<std::vector<double>> d;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        d.push_back(std::move(row));
    }
    return validate(std::move(d), std::move(labels));
}

std::string metric_to_csv(const MetricSpace& m) {
    std::ostringstream out;
    for (int i = 0; i < m.size(); ++i) out << (i ? "," : "") << m.label(i);
    out << "\n";
    out.precision(17);
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) out << (j ? "," : "") << m(i, j);
        out << "\n";
    }
    return out.str();
}

std::vector<Edge> edges_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string u, v;
    double w = 0;
    std::vector<Edge> edges;
    while (in >> u >> v >> w) edges.push_back({u, v, w});
    return edges;
}

}  // namespace hstree
