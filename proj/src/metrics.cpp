#include "kcn/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kcn {

namespace {

DegreeBinnedCurve to_curve(const std::map<std::int64_t, std::pair<double, std::size_t>>& groups) {
    DegreeBinnedCurve curve;
    curve.points.reserve(groups.size());
    for (const auto& [x, acc] : groups)
        curve.points.push_back({x, acc.first / static_cast<double>(acc.second), acc.second});
    return curve;
}

// Weighted clustering of node i given a scratch row of normalized incident
// weights. marks[j] = w_ij / max_w for each neighbor j, 0 elsewhere.
double clustering_with_marks(const WeightedKcn& g, std::uint32_t i, std::vector<double>& marks) {
    auto nbrs = g.neighbors(i);
    std::size_t k = nbrs.size();
    if (k < 2) return 0.0;
    const double max_w = static_cast<double>(g.max_weight());
    for (const auto& nb : nbrs) marks[nb.node] = static_cast<double>(nb.weight) / max_w;
    double sum = 0.0;
    for (const auto& nb_j : nbrs) {
        const double w_ij = marks[nb_j.node];
        for (const auto& nb_k : g.neighbors(nb_j.node)) {
            if (nb_k.node == i || marks[nb_k.node] == 0.0) continue;
            const double w_jk = static_cast<double>(nb_k.weight) / max_w;
            sum += std::cbrt(w_ij * w_jk * marks[nb_k.node]);
        }
    }
    for (const auto& nb : nbrs) marks[nb.node] = 0.0;
    return sum / (static_cast<double>(k) * static_cast<double>(k - 1));
}

}  // namespace

const CurvePoint* DegreeBinnedCurve::find(std::int64_t x) const {
    auto it = std::lower_bound(points.begin(), points.end(), x,
                               [](const CurvePoint& p, std::int64_t v) { return p.x < v; });
    return (it != points.end() && it->x == x) ? &*it : nullptr;
}

double DegreeBinnedCurve::mean_at(std::int64_t x) const {
    if (const CurvePoint* p = find(x)) return p->mean;
    throw std::out_of_range("no curve point at x = " + std::to_string(x));
}

std::size_t degree_at(const WeightedKcn& g, std::uint32_t i) {
    return g.neighbors(i).size();
}

std::int64_t strength_at(const WeightedKcn& g, std::uint32_t i) {
    std::int64_t s = 0;
    for (const auto& nb : g.neighbors(i)) s += nb.weight;
    return s;
}

double nn_degree_at(const WeightedKcn& g, std::uint32_t i) {
    auto nbrs = g.neighbors(i);
    if (nbrs.empty()) return 0.0;
    std::int64_t s = 0;
    std::int64_t acc = 0;  // Σ w_ij · k_j, exact in integers
    for (const auto& nb : nbrs) {
        s += nb.weight;
        acc += nb.weight * static_cast<std::int64_t>(g.neighbors(nb.node).size());
    }
    return static_cast<double>(acc) / static_cast<double>(s);
}

double clustering_at(const WeightedKcn& g, std::uint32_t i) {
    std::vector<double> marks(g.node_count(), 0.0);
    return clustering_with_marks(g, i, marks);
}

std::size_t degree(const WeightedKcn& g, std::string_view keyword) {
    return degree_at(g, g.node_index(keyword));
}
std::int64_t strength(const WeightedKcn& g, std::string_view keyword) {
    return strength_at(g, g.node_index(keyword));
}
double nn_degree(const WeightedKcn& g, std::string_view keyword) {
    return nn_degree_at(g, g.node_index(keyword));
}
double clustering(const WeightedKcn& g, std::string_view keyword) {
    return clustering_at(g, g.node_index(keyword));
}

std::vector<NodeMetrics> all_node_metrics(const WeightedKcn& g) {
    std::vector<NodeMetrics> out;
    out.reserve(g.node_count());
    std::vector<double> marks(g.node_count(), 0.0);
    for (std::uint32_t i = 0; i < g.node_count(); ++i) {
        NodeMetrics m;
        m.keyword = g.keyword(i);
        m.degree = degree_at(g, i);
        m.strength = strength_at(g, i);
        m.nn_degree = nn_degree_at(g, i);
        m.clustering = clustering_with_marks(g, i, marks);
        out.push_back(std::move(m));
    }
    return out;
}

DegreeBinnedCurve avg_weight_vs_endpoint_degree(
    const std::map<std::string, std::int64_t>& degree_map,
    const std::map<std::pair<std::string, std::string>, std::int64_t>& weight_map) {
    std::map<std::int64_t, std::pair<double, std::size_t>> groups;
    for (const auto& [pair, w] : weight_map) {
        auto ki = degree_map.find(pair.first);
        auto kj = degree_map.find(pair.second);
        if (ki == degree_map.end())
            throw std::out_of_range("edge endpoint missing from degree map: " + pair.first);
        if (kj == degree_map.end())
            throw std::out_of_range("edge endpoint missing from degree map: " + pair.second);
        auto& [sum, count] = groups[ki->second * kj->second];
        sum += static_cast<double>(w);
        ++count;
    }
    return to_curve(groups);
}

DegreeBinnedCurve avg_weight_vs_endpoint_degree(const WeightedKcn& g) {
    std::map<std::int64_t, std::pair<double, std::size_t>> groups;
    for (const WeightedEdge& e : g.edges()) {
        auto x = static_cast<std::int64_t>(g.neighbors(e.u).size()) *
                 static_cast<std::int64_t>(g.neighbors(e.v).size());
        auto& [sum, count] = groups[x];
        sum += static_cast<double>(e.weight);
        ++count;
    }
    return to_curve(groups);
}

DegreeBinnedCurve clustering_vs_degree(const WeightedKcn& g) {
    std::map<std::int64_t, std::pair<double, std::size_t>> groups;
    std::vector<double> marks(g.node_count(), 0.0);
    for (std::uint32_t i = 0; i < g.node_count(); ++i) {
        std::size_t k = degree_at(g, i);
        if (k == 0) continue;
        auto& [sum, count] = groups[static_cast<std::int64_t>(k)];
        sum += clustering_with_marks(g, i, marks);
        ++count;
    }
    return to_curve(groups);
}

DegreeBinnedCurve nn_degree_vs_degree(const WeightedKcn& g) {
    std::map<std::int64_t, std::pair<double, std::size_t>> groups;
    for (std::uint32_t i = 0; i < g.node_count(); ++i) {
        std::size_t k = degree_at(g, i);
        if (k == 0) continue;
        auto& [sum, count] = groups[static_cast<std::int64_t>(k)];
        sum += nn_degree_at(g, i);
        ++count;
    }
    return to_curve(groups);
}

SummaryStats network_summary(const WeightedKcn& g) {
    SummaryStats s;
    s.article_count = g.article_count();
    s.node_count = g.node_count();
    s.link_count = g.edge_count();
    std::int64_t total_strength = 0;
    for (std::uint32_t i = 0; i < g.node_count(); ++i) {
        std::size_t k = degree_at(g, i);
        std::int64_t st = strength_at(g, i);
        s.max_degree = std::max(s.max_degree, k);
        s.max_strength = std::max(s.max_strength, st);
        total_strength += st;
    }
    s.max_weight = g.max_weight();
    if (s.node_count > 0) {
        s.avg_degree = 2.0 * static_cast<double>(s.link_count) / static_cast<double>(s.node_count);
        s.avg_strength = static_cast<double>(total_strength) / static_cast<double>(s.node_count);
    }
    if (s.link_count > 0)
        s.avg_weight = static_cast<double>(g.total_weight()) / static_cast<double>(s.link_count);
    return s;
}

std::vector<std::pair<std::string, std::int64_t>> top_keywords_by_strength(const WeightedKcn& g,
                                                                           std::size_t k) {
    std::vector<std::pair<std::string, std::int64_t>> ranked;
    ranked.reserve(g.node_count());
    for (std::uint32_t i = 0; i < g.node_count(); ++i) ranked.emplace_back(g.keyword(i), strength_at(g, i));
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (ranked.size() > k) ranked.resize(k);
    return ranked;
}

std::vector<RankedPair> top_pairs_by_weight(const WeightedKcn& g, std::size_t k) {
    std::vector<RankedPair> ranked;
    ranked.reserve(g.edge_count());
    for (const WeightedEdge& e : g.edges())
        ranked.push_back({g.keyword(e.u), g.keyword(e.v), e.weight});
    std::sort(ranked.begin(), ranked.end(), [](const RankedPair& a, const RankedPair& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        if (a.a != b.a) return a.a < b.a;
        return a.b < b.b;
    });
    if (ranked.size() > k) ranked.resize(k);
    return ranked;
}

std::vector<ClusteringEntry> top_clustering_with_neighbors(const WeightedKcn& g, std::size_t k,
                                                           std::size_t min_degree) {
    std::vector<ClusteringEntry> ranked;
    std::vector<double> marks(g.node_count(), 0.0);
    for (std::uint32_t i = 0; i < g.node_count(); ++i) {
        auto nbrs = g.neighbors(i);
        if (nbrs.size() < min_degree) continue;
        ClusteringEntry entry;
        entry.keyword = g.keyword(i);
        entry.degree = nbrs.size();
        entry.clustering = clustering_with_marks(g, i, marks);
        std::vector<std::pair<std::int64_t, std::string>> by_weight;
        by_weight.reserve(nbrs.size());
        for (const auto& nb : nbrs) by_weight.emplace_back(nb.weight, g.keyword(nb.node));
        std::sort(by_weight.begin(), by_weight.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });
        for (auto& [w, kw] : by_weight) entry.neighbors.push_back(std::move(kw));
        ranked.push_back(std::move(entry));
    }
    std::sort(ranked.begin(), ranked.end(), [](const ClusteringEntry& a, const ClusteringEntry& b) {
        if (a.clustering != b.clustering) return a.clustering > b.clustering;
        return a.keyword < b.keyword;
    });
    if (ranked.size() > k) ranked.resize(k);
    return ranked;
}

DistributionSummary metric_distribution(const WeightedKcn& g, MetricKind metric) {
    std::vector<std::int64_t> values;
    switch (metric) {
        case MetricKind::degree:
            for (std::uint32_t i = 0; i < g.node_count(); ++i)
                values.push_back(static_cast<std::int64_t>(degree_at(g, i)));
            break;
        case MetricKind::strength:
            for (std::uint32_t i = 0; i < g.node_count(); ++i) values.push_back(strength_at(g, i));
            break;
        case MetricKind::weight:
            for (const WeightedEdge& e : g.edges()) values.push_back(e.weight);
            break;
    }
    if (values.empty()) throw std::invalid_argument("metric distribution: no values");
    std::sort(values.begin(), values.end());

    auto median_of = [](const std::vector<std::int64_t>& v, std::size_t lo, std::size_t hi) {
        // median of v[lo, hi)
        std::size_t n = hi - lo;
        std::size_t mid = lo + n / 2;
        if (n % 2 == 1) return static_cast<double>(v[mid]);
        return (static_cast<double>(v[mid - 1]) + static_cast<double>(v[mid])) / 2.0;
    };

    DistributionSummary d;
    d.min = static_cast<double>(values.front());
    d.max = static_cast<double>(values.back());
    std::size_t n = values.size();
    d.median = median_of(values, 0, n);
    if (n == 1) {
        d.q1 = d.q3 = d.median;
    } else {
        // exclusive method: an odd middle element belongs to neither half
        std::size_t half = n / 2;
        d.q1 = median_of(values, 0, half);
        d.q3 = median_of(values, n - half, n);
    }
    d.values = std::move(values);
    return d;
}

}  // namespace kcn
