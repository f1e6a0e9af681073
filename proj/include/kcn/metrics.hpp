#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kcn/graph.hpp"

namespace kcn {

struct NodeMetrics {
    std::string keyword;
    std::size_t degree = 0;
    std::int64_t strength = 0;
    double nn_degree = 0.0;    // weighted average neighbor degree
    double clustering = 0.0;   // weighted clustering coefficient, in [0,1]
};

// x → mean of a metric over the entities sharing x, with the group size.
struct CurvePoint {
    std::int64_t x = 0;
    double mean = 0.0;
    std::size_t count = 0;

    bool operator==(const CurvePoint&) const = default;
};

struct DegreeBinnedCurve {
    std::vector<CurvePoint> points;  // ascending x

    const CurvePoint* find(std::int64_t x) const;
    double mean_at(std::int64_t x) const;  // throws when x has no group
};

struct SummaryStats {
    std::size_t article_count = 0;
    std::size_t node_count = 0;
    std::size_t link_count = 0;
    double avg_degree = 0.0;
    std::size_t max_degree = 0;
    double avg_strength = 0.0;
    std::int64_t max_strength = 0;
    double avg_weight = 0.0;
    std::int64_t max_weight = 0;
};

// Per-node measures. The *_at forms take a node index; the string forms
// throw std::out_of_range for unknown keywords.
std::size_t degree_at(const WeightedKcn& g, std::uint32_t i);
std::int64_t strength_at(const WeightedKcn& g, std::uint32_t i);
double nn_degree_at(const WeightedKcn& g, std::uint32_t i);
double clustering_at(const WeightedKcn& g, std::uint32_t i);

std::size_t degree(const WeightedKcn& g, std::string_view keyword);
std::int64_t strength(const WeightedKcn& g, std::string_view keyword);
double nn_degree(const WeightedKcn& g, std::string_view keyword);
double clustering(const WeightedKcn& g, std::string_view keyword);

std::vector<NodeMetrics> all_node_metrics(const WeightedKcn& g);

// Mean edge weight grouped by the product of endpoint degrees. The map
// overload exists because degrees may come from outside the weight map
// (for instance a larger host graph).
DegreeBinnedCurve avg_weight_vs_endpoint_degree(
    const std::map<std::string, std::int64_t>& degree_map,
    const std::map<std::pair<std::string, std::string>, std::int64_t>& weight_map);
DegreeBinnedCurve avg_weight_vs_endpoint_degree(const WeightedKcn& g);

// Node metric means grouped by degree; degree-0 nodes excluded.
DegreeBinnedCurve clustering_vs_degree(const WeightedKcn& g);
DegreeBinnedCurve nn_degree_vs_degree(const WeightedKcn& g);

SummaryStats network_summary(const WeightedKcn& g);

// strength descending, ties by keyword text
std::vector<std::pair<std::string, std::int64_t>> top_keywords_by_strength(const WeightedKcn& g,
                                                                           std::size_t k);
struct RankedPair {
    std::string a, b;  // a < b
    std::int64_t weight = 0;
};
// weight descending, ties by pair text
std::vector<RankedPair> top_pairs_by_weight(const WeightedKcn& g, std::size_t k);

struct ClusteringEntry {
    std::string keyword;
    double clustering = 0.0;
    std::size_t degree = 0;
    std::vector<std::string> neighbors;  // by incident weight descending
};
std::vector<ClusteringEntry> top_clustering_with_neighbors(const WeightedKcn& g, std::size_t k,
                                                           std::size_t min_degree);

enum class MetricKind { degree, strength, weight };

struct DistributionSummary {
    double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
    std::vector<std::int64_t> values;  // sorted ascending
};
// throws std::invalid_argument when the graph yields no values
DistributionSummary metric_distribution(const WeightedKcn& g, MetricKind metric);

}  // namespace kcn
