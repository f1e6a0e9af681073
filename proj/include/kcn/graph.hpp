#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kcn/corpus.hpp"
#include "kcn/window.hpp"

namespace kcn {

// Undirected edge, endpoints as node indices with u < v.
struct WeightedEdge {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    std::int64_t weight = 0;

    bool operator==(const WeightedEdge&) const = default;
};

// Immutable weighted co-occurrence graph over canonical keywords.
// Node indices follow the lexicographic order of the keyword text, so
// edge order and every derived listing are deterministic.
class WeightedKcn {
public:
    struct Neighbor {
        std::uint32_t node = 0;
        std::int64_t weight = 0;
    };

    WeightedKcn() = default;
    // nodes must be sorted and unique; edges keyed u < v, unique, weights ≥ 1
    WeightedKcn(TimeWindow window, std::vector<std::string> nodes,
                std::vector<WeightedEdge> edges, std::size_t article_count);

    const TimeWindow& window() const { return window_; }
    std::size_t article_count() const { return article_count_; }

    const std::vector<std::string>& nodes() const { return nodes_; }
    std::size_t node_count() const { return nodes_.size(); }
    const std::string& keyword(std::uint32_t i) const { return nodes_[i]; }
    std::optional<std::uint32_t> find_node(std::string_view keyword) const;
    // throws std::out_of_range naming the keyword
    std::uint32_t node_index(std::string_view keyword) const;

    const std::vector<WeightedEdge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    std::span<const Neighbor> neighbors(std::uint32_t i) const;
    bool adjacent(std::uint32_t i, std::uint32_t j) const { return weight(i, j) > 0; }
    std::int64_t weight(std::uint32_t i, std::uint32_t j) const;  // 0 when no edge

    std::int64_t max_weight() const { return max_weight_; }
    std::int64_t total_weight() const { return total_weight_; }

private:
    TimeWindow window_{};
    std::size_t article_count_ = 0;
    std::vector<std::string> nodes_;
    std::vector<WeightedEdge> edges_;
    std::vector<std::size_t> offsets_;   // CSR row starts, size node_count()+1
    std::vector<Neighbor> adjacency_;    // both directions, each row sorted
    std::int64_t max_weight_ = 0;
    std::int64_t total_weight_ = 0;
};

// Counts, for every unordered pair of distinct keywords, the number of
// in-window articles containing both. Isolated keywords become degree-0
// nodes.
WeightedKcn build_kcn(const std::vector<ArticleRecord>& corpus, const TimeWindow& window);

}  // namespace kcn
