#include "kcn/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kcn {

WeightedKcn::WeightedKcn(TimeWindow window, std::vector<std::string> nodes,
                         std::vector<WeightedEdge> edges, std::size_t article_count)
    : window_(std::move(window)),
      article_count_(article_count),
      nodes_(std::move(nodes)),
      edges_(std::move(edges)) {
    if (!std::is_sorted(nodes_.begin(), nodes_.end()) ||
        std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end())
        throw std::invalid_argument("graph nodes must be sorted and unique");

    std::vector<std::size_t> deg(nodes_.size(), 0);
    for (const WeightedEdge& e : edges_) {
        if (e.u >= e.v || e.v >= nodes_.size())
            throw std::invalid_argument("edge endpoints out of order or out of range");
        if (e.weight < 1) throw std::invalid_argument("edge weight below 1");
        ++deg[e.u];
        ++deg[e.v];
        max_weight_ = std::max(max_weight_, e.weight);
        total_weight_ += e.weight;
    }
    std::sort(edges_.begin(), edges_.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
            throw std::invalid_argument("duplicate edge");

    offsets_.assign(nodes_.size() + 1, 0);
    for (std::size_t i = 0; i < nodes_.size(); ++i) offsets_[i + 1] = offsets_[i] + deg[i];
    adjacency_.resize(offsets_.back());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const WeightedEdge& e : edges_) {
        adjacency_[cursor[e.u]++] = {e.v, e.weight};
        adjacency_[cursor[e.v]++] = {e.u, e.weight};
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        std::sort(adjacency_.begin() + offsets_[i], adjacency_.begin() + offsets_[i + 1],
                  [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
}

std::optional<std::uint32_t> WeightedKcn::find_node(std::string_view keyword) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), keyword);
    if (it == nodes_.end() || *it != keyword) return std::nullopt;
    return static_cast<std::uint32_t>(it - nodes_.begin());
}

std::uint32_t WeightedKcn::node_index(std::string_view keyword) const {
    if (auto idx = find_node(keyword)) return *idx;
    throw std::out_of_range("unknown keyword: " + std::string(keyword));
}

std::span<const WeightedKcn::Neighbor> WeightedKcn::neighbors(std::uint32_t i) const {
    return {adjacency_.data() + offsets_[i], adjacency_.data() + offsets_[i + 1]};
}

std::int64_t WeightedKcn::weight(std::uint32_t i, std::uint32_t j) const {
    auto row = neighbors(i);
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const Neighbor& n, std::uint32_t v) { return n.node < v; });
    return (it != row.end() && it->node == j) ? it->weight : 0;
}

WeightedKcn build_kcn(const std::vector<ArticleRecord>& corpus, const TimeWindow& window) {
    std::vector<std::string> nodes;
    {
        std::set<std::string> node_set;
        for (const ArticleRecord& rec : corpus) {
            if (!window.contains(rec.year)) continue;
            node_set.insert(rec.keywords.begin(), rec.keywords.end());
        }
        nodes.assign(node_set.begin(), node_set.end());
    }

    auto index_of = [&](const std::string& kw) {
        return static_cast<std::uint32_t>(
            std::lower_bound(nodes.begin(), nodes.end(), kw) - nodes.begin());
    };

    std::size_t article_count = 0;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::int64_t> weights;
    std::vector<std::uint32_t> idx;
    for (const ArticleRecord& rec : corpus) {
        if (!window.contains(rec.year)) continue;
        ++article_count;
        idx.clear();
        for (const std::string& kw : rec.keywords) idx.push_back(index_of(kw));
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b) ++weights[{idx[a], idx[b]}];
    }

    std::vector<WeightedEdge> edges;
    edges.reserve(weights.size());
    for (const auto& [key, w] : weights) edges.push_back({key.first, key.second, w});
    return WeightedKcn(window, std::move(nodes), std::move(edges), article_count);
}

}  // namespace kcn
