#include "kcn/trends.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kcn/csv.hpp"
#include "kcn/text_util.hpp"

namespace kcn {

std::vector<std::string> CategoryMap::categories() const {
    std::set<std::string> labels;
    for (const auto& [kw, cat] : assignments) labels.insert(cat);
    return {labels.begin(), labels.end()};
}

CategoryMap load_category_map(const std::filesystem::path& path, const Stemmer& stemmer) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open category map " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();

    CategoryMap map;
    auto rows = parse_csv(buf.str());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.empty() || (row.size() == 1 && trim(row[0]).empty())) continue;
        if (row.size() < 2)
            throw std::runtime_error(path.string() + " row " + std::to_string(r + 1) +
                                     ": expected keyword,category");
        std::string keyword(trim(row[0]));
        std::string category(trim(row[1]));
        if (r == 0 && to_lower_ascii(keyword) == "keyword") continue;  // optional header
        auto canonical = normalize_keyword(keyword, stemmer);
        if (!canonical)
            throw std::runtime_error(path.string() + " row " + std::to_string(r + 1) +
                                     ": keyword normalizes to nothing: " + keyword);
        auto [it, inserted] = map.assignments.emplace(*canonical, category);
        if (!inserted)
            throw std::runtime_error(path.string() + " row " + std::to_string(r + 1) +
                                     ": duplicate keyword " + *canonical);
    }
    return map;
}

CategoryMap load_category_map(const std::filesystem::path& path) {
    return load_category_map(path, default_stemmer());
}

std::string_view trend_name(Trend t) {
    switch (t) {
        case Trend::emerging: return "emerging";
        case Trend::declining: return "declining";
        case Trend::stable: return "stable";
        case Trend::unranked: return "unranked";
    }
    return "unranked";
}

std::vector<CategoryRanking> rank_in_category(const std::vector<FrequencyTable>& freq_tables,
                                              const CategoryMap& map, const std::string& category,
                                              std::size_t top_n) {
    if (top_n < 1) throw std::invalid_argument("top_n must be >= 1");
    std::vector<CategoryRanking> out;
    for (const FrequencyTable& table : freq_tables) {
        CategoryRanking ranking;
        ranking.window_label = table.window.label;
        ranking.category = category;
        std::vector<std::pair<std::size_t, std::string>> members;
        for (const auto& [kw, freq] : table.counts) {
            auto it = map.assignments.find(kw);
            bool in_category = (it != map.assignments.end())
                                   ? it->second == category
                                   : category == kUncategorized;
            if (in_category) members.emplace_back(freq, kw);
        }
        std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });
        if (members.size() > top_n) members.resize(top_n);
        for (std::size_t i = 0; i < members.size(); ++i)
            ranking.entries.push_back({members[i].second, i + 1, members[i].first});
        out.push_back(std::move(ranking));
    }
    return out;
}

std::vector<TrendVerdict> classify_trends(const std::vector<CategoryRanking>& rankings,
                                          const std::string& first_window_label,
                                          const std::string& last_window_label) {
    if (first_window_label == last_window_label)
        throw std::invalid_argument("trend classification needs two distinct windows");
    const CategoryRanking* first = nullptr;
    const CategoryRanking* last = nullptr;
    for (const CategoryRanking& r : rankings) {
        if (r.window_label == first_window_label) first = &r;
        if (r.window_label == last_window_label) last = &r;
    }
    if (!first) throw std::invalid_argument("window not in rankings: " + first_window_label);
    if (!last) throw std::invalid_argument("window not in rankings: " + last_window_label);

    std::string category = rankings.empty() ? std::string() : rankings.front().category;

    // all keywords that surfaced in any window's list
    std::set<std::string> keywords;
    for (const CategoryRanking& r : rankings)
        for (const RankEntry& e : r.entries) keywords.insert(e.keyword);

    auto lookup = [](const CategoryRanking& r, const std::string& kw) -> const RankEntry* {
        for (const RankEntry& e : r.entries)
            if (e.keyword == kw) return &e;
        return nullptr;
    };

    std::vector<TrendVerdict> out;
    for (const std::string& kw : keywords) {
        TrendVerdict v;
        v.keyword = kw;
        v.category = category;
        const RankEntry* a = lookup(*first, kw);
        const RankEntry* b = lookup(*last, kw);
        if (a) {
            v.rank_first = a->rank;
            v.freq_first = a->frequency;
        }
        if (b) {
            v.rank_last = b->rank;
            v.freq_last = b->frequency;
        }
        if (a && b) {
            if (b->rank < a->rank) v.verdict = Trend::emerging;
            else if (b->rank > a->rank) v.verdict = Trend::declining;
            else v.verdict = Trend::stable;
        } else if (b) {
            v.verdict = Trend::emerging;
        } else if (a) {
            v.verdict = Trend::declining;
        } else {
            v.verdict = Trend::unranked;
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace kcn
