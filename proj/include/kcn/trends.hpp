#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kcn/keyword_norm.hpp"

namespace kcn {

// Keyword → category label, keyed by canonical form. A keyword belongs
// to exactly one category.
struct CategoryMap {
    std::map<std::string, std::string> assignments;
    std::vector<std::string> categories() const;
};

// Two-column CSV `keyword,category`; keywords are normalized before
// storing. Duplicate canonical keywords are a fatal error.
CategoryMap load_category_map(const std::filesystem::path& path, const Stemmer& stemmer);
CategoryMap load_category_map(const std::filesystem::path& path);

inline constexpr const char* kUncategorized = "uncategorized";

struct RankEntry {
    std::string keyword;
    std::size_t rank = 0;  // 1-based
    std::size_t frequency = 0;
};

struct CategoryRanking {
    std::string window_label;
    std::string category;
    std::vector<RankEntry> entries;  // top_n by frequency desc, keyword asc
};

// Ranks the category's members inside each window by document frequency,
// keeping the top_n. Keywords mapped to no category participate when
// category == kUncategorized.
std::vector<CategoryRanking> rank_in_category(const std::vector<FrequencyTable>& freq_tables,
                                              const CategoryMap& map, const std::string& category,
                                              std::size_t top_n);

enum class Trend { emerging, declining, stable, unranked };
std::string_view trend_name(Trend t);

struct TrendVerdict {
    std::string keyword;
    std::string category;
    std::optional<std::size_t> rank_first, rank_last;
    std::optional<std::size_t> freq_first, freq_last;
    Trend verdict = Trend::unranked;
};

// First-vs-last comparison: a better (smaller) rank or entry into the last
// window's list → emerging; worse or exit → declining; same rank → stable;
// present only in intermediate windows → unranked.
std::vector<TrendVerdict> classify_trends(const std::vector<CategoryRanking>& rankings,
                                          const std::string& first_window_label,
                                          const std::string& last_window_label);

}  // namespace kcn
