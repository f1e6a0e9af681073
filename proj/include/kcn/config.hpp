#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "kcn/window.hpp"

namespace kcn {

struct RunConfig {
    std::vector<TimeWindow> windows = default_windows();

    std::filesystem::path corpus_dir = "data/corpus";
    std::filesystem::path output_dir = "out";
    std::filesystem::path category_map;     // empty = not configured
    std::filesystem::path stem_exceptions;  // empty = built-in exceptions only

    std::size_t min_support_count = 200;
    double min_confidence = 0.55;
    std::size_t top_n = 20;
    std::size_t max_itemset_size = 4;
    std::size_t clustering_min_degree = 2;

    std::string entrez_email;
    std::string entrez_api_key;
    double entrez_rate_limit = 3.0;
    int entrez_batch_size = 200;

    // throws ConfigError: overlapping/unsorted windows, nonpositive thresholds
    void validate() const;
};

// `key = value` lines; `#` or `;` comments; optional [section] headers turn
// later keys into section.key. Unknown keys are ConfigErrors.
std::map<std::string, std::string> parse_config_file(const std::filesystem::path& path);

// Defaults overlaid with the file's settings, validated.
RunConfig load_config(const std::filesystem::path& path);

// "2002-2006,2007-2011" → windows; throws ConfigError on bad syntax
std::vector<TimeWindow> parse_window_list(const std::string& text);

}  // namespace kcn
