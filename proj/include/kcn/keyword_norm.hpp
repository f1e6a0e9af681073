#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "kcn/corpus.hpp"
#include "kcn/stemmer.hpp"
#include "kcn/window.hpp"

namespace kcn {

// Lowercases ASCII and Latin-1 letters; other bytes pass through.
std::string utf8_lower(std::string_view s);

// Splits an author-keyword field on ':', ';', '/'; trims, drops empties,
// lowercases.
std::vector<std::string> split_raw_keywords(std::string_view raw_field);

// Full single-keyword pipeline: lowercase, strip punctuation, tokenize on
// spaces/hyphens (Unicode dashes included), stem each token, drop tokens
// shorter than 3 characters, rejoin with single spaces. Empty result means
// the keyword vanished entirely.
std::optional<std::string> normalize_keyword(std::string_view raw, const Stemmer& stemmer);

const Stemmer& default_stemmer();
std::optional<std::string> normalize_keyword(std::string_view raw);

// Fills keywords (canonical, sorted, unique) from each record's raw_keywords.
void normalize_corpus(std::vector<ArticleRecord>& records, const Stemmer& stemmer);

// Canonical keyword -> every distinct original variant that maps to it.
struct StemDictionary {
    std::map<std::string, std::set<std::string>> entries;
};

StemDictionary build_dictionary(const std::vector<ArticleRecord>& records,
                                const Stemmer& stemmer);

// Document frequency (articles listing the keyword, not occurrences) within
// one window.
struct FrequencyTable {
    TimeWindow window;
    std::map<std::string, std::size_t> counts;
};

FrequencyTable frequency_table(const std::vector<ArticleRecord>& records,
                               const TimeWindow& window);

}  // namespace kcn
