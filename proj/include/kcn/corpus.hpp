#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kcn {

enum class Source { pubmed, wos, ieee, ev, other };

std::string_view source_name(Source s);
Source source_from_name(std::string_view name);

// One record as parsed from an export file or the Entrez API, before
// deduplication. The keyword field is kept verbatim.
struct RawArticle {
    Source source = Source::other;
    std::string external_id;
    std::string title;
    int year = 0;
    std::string raw_keyword_field;
};

// One deduplicated article. `raw_keywords` holds the split, lowercased
// author keywords exactly as written (the stem dictionary needs them);
// `keywords` holds the canonical forms and is filled by normalize_corpus.
struct ArticleRecord {
    std::int64_t id = 0;
    std::string title;
    std::string title_key;
    int year = 0;
    std::set<Source> sources;
    std::vector<std::string> keywords;      // canonical, sorted, unique
    std::vector<std::string> raw_keywords;  // original variants, sorted, unique

    bool operator==(const ArticleRecord&) const = default;
};

struct DedupReport {
    std::size_t raw_count = 0;
    std::size_t removed_count = 0;
    std::size_t kept_count = 0;
    std::map<std::pair<Source, Source>, std::size_t> per_source_overlap;
};

// Dedup key half: lowercase, punctuation stripped, whitespace collapsed.
std::string make_title_key(std::string_view title);

// Collapses records sharing (title_key, year); sources union, keyword
// variants union. Output sorted by (title_key, year), ids sequential from 1.
std::pair<std::vector<ArticleRecord>, DedupReport>
dedupe_corpus(const std::vector<RawArticle>& records);

// Corpus store: <dir>/manifest.json + <dir>/articles.ndjson (one JSON object
// per line, UTF-8). Load verifies the format version and the record count.
inline constexpr int kCorpusFormatVersion = 1;

void persist_corpus(const std::vector<ArticleRecord>& records,
                    const std::filesystem::path& dir);
std::vector<ArticleRecord> load_corpus(const std::filesystem::path& dir);

}  // namespace kcn
