#include "kcn/corpus.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "kcn/keyword_norm.hpp"
#include "kcn/text_util.hpp"

namespace kcn {

namespace {

constexpr std::string_view kSourceNames[] = {"pubmed", "wos", "ieee", "ev", "other"};

bool is_latin1_upper(char32_t cp) {
    return cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

bool is_key_punct(char32_t cp) {
    if (cp < 0x80) return std::ispunct(static_cast<int>(cp)) != 0;
    if (cp >= 0x2000 && cp <= 0x206F) return true;
    if (cp == 0x2212 || cp == 0x00D7 || cp == 0x00F7) return true;
    if (cp == 0x00AB || cp == 0x00BB || cp == 0x00B7 || cp == 0x00A1 || cp == 0x00BF)
        return true;
    return false;
}

}  // namespace

std::string_view source_name(Source s) {
    return kSourceNames[static_cast<int>(s)];
}

Source source_from_name(std::string_view name) {
    for (int i = 0; i < 5; ++i)
        if (kSourceNames[i] == name) return static_cast<Source>(i);
    return Source::other;
}

std::string make_title_key(std::string_view title) {
    std::string flat;
    flat.reserve(title.size());
    for_each_utf8(title, [&](char32_t cp, std::string_view bytes) {
        if (cp == 0x00A0 || (cp < 0x80 && std::isspace(static_cast<int>(cp)))) {
            flat += ' ';
        } else if (is_key_punct(cp)) {
            // stripped outright
        } else if (cp < 0x80) {
            flat += static_cast<char>(std::tolower(static_cast<int>(cp)));
        } else if (is_latin1_upper(cp)) {
            append_utf8(flat, cp + 0x20);
        } else {
            flat.append(bytes);
        }
    });
    return collapse_whitespace(flat);
}

std::pair<std::vector<ArticleRecord>, DedupReport>
dedupe_corpus(const std::vector<RawArticle>& records) {
    struct Group {
        std::string title;
        std::set<Source> sources;
        std::set<std::string> raw_keywords;
    };
    // map keyed by (title_key, year) gives the deterministic output order
    std::map<std::pair<std::string, int>, Group> groups;
    for (const RawArticle& raw : records) {
        auto key = std::make_pair(make_title_key(raw.title), raw.year);
        Group& g = groups[key];
        // smallest title wins so permuted inputs produce identical output
        if (g.title.empty() || (!raw.title.empty() && raw.title < g.title))
            g.title = raw.title;
        g.sources.insert(raw.source);
        for (std::string& part : split_raw_keywords(raw.raw_keyword_field))
            g.raw_keywords.insert(std::move(part));
    }

    DedupReport report;
    report.raw_count = records.size();
    report.kept_count = groups.size();
    report.removed_count = report.raw_count - report.kept_count;

    std::vector<ArticleRecord> out;
    out.reserve(groups.size());
    std::int64_t next_id = 1;
    for (auto& [key, g] : groups) {
        ArticleRecord rec;
        rec.id = next_id++;
        rec.title = std::move(g.title);
        rec.title_key = key.first;
        rec.year = key.second;
        rec.sources = std::move(g.sources);
        rec.raw_keywords.assign(g.raw_keywords.begin(), g.raw_keywords.end());
        for (Source a : rec.sources)
            for (Source b : rec.sources)
                if (a < b) ++report.per_source_overlap[{a, b}];
        out.push_back(std::move(rec));
    }
    return {std::move(out), report};
}

void persist_corpus(const std::vector<ArticleRecord>& records,
                    const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);

    std::ofstream data(dir / "articles.ndjson", std::ios::binary);
    if (!data) throw std::runtime_error("cannot write " + (dir / "articles.ndjson").string());
    for (const ArticleRecord& rec : records) {
        nlohmann::json j;
        j["id"] = rec.id;
        j["title"] = rec.title;
        j["title_key"] = rec.title_key;
        j["year"] = rec.year;
        nlohmann::json src = nlohmann::json::array();
        for (Source s : rec.sources) src.push_back(std::string(source_name(s)));
        j["sources"] = std::move(src);
        j["keywords"] = rec.keywords;
        j["raw_keywords"] = rec.raw_keywords;
        data << j.dump() << '\n';
    }
    data.close();
    if (!data) throw std::runtime_error("short write to " + (dir / "articles.ndjson").string());

    nlohmann::json manifest;
    manifest["format_version"] = kCorpusFormatVersion;
    manifest["count"] = records.size();
    std::ofstream mf(dir / "manifest.json", std::ios::binary);
    if (!mf) throw std::runtime_error("cannot write " + (dir / "manifest.json").string());
    mf << manifest.dump(2) << '\n';
}

std::vector<ArticleRecord> load_corpus(const std::filesystem::path& dir) {
    std::ifstream mf(dir / "manifest.json", std::ios::binary);
    if (!mf) throw std::runtime_error("missing corpus manifest in " + dir.string());
    nlohmann::json manifest = nlohmann::json::parse(mf);
    int version = manifest.at("format_version").get<int>();
    if (version != kCorpusFormatVersion)
        throw std::runtime_error("corpus format version " + std::to_string(version) +
                                 ", this build reads version " +
                                 std::to_string(kCorpusFormatVersion));
    std::size_t expected = manifest.at("count").get<std::size_t>();

    std::ifstream data(dir / "articles.ndjson", std::ios::binary);
    if (!data) throw std::runtime_error("missing " + (dir / "articles.ndjson").string());

    std::vector<ArticleRecord> out;
    out.reserve(expected);
    std::string line;
    std::size_t offset = 0;
    while (std::getline(data, line)) {
        std::size_t line_start = offset;
        offset += line.size() + 1;
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded())
            throw std::runtime_error("corrupt corpus record at byte offset " +
                                     std::to_string(line_start));
        ArticleRecord rec;
        rec.id = j.at("id").get<std::int64_t>();
        rec.title = j.at("title").get<std::string>();
        rec.title_key = j.at("title_key").get<std::string>();
        rec.year = j.at("year").get<int>();
        for (const auto& s : j.at("sources"))
            rec.sources.insert(source_from_name(s.get<std::string>()));
        rec.keywords = j.at("keywords").get<std::vector<std::string>>();
        rec.raw_keywords = j.at("raw_keywords").get<std::vector<std::string>>();
        out.push_back(std::move(rec));
    }
    if (out.size() != expected)
        throw std::runtime_error("corpus truncated: manifest count " + std::to_string(expected) +
                                 ", found " + std::to_string(out.size()) +
                                 " records (file ends at byte offset " + std::to_string(offset) +
                                 ")");
    return out;
}

}  // namespace kcn
