#include "kcn/keyword_norm.hpp"

#include <algorithm>
#include <cctype>

#include "kcn/text_util.hpp"

namespace kcn {

namespace {

bool is_latin1_upper(char32_t cp) {
    // U+00C0..U+00DE letters, excluding the multiplication sign.
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

// Codepoints that break a keyword into tokens: blanks, hyphen, general
// punctuation dashes, and a few symbol characters that never occur inside
// a meaningful term.
bool is_separator(char32_t cp) {
    if (cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U'\f' || cp == U'\v')
        return true;
    if (cp == U'-') return true;
    if (cp == 0x00A0) return true;                   // no-break space
    if (cp >= 0x2000 && cp <= 0x206F) return true;   // general punctuation block
    if (cp == 0x2212 || cp == 0x00D7 || cp == 0x00F7) return true;
    if (cp == 0x00AB || cp == 0x00BB || cp == 0x00B7 || cp == 0x00A1 || cp == 0x00BF)
        return true;
    return false;
}

// ASCII punctuation other than the hyphen is deleted in place, gluing its
// neighbours together ("1,3,4" becomes "134").
bool is_removed(char32_t cp) {
    if (cp >= 0x80) return false;
    return std::ispunct(static_cast<int>(cp)) && cp != U'-';
}

}  // namespace

std::string utf8_lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for_each_utf8(s, [&](char32_t cp, std::string_view bytes) {
        if (cp < 0x80) {
            out += static_cast<char>(std::tolower(static_cast<int>(cp)));
        } else if (is_latin1_upper(cp)) {
            append_utf8(out, cp + 0x20);
        } else {
            out.append(bytes);
        }
    });
    return out;
}

std::vector<std::string> split_raw_keywords(std::string_view field) {
    std::vector<std::string> out;
    for (const std::string& part : split_trim(field, ":;/")) {
        if (!part.empty()) out.push_back(utf8_lower(part));
    }
    return out;
}

std::optional<std::string> normalize_keyword(std::string_view raw, const Stemmer& stemmer) {
    std::vector<std::string> tokens;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        std::string stemmed = stemmer.stem(cur);
        if (utf8_length(stemmed) >= 3) tokens.push_back(std::move(stemmed));
        cur.clear();
    };
    for_each_utf8(raw, [&](char32_t cp, std::string_view bytes) {
        if (is_separator(cp)) {
            flush();
        } else if (is_removed(cp)) {
            // dropped
        } else if (cp < 0x80) {
            cur += static_cast<char>(std::tolower(static_cast<int>(cp)));
        } else if (is_latin1_upper(cp)) {
            append_utf8(cur, cp + 0x20);
        } else {
            cur.append(bytes);
        }
    });
    flush();
    if (tokens.empty()) return std::nullopt;
    std::string joined;
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (i) joined += ' ';
        joined += tokens[i];
    }
    return joined;
}

const Stemmer& default_stemmer() {
    static const Stemmer instance;
    return instance;
}

std::optional<std::string> normalize_keyword(std::string_view raw) {
    return normalize_keyword(raw, default_stemmer());
}

void normalize_corpus(std::vector<ArticleRecord>& records, const Stemmer& stemmer) {
    for (ArticleRecord& rec : records) {
        std::set<std::string> canon;
        for (const std::string& variant : rec.raw_keywords) {
            if (auto norm = normalize_keyword(variant, stemmer)) canon.insert(std::move(*norm));
        }
        rec.keywords.assign(canon.begin(), canon.end());
    }
}

StemDictionary build_dictionary(const std::vector<ArticleRecord>& records, const Stemmer& stemmer) {
    StemDictionary dict;
    for (const ArticleRecord& rec : records) {
        for (const std::string& variant : rec.raw_keywords) {
            if (auto norm = normalize_keyword(variant, stemmer))
                dict.entries[*norm].insert(variant);
        }
    }
    return dict;
}

FrequencyTable frequency_table(const std::vector<ArticleRecord>& records, const TimeWindow& window) {
    FrequencyTable table;
    table.window = window;
    for (const ArticleRecord& rec : records) {
        if (!window.contains(rec.year)) continue;
        for (const std::string& kw : rec.keywords) ++table.counts[kw];
    }
    return table;
}

}  // namespace kcn
