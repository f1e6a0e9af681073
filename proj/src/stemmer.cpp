#include "kcn/stemmer.hpp"

#include <array>
#include <fstream>
#include <stdexcept>

#include "kcn/text_util.hpp"

namespace kcn {
namespace {

bool all_lower_alpha(std::string_view w) {
    for (char c : w)
        if (c < 'a' || c > 'z') return false;
    return !w.empty();
}

// Porter's consonant/vowel classification: y is a consonant at position 0
// or when the preceding letter is a vowel.
bool is_consonant(std::string_view w, size_t i) {
    char c = w[i];
    switch (c) {
        case 'a': case 'e': case 'i': case 'o': case 'u':
            return false;
        case 'y':
            return i == 0 ? true : !is_consonant(w, i - 1);
        default:
            return true;
    }
}

// The measure m of the prefix w[0,len): number of VC sequences in [C](VC)^m[V].
size_t measure(std::string_view w, size_t len) {
    size_t m = 0, i = 0;
    while (i < len && is_consonant(w, i)) ++i;
    while (i < len) {
        while (i < len && !is_consonant(w, i)) ++i;
        if (i >= len) break;
        ++m;
        while (i < len && is_consonant(w, i)) ++i;
    }
    return m;
}

bool has_vowel(std::string_view w, size_t len) {
    for (size_t i = 0; i < len; ++i)
        if (!is_consonant(w, i)) return true;
    return false;
}

bool ends_double_consonant(std::string_view w) {
    size_t n = w.size();
    return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

// *o condition: prefix of length len ends consonant-vowel-consonant where the
// final consonant is not w, x, or y.
bool ends_cvc(std::string_view w, size_t len) {
    if (len < 3) return false;
    if (!is_consonant(w, len - 3) || is_consonant(w, len - 2) || !is_consonant(w, len - 1))
        return false;
    char c = w[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
}

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
};

// Longest-match-then-condition semantics: the longest matching suffix in the
// step's table is selected; if its measure condition fails the step does
// nothing (shorter suffixes are not retried).
const Rule* longest_match(std::string_view w, const Rule* rules, size_t n) {
    const Rule* best = nullptr;
    for (size_t i = 0; i < n; ++i) {
        if (ends_with(w, rules[i].suffix) &&
            (!best || rules[i].suffix.size() > best->suffix.size()))
            best = &rules[i];
    }
    return best;
}

void replace_suffix(std::string& w, size_t suffix_len, std::string_view repl) {
    w.resize(w.size() - suffix_len);
    w.append(repl);
}

void step1a(std::string& w) {
    if (ends_with(w, "sses")) replace_suffix(w, 4, "ss");
    else if (ends_with(w, "ies")) replace_suffix(w, 3, "i");
    else if (ends_with(w, "ss")) { /* keep */ }
    else if (ends_with(w, "s")) w.pop_back();
}

void step1b(std::string& w) {
    if (ends_with(w, "eed")) {
        if (measure(w, w.size() - 3) > 0) w.pop_back();
        return;
    }
    bool stripped = false;
    if (ends_with(w, "ed") && has_vowel(w, w.size() - 2)) {
        w.resize(w.size() - 2);
        stripped = true;
    } else if (ends_with(w, "ing") && has_vowel(w, w.size() - 3)) {
        w.resize(w.size() - 3);
        stripped = true;
    }
    if (!stripped) return;
    if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
        w.push_back('e');
    } else if (ends_double_consonant(w)) {
        char c = w.back();
        if (c != 'l' && c != 's' && c != 'z') w.pop_back();
    } else if (measure(w, w.size()) == 1 && ends_cvc(w, w.size())) {
        w.push_back('e');
    }
}

void step1c(std::string& w) {
    if (ends_with(w, "y") && has_vowel(w, w.size() - 1)) w.back() = 'i';
}

constexpr Rule kStep2[] = {
    {"ational", "ate"}, {"ization", "ize"}, {"iveness", "ive"},
    {"fulness", "ful"}, {"ousness", "ous"}, {"tional", "tion"},
    {"biliti", "ble"},  {"entli", "ent"},   {"ousli", "ous"},
    {"alism", "al"},    {"aliti", "al"},    {"iviti", "ive"},
    {"ation", "ate"},   {"enci", "ence"},   {"anci", "ance"},
    {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},
    {"ator", "ate"},    {"logi", "log"},    {"eli", "e"},
    {"li", ""},
};

// Porter's later "li" addendum: delete only after a valid li-ending.
bool valid_li_ending(char c) {
    switch (c) {
        case 'c': case 'd': case 'e': case 'g': case 'h':
        case 'k': case 'm': case 'n': case 'r': case 't':
            return true;
        default:
            return false;
    }
}

void step2(std::string& w) {
    const Rule* r = longest_match(w, kStep2, std::size(kStep2));
    if (!r) return;
    size_t stem_len = w.size() - r->suffix.size();
    if (measure(w, stem_len) == 0) return;
    if (r->suffix == "li" && (stem_len == 0 || !valid_li_ending(w[stem_len - 1]))) return;
    replace_suffix(w, r->suffix.size(), r->replacement);
}

constexpr Rule kStep3[] = {
    {"icate", "ic"}, {"ative", ""}, {"alize", "al"},
    {"iciti", "ic"}, {"ical", "ic"}, {"ful", ""}, {"ness", ""},
};

void step3(std::string& w) {
    const Rule* r = longest_match(w, kStep3, std::size(kStep3));
    if (!r) return;
    if (measure(w, w.size() - r->suffix.size()) == 0) return;
    replace_suffix(w, r->suffix.size(), r->replacement);
}

constexpr std::string_view kStep4[] = {
    "ement", "ance", "ence", "able", "ible", "ment", "ant", "ent",
    "ion",   "ism",  "ate",  "iti",  "ous",  "ive",  "ize", "al",
    "er",    "ic",   "ou",
};

void step4(std::string& w) {
    std::string_view best;
    for (std::string_view s : kStep4)
        if (ends_with(w, s) && s.size() > best.size()) best = s;
    if (best.empty()) return;
    size_t stem_len = w.size() - best.size();
    if (measure(w, stem_len) <= 1) return;
    if (best == "ion" && !(stem_len > 0 && (w[stem_len - 1] == 's' || w[stem_len - 1] == 't')))
        return;
    w.resize(stem_len);
}

void step5a(std::string& w) {
    if (!ends_with(w, "e")) return;
    size_t stem_len = w.size() - 1;
    size_t m = measure(w, stem_len);
    if (m > 1 || (m == 1 && !ends_cvc(w, stem_len))) w.pop_back();
}

void step5b(std::string& w) {
    if (measure(w, w.size()) > 1 && ends_double_consonant(w) && w.back() == 'l')
        w.pop_back();
}

std::string porter_pass(std::string w) {
    if (w.size() <= 2) return w;
    step1a(w);
    step1b(w);
    step1c(w);
    step2(w);
    step3(w);
    step4(w);
    step5a(w);
    step5b(w);
    return w;
}

const std::unordered_map<std::string, std::string>& irregular_plurals() {
    static const std::unordered_map<std::string, std::string> map = {
        {"children", "child"}, {"men", "man"},     {"women", "woman"},
        {"feet", "foot"},      {"teeth", "tooth"}, {"mice", "mouse"},
        {"geese", "goose"},
    };
    return map;
}

// Superlative stripping. Guarded so short roots (test, chest, ...) survive;
// the remainder must be a plausible stem of its own.
std::string strip_est(std::string w) {
    if (w.size() >= 6 && ends_with(w, "est") && has_vowel(w, w.size() - 3))
        w.resize(w.size() - 3);
    return w;
}

std::string stem_pass(std::string w) {
    if (auto it = irregular_plurals().find(w); it != irregular_plurals().end())
        return it->second;
    return porter_pass(strip_est(std::move(w)));
}

}  // namespace

Stemmer::Stemmer() {
    exceptions_.emplace("postoperative", "postop");
}

void Stemmer::add_exception(std::string word, std::string stem) {
    exceptions_[std::move(word)] = std::move(stem);
}

void Stemmer::load_exceptions(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        throw std::runtime_error("cannot open exception table: " + file.string());
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        size_t tab = t.find('\t');
        if (tab == std::string::npos)
            throw std::runtime_error("malformed exception line (expected word<TAB>stem): " + t);
        std::string word = trim(t.substr(0, tab));
        std::string stem = trim(t.substr(tab + 1));
        if (word.empty() || stem.empty())
            throw std::runtime_error("malformed exception line (empty field): " + t);
        exceptions_[std::move(word)] = std::move(stem);
    }
}

std::string Stemmer::stem(std::string_view token) const {
    std::string w(token);
    if (auto it = exceptions_.find(w); it != exceptions_.end()) return it->second;
    if (!all_lower_alpha(w)) return w;
    // Iterate to a fixed point so stemming a stem is a no-op.
    for (int i = 0; i < 16; ++i) {
        std::string next = stem_pass(w);
        if (next == w) break;
        w = std::move(next);
    }
    return w;
}

}  // namespace kcn
