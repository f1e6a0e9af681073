#include "kcn/config.hpp"

#include <fstream>

#include "kcn/errors.hpp"
#include "kcn/text_util.hpp"

namespace kcn {

void RunConfig::validate() const {
    if (windows.empty()) throw ConfigError("no time windows configured");
    for (std::size_t i = 1; i < windows.size(); ++i) {
        if (windows[i].start_year <= windows[i - 1].end_year)
            throw ConfigError("windows must be sorted and non-overlapping: " +
                              windows[i - 1].label + " then " + windows[i].label);
    }
    if (min_support_count < 1) throw ConfigError("min_support_count must be >= 1");
    if (min_confidence <= 0.0 || min_confidence > 1.0)
        throw ConfigError("min_confidence must be in (0, 1]");
    if (top_n < 1) throw ConfigError("top_n must be >= 1");
    if (max_itemset_size < 2) throw ConfigError("max_itemset_size must be >= 2");
    if (entrez_rate_limit <= 0.0) throw ConfigError("entrez rate_limit must be positive");
    if (entrez_batch_size < 1 || entrez_batch_size > 10000)
        throw ConfigError("entrez batch_size must be in [1, 10000]");
}

std::map<std::string, std::string> parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file " + path.string());

    std::map<std::string, std::string> kv;
    std::string line, section;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string sv = trim(line);
        if (sv.empty() || sv[0] == '#' || sv[0] == ';') continue;
        if (sv.front() == '[') {
            if (sv.back() != ']')
                throw ConfigError(path.string() + ":" + std::to_string(line_no) +
                                  ": unterminated section header");
            section = trim(std::string_view(sv).substr(1, sv.size() - 2));
            continue;
        }
        auto eq = sv.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path.string() + ":" + std::to_string(line_no) +
                              ": expected key = value");
        std::string key(trim(sv.substr(0, eq)));
        std::string value(trim(sv.substr(eq + 1)));
        if (key.empty())
            throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": empty key");
        if (!section.empty()) key = section + "." + key;
        kv[key] = value;
    }
    return kv;
}

std::vector<TimeWindow> parse_window_list(const std::string& text) {
    std::vector<TimeWindow> windows;
    for (const std::string& part : split_trim(text, ",")) {
        if (part.empty()) continue;
        auto dash = part.find('-');
        if (dash == std::string::npos)
            throw ConfigError("bad window '" + part + "', expected START-END");
        try {
            int start = std::stoi(part.substr(0, dash));
            int end = std::stoi(part.substr(dash + 1));
            windows.push_back(make_window(start, end));
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            throw ConfigError("bad window '" + part + "', expected START-END");
        }
    }
    if (windows.empty()) throw ConfigError("window list is empty");
    return windows;
}

RunConfig load_config(const std::filesystem::path& path) {
    RunConfig cfg;
    auto kv = parse_config_file(path);

    auto take = [&](const char* key) -> const std::string* {
        auto it = kv.find(key);
        if (it == kv.end()) return nullptr;
        return &it->second;
    };
    auto to_size = [&](const char* key, const std::string& v) -> std::size_t {
        try {
            return static_cast<std::size_t>(std::stoull(v));
        } catch (const std::exception&) {
            throw ConfigError(std::string(key) + ": not a count: " + v);
        }
    };
    auto to_double = [&](const char* key, const std::string& v) -> double {
        try {
            return std::stod(v);
        } catch (const std::exception&) {
            throw ConfigError(std::string(key) + ": not a number: " + v);
        }
    };

    if (const auto* v = take("windows")) cfg.windows = parse_window_list(*v);
    if (const auto* v = take("corpus_dir")) cfg.corpus_dir = *v;
    if (const auto* v = take("output_dir")) cfg.output_dir = *v;
    if (const auto* v = take("category_map")) cfg.category_map = *v;
    if (const auto* v = take("stem_exceptions")) cfg.stem_exceptions = *v;
    if (const auto* v = take("min_support_count"))
        cfg.min_support_count = to_size("min_support_count", *v);
    if (const auto* v = take("min_confidence")) cfg.min_confidence = to_double("min_confidence", *v);
    if (const auto* v = take("top_n")) cfg.top_n = to_size("top_n", *v);
    if (const auto* v = take("max_itemset_size"))
        cfg.max_itemset_size = to_size("max_itemset_size", *v);
    if (const auto* v = take("clustering_min_degree"))
        cfg.clustering_min_degree = to_size("clustering_min_degree", *v);
    if (const auto* v = take("entrez.email")) cfg.entrez_email = *v;
    if (const auto* v = take("entrez.api_key")) cfg.entrez_api_key = *v;
    if (const auto* v = take("entrez.rate_limit"))
        cfg.entrez_rate_limit = to_double("entrez.rate_limit", *v);
    if (const auto* v = take("entrez.batch_size"))
        cfg.entrez_batch_size = static_cast<int>(to_size("entrez.batch_size", *v));

    static const char* known[] = {"windows",           "corpus_dir",
                                  "output_dir",        "category_map",
                                  "stem_exceptions",   "min_support_count",
                                  "min_confidence",    "top_n",
                                  "max_itemset_size",  "clustering_min_degree",
                                  "entrez.email",      "entrez.api_key",
                                  "entrez.rate_limit", "entrez.batch_size"};
    for (const auto& [key, value] : kv) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw ConfigError("unknown config key: " + key);
    }

    cfg.validate();
    return cfg;
}

}  // namespace kcn
