#include "kcn/import.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "kcn/csv.hpp"
#include "kcn/text_util.hpp"

namespace kcn {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

// Accepts "2005", "2005///", "c2005"; any run of 4 digits counts.
std::optional<int> parse_year(std::string_view text) {
    for (size_t i = 0; i + 4 <= text.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(text[i])) &&
            std::isdigit(static_cast<unsigned char>(text[i + 1])) &&
            std::isdigit(static_cast<unsigned char>(text[i + 2])) &&
            std::isdigit(static_cast<unsigned char>(text[i + 3]))) {
            int y = (text[i] - '0') * 1000 + (text[i + 1] - '0') * 100 +
                    (text[i + 2] - '0') * 10 + (text[i + 3] - '0');
            return y;
        }
    }
    return std::nullopt;
}

ImportResult import_csv(const std::filesystem::path& path, Source source) {
    ImportResult result;
    auto rows = parse_csv(read_file(path));
    if (rows.empty()) throw std::runtime_error(path.string() + ": empty CSV, header row required");

    int title_col = -1, year_col = -1, kw_col = -1;
    const auto& header = rows.front();
    for (size_t c = 0; c < header.size(); ++c) {
        std::string name = to_lower_ascii(trim(header[c]));
        if (name == "title") title_col = static_cast<int>(c);
        else if (name == "year") year_col = static_cast<int>(c);
        else if (name == "keywords") kw_col = static_cast<int>(c);
    }
    if (title_col < 0) throw std::runtime_error(path.string() + ": missing required column: title");
    if (year_col < 0) throw std::runtime_error(path.string() + ": missing required column: year");
    if (kw_col < 0) throw std::runtime_error(path.string() + ": missing required column: keywords");

    std::string stem = path.filename().string();
    for (size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        auto cell = [&](int c) -> std::string_view {
            return static_cast<size_t>(c) < row.size() ? std::string_view(row[c])
                                                       : std::string_view();
        };
        std::string title = std::string(trim(cell(title_col)));
        auto year = parse_year(cell(year_col));
        if (title.empty()) {
            result.warnings.push_back(stem + " row " + std::to_string(r + 1) + ": empty title, skipped");
            continue;
        }
        if (!year) {
            result.warnings.push_back(stem + " row " + std::to_string(r + 1) + ": no year, skipped");
            continue;
        }
        RawArticle art;
        art.source = source;
        art.external_id = stem + ":" + std::to_string(r + 1);
        art.title = std::move(title);
        art.year = *year;
        art.raw_keyword_field = std::string(cell(kw_col));
        result.articles.push_back(std::move(art));
    }
    return result;
}

ImportResult import_ris(const std::filesystem::path& path, Source source) {
    ImportResult result;
    std::string text = read_file(path);

    std::string stem = path.filename().string();
    std::string title, id;
    std::optional<int> year;
    std::vector<std::string> keywords;
    size_t record_no = 0;
    std::string last_tag;

    auto reset = [&] {
        title.clear();
        id.clear();
        year.reset();
        keywords.clear();
        last_tag.clear();
    };
    auto emit = [&] {
        ++record_no;
        if (title.empty()) {
            result.warnings.push_back(stem + " record " + std::to_string(record_no) +
                                      ": no title, skipped");
        } else if (!year) {
            result.warnings.push_back(stem + " record " + std::to_string(record_no) +
                                      ": no year, skipped");
        } else {
            RawArticle art;
            art.source = source;
            art.external_id =
                id.empty() ? stem + ":" + std::to_string(record_no) : id;
            art.title = title;
            art.year = *year;
            std::string joined;
            for (size_t i = 0; i < keywords.size(); ++i) {
                if (i) joined += ";";
                joined += keywords[i];
            }
            art.raw_keyword_field = std::move(joined);
            result.articles.push_back(std::move(art));
        }
        reset();
    };

    std::istringstream lines(text);
    std::string line;
    bool saw_any_tag = false;
    while (std::getline(lines, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool tagged = line.size() >= 6 && std::isupper(static_cast<unsigned char>(line[0])) &&
                      (std::isupper(static_cast<unsigned char>(line[1])) ||
                       std::isdigit(static_cast<unsigned char>(line[1]))) &&
                      line.substr(2, 4) == "  - ";
        if (!tagged) {
            // continuation of the previous tag's value
            std::string cont = std::string(trim(line));
            if (cont.empty()) continue;
            if (last_tag == "TI" && !title.empty()) title += " " + cont;
            else if (last_tag == "KW" && !keywords.empty()) keywords.back() += " " + cont;
            continue;
        }
        saw_any_tag = true;
        std::string tag = line.substr(0, 2);
        std::string value = std::string(trim(std::string_view(line).substr(6)));
        last_tag = tag;
        if (tag == "ER") {
            emit();
        } else if (tag == "TI" || (tag == "T1" && title.empty())) {
            if (tag == "TI" || title.empty()) title = value;
        } else if (tag == "PY" || (tag == "Y1" && !year)) {
            if (auto y = parse_year(value)) year = y;
        } else if (tag == "KW") {
            if (!value.empty()) keywords.push_back(value);
        } else if (tag == "ID" || tag == "AN") {
            if (id.empty()) id = value;
        }
    }
    // tolerate a final record missing its ER line
    if (!title.empty() || year || !keywords.empty()) emit();

    if (!saw_any_tag && record_no == 0 && result.articles.empty() && !text.empty())
        result.warnings.push_back(stem + ": no RIS tags found");
    return result;
}

}  // namespace

ImportResult import_export_file(const std::filesystem::path& path, Source source,
                                ImportFormat format) {
    return format == ImportFormat::csv ? import_csv(path, source) : import_ris(path, source);
}

}  // namespace kcn
