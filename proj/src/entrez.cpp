#include "kcn/entrez.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <nlohmann/json.hpp>

#include "kcn/text_util.hpp"

namespace kcn {

namespace {

constexpr const char* kHost = "eutils.ncbi.nlm.nih.gov";
constexpr const char* kBase = "/entrez/eutils";

class HttplibTransport final : public HttpTransport {
public:
    HttpResponse get(const std::string& path_and_query) override {
        httplib::SSLClient client(kHost, 443);
        client.set_connection_timeout(15);
        client.set_read_timeout(60);
        auto res = client.Get(path_and_query);
        if (!res)
            throw std::runtime_error("connection to " + std::string(kHost) + " failed: " +
                                     httplib::to_string(res.error()));
        return {res->status, res->body};
    }
};

std::optional<int> year_from_dp(std::string_view dp) {
    for (size_t i = 0; i + 4 <= dp.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(dp[i])) &&
            std::isdigit(static_cast<unsigned char>(dp[i + 1])) &&
            std::isdigit(static_cast<unsigned char>(dp[i + 2])) &&
            std::isdigit(static_cast<unsigned char>(dp[i + 3]))) {
            return (dp[i] - '0') * 1000 + (dp[i + 1] - '0') * 100 + (dp[i + 2] - '0') * 10 +
                   (dp[i + 3] - '0');
        }
    }
    return std::nullopt;
}

}  // namespace

std::unique_ptr<HttpTransport> make_entrez_transport() {
    return std::make_unique<HttplibTransport>();
}

std::string url_encode(std::string_view s) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    out.reserve(s.size());
    for (unsigned char c : s) {
        if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
            out += static_cast<char>(c);
        } else if (c == ' ') {
            out += '+';
        } else {
            out += '%';
            out += hex[c >> 4];
            out += hex[c & 0xF];
        }
    }
    return out;
}

std::vector<RawArticle> parse_medline(std::string_view text, std::size_t* skipped) {
    std::vector<RawArticle> out;
    std::size_t skip_count = 0;

    std::string pmid, title, dp;
    std::vector<std::string> terms;
    std::string* active = nullptr;  // target of continuation lines

    auto emit = [&] {
        if (!pmid.empty() || !title.empty() || !dp.empty() || !terms.empty()) {
            auto year = year_from_dp(dp);
            if (pmid.empty() || title.empty() || !year) {
                ++skip_count;
            } else {
                RawArticle art;
                art.source = Source::pubmed;
                art.external_id = pmid;
                art.title = title;
                art.year = *year;
                std::string joined;
                for (size_t i = 0; i < terms.size(); ++i) {
                    if (i) joined += ";";
                    joined += terms[i];
                }
                art.raw_keyword_field = std::move(joined);
                out.push_back(std::move(art));
            }
        }
        pmid.clear();
        title.clear();
        dp.clear();
        terms.clear();
        active = nullptr;
    };

    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            emit();
            continue;
        }
        if (line.size() > 6 && line.compare(0, 6, "      ") == 0) {
            // continuation: append to the field opened by the last tag line
            if (active) {
                *active += ' ';
                *active += trim(line);
            }
            continue;
        }
        if (line.size() < 6 || line[4] != '-') {
            active = nullptr;
            continue;
        }
        std::string tag = std::string(trim(line.substr(0, 4)));
        std::string value = std::string(trim(std::string_view(line).substr(6)));
        active = nullptr;
        if (tag == "PMID") {
            if (!pmid.empty()) emit();  // missing blank line between records
            pmid = value;
        } else if (tag == "TI") {
            title = value;
            active = &title;
        } else if (tag == "DP") {
            dp = value;
        } else if (tag == "OT") {
            terms.push_back(value);
            active = &terms.back();
        }
    }
    emit();
    if (skipped) *skipped = skip_count;
    return out;
}

EntrezClient::EntrezClient(std::unique_ptr<HttpTransport> transport, EntrezOptions options,
                           Sleeper sleeper)
    : transport_(std::move(transport)), options_(std::move(options)), sleeper_(std::move(sleeper)) {
    if (!transport_) throw std::invalid_argument("EntrezClient needs a transport");
    if (options_.batch_size < 1 || options_.batch_size > 10000)
        throw std::invalid_argument("batch_size out of range [1, 10000]");
    if (options_.rate_limit <= 0) throw std::invalid_argument("rate_limit must be positive");
    if (!sleeper_)
        sleeper_ = [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
}

HttpResponse EntrezClient::request(const std::string& path_and_query) {
    auto pace = std::chrono::milliseconds(
        static_cast<long long>(1000.0 / options_.rate_limit));
    if (!first_request_) sleeper_(pace);
    first_request_ = false;

    int attempt = 0;
    for (;;) {
        ++attempt;
        bool transport_error = false;
        std::string what;
        HttpResponse res;
        try {
            res = transport_->get(path_and_query);
        } catch (const std::exception& e) {
            transport_error = true;
            what = e.what();
        }
        if (!transport_error && res.status == 200) return res;
        if (!transport_error && res.status != 429 && res.status < 500) {
            std::string snippet = res.body.substr(0, 200);
            throw std::runtime_error("entrez request failed with HTTP " +
                                     std::to_string(res.status) + " (attempt " +
                                     std::to_string(attempt) +
                                     (snippet.empty() ? ")" : "): " + snippet));
        }
        if (attempt > options_.max_retries) {
            std::string reason = transport_error ? what : "HTTP " + std::to_string(res.status);
            throw std::runtime_error("entrez request failed after " + std::to_string(attempt) +
                                     " attempts: " + reason);
        }
        // exponential backoff: 500ms, 1s, 2s, ...
        sleeper_(std::chrono::milliseconds(500LL << (attempt - 1)));
    }
}

FetchResult EntrezClient::fetch(const std::string& query, int year_from, int year_to) {
    if (query.empty()) throw std::invalid_argument("query must be non-empty");
    if (year_from > year_to) throw std::invalid_argument("year_from exceeds year_to");

    std::string common;
    if (!options_.api_key.empty()) common += "&api_key=" + url_encode(options_.api_key);
    if (!options_.email.empty()) common += "&email=" + url_encode(options_.email);
    if (!options_.tool.empty()) common += "&tool=" + url_encode(options_.tool);

    // page through esearch to collect the id list
    std::vector<std::string> ids;
    std::size_t total = 0;
    std::size_t retstart = 0;
    do {
        std::string path = std::string(kBase) + "/esearch.fcgi?db=pubmed&retmode=json" +
                           "&term=" + url_encode(query) +
                           "&retmax=" + std::to_string(options_.batch_size) +
                           "&retstart=" + std::to_string(retstart) + common;
        HttpResponse res = request(path);
        nlohmann::json j = nlohmann::json::parse(res.body, nullptr, false);
        if (j.is_discarded() || !j.contains("esearchresult"))
            throw std::runtime_error("entrez search returned malformed JSON");
        const auto& sr = j["esearchresult"];
        total = std::stoull(sr.at("count").get<std::string>());
        for (const auto& id : sr.at("idlist")) ids.push_back(id.get<std::string>());
        retstart = ids.size();
    } while (retstart < total);

    // fetch MEDLINE records in batches
    FetchResult result;
    for (std::size_t i = 0; i < ids.size(); i += options_.batch_size) {
        std::string joined;
        for (std::size_t k = i; k < ids.size() && k < i + options_.batch_size; ++k) {
            if (k > i) joined += ",";
            joined += ids[k];
        }
        std::string path = std::string(kBase) +
                           "/efetch.fcgi?db=pubmed&retmode=text&rettype=medline" +
                           "&id=" + joined + common;
        HttpResponse res = request(path);
        std::size_t skipped = 0;
        for (RawArticle& art : parse_medline(res.body, &skipped)) {
            if (art.year >= year_from && art.year <= year_to)
                result.articles.push_back(std::move(art));
        }
        result.skipped_records += skipped;
    }
    return result;
}

}  // namespace kcn
