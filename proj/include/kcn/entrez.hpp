#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "kcn/corpus.hpp"

namespace kcn {

struct HttpResponse {
    int status = 0;
    std::string body;
};

// Minimal GET-only transport so tests can run against recorded responses.
class HttpTransport {
public:
    virtual ~HttpTransport() = default;
    // path_and_query is everything after the host. Throws on connection failure.
    virtual HttpResponse get(const std::string& path_and_query) = 0;
};

// HTTPS client for eutils.ncbi.nlm.nih.gov.
std::unique_ptr<HttpTransport> make_entrez_transport();

struct EntrezOptions {
    int batch_size = 200;      // ids per page / per fetch request
    double rate_limit = 3.0;   // requests per second
    int max_retries = 3;       // attempts after the first, per request
    std::string api_key;
    std::string email;
    std::string tool = "kcnkit";
};

struct FetchResult {
    std::vector<RawArticle> articles;
    std::size_t skipped_records = 0;  // malformed or year-less entries
};

class EntrezClient {
public:
    using Sleeper = std::function<void(std::chrono::milliseconds)>;

    explicit EntrezClient(std::unique_ptr<HttpTransport> transport,
                          EntrezOptions options = {}, Sleeper sleeper = {});

    // Searches PubMed and fetches the matching records. Records outside
    // [year_from, year_to] are dropped client-side.
    FetchResult fetch(const std::string& query, int year_from, int year_to);

private:
    HttpResponse request(const std::string& path_and_query);

    std::unique_ptr<HttpTransport> transport_;
    EntrezOptions options_;
    Sleeper sleeper_;
    bool first_request_ = true;
};

// MEDLINE text format: one record per blank-line-separated block, `XXXX- `
// tag lines, continuations indented six spaces. Exposed for tests.
std::vector<RawArticle> parse_medline(std::string_view text, std::size_t* skipped = nullptr);

std::string url_encode(std::string_view s);

}  // namespace kcn
