#include <doctest.h>

#include <fstream>
#include <sstream>
#include <vector>

#include "kcn/entrez.hpp"

using namespace kcn;

namespace {

std::string fixture(const char* name) {
    std::ifstream in(std::string(KCN_FIXTURE_DIR) + "/entrez/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

// Scripted transport: pops one canned response per request and records the
// request paths.
class FakeTransport final : public HttpTransport {
public:
    std::vector<HttpResponse> responses;
    std::vector<std::string> requests;
    std::size_t next = 0;

    HttpResponse get(const std::string& path_and_query) override {
        requests.push_back(path_and_query);
        if (next >= responses.size()) throw std::runtime_error("connection refused");
        return responses[next++];
    }
};

struct SleepLog {
    std::vector<std::chrono::milliseconds> calls;
    EntrezClient::Sleeper sleeper() {
        return [this](std::chrono::milliseconds d) { calls.push_back(d); };
    }
};

}  // namespace

TEST_CASE("medline parsing handles tags, continuations, and blank separators") {
    std::size_t skipped = 0;
    auto articles = parse_medline(fixture("efetch_batch1.txt"), &skipped);
    REQUIRE(articles.size() == 3);
    CHECK(skipped == 0);
    CHECK(articles[0].external_id == "31000001");
    CHECK(articles[0].title ==
          "Wearable sensing of chronic pain: a feasibility study in ambulatory patients.");
    CHECK(articles[0].year == 2019);
    CHECK(articles[0].raw_keyword_field == "chronic pain;wearable sensors;machine learning");
    CHECK(articles[1].year == 2012);
    CHECK(articles[2].year == 2020);
    CHECK(articles[2].raw_keyword_field ==
          "neuropathic pain;biomarkers;pain assessment;quantitative sensory testing");
    for (const auto& a : articles) CHECK(a.source == Source::pubmed);
}

TEST_CASE("medline records missing pmid, title, or year are counted as skipped") {
    std::size_t skipped = 0;
    auto articles = parse_medline("PMID- 1\nTI  - Ok\nDP  - 2018\n\n"
                                  "PMID- 2\nTI  - No date\n\n"
                                  "TI  - No pmid\nDP  - 2019\n",
                                  &skipped);
    REQUIRE(articles.size() == 1);
    CHECK(articles[0].external_id == "1");
    CHECK(skipped == 2);
}

TEST_CASE("fetch pages esearch, fetches medline, and filters years client-side") {
    auto transport = std::make_unique<FakeTransport>();
    transport->responses = {
        {200, fixture("esearch_page1.json")},
        {200, fixture("efetch_batch1.txt")},
    };
    FakeTransport* raw = transport.get();
    SleepLog log;
    EntrezOptions opts;
    opts.batch_size = 100;
    EntrezClient client(std::move(transport), opts, log.sleeper());

    FetchResult result = client.fetch("pain", 2017, 2021);
    // the 2012 record is excluded by the year filter
    REQUIRE(result.articles.size() == 2);
    CHECK(result.articles[0].external_id == "31000001");
    CHECK(result.articles[1].external_id == "31000003");
    CHECK(result.skipped_records == 0);

    REQUIRE(raw->requests.size() == 2);
    CHECK(raw->requests[0].find("esearch.fcgi") != std::string::npos);
    CHECK(raw->requests[0].find("db=pubmed") != std::string::npos);
    CHECK(raw->requests[0].find("term=pain") != std::string::npos);
    CHECK(raw->requests[1].find("efetch.fcgi") != std::string::npos);
    CHECK(raw->requests[1].find("id=31000001,31000002,31000003") != std::string::npos);
    CHECK(raw->requests[1].find("rettype=medline") != std::string::npos);
}

TEST_CASE("esearch pages until the full id list is collected") {
    auto transport = std::make_unique<FakeTransport>();
    transport->responses = {
        {200, R"({"esearchresult":{"count":"3","idlist":["1","2"]}})"},
        {200, R"({"esearchresult":{"count":"3","idlist":["3"]}})"},
        {200, "PMID- 1\nTI  - A\nDP  - 2018\n\nPMID- 2\nTI  - B\nDP  - 2018\n"},
        {200, "PMID- 3\nTI  - C\nDP  - 2018\n"},
    };
    FakeTransport* raw = transport.get();
    SleepLog log;
    EntrezOptions opts;
    opts.batch_size = 2;
    EntrezClient client(std::move(transport), opts, log.sleeper());

    FetchResult result = client.fetch("pain", 2002, 2021);
    CHECK(result.articles.size() == 3);
    REQUIRE(raw->requests.size() == 4);
    CHECK(raw->requests[0].find("retstart=0") != std::string::npos);
    CHECK(raw->requests[1].find("retstart=2") != std::string::npos);
    CHECK(raw->requests[2].find("id=1,2") != std::string::npos);
    CHECK(raw->requests[3].find("id=3") != std::string::npos);
    // rate limiting pauses between consecutive requests
    CHECK(log.calls.size() >= 3);
}

TEST_CASE("http 429 backs off then retries") {
    auto transport = std::make_unique<FakeTransport>();
    transport->responses = {
        {429, "slow down"},
        {200, R"({"esearchresult":{"count":"1","idlist":["9"]}})"},
        {200, "PMID- 9\nTI  - X\nDP  - 2019\n"},
    };
    SleepLog log;
    EntrezClient client(std::move(transport), {}, log.sleeper());
    FetchResult result = client.fetch("pain", 2002, 2021);
    CHECK(result.articles.size() == 1);
    // one backoff pause of 500 ms for the 429
    bool saw_backoff = false;
    for (auto d : log.calls) saw_backoff = saw_backoff || d == std::chrono::milliseconds(500);
    CHECK(saw_backoff);
}

TEST_CASE("persistent failures raise an error carrying the attempt count") {
    auto transport = std::make_unique<FakeTransport>();
    transport->responses = {
        {500, "boom"}, {500, "boom"}, {500, "boom"}, {500, "boom"},
    };
    SleepLog log;
    EntrezOptions opts;
    opts.max_retries = 3;
    EntrezClient client(std::move(transport), opts, log.sleeper());
    CHECK_THROWS_WITH_AS(client.fetch("pain", 2002, 2021), doctest::Contains("4 attempts"),
                         std::runtime_error);
    // exponential backoff: 500, 1000, 2000
    REQUIRE(log.calls.size() == 3);
    CHECK(log.calls[0] == std::chrono::milliseconds(500));
    CHECK(log.calls[1] == std::chrono::milliseconds(1000));
    CHECK(log.calls[2] == std::chrono::milliseconds(2000));
}

TEST_CASE("client errors are not retried") {
    auto transport = std::make_unique<FakeTransport>();
    transport->responses = {{400, "bad api key"}};
    FakeTransport* raw = transport.get();
    SleepLog log;
    EntrezClient client(std::move(transport), {}, log.sleeper());
    CHECK_THROWS_WITH_AS(client.fetch("pain", 2002, 2021), doctest::Contains("bad api key"),
                         std::runtime_error);
    CHECK(raw->requests.size() == 1);
}

TEST_CASE("zero matches yield an empty result without error") {
    auto transport = std::make_unique<FakeTransport>();
    transport->responses = {{200, R"({"esearchresult":{"count":"0","idlist":[]}})"}};
    SleepLog log;
    EntrezClient client(std::move(transport), {}, log.sleeper());
    FetchResult result = client.fetch("no such thing", 2002, 2021);
    CHECK(result.articles.empty());
    CHECK(result.skipped_records == 0);
}

TEST_CASE("malformed search responses are reported instead of misparsed") {
    auto transport = std::make_unique<FakeTransport>();
    transport->responses = {{200, "<html>maintenance</html>"}};
    SleepLog log;
    EntrezClient client(std::move(transport), {}, log.sleeper());
    CHECK_THROWS_WITH_AS(client.fetch("pain", 2002, 2021), doctest::Contains("malformed"),
                         std::runtime_error);
}

TEST_CASE("bad preconditions are rejected") {
    CHECK_THROWS_AS(EntrezClient(nullptr), std::invalid_argument);
    auto mk = [] { return std::make_unique<FakeTransport>(); };
    EntrezOptions bad_batch;
    bad_batch.batch_size = 0;
    CHECK_THROWS_AS(EntrezClient(mk(), bad_batch), std::invalid_argument);
    EntrezClient client(mk());
    CHECK_THROWS_AS(client.fetch("", 2002, 2021), std::invalid_argument);
    CHECK_THROWS_AS(client.fetch("pain", 2021, 2002), std::invalid_argument);
}

TEST_CASE("api key and email ride along as query parameters") {
    auto transport = std::make_unique<FakeTransport>();
    transport->responses = {{200, R"({"esearchresult":{"count":"0","idlist":[]}})"}};
    FakeTransport* raw = transport.get();
    SleepLog log;
    EntrezOptions opts;
    opts.api_key = "k123";
    opts.email = "user@example.org";
    EntrezClient client(std::move(transport), opts, log.sleeper());
    client.fetch("pain", 2002, 2021);
    REQUIRE(raw->requests.size() == 1);
    CHECK(raw->requests[0].find("api_key=k123") != std::string::npos);
    CHECK(raw->requests[0].find("email=user%40example.org") != std::string::npos);
}

TEST_CASE("url encoding covers reserved characters") {
    CHECK(url_encode("pain[Title] OR pain") == "pain%5BTitle%5D+OR+pain");
    CHECK(url_encode("a-b_c.d~e") == "a-b_c.d~e");
    CHECK(url_encode("50%") == "50%25");
}
