#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "kcn/config.hpp"
#include "kcn/errors.hpp"

using namespace kcn;
namespace fs = std::filesystem;

namespace {

fs::path write_temp(const char* name, const std::string& content) {
    auto dir = fs::temp_directory_path() / "kcn_config_test";
    fs::create_directories(dir);
    auto path = dir / name;
    std::ofstream(path, std::ios::binary) << content;
    return path;
}

}  // namespace

TEST_CASE("defaults cover the four analysis windows and pass validation") {
    RunConfig cfg;
    cfg.validate();
    REQUIRE(cfg.windows.size() == 4);
    CHECK(cfg.windows[0].label == "2002-2006");
    CHECK(cfg.windows[0].start_year == 2002);
    CHECK(cfg.windows[3].label == "2017-2021");
    CHECK(cfg.windows[3].end_year == 2021);
    CHECK(cfg.min_support_count == 200);
    CHECK(cfg.min_confidence == 0.55);
    CHECK(cfg.top_n == 20);
}

TEST_CASE("key value lines with comments and sections") {
    auto path = write_temp("full.conf",
                           "# comment\n"
                           "top_n = 5\n"
                           "corpus_dir = /tmp/corpus\n"
                           "; another comment\n"
                           "windows = 2000-2004, 2005-2009\n"
                           "\n"
                           "[entrez]\n"
                           "email = someone@example.org\n"
                           "rate_limit = 9.5\n");
    auto kv = parse_config_file(path);
    CHECK(kv.at("top_n") == "5");
    CHECK(kv.at("entrez.email") == "someone@example.org");
    CHECK(kv.count("# comment") == 0);

    RunConfig cfg = load_config(path);
    CHECK(cfg.top_n == 5);
    CHECK(cfg.corpus_dir == "/tmp/corpus");
    REQUIRE(cfg.windows.size() == 2);
    CHECK(cfg.windows[1].label == "2005-2009");
    CHECK(cfg.entrez_email == "someone@example.org");
    CHECK(cfg.entrez_rate_limit == 9.5);
    // untouched keys keep their defaults
    CHECK(cfg.min_support_count == 200);
}

TEST_CASE("unknown keys are called out") {
    auto path = write_temp("unknown.conf", "min_suport = 10\n");
    CHECK_THROWS_WITH_AS(load_config(path), doctest::Contains("min_suport"), ConfigError);
}

TEST_CASE("syntax errors name the line") {
    auto no_eq = write_temp("noeq.conf", "top_n = 3\nthis line has no equals\n");
    CHECK_THROWS_WITH_AS(parse_config_file(no_eq), doctest::Contains(":2"), ConfigError);
    auto bad_section = write_temp("badsec.conf", "[entrez\nemail = x\n");
    CHECK_THROWS_WITH_AS(parse_config_file(bad_section), doctest::Contains(":1"), ConfigError);
    CHECK_THROWS_AS(parse_config_file(fs::path("/nonexistent/kcn.conf")), ConfigError);
}

TEST_CASE("window list syntax") {
    auto windows = parse_window_list("2002-2006,2007-2011");
    REQUIRE(windows.size() == 2);
    CHECK(windows[0].start_year == 2002);
    CHECK(windows[0].end_year == 2006);
    CHECK(windows[1].label == "2007-2011");

    CHECK_THROWS_AS(parse_window_list("2002"), ConfigError);
    CHECK_THROWS_AS(parse_window_list("abcd-efgh"), ConfigError);
    CHECK_THROWS_AS(parse_window_list(""), ConfigError);
    CHECK_THROWS_AS(parse_window_list("2010-2005"), ConfigError);
}

TEST_CASE("validation rejects window overlap and bad thresholds") {
    RunConfig cfg;
    cfg.windows = {make_window(2002, 2008), make_window(2007, 2011)};
    CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("non-overlapping"), ConfigError);

    cfg = RunConfig{};
    cfg.windows = {make_window(2007, 2011), make_window(2002, 2006)};
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    cfg = RunConfig{};
    cfg.windows.clear();
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    cfg = RunConfig{};
    cfg.min_support_count = 0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    cfg = RunConfig{};
    cfg.min_confidence = 0.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.min_confidence = 1.25;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    cfg = RunConfig{};
    cfg.max_itemset_size = 1;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    cfg = RunConfig{};
    cfg.entrez_rate_limit = 0.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    cfg = RunConfig{};
    cfg.entrez_batch_size = 0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.entrez_batch_size = 20000;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("adjacent windows touching edge years are accepted") {
    RunConfig cfg;
    cfg.windows = {make_window(2002, 2006), make_window(2007, 2011)};
    cfg.validate();
}

TEST_CASE("numeric values are checked as they load") {
    auto path = write_temp("badnum.conf", "top_n = many\n");
    CHECK_THROWS_WITH_AS(load_config(path), doctest::Contains("top_n"), ConfigError);
    auto bad_rate = write_temp("badrate.conf", "[entrez]\nrate_limit = fast\n");
    CHECK_THROWS_AS(load_config(bad_rate), ConfigError);
    auto bad_window = write_temp("badwin.conf", "windows = 2002:2006\n");
    CHECK_THROWS_AS(load_config(bad_window), ConfigError);
}
