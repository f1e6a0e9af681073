#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "kcn/trends.hpp"

using namespace kcn;
namespace fs = std::filesystem;

namespace {

fs::path write_temp(const char* name, const std::string& content) {
    auto dir = fs::temp_directory_path() / "kcn_trends_test";
    fs::create_directories(dir);
    auto path = dir / name;
    std::ofstream(path, std::ios::binary) << content;
    return path;
}

FrequencyTable table(std::string label, std::map<std::string, std::size_t> counts) {
    FrequencyTable t;
    t.window = make_window(2002, 2006, std::move(label));
    t.counts = std::move(counts);
    return t;
}

const RankEntry* entry_of(const CategoryRanking& r, const std::string& kw) {
    for (const auto& e : r.entries)
        if (e.keyword == kw) return &e;
    return nullptr;
}

const TrendVerdict* verdict_of(const std::vector<TrendVerdict>& vs, const std::string& kw) {
    for (const auto& v : vs)
        if (v.keyword == kw) return &v;
    return nullptr;
}

}  // namespace

TEST_CASE("category map keys are stored in canonical form") {
    auto path = write_temp("map.csv",
                           "keyword,category\n"
                           "Machine Learning,methods\n"
                           "opioids,drugs\n"
                           "Neuropathic Pain,conditions\n");
    auto map = load_category_map(path);
    REQUIRE(map.assignments.size() == 3);
    CHECK(map.assignments.at("machin learn") == "methods");
    CHECK(map.assignments.at("opioid") == "drugs");
    CHECK(map.assignments.at("neuropath pain") == "conditions");
    auto cats = map.categories();
    CHECK(cats == std::vector<std::string>{"conditions", "drugs", "methods"});
}

TEST_CASE("category map rejects duplicates that collide after normalization") {
    auto path = write_temp("dup.csv",
                           "opioids,drugs\n"
                           "Opioid,medications\n");
    CHECK_THROWS_WITH_AS(load_category_map(path), doctest::Contains("duplicate"),
                         std::runtime_error);
}

TEST_CASE("category map rejects keywords that normalize to nothing") {
    auto path = write_temp("vanish.csv", "of,misc\n");
    CHECK_THROWS_WITH_AS(load_category_map(path), doctest::Contains("normalizes to nothing"),
                         std::runtime_error);
}

TEST_CASE("category map tolerates blank lines and a missing header") {
    auto path = write_temp("noheader.csv", "opioids,drugs\n\nketamine,drugs\n");
    auto map = load_category_map(path);
    CHECK(map.assignments.size() == 2);
    CHECK(map.categories() == std::vector<std::string>{"drugs"});

    auto missing = fs::temp_directory_path() / "kcn_trends_test" / "does_not_exist.csv";
    CHECK_THROWS_AS(load_category_map(missing), std::runtime_error);
}

TEST_CASE("ranking inside a category orders by frequency then keyword") {
    CategoryMap map;
    map.assignments = {{"a", "cat"}, {"b", "cat"}, {"c", "cat"}, {"x", "other"}};
    auto rankings = rank_in_category({table("w1", {{"a", 5}, {"b", 5}, {"c", 2}, {"x", 9}})},
                                     map, "cat", 20);
    REQUIRE(rankings.size() == 1);
    const auto& r = rankings[0];
    REQUIRE(r.entries.size() == 3);  // x belongs to another category
    CHECK(r.entries[0].keyword == "a");
    CHECK(r.entries[0].rank == 1);
    CHECK(r.entries[0].frequency == 5);
    CHECK(r.entries[1].keyword == "b");
    CHECK(r.entries[1].rank == 2);
    CHECK(r.entries[2].keyword == "c");
    CHECK(r.entries[2].rank == 3);
}

TEST_CASE("ranking truncates to the requested depth") {
    CategoryMap map;
    map.assignments = {{"a", "cat"}, {"b", "cat"}, {"c", "cat"}};
    auto rankings = rank_in_category({table("w1", {{"a", 9}, {"b", 8}, {"c", 7}})}, map, "cat", 2);
    REQUIRE(rankings[0].entries.size() == 2);
    CHECK(rankings[0].entries.back().keyword == "b");
    CHECK_THROWS_AS(rank_in_category({}, map, "cat", 0), std::invalid_argument);
}

TEST_CASE("unmapped keywords rank in the uncategorized bucket") {
    CategoryMap map;
    map.assignments = {{"a", "cat"}};
    auto rankings =
        rank_in_category({table("w1", {{"a", 5}, {"stray", 4}})}, map, kUncategorized, 20);
    REQUIRE(rankings[0].entries.size() == 1);
    CHECK(rankings[0].entries[0].keyword == "stray");
}

TEST_CASE("rank movement between first and last windows produces all four verdicts") {
    CategoryMap map;
    map.assignments = {{"rises", "cat"}, {"falls", "cat"}, {"steady", "cat"},
                       {"arrives", "cat"}, {"leaves", "cat"}, {"middling", "cat"}};
    std::vector<FrequencyTable> tables = {
        table("first", {{"rises", 2}, {"falls", 9}, {"steady", 5}, {"leaves", 3}}),
        table("mid", {{"middling", 4}}),
        table("last", {{"rises", 9}, {"falls", 1}, {"steady", 5}, {"arrives", 4}}),
    };
    auto rankings = rank_in_category(tables, map, "cat", 20);
    auto verdicts = classify_trends(rankings, "first", "last");
    REQUIRE(verdicts.size() == 6);

    // first window ranks: falls=1, steady=2, leaves=3, rises=4
    // last window ranks:  rises=1, steady=2, arrives=3, falls=4
    const auto* rises = verdict_of(verdicts, "rises");
    REQUIRE(rises != nullptr);
    CHECK(rises->verdict == Trend::emerging);
    CHECK(rises->rank_first == 4);
    CHECK(rises->rank_last == 1);
    CHECK(rises->freq_first == 2);
    CHECK(rises->freq_last == 9);

    const auto* falls = verdict_of(verdicts, "falls");
    CHECK(falls->verdict == Trend::declining);
    CHECK(falls->rank_first == 1);
    CHECK(falls->rank_last == 4);

    const auto* steady = verdict_of(verdicts, "steady");
    CHECK(steady->verdict == Trend::stable);
    CHECK(steady->rank_first == 2);
    CHECK(steady->rank_last == 2);

    const auto* arrives = verdict_of(verdicts, "arrives");
    CHECK(arrives->verdict == Trend::emerging);
    CHECK(!arrives->rank_first.has_value());
    CHECK(arrives->rank_last == 3);

    const auto* leaves = verdict_of(verdicts, "leaves");
    CHECK(leaves->verdict == Trend::declining);
    CHECK(leaves->rank_first == 3);
    CHECK(!leaves->rank_last.has_value());

    const auto* middling = verdict_of(verdicts, "middling");
    CHECK(middling->verdict == Trend::unranked);
    CHECK(!middling->rank_first.has_value());
    CHECK(!middling->rank_last.has_value());
}

TEST_CASE("swapping the window order flips emerging and declining") {
    CategoryMap map;
    map.assignments = {{"rises", "cat"}, {"falls", "cat"}, {"steady", "cat"}};
    std::vector<FrequencyTable> tables = {
        table("w1", {{"rises", 1}, {"falls", 9}, {"steady", 5}}),
        table("w2", {{"rises", 9}, {"falls", 1}, {"steady", 5}}),
    };
    auto rankings = rank_in_category(tables, map, "cat", 20);
    auto forward = classify_trends(rankings, "w1", "w2");
    auto backward = classify_trends(rankings, "w2", "w1");
    for (const auto& v : forward) {
        const auto* r = verdict_of(backward, v.keyword);
        REQUIRE(r != nullptr);
        if (v.verdict == Trend::emerging) CHECK(r->verdict == Trend::declining);
        if (v.verdict == Trend::declining) CHECK(r->verdict == Trend::emerging);
        if (v.verdict == Trend::stable) CHECK(r->verdict == Trend::stable);
        CHECK(v.rank_first == r->rank_last);
        CHECK(v.rank_last == r->rank_first);
    }
}

TEST_CASE("every ranked keyword receives exactly one verdict") {
    CategoryMap map;
    for (char c = 'a'; c <= 'j'; ++c) map.assignments[std::string(1, c)] = "cat";
    std::vector<FrequencyTable> tables = {
        table("w1", {{"a", 9}, {"b", 8}, {"c", 7}}),
        table("w2", {{"b", 9}, {"d", 8}}),
        table("w3", {{"a", 1}, {"d", 9}, {"e", 4}}),
    };
    auto rankings = rank_in_category(tables, map, "cat", 2);  // rank lists cap at two
    auto verdicts = classify_trends(rankings, "w1", "w3");
    std::set<std::string> seen;
    for (const auto& v : verdicts) CHECK(seen.insert(v.keyword).second);
    // the union of all three top lists: a, b from w1; b, d from w2; d, e from w3
    CHECK(seen == std::set<std::string>{"a", "b", "d", "e"});
}

TEST_CASE("trend classification checks its window labels") {
    CategoryMap map;
    map.assignments = {{"a", "cat"}};
    auto rankings = rank_in_category({table("w1", {{"a", 1}}), table("w2", {{"a", 1}})},
                                     map, "cat", 20);
    CHECK_THROWS_AS(classify_trends(rankings, "w1", "w1"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(classify_trends(rankings, "w1", "nope"), doctest::Contains("nope"),
                         std::invalid_argument);
}

TEST_CASE("trend labels render as text") {
    CHECK(trend_name(Trend::emerging) == "emerging");
    CHECK(trend_name(Trend::declining) == "declining");
    CHECK(trend_name(Trend::stable) == "stable");
    CHECK(trend_name(Trend::unranked) == "unranked");
}
