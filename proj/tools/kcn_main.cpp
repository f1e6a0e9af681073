// Command-line front end: fetch/import a keyword corpus, build per-window
// co-occurrence graphs, and emit the analysis reports.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kcn/assoc_rules.hpp"
#include "kcn/config.hpp"
#include "kcn/corpus.hpp"
#include "kcn/csv.hpp"
#include "kcn/entrez.hpp"
#include "kcn/errors.hpp"
#include "kcn/graph.hpp"
#include "kcn/graph_io.hpp"
#include "kcn/import.hpp"
#include "kcn/keyword_norm.hpp"
#include "kcn/metrics.hpp"
#include "kcn/stemmer.hpp"
#include "kcn/text_util.hpp"
#include "kcn/trends.hpp"
#include "kcn/window.hpp"

namespace fs = std::filesystem;
using namespace kcn;

namespace {

Stemmer make_stemmer(const RunConfig& cfg) {
    Stemmer stemmer;
    if (!cfg.stem_exceptions.empty()) stemmer.load_exceptions(cfg.stem_exceptions);
    return stemmer;
}

std::vector<TimeWindow> selected_windows(const RunConfig& cfg, const std::string& label) {
    if (label.empty()) return cfg.windows;
    for (const TimeWindow& w : cfg.windows)
        if (w.label == label) return {w};
    throw ConfigError("no configured window labelled '" + label + "'");
}

std::vector<ArticleRecord> load_corpus_checked(const RunConfig& cfg) {
    if (!fs::exists(cfg.corpus_dir / "manifest.json"))
        throw IoError("no corpus at " + cfg.corpus_dir.string() + "; run import or fetch first");
    return load_corpus(cfg.corpus_dir);
}

fs::path graph_path(const RunConfig& cfg, const TimeWindow& w) {
    return cfg.output_dir / "graphs" / (w.label + ".kcn");
}

WeightedKcn load_graph_checked(const RunConfig& cfg, const TimeWindow& w) {
    fs::path path = graph_path(cfg, w);
    if (!fs::exists(path))
        throw IoError("graph for window " + w.label + " not built: " + path.string() +
                      "; run build first");
    return read_kcn_file(path);
}

std::ofstream open_report(const fs::path& path) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

// Re-expand stored records so a new batch can be deduplicated against them.
std::vector<RawArticle> to_raw(const std::vector<ArticleRecord>& records) {
    std::vector<RawArticle> raw;
    for (const ArticleRecord& rec : records) {
        std::string field;
        for (std::size_t i = 0; i < rec.raw_keywords.size(); ++i) {
            if (i) field += ";";
            field += rec.raw_keywords[i];
        }
        for (Source s : rec.sources) {
            RawArticle a;
            a.source = s;
            a.title = rec.title;
            a.year = rec.year;
            a.raw_keyword_field = field;
            raw.push_back(std::move(a));
        }
    }
    return raw;
}

void write_corpus(const RunConfig& cfg, std::vector<RawArticle> raw, bool append,
                  const Stemmer& stemmer) {
    if (append && fs::exists(cfg.corpus_dir / "manifest.json")) {
        for (RawArticle& a : to_raw(load_corpus(cfg.corpus_dir))) raw.push_back(std::move(a));
    }
    auto [records, report] = dedupe_corpus(raw);
    normalize_corpus(records, stemmer);
    persist_corpus(records, cfg.corpus_dir);

    nlohmann::json j;
    j["raw_count"] = report.raw_count;
    j["removed_count"] = report.removed_count;
    j["kept_count"] = report.kept_count;
    nlohmann::json overlaps = nlohmann::json::array();
    for (const auto& [pair, n] : report.per_source_overlap) {
        nlohmann::json o;
        o["source_a"] = std::string(source_name(pair.first));
        o["source_b"] = std::string(source_name(pair.second));
        o["count"] = n;
        overlaps.push_back(std::move(o));
    }
    j["per_source_overlap"] = std::move(overlaps);
    auto out = open_report(cfg.corpus_dir / "dedup_report.json");
    out << j.dump(2) << '\n';

    std::cerr << "dedup: raw=" << report.raw_count << " kept=" << report.kept_count
              << " removed=" << report.removed_count << '\n';
}

// ---------------------------------------------------------------- commands

struct FetchOpts {
    std::string query;
    int year_from = 0;
    int year_to = 0;
    bool append = false;
};

void cmd_fetch(const RunConfig& cfg, const FetchOpts& opts) {
    int year_from = opts.year_from ? opts.year_from : cfg.windows.front().start_year;
    int year_to = opts.year_to ? opts.year_to : cfg.windows.back().end_year;

    EntrezOptions eopts;
    eopts.batch_size = cfg.entrez_batch_size;
    eopts.rate_limit = cfg.entrez_rate_limit;
    eopts.api_key = cfg.entrez_api_key;
    eopts.email = cfg.entrez_email;

    FetchResult fetched;
    try {
        EntrezClient client(make_entrez_transport(), eopts);
        fetched = client.fetch(opts.query, year_from, year_to);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        throw NetworkError(e.what());
    }
    std::cerr << "fetch: " << fetched.articles.size() << " records, " << fetched.skipped_records
              << " skipped\n";
    write_corpus(cfg, std::move(fetched.articles), opts.append, make_stemmer(cfg));
}

struct ImportOpts {
    std::vector<std::string> files;
    std::string source = "other";
    std::string format = "csv";
    bool append = false;
};

void cmd_import(const RunConfig& cfg, const ImportOpts& opts) {
    Source source = source_from_name(opts.source);
    ImportFormat format = opts.format == "ris" ? ImportFormat::ris : ImportFormat::csv;
    std::vector<RawArticle> raw;
    for (const std::string& file : opts.files) {
        ImportResult result = import_export_file(file, source, format);
        for (const std::string& warning : result.warnings) std::cerr << "import: " << warning << '\n';
        std::cerr << "import: " << file << ": " << result.articles.size() << " records\n";
        for (RawArticle& a : result.articles) raw.push_back(std::move(a));
    }
    write_corpus(cfg, std::move(raw), opts.append, make_stemmer(cfg));
}

void cmd_build(const RunConfig& cfg, const std::string& window_label, bool graphml) {
    auto corpus = load_corpus_checked(cfg);
    for (const TimeWindow& w : selected_windows(cfg, window_label)) {
        WeightedKcn g = build_kcn(corpus, w);
        write_kcn_file(g, graph_path(cfg, w));
        if (graphml)
            write_graphml(g, cfg.output_dir / "graphs" / (w.label + ".graphml"));
        if (g.article_count() == 0)
            std::cerr << "build " << w.label << ": warning: no articles in window\n";
        std::cerr << "build " << w.label << ": articles=" << g.article_count()
                  << " nodes=" << g.node_count() << " links=" << g.edge_count() << '\n';
    }
}

void write_summary(const RunConfig& cfg, const std::string& window_label) {
    auto out = open_report(cfg.output_dir / "reports" / "summary.csv");
    out << "window,articles,nodes,links,avg_degree,max_degree,avg_strength,max_strength,"
           "avg_weight,max_weight\n";
    for (const TimeWindow& w : selected_windows(cfg, window_label)) {
        SummaryStats s = network_summary(load_graph_checked(cfg, w));
        out << csv_escape(w.label) << ',' << s.article_count << ',' << s.node_count << ','
            << s.link_count << ',' << format_number(s.avg_degree) << ',' << s.max_degree << ','
            << format_number(s.avg_strength) << ',' << s.max_strength << ','
            << format_number(s.avg_weight) << ',' << s.max_weight << '\n';
    }
}

void write_top_keywords(const RunConfig& cfg, const std::string& window_label) {
    for (const TimeWindow& w : selected_windows(cfg, window_label)) {
        WeightedKcn g = load_graph_checked(cfg, w);
        auto out = open_report(cfg.output_dir / "reports" / ("top_keywords_" + w.label + ".csv"));
        out << "rank,keyword,strength\n";
        auto ranked = top_keywords_by_strength(g, cfg.top_n);
        for (std::size_t i = 0; i < ranked.size(); ++i)
            out << (i + 1) << ',' << csv_escape(ranked[i].first) << ',' << ranked[i].second << '\n';
    }
}

void write_top_pairs(const RunConfig& cfg, const std::string& window_label) {
    for (const TimeWindow& w : selected_windows(cfg, window_label)) {
        WeightedKcn g = load_graph_checked(cfg, w);
        auto out = open_report(cfg.output_dir / "reports" / ("top_pairs_" + w.label + ".csv"));
        out << "rank,source,target,weight\n";
        auto ranked = top_pairs_by_weight(g, cfg.top_n);
        for (std::size_t i = 0; i < ranked.size(); ++i)
            out << (i + 1) << ',' << csv_escape(ranked[i].a) << ',' << csv_escape(ranked[i].b)
                << ',' << ranked[i].weight << '\n';
    }
}

nlohmann::json curve_json(const DegreeBinnedCurve& curve) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CurvePoint& p : curve.points) {
        nlohmann::json o;
        o["x"] = p.x;
        o["y"] = p.mean;
        o["count"] = p.count;
        arr.push_back(std::move(o));
    }
    return arr;
}

void write_curves(const RunConfig& cfg, const std::string& window_label) {
    for (const TimeWindow& w : selected_windows(cfg, window_label)) {
        WeightedKcn g = load_graph_checked(cfg, w);
        nlohmann::json j;
        j["window"] = w.label;
        j["avg_weight_vs_endpoint_degree"] = curve_json(avg_weight_vs_endpoint_degree(g));
        j["clustering_vs_degree"] = curve_json(clustering_vs_degree(g));
        j["nn_degree_vs_degree"] = curve_json(nn_degree_vs_degree(g));
        auto out = open_report(cfg.output_dir / "reports" / ("curves_" + w.label + ".json"));
        out << j.dump(2) << '\n';
    }
}

void write_distributions(const RunConfig& cfg, const std::string& window_label) {
    constexpr std::pair<MetricKind, const char*> kinds[] = {
        {MetricKind::degree, "degree"},
        {MetricKind::strength, "strength"},
        {MetricKind::weight, "weight"},
    };
    for (const TimeWindow& w : selected_windows(cfg, window_label)) {
        WeightedKcn g = load_graph_checked(cfg, w);
        auto out = open_report(cfg.output_dir / "reports" / ("distributions_" + w.label + ".csv"));
        auto values =
            open_report(cfg.output_dir / "reports" / ("distribution_values_" + w.label + ".csv"));
        out << "metric,min,q1,median,q3,max\n";
        values << "metric,value\n";
        for (const auto& [kind, name] : kinds) {
            DistributionSummary d = metric_distribution(g, kind);
            out << name << ',' << format_number(d.min) << ',' << format_number(d.q1) << ','
                << format_number(d.median) << ',' << format_number(d.q3) << ','
                << format_number(d.max) << '\n';
            for (std::int64_t v : d.values) values << name << ',' << v << '\n';
        }
    }
}

void write_clustering_leaders(const RunConfig& cfg, const std::string& window_label) {
    for (const TimeWindow& w : selected_windows(cfg, window_label)) {
        WeightedKcn g = load_graph_checked(cfg, w);
        auto out =
            open_report(cfg.output_dir / "reports" / ("clustering_leaders_" + w.label + ".csv"));
        out << "rank,keyword,clustering,degree,neighbors\n";
        auto leaders = top_clustering_with_neighbors(g, cfg.top_n, cfg.clustering_min_degree);
        for (std::size_t i = 0; i < leaders.size(); ++i) {
            std::string neighbors;
            for (std::size_t k = 0; k < leaders[i].neighbors.size(); ++k) {
                if (k) neighbors += ";";
                neighbors += leaders[i].neighbors[k];
            }
            out << (i + 1) << ',' << csv_escape(leaders[i].keyword) << ','
                << format_number(leaders[i].clustering) << ',' << leaders[i].degree << ','
                << csv_escape(neighbors) << '\n';
        }
    }
}

void write_trends(const RunConfig& cfg) {
    if (cfg.windows.size() < 2) throw ConfigError("trends need at least two windows");
    if (cfg.category_map.empty())
        throw IoError("trends need a category map; set category_map in the config");
    if (!fs::exists(cfg.category_map))
        throw IoError("category map not found: " + cfg.category_map.string());

    auto corpus = load_corpus_checked(cfg);
    Stemmer stemmer = make_stemmer(cfg);
    CategoryMap map = load_category_map(cfg.category_map, stemmer);

    std::vector<FrequencyTable> tables;
    for (const TimeWindow& w : cfg.windows) tables.push_back(frequency_table(corpus, w));
    const std::string& first = cfg.windows.front().label;
    const std::string& last = cfg.windows.back().label;

    auto out = open_report(cfg.output_dir / "reports" / "trends.csv");
    out << "keyword,category,verdict,rank_first,freq_first,rank_last,freq_last\n";
    auto cell = [](const std::optional<std::size_t>& v) {
        return v ? std::to_string(*v) : std::string();
    };
    for (const std::string& category : map.categories()) {
        auto rankings = rank_in_category(tables, map, category, cfg.top_n);
        for (const TrendVerdict& v : classify_trends(rankings, first, last)) {
            out << csv_escape(v.keyword) << ',' << csv_escape(v.category) << ','
                << trend_name(v.verdict) << ',' << cell(v.rank_first) << ','
                << cell(v.freq_first) << ',' << cell(v.rank_last) << ',' << cell(v.freq_last)
                << '\n';
        }
    }
}

void write_rules(const RunConfig& cfg) {
    auto corpus = load_corpus_checked(cfg);
    auto transactions = make_transactions(corpus);
    auto itemsets = mine_frequent_itemsets(transactions, cfg.min_support_count,
                                           cfg.max_itemset_size);
    auto rules = derive_rules(itemsets, cfg.min_confidence, transactions.size());
    auto out = open_report(cfg.output_dir / "reports" / "rules.csv");
    out << "antecedent,consequent,support_count,confidence,lift\n";
    for (const AssociationRule& r : rules)
        out << csv_escape(itemset_text(r.antecedent)) << ','
            << csv_escape(itemset_text(r.consequent)) << ',' << r.support_count << ','
            << format_number(r.confidence) << ',' << format_number(r.lift) << '\n';
    std::cerr << "rules: " << transactions.size() << " transactions, " << itemsets.size()
              << " frequent itemsets, " << rules.size() << " rules\n";
}

void write_dictionary(const RunConfig& cfg) {
    auto corpus = load_corpus_checked(cfg);
    StemDictionary dict = build_dictionary(corpus, make_stemmer(cfg));
    auto out = open_report(cfg.output_dir / "reports" / "dictionary.csv");
    out << "canonical,variant\n";
    for (const auto& [canonical, variants] : dict.entries)
        for (const std::string& variant : variants)
            out << csv_escape(canonical) << ',' << csv_escape(variant) << '\n';
}

void cmd_report(const RunConfig& cfg, const std::string& name, const std::string& window_label) {
    if (name == "summary") write_summary(cfg, window_label);
    else if (name == "top_keywords") write_top_keywords(cfg, window_label);
    else if (name == "top_pairs") write_top_pairs(cfg, window_label);
    else if (name == "curves") write_curves(cfg, window_label);
    else if (name == "distributions") write_distributions(cfg, window_label);
    else if (name == "clustering_leaders") write_clustering_leaders(cfg, window_label);
    else if (name == "trends") write_trends(cfg);
    else if (name == "rules") write_rules(cfg);
    else if (name == "dictionary") write_dictionary(cfg);
    else throw ConfigError("unknown report: " + name);
    std::cerr << "report " << name << ": written to " << (cfg.output_dir / "reports").string()
              << '\n';
}

void cmd_export_graph(const RunConfig& cfg, const std::string& window_label,
                      const std::string& format, std::string out_path) {
    if (window_label.empty()) throw ConfigError("export-graph needs --window");
    TimeWindow w = selected_windows(cfg, window_label).front();
    WeightedKcn g = load_graph_checked(cfg, w);
    if (out_path.empty()) {
        const char* ext = format == "graphml" ? ".graphml" : ".csv";
        out_path = (cfg.output_dir / "export" / (w.label + ext)).string();
    }
    if (format == "graphml") write_graphml(g, out_path);
    else write_edge_csv(g, out_path);
    std::cerr << "export-graph " << w.label << ": " << out_path << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"keyword co-occurrence network toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, output_dir, window_label, corpus_dir;
    app.add_option("-c,--config", config_path, "configuration file");
    app.add_option("--output-dir", output_dir, "override the output directory");
    app.add_option("--corpus-dir", corpus_dir, "override the corpus directory");
    app.add_option("--window", window_label, "restrict to one window label");

    FetchOpts fetch_opts;
    auto* fetch = app.add_subcommand("fetch", "query PubMed and store the corpus");
    fetch->add_option("--query", fetch_opts.query, "search expression")->required();
    fetch->add_option("--year-from", fetch_opts.year_from, "first publication year");
    fetch->add_option("--year-to", fetch_opts.year_to, "last publication year");
    fetch->add_flag("--append", fetch_opts.append, "merge with the existing corpus");

    ImportOpts import_opts;
    auto* import_cmd = app.add_subcommand("import", "read database export files");
    import_cmd->add_option("files", import_opts.files, "export files")->required();
    import_cmd->add_option("--source", import_opts.source, "source database name");
    import_cmd->add_option("--format", import_opts.format, "csv or ris")
        ->check(CLI::IsMember({"csv", "ris"}));
    import_cmd->add_flag("--append", import_opts.append, "merge with the existing corpus");

    bool build_graphml = false;
    auto* build = app.add_subcommand("build", "build per-window co-occurrence graphs");
    build->add_flag("--graphml", build_graphml, "also write GraphML");

    std::string report_name;
    auto* report = app.add_subcommand("report", "write an analysis report");
    report->add_option("name", report_name, "report name")
        ->required()
        ->check(CLI::IsMember({"summary", "top_keywords", "top_pairs", "curves", "distributions",
                               "clustering_leaders", "trends", "rules", "dictionary"}));

    std::string export_format = "edge_csv", export_out;
    auto* export_graph = app.add_subcommand("export-graph", "write one graph to an open format");
    export_graph->add_option("--format", export_format, "edge_csv or graphml")
        ->check(CLI::IsMember({"edge_csv", "graphml"}));
    export_graph->add_option("--out", export_out, "destination path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        RunConfig cfg;
        if (!config_path.empty()) cfg = load_config(config_path);
        if (!output_dir.empty()) cfg.output_dir = output_dir;
        if (!corpus_dir.empty()) cfg.corpus_dir = corpus_dir;
        cfg.validate();

        if (fetch->parsed()) cmd_fetch(cfg, fetch_opts);
        else if (import_cmd->parsed()) cmd_import(cfg, import_opts);
        else if (build->parsed()) cmd_build(cfg, window_label, build_graphml);
        else if (report->parsed()) cmd_report(cfg, report_name, window_label);
        else if (export_graph->parsed())
            cmd_export_graph(cfg, window_label, export_format, export_out);
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const NetworkError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
