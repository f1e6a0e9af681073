// Python bindings for the core operations: keyword normalization, graph
// construction with its metrics, and association rule mining.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kcn/assoc_rules.hpp"
#include "kcn/graph.hpp"
#include "kcn/keyword_norm.hpp"
#include "kcn/metrics.hpp"
#include "kcn/stemmer.hpp"
#include "kcn/window.hpp"

namespace py = pybind11;
using namespace kcn;

namespace {

// (year, keywords) pairs; ids are positional
std::vector<ArticleRecord> to_records(
    const std::vector<std::pair<int, std::vector<std::string>>>& articles) {
    std::vector<ArticleRecord> records;
    records.reserve(articles.size());
    for (std::size_t i = 0; i < articles.size(); ++i) {
        ArticleRecord rec;
        rec.id = static_cast<std::int64_t>(i + 1);
        rec.year = articles[i].first;
        std::set<std::string> unique(articles[i].second.begin(), articles[i].second.end());
        rec.keywords.assign(unique.begin(), unique.end());
        records.push_back(std::move(rec));
    }
    return records;
}

py::list curve_points(const DegreeBinnedCurve& curve) {
    py::list out;
    for (const CurvePoint& p : curve.points) out.append(py::make_tuple(p.x, p.mean, p.count));
    return out;
}

py::dict rule_dict(const AssociationRule& r) {
    py::dict d;
    d["antecedent"] = py::tuple(py::cast(r.antecedent));
    d["consequent"] = py::tuple(py::cast(r.consequent));
    d["support_count"] = r.support_count;
    d["confidence"] = r.confidence;
    d["lift"] = r.lift;
    d["low_lift"] = r.low_lift;
    return d;
}

std::vector<Transaction> to_transactions(const std::vector<std::vector<std::string>>& raw) {
    std::vector<Transaction> out;
    out.reserve(raw.size());
    std::int64_t id = 1;
    for (const auto& items : raw) {
        std::set<std::string> unique(items.begin(), items.end());
        if (unique.empty()) continue;  // keywordless articles carry no signal
        Transaction t;
        t.article_id = id++;
        t.items.assign(unique.begin(), unique.end());
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "keyword co-occurrence network core";

    m.def("stem", [](const std::string& word) { return default_stemmer().stem(word); },
          py::arg("word"), "Stem of one lowercase token.");

    m.def("normalize_keyword",
          [](const std::string& raw) { return normalize_keyword(raw); }, py::arg("raw"),
          "Canonical form of a raw keyword, or None when nothing survives.");

    m.def("split_keywords", &split_raw_keywords, py::arg("field"),
          "Splits a delimited keyword field into lowercased raw keywords.");

    py::class_<WeightedKcn>(m, "Graph", "Weighted keyword co-occurrence graph.")
        .def_property_readonly("label", [](const WeightedKcn& g) { return g.window().label; })
        .def_property_readonly("year_from",
                               [](const WeightedKcn& g) { return g.window().start_year; })
        .def_property_readonly("year_to",
                               [](const WeightedKcn& g) { return g.window().end_year; })
        .def_property_readonly("article_count", &WeightedKcn::article_count)
        .def_property_readonly("nodes",
                               [](const WeightedKcn& g) { return g.nodes(); })
        .def_property_readonly("max_weight", &WeightedKcn::max_weight)
        .def_property_readonly("total_weight", &WeightedKcn::total_weight)
        .def("__len__", &WeightedKcn::node_count)
        .def("edge_count", &WeightedKcn::edge_count)
        .def("edges",
             [](const WeightedKcn& g) {
                 py::list out;
                 for (const WeightedEdge& e : g.edges())
                     out.append(py::make_tuple(g.keyword(e.u), g.keyword(e.v), e.weight));
                 return out;
             },
             "Edges as (keyword_a, keyword_b, weight), endpoints sorted.")
        .def("weight",
             [](const WeightedKcn& g, const std::string& a, const std::string& b) {
                 return g.weight(g.node_index(a), g.node_index(b));
             },
             py::arg("a"), py::arg("b"), "Co-occurrence count of two keywords (0 if none).")
        .def("degree",
             [](const WeightedKcn& g, const std::string& kw) { return degree(g, kw); },
             py::arg("keyword"))
        .def("strength",
             [](const WeightedKcn& g, const std::string& kw) { return strength(g, kw); },
             py::arg("keyword"))
        .def("nn_degree",
             [](const WeightedKcn& g, const std::string& kw) { return nn_degree(g, kw); },
             py::arg("keyword"), "Weighted average degree of the keyword's neighbours.")
        .def("clustering",
             [](const WeightedKcn& g, const std::string& kw) { return clustering(g, kw); },
             py::arg("keyword"), "Weighted clustering coefficient in [0, 1].")
        .def("node_metrics",
             [](const WeightedKcn& g) {
                 py::list out;
                 for (const NodeMetrics& m_ : all_node_metrics(g)) {
                     py::dict d;
                     d["keyword"] = m_.keyword;
                     d["degree"] = m_.degree;
                     d["strength"] = m_.strength;
                     d["nn_degree"] = m_.nn_degree;
                     d["clustering"] = m_.clustering;
                     out.append(std::move(d));
                 }
                 return out;
             },
             "Per-node metrics in node order.")
        .def("summary",
             [](const WeightedKcn& g) {
                 SummaryStats s = network_summary(g);
                 py::dict d;
                 d["articles"] = s.article_count;
                 d["nodes"] = s.node_count;
                 d["links"] = s.link_count;
                 d["avg_degree"] = s.avg_degree;
                 d["max_degree"] = s.max_degree;
                 d["avg_strength"] = s.avg_strength;
                 d["max_strength"] = s.max_strength;
                 d["avg_weight"] = s.avg_weight;
                 d["max_weight"] = s.max_weight;
                 return d;
             })
        .def("top_keywords",
             [](const WeightedKcn& g, std::size_t n) { return top_keywords_by_strength(g, n); },
             py::arg("n") = 20, "Strongest keywords as (keyword, strength).")
        .def("top_pairs",
             [](const WeightedKcn& g, std::size_t n) {
                 py::list out;
                 for (const RankedPair& p : top_pairs_by_weight(g, n))
                     out.append(py::make_tuple(p.a, p.b, p.weight));
                 return out;
             },
             py::arg("n") = 20, "Heaviest co-occurrence pairs as (a, b, weight).")
        .def("curves",
             [](const WeightedKcn& g) {
                 py::dict d;
                 d["avg_weight_vs_endpoint_degree"] =
                     curve_points(avg_weight_vs_endpoint_degree(g));
                 d["clustering_vs_degree"] = curve_points(clustering_vs_degree(g));
                 d["nn_degree_vs_degree"] = curve_points(nn_degree_vs_degree(g));
                 return d;
             },
             "Degree-binned curves as lists of (x, mean, count).")
        .def("__repr__", [](const WeightedKcn& g) {
            return "<Graph " + g.window().label + ": " + std::to_string(g.node_count()) +
                   " nodes, " + std::to_string(g.edge_count()) + " links>";
        });

    m.def("build_graph",
          [](const std::vector<std::pair<int, std::vector<std::string>>>& articles,
             int year_from, int year_to, const std::string& label) {
              return build_kcn(to_records(articles), make_window(year_from, year_to, label));
          },
          py::arg("articles"), py::arg("year_from"), py::arg("year_to"),
          py::arg("label") = std::string(),
          "Builds the co-occurrence graph over (year, keywords) records whose year\n"
          "falls inside the inclusive window.");

    m.def("mine_itemsets",
          [](const std::vector<std::vector<std::string>>& transactions,
             std::size_t min_support_count, std::size_t max_size) {
              auto tx = to_transactions(transactions);
              py::dict out;
              for (const auto& [itemset, n] : mine_frequent_itemsets(tx, min_support_count,
                                                                     max_size))
                  out[py::tuple(py::cast(itemset))] = n;
              return out;
          },
          py::arg("transactions"), py::arg("min_support_count"), py::arg("max_size") = 4,
          "Frequent itemsets as {tuple_of_items: support_count}.");

    m.def("derive_rules",
          [](const std::map<std::vector<std::string>, std::size_t>& itemsets,
             double min_confidence, std::size_t transaction_count) {
              py::list out;
              for (const AssociationRule& r :
                   derive_rules(itemsets, min_confidence, transaction_count))
                  out.append(rule_dict(r));
              return out;
          },
          py::arg("itemsets"), py::arg("min_confidence"), py::arg("transaction_count"),
          "Association rules from mined itemsets, sorted by lift then confidence.");

    m.def("mine_rules",
          [](const std::vector<std::vector<std::string>>& transactions,
             std::size_t min_support_count, double min_confidence, std::size_t max_size) {
              auto tx = to_transactions(transactions);
              auto itemsets = mine_frequent_itemsets(tx, min_support_count, max_size);
              py::list out;
              for (const AssociationRule& r : derive_rules(itemsets, min_confidence, tx.size()))
                  out.append(rule_dict(r));
              return out;
          },
          py::arg("transactions"), py::arg("min_support_count"), py::arg("min_confidence"),
          py::arg("max_size") = 4,
          "Mines itemsets and derives rules in one step; empty transactions are dropped.");
}
