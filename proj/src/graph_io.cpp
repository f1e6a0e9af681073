#include "kcn/graph_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kcn/csv.hpp"
#include "kcn/text_util.hpp"

namespace kcn {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

std::string read_all(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string xml_unescape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '&') {
            out += s[i++];
            continue;
        }
        auto take = [&](std::string_view ent, char ch) {
            if (s.substr(i, ent.size()) == ent) {
                out += ch;
                i += ent.size();
                return true;
            }
            return false;
        };
        if (take("&amp;", '&') || take("&lt;", '<') || take("&gt;", '>') ||
            take("&quot;", '"') || take("&apos;", '\''))
            continue;
        out += s[i++];
    }
    return out;
}

WeightedKcn from_keyword_edges(
    const std::map<std::pair<std::string, std::string>, std::int64_t>& weights,
    const std::set<std::string>& extra_nodes, TimeWindow window, std::size_t article_count) {
    std::set<std::string> node_set = extra_nodes;
    for (const auto& [pair, w] : weights) {
        node_set.insert(pair.first);
        node_set.insert(pair.second);
    }
    std::vector<std::string> nodes(node_set.begin(), node_set.end());
    auto index_of = [&](const std::string& kw) {
        return static_cast<std::uint32_t>(
            std::lower_bound(nodes.begin(), nodes.end(), kw) - nodes.begin());
    };
    std::vector<WeightedEdge> edges;
    edges.reserve(weights.size());
    for (const auto& [pair, w] : weights) {
        std::uint32_t u = index_of(pair.first), v = index_of(pair.second);
        if (u > v) std::swap(u, v);
        edges.push_back({u, v, w});
    }
    return WeightedKcn(std::move(window), std::move(nodes), std::move(edges), article_count);
}

}  // namespace

void write_edge_csv(const WeightedKcn& graph, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "source,target,weight\n";
    // node indices are in keyword order, so edge order is already lexicographic
    for (const WeightedEdge& e : graph.edges())
        out << csv_escape(graph.keyword(e.u)) << ',' << csv_escape(graph.keyword(e.v)) << ','
            << e.weight << '\n';
    out.close();
    if (!out) throw std::runtime_error("short write to " + path.string());
}

WeightedKcn read_edge_csv(const std::filesystem::path& path) {
    auto rows = parse_csv(read_all(path));
    if (rows.empty() || rows[0].size() < 3 || rows[0][0] != "source" || rows[0][1] != "target" ||
        rows[0][2] != "weight")
        throw std::runtime_error(path.string() + ": not an edge CSV (bad header)");
    std::map<std::pair<std::string, std::string>, std::int64_t> weights;
    for (size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() < 3)
            throw std::runtime_error(path.string() + ": short row " + std::to_string(r + 1));
        weights[{rows[r][0], rows[r][1]}] += std::stoll(rows[r][2]);
    }
    return from_keyword_edges(weights, {}, TimeWindow{}, 0);
}

void write_graphml(const WeightedKcn& graph, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"d0\" for=\"node\" attr.name=\"keyword\" attr.type=\"string\"/>\n"
        << "  <key id=\"d1\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n"
        << "  <graph id=\"" << xml_escape(graph.window().label)
        << "\" edgedefault=\"undirected\">\n";
    for (std::size_t i = 0; i < graph.node_count(); ++i)
        out << "    <node id=\"n" << i << "\"><data key=\"d0\">"
            << xml_escape(graph.keyword(static_cast<std::uint32_t>(i))) << "</data></node>\n";
    for (const WeightedEdge& e : graph.edges())
        out << "    <edge source=\"n" << e.u << "\" target=\"n" << e.v
            << "\"><data key=\"d1\">" << e.weight << "</data></edge>\n";
    out << "  </graph>\n</graphml>\n";
    out.close();
    if (!out) throw std::runtime_error("short write to " + path.string());
}

WeightedKcn read_graphml(const std::filesystem::path& path) {
    std::string text = read_all(path);

    // Tag-level scan, sufficient for files produced by write_graphml.
    auto attr = [&](std::string_view tag, const char* name) -> std::string {
        std::string needle = std::string(name) + "=\"";
        size_t p = tag.find(needle);
        if (p == std::string_view::npos) return {};
        p += needle.size();
        size_t q = tag.find('"', p);
        return std::string(tag.substr(p, q - p));
    };
    auto data_value = [&](std::string_view element) -> std::string {
        size_t p = element.find("<data");
        if (p == std::string_view::npos) return {};
        p = element.find('>', p);
        size_t q = element.find("</data>", p);
        if (p == std::string_view::npos || q == std::string_view::npos) return {};
        return xml_unescape(element.substr(p + 1, q - p - 1));
    };

    std::map<std::string, std::string> id_to_keyword;
    std::map<std::pair<std::string, std::string>, std::int64_t> weights;
    std::set<std::string> all_nodes;

    size_t pos = 0;
    while ((pos = text.find('<', pos)) != std::string::npos) {
        if (text.compare(pos, 5, "<node") == 0) {
            size_t end = text.find("</node>", pos);
            if (end == std::string::npos) end = text.find("/>", pos);
            std::string_view element(text.data() + pos, end - pos);
            std::string id = attr(element, "id");
            std::string kw = data_value(element);
            if (kw.empty()) kw = id;
            id_to_keyword[id] = kw;
            all_nodes.insert(kw);
            pos = end;
        } else if (text.compare(pos, 5, "<edge") == 0) {
            size_t end = text.find("</edge>", pos);
            if (end == std::string::npos) end = text.find("/>", pos);
            std::string_view element(text.data() + pos, end - pos);
            std::string s = attr(element, "source");
            std::string t = attr(element, "target");
            std::string w = data_value(element);
            auto si = id_to_keyword.find(s);
            auto ti = id_to_keyword.find(t);
            if (si == id_to_keyword.end() || ti == id_to_keyword.end())
                throw std::runtime_error(path.string() + ": edge references unknown node");
            weights[{si->second, ti->second}] += w.empty() ? 1 : std::stoll(w);
            pos = end;
        } else {
            ++pos;
        }
    }

    std::string label;
    size_t g = text.find("<graph ");
    if (g != std::string::npos) {
        size_t end = text.find('>', g);
        label = xml_unescape(attr(std::string_view(text.data() + g, end - g), "id"));
    }
    TimeWindow window;
    window.label = label;
    return from_keyword_edges(weights, all_nodes, window, 0);
}

void write_kcn_file(const WeightedKcn& graph, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "kcngraph 1\n";
    out << "window " << graph.window().start_year << ' ' << graph.window().end_year << ' '
        << graph.window().label << '\n';
    out << "articles " << graph.article_count() << '\n';
    out << "nodes " << graph.node_count() << '\n';
    for (const std::string& kw : graph.nodes()) out << kw << '\n';
    out << "edges " << graph.edge_count() << '\n';
    for (const WeightedEdge& e : graph.edges()) out << e.u << ' ' << e.v << ' ' << e.weight << '\n';
    out.close();
    if (!out) throw std::runtime_error("short write to " + path.string());
}

WeightedKcn read_kcn_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    auto fail = [&](const std::string& why) -> std::runtime_error {
        return std::runtime_error(path.string() + ": " + why);
    };

    std::string line, word;
    if (!std::getline(in, line) || line != "kcngraph 1") throw fail("not a kcngraph v1 file");

    TimeWindow window;
    if (!std::getline(in, line)) throw fail("missing window line");
    {
        std::istringstream ls(line);
        int start = 0, end = 0;
        if (!(ls >> word >> start >> end) || word != "window") throw fail("bad window line");
        std::string label;
        std::getline(ls, label);
        window = make_window(start, end, std::string(trim(label)));
    }

    std::size_t articles = 0, node_count = 0, edge_count = 0;
    if (!(in >> word >> articles) || word != "articles") throw fail("bad articles line");
    if (!(in >> word >> node_count) || word != "nodes") throw fail("bad nodes line");
    std::getline(in, line);
    std::vector<std::string> nodes;
    nodes.reserve(node_count);
    for (std::size_t i = 0; i < node_count; ++i) {
        if (!std::getline(in, line)) throw fail("truncated node list");
        nodes.push_back(line);
    }
    if (!(in >> word >> edge_count) || word != "edges") throw fail("bad edges line");
    std::vector<WeightedEdge> edges;
    edges.reserve(edge_count);
    for (std::size_t i = 0; i < edge_count; ++i) {
        WeightedEdge e;
        if (!(in >> e.u >> e.v >> e.weight)) throw fail("truncated edge list");
        edges.push_back(e);
    }
    return WeightedKcn(std::move(window), std::move(nodes), std::move(edges), articles);
}

}  // namespace kcn
