#include "cyclegraph/render.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

namespace cyclegraph {

std::vector<std::string> vertex_labels(const GammaGraph& gamma) {
    std::vector<std::string> labels;
    labels.reserve(gamma.vertices.size());
    std::map<long long, int> next_index;
    for (const auto& v : gamma.vertices)
        labels.push_back("Z" + std::to_string(v.order) + "#" +
                         std::to_string(next_index[v.order]++));
    return labels;
}

std::string render_dot(const GammaGraph& gamma, const std::string& graph_name) {
    auto labels = vertex_labels(gamma);
    std::ostringstream out;
    out << "graph " << graph_name << " {\n";
    for (size_t v = 0; v < labels.size(); ++v)
        out << "  v" << v << " [label=\"" << labels[v] << "\"];\n";
    for (auto [u, v] : gamma.edges) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

namespace {

std::string opt_str(const std::optional<int>& v, const char* when_empty) {
    return v ? std::to_string(*v) : std::string(when_empty);
}

}  // namespace

std::string render_text(const Group& g, const GammaGraph& gamma, const InvariantSummary& s) {
    auto labels = vertex_labels(gamma);
    std::ostringstream out;
    out << g.family.name() << ": order " << g.order << ", " << s.vertex_count
        << " cyclic subgroups, " << s.edge_count << " edges\n";
    out << "vertices:\n";
    for (size_t v = 0; v < labels.size(); ++v) {
        out << "  " << labels[v] << " = {";
        const auto& elems = gamma.vertices[v].elements;
        for (size_t i = 0; i < elems.size(); ++i) {
            if (i) out << ",";
            out << elems[i];
        }
        out << "}";
        if (gamma.vertices[v].generator) out << " = <" << *gamma.vertices[v].generator << ">";
        out << "\n";
    }
    out << "edges:\n";
    for (auto [u, v] : gamma.edges) out << "  " << labels[u] << " -- " << labels[v] << "\n";
    out << "summary:\n";
    out << "  connected=" << (s.connected ? "true" : "false")
        << " bipartite=" << (s.bipartite ? "true" : "false")
        << " diameter=" << opt_str(s.diameter, "disconnected")
        << " girth=" << opt_str(s.girth, "inf") << "\n";
    out << "  degrees: min=" << s.min_degree << " max=" << s.max_degree
        << " pendants=" << s.pendant_count << "\n";
    out << "  tree=" << (s.tree ? "true" : "false") << " regular=" << (s.regular ? "true" : "false")
        << " eulerian=" << (s.eulerian ? "true" : "false") << "\n";
    out << "  path=" << (s.path_graph ? "true" : "false")
        << " cycle=" << (s.cycle_graph ? "true" : "false")
        << " star=" << (s.star_graph ? "true" : "false")
        << " complete=" << (s.complete_graph ? "true" : "false") << "\n";
    return out.str();
}

std::string render_json(const Group& g, const GammaGraph& gamma, const InvariantSummary& s) {
    auto labels = vertex_labels(gamma);
    nlohmann::ordered_json j;
    j["descriptor"] = g.family.name();
    j["order"] = g.order;
    j["vertices"] = nlohmann::ordered_json::array();
    for (size_t v = 0; v < labels.size(); ++v) {
        nlohmann::ordered_json vj;
        vj["label"] = labels[v];
        vj["order"] = gamma.vertices[v].order;
        vj["elements"] = gamma.vertices[v].elements;
        if (gamma.vertices[v].generator) vj["generator"] = *gamma.vertices[v].generator;
        j["vertices"].push_back(std::move(vj));
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : gamma.edges) j["edges"].push_back({u, v});
    nlohmann::ordered_json sj;
    sj["vertex_count"] = s.vertex_count;
    sj["edge_count"] = s.edge_count;
    sj["degree_sequence"] = s.degree_sequence;
    sj["min_degree"] = s.min_degree;
    sj["max_degree"] = s.max_degree;
    sj["pendant_count"] = s.pendant_count;
    sj["connected"] = s.connected;
    if (s.diameter) sj["diameter"] = *s.diameter;
    else sj["diameter"] = "disconnected";
    if (s.girth) sj["girth"] = *s.girth;
    else sj["girth"] = "inf";
    sj["bipartite"] = s.bipartite;
    sj["tree"] = s.tree;
    sj["regular"] = s.regular;
    sj["eulerian"] = s.eulerian;
    sj["path_graph"] = s.path_graph;
    sj["cycle_graph"] = s.cycle_graph;
    sj["star_graph"] = s.star_graph;
    sj["complete_graph"] = s.complete_graph;
    j["summary"] = std::move(sj);
    return j.dump(2) + "\n";
}

}  // namespace cyclegraph
