#include "reeskit/rees_graph.hpp"

#include <algorithm>

#include <json.hpp>

namespace reeskit {

using json = nlohmann::ordered_json;

bool ReesGraph::has_edge(int j, int k) const {
    return std::binary_search(edges.begin(), edges.end(), Edge{j, k});
}

std::vector<int> ReesGraph::in_sources(int k) const {
    std::vector<int> out;
    for (const auto& e : edges)
        if (e.second == k) out.push_back(e.first);
    return out;
}

ReesGraph build_graph(const std::vector<GeneratorRecord>& gens) {
    if (gens.size() < 3)
        throw FewerThanThreeGeneratorsError("the Rees graph needs at least three generators, got " +
                                            std::to_string(gens.size()));
    ReesGraph g;
    g.nodes.push_back({1, GraphRow::Top, gens[0].kind});
    g.nodes.push_back({2, GraphRow::Bottom, gens[1].kind});
    int rightTop = 1, rightBottom = 2;

    for (std::size_t i = 2; i < gens.size(); ++i) {
        int id = static_cast<int>(i) + 1;
        GenKind kind = gens[i].kind;
        g.nodes.push_back({id, kind == GenKind::Upper ? GraphRow::Top : GraphRow::Bottom, kind});
        g.edges.emplace_back(rightTop, id);
        g.edges.emplace_back(rightBottom, id);
        // The two in-sources close a triangle exactly when they are joined by
        // an edge themselves; its source is the joined pair's source.
        auto connects = [&](int a, int b) {
            return std::find(g.edges.begin(), g.edges.end(), Edge{a, b}) != g.edges.end();
        };
        if (connects(rightTop, rightBottom))
            g.triangles.push_back({rightTop, rightBottom, id});
        else if (connects(rightBottom, rightTop))
            g.triangles.push_back({rightBottom, rightTop, id});
        else if (id >= 4)
            throw InternalError("node " + std::to_string(id) + " closes no triangle");
        if (kind == GenKind::Upper)
            rightTop = id;
        else
            rightBottom = id;
    }
    std::sort(g.edges.begin(), g.edges.end());
    std::sort(g.triangles.begin(), g.triangles.end(),
              [](const Triangle& a, const Triangle& b) { return a[2] < b[2]; });
    return g;
}

ReesGraph augment(const ReesGraph& g) {
    if (g.augmented) throw AlreadyAugmentedError("graph is already augmented");
    ReesGraph a = g;
    a.augmented = true;
    a.nodes.insert(a.nodes.begin(), {0, GraphRow::Bottom, GenKind::Lower});
    a.edges.emplace_back(0, 2);
    a.edges.emplace_back(1, 2);
    a.triangles.push_back({1, 2, 3});
    std::sort(a.edges.begin(), a.edges.end());
    std::sort(a.triangles.begin(), a.triangles.end(),
              [](const Triangle& x, const Triangle& y) { return x[2] < y[2]; });
    return a;
}

int second_targeting_node(const ReesGraph& g, const Edge& edge) {
    if (!g.has_edge(edge.first, edge.second))
        throw Error("(" + std::to_string(edge.first) + "->" + std::to_string(edge.second) +
                    ") is not an edge of the graph");
    for (const auto& e : g.edges)
        if (e.second == edge.second && e.first != edge.first) return e.first;
    throw NoSecondEdgeError("node " + std::to_string(edge.second) + " has in-degree 1");
}

std::string export_dot(const ReesGraph& g) {
    std::string out = "digraph ReesGraph {\n  rankdir=LR;\n";
    std::string top = "  { rank=min;", bottom = "  { rank=max;";
    for (const auto& n : g.nodes)
        (n.row == GraphRow::Top ? top : bottom) += " g" + std::to_string(n.id) + ";";
    out += top + " }\n" + bottom + " }\n";
    for (const auto& n : g.nodes) {
        std::string attrs = n.id == 0 ? "shape=box, style=bold"
                            : n.kind == GenKind::Lower ? "shape=circle, style=bold"
                                                       : "shape=circle";
        out += "  g" + std::to_string(n.id) + " [" + attrs + "];\n";
    }
    for (const auto& e : g.edges)
        out += "  g" + std::to_string(e.first) + " -> g" + std::to_string(e.second) + ";\n";
    out += "}\n";
    return out;
}

std::string export_graph_json(const ReesGraph& g) {
    json o;
    o["schemaVersion"] = 1;
    json nodes = json::array();
    for (const auto& n : g.nodes) {
        json no;
        no["id"] = n.id;
        no["row"] = to_string(n.row);
        no["kind"] = to_string(n.kind);
        nodes.push_back(no);
    }
    o["nodes"] = nodes;
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back({e.first, e.second});
    o["edges"] = edges;
    json tris = json::array();
    for (const auto& t : g.triangles) tris.push_back({t[0], t[1], t[2]});
    o["triangles"] = tris;
    o["augmented"] = g.augmented;
    return o.dump(2) + "\n";
}

} // namespace reeskit
