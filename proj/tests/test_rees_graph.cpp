#include <doctest.h>

#include <algorithm>

#include "reeskit/rees_graph.hpp"

using namespace reeskit;

namespace {

ReesGraph graph_for(Exp d1, Exp d2, Exp u1, Exp u2) {
    return build_graph(minimal_generators(IdealParams(d1, d2, u1, u2)).records);
}

int count_lines_with(const std::string& text, const std::string& needle) {
    int n = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        if (text.substr(start, end - start).find(needle) != std::string::npos) ++n;
        start = end + 1;
    }
    return n;
}

} // namespace

TEST_CASE("graph of (15,13,9,6) matches the worked figures") {
    ReesGraph g = graph_for(15, 13, 9, 6);
    CHECK(g.edges == std::vector<Edge>{{1, 3}, {1, 4}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(g.triangles == std::vector<Triangle>{{1, 3, 4}, {3, 4, 5}});
    CHECK_FALSE(g.augmented);
    // rows: g1, g4 on top, the lower generators below
    for (const auto& n : g.nodes)
        CHECK(n.row == ((n.id == 1 || n.id == 4) ? GraphRow::Top : GraphRow::Bottom));

    ReesGraph a = augment(g);
    CHECK(a.edges == std::vector<Edge>{{0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}, {3, 5},
                                       {4, 5}});
    CHECK(a.triangles == std::vector<Triangle>{{1, 2, 3}, {1, 3, 4}, {3, 4, 5}});
    CHECK(a.nodes.size() == 6);
    CHECK(a.nodes[0].id == 0);
    CHECK(a.nodes[0].row == GraphRow::Bottom);
}

TEST_CASE("graph of (2,2,1,1)") {
    ReesGraph g = graph_for(2, 2, 1, 1);
    CHECK(g.nodes.size() == 3);
    CHECK(g.edges == std::vector<Edge>{{1, 3}, {2, 3}});
    CHECK(g.triangles.empty());

    ReesGraph a = augment(g);
    CHECK(a.nodes.size() == 4);
    CHECK(a.edges.size() == 4);
    CHECK(a.triangles == std::vector<Triangle>{{1, 2, 3}});
    CHECK_THROWS_AS(augment(a), AlreadyAugmentedError);
}

TEST_CASE("graph of (21,21,6,15)") {
    ReesGraph g = graph_for(21, 21, 6, 15);
    CHECK(g.nodes.size() == 6);
    CHECK(g.edges.size() == 8);
    CHECK(g.triangles.size() == 3);
    // construction replay: kinds are U,L,U,U,L,L
    CHECK(g.edges == std::vector<Edge>{{1, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {4, 5}, {4, 6},
                                       {5, 6}});
    CHECK(g.triangles == std::vector<Triangle>{{2, 3, 4}, {2, 4, 5}, {4, 5, 6}});
}

TEST_CASE("second_targeting_node") {
    ReesGraph a = augment(graph_for(15, 13, 9, 6));
    CHECK(second_targeting_node(a, {1, 2}) == 0);
    CHECK(second_targeting_node(a, {1, 3}) == 2);
    CHECK(second_targeting_node(a, {3, 5}) == 4);

    // a hand-corrupted graph with an in-degree-1 target
    ReesGraph broken;
    broken.nodes = {{1, GraphRow::Top, GenKind::Upper}, {2, GraphRow::Bottom, GenKind::Lower}};
    broken.edges = {{1, 2}};
    CHECK_THROWS_AS(second_targeting_node(broken, {1, 2}), NoSecondEdgeError);
}

TEST_CASE("count invariants on a sweep") {
    for (Exp d1 = 2; d1 <= 11; ++d1)
        for (Exp d2 = 2; d2 <= 11; ++d2)
            for (Exp u1 = 1; u1 < d1; ++u1)
                for (Exp u2 = 1; u2 < d2; ++u2) {
                    ReesGraph g = graph_for(d1, d2, u1, u2);
                    int r = g.node_count();
                    CHECK(static_cast<int>(g.edges.size()) == 2 * (r - 2));
                    CHECK(static_cast<int>(g.triangles.size()) == (r > 3 ? r - 3 : 0));
                    ReesGraph a = augment(g);
                    CHECK(static_cast<int>(a.edges.size()) == 2 * r - 2);
                    CHECK(static_cast<int>(a.triangles.size()) == r - 2);
                    for (const auto& n : a.nodes)
                        if (n.id >= 2) CHECK(a.in_sources(n.id).size() == 2);
                    for (const auto& t : a.triangles) {
                        CHECK(a.has_edge(t[0], t[1]));
                        CHECK(a.has_edge(t[0], t[2]));
                        CHECK(a.has_edge(t[1], t[2]));
                        auto ins = a.in_sources(t[2]);
                        std::sort(ins.begin(), ins.end());
                        CHECK(ins == std::vector<int>{std::min(t[0], t[1]), std::max(t[0], t[1])});
                    }
                }
}

TEST_CASE("FewerThanThreeGenerators guard") {
    std::vector<GeneratorRecord> two =
        minimal_generators(IdealParams(2, 2, 1, 1)).records;
    two.pop_back();
    CHECK_THROWS_AS(build_graph(two), FewerThanThreeGeneratorsError);
}

TEST_CASE("DOT export") {
    ReesGraph g = graph_for(2, 2, 1, 1);
    std::string dot = export_dot(g);
    CHECK(count_lines_with(dot, "[") == 3);
    CHECK(count_lines_with(dot, " -> ") == 2);

    ReesGraph a = augment(graph_for(15, 13, 9, 6));
    std::string adot = export_dot(a);
    CHECK(count_lines_with(adot, "[") == 6);
    CHECK(count_lines_with(adot, " -> ") == 8);
    CHECK(adot.find("g0 [shape=box, style=bold];") != std::string::npos);
    CHECK(adot == export_dot(a)); // byte-identical across runs
}

TEST_CASE("JSON export shape") {
    std::string js = export_graph_json(augment(graph_for(2, 2, 1, 1)));
    CHECK(js.find("\"augmented\": true") != std::string::npos);
    CHECK(js.find("\"schemaVersion\": 1") != std::string::npos);
    bool hasEdgeArray = js.find("[0,") != std::string::npos || js.find("[\n") != std::string::npos;
    CHECK(hasEdgeArray);
}
