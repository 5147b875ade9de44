#ifndef REESKIT_REES_GRAPH_HPP
#define REESKIT_REES_GRAPH_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "reeskit/generators.hpp"

namespace reeskit {

enum class GraphRow { Top, Bottom };

inline const char* to_string(GraphRow r) { return r == GraphRow::Top ? "top" : "bottom"; }

using Edge = std::pair<int, int>;
/// (source, middle, sink): the edges are exactly source->middle,
/// source->sink, middle->sink.
using Triangle = std::array<int, 3>;

/// The two-row directed acyclic graph whose nodes, edges and triangles index
/// the free modules of the resolution. Edges are sorted by (source, target),
/// triangles by sink.
struct ReesGraph {
    struct Node {
        int id;
        GraphRow row;
        GenKind kind;
    };

    std::vector<Node> nodes; // ascending id; the augmented graph starts at id 0
    std::vector<Edge> edges;
    std::vector<Triangle> triangles;
    bool augmented = false;

    bool has_edge(int j, int k) const;
    std::vector<int> in_sources(int k) const;
    int node_count() const { return static_cast<int>(nodes.size()); }
    /// Number of algorithm generators (node count minus the auxiliary node).
    int r() const { return augmented ? node_count() - 1 : node_count(); }
};

ReesGraph build_graph(const std::vector<GeneratorRecord>& gens);

/// Adds the auxiliary node g0 as leftmost bottom element, the edges (0->2)
/// and (1->2), and the triangle (1,2,3).
ReesGraph augment(const ReesGraph& g);

/// The unique h != j with (h->k) an edge, for an edge (j->k) of g.
int second_targeting_node(const ReesGraph& g, const Edge& edge);

/// Deterministic DOT rendering: top row ranked above the bottom row, lower
/// generators bold, node 0 drawn as a box.
std::string export_dot(const ReesGraph& g);
std::string export_graph_json(const ReesGraph& g);

} // namespace reeskit

#endif
