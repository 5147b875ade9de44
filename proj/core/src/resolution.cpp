#include "reeskit/resolution.hpp"

#include <algorithm>

#include <json.hpp>

namespace reeskit {

using json = nlohmann::ordered_json;

Monomial v_of(const GroebnerBasis& gb, int a, int b) {
    return divide(lcm(gb.lt(a), gb.lt(b)), gb.lt(a));
}

Monomial w_of(const GroebnerBasis& gb, int a, int b) {
    return gcd(gb.tt(a), gb.tt(b));
}

std::vector<FirstSyzygy> first_syzygies(const GroebnerBasis& gb, const ReesGraph& g) {
    if (!g.augmented) throw Error("first syzygies are indexed by the augmented graph");
    std::vector<FirstSyzygy> out;
    for (const auto& e : g.edges) {
        int j = e.first, k = e.second;
        int h = second_targeting_node(g, e);
        FirstSyzygy s{e, {}};
        s.entries.push_back({j, {+1, v_of(gb, j, k)}});
        s.entries.push_back({k, {-1, v_of(gb, k, j)}});
        s.entries.push_back({h, {+1, w_of(gb, j, k)}});
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<SecondSyzygy> second_syzygies(const GroebnerBasis& gb, const ReesGraph& g) {
    if (!g.augmented) throw Error("second syzygies are indexed by the augmented graph");
    std::vector<SecondSyzygy> out;
    for (const auto& t : g.triangles) {
        int j = t[0], k = t[1], l = t[2];
        int h = second_targeting_node(g, {j, k});
        SecondSyzygy s{t, {}};
        s.entries.push_back({{j, k}, {+1, v_of(gb, h, k)}});
        s.entries.push_back({{j, l}, {-1, v_of(gb, l, k)}});
        s.entries.push_back({{k, l}, {+1, v_of(gb, l, j)}});
        s.entries.push_back({{h, k}, {-1, w_of(gb, j, k)}});
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

std::string node_label(int j) { return "g" + std::to_string(j); }
std::string edge_label(const Edge& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}
std::string tri_label(const Triangle& t) {
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) +
           ")";
}

MonomialMatrix make_phi0(const GroebnerBasis& gb, bool includeG0) {
    MonomialMatrix m;
    m.rowLabels = {"R(I)"};
    int first = includeG0 ? 0 : 1;
    for (int j = first; j <= gb.r(); ++j) {
        int col = j - first;
        m.colLabels.push_back(node_label(j));
        m.cells[{0, col}] = {{+1, gb.lt(j)}, {-1, gb.tt(j)}};
    }
    return m;
}

MonomialMatrix make_phi1(const std::vector<FirstSyzygy>& syz, const std::vector<int>& nodeIds) {
    MonomialMatrix m;
    std::map<int, int> rowOf;
    for (int id : nodeIds) {
        rowOf[id] = m.rows();
        m.rowLabels.push_back(node_label(id));
    }
    for (int c = 0; c < static_cast<int>(syz.size()); ++c) {
        m.colLabels.push_back(edge_label(syz[c].edge));
        for (const auto& [node, sm] : syz[c].entries) {
            auto it = rowOf.find(node);
            if (it == rowOf.end())
                throw InternalError("first syzygy touches removed row " + node_label(node));
            m.cells[{it->second, c}].push_back(sm);
        }
    }
    return m;
}

MonomialMatrix make_phi2(const std::vector<SecondSyzygy>& syz, const std::vector<Edge>& edges) {
    MonomialMatrix m;
    std::map<Edge, int> rowOf;
    for (const auto& e : edges) {
        rowOf[e] = m.rows();
        m.rowLabels.push_back(edge_label(e));
    }
    for (int c = 0; c < static_cast<int>(syz.size()); ++c) {
        m.colLabels.push_back(tri_label(syz[c].tri));
        for (const auto& [edge, sm] : syz[c].entries) {
            auto it = rowOf.find(edge);
            if (it == rowOf.end())
                throw InternalError("second syzygy touches removed row " + edge_label(edge));
            m.cells[{it->second, c}].push_back(sm);
        }
    }
    return m;
}

} // namespace

FreeResolution build_resolution(const IdealParams& params) {
    auto run = minimal_generators(params);
    FreeResolution res{params, groebner_basis(params, run), augment(build_graph(run.records)),
                       {},     {},                          {},
                       {},     {},                          {},
                       false};
    res.firstSyz = first_syzygies(res.gb, res.graph);
    res.secondSyz = second_syzygies(res.gb, res.graph);

    std::vector<int> nodeIds;
    for (const auto& n : res.graph.nodes) nodeIds.push_back(n.id);
    res.phi0 = make_phi0(res.gb, true);
    res.phi1 = make_phi1(res.firstSyz, nodeIds);
    res.phi2 = make_phi2(res.secondSyz, res.graph.edges);
    int r = res.gb.r();
    res.ranks = {r + 1, 2 * r - 2, r - 2};
    if (res.phi0.cols() != res.ranks[0] || res.phi1.cols() != res.ranks[1] ||
        res.phi2.cols() != res.ranks[2])
        throw InternalError("resolution ranks disagree with the graph counts");
    return res;
}

FreeResolution minimalize(const FreeResolution& res) {
    if (res.minimal) throw AlreadyMinimalError("resolution is already minimal");
    FreeResolution out{res.params, res.gb, {}, {}, {}, {}, {}, {}, {}, true};

    const Edge e02{0, 2}, e12{1, 2};
    const Triangle t123{1, 2, 3};

    // The deleted first syzygies are the only ones with support on e_0, and
    // the deleted second syzygy is the only one with support on f(0,2) or
    // f(1,2); anything else would change a surviving entry.
    for (const auto& s : res.firstSyz) {
        bool deleted = s.edge == e02 || s.edge == e12;
        for (const auto& [node, sm] : s.entries)
            if (node == 0 && !deleted)
                throw InternalError("surviving first syzygy " + edge_label(s.edge) +
                                    " has support on e_0");
        if (!deleted) out.firstSyz.push_back(s);
    }
    for (const auto& s : res.secondSyz) {
        bool deleted = s.tri == t123;
        for (const auto& [edge, sm] : s.entries)
            if ((edge == e02 || edge == e12) && !deleted)
                throw InternalError("surviving second syzygy " + tri_label(s.tri) +
                                    " has support on a removed edge row");
        if (!deleted) out.secondSyz.push_back(s);
    }

    // Reduced graph: the plain graph the construction started from.
    out.graph = res.graph;
    out.graph.augmented = false;
    out.graph.nodes.erase(out.graph.nodes.begin());
    out.graph.edges.erase(std::remove_if(out.graph.edges.begin(), out.graph.edges.end(),
                                         [&](const Edge& e) { return e == e02 || e == e12; }),
                          out.graph.edges.end());
    out.graph.triangles.erase(
        std::remove(out.graph.triangles.begin(), out.graph.triangles.end(), t123),
        out.graph.triangles.end());

    std::vector<int> nodeIds;
    for (const auto& n : out.graph.nodes) nodeIds.push_back(n.id);
    out.phi0 = make_phi0(out.gb, false);
    out.phi1 = make_phi1(out.firstSyz, nodeIds);
    out.phi2 = make_phi2(out.secondSyz, out.graph.edges);
    int r = res.gb.r();
    out.ranks = {r, 2 * (r - 2), r - 3};
    if (out.phi1.cols() != out.ranks[1] || out.phi2.cols() != out.ranks[2])
        throw InternalError("minimal ranks disagree with the reduced graph counts");
    return out;
}

void poly_add(Polynomial& p, const Monomial& m, long long c) {
    auto [it, inserted] = p.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

void poly_add_binomial(Polynomial& p, const SignedMonomial& coeff, const Binomial& b) {
    poly_add(p, coeff.m * b.lead(), coeff.sign);
    poly_add(p, coeff.m * b.tail(), -coeff.sign);
}

ComplexReport verify_complex(const FreeResolution& res) {
    ComplexReport rep;
    int offset = res.minimal ? 1 : 0; // phi0 column c holds g_{c+offset}

    // phi0 * phi1: one polynomial per phi1 column.
    for (int c = 0; c < res.phi1.cols(); ++c) {
        Polynomial acc;
        for (int rw = 0; rw < res.phi1.rows(); ++rw) {
            auto it = res.phi1.cells.find({rw, c});
            if (it == res.phi1.cells.end()) continue;
            for (const auto& sm : it->second)
                poly_add_binomial(acc, sm, res.gb.elements[rw + offset]);
        }
        ++rep.entriesChecked;
        if (!acc.empty()) {
            rep.pass = false;
            rep.failures.push_back("phi0*phi1 column " + res.phi1.colLabels[c] +
                                   " does not vanish");
        }
    }

    // phi1 * phi2: one polynomial per (phi1 row, phi2 column).
    for (int c = 0; c < res.phi2.cols(); ++c) {
        std::vector<Polynomial> acc(res.phi1.rows());
        for (int e = 0; e < res.phi2.rows(); ++e) {
            auto it = res.phi2.cells.find({e, c});
            if (it == res.phi2.cells.end()) continue;
            for (const auto& smOuter : it->second) {
                for (int rw = 0; rw < res.phi1.rows(); ++rw) {
                    auto jt = res.phi1.cells.find({rw, e});
                    if (jt == res.phi1.cells.end()) continue;
                    for (const auto& smInner : jt->second)
                        poly_add(acc[rw], smInner.m * smOuter.m, smInner.sign * smOuter.sign);
                }
            }
        }
        for (int rw = 0; rw < res.phi1.rows(); ++rw) {
            ++rep.entriesChecked;
            if (!acc[rw].empty()) {
                rep.pass = false;
                rep.failures.push_back("phi1*phi2 entry (" + res.phi1.rowLabels[rw] + ", " +
                                       res.phi2.colLabels[c] + ") does not vanish");
            }
        }
    }
    return rep;
}

BettiNumbers betti_numbers(const IdealParams& params) {
    int r = static_cast<int>(minimal_generators(params).records.size());
    return BettiNumbers{r, 2 * (r - 2), r > 3 ? r - 3 : 0, r > 3 ? 2 : 1};
}

namespace {

std::string cell_to_string(const std::vector<SignedMonomial>& terms) {
    std::string out;
    for (const auto& sm : terms) {
        if (sm.sign < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        out += to_string(sm.m);
    }
    return out.empty() ? "0" : out;
}

std::string matrix_to_text(const std::string& name, const MonomialMatrix& m) {
    std::string out = name + " (" + std::to_string(m.rows()) + " x " + std::to_string(m.cols()) +
                      "):\n";
    out += ".";
    for (const auto& c : m.colLabels) out += '\t' + c;
    out += '\n';
    for (int rw = 0; rw < m.rows(); ++rw) {
        out += m.rowLabels[rw];
        for (int c = 0; c < m.cols(); ++c) {
            auto it = m.cells.find({rw, c});
            out += '\t';
            out += it == m.cells.end() ? "0" : cell_to_string(it->second);
        }
        out += '\n';
    }
    return out;
}

json matrix_to_json(const MonomialMatrix& m) {
    json o;
    o["rows"] = m.rowLabels;
    o["cols"] = m.colLabels;
    json entries = json::array();
    for (const auto& [pos, terms] : m.cells) {
        for (const auto& sm : terms) {
            json e;
            e["row"] = pos.first;
            e["col"] = pos.second;
            e["sign"] = sm.sign;
            e["monomial"] = to_string(sm.m);
            entries.push_back(e);
        }
    }
    o["entries"] = entries;
    return o;
}

std::string matrix_to_cas(const std::string& name, const MonomialMatrix& m) {
    if (m.cols() == 0)
        return name + " = 0 -- zero map (" + std::to_string(m.rows()) + " x 0)\n";
    std::string out = name + " = matrix{";
    for (int rw = 0; rw < m.rows(); ++rw) {
        if (rw) out += ",";
        out += "{";
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out += ", ";
            auto it = m.cells.find({rw, c});
            out += it == m.cells.end() ? "0" : cell_to_string(it->second);
        }
        out += "}";
    }
    out += "}\n";
    return out;
}

} // namespace

std::string resolution_to_text(const FreeResolution& res) {
    std::string out = std::string(res.minimal ? "minimal" : "non-minimal") + " free resolution, ranks (" +
                      std::to_string(res.ranks[0]) + ", " + std::to_string(res.ranks[1]) + ", " +
                      std::to_string(res.ranks[2]) + ")\n";
    out += matrix_to_text("phi0", res.phi0);
    out += matrix_to_text("phi1", res.phi1);
    out += matrix_to_text("phi2", res.phi2);
    return out;
}

std::string resolution_to_json(const FreeResolution& res) {
    json o;
    o["schemaVersion"] = 1;
    json params;
    params["d1"] = res.params.d1;
    params["d2"] = res.params.d2;
    params["u1"] = res.params.u1;
    params["u2"] = res.params.u2;
    o["params"] = params;
    o["minimal"] = res.minimal;
    o["ranks"] = res.ranks;
    o["phi0"] = matrix_to_json(res.phi0);
    o["phi1"] = matrix_to_json(res.phi1);
    o["phi2"] = matrix_to_json(res.phi2);
    return o.dump(2) + "\n";
}

std::string resolution_to_cas(const FreeResolution& res) {
    std::string out = "-- ambient ring: QQ[T0,T1,X0,X1,X2]\n";
    out += matrix_to_cas("phi0", res.phi0);
    out += matrix_to_cas("phi1", res.phi1);
    out += matrix_to_cas("phi2", res.phi2);
    return out;
}

} // namespace reeskit
