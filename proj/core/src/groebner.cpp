#include "reeskit/groebner.hpp"

#include <algorithm>

#include <json.hpp>

namespace reeskit {

using json = nlohmann::ordered_json;

GroebnerBasis groebner_basis(const IdealParams& params) {
    return groebner_basis(params, minimal_generators(params));
}

GroebnerBasis groebner_basis(const IdealParams& params, const GeneratorRun& run) {
    GroebnerBasis gb{params, {}};
    gb.elements.push_back(Binomial::normalized(
        Monomial::make(0, params.d2, 1, 0, 0), Monomial::make(params.d1, 0, 0, 0, 1)));
    if (gb.elements[0].lead() != Monomial::make(0, params.d2, 1, 0, 0))
        throw InternalError("lt(g0) is not T1^d2*X0");
    for (const auto& rec : run.records) gb.elements.push_back(rec.binomial);

    // Leading-term shape: every element past g0 leads with a T-coefficient
    // times a pure X1-power; only the last may carry both T0 and T1.
    for (int j = 1; j <= gb.r(); ++j) {
        const Monomial& lt = gb.lt(j);
        if (lt.exp(Var::X0) != 0 || lt.exp(Var::X2) != 0 || lt.exp(Var::X1) == 0)
            throw InternalError("lt(g" + std::to_string(j) + ") is not a pure X1-power times T");
        if (j < gb.r() && lt.exp(Var::T0) != 0 && lt.exp(Var::T1) != 0)
            throw InternalError("lt(g" + std::to_string(j) + ") carries both T0 and T1");
    }
    return gb;
}

int iota(const DeltaData& dd, Exp delta) {
    std::vector<int> all;
    all.reserve(dd.deltaMax1.size() + dd.deltaMin1.size());
    all.insert(all.end(), dd.deltaMax1.begin(), dd.deltaMax1.end());
    all.insert(all.end(), dd.deltaMin1.begin(), dd.deltaMin1.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    auto it = std::find(all.begin(), all.end(), static_cast<int>(delta));
    if (delta <= 1 || it == all.end())
        throw NotInDeltaError(std::to_string(delta) + " is not an X1-degree of a leading term");
    return 2 + static_cast<int>(it - all.begin()); // 1 is first in the set, so rank starts at 3
}

namespace {

bool contains(const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

// Quotients toward the chain after delta: one per opposite-set element
// strictly between delta and eps (divided by X1^delta), then the eps element
// with its whole T_k coefficient stripped.
std::vector<Monomial> chain_quotients(const GroebnerBasis& gb, const DeltaData& dd, Exp delta,
                                      const std::vector<int>& sameSet,
                                      const std::vector<int>& oppositeSet, Var stripVar) {
    int eps = dd.t;
    for (int g : sameSet)
        if (g > delta && g < eps) eps = g;
    std::vector<Monomial> out;
    Monomial xPow = Monomial::variable(Var::X1, delta);
    for (int z : oppositeSet)
        if (z > delta && z < eps)
            out.push_back(divide(gb.lt(iota(dd, z)), xPow));
    const Monomial& ltEps = gb.lt(iota(dd, eps));
    out.push_back(divide(ltEps, Monomial::variable(stripVar, ltEps.exp(stripVar)) * xPow));
    return out;
}

} // namespace

ColonIdealGens colon_ideal_gens(const GroebnerBasis& gb, const DeltaData& dd, int j) {
    if (j < 0 || j >= gb.r())
        throw IndexOutOfRangeError("M_j is defined for 0 <= j < r, got j=" + std::to_string(j));
    ColonIdealGens out{j, {}};
    if (j == 0) {
        out.generators.push_back(Monomial::variable(Var::X1));
        return out;
    }
    if (j == 1) {
        out.generators.push_back(
            Monomial::variable(Var::T1, gb.params.d2 - gb.params.u2));
        auto rest = chain_quotients(gb, dd, 1, dd.deltaMax1, dd.deltaMin1, Var::T0);
        out.generators.insert(out.generators.end(), rest.begin(), rest.end());
        return out;
    }
    if (j == 2) {
        out.generators = chain_quotients(gb, dd, 1, dd.deltaMin1, dd.deltaMax1, Var::T1);
        return out;
    }
    Exp delta = gb.lt(j).exp(Var::X1);
    if (contains(dd.deltaMin1, static_cast<int>(delta)) && delta != dd.t)
        out.generators = chain_quotients(gb, dd, delta, dd.deltaMin1, dd.deltaMax1, Var::T1);
    else if (contains(dd.deltaMax1, static_cast<int>(delta)) && delta != dd.t)
        out.generators = chain_quotients(gb, dd, delta, dd.deltaMax1, dd.deltaMin1, Var::T0);
    else
        throw InternalError("X1-degree of lt(g" + std::to_string(j) +
                            ") is not an interior running extremum");
    return out;
}

ColonIdealGens colon_ideal_gens_bruteforce(const GroebnerBasis& gb, int j) {
    if (j < 0 || j >= gb.r())
        throw IndexOutOfRangeError("M_j is defined for 0 <= j < r, got j=" + std::to_string(j));
    std::vector<Monomial> cand;
    for (int k = j + 1; k <= gb.r(); ++k)
        cand.push_back(divide(lcm(gb.lt(j), gb.lt(k)), gb.lt(j)));
    std::sort(cand.begin(), cand.end(), BlockLess{});
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<Monomial> kept;
    for (const auto& m : cand) {
        bool redundant = false;
        for (const auto& other : cand)
            if (other != m && other.divides(m)) { redundant = true; break; }
        if (!redundant) kept.push_back(m);
    }
    std::sort(kept.begin(), kept.end(), [](const Monomial& a, const Monomial& b) {
        if (a.exp(Var::X1) != b.exp(Var::X1)) return a.exp(Var::X1) < b.exp(Var::X1);
        return block_less(a, b);
    });
    return ColonIdealGens{j, kept};
}

std::string gb_to_text(const GroebnerBasis& gb) {
    std::string out;
    for (const auto& b : gb.elements) out += to_string(b) + '\n';
    return out;
}

std::string gb_to_json(const GroebnerBasis& gb) {
    json o;
    o["schemaVersion"] = 1;
    json params;
    params["d1"] = gb.params.d1;
    params["d2"] = gb.params.d2;
    params["u1"] = gb.params.u1;
    params["u2"] = gb.params.u2;
    o["params"] = params;
    json els = json::array();
    for (int j = 0; j < static_cast<int>(gb.elements.size()); ++j) {
        json e;
        e["index"] = j;
        e["lead"] = to_string(gb.lt(j));
        e["tail"] = to_string(gb.tt(j));
        e["leadExponents"] = gb.lt(j).exponents();
        e["tailExponents"] = gb.tt(j).exponents();
        els.push_back(e);
    }
    o["elements"] = els;
    return o.dump(2) + "\n";
}

std::string gb_to_cas(const GroebnerBasis& gb) {
    std::string out = "-- ambient ring: QQ[T0,T1,X0,X1,X2]\ngb = matrix{{";
    for (int j = 0; j < static_cast<int>(gb.elements.size()); ++j) {
        if (j) out += ", ";
        out += to_string(gb.elements[j]);
    }
    out += "}}\n";
    return out;
}

std::string colon_to_text(const GroebnerBasis& gb, const DeltaData& dd) {
    std::string out;
    for (int j = 0; j < gb.r(); ++j) {
        auto c = colon_ideal_gens(gb, dd, j);
        out += "M_" + std::to_string(j) + ":";
        for (const auto& m : c.generators) out += " " + to_string(m);
        out += '\n';
    }
    return out;
}

std::string colon_to_json(const GroebnerBasis& gb, const DeltaData& dd) {
    json o;
    o["schemaVersion"] = 1;
    json arr = json::array();
    for (int j = 0; j < gb.r(); ++j) {
        auto c = colon_ideal_gens(gb, dd, j);
        json e;
        e["j"] = j;
        json gens = json::array();
        json exps = json::array();
        for (const auto& m : c.generators) {
            gens.push_back(to_string(m));
            exps.push_back(m.exponents());
        }
        e["generators"] = gens;
        e["exponents"] = exps;
        arr.push_back(e);
    }
    o["colonIdeals"] = arr;
    return o.dump(2) + "\n";
}

} // namespace reeskit
