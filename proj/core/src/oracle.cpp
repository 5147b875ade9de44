#include "reeskit/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

namespace reeskit {

using json = nlohmann::ordered_json;

DegreeLayer degree_layer(const IdealParams& p, Exp t) {
    if (t < 1) throw Error("degree_layer requires t >= 1");
    std::map<std::pair<Exp, Exp>, std::vector<std::array<Exp, 3>>> byImage;
    for (Exp a = 0; a <= t; ++a) {
        for (Exp b = 0; b <= t - a; ++b) {
            Exp c = t - a - b;
            Exp e0 = checked_add(checked_mul(p.d1, a), checked_mul(p.u1, b));
            Exp e1 = checked_add(checked_mul(p.u2, b), checked_mul(p.d2, c));
            byImage[{e0, e1}].push_back({a, b, c});
        }
    }
    DegreeLayer layer{t, {}};
    for (auto& [key, pres] : byImage) {
        std::sort(pres.begin(), pres.end(),
                  [](const auto& x, const auto& y) { return x[1] > y[1]; });
        layer.products.push_back({Monomial::make(key.first, key.second, 0, 0, 0), pres});
    }
    // Lexicographic with T0 ahead of T1, largest first: psi(X0^t) leads,
    // psi(X2^t) closes.
    std::sort(layer.products.begin(), layer.products.end(),
              [](const DegreeLayer::Product& x, const DegreeLayer::Product& y) {
                  if (x.image.exp(Var::T0) != y.image.exp(Var::T0))
                      return x.image.exp(Var::T0) > y.image.exp(Var::T0);
                  return x.image.exp(Var::T1) > y.image.exp(Var::T1);
              });
    return layer;
}

namespace {

Monomial x_monomial(const std::array<Exp, 3>& pre) {
    return Monomial::make(0, 0, pre[0], pre[1], pre[2]);
}

const std::array<Exp, 3>& pick_preimage(const DegreeLayer::Product& prod, PreimagePolicy policy,
                                         Exp t) {
    if (!prod.unique() && policy == PreimagePolicy::Strict)
        throw NonUniquePreimageError("product " + to_string(prod.image) + " of layer " +
                                     std::to_string(t) + " has " +
                                     std::to_string(prod.preimages.size()) + " preimages");
    return prod.preimages.front(); // X1-maximal triple first
}

} // namespace

std::vector<ConsecutiveRelation> consecutive_relations(const IdealParams& p, Exp t,
                                                       PreimagePolicy policy) {
    DegreeLayer layer = degree_layer(p, t);
    std::vector<ConsecutiveRelation> out;
    for (std::size_t i = 0; i + 1 < layer.products.size(); ++i) {
        const auto& gi = layer.products[i];
        const auto& gj = layer.products[i + 1];
        Monomial L = lcm(gi.image, gj.image);
        Monomial s = divide(L, gi.image);
        Monomial sPrime = divide(L, gj.image);
        Monomial left = s * x_monomial(pick_preimage(gi, policy, t));
        Monomial right = sPrime * x_monomial(pick_preimage(gj, policy, t));
        out.push_back({t, static_cast<int>(i) + 1, s, sPrime,
                       Binomial::normalized(left, right)});
    }
    return out;
}

Monomial normal_form(Monomial m, const std::vector<Binomial>& basis) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& b : basis) {
            if (b.lead().divides(m)) {
                m = divide(m, b.lead()) * b.tail();
                changed = true;
                break;
            }
        }
    }
    return m;
}

std::vector<Binomial> buchberger_binomial(std::vector<Binomial> basis) {
    if (basis.empty()) throw Error("buchberger_binomial requires a nonempty basis");
    for (const auto& b : basis)
        if (cmp_block_order(b.lead(), b.tail()) != std::strong_ordering::greater)
            throw NonBinomialRemainderError("basis element " + to_string(b) +
                                            " is not normalized under the block order");

    std::vector<std::pair<int, int>> queue;
    auto enqueue_against = [&](int n) {
        for (int k = 0; k < n; ++k) queue.emplace_back(k, n);
    };
    for (int n = 1; n < static_cast<int>(basis.size()); ++n) enqueue_against(n);

    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        auto [i, j] = queue[qi];
        if (coprime(basis[i].lead(), basis[j].lead())) continue;
        Monomial L = lcm(basis[i].lead(), basis[j].lead());
        Monomial u = divide(L, basis[i].lead()) * basis[i].tail();
        Monomial v = divide(L, basis[j].lead()) * basis[j].tail();
        if (u == v) continue;
        Monomial nu = normal_form(u, basis);
        Monomial nv = normal_form(v, basis);
        if (nu == nv) continue;
        enqueue_against(static_cast<int>(basis.size()));
        basis.push_back(Binomial::normalized(nu, nv));
    }
    return basis;
}

bool ideal_membership(const Binomial& f, const std::vector<Binomial>& basis) {
    if (basis.empty()) return false;
    auto gb = buchberger_binomial(basis);
    return normal_form(f.lead(), gb) == normal_form(f.tail(), gb);
}

std::vector<Binomial> brute_force_minimal_generators(const IdealParams& p, Exp tBound) {
    if (tBound < 1) throw Error("brute_force_minimal_generators requires tBound >= 1");
    std::set<Binomial> seen;
    std::vector<Binomial> kept;
    for (Exp t = 1; t <= tBound; ++t) {
        DegreeLayer dl = degree_layer(p, t);
        std::vector<Binomial> layer;
        auto consider = [&](const Monomial& left, const Monomial& right) {
            if (left == right || !coprime(left, right)) return;
            Binomial b = Binomial::normalized(left, right);
            if (!is_kernel_binomial(b, p))
                throw InternalError("layer candidate " + to_string(b) +
                                    " is not a kernel binomial");
            if (seen.insert(b).second) layer.push_back(b);
        };
        // Coprime relations between consecutive products, over every
        // preimage choice of both sides.
        for (std::size_t i = 0; i + 1 < dl.products.size(); ++i) {
            const auto& gi = dl.products[i];
            const auto& gj = dl.products[i + 1];
            Monomial L = lcm(gi.image, gj.image);
            Monomial s = divide(L, gi.image);
            Monomial sPrime = divide(L, gj.image);
            for (const auto& pa : gi.preimages)
                for (const auto& pb : gj.preimages)
                    consider(s * x_monomial(pa), sPrime * x_monomial(pb));
        }
        // Cofactor-free relations between two preimages of one product
        // (psi(X1^t) = psi(X0^a X2^c)); consecutive pairs never see these.
        for (const auto& prod : dl.products)
            for (std::size_t a = 0; a < prod.preimages.size(); ++a)
                for (std::size_t b = a + 1; b < prod.preimages.size(); ++b)
                    consider(x_monomial(prod.preimages[a]), x_monomial(prod.preimages[b]));

        std::vector<char> rejected(layer.size(), 0);
        std::vector<Binomial> keptHere;
        for (std::size_t i = 0; i < layer.size(); ++i) {
            std::vector<Binomial> basis = kept;
            for (std::size_t m = 0; m < layer.size(); ++m)
                if (m != i && !rejected[m]) basis.push_back(layer[m]);
            if (!basis.empty() && ideal_membership(layer[i], basis))
                rejected[i] = 1;
            else
                keptHere.push_back(layer[i]);
        }
        kept.insert(kept.end(), keptHere.begin(), keptHere.end());
    }
    return kept;
}

GbReport verify_gb_spolys(const GroebnerBasis& gb) { return verify_gb_spolys(gb.elements); }

GbReport verify_gb_spolys(const std::vector<Binomial>& basis) {
    GbReport rep;
    int n = static_cast<int>(basis.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            ++rep.pairs;
            Monomial L = lcm(basis[i].lead(), basis[j].lead());
            Monomial u = divide(L, basis[i].lead()) * basis[i].tail();
            Monomial v = divide(L, basis[j].lead()) * basis[j].tail();
            if (u == v) continue;
            if (normal_form(u, basis) != normal_form(v, basis)) {
                rep.pass = false;
                rep.failures.push_back("S-polynomial of (" + std::to_string(i) + "," +
                                       std::to_string(j) + ") does not reduce to zero");
            }
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && basis[i].lead().divides(basis[j].lead())) {
                rep.pass = false;
                rep.failures.push_back("lt(" + std::to_string(i) + ") divides lt(" +
                                       std::to_string(j) + ")");
            }
    return rep;
}

bool verify_syzygy_identity(const FirstSyzygy& s, const GroebnerBasis& gb) {
    Polynomial acc;
    for (const auto& [node, sm] : s.entries) {
        if (node < 0 || node > gb.r())
            throw UnknownLabelError("first syzygy references e_" + std::to_string(node));
        poly_add_binomial(acc, sm, gb.elements[node]);
    }
    return acc.empty();
}

bool verify_syzygy_identity(const SecondSyzygy& s, const std::vector<FirstSyzygy>& firstSyz) {
    std::map<Edge, const FirstSyzygy*> byEdge;
    for (const auto& f : firstSyz) byEdge[f.edge] = &f;
    std::map<int, Polynomial> acc;
    for (const auto& [edge, sm] : s.entries) {
        auto it = byEdge.find(edge);
        if (it == byEdge.end())
            throw UnknownLabelError("second syzygy references unknown edge (" +
                                    std::to_string(edge.first) + "," +
                                    std::to_string(edge.second) + ")");
        for (const auto& [node, inner] : it->second->entries)
            poly_add(acc[node], sm.m * inner.m, sm.sign * inner.sign);
    }
    for (const auto& [node, poly] : acc)
        if (!poly.empty()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Full per-instance verification battery.

namespace {

struct Checker {
    CheckResult result;
    explicit Checker(std::string name) : result{std::move(name), true, ""} {}
    void expect(bool cond, const std::string& msg) {
        if (!cond) {
            result.pass = false;
            if (!result.detail.empty()) result.detail += "; ";
            if (result.detail.size() < 500) result.detail += msg;
        }
    }
};

template <typename F>
void run_check(InstanceReport& rep, const std::string& name, F&& body) {
    Checker c(name);
    try {
        body(c);
    } catch (const std::exception& e) {
        c.result.pass = false;
        c.result.detail = std::string("exception: ") + e.what();
    }
    rep.pass = rep.pass && c.result.pass;
    rep.checks.push_back(std::move(c.result));
}

bool contains(const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

bool contains_mon(const std::vector<Monomial>& v, const Monomial& m) {
    return std::find(v.begin(), v.end(), m) != v.end();
}

// Lemma-level facts about one extremum-set pair over [t].
void check_delta_pair(Checker& c, const std::vector<Exp>& a, const std::vector<int>& dmax,
                      const std::vector<int>& dmin, const std::string& tag) {
    std::vector<int> inter;
    std::set_intersection(dmax.begin(), dmax.end(), dmin.begin(), dmin.end(),
                          std::back_inserter(inter));
    c.expect(inter == std::vector<int>{1}, tag + ": max/min sets intersect beyond {1}");
    for (int dlt : dmin)
        for (int eps : dmax) {
            c.expect(a[dlt - 1] <= a[eps - 1], tag + ": a[min] > a[max]");
            if (dlt != eps) c.expect(a[dlt - 1] < a[eps - 1], tag + ": a[min] == a[max]");
        }
    auto consecutive_rule = [&](const std::vector<int>& same, const std::vector<int>& opposite) {
        for (std::size_t i = 0; i + 1 < same.size(); ++i) {
            int dlt = same[i], eps = same[i + 1];
            c.expect(contains(opposite, eps - dlt),
                     tag + ": difference of consecutive indices leaves the opposite set");
            for (int z : opposite)
                c.expect(!(eps - dlt < z && z < eps),
                         tag + ": opposite-set element strictly between eps-delta and eps");
        }
    };
    consecutive_rule(dmin, dmax);
    consecutive_rule(dmax, dmin);
}

} // namespace

InstanceReport verify_instance(const IdealParams& p, const VerifyOptions& opt) {
    InstanceReport rep{p, true, {}};

    GeneratorRun run = minimal_generators(p);
    DeltaData dd = delta_data(p);
    const int r = static_cast<int>(run.records.size());
    ReesGraph plain = build_graph(run.records);
    ReesGraph aug = augment(plain);

    run_check(rep, "graph_counts", [&](Checker& c) {
        c.expect(plain.node_count() == r, "plain node count");
        c.expect(static_cast<int>(plain.edges.size()) == 2 * (r - 2), "plain edge count");
        c.expect(static_cast<int>(plain.triangles.size()) == (r > 3 ? r - 3 : 0),
                 "plain triangle count");
        c.expect(aug.node_count() == r + 1, "augmented node count");
        c.expect(static_cast<int>(aug.edges.size()) == 2 * r - 2, "augmented edge count");
        c.expect(static_cast<int>(aug.triangles.size()) == r - 2, "augmented triangle count");
        for (const auto& e : plain.edges) c.expect(e.first < e.second, "plain acyclicity");
        for (const auto& e : aug.edges) c.expect(e.first < e.second, "augmented acyclicity");
        for (const auto& n : plain.nodes)
            if (n.id >= 3)
                c.expect(plain.in_sources(n.id).size() == 2, "plain in-degree of node >= 3");
        for (const auto& n : aug.nodes)
            if (n.id >= 2)
                c.expect(aug.in_sources(n.id).size() == 2, "augmented in-degree of node >= 2");
        for (const ReesGraph* g : {&plain, &aug}) {
            for (const auto& t : g->triangles) {
                c.expect(g->has_edge(t[0], t[1]) && g->has_edge(t[0], t[2]) &&
                             g->has_edge(t[1], t[2]),
                         "triangle edges present");
                auto ins = g->in_sources(t[2]);
                c.expect(ins.size() == 2 && contains(ins, t[0]) && contains(ins, t[1]),
                         "triangle sink in-edges are exactly the triangle's");
            }
        }
        int plainHigh = 0, augHigh = 0;
        for (const auto& n : plain.nodes) plainHigh += n.id >= 4;
        for (const auto& n : aug.nodes) augHigh += n.id >= 3;
        c.expect(static_cast<int>(plain.triangles.size()) == plainHigh,
                 "plain triangle count vs nodes with index >= 4");
        c.expect(static_cast<int>(aug.triangles.size()) == augHigh,
                 "augmented triangle count vs nodes with index >= 3");
    });

    run_check(rep, "betti", [&](Checker& c) {
        BettiNumbers b = betti_numbers(p);
        c.expect(b.b0 == r, "beta0 == r");
        c.expect(b.b1 == static_cast<int>(plain.edges.size()), "beta1 == plain edge count");
        c.expect(b.b2 == static_cast<int>(plain.triangles.size()),
                 "beta2 == plain triangle count");
        c.expect(b.pd == (r > 3 ? 2 : 1), "projective dimension");
    });

    if (opt.countsOnly) return rep;

    run_check(rep, "delta_lemmas", [&](Checker& c) {
        check_delta_pair(c, dd.a1, dd.deltaMax1, dd.deltaMin1, "seq1");
        check_delta_pair(c, dd.a2, dd.deltaMax2, dd.deltaMin2, "seq2");
        for (int j = 1; j <= dd.t && j < dd.iStop; ++j) {
            c.expect(contains(dd.deltaMax1, j) == contains(dd.deltaMin2, j),
                     "complementarity max1/min2 at " + std::to_string(j));
            c.expect(contains(dd.deltaMin1, j) == contains(dd.deltaMax2, j),
                     "complementarity min1/max2 at " + std::to_string(j));
            c.expect(dd.b1[j - 1] + dd.b2[j - 1] == j - 1,
                     "b1+b2 != j-1 at " + std::to_string(j));
        }
        std::vector<int> union1, union2, steps{1};
        std::set_union(dd.deltaMax1.begin(), dd.deltaMax1.end(), dd.deltaMin1.begin(),
                       dd.deltaMin1.end(), std::back_inserter(union1));
        std::set_union(dd.deltaMax2.begin(), dd.deltaMax2.end(), dd.deltaMin2.begin(),
                       dd.deltaMin2.end(), std::back_inserter(union2));
        for (const auto& rec : run.records)
            if (rec.step > 1) steps.push_back(rec.step);
        c.expect(union1 == union2, "X1-degree sets of the two sequences differ");
        c.expect(union1 == steps, "X1-degree set differs from the emission steps");
    });

    run_check(rep, "skip_indices", [&](Checker& c) {
        std::vector<int> steps{1};
        for (const auto& rec : run.records)
            if (rec.step > 1) steps.push_back(rec.step);
        c.expect(skip_optimized_indices(p) == steps, "jump recurrence != emission steps");
    });

    if (p.d1 == p.d2 && p.u2 == p.d1 - p.u1) {
        run_check(rep, "plane_curve_equiv", [&](Checker& c) {
            PlaneCurveRun pc = minimal_generators_plane_curve(p.d1, p.u1);
            c.expect(pc.records.size() == run.records.size(), "generator counts differ");
            for (std::size_t i = 0; i < std::min(pc.records.size(), run.records.size()); ++i) {
                c.expect(pc.records[i].binomial == run.records[i].binomial,
                         "binomial " + std::to_string(i + 1) + " differs");
                c.expect(pc.records[i].kind == run.records[i].kind,
                         "kind " + std::to_string(i + 1) + " differs");
            }
        });
    }

    run_check(rep, "generator_invariants", [&](Checker& c) {
        for (const auto& rec : run.records) {
            c.expect(is_kernel_binomial(rec.binomial, p),
                     "generator " + std::to_string(rec.index) + " is not a kernel binomial");
            c.expect(coprime(rec.binomial.lead(), rec.binomial.tail()),
                     "generator " + std::to_string(rec.index) + " has a common factor");
            const Monomial& lt = rec.binomial.lead();
            c.expect(lt.exp(Var::X0) == 0 && lt.exp(Var::X2) == 0 &&
                         lt.exp(Var::X1) == rec.step,
                     "lt of generator " + std::to_string(rec.index) +
                         " is not a pure X1-power of its step");
            if (rec.index < r)
                c.expect(lt.exp(Var::T0) == 0 || lt.exp(Var::T1) == 0,
                         "non-final lt carries both T0 and T1");
            c.expect(lt.exp(Var::T0) < p.d1 && lt.exp(Var::T1) < p.d2,
                     "lt T-exponent out of range");
        }
        for (std::size_t i = 0; i < run.records.size(); ++i)
            for (std::size_t j = i + 1; j < run.records.size(); ++j)
                c.expect(!(run.records[i].binomial == run.records[j].binomial),
                         "duplicate generators");
    });

    const Exp tBound = opt.tBound > 0 ? opt.tBound : dd.t + 1;

    run_check(rep, "oracle_equivalence", [&](Checker& c) {
        auto brute = brute_force_minimal_generators(p, tBound);
        std::set<Binomial> bruteSet(brute.begin(), brute.end());
        std::set<Binomial> algSet;
        for (const auto& rec : run.records) algSet.insert(rec.binomial);
        c.expect(bruteSet == algSet, "brute-force minimal generators differ (brute " +
                                         std::to_string(bruteSet.size()) + ", algorithm " +
                                         std::to_string(algSet.size()) + ")");
    });

    run_check(rep, "stopping_bound", [&](Checker& c) {
        auto brute = brute_force_minimal_generators(p, tBound);
        for (const auto& b : brute)
            c.expect(b.lead().x_degree() <= dd.t,
                     "kept candidate beyond the stopping layer t=" + std::to_string(dd.t));
    });

    run_check(rep, "preimage_uniqueness", [&](Checker& c) {
        PurePowerRelation ppr = pure_power_relation(p);
        for (Exp t = 1; t <= tBound && t < ppr.k; ++t)
            for (const auto& prod : degree_layer(p, t).products)
                c.expect(prod.unique(),
                         "non-unique preimage below k at layer " + std::to_string(t));
        // At t = k a second preimage of psi(X1^k) exists exactly when the
        // pure-power relation preserves the X-degree (k1 + k2 = k).
        if (ppr.k <= tBound) {
            bool collision = false;
            for (const auto& prod : degree_layer(p, ppr.k).products)
                collision = collision || !prod.unique();
            c.expect(collision == (ppr.k1 + ppr.k2 == ppr.k),
                     "collision at t=k disagrees with k1+k2==k");
        }
    });

    run_check(rep, "upper_lower_iff", [&](Checker& c) {
        for (int j = 1; j < dd.t; ++j) {
            DegreeLayer layer = degree_layer(p, j);
            int idx = -1;
            for (std::size_t i = 0; i < layer.products.size(); ++i)
                if (layer.products[i].preimages.front() ==
                    std::array<Exp, 3>{0, static_cast<Exp>(j), 0})
                    idx = static_cast<int>(i);
            c.expect(idx > 0 && idx + 1 < static_cast<int>(layer.products.size()),
                     "pure X1-power is extreme in layer " + std::to_string(j));
            if (idx <= 0 || idx + 1 >= static_cast<int>(layer.products.size())) continue;
            auto rels = consecutive_relations(p, j, PreimagePolicy::PurePower);
            bool upperExists =
                coprime(rels[idx - 1].binomial.lead(), rels[idx - 1].binomial.tail());
            bool lowerExists = coprime(rels[idx].binomial.lead(), rels[idx].binomial.tail());
            c.expect(upperExists == (contains(dd.deltaMax1, j) && contains(dd.deltaMin2, j)),
                     "upper-side coprime relation iff max1/min2 at " + std::to_string(j));
            c.expect(lowerExists == (contains(dd.deltaMin1, j) && contains(dd.deltaMax2, j)),
                     "lower-side coprime relation iff min1/max2 at " + std::to_string(j));
        }
    });

    GroebnerBasis gb = groebner_basis(p, run);

    run_check(rep, "gb_spolys", [&](Checker& c) {
        GbReport g = verify_gb_spolys(gb);
        c.expect(g.pass, g.failures.empty() ? "" : g.failures.front());
        c.expect(g.pairs == (r + 1) * r / 2, "pair count");
    });

    run_check(rep, "gb_negative_control", [&](Checker& c) {
        std::vector<Binomial> noG0(gb.elements.begin() + 1, gb.elements.end());
        c.expect(!verify_gb_spolys(noG0).pass,
                 "the basis without g0 certifies as a Groebner basis");
    });

    run_check(rep, "colon_ideals", [&](Checker& c) {
        for (int j = 0; j < gb.r(); ++j) {
            auto closed = colon_ideal_gens(gb, dd, j);
            auto brute = colon_ideal_gens_bruteforce(gb, j);
            std::set<Monomial, BlockLess> a(closed.generators.begin(), closed.generators.end());
            std::set<Monomial, BlockLess> b(brute.generators.begin(), brute.generators.end());
            c.expect(a == b, "G(M_" + std::to_string(j) + ") closed form differs from brute force");
            for (std::size_t i = 0; i + 1 < closed.generators.size(); ++i)
                c.expect(closed.generators[i].exp(Var::X1) <
                             closed.generators[i + 1].exp(Var::X1),
                         "G(M_" + std::to_string(j) + ") X1-degrees not strictly increasing");
            for (const auto& m : closed.generators)
                c.expect(m.exp(Var::X0) == 0 && m.exp(Var::X2) == 0,
                         "G(M_" + std::to_string(j) + ") element has X0/X2 factors");
        }
        // Edge correspondence: (j->k) is an edge iff v(j,k) generates M_j.
        for (int j = 0; j < gb.r(); ++j) {
            auto closed = colon_ideal_gens(gb, dd, j);
            for (int k = j + 1; k <= gb.r(); ++k) {
                bool quotientInSet = contains_mon(closed.generators, v_of(gb, j, k));
                c.expect(aug.has_edge(j, k) == quotientInSet,
                         "edge (" + std::to_string(j) + "," + std::to_string(k) +
                             ") vs colon membership");
            }
        }
    });

    auto res = build_resolution(p);

    run_check(rep, "syzygy_identities", [&](Checker& c) {
        c.expect(static_cast<int>(res.firstSyz.size()) == 2 * r - 2, "|S1| != 2r-2");
        c.expect(static_cast<int>(res.secondSyz.size()) == r - 2, "|S2| != r-2");
        for (const auto& s : res.firstSyz) {
            c.expect(verify_syzygy_identity(s, gb),
                     "first syzygy " + std::to_string(s.edge.first) + "->" +
                         std::to_string(s.edge.second) + " does not vanish");
            c.expect(s.entries.size() == 3, "first syzygy entry count");
            for (const auto& [node, sm] : s.entries)
                if (sm.m.is_one())
                    c.expect(s.edge == Edge{1, 2},
                             "constant coefficient outside the edge (1,2)");
        }
        for (const auto& s : res.secondSyz) {
            c.expect(verify_syzygy_identity(s, res.firstSyz),
                     "second syzygy does not vanish against S1");
            c.expect(s.entries.size() == 4, "second syzygy entry count");
            for (const auto& [edge, sm] : s.entries)
                if (sm.m.is_one())
                    c.expect(s.tri == Triangle{1, 2, 3},
                             "constant coefficient outside the triangle (1,2,3)");
            const Monomial& leadEntry = s.entries.front().second.m;
            c.expect(leadEntry.exp(Var::T0) == 0 && leadEntry.exp(Var::T1) == 0 &&
                         leadEntry.exp(Var::X0) == 0 && leadEntry.exp(Var::X2) == 0 &&
                         leadEntry.exp(Var::X1) > 0,
                     "leading entry v(h,k) is not a pure X1-power");
        }
    });

    run_check(rep, "resolution_complex", [&](Checker& c) {
        c.expect(res.ranks == std::array<int, 3>{r + 1, 2 * r - 2, r - 2},
                 "non-minimal ranks");
        c.expect(verify_complex(res).pass, "non-minimal complex does not vanish");
        auto mini = minimalize(res);
        c.expect(mini.ranks == std::array<int, 3>{r, 2 * (r - 2), r - 3}, "minimal ranks");
        c.expect(verify_complex(mini).pass, "minimal complex does not vanish");
        for (const MonomialMatrix* m : {&mini.phi1, &mini.phi2})
            for (const auto& [pos, terms] : m->cells)
                for (const auto& sm : terms)
                    c.expect(!sm.m.is_one(), "constant entry in a minimal differential");
        int constants = 0;
        for (const auto& [pos, terms] : res.phi1.cells)
            for (const auto& sm : terms) constants += sm.m.is_one();
        for (const auto& [pos, terms] : res.phi2.cells)
            for (const auto& sm : terms) constants += sm.m.is_one();
        c.expect(constants == 2, "the non-minimal differentials carry exactly two constants");
    });

    return rep;
}

std::string report_to_text(const InstanceReport& rep) {
    std::string out = "params (" + std::to_string(rep.params.d1) + "," +
                      std::to_string(rep.params.d2) + "," + std::to_string(rep.params.u1) + "," +
                      std::to_string(rep.params.u2) + ")\n";
    for (const auto& c : rep.checks) {
        out += std::string(c.pass ? "  [PASS] " : "  [FAIL] ") + c.name;
        if (!c.detail.empty()) out += ": " + c.detail;
        out += '\n';
    }
    out += rep.pass ? "PASS\n" : "FAIL\n";
    return out;
}

std::string report_to_json(const InstanceReport& rep) {
    json o;
    o["schemaVersion"] = 1;
    json params;
    params["d1"] = rep.params.d1;
    params["d2"] = rep.params.d2;
    params["u1"] = rep.params.u1;
    params["u2"] = rep.params.u2;
    o["params"] = params;
    o["pass"] = rep.pass;
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["detail"] = c.detail;
        checks.push_back(e);
    }
    o["checks"] = checks;
    return o.dump(2) + "\n";
}

} // namespace reeskit
