#include "reeskit/generators.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

namespace reeskit {

using json = nlohmann::ordered_json;

IdealParams normalize_input(const Monomial& m1, const Monomial& m2, const Monomial& m3) {
    const Monomial* ms[3] = {&m1, &m2, &m3};
    for (const Monomial* m : ms)
        if (m->x_degree() != 0)
            throw NotTriGeneratedShapeError("ideal generators must live in K[T0,T1], got " +
                                            to_string(*m));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && ms[i]->divides(*ms[j]))
                throw NotMinimallyGeneratedError(to_string(*ms[i]) + " divides " +
                                                 to_string(*ms[j]));

    Monomial h = gcd(gcd(m1, m2), m3);
    std::array<std::pair<Exp, Exp>, 3> red;
    for (int i = 0; i < 3; ++i) {
        Monomial q = divide(*ms[i], h);
        red[i] = {q.exp(Var::T0), q.exp(Var::T1)};
    }
    std::sort(red.begin(), red.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    // With minimal generation the reduced extremes are pure powers; the
    // checks below guard corrupted input.
    if (red[0].second != 0 || red[2].first != 0)
        throw NotTriGeneratedShapeError("reduced extreme generators are not pure powers");
    Exp d1 = red[0].first, d2 = red[2].second;
    Exp u1 = red[1].first, u2 = red[1].second;
    if (!(0 < u1 && u1 < d1 && 0 < u2 && u2 < d2))
        throw NotTriGeneratedShapeError("reduced middle generator is not strictly mixed");
    return IdealParams(d1, d2, u1, u2, h.exp(Var::T0), h.exp(Var::T1));
}

namespace {

Exp gcd_exp(Exp a, Exp b) { return std::gcd(a, b); }

struct Periods {
    Exp p1, p2; // d_k / gcd(d_k, u_k)
};

Periods periods(const IdealParams& p) {
    return {p.d1 / gcd_exp(p.d1, p.u1), p.d2 / gcd_exp(p.d2, p.u2)};
}

} // namespace

DeltaData delta_data(const IdealParams& p) {
    DeltaData dd;
    Periods per = periods(p);
    dd.q = static_cast<int>(std::min(per.p1, per.p2));

    // iStop is the smallest i > 1 with equal floor-differences; it always
    // fires by i = lcm(p1, p2) where both sequences return to zero.
    Exp bound = checked_mul(per.p1 / gcd_exp(per.p1, per.p2), per.p2);
    Exp prevB1 = 0, prevB2 = 0;
    dd.iStop = 0;
    for (Exp i = 1; i <= bound; ++i) {
        Exp b1 = checked_mul(p.u1, i) / p.d1;
        Exp b2 = checked_mul(p.u2, i) / p.d2;
        if (i > 1 && b1 - prevB1 == b2 - prevB2) {
            dd.iStop = static_cast<int>(i);
            break;
        }
        prevB1 = b1;
        prevB2 = b2;
    }
    if (dd.iStop == 0)
        throw InternalError("floor-difference condition did not fire within one full period");

    dd.t = std::min(dd.iStop, dd.q);
    Exp max1 = -1, min1 = p.d1, max2 = -1, min2 = p.d2;
    for (int i = 1; i <= dd.t; ++i) {
        Exp a1 = checked_mul(p.u1, i) % p.d1;
        Exp a2 = checked_mul(p.u2, i) % p.d2;
        dd.a1.push_back(a1);
        dd.a2.push_back(a2);
        dd.b1.push_back(checked_mul(p.u1, i) / p.d1);
        dd.b2.push_back(checked_mul(p.u2, i) / p.d2);
        if (a1 >= max1) { dd.deltaMax1.push_back(i); max1 = a1; }
        if (a1 <= min1) { dd.deltaMin1.push_back(i); min1 = a1; }
        if (a2 >= max2) { dd.deltaMax2.push_back(i); max2 = a2; }
        if (a2 <= min2) { dd.deltaMin2.push_back(i); min2 = a2; }
    }
    return dd;
}

namespace {

Monomial mono(Exp t0, Exp t1, Exp x0, Exp x1, Exp x2) {
    return Monomial::make(t0, t1, x0, x1, x2);
}

void emit(std::vector<GeneratorRecord>& records, TraceRow& row, GenKind kind, int step,
          const Monomial& first, const Monomial& second) {
    GeneratorRecord rec{static_cast<int>(records.size()) + 1,
                        step,
                        kind,
                        first,
                        second,
                        Binomial::normalized(first, second),
                        {}};
    row.emitted.push_back(to_string(first) + "-" + to_string(second));
    records.push_back(std::move(rec));
}

} // namespace

GeneratorRun minimal_generators(const IdealParams& p) {
    GeneratorRun run{p, {}, {}};
    const Exp d1 = p.d1, d2 = p.d2, u1 = p.u1, u2 = p.u2;

    Exp a1 = u1, a2 = u2, b1 = 0, b2 = 0, prevB1 = 0, prevB2 = 0;
    Exp max1 = a1, max2 = a2, min1 = a1, min2 = a2;
    int j = 1;

    TraceRow row1{j, a1, b1, a2, b2, max1, max2, min1, min2, {}};
    emit(run.records, row1, GenKind::Upper, j, mono(0, u2, 1, 0, 0), mono(d1 - u1, 0, 0, 1, 0));
    emit(run.records, row1, GenKind::Lower, j, mono(0, d2 - u2, 0, 1, 0), mono(u1, 0, 0, 0, 1));
    run.rows.push_back(row1);

    while (a1 != 0 && a2 != 0) {
        ++j;
        Exp p1 = checked_mul(u1, j), p2 = checked_mul(u2, j);
        a1 = p1 % d1;
        a2 = p2 % d2;
        b1 = p1 / d1;
        b2 = p2 / d2;

        TraceRow row{j, a1, b1, a2, b2, {}, {}, {}, {}, {}};
        if (a1 > max1) row.max1 = a1;
        if (a2 > max2) row.max2 = a2;
        if (a1 < min1) row.min1 = a1;
        if (a2 < min2) row.min2 = a2;

        if (b1 - prevB1 == b2 - prevB2) {
            if (b1 - prevB1 == 0) {
                emit(run.records, row, GenKind::Upper, j,
                     mono(d1 - a1, d2 - a2, 0, j, 0), mono(0, 0, b1 + 1, 0, b2 + 1));
            } else {
                emit(run.records, row, GenKind::Lower, j,
                     mono(a1, a2, b1, 0, b2), mono(0, 0, 0, j, 0));
            }
            run.rows.push_back(row);
            break;
        }

        bool upper = a1 > max1 && a2 < min2;
        bool lower = a1 < min1 && a2 > max2;
        if ((a1 > max1) != (a2 < min2) || (a1 < min1) != (a2 > max2))
            throw InternalError("complementarity of the two sequences is violated at step " +
                                std::to_string(j));
        if (upper) {
            emit(run.records, row, GenKind::Upper, j,
                 mono(0, a2, b1 + 1, 0, b2), mono(d1 - a1, 0, 0, j, 0));
            max1 = a1;
            min2 = a2;
        }
        if (lower) {
            emit(run.records, row, GenKind::Lower, j,
                 mono(0, d2 - a2, 0, j, 0), mono(a1, 0, b1, 0, b2 + 1));
            min1 = a1;
            max2 = a2;
        }
        prevB1 = b1;
        prevB2 = b2;
        run.rows.push_back(row);
    }

    for (auto& rec : run.records) rec.traceRow = run.rows[rec.step - 1];
    return run;
}

PlaneCurveRun minimal_generators_plane_curve(Exp d, Exp u) {
    if (!(0 < u && u < d))
        throw InvalidParamsError("plane-curve parameters require 0 < u < d");
    PlaneCurveRun run{d, u, {}, {}};

    Exp a = u, b = 0;
    Exp mx = a, mn = a;
    int j = 1;

    auto emitPlane = [&](PlaneTraceRow& row, GenKind kind, const Monomial& first,
                         const Monomial& second) {
        GeneratorRecord rec{static_cast<int>(run.records.size()) + 1,
                            j,
                            kind,
                            first,
                            second,
                            Binomial::normalized(first, second),
                            {}};
        row.emitted.push_back(to_string(first) + "-" + to_string(second));
        run.records.push_back(std::move(rec));
    };

    PlaneTraceRow row1{j, a, b, mx, mn, {}};
    emitPlane(row1, GenKind::Upper, mono(0, d - u, 1, 0, 0), mono(d - u, 0, 0, 1, 0));
    emitPlane(row1, GenKind::Lower, mono(0, u, 0, 1, 0), mono(u, 0, 0, 0, 1));
    run.rows.push_back(row1);

    while (a != 0) {
        ++j;
        Exp pj = checked_mul(u, j);
        a = pj % d;
        b = pj / d;
        PlaneTraceRow row{j, a, b, {}, {}, {}};
        if (a > mx) {
            row.max = a;
            emitPlane(row, GenKind::Upper, mono(0, d - a, b + 1, 0, j - (b + 1)),
                      mono(d - a, 0, 0, j, 0));
            mx = a;
        }
        if (a < mn) {
            row.min = a;
            emitPlane(row, GenKind::Lower, mono(0, a, 0, j, 0), mono(a, 0, b, 0, j - b));
            mn = a;
        }
        run.rows.push_back(row);
    }
    return run;
}

std::vector<int> skip_optimized_indices(const IdealParams& p) {
    const Exp d1 = p.d1, d2 = p.d2, u1 = p.u1, u2 = p.u2;
    std::vector<int> out{1};
    Exp c1 = 1, c2 = 1;
    Exp max1 = u1, min1 = u1, max2 = u2, min2 = u2;

    while (true) {
        Exp j = checked_add(c1, c2);
        Exp a1 = checked_mul(u1, j) % d1;
        Exp a2 = checked_mul(u2, j) % d2;
        Exp diff1 = checked_mul(u1, j) / d1 - checked_mul(u1, j - 1) / d1;
        Exp diff2 = checked_mul(u2, j) / d2 - checked_mul(u2, j - 1) / d2;
        out.push_back(static_cast<int>(j));
        if (diff1 == diff2) break;
        if (a1 > max1 && a2 < min2) {
            c1 = j;
            max1 = a1;
            min2 = a2;
        } else if (a1 < min1 && a2 > max2) {
            c2 = j;
            min1 = a1;
            max2 = a2;
        } else {
            throw InternalError("index-sum recurrence landed on a non-event step " +
                                std::to_string(j));
        }
        if (a1 == 0 || a2 == 0) break;
    }
    return out;
}

PurePowerRelation pure_power_relation(const IdealParams& p) {
    Periods per = periods(p);
    Exp k = checked_mul(per.p1 / gcd_exp(per.p1, per.p2), per.p2);
    PurePowerRelation r{k, checked_mul(k, p.u1) / p.d1, checked_mul(k, p.u2) / p.d2};
    if (checked_mul(r.k1, p.d1) != checked_mul(k, p.u1) ||
        checked_mul(r.k2, p.d2) != checked_mul(k, p.u2))
        throw InternalError("pure-power relation divisions are not exact");
    Monomial lhs = psi(Monomial::variable(Var::X1, k), p);
    Monomial rhs = psi(Monomial::make(0, 0, r.k1, 0, r.k2), p);
    if (lhs != rhs)
        throw InternalError("psi(X1^k) != psi(X0^k1*X2^k2)");
    return r;
}

namespace {

std::string cell(const std::optional<Exp>& v) {
    return v ? std::to_string(*v) : std::string();
}

std::string joined(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& s : parts) {
        if (!out.empty()) out += ", ";
        out += s;
    }
    return out;
}

json row_to_json(const TraceRow& r) {
    json o;
    o["j"] = r.j;
    o["a1"] = r.a1;
    o["b1"] = r.b1;
    o["a2"] = r.a2;
    o["b2"] = r.b2;
    o["max1"] = r.max1 ? json(*r.max1) : json(nullptr);
    o["max2"] = r.max2 ? json(*r.max2) : json(nullptr);
    o["min1"] = r.min1 ? json(*r.min1) : json(nullptr);
    o["min2"] = r.min2 ? json(*r.min2) : json(nullptr);
    o["emitted"] = r.emitted.empty() ? json(nullptr) : json(joined(r.emitted));
    return o;
}

json params_to_json(const IdealParams& p) {
    json o;
    o["d1"] = p.d1;
    o["d2"] = p.d2;
    o["u1"] = p.u1;
    o["u2"] = p.u2;
    o["commonFactor"] = {p.mu0, p.mu1};
    return o;
}

} // namespace

std::string trace_to_tsv(const GeneratorRun& run) {
    std::string out = "j\ta1\tb1\ta2\tb2\tmax1\tmax2\tmin1\tmin2\tgens\n";
    for (const auto& r : run.rows) {
        out += std::to_string(r.j) + '\t' + std::to_string(r.a1) + '\t' + std::to_string(r.b1) +
               '\t' + std::to_string(r.a2) + '\t' + std::to_string(r.b2) + '\t' + cell(r.max1) +
               '\t' + cell(r.max2) + '\t' + cell(r.min1) + '\t' + cell(r.min2) + '\t' +
               joined(r.emitted) + '\n';
    }
    return out;
}

std::string trace_to_json(const GeneratorRun& run) {
    json o;
    o["schemaVersion"] = 1;
    o["params"] = params_to_json(run.params);
    json rows = json::array();
    for (const auto& r : run.rows) rows.push_back(row_to_json(r));
    o["rows"] = rows;
    return o.dump(2) + "\n";
}

std::string trace_to_tsv(const PlaneCurveRun& run) {
    std::string out = "j\ta\tb\tmax\tmin\tgens\n";
    for (const auto& r : run.rows) {
        out += std::to_string(r.j) + '\t' + std::to_string(r.a) + '\t' + std::to_string(r.b) +
               '\t' + cell(r.max) + '\t' + cell(r.min) + '\t' + joined(r.emitted) + '\n';
    }
    return out;
}

std::string trace_to_json(const PlaneCurveRun& run) {
    json o;
    o["schemaVersion"] = 1;
    o["d"] = run.d;
    o["u"] = run.u;
    json rows = json::array();
    for (const auto& r : run.rows) {
        json ro;
        ro["j"] = r.j;
        ro["a"] = r.a;
        ro["b"] = r.b;
        ro["max"] = r.max ? json(*r.max) : json(nullptr);
        ro["min"] = r.min ? json(*r.min) : json(nullptr);
        ro["emitted"] = r.emitted.empty() ? json(nullptr) : json(joined(r.emitted));
        rows.push_back(ro);
    }
    o["rows"] = rows;
    return o.dump(2) + "\n";
}

std::string generators_to_text(const GeneratorRun& run) {
    std::string out;
    for (const auto& rec : run.records) out += to_string(rec.binomial) + '\n';
    return out;
}

std::string generators_to_json(const GeneratorRun& run) {
    json o;
    o["schemaVersion"] = 1;
    o["params"] = params_to_json(run.params);
    json gens = json::array();
    for (const auto& rec : run.records) {
        json g;
        g["index"] = rec.index;
        g["step"] = rec.step;
        g["kind"] = to_string(rec.kind);
        g["normalized"] = to_string(rec.binomial);
        g["paperForm"] = to_string(rec.paperFirst) + "-" + to_string(rec.paperSecond);
        g["lead"] = to_string(rec.binomial.lead());
        g["tail"] = to_string(rec.binomial.tail());
        g["leadExponents"] = rec.binomial.lead().exponents();
        g["tailExponents"] = rec.binomial.tail().exponents();
        gens.push_back(g);
    }
    o["generators"] = gens;
    return o.dump(2) + "\n";
}

} // namespace reeskit
