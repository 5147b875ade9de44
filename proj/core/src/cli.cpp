#include "reeskit/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <set>
#include <thread>

#include <json.hpp>

namespace reeskit {

using json = nlohmann::ordered_json;

Subcommand parse_subcommand(const std::string& name) {
    if (name == "gens") return Subcommand::Gens;
    if (name == "trace") return Subcommand::Trace;
    if (name == "graph") return Subcommand::Graph;
    if (name == "gb") return Subcommand::Gb;
    if (name == "colon") return Subcommand::Colon;
    if (name == "resolution") return Subcommand::Resolution;
    if (name == "betti") return Subcommand::Betti;
    if (name == "verify") return Subcommand::Verify;
    if (name == "sweep") return Subcommand::Sweep;
    throw Error("unknown subcommand '" + name + "'");
}

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "dot") return Format::Dot;
    if (name == "cas") return Format::Cas;
    throw Error("unknown format '" + name + "'");
}

namespace {

class MonomialParser {
public:
    explicit MonomialParser(const std::string& s) : s_(s) {}

    std::array<Monomial, 3> parse_three() {
        std::array<Monomial, 3> out = {parse_term(), Monomial(), Monomial()};
        for (int i = 1; i < 3; ++i) {
            expect(',');
            out[i] = parse_term();
        }
        if (pos_ != s_.size()) throw ParseError("expected end of input", pos_);
        return out;
    }

private:
    Monomial parse_term() {
        Monomial m = parse_factor();
        while (pos_ < s_.size() && s_[pos_] == '*') {
            ++pos_;
            m = m * parse_factor();
        }
        return m;
    }

    Monomial parse_factor() {
        if (pos_ >= s_.size()) throw ParseError("expected 'T0' or 'T1'", pos_);
        if (s_[pos_] == 'X')
            throw WrongVariableError("X-variables are not allowed in ideal input (position " +
                                     std::to_string(pos_) + ")");
        if (s_[pos_] != 'T' || pos_ + 1 >= s_.size() ||
            (s_[pos_ + 1] != '0' && s_[pos_ + 1] != '1'))
            throw ParseError("expected 'T0' or 'T1'", pos_);
        Var v = s_[pos_ + 1] == '0' ? Var::T0 : Var::T1;
        pos_ += 2;
        Exp e = 1;
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            e = parse_uint();
        }
        return Monomial::variable(v, e);
    }

    Exp parse_uint() {
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected an unsigned integer exponent", pos_);
        Exp value = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            value = checked_add(checked_mul(value, 10), s_[pos_] - '0');
            ++pos_;
        }
        return value;
    }

    void expect(char c) {
        if (pos_ >= s_.size() || s_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

bool format_valid(Subcommand s, Format f) {
    switch (s) {
        case Subcommand::Graph:
            return f == Format::Dot || f == Format::Json;
        case Subcommand::Gb:
        case Subcommand::Resolution:
            return f == Format::Text || f == Format::Json || f == Format::Cas;
        default:
            return f == Format::Text || f == Format::Json;
    }
}

std::string records_to_text(const std::vector<GeneratorRecord>& records) {
    std::string out;
    for (const auto& rec : records) out += to_string(rec.binomial) + '\n';
    return out;
}

std::string plane_gens_to_json(const PlaneCurveRun& run) {
    json o;
    o["schemaVersion"] = 1;
    o["d"] = run.d;
    o["u"] = run.u;
    json gens = json::array();
    for (const auto& rec : run.records) {
        json g;
        g["index"] = rec.index;
        g["step"] = rec.step;
        g["kind"] = to_string(rec.kind);
        g["normalized"] = to_string(rec.binomial);
        g["paperForm"] = to_string(rec.paperFirst) + "-" + to_string(rec.paperSecond);
        gens.push_back(g);
    }
    o["generators"] = gens;
    return o.dump(2) + "\n";
}

json betti_json(const IdealParams& p, const BettiNumbers& b) {
    json o;
    o["schemaVersion"] = 1;
    json params;
    params["d1"] = p.d1;
    params["d2"] = p.d2;
    params["u1"] = p.u1;
    params["u2"] = p.u2;
    o["params"] = params;
    o["beta0"] = b.b0;
    o["beta1"] = b.b1;
    o["beta2"] = b.b2;
    o["pd"] = b.pd;
    return o;
}

IdealParams params_from(const Invocation& inv) {
    if (!inv.idealString.empty()) {
        if (!inv.numbers.empty())
            throw Error("provide either four integers or an ideal string, not both");
        auto ms = parse_monomial_list(inv.idealString);
        return normalize_input(ms[0], ms[1], ms[2]);
    }
    if (inv.numbers.size() != 4)
        throw Error("expected four integers d1 d2 u1 u2 (or an ideal string)");
    return IdealParams(inv.numbers[0], inv.numbers[1], inv.numbers[2], inv.numbers[3]);
}

} // namespace

std::array<Monomial, 3> parse_monomial_list(const std::string& s) {
    return MonomialParser(s).parse_three();
}

RunResult run(const Invocation& inv) {
    RunResult res;
    try {
        if (!format_valid(inv.subcommand, inv.format)) {
            throw Error("format not valid for this subcommand");
        }
        if (inv.plane && inv.subcommand != Subcommand::Gens && inv.subcommand != Subcommand::Trace)
            throw Error("--plane applies to gens and trace only");

        switch (inv.subcommand) {
            case Subcommand::Gens: {
                if (inv.plane) {
                    if (inv.numbers.size() != 2) throw Error("--plane expects two integers d u");
                    auto run = minimal_generators_plane_curve(inv.numbers[0], inv.numbers[1]);
                    res.output = inv.format == Format::Text ? records_to_text(run.records)
                                                            : plane_gens_to_json(run);
                } else {
                    auto run = minimal_generators(params_from(inv));
                    res.output = inv.format == Format::Text ? generators_to_text(run)
                                                            : generators_to_json(run);
                }
                break;
            }
            case Subcommand::Trace: {
                if (inv.plane) {
                    if (inv.numbers.size() != 2) throw Error("--plane expects two integers d u");
                    auto run = minimal_generators_plane_curve(inv.numbers[0], inv.numbers[1]);
                    res.output =
                        inv.format == Format::Text ? trace_to_tsv(run) : trace_to_json(run);
                } else {
                    auto run = minimal_generators(params_from(inv));
                    res.output =
                        inv.format == Format::Text ? trace_to_tsv(run) : trace_to_json(run);
                }
                break;
            }
            case Subcommand::Graph: {
                auto run = minimal_generators(params_from(inv));
                ReesGraph g = build_graph(run.records);
                if (inv.augmented) g = augment(g);
                res.output = inv.format == Format::Dot ? export_dot(g) : export_graph_json(g);
                break;
            }
            case Subcommand::Gb: {
                auto gb = groebner_basis(params_from(inv));
                res.output = inv.format == Format::Text  ? gb_to_text(gb)
                             : inv.format == Format::Json ? gb_to_json(gb)
                                                          : gb_to_cas(gb);
                break;
            }
            case Subcommand::Colon: {
                IdealParams p = params_from(inv);
                auto gb = groebner_basis(p);
                auto dd = delta_data(p);
                res.output = inv.format == Format::Text ? colon_to_text(gb, dd)
                                                        : colon_to_json(gb, dd);
                break;
            }
            case Subcommand::Resolution: {
                auto r = build_resolution(params_from(inv));
                if (inv.minimal) r = minimalize(r);
                res.output = inv.format == Format::Text  ? resolution_to_text(r)
                             : inv.format == Format::Json ? resolution_to_json(r)
                                                          : resolution_to_cas(r);
                break;
            }
            case Subcommand::Betti: {
                IdealParams p = params_from(inv);
                BettiNumbers b = betti_numbers(p);
                if (inv.format == Format::Text) {
                    res.output = "β0=" + std::to_string(b.b0) + " β1=" +
                                 std::to_string(b.b1) + " β2=" + std::to_string(b.b2) +
                                 " pd=" + std::to_string(b.pd) + "\n";
                } else {
                    res.output = betti_json(p, b).dump(2) + "\n";
                }
                break;
            }
            case Subcommand::Verify: {
                IdealParams p = params_from(inv);
                auto rep = verify_instance(p, {inv.tbound, inv.countsOnly});
                res.output =
                    inv.format == Format::Text ? report_to_text(rep) : report_to_json(rep);
                res.exitCode = rep.pass ? 0 : 1;
                break;
            }
            case Subcommand::Sweep: {
                if (inv.dmax < 2) throw Error("sweep requires --dmax >= 2");
                auto summary = run_sweep(inv.dmax, inv.countsOnly, inv.mirrorStride, inv.tbound);
                res.output = inv.format == Format::Text ? sweep_to_text(summary)
                                                        : sweep_to_json(summary);
                res.exitCode = summary.pass() ? 0 : 1;
                break;
            }
        }
    } catch (const std::exception& e) {
        res.exitCode = 2;
        res.error = e.what();
    }
    return res;
}

namespace {

int sweep_threads() {
    if (const char* env = std::getenv("REESKIT_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return std::min(n, 64);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 64u));
}

Monomial mirror_monomial(const Monomial& m) {
    return Monomial::make(m.exp(Var::T1), m.exp(Var::T0), m.exp(Var::X2), m.exp(Var::X1),
                          m.exp(Var::X0));
}

// The swap T0<->T1, X0<->X2 maps kernel binomials of (d1,d2,u1,u2) to kernel
// binomials of (d2,d1,u2,u1); the minimal generating sets must correspond.
bool mirror_matches(const IdealParams& p) {
    IdealParams m(p.d2, p.d1, p.u2, p.u1);
    auto a = minimal_generators(p);
    auto b = minimal_generators(m);
    if (a.records.size() != b.records.size()) return false;
    std::set<Binomial> mapped, actual;
    for (const auto& rec : a.records)
        mapped.insert(Binomial::normalized(mirror_monomial(rec.binomial.lead()),
                                           mirror_monomial(rec.binomial.tail())));
    for (const auto& rec : b.records) actual.insert(rec.binomial);
    return mapped == actual;
}

} // namespace

SweepSummary run_sweep(Exp dmax, bool countsOnly, int mirrorStride, Exp tbound) {
    SweepSummary summary;
    summary.dmax = dmax;
    summary.countsOnly = countsOnly;

    std::vector<IdealParams> grid;
    for (Exp d1 = 2; d1 <= dmax; ++d1)
        for (Exp d2 = 2; d2 <= dmax; ++d2)
            for (Exp u1 = 1; u1 < d1; ++u1)
                for (Exp u2 = 1; u2 < d2; ++u2) {
                    std::array<Exp, 4> tuple{d1, d2, u1, u2};
                    std::array<Exp, 4> mirror{d2, d1, u2, u1};
                    if (tuple <= mirror) grid.emplace_back(d1, d2, u1, u2);
                }
    summary.instances = static_cast<int>(grid.size());

    std::vector<char> pass(grid.size(), 1);
    std::vector<InstanceReport> reports(grid.size(), InstanceReport{IdealParams(2, 2, 1, 1), true, {}});
    std::vector<char> mirrorPass(grid.size(), 1);
    std::vector<char> mirrorTested(grid.size(), 0);

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1)) {
            InstanceReport rep = verify_instance(grid[i], {tbound, countsOnly});
            pass[i] = rep.pass ? 1 : 0;
            if (!rep.pass) reports[i] = std::move(rep);
            const IdealParams& p = grid[i];
            bool selfMirror = p.d1 == p.d2 && p.u1 == p.u2;
            if (mirrorStride > 0 && i % static_cast<std::size_t>(mirrorStride) == 0 &&
                !selfMirror) {
                mirrorTested[i] = 1;
                mirrorPass[i] = mirror_matches(p) ? 1 : 0;
            }
        }
    };

    int threads = sweep_threads();
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!pass[i]) summary.failures.push_back(reports[i]);
        if (mirrorTested[i]) {
            ++summary.mirrorSamples;
            if (!mirrorPass[i]) summary.mirrorFailures.push_back(grid[i]);
        }
    }
    return summary;
}

std::string sweep_to_text(const SweepSummary& s) {
    std::string out = "sweep dmax=" + std::to_string(s.dmax) +
                      " checks=" + (s.countsOnly ? "counts" : "full") +
                      " instances=" + std::to_string(s.instances) +
                      " mirrorSamples=" + std::to_string(s.mirrorSamples) +
                      " failures=" + std::to_string(s.failures.size()) +
                      " mirrorFailures=" + std::to_string(s.mirrorFailures.size()) + "\n";
    for (const auto& rep : s.failures) {
        out += "FAIL (" + std::to_string(rep.params.d1) + "," + std::to_string(rep.params.d2) +
               "," + std::to_string(rep.params.u1) + "," + std::to_string(rep.params.u2) + "):";
        for (const auto& c : rep.checks)
            if (!c.pass) out += " " + c.name;
        out += '\n';
    }
    for (const auto& p : s.mirrorFailures)
        out += "MIRROR-FAIL (" + std::to_string(p.d1) + "," + std::to_string(p.d2) + "," +
               std::to_string(p.u1) + "," + std::to_string(p.u2) + ")\n";
    out += s.pass() ? "PASS\n" : "FAIL\n";
    return out;
}

std::string sweep_to_json(const SweepSummary& s) {
    json o;
    o["schemaVersion"] = 1;
    o["dmax"] = s.dmax;
    o["checks"] = s.countsOnly ? "counts" : "full";
    o["instances"] = s.instances;
    o["mirrorSamples"] = s.mirrorSamples;
    o["pass"] = s.pass();
    json fails = json::array();
    for (const auto& rep : s.failures) {
        json f;
        f["params"] = {rep.params.d1, rep.params.d2, rep.params.u1, rep.params.u2};
        json checks = json::array();
        for (const auto& c : rep.checks)
            if (!c.pass) {
                json e;
                e["name"] = c.name;
                e["detail"] = c.detail;
                checks.push_back(e);
            }
        f["failedChecks"] = checks;
        fails.push_back(f);
    }
    o["failures"] = fails;
    json mf = json::array();
    for (const auto& p : s.mirrorFailures) mf.push_back({p.d1, p.d2, p.u1, p.u2});
    o["mirrorFailures"] = mf;
    return o.dump(2) + "\n";
}

} // namespace reeskit
