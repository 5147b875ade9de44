// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Criteria 5-9 share one full-battery pass over the d<=20
// grid; criterion 4 runs the count checks over the full d<=30 grid.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "reeskit/cli.hpp"

using namespace reeskit;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    int id;
    std::string name;
    bool pass = true;
    std::string detail;
    double ms = 0.0;
};

std::vector<Criterion> results;

template <typename F>
void criterion(int id, const std::string& name, F&& body) {
    Criterion c{id, name};
    auto start = Clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail = std::string("exception: ") + e.what();
    }
    c.ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    results.push_back(c);
}

void expect(Criterion& c, bool cond, const std::string& msg) {
    if (!cond) {
        c.pass = false;
        if (!c.detail.empty()) c.detail += "; ";
        if (c.detail.size() < 400) c.detail += msg;
    }
}

std::vector<IdealParams> full_grid(Exp dmax) {
    std::vector<IdealParams> out;
    for (Exp d1 = 2; d1 <= dmax; ++d1)
        for (Exp d2 = 2; d2 <= dmax; ++d2)
            for (Exp u1 = 1; u1 < d1; ++u1)
                for (Exp u2 = 1; u2 < d2; ++u2) out.emplace_back(d1, d2, u1, u2);
    return out;
}

const char* kTable1Gens[5] = {"T0^6*X1-T1^6*X0", "T1^7*X1-T0^9*X2", "T1*X1^2-T0^3*X0*X2",
                              "T0^3*X1^3-T1^5*X0^2*X2", "X1^5-T1^4*X0^3*X2^2"};
// (j, a1, b1, a2, b2) cells of the first worked table
const Exp kTable1Cells[5][5] = {{1, 9, 0, 6, 0},
                                {2, 3, 1, 12, 0},
                                {3, 12, 1, 5, 1},
                                {4, 6, 2, 11, 1},
                                {5, 0, 3, 4, 2}};

const char* kTable2Gens[6] = {"T0^15*X1-T1^15*X0",      "T1^6*X1-T0^6*X2",
                              "T0^9*X1^2-T1^9*X0*X2",   "T0^3*X1^3-T1^3*X0*X2^2",
                              "T1^3*X1^4-T0^3*X0*X2^3", "X1^7-X0^2*X2^5"};
// (j, a, b) cells of the second worked table
const Exp kTable2Cells[7][3] = {{1, 6, 0}, {2, 12, 0}, {3, 18, 0}, {4, 3, 1},
                                {5, 9, 1}, {6, 15, 1}, {7, 0, 2}};

// Failed check names per instance from the shared d<=20 full-battery pass.
struct SweepOutcome {
    int instances = 0;
    std::map<std::string, int> failuresByCheck;
    std::string firstDetail;
};
SweepOutcome shared20;

void expect_checks_clean(Criterion& c, const std::vector<std::string>& checkNames) {
    for (const auto& name : checkNames) {
        auto it = shared20.failuresByCheck.find(name);
        if (it != shared20.failuresByCheck.end())
            expect(c, false,
                   name + " failed on " + std::to_string(it->second) + " instances (" +
                       shared20.firstDetail + ")");
    }
    expect(c, shared20.instances > 0, "shared sweep did not run");
}

} // namespace

int main() {
    criterion(1, "golden example 1: gens and trace of (15,13,9,6)", [](Criterion& c) {
        auto start = Clock::now();
        GeneratorRun run = minimal_generators(IdealParams(15, 13, 9, 6));
        std::string gensOut = generators_to_text(run);
        std::string traceOut = trace_to_tsv(run);
        double coreMs =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();

        expect(c, run.records.size() == 5, "five generators");
        for (int i = 0; i < 5 && i < static_cast<int>(run.records.size()); ++i)
            expect(c, to_string(run.records[i].binomial) == kTable1Gens[i],
                   "generator " + std::to_string(i + 1) + " mismatch");
        expect(c, run.rows.size() == 5, "five trace rows");
        for (int i = 0; i < 5 && i < static_cast<int>(run.rows.size()); ++i) {
            const TraceRow& r = run.rows[i];
            bool cells = r.j == kTable1Cells[i][0] && r.a1 == kTable1Cells[i][1] &&
                         r.b1 == kTable1Cells[i][2] && r.a2 == kTable1Cells[i][3] &&
                         r.b2 == kTable1Cells[i][4];
            expect(c, cells, "trace cells of row " + std::to_string(i + 1));
        }
        expect(c,
               gensOut ==
                   "T0^6*X1-T1^6*X0\nT1^7*X1-T0^9*X2\nT1*X1^2-T0^3*X0*X2\n"
                   "T0^3*X1^3-T1^5*X0^2*X2\nX1^5-T1^4*X0^3*X2^2\n",
               "gens text output");
        expect(c, !traceOut.empty() && traceOut.substr(0, 2) == "j\t", "trace TSV header");
        expect(c, coreMs < 10.0, "runtime " + std::to_string(coreMs) + " ms >= 10 ms");
    });

    criterion(2, "golden example 2: (21,21,6,15) and plane curve (21,6)", [](Criterion& c) {
        auto start = Clock::now();
        GeneratorRun general = minimal_generators(IdealParams(21, 21, 6, 15));
        PlaneCurveRun plane = minimal_generators_plane_curve(21, 6);
        double coreMs =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();

        expect(c, general.records.size() == 6 && plane.records.size() == 6, "six generators");
        for (int i = 0; i < 6; ++i) {
            expect(c, to_string(general.records[i].binomial) == kTable2Gens[i],
                   "general generator " + std::to_string(i + 1));
            expect(c, to_string(plane.records[i].binomial) == kTable2Gens[i],
                   "plane generator " + std::to_string(i + 1));
            expect(c, general.records[i].kind == plane.records[i].kind,
                   "kind " + std::to_string(i + 1));
        }
        expect(c, plane.rows.size() == 7, "seven trace rows");
        for (int i = 0; i < 7 && i < static_cast<int>(plane.rows.size()); ++i) {
            const PlaneTraceRow& r = plane.rows[i];
            expect(c,
                   r.j == kTable2Cells[i][0] && r.a == kTable2Cells[i][1] &&
                       r.b == kTable2Cells[i][2],
                   "plane trace cells of row " + std::to_string(i + 1));
        }
        // extremum columns recorded exactly where the worked table shows them
        expect(c, plane.rows[0].max == 6 && plane.rows[0].min == 6, "row 1 extrema");
        expect(c, plane.rows[1].max == 12 && !plane.rows[1].min, "row 2 extrema");
        expect(c, plane.rows[3].min == 3 && !plane.rows[3].max, "row 4 extrema");
        expect(c, plane.rows[6].min == 0 && !plane.rows[6].max, "row 7 extrema");
        expect(c, coreMs < 10.0, "runtime " + std::to_string(coreMs) + " ms >= 10 ms");
    });

    criterion(3, "graph golden test for (15,13,9,6)", [](Criterion& c) {
        ReesGraph plain = build_graph(minimal_generators(IdealParams(15, 13, 9, 6)).records);
        expect(c,
               plain.edges == std::vector<Edge>{{1, 3}, {1, 4}, {2, 3}, {3, 4}, {3, 5}, {4, 5}},
               "plain edges");
        expect(c, plain.triangles == std::vector<Triangle>{{1, 3, 4}, {3, 4, 5}},
               "plain triangles");
        for (const auto& n : plain.nodes)
            expect(c, n.row == ((n.id == 1 || n.id == 4) ? GraphRow::Top : GraphRow::Bottom),
                   "node rows");
        ReesGraph aug = augment(plain);
        expect(c,
               aug.edges == std::vector<Edge>{{0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4},
                                              {3, 5}, {4, 5}},
               "augmented edges");
        expect(c, aug.triangles == std::vector<Triangle>{{1, 2, 3}, {1, 3, 4}, {3, 4, 5}},
               "augmented triangles");
    });

    criterion(4, "count invariants on the full d<=30 grid, single-threaded", [](Criterion& c) {
        int bad = 0;
        std::string firstDetail;
        for (const auto& p : full_grid(30)) {
            InstanceReport rep = verify_instance(p, {0, true});
            if (!rep.pass) {
                ++bad;
                if (firstDetail.empty()) firstDetail = report_to_text(rep);
            }
        }
        expect(c, bad == 0, std::to_string(bad) + " instances fail counts: " + firstDetail);
    });

    // Shared full battery across the complete d<=20 grid.
    {
        auto start = Clock::now();
        for (const auto& p : full_grid(20)) {
            InstanceReport rep = verify_instance(p);
            ++shared20.instances;
            for (const auto& chk : rep.checks)
                if (!chk.pass) {
                    ++shared20.failuresByCheck[chk.name];
                    if (shared20.firstDetail.empty())
                        shared20.firstDetail = chk.name + ": " + chk.detail;
                }
        }
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        std::printf("# shared d<=20 full battery: %d instances in %.1f ms\n",
                    shared20.instances, ms);
    }

    criterion(5, "oracle equivalence on the d<=20 grid", [](Criterion& c) {
        expect_checks_clean(c, {"oracle_equivalence"});
        expect(c, shared20.instances == 36100, "grid size");
    });

    criterion(6, "Groebner certification and negative control on the d<=20 grid",
              [](Criterion& c) { expect_checks_clean(c, {"gb_spolys", "gb_negative_control"}); });

    criterion(7, "colon-ideal closed form vs brute force on the d<=20 grid",
              [](Criterion& c) { expect_checks_clean(c, {"colon_ideals"}); });

    criterion(8, "complex exactness, minimal ranks, no constant entries on the d<=20 grid",
              [](Criterion& c) {
                  expect_checks_clean(c, {"resolution_complex", "syzygy_identities"});
              });

    criterion(9, "internal-consistency properties on the d<=20 grid", [](Criterion& c) {
        expect_checks_clean(c, {"delta_lemmas", "skip_indices", "plane_curve_equiv",
                                "generator_invariants", "stopping_bound", "upper_lower_iff",
                                "preimage_uniqueness", "graph_counts", "betti"});
    });

    criterion(10, "byte-identical output of every subcommand", [](Criterion& c) {
        std::vector<Invocation> invocations;
        auto push = [&](Subcommand sub, Format fmt) {
            Invocation inv;
            inv.subcommand = sub;
            inv.numbers = {15, 13, 9, 6};
            inv.format = fmt;
            invocations.push_back(inv);
        };
        for (Format f : {Format::Text, Format::Json}) {
            push(Subcommand::Gens, f);
            push(Subcommand::Trace, f);
            push(Subcommand::Gb, f);
            push(Subcommand::Colon, f);
            push(Subcommand::Resolution, f);
            push(Subcommand::Betti, f);
            push(Subcommand::Verify, f);
        }
        push(Subcommand::Graph, Format::Dot);
        push(Subcommand::Graph, Format::Json);
        push(Subcommand::Gb, Format::Cas);
        push(Subcommand::Resolution, Format::Cas);
        {
            Invocation inv;
            inv.subcommand = Subcommand::Graph;
            inv.numbers = {15, 13, 9, 6};
            inv.format = Format::Dot;
            inv.augmented = true;
            invocations.push_back(inv);
            inv.subcommand = Subcommand::Resolution;
            inv.format = Format::Text;
            inv.augmented = false;
            inv.minimal = true;
            invocations.push_back(inv);
            Invocation plane;
            plane.subcommand = Subcommand::Trace;
            plane.numbers = {21, 6};
            plane.plane = true;
            invocations.push_back(plane);
            Invocation ideal;
            ideal.subcommand = Subcommand::Gens;
            ideal.idealString = "T0^15,T0^9*T1^6,T1^13";
            invocations.push_back(ideal);
            Invocation sweep;
            sweep.subcommand = Subcommand::Sweep;
            sweep.dmax = 8;
            invocations.push_back(sweep);
            sweep.format = Format::Json;
            invocations.push_back(sweep);
        }
        for (const auto& inv : invocations) {
            RunResult a = run(inv);
            RunResult b = run(inv);
            expect(c, a.exitCode == 0, "nonzero exit (" + a.error + ")");
            expect(c, a.output == b.output && !a.output.empty(), "output not byte-identical");
        }
    });

    bool allPass = true;
    for (const auto& c : results) {
        std::printf("[%s] criterion %d: %s (%.1f ms)%s%s\n", c.pass ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), c.ms, c.detail.empty() ? "" : " - ",
                    c.detail.c_str());
        allPass = allPass && c.pass;
    }
    std::printf("%s\n", allPass ? "ACCEPTANCE: ALL CRITERIA PASS" : "ACCEPTANCE: FAILURES");
    return allPass ? 0 : 1;
}
