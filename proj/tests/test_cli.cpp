#include <doctest.h>

#include "reeskit/cli.hpp"

using namespace reeskit;

namespace {

Invocation inv_for(Subcommand sub, std::vector<Exp> numbers, Format fmt = Format::Text) {
    Invocation inv;
    inv.subcommand = sub;
    inv.numbers = std::move(numbers);
    inv.format = fmt;
    return inv;
}

} // namespace

TEST_CASE("parse_monomial_list") {
    auto ms = parse_monomial_list("T0^15,T0^9*T1^6,T1^13");
    CHECK(to_string(ms[0]) == "T0^15");
    CHECK(to_string(ms[1]) == "T0^9*T1^6");
    CHECK(to_string(ms[2]) == "T1^13");

    auto simple = parse_monomial_list("T0^2,T0*T1,T1^2");
    CHECK(to_string(simple[1]) == "T0*T1");

    CHECK_THROWS_AS(parse_monomial_list("T0^15,X0,T1^13"), WrongVariableError);
    CHECK_THROWS_AS(parse_monomial_list("T0^15,T0^9*T1^6"), ParseError);
    CHECK_THROWS_AS(parse_monomial_list("T0^15,T2,T1^13"), ParseError);
    CHECK_THROWS_AS(parse_monomial_list("T0^,T0,T1"), ParseError);
    CHECK_THROWS_AS(parse_monomial_list("T0^15,T0^9*T1^6,T1^13,"), ParseError);
    try {
        parse_monomial_list("T0^15,Q,T1^13");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.pos == 6);
        CHECK(std::string(e.what()).find("position 6") != std::string::npos);
    }
}

TEST_CASE("gens via parameters and via ideal string agree") {
    RunResult byParams = run(inv_for(Subcommand::Gens, {15, 13, 9, 6}));
    Invocation byIdeal = inv_for(Subcommand::Gens, {});
    byIdeal.idealString = "T0^15,T0^9*T1^6,T1^13";
    CHECK(byParams.exitCode == 0);
    CHECK(run(byIdeal).output == byParams.output);
    // a scaled ideal reduces to the same parameters
    Invocation scaled = inv_for(Subcommand::Gens, {});
    scaled.idealString = "T0^16*T1^2,T0^10*T1^8,T0*T1^15";
    CHECK(run(scaled).output == byParams.output);
    CHECK(byParams.output ==
          "T0^6*X1-T1^6*X0\nT1^7*X1-T0^9*X2\nT1*X1^2-T0^3*X0*X2\n"
          "T0^3*X1^3-T1^5*X0^2*X2\nX1^5-T1^4*X0^3*X2^2\n");
}

TEST_CASE("betti golden line") {
    RunResult res = run(inv_for(Subcommand::Betti, {21, 21, 6, 15}));
    CHECK(res.exitCode == 0);
    CHECK(res.output == "β0=6 β1=8 β2=3 pd=2\n");
}

TEST_CASE("verify exits zero on a passing instance") {
    RunResult res = run(inv_for(Subcommand::Verify, {2, 2, 1, 1}));
    CHECK(res.exitCode == 0);
    CHECK(res.output.find("PASS") != std::string::npos);
}

TEST_CASE("errors map to exit code 2") {
    RunResult bad = run(inv_for(Subcommand::Gens, {4, 2, 1}));
    CHECK(bad.exitCode == 2);
    CHECK(!bad.error.empty());

    Invocation divisible = inv_for(Subcommand::Gens, {});
    divisible.idealString = "T0^4,T0^2,T1^3";
    RunResult notMinimal = run(divisible);
    CHECK(notMinimal.exitCode == 2);
    CHECK(notMinimal.error.find("divides") != std::string::npos);

    // format constraints: dot only for graph, cas only for gb/resolution
    CHECK(run(inv_for(Subcommand::Gens, {2, 2, 1, 1}, Format::Dot)).exitCode == 2);
    CHECK(run(inv_for(Subcommand::Betti, {2, 2, 1, 1}, Format::Cas)).exitCode == 2);
    CHECK(run(inv_for(Subcommand::Graph, {2, 2, 1, 1}, Format::Text)).exitCode == 2);
}

TEST_CASE("plane flag") {
    Invocation inv = inv_for(Subcommand::Gens, {21, 6});
    inv.plane = true;
    RunResult res = run(inv);
    CHECK(res.exitCode == 0);
    CHECK(res.output == run(inv_for(Subcommand::Gens, {21, 21, 6, 15})).output);
    Invocation badPlane = inv_for(Subcommand::Betti, {21, 6});
    badPlane.plane = true;
    CHECK(run(badPlane).exitCode == 2);
}

TEST_CASE("round trip: parse, normalize, regenerate") {
    auto ms = parse_monomial_list("T0^16*T1^2,T0^10*T1^8,T0*T1^15");
    IdealParams p = normalize_input(ms[0], ms[1], ms[2]);
    CHECK(to_string(Monomial::make(p.d1, 0, 0, 0, 0)) == "T0^15");
    CHECK(to_string(Monomial::make(p.u1, p.u2, 0, 0, 0)) == "T0^9*T1^6");
    CHECK(to_string(Monomial::make(0, p.d2, 0, 0, 0)) == "T1^13");
    CHECK(to_string(Monomial::make(p.mu0, p.mu1, 0, 0, 0)) == "T0*T1^2");
}

TEST_CASE("every subcommand is byte-deterministic") {
    std::vector<Invocation> invocations;
    for (Format f : {Format::Text, Format::Json}) {
        invocations.push_back(inv_for(Subcommand::Gens, {15, 13, 9, 6}, f));
        invocations.push_back(inv_for(Subcommand::Trace, {15, 13, 9, 6}, f));
        invocations.push_back(inv_for(Subcommand::Gb, {15, 13, 9, 6}, f));
        invocations.push_back(inv_for(Subcommand::Colon, {15, 13, 9, 6}, f));
        invocations.push_back(inv_for(Subcommand::Resolution, {15, 13, 9, 6}, f));
        invocations.push_back(inv_for(Subcommand::Betti, {15, 13, 9, 6}, f));
        invocations.push_back(inv_for(Subcommand::Verify, {5, 5, 2, 2}, f));
    }
    invocations.push_back(inv_for(Subcommand::Graph, {15, 13, 9, 6}, Format::Dot));
    invocations.push_back(inv_for(Subcommand::Graph, {15, 13, 9, 6}, Format::Json));
    invocations.push_back(inv_for(Subcommand::Gb, {15, 13, 9, 6}, Format::Cas));
    invocations.push_back(inv_for(Subcommand::Resolution, {15, 13, 9, 6}, Format::Cas));
    Invocation sweep;
    sweep.subcommand = Subcommand::Sweep;
    sweep.dmax = 6;
    invocations.push_back(sweep);

    for (auto& inv : invocations) {
        RunResult a = run(inv);
        RunResult b = run(inv);
        CHECK(a.exitCode == 0);
        CHECK(a.output == b.output);
        CHECK(!a.output.empty());
    }
}

TEST_CASE("resolution flags") {
    Invocation minimal = inv_for(Subcommand::Resolution, {15, 13, 9, 6});
    minimal.minimal = true;
    RunResult res = run(minimal);
    CHECK(res.exitCode == 0);
    CHECK(res.output.find("minimal free resolution, ranks (5, 6, 2)") != std::string::npos);

    Invocation augmented = inv_for(Subcommand::Graph, {15, 13, 9, 6}, Format::Dot);
    augmented.augmented = true;
    CHECK(run(augmented).output.find("g0 [shape=box") != std::string::npos);
}

TEST_CASE("sweep exit-code contract") {
    Invocation sweep;
    sweep.subcommand = Subcommand::Sweep;
    sweep.dmax = 5;
    RunResult res = run(sweep);
    CHECK(res.exitCode == 0);
    CHECK(res.output.find("PASS") != std::string::npos);
    sweep.format = Format::Json;
    CHECK(run(sweep).output.find("\"pass\": true") != std::string::npos);
}
