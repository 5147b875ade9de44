#ifndef REESKIT_CLI_HPP
#define REESKIT_CLI_HPP

#include <array>
#include <string>
#include <vector>

#include "reeskit/oracle.hpp"

namespace reeskit {

enum class Subcommand { Gens, Trace, Graph, Gb, Colon, Resolution, Betti, Verify, Sweep };
enum class Format { Text, Json, Dot, Cas };

Subcommand parse_subcommand(const std::string& name);
Format parse_format(const std::string& name);

/// One CLI request: a subcommand, the input (four integers d1 d2 u1 u2, two
/// integers with plane set, or an ideal string "m1,m2,m3"), an output format
/// and the flags the subcommand honors.
struct Invocation {
    Subcommand subcommand = Subcommand::Gens;
    std::vector<Exp> numbers;
    std::string idealString;
    bool plane = false;
    Format format = Format::Text;
    bool augmented = false;
    bool minimal = false;
    Exp tbound = 0;
    Exp dmax = 0;
    bool countsOnly = false;
    int mirrorStride = 37;
};

struct RunResult {
    int exitCode = 0;     // 0 ok, 1 failed checks, 2 error
    std::string output;   // the emitted artifact
    std::string error;    // diagnostic for nonzero exit
};

/// Grammar: three comma-separated terms, term := factor ('*' factor)*,
/// factor := ('T0'|'T1') ('^' uint)?. X-variables are rejected with
/// WrongVariableError, anything else malformed with ParseError.
std::array<Monomial, 3> parse_monomial_list(const std::string& s);

RunResult run(const Invocation& inv);

struct SweepSummary {
    Exp dmax = 0;
    bool countsOnly = false;
    int instances = 0;
    int mirrorSamples = 0;
    std::vector<InstanceReport> failures;
    std::vector<IdealParams> mirrorFailures;
    bool pass() const { return failures.empty() && mirrorFailures.empty(); }
};

/// Verifies every valid parameter set with d1,d2 <= dmax, skipping the
/// (d1,d2,u1,u2) <-> (d2,d1,u2,u1) mirror duplicates but re-deriving a
/// deterministic sample of mirrors to confirm the symmetry empirically.
/// Parallelism is capped by REESKIT_THREADS.
SweepSummary run_sweep(Exp dmax, bool countsOnly, int mirrorStride = 37, Exp tbound = 0);

std::string sweep_to_text(const SweepSummary& s);
std::string sweep_to_json(const SweepSummary& s);

} // namespace reeskit

#endif
