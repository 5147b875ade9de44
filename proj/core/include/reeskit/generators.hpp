#ifndef REESKIT_GENERATORS_HPP
#define REESKIT_GENERATORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "reeskit/monomial.hpp"

namespace reeskit {

/// Delta-sequence data of a parameter set: a_i^(k) = u_k*i mod d_k,
/// b_i^(k) = floor(u_k*i/d_k), the running-extremum index sets, the period
/// bound q, the first index iStop with equal floor-differences, and
/// t = min(iStop, q). Sequences and index sets cover 1..t.
struct DeltaData {
    std::vector<Exp> a1, b1, a2, b2; // value for index i at position i-1
    std::vector<int> deltaMax1, deltaMin1, deltaMax2, deltaMin2;
    int q = 0;
    int iStop = 0;
    int t = 0;
};

DeltaData delta_data(const IdealParams& params);

enum class GenKind { Upper, Lower };

inline const char* to_string(GenKind k) { return k == GenKind::Upper ? "upper" : "lower"; }

/// One row of the algorithm trace (the layout of the worked tables): the
/// sequence values at step j, the extremum columns filled only when the
/// running extremum updates, and the binomials emitted at this step in the
/// sign the algorithm writes them.
struct TraceRow {
    int j = 0;
    Exp a1 = 0, b1 = 0, a2 = 0, b2 = 0;
    std::optional<Exp> max1, max2, min1, min2;
    std::vector<std::string> emitted;
};

/// A minimal generator of the Rees ideal as emitted by the algorithm:
/// 1-based position, emission step, upper/lower kind, the binomial both in
/// the sign the algorithm writes it (paperFirst - paperSecond) and
/// normalized under the block order, plus the trace row it came from.
struct GeneratorRecord {
    int index = 0;
    int step = 0;
    GenKind kind = GenKind::Upper;
    Monomial paperFirst, paperSecond;
    Binomial binomial;
    TraceRow traceRow;
};

struct GeneratorRun {
    IdealParams params;
    std::vector<GeneratorRecord> records;
    std::vector<TraceRow> rows;
};

/// Single-sequence trace row of the equigenerated specialization.
struct PlaneTraceRow {
    int j = 0;
    Exp a = 0, b = 0;
    std::optional<Exp> max, min;
    std::vector<std::string> emitted;
};

struct PlaneCurveRun {
    Exp d = 0, u = 0;
    std::vector<GeneratorRecord> records;
    std::vector<PlaneTraceRow> rows;
};

/// Validates minimal tri-generation of <m1,m2,m3> in K[T0,T1], divides out
/// the common factor h and returns the sorted parameters. Throws
/// NotMinimallyGeneratedError if one input divides another and
/// NotTriGeneratedShapeError if the reduced ideal is not of the required
/// shape.
IdealParams normalize_input(const Monomial& m1, const Monomial& m2, const Monomial& m3);

/// The main algorithm: minimal generating set of the Rees ideal of
/// <T0^d1, T0^u1*T1^u2, T1^d2>, in emission order, with the full trace.
GeneratorRun minimal_generators(const IdealParams& params);

/// Equigenerated specialization (d1 = d2 = d, u1 = u, u2 = d-u) driven by a
/// single sequence. Emits the same binomials and kinds as the main algorithm
/// on (d, d, u, d-u).
PlaneCurveRun minimal_generators_plane_curve(Exp d, Exp u);

/// The loop indices at which the main algorithm emits generators, computed
/// by the last-maximum-plus-last-minimum jump recurrence without visiting
/// the steps in between.
std::vector<int> skip_optimized_indices(const IdealParams& params);

/// Smallest (k, k1, k2) with psi(X1^k) = psi(X0^k1 * X2^k2).
struct PurePowerRelation {
    Exp k = 0, k1 = 0, k2 = 0;
};

PurePowerRelation pure_power_relation(const IdealParams& params);

/// Trace exports: tab-separated table matching the worked-table layout, and
/// a JSON array of trace rows. Both byte-stable.
std::string trace_to_tsv(const GeneratorRun& run);
std::string trace_to_json(const GeneratorRun& run);
std::string trace_to_tsv(const PlaneCurveRun& run);
std::string trace_to_json(const PlaneCurveRun& run);

std::string generators_to_text(const GeneratorRun& run);
std::string generators_to_json(const GeneratorRun& run);

} // namespace reeskit

#endif
