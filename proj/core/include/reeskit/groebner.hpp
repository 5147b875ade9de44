#ifndef REESKIT_GROEBNER_HPP
#define REESKIT_GROEBNER_HPP

#include <string>
#include <vector>

#include "reeskit/generators.hpp"

namespace reeskit {

/// The minimal Groebner basis {g0} union G(R(I)) under the block order;
/// element 0 is always g0 = T1^d2*X0 - T0^d1*X2 and elements 1..r are the
/// normalized minimal generators in emission order.
struct GroebnerBasis {
    IdealParams params;
    std::vector<Binomial> elements;

    int r() const { return static_cast<int>(elements.size()) - 1; }
    const Monomial& lt(int j) const { return elements[j].lead(); }
    const Monomial& tt(int j) const { return elements[j].tail(); }
};

GroebnerBasis groebner_basis(const IdealParams& params);
GroebnerBasis groebner_basis(const IdealParams& params, const GeneratorRun& run);

/// Minimal generating set of the colon ideal
/// M_j = <lt(g_{j+1}),...,lt(g_r)> : <lt(g_j)>, in increasing X1-degree.
struct ColonIdealGens {
    int j;
    std::vector<Monomial> generators;
};

/// The index j >= 3 of the basis element whose leading term has X1-degree
/// delta; bijective from the X1-degree set minus {1} onto {3,...,r}.
int iota(const DeltaData& dd, Exp delta);

/// Closed-form G(M_j) (case split on j in {0,1,2} and on whether the
/// X1-degree of lt(g_j) is a running minimum or maximum).
ColonIdealGens colon_ideal_gens(const GroebnerBasis& gb, const DeltaData& dd, int j);

/// First-principles referee: quotients lcm(lt(g_j),lt(g_k))/lt(g_j) for all
/// k > j, minimalized by pairwise divisibility.
ColonIdealGens colon_ideal_gens_bruteforce(const GroebnerBasis& gb, int j);

std::string gb_to_text(const GroebnerBasis& gb);
std::string gb_to_json(const GroebnerBasis& gb);
std::string gb_to_cas(const GroebnerBasis& gb);
std::string colon_to_text(const GroebnerBasis& gb, const DeltaData& dd);
std::string colon_to_json(const GroebnerBasis& gb, const DeltaData& dd);

} // namespace reeskit

#endif
