#ifndef REESKIT_RESOLUTION_HPP
#define REESKIT_RESOLUTION_HPP

#include <map>
#include <string>
#include <vector>

#include "reeskit/groebner.hpp"
#include "reeskit/rees_graph.hpp"

namespace reeskit {

/// v(a,b) = lcm(lt(g_a), lt(g_b)) / lt(g_a).
Monomial v_of(const GroebnerBasis& gb, int a, int b);
/// w(a,b) = gcd(tt(g_a), tt(g_b)).
Monomial w_of(const GroebnerBasis& gb, int a, int b);

struct SignedMonomial {
    int sign; // +1 or -1
    Monomial m;

    friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

/// First syzygy s(j,k) = v(j,k) e_j - v(k,j) e_k + w(j,k) e_h over the basis
/// e_0..e_r, one per directed edge (j->k) of the augmented graph, with h the
/// second node targeting k.
struct FirstSyzygy {
    Edge edge;
    std::vector<std::pair<int, SignedMonomial>> entries; // exactly 3, formula order
};

/// Second syzygy s(j,k,l) = v(h,k) f(j,k) - v(l,k) f(j,l) + v(l,j) f(k,l)
/// - w(j,k) f(h,k), one per triangle of the augmented graph.
struct SecondSyzygy {
    Triangle tri;
    std::vector<std::pair<Edge, SignedMonomial>> entries; // exactly 4, formula order
};

std::vector<FirstSyzygy> first_syzygies(const GroebnerBasis& gb, const ReesGraph& augmented);
std::vector<SecondSyzygy> second_syzygies(const GroebnerBasis& gb, const ReesGraph& augmented);

/// Sparse matrix with labelled rows/columns. Cells hold a signed-monomial
/// sum; differential cells have one term, generator-row cells two.
struct MonomialMatrix {
    std::vector<std::string> rowLabels, colLabels;
    std::map<std::pair<int, int>, std::vector<SignedMonomial>> cells;

    int rows() const { return static_cast<int>(rowLabels.size()); }
    int cols() const { return static_cast<int>(colLabels.size()); }
};

struct FreeResolution {
    IdealParams params;
    GroebnerBasis gb;
    ReesGraph graph; // augmented for the non-minimal resolution, plain after minimalization
    std::vector<FirstSyzygy> firstSyz;
    std::vector<SecondSyzygy> secondSyz;
    MonomialMatrix phi0, phi1, phi2;
    std::array<int, 3> ranks{};
    bool minimal = false;
};

/// The resolution of the augmented graph: ranks (r+1, 2r-2, r-2).
FreeResolution build_resolution(const IdealParams& params);

/// Drops g0, the edges (0->2), (1->2) and the triangle (1,2,3); checks that
/// every surviving entry is an unchanged restriction. Ranks become
/// (r, 2(r-2), r-3).
FreeResolution minimalize(const FreeResolution& res);

struct ComplexReport {
    bool pass = true;
    int entriesChecked = 0;
    std::vector<std::string> failures;
};

/// Expands phi0*phi1 and phi1*phi2 as integer-coefficient polynomials and
/// reports any entry that does not vanish identically.
ComplexReport verify_complex(const FreeResolution& res);

struct BettiNumbers {
    int b0, b1, b2, pd;
};

BettiNumbers betti_numbers(const IdealParams& params);

std::string resolution_to_text(const FreeResolution& res);
std::string resolution_to_json(const FreeResolution& res);
std::string resolution_to_cas(const FreeResolution& res);

// Integer-coefficient accumulator used by the verification routines.
using Polynomial = std::map<Monomial, long long, BlockLess>;

void poly_add(Polynomial& p, const Monomial& m, long long c);
/// coeff * (lead - tail) added into p.
void poly_add_binomial(Polynomial& p, const SignedMonomial& coeff, const Binomial& b);

} // namespace reeskit

#endif
