#ifndef REESKIT_ORACLE_HPP
#define REESKIT_ORACLE_HPP

#include <string>
#include <vector>

#include "reeskit/resolution.hpp"

namespace reeskit {

/// Layer t of the brute-force enumeration: the distinct psi-images of all
/// degree-t products of the three ideal generators, lex-sorted descending by
/// T0-degree, each with its preimage exponent triples (a,b,c) over
/// (X0,X1,X2) sorted by descending X1-exponent.
struct DegreeLayer {
    Exp t;
    struct Product {
        Monomial image;
        std::vector<std::array<Exp, 3>> preimages;
        bool unique() const { return preimages.size() == 1; }
    };
    std::vector<Product> products;
};

DegreeLayer degree_layer(const IdealParams& params, Exp t);

/// How consecutive_relations resolves a product with several preimages:
/// Strict throws NonUniquePreimageError, PurePower picks the preimage with
/// the largest X1-exponent.
enum class PreimagePolicy { Strict, PurePower };

/// The relation s * g_i - s' * g_{i+1} between lex-consecutive layer
/// elements, lifted to a kernel binomial through the chosen preimages.
struct ConsecutiveRelation {
    Exp t;
    int i; // 1-based index of the left element of the pair
    Monomial s, sPrime;
    Binomial binomial;
};

std::vector<ConsecutiveRelation> consecutive_relations(const IdealParams& params, Exp t,
                                                       PreimagePolicy policy = PreimagePolicy::Strict);

/// Generic slow Buchberger closure for pure-difference binomials under the
/// block order. Remainders of binomials stay binomials here; the runtime
/// check on the input guards against misuse.
std::vector<Binomial> buchberger_binomial(std::vector<Binomial> basis);

/// Normal form of a monomial under lead->tail rewriting by the basis.
Monomial normal_form(Monomial m, const std::vector<Binomial>& basis);

bool ideal_membership(const Binomial& f, const std::vector<Binomial>& basis);

/// Referee for the main algorithm: collects every coprime candidate binomial
/// of layers 1..tBound (consecutive relations plus the pure-power collision
/// binomials), then keeps exactly the ones that are not generated by the
/// previously kept elements together with the remaining candidates of their
/// own layer.
std::vector<Binomial> brute_force_minimal_generators(const IdealParams& params, Exp tBound);

struct GbReport {
    bool pass = true;
    int pairs = 0;
    std::vector<std::string> failures;
};

/// Reduces every S-polynomial of pairs in the basis modulo the basis and
/// checks pairwise non-divisibility of leading terms.
GbReport verify_gb_spolys(const GroebnerBasis& gb);
GbReport verify_gb_spolys(const std::vector<Binomial>& basis);

bool verify_syzygy_identity(const FirstSyzygy& s, const GroebnerBasis& gb);
bool verify_syzygy_identity(const SecondSyzygy& s, const std::vector<FirstSyzygy>& firstSyz);

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct InstanceReport {
    IdealParams params;
    bool pass = true;
    std::vector<CheckResult> checks;
};

struct VerifyOptions {
    Exp tBound = 0;        // 0: use t+1, one layer past the stopping bound
    bool countsOnly = false;
};

/// Runs every theorem-backed check on one parameter set and reports each as
/// a named pass/fail entry.
InstanceReport verify_instance(const IdealParams& params, const VerifyOptions& opt = {});

std::string report_to_text(const InstanceReport& rep);
std::string report_to_json(const InstanceReport& rep);

} // namespace reeskit

#endif
