#ifndef REESKIT_MONOMIAL_HPP
#define REESKIT_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "reeskit/errors.hpp"

namespace reeskit {

using Exp = std::int64_t;

/// Variables of the ambient ring S = K[T0,T1,X0,X1,X2], in storage order.
enum class Var : int { T0 = 0, T1 = 1, X0 = 2, X1 = 3, X2 = 4 };

inline constexpr int kNumVars = 5;

Exp checked_add(Exp a, Exp b);
Exp checked_mul(Exp a, Exp b);

/// A monomial of S as an exponent vector. Immutable value type; exponents are
/// checked 64-bit non-negative integers and every arithmetic operation fails
/// hard on overflow instead of wrapping.
class Monomial {
public:
    /// The empty product, 1.
    Monomial() = default;

    static Monomial make(Exp t0, Exp t1, Exp x0, Exp x1, Exp x2);
    static Monomial variable(Var v, Exp e = 1);

    Exp exp(Var v) const { return e_[static_cast<int>(v)]; }
    Exp exp(int i) const { return e_[i]; }
    const std::array<Exp, kNumVars>& exponents() const { return e_; }

    Exp total_degree() const;
    /// Total degree of the X-block (the z-grading of the Rees ideal).
    Exp x_degree() const;
    Exp t_degree() const;

    bool is_one() const;
    bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

private:
    std::array<Exp, kNumVars> e_{0, 0, 0, 0, 0};
};

/// Block term order: X-blocks compared first by degrevlex with X2 < X0 < X1,
/// ties broken by degrevlex on the T-block with T0 < T1. Total on monomials.
std::strong_ordering cmp_block_order(const Monomial& a, const Monomial& b);

inline bool block_less(const Monomial& a, const Monomial& b) {
    return cmp_block_order(a, b) == std::strong_ordering::less;
}
inline bool block_greater(const Monomial& a, const Monomial& b) {
    return cmp_block_order(a, b) == std::strong_ordering::greater;
}

/// Comparator usable as a std::map key order (descending would be unusual;
/// this is ascending in the block order).
struct BlockLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return block_less(a, b); }
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// Componentwise difference; throws NotDivisibleError unless b | a.
Monomial divide(const Monomial& a, const Monomial& b);

inline bool coprime(const Monomial& a, const Monomial& b) { return gcd(a, b).is_one(); }

/// Parameters (d1, d2, u1, u2) of the zero-dimensional reduction of a
/// tri-generated monomial ideal I = <T0^d1, T0^u1*T1^u2, T1^d2>, together
/// with the exponents of the extracted common divisor h = T0^mu0 * T1^mu1.
struct IdealParams {
    Exp d1, d2, u1, u2;
    Exp mu0 = 0, mu1 = 0;

    IdealParams(Exp d1_, Exp d2_, Exp u1_, Exp u2_, Exp mu0_ = 0, Exp mu1_ = 0);

    friend bool operator==(const IdealParams& a, const IdealParams& b) {
        return a.d1 == b.d1 && a.d2 == b.d2 && a.u1 == b.u1 && a.u2 == b.u2 &&
               a.mu0 == b.mu0 && a.mu1 == b.mu1;
    }
};

/// The toric map psi: X0 -> T0^d1, X1 -> T0^u1*T1^u2, X2 -> T1^d2,
/// identity on the T-block.
Monomial psi(const Monomial& m, const IdealParams& params);

/// An ordered binomial lead - tail with lead strictly greater than tail under
/// the block order. Construct through normalized().
class Binomial {
public:
    /// Orders the pair so lead > tail; throws EqualTermsError if a == b.
    static Binomial normalized(const Monomial& a, const Monomial& b);

    const Monomial& lead() const { return lead_; }
    const Monomial& tail() const { return tail_; }

    friend bool operator==(const Binomial& a, const Binomial& b) {
        return a.lead_ == b.lead_ && a.tail_ == b.tail_;
    }
    friend bool operator!=(const Binomial& a, const Binomial& b) { return !(a == b); }

    /// Strict weak order for deterministic sets of binomials.
    friend bool operator<(const Binomial& a, const Binomial& b);

private:
    Binomial(Monomial lead, Monomial tail) : lead_(std::move(lead)), tail_(std::move(tail)) {}
    Monomial lead_, tail_;
};

inline Binomial normalize(const Monomial& a, const Monomial& b) { return Binomial::normalized(a, b); }

/// True iff psi(lead) == psi(tail) and both sides have the same X-degree.
bool is_kernel_binomial(const Binomial& b, const IdealParams& params);

/// Text format: factors T0^a*T1^b*X0^c*X1^d*X2^e, exponent-0 factors omitted,
/// exponent 1 written without ^, the empty product rendered as 1.
std::string to_string(const Monomial& m);
/// lead-tail in the monomial text format.
std::string to_string(const Binomial& b);

} // namespace reeskit

#endif
