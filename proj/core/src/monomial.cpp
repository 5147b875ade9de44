#include "reeskit/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace reeskit {

Exp checked_add(Exp a, Exp b) {
    Exp r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("exponent addition overflows 64-bit range");
    return r;
}

Exp checked_mul(Exp a, Exp b) {
    Exp r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("exponent multiplication overflows 64-bit range");
    return r;
}

Monomial Monomial::make(Exp t0, Exp t1, Exp x0, Exp x1, Exp x2) {
    Monomial m;
    m.e_ = {t0, t1, x0, x1, x2};
    for (Exp e : m.e_)
        if (e < 0)
            throw OverflowError("monomial exponents must be non-negative");
    return m;
}

Monomial Monomial::variable(Var v, Exp e) {
    if (e < 0)
        throw OverflowError("monomial exponents must be non-negative");
    Monomial m;
    m.e_[static_cast<int>(v)] = e;
    return m;
}

Exp Monomial::total_degree() const {
    Exp d = 0;
    for (Exp e : e_) d = checked_add(d, e);
    return d;
}

Exp Monomial::x_degree() const {
    return checked_add(checked_add(e_[2], e_[3]), e_[4]);
}

Exp Monomial::t_degree() const {
    return checked_add(e_[0], e_[1]);
}

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](Exp e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    for (int i = 0; i < kNumVars; ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e_[i] = checked_add(e_[i], other.e_[i]);
    return r;
}

namespace {

// Degrevlex on one block. vars lists the block's variable indices from the
// smallest to the largest in the order; on a total-degree tie the first
// differing exponent in that scan decides, smaller exponent wins.
std::strong_ordering degrevlex(const Monomial& a, const Monomial& b,
                               std::initializer_list<int> vars) {
    Exp da = 0, db = 0;
    for (int i : vars) {
        da += a.exp(i);
        db += b.exp(i);
    }
    if (da != db) return da <=> db;
    for (int i : vars) {
        if (a.exp(i) != b.exp(i)) {
            return a.exp(i) < b.exp(i) ? std::strong_ordering::greater
                                       : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

} // namespace

std::strong_ordering cmp_block_order(const Monomial& a, const Monomial& b) {
    // X-block first: X2 < X0 < X1.
    auto x = degrevlex(a, b, {static_cast<int>(Var::X2), static_cast<int>(Var::X0),
                              static_cast<int>(Var::X1)});
    if (x != std::strong_ordering::equal) return x;
    // then T-block: T0 < T1.
    return degrevlex(a, b, {static_cast<int>(Var::T0), static_cast<int>(Var::T1)});
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::array<Exp, kNumVars> e;
    for (int i = 0; i < kNumVars; ++i) e[i] = std::max(a.exp(i), b.exp(i));
    return Monomial::make(e[0], e[1], e[2], e[3], e[4]);
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    std::array<Exp, kNumVars> e;
    for (int i = 0; i < kNumVars; ++i) e[i] = std::min(a.exp(i), b.exp(i));
    return Monomial::make(e[0], e[1], e[2], e[3], e[4]);
}

Monomial divide(const Monomial& a, const Monomial& b) {
    std::array<Exp, kNumVars> e;
    for (int i = 0; i < kNumVars; ++i) {
        e[i] = a.exp(i) - b.exp(i);
        if (e[i] < 0)
            throw NotDivisibleError("monomial division " + to_string(a) + " / " + to_string(b) +
                                    " has a negative exponent");
    }
    return Monomial::make(e[0], e[1], e[2], e[3], e[4]);
}

IdealParams::IdealParams(Exp d1_, Exp d2_, Exp u1_, Exp u2_, Exp mu0_, Exp mu1_)
    : d1(d1_), d2(d2_), u1(u1_), u2(u2_), mu0(mu0_), mu1(mu1_) {
    if (!(0 < u1 && u1 < d1 && 0 < u2 && u2 < d2))
        throw InvalidParamsError("IdealParams requires 0 < u1 < d1 and 0 < u2 < d2, got (" +
                                 std::to_string(d1) + "," + std::to_string(d2) + "," +
                                 std::to_string(u1) + "," + std::to_string(u2) + ")");
    if (mu0 < 0 || mu1 < 0)
        throw InvalidParamsError("common factor exponents must be non-negative");
}

Monomial psi(const Monomial& m, const IdealParams& p) {
    Exp t0 = checked_add(m.exp(Var::T0),
                         checked_add(checked_mul(p.d1, m.exp(Var::X0)),
                                     checked_mul(p.u1, m.exp(Var::X1))));
    Exp t1 = checked_add(m.exp(Var::T1),
                         checked_add(checked_mul(p.u2, m.exp(Var::X1)),
                                     checked_mul(p.d2, m.exp(Var::X2))));
    return Monomial::make(t0, t1, 0, 0, 0);
}

Binomial Binomial::normalized(const Monomial& a, const Monomial& b) {
    auto c = cmp_block_order(a, b);
    if (c == std::strong_ordering::equal)
        throw EqualTermsError("binomial terms coincide: " + to_string(a));
    return c == std::strong_ordering::greater ? Binomial(a, b) : Binomial(b, a);
}

bool operator<(const Binomial& a, const Binomial& b) {
    auto c = cmp_block_order(a.lead_, b.lead_);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return block_less(a.tail_, b.tail_);
}

bool is_kernel_binomial(const Binomial& b, const IdealParams& params) {
    return b.lead().x_degree() == b.tail().x_degree() &&
           psi(b.lead(), params) == psi(b.tail(), params);
}

std::string to_string(const Monomial& m) {
    static const char* names[kNumVars] = {"T0", "T1", "X0", "X1", "X2"};
    std::string out;
    for (int i = 0; i < kNumVars; ++i) {
        Exp e = m.exp(i);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += names[i];
        if (e != 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const Binomial& b) {
    return to_string(b.lead()) + "-" + to_string(b.tail());
}

} // namespace reeskit
