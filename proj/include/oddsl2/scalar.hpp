#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "oddsl2/bigint.hpp"
#include "oddsl2/errors.hpp"

namespace oddsl2 {

// An element of the covering ground ring Z[q,q^-1,pi]/(pi^2-1).
//
// Terms are keyed by (q exponent, pi exponent) with pi exponent reduced
// mod 2; zero coefficients are never stored.
class CoveringScalar {
public:
    using Key = std::pair<int, int>; // (q_exp, pi_exp in {0,1})

    CoveringScalar() = default;

    static CoveringScalar zero() { return CoveringScalar(); }
    static CoveringScalar one() { return integer(1); }
    static CoveringScalar integer(Int c);
    // c * pi^pi_exp * q^q_exp
    static CoveringScalar monomial(Int c, int q_exp, int pi_exp);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Int>& terms() const { return terms_; }
    Int coeff(int q_exp, int pi_exp) const;

    CoveringScalar operator+(const CoveringScalar& o) const;
    CoveringScalar operator-(const CoveringScalar& o) const;
    CoveringScalar operator-() const;
    CoveringScalar operator*(const CoveringScalar& o) const;
    CoveringScalar& operator+=(const CoveringScalar& o) { return *this = *this + o; }
    CoveringScalar& operator-=(const CoveringScalar& o) { return *this = *this - o; }
    CoveringScalar& operator*=(const CoveringScalar& o) { return *this = *this * o; }
    bool operator==(const CoveringScalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const CoveringScalar& o) const { return !(*this == o); }

    // The bar involution q -> pi q^-1, pi -> pi.
    CoveringScalar bar() const;

    // pi |-> pi_value (+1 or -1): a Laurent polynomial, q_exp -> coefficient.
    std::map<int, Int> specialize_pi(int pi_value) const;
    // Additionally evaluate at a rational q (q must be nonzero if negative exponents occur).
    Rat specialize(int pi_value, const Rat& q_value) const;

    // True iff every stored coefficient is >= 0.
    bool is_nonnegative() const;

    int min_q_exp() const; // requires nonzero
    int max_q_exp() const; // requires nonzero

    // Exact division: returns the quotient if num == quot * den, otherwise nullopt.
    // The divisor's leading q-coefficient must be a unit of Z[pi]/(pi^2-1).
    static std::optional<CoveringScalar> try_divide(const CoveringScalar& num,
                                                    const CoveringScalar& den);
    // Throws NonExactDivision when division is not exact.
    CoveringScalar divided_by(const CoveringScalar& den) const;

    std::string to_string() const;

private:
    void add_term(int q_exp, int pi_exp, const Int& c);
    std::map<Key, Int> terms_;
};

// The (q,pi)-integer [n]; negative n follows [-n] = -pi^n [n].
CoveringScalar qint(long n);
// [n] computed by polynomial long division of (pi q)^n - q^-n by pi q - q^-1.
// Cross-check implementation, not used on hot paths.
CoveringScalar qint_by_division(long n);
// [n]! for n >= 0.
CoveringScalar qfact(long n);
// [n; a] by the product formula with exact division by [a]!; n may be negative.
CoveringScalar qbinom(long n, long a);

} // namespace oddsl2
