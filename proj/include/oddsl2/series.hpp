#pragma once

#include <map>
#include <string>
#include <utility>

#include "oddsl2/scalar.hpp"

namespace oddsl2 {

// A power series in q with coefficients in Z[pi]/(pi^2-1), stored exactly
// up to and including q-degree `cutoff`. `min_exp` is a lower bound on the
// exponents that can occur; multiplication uses it to compute how far the
// product stays exact.
class TruncatedSeries {
public:
    using Key = std::pair<int, int>; // (q_exp, pi_exp)

    explicit TruncatedSeries(int cutoff, int min_exp = 0)
        : cutoff_(cutoff), min_exp_(min_exp) {}

    static TruncatedSeries zero(int cutoff) { return TruncatedSeries(cutoff); }
    static TruncatedSeries one(int cutoff);
    static TruncatedSeries from_scalar(const CoveringScalar& s, int cutoff);

    int cutoff() const { return cutoff_; }
    int min_exp() const { return min_exp_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Int>& terms() const { return terms_; }
    Int coeff(int q_exp, int pi_exp) const;

    void add_term(int q_exp, int pi_exp, const Int& c);

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    TruncatedSeries times_scalar(const CoveringScalar& s) const;
    // Multiply by the monomial c * pi^pi_exp * q^q_exp.
    TruncatedSeries shifted(int q_exp, int pi_exp, const Int& c = 1) const;

    // Exact-as-series division by a covering scalar whose lowest q-coefficient
    // is a unit of Z[pi]/(pi^2-1). Lowest-term-first long division.
    TruncatedSeries divided_by_scalar(const CoveringScalar& den) const;

    TruncatedSeries truncated(int new_cutoff) const;
    TruncatedSeries pow(int e) const;

    // Compare through degree `through` (both series must be exact that far).
    bool equal_through(const TruncatedSeries& o, int through) const;
    bool operator==(const TruncatedSeries& o) const;

    // Split into (pi^0 part, pi^1 part) as plain q-series maps.
    std::map<int, Int> even_part() const;
    std::map<int, Int> pi_part() const;

    std::string to_string() const;

private:
    int cutoff_;
    int min_exp_;
    std::map<Key, Int> terms_;
};

// Expansion of (1 - pi^pi_power q^(2s))^-1 through `cutoff`; requires s >= 1.
TruncatedSeries geom_inverse(int s, int pi_power, int cutoff);

} // namespace oddsl2
