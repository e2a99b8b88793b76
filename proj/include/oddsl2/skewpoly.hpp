#pragma once

#include <map>
#include <string>
#include <vector>

#include "oddsl2/bigint.hpp"
#include "oddsl2/errors.hpp"

namespace oddsl2 {

using Exponents = std::vector<int>;

// A permutation of {1..n} in one-line notation.
class Permutation {
public:
    explicit Permutation(std::vector<int> one_line);
    static Permutation identity(int n);
    static Permutation transposition(int n, int i); // s_i = (i, i+1)

    int n() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; } // 1-based
    const std::vector<int>& one_line() const { return w_; }

    Permutation operator*(const Permutation& o) const; // (w*v)(i) = w(v(i))
    Permutation inverse() const;
    int length() const; // inversion count
    bool operator==(const Permutation& o) const { return w_ == o.w_; }
    bool operator<(const Permutation& o) const { return w_ < o.w_; }

    std::string to_string() const;

private:
    std::vector<int> w_;
};

// An element of the skew polynomial ring SPol_n: monomials x^alpha stored in
// the canonical order x_1^a1 ... x_n^an; reordering signs are applied by mul.
// |x_i| = 2 and p(x_i) = 1, so x^alpha has degree 2|alpha| and parity |alpha| mod 2.
class SkewPoly {
public:
    explicit SkewPoly(int n) : n_(n) {}
    static SkewPoly zero(int n) { return SkewPoly(n); }
    static SkewPoly one(int n);
    static SkewPoly variable(int n, int i); // x_i
    static SkewPoly monomial(int n, const Exponents& alpha, Int c = 1);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Int>& terms() const { return terms_; }

    SkewPoly operator+(const SkewPoly& o) const;
    SkewPoly operator-(const SkewPoly& o) const;
    SkewPoly operator-() const;
    SkewPoly operator*(const SkewPoly& o) const; // skew product
    SkewPoly times(const Int& c) const;
    bool operator==(const SkewPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const SkewPoly& o) const { return !(*this == o); }

    void add_term(const Exponents& alpha, const Int& c);

    std::string to_string() const;

private:
    void check_same(const SkewPoly& o) const;
    int n_;
    std::map<Exponents, Int> terms_;
};

// x^alpha * x^beta = (-1)^(sum_{i>j} alpha_i beta_j) x^(alpha+beta)
int skew_sign(const Exponents& alpha, const Exponents& beta);

// Multiplicative action w(x_i) = x_{w(i)}.
SkewPoly act(const Permutation& w, const SkewPoly& f);

// Odd divided difference by the recursive Leibniz rule.
SkewPoly oddpartial(int i, const SkewPoly& f);
// Same operator via the closed formula, with exact division by x_{i+1}^2 - x_i^2.
SkewPoly oddpartial_closed(int i, const SkewPoly& f);

bool is_odd_symmetric(const SkewPoly& f);

// Grammar: signed integer-weighted sums of products of tokens x<k>,
// e.g. "2*x1*x1*x2 - x2*x3". Whitespace-insensitive.
SkewPoly parse_skew(const std::string& src, int n);

} // namespace oddsl2
