#pragma once

#include <map>
#include <string>
#include <vector>

#include "oddsl2/series.hpp"

namespace oddsl2 {

// Coefficient rings for the bubble algebra's graded dimension series:
// free rank over Z (even-index generators only), a field of characteristic 2
// (no restriction), or characteristic other than 2 (odd generators square to
// zero).
enum class XiMode { integer_free_rank, char2, char_not_2 };

XiMode xi_mode_from_string(const std::string& s);
std::string to_string(XiMode m);

// Product-formula expansion of the graded dimension series of the bubble
// algebra through `cutoff`.
TruncatedSeries xi_series(XiMode mode, int cutoff);
// Independent oracle: count monomials in the generators z_a (degree 2a,
// parity a) per (degree, parity) under the mode's restrictions.
TruncatedSeries xi_series_by_enumeration(XiMode mode, int cutoff);

// A polynomial in the formal real-bubble generators r_1, r_2, ... where r_m
// has degree 2m and parity m; monomials are kept with ascending indices and
// supercommutative swap signs.
class RPoly {
public:
    using Monomial = std::vector<int>; // ascending generator indices

    RPoly() = default;
    static RPoly zero() { return RPoly(); }
    static RPoly one();
    static RPoly generator(int a); // r_a

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    void add_term(const Monomial& m, const Int& c);

    RPoly operator+(const RPoly& o) const;
    RPoly operator-(const RPoly& o) const;
    RPoly operator*(const RPoly& o) const;
    RPoly times(const Int& c) const;
    bool operator==(const RPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const RPoly& o) const { return !(*this == o); }

    // Forget signs/parities: coefficients of the commutative specialization.
    std::map<Monomial, Int> commutative_image() const;

    std::string to_string() const;

private:
    std::map<Monomial, Int> terms_;
};

// Solve the defining recursion sum_{f+g=m} (-1)^g B_f r_g = (-1)^m delta_{m,0}
// (r_0 = 1) for B_0..B_m_max.
std::vector<RPoly> solve_fake_bubbles(int m_max);

// Graded dimension enumerator for the 2-hom spaces indexed by signed
// sequences. Sequences are vectors over {+1, -1}; lower boundary first.
struct HomDims {
    TruncatedSeries even; // coefficient of pi^0
    TruncatedSeries odd;  // coefficient of pi^1
    TruncatedSeries full; // combined series with pi powers
};

HomDims hom_dim_series(const std::vector<int>& lower, const std::vector<int>& upper, int lam,
                       XiMode mode, int cutoff);

// Degree and parity of a single minimal diagram, exposed for validation.
struct DiagramWeight {
    int degree;
    int parity;
};
// matching: pairs of endpoint ids; lower endpoints are 0..m-1, upper are
// m..m+k-1, in left-to-right order.
DiagramWeight minimal_diagram_weight(const std::vector<int>& lower, const std::vector<int>& upper,
                                     int lam, const std::vector<std::pair<int, int>>& matching);

// Degree/parity of a dotted bubble computed through the slice engine:
// clockwise or counterclockwise circle with `dots` dots, rightmost region lam.
DiagramWeight bubble_weight(bool clockwise, int dots, int lam);

// Consistency checks forced by the characteristic-2 basis theorem: rotating
// the rightmost lower endpoint to the upper boundary shifts the series by a
// fixed monomial.
struct AdjunctionCheck {
    std::string description;
    bool passed;
};
std::vector<AdjunctionCheck> char2_consistency(const std::vector<int>& lower,
                                               const std::vector<int>& upper, int lam, int cutoff);

std::vector<int> parse_signed_sequence(const std::string& s);

} // namespace oddsl2
