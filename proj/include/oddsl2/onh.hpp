#pragma once

#include <map>
#include <string>
#include <vector>

#include "oddsl2/series.hpp"
#include "oddsl2/skewpoly.hpp"

namespace oddsl2 {

// A word in the generators of ONH_n: letters x_i (1<=i<=n) and d_i (1<=i<=n-1),
// left-to-right juxtaposition is operator composition (rightmost acts first).
struct OnhLetter {
    bool is_x;
    int idx;
    bool operator==(const OnhLetter& o) const { return is_x == o.is_x && idx == o.idx; }
};
using OnhWord = std::vector<OnhLetter>;

inline int word_degree(const OnhWord& w) {
    int d = 0;
    for (const auto& l : w) d += l.is_x ? 2 : -2;
    return d;
}
inline int word_parity(const OnhWord& w) { return static_cast<int>(w.size()) % 2; }

// Lexicographically smallest reduced expression, built by repeatedly taking
// the smallest left descent. Fixes the sign of each basis element d_w.
std::vector<int> canonical_reduced_word(const Permutation& w);

struct OnhKey {
    Permutation w;
    Exponents alpha;
    bool operator<(const OnhKey& o) const {
        if (w < o.w) return true;
        if (o.w < w) return false;
        return alpha < o.alpha;
    }
    bool operator==(const OnhKey& o) const { return w == o.w && alpha == o.alpha; }
};

// An element of ONH_n in the basis {d_w x^alpha}, each d_w taken with the
// canonical reduced word of w.
class OnhElement {
public:
    explicit OnhElement(int n) : n_(n) {}
    static OnhElement zero(int n) { return OnhElement(n); }
    static OnhElement one(int n);
    static OnhElement basis(int n, const Permutation& w, const Exponents& alpha, Int c = 1);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<OnhKey, Int>& terms() const { return terms_; }
    void add_term(const OnhKey& k, const Int& c);

    OnhElement operator+(const OnhElement& o) const;
    OnhElement operator-(const OnhElement& o) const;
    OnhElement times(const Int& c) const;
    bool operator==(const OnhElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const OnhElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    int n_;
    std::map<OnhKey, Int> terms_;
};

// Rewrite a word (or linear combination) to the normal form sum c d_w x^alpha.
OnhElement normal_form(int n, const OnhWord& word);
OnhElement normal_form(int n, const std::vector<std::pair<Int, OnhWord>>& combo);

OnhElement onh_mul(const OnhElement& a, const OnhElement& b);

// e_n = d_{w_0} x^delta with delta = (n-1, ..., 1, 0).
OnhElement e_idempotent(int n);

// Faithful action on SPol_n.
SkewPoly onh_act(int n, const OnhWord& word, const SkewPoly& f);
SkewPoly onh_act(const OnhElement& e, const SkewPoly& f);

// Graded dimension of ONH_n from the basis: sum_w (pi q^-2)^l(w) (1-pi q^2)^-n.
TruncatedSeries graded_dim_onh(int n, int cutoff);
// Graded dimension of the left ideal ONH_n * e, degree by degree, by ranks
// of the span {b e : b basis word of that degree} over the rationals.
TruncatedSeries graded_dim_left_ideal(const OnhElement& e, int cutoff);

// All permutations of S_n.
std::vector<Permutation> symmetric_group(int n);
// Basis keys (w, alpha) of Z-degree d.
std::vector<OnhKey> onh_basis_of_degree(int n, int d);

// Rank over Q of an integer matrix given by rows.
int rank_of_int_matrix(std::vector<std::vector<Int>> rows);

// Whitespace-separated letters like "x1 d2 x1".
OnhWord parse_onh_word(const std::string& src, int n);
std::string onh_word_to_string(const OnhWord& w);

} // namespace oddsl2
