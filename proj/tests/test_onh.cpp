#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oddsl2/onh.hpp"

using namespace oddsl2;

namespace {

OnhWord W(std::initializer_list<std::pair<char, int>> ls) {
    OnhWord w;
    for (auto [t, i] : ls) w.push_back(OnhLetter{t == 'x', i});
    return w;
}

std::vector<SkewPoly> monomials_up_to(int n, int max_total) {
    std::vector<SkewPoly> out;
    for (int d = 0; d <= max_total; ++d)
        for (const auto& key : onh_basis_of_degree(n, 2 * d))
            if (key.w == Permutation::identity(n)) out.push_back(SkewPoly::monomial(n, key.alpha));
    return out;
}

} // namespace

TEST_CASE("canonical reduced words are lex-smallest") {
    // w0 in S_3 is [3 2 1]; its reduced words are 121 and 212
    Permutation w0({3, 2, 1});
    CHECK(canonical_reduced_word(w0) == std::vector<int>{1, 2, 1});
    CHECK(canonical_reduced_word(Permutation::identity(3)).empty());
    CHECK(canonical_reduced_word(Permutation::transposition(4, 2)) == std::vector<int>{2});
}

TEST_CASE("operator action worked examples") {
    const int n = 2;
    SkewPoly f = SkewPoly::monomial(n, {2, 1});
    CHECK(onh_act(n, W({{'d', 1}}), f) == SkewPoly::monomial(n, {1, 1}));
    CHECK(onh_act(n, W({{'x', 1}}), SkewPoly::one(n)) == SkewPoly::variable(n, 1));
    CHECK(onh_act(n, W({{'d', 1}, {'x', 1}}), SkewPoly::one(n)) == SkewPoly::one(n));
}

TEST_CASE("normal form frozen examples") {
    const int n = 2;
    CHECK(normal_form(n, W({{'d', 1}, {'d', 1}})).is_zero());
    // x2 d1 = 1 - d1 x1
    OnhElement nf = normal_form(n, W({{'x', 2}, {'d', 1}}));
    OnhElement expect = OnhElement::one(n) -
                        OnhElement::basis(n, Permutation::transposition(n, 1), {1, 0});
    CHECK(nf == expect);
}

TEST_CASE("braid words normalize to +d_w0") {
    const int n = 3;
    OnhElement a = normal_form(n, W({{'d', 1}, {'d', 2}, {'d', 1}}));
    OnhElement b = normal_form(n, W({{'d', 2}, {'d', 1}, {'d', 2}}));
    OnhElement expect = OnhElement::basis(n, Permutation({3, 2, 1}), {0, 0, 0});
    CHECK(a == expect);
    CHECK(b == expect);
    // both act identically on low-degree monomials
    for (const auto& m : monomials_up_to(n, 3))
        CHECK(onh_act(n, W({{'d', 1}, {'d', 2}, {'d', 1}}), m) ==
              onh_act(n, W({{'d', 2}, {'d', 1}, {'d', 2}}), m));
}

TEST_CASE("normal form is sound and idempotent on random words") {
    std::mt19937 rng(99);
    for (int n = 2; n <= 4; ++n) {
        std::uniform_int_distribution<int> len(1, 8), pick(0, 2 * n - 2);
        auto monos = monomials_up_to(n, 3);
        for (int t = 0; t < 40; ++t) {
            OnhWord w;
            int L = len(rng);
            for (int i = 0; i < L; ++i) {
                int p = pick(rng);
                if (p < n)
                    w.push_back(OnhLetter{true, p + 1});
                else
                    w.push_back(OnhLetter{false, p - n + 1});
            }
            OnhElement nf = normal_form(n, w);
            for (const auto& m : monos) CHECK(onh_act(n, w, m) == onh_act(nf, m));
            // completeness: re-normalizing the normal form is the identity
            std::vector<std::pair<Int, OnhWord>> combo;
            for (const auto& [k, c] : nf.terms()) {
                OnhWord kw;
                for (int i : canonical_reduced_word(k.w)) kw.push_back(OnhLetter{false, i});
                for (std::size_t v = 0; v < k.alpha.size(); ++v)
                    for (int r = 0; r < k.alpha[v]; ++r)
                        kw.push_back(OnhLetter{true, static_cast<int>(v) + 1});
                combo.emplace_back(c, std::move(kw));
            }
            CHECK(normal_form(n, combo) == nf);
        }
    }
}

TEST_CASE("all relation families normalize to zero") {
    for (int n = 2; n <= 4; ++n) {
        auto zero = [&](std::vector<std::pair<Int, OnhWord>> combo) {
            return normal_form(n, combo).is_zero();
        };
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                // x_i x_j + x_j x_i = 0
                CHECK(zero({{1, W({{'x', i}, {'x', j}})}, {1, W({{'x', j}, {'x', i}})}}));
            }
        for (int i = 1; i < n; ++i) {
            // d_i^2 = 0
            CHECK(zero({{1, W({{'d', i}, {'d', i}})}}));
            for (int j = 1; j < n; ++j)
                if (std::abs(i - j) > 1)
                    CHECK(zero({{1, W({{'d', i}, {'d', j}})}, {1, W({{'d', j}, {'d', i}})}}));
            for (int j = 1; j <= n; ++j)
                if (j != i && j != i + 1)
                    CHECK(zero({{1, W({{'d', i}, {'x', j}})}, {1, W({{'x', j}, {'d', i}})}}));
            // x_i d_i + d_i x_{i+1} = 1 = d_i x_i + x_{i+1} d_i
            CHECK(normal_form(n, {{Int(1), W({{'x', i}, {'d', i}})},
                                  {Int(1), W({{'d', i}, {'x', i + 1}})}}) == OnhElement::one(n));
            CHECK(normal_form(n, {{Int(1), W({{'d', i}, {'x', i}})},
                                  {Int(1), W({{'x', i + 1}, {'d', i}})}}) == OnhElement::one(n));
        }
        for (int i = 1; i + 1 < n; ++i)
            CHECK(zero({{1, W({{'d', i}, {'d', i + 1}, {'d', i}})},
                        {-1, W({{'d', i + 1}, {'d', i}, {'d', i + 1}})}}));
    }
}

TEST_CASE("e_n idempotents") {
    CHECK(e_idempotent(1) == OnhElement::one(1));
    OnhElement e2 = e_idempotent(2);
    CHECK(e2 == OnhElement::basis(2, Permutation::transposition(2, 1), {1, 0}));
    CHECK(onh_mul(e2, e2) == e2);
    // with the lex-smallest word for w0, d_{121} x^(2,1,0) squares to minus
    // itself; the idempotent carries the normalizing sign
    OnhElement e3 = e_idempotent(3);
    CHECK(e3 == OnhElement::basis(3, Permutation({3, 2, 1}), {2, 1, 0}, -1));
    CHECK(onh_mul(e3, e3) == e3);
    OnhElement e4 = e_idempotent(4);
    CHECK(onh_mul(e4, e4) == e4);
    // the sign normalization leaves the generated left ideal unchanged
    CHECK(onh_act(e3, onh_act(e3, SkewPoly::one(3))) == onh_act(e3, SkewPoly::one(3)));
}

TEST_CASE("unit and mul behave") {
    const int n = 2;
    OnhElement a = normal_form(n, W({{'x', 2}, {'d', 1}}));
    CHECK(onh_mul(OnhElement::one(n), a) == a);
    CHECK(onh_mul(a, OnhElement::one(n)) == a);
    // x1 * x2 = x^(1,1) with coefficient +1
    CHECK(onh_mul(OnhElement::basis(n, Permutation::identity(n), {1, 0}),
                  OnhElement::basis(n, Permutation::identity(n), {0, 1})) ==
          OnhElement::basis(n, Permutation::identity(n), {1, 1}));
}

TEST_CASE("graded dimension of ONH_n") {
    // n=1: basis {x^k}
    CHECK(graded_dim_onh(1, 8) == geom_inverse(1, 1, 8));
    // n=2 frozen: (1 + pi q^-2)(1 + 2 pi q^2 + 3 q^4 + ...)
    TruncatedSeries d2 = graded_dim_onh(2, 4);
    CHECK(d2.coeff(-2, 1) == 1);
    CHECK(d2.coeff(0, 0) == 3);  // 1 + (pi q^-2)(2 pi q^2)
    CHECK(d2.coeff(2, 1) == 5);  // 2 pi q^2 + (pi q^-2)(3 q^4)
    CHECK(d2.coeff(4, 0) == 7);
}

TEST_CASE("ONH parity is locked to degree") {
    // every nonzero coefficient of the dimension series sits at pi^(d/2 mod 2)
    for (int n = 1; n <= 3; ++n) {
        TruncatedSeries s = graded_dim_onh(n, 8);
        for (const auto& [k, c] : s.terms()) {
            CHECK(c > 0);
            CHECK(k.second == (((k.first / 2) % 2) + 2) % 2);
        }
    }
}

TEST_CASE("word parser") {
    OnhWord w = parse_onh_word("x1 d2  x1", 3);
    CHECK(w == W({{'x', 1}, {'d', 2}, {'x', 1}}));
    CHECK_THROWS_AS(parse_onh_word("d3", 3), ParseError);
    CHECK_THROWS_AS(parse_onh_word("y1", 3), ParseError);
}
