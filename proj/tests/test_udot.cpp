#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oddsl2/udot.hpp"

using namespace oddsl2;

namespace {

CoveringScalar pi_mono(int e = 1) { return CoveringScalar::monomial(1, 0, e); }
CoveringScalar qmono(int a, int e = 0) { return CoveringScalar::monomial(1, a, e); }

CanonicalElement random_canonical(std::mt19937& rng) {
    std::uniform_int_distribution<int> lam(-6, 6), ab(0, 3);
    int a = ab(rng), b = ab(rng), l = lam(rng);
    return parse_canonical("E(" + std::to_string(a) + ")F(" + std::to_string(b) +
                           ")@lam=" + std::to_string(l));
}

struct ValidationGuard {
    explicit ValidationGuard(int bound) { set_multiply_validation(true, bound); }
    ~ValidationGuard() { set_multiply_validation(false); }
};

} // namespace

TEST_CASE("idempotents compose") {
    CanonicalElement one = CanonicalElement::idempotent(3);
    CHECK(multiply(one, one) == one);
    CHECK(multiply(one, CanonicalElement::idempotent(5)).is_zero()); // weight mismatch
}

TEST_CASE("covering relation as a product identity") {
    ValidationGuard guard(8);
    for (int lam = -5; lam <= 5; ++lam) {
        CanonicalElement ef = multiply(CanonicalElement::E1(lam - 2), CanonicalElement::F1(lam));
        CanonicalElement fe = multiply(CanonicalElement::F1(lam + 2), CanonicalElement::E1(lam));
        CanonicalElement rhs =
            fe.times(pi_mono()) + CanonicalElement::idempotent(lam).times(qint(lam));
        CHECK(ef == rhs);
    }
}

TEST_CASE("divided power merge") {
    ValidationGuard guard(8);
    // E E 1_lam = [2] E^(2) 1_lam
    for (int lam : {-4, 0, 3}) {
        CanonicalElement ee = multiply(CanonicalElement::E1(lam + 2), CanonicalElement::E1(lam));
        CanonicalElement expect =
            parse_canonical("E(2)F(0)@lam=" + std::to_string(lam)).times(qint(2));
        CHECK(ee == expect);
    }
}

TEST_CASE("tie weight stores the FE kind") {
    // at lam = b - a the two kinds agree up to pi^(ab); the stored form is FE
    CanonicalElement x = parse_canonical("E(1)F(1)@lam=0");
    REQUIRE(x.terms().size() == 1);
    CHECK(x.terms().begin()->first.kind == SymbolKind::FE);
    CHECK(x.terms().begin()->second == pi_mono()); // E F 1_0 = pi F E 1_0
    CHECK(oracle_equal(x, parse_canonical("F(1)E(1)@lam=0").times(pi_mono()), 8));
}

TEST_CASE("multiplication agrees with the module oracle on random triples") {
    std::mt19937 rng(2024);
    int done = 0;
    while (done < 40) {
        CanonicalElement x = random_canonical(rng), y = random_canonical(rng);
        if (x.is_zero() || y.is_zero() || x.source() != y.target()) continue;
        ++done;
        CanonicalElement xy = multiply(x, y);
        // replay on modules
        for (int Lambda = 0; Lambda <= 10; ++Lambda)
            for (int k = 0; k <= Lambda; ++k) {
                ModuleVector vin(static_cast<std::size_t>(Lambda) + 1, CoveringScalar::zero());
                vin[static_cast<std::size_t>(k)] = CoveringScalar::one();
                ModuleVector via_y = apply_to_module(y, Lambda, k);
                ModuleVector seq(static_cast<std::size_t>(Lambda) + 1, CoveringScalar::zero());
                for (std::size_t t = 0; t < via_y.size(); ++t) {
                    if (via_y[t].is_zero()) continue;
                    ModuleVector part = apply_to_module(x, Lambda, static_cast<int>(t));
                    for (std::size_t u = 0; u < seq.size(); ++u)
                        seq[u] += part[u] * via_y[t];
                }
                CHECK(seq == apply_to_module(xy, Lambda, k));
            }
    }
}

TEST_CASE("associativity and positivity on random symbol triples") {
    std::mt19937 rng(4096);
    int done = 0;
    while (done < 60) {
        CanonicalElement x = random_canonical(rng);
        CanonicalElement y = random_canonical(rng);
        CanonicalElement z = random_canonical(rng);
        if (x.is_zero() || y.is_zero() || z.is_zero()) continue;
        if (y.source() != z.target() || x.source() != y.target()) continue;
        ++done;
        CanonicalElement xy = multiply(x, y);
        CHECK(multiply(xy, z) == multiply(x, multiply(y, z)));
        for (const auto& [s, c] : xy.terms()) CHECK(c.is_nonnegative());
    }
}

TEST_CASE("rho on generators") {
    for (int lam : {-3, 0, 2}) {
        // rho(E 1_lam) = q^(lam+1) 1_lam F
        CanonicalElement r = rho(CanonicalElement::E1(lam));
        CHECK(r == CanonicalElement::F1(lam + 2).times(qmono(lam + 1)));
        // rho(1_lam F) = pi^(lam+1) q^(-lam-1) E 1_lam; here 1_lam F = F 1_(lam+2)
        CanonicalElement rf = rho(CanonicalElement::F1(lam + 2));
        CHECK(rf == CanonicalElement::E1(lam).times(qmono(-lam - 1, lam + 1)));
        CHECK(rho(CanonicalElement::idempotent(lam)) == CanonicalElement::idempotent(lam));
    }
}

TEST_CASE("tau on generators and tau = bar . rho") {
    for (int lam : {-3, 0, 2}) {
        CanonicalElement t = tau(CanonicalElement::E1(lam));
        CHECK(t == CanonicalElement::F1(lam + 2).times(qmono(-lam - 1, lam + 1)));
        CanonicalElement tf = tau(CanonicalElement::F1(lam + 2));
        CHECK(tf == CanonicalElement::E1(lam).times(qmono(lam + 1)));
        CHECK(tau(CanonicalElement::idempotent(lam)) == CanonicalElement::idempotent(lam));
    }
}

TEST_CASE("tau is an anti-homomorphism and bar is an involution") {
    std::mt19937 rng(77);
    int done = 0;
    while (done < 25) {
        CanonicalElement x = random_canonical(rng), y = random_canonical(rng);
        if (x.is_zero() || y.is_zero() || x.source() != y.target()) continue;
        ++done;
        CHECK(tau(multiply(x, y)) == multiply(tau(y), tau(x)));
        CHECK(bar(bar(x)) == x);
        CHECK(tau(x) == bar(rho(x)));
    }
}

TEST_CASE("sesquilinear form values") {
    for (int lam : {-4, 0, 3}) {
        CHECK(sesquilinear_form(CanonicalElement::idempotent(lam),
                                CanonicalElement::idempotent(lam), 8) ==
              TruncatedSeries::one(8));
        TruncatedSeries f =
            sesquilinear_form(CanonicalElement::F1(lam), CanonicalElement::F1(lam), 8);
        CHECK(f == geom_inverse(1, 1, 8));
        TruncatedSeries e =
            sesquilinear_form(CanonicalElement::E1(lam), CanonicalElement::E1(lam), 8);
        CHECK(e == geom_inverse(1, 1, 8));
        // orthogonality across different weights
        CHECK(sesquilinear_form(CanonicalElement::E1(lam), CanonicalElement::E1(lam + 2), 8)
                  .is_zero());
    }
}

TEST_CASE("divided F powers pair to the product formula") {
    for (int a = 0; a <= 3; ++a) {
        CanonicalElement fa = parse_canonical("F(" + std::to_string(a) + ")@lam=1");
        TruncatedSeries s = sesquilinear_form(fa, fa, 12);
        TruncatedSeries expect = TruncatedSeries::one(12);
        for (int t = 1; t <= a; ++t) expect *= geom_inverse(t, t % 2, 12);
        CHECK(s == expect.truncated(12));
    }
}

TEST_CASE("form reduction is direction independent on odd weights") {
    // reductions preserve the weight parity; for odd weights the pi-twist
    // pi^lam - pi vanishes and the two stripping directions agree through
    // cutoff 20 on random pairs
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> half(-3, 2), ab(0, 3);
    int done = 0;
    while (done < 20) {
        int lam = 2 * half(rng) + 1;
        int a = ab(rng), b = ab(rng), a2 = ab(rng), b2 = ab(rng);
        if (b2 - a2 != b - a) continue;
        CanonicalElement x = parse_canonical("E(" + std::to_string(a) + ")F(" + std::to_string(b) +
                                             ")@lam=" + std::to_string(lam));
        CanonicalElement y = parse_canonical("E(" + std::to_string(a2) + ")F(" +
                                             std::to_string(b2) + ")@lam=" + std::to_string(lam));
        if (x.is_zero() || y.is_zero()) continue;
        ++done;
        TruncatedSeries l = sesquilinear_form(x, y, 20);
        TruncatedSeries r = sesquilinear_form_rightstrip(x, y, 20);
        CHECK(l.equal_through(r, 20));
    }
    // weight-zero pairs that stay clear of nonzero idempotent terms also agree
    for (int a = 0; a <= 3; ++a) {
        CanonicalElement fa = parse_canonical("F(" + std::to_string(a) + ")@lam=0");
        CHECK(sesquilinear_form(fa, fa, 20)
                  .equal_through(sesquilinear_form_rightstrip(fa, fa, 20), 20));
    }
}

TEST_CASE("reduction routes through tie weights differ by a pi twist") {
    // the two adjointness routes disagree on pairings whose reduction crosses
    // the tie weight lam = b - a; this is forced by the axioms themselves
    // (the loop (FE 1_0, 1_0) -> (E,E) -> (1_0, FE 1_0) returns pi times the
    // start), so the form is pinned to the left-strip normal route.
    CanonicalElement x = parse_canonical("F(1)E(1)@lam=0");
    TruncatedSeries a = sesquilinear_form(x, x, 12);
    TruncatedSeries b = sesquilinear_form_rightstrip(x, x, 12);
    // frozen left-route value: [2]^2 q^4 G G4 + q [2] G with G = (1-pi q^2)^-1
    TruncatedSeries G = geom_inverse(1, 1, 16);
    TruncatedSeries G2 = (G * geom_inverse(2, 0, 16)).truncated(14);
    TruncatedSeries expectA =
        (G2.times_scalar(qint(2) * qint(2)).shifted(4, 0) + G.times_scalar(qint(2)).shifted(1, 0))
            .truncated(12);
    CHECK(a == expectA);
    // the right route lands on the same series with the low-degree tail
    // twisted by pi
    TruncatedSeries expectB =
        (G2.times_scalar(qint(2) * qint(2)).shifted(4, 0) + G.times_scalar(qint(2)).shifted(1, 1))
            .truncated(12);
    CHECK(b == expectB);
}

TEST_CASE("bilinear form is the bar-twist of the sesquilinear form") {
    // (F1_lam, F1_lam) = prod (1 - pi^s q^-2s)^-1 truncates to 1 + pi q^-2 + ...
    TruncatedSeries b = bilinear_form(CanonicalElement::F1(2), CanonicalElement::F1(2), 8);
    CHECK(b.coeff(0, 0) == 1);
    CHECK(b.coeff(-2, 1) == 1);
    CHECK(b.coeff(-4, 0) == 1);
}

TEST_CASE("parser round trips and rejects junk") {
    // lam = 5 >= b - a = -1, so F(1)E(2) is itself canonical
    CanonicalElement x = parse_canonical("F(1)E(2)@lam=5");
    REQUIRE(x.terms().size() == 1);
    CHECK(x.terms().begin()->first.a == 2);
    CHECK(x.terms().begin()->first.b == 1);
    CHECK(x.terms().begin()->first.kind == SymbolKind::FE);
    // a non-canonical spelling expands into the canonical basis but stays
    // the same element of the algebra
    CanonicalElement y = parse_canonical("F(1)E(2)@lam=-3");
    CHECK(!y.is_zero());
    for (const auto& [s, c] : y.terms()) CHECK(s.kind == SymbolKind::EF);
    CHECK(y == multiply(parse_canonical("F(1)@lam=1"), parse_canonical("E(2)@lam=-3")));
    CHECK(parse_canonical("1@lam=4") == CanonicalElement::idempotent(4));
    CHECK_THROWS_AS(parse_canonical("E(1)"), ParseError);
    CHECK_THROWS_AS(parse_canonical("E(1)E(2)@lam=0"), ParseError);
    CHECK_THROWS_AS(parse_canonical("G(1)@lam=0"), ParseError);
}
