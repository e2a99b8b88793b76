#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oddsl2/scalar.hpp"
#include "oddsl2/series.hpp"

using namespace oddsl2;

namespace {

CoveringScalar mono(long c, int q, int pi) { return CoveringScalar::monomial(Int(c), q, pi); }

CoveringScalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> qe(-4, 4), pe(0, 1), co(-5, 5);
    CoveringScalar s;
    for (int i = 0; i < 3; ++i) s += mono(co(rng), qe(rng), pe(rng));
    return s;
}

} // namespace

TEST_CASE("qint closed sum matches the division oracle") {
    // oracle: polynomial long division of (pi q)^n - q^-n by pi q - q^-1
    for (long n = -20; n <= 20; ++n) CHECK(qint(n) == qint_by_division(n));
}

TEST_CASE("qint frozen values") {
    CHECK(qint(0).is_zero());
    CHECK(qint(1) == CoveringScalar::one());
    // [2] = pi q + q^-1 (division oracle agrees, see above)
    CHECK(qint(2) == mono(1, 1, 1) + mono(1, -1, 0));
    // [3] = q^2 + pi + q^-2
    CHECK(qint(3) == mono(1, 2, 0) + mono(1, 0, 1) + mono(1, -2, 0));
    // [-2] = -pi^2 [2] = -(pi q + q^-1)
    CHECK(qint(-2) == -(mono(1, 1, 1) + mono(1, -1, 0)));
}

TEST_CASE("qint negation law and bar invariance") {
    for (long n = 1; n <= 20; ++n) {
        CHECK(qint(-n) == -(mono(1, 0, static_cast<int>(n % 2)) * qint(n)));
        CHECK(qint(n).bar() == qint(n));
    }
}

TEST_CASE("qbinom frozen values and factorial quotient") {
    CHECK(qbinom(5, 0) == CoveringScalar::one());
    CHECK(qbinom(2, 1) == qint(2));
    CHECK(qbinom(3, 1) == qint(3));
    for (long n = 0; n <= 12; ++n)
        for (long a = 0; a <= n; ++a) {
            CoveringScalar b = qbinom(n, a);
            CHECK(b.is_nonnegative());
            CHECK(b == qfact(n).divided_by(qfact(a) * qfact(n - a)));
        }
}

TEST_CASE("qbinom with negative upper argument can be negative") {
    CoveringScalar b = qbinom(-1, 1); // [-1] = -pi
    CHECK(b == -mono(1, 0, 1));
}

TEST_CASE("bar is an involutive ring homomorphism") {
    CHECK(mono(1, 1, 0).bar() == mono(1, -1, 1)); // q -> pi q^-1
    CHECK(mono(1, 0, 1).bar() == mono(1, 0, 1));  // pi -> pi
    std::mt19937 rng(3);
    for (int t = 0; t < 200; ++t) {
        CoveringScalar x = random_scalar(rng), y = random_scalar(rng);
        CHECK((x * y).bar() == x.bar() * y.bar());
        CHECK(x.bar().bar() == x);
    }
}

TEST_CASE("specialize at pi and q") {
    CHECK(qint(2).specialize(1, Rat(1)) == Rat(2));
    CHECK(qint(2).specialize(-1, Rat(1)) == Rat(0));
    CHECK(qbinom(4, 2).specialize(1, Rat(1)) == Rat(6));
    // specialize(., +1) is a ring homomorphism onto Z[q, q^-1]
    std::mt19937 rng(5);
    for (int t = 0; t < 50; ++t) {
        CoveringScalar x = random_scalar(rng), y = random_scalar(rng);
        Rat q(3, 2);
        CHECK((x * y).specialize(1, q) == x.specialize(1, q) * y.specialize(1, q));
        CHECK((x + y).specialize(1, q) == x.specialize(1, q) + y.specialize(1, q));
    }
}

TEST_CASE("exact division errors on non-divisible input") {
    CHECK_THROWS_AS(qint(3).divided_by(qint(2)), NonExactDivision);
}

TEST_CASE("geometric inverse series") {
    TruncatedSeries s = geom_inverse(1, 1, 8);
    TruncatedSeries expect(8);
    expect.add_term(0, 0, 1);
    expect.add_term(2, 1, 1);
    expect.add_term(4, 0, 1);
    expect.add_term(6, 1, 1);
    expect.add_term(8, 0, 1);
    CHECK(s == expect);

    TruncatedSeries t = geom_inverse(2, 0, 4);
    TruncatedSeries te(4);
    te.add_term(0, 0, 1);
    te.add_term(4, 0, 1);
    CHECK(t == te);

    // inverse check: (1 - pi q^2)^-1 (1 - pi q^2) = 1
    TruncatedSeries lin = TruncatedSeries::from_scalar(
        CoveringScalar::one() - CoveringScalar::monomial(1, 2, 1), 8);
    CHECK((geom_inverse(1, 1, 8) * lin).equal_through(TruncatedSeries::one(8), 8));
}

TEST_CASE("series multiplication is exact through the cutoff") {
    TruncatedSeries a = geom_inverse(1, 0, 10);
    TruncatedSeries b = geom_inverse(1, 1, 10);
    TruncatedSeries p = a * b;
    CHECK(p.cutoff() >= 10);
    // coefficient of q^(2m) in 1/((1-q^2)(1-pi q^2)) is sum over i+j=m of pi^j
    CHECK(p.coeff(4, 0) == 2); // (i,j) = (2,0), (1,1)? j even contributions: j=0,2 -> 2
    CHECK(p.coeff(4, 1) == 1); // j = 1
}

TEST_CASE("series division by a unit-lowest scalar") {
    TruncatedSeries num = geom_inverse(1, 1, 10).times_scalar(qint(3));
    TruncatedSeries q = num.divided_by_scalar(qint(3));
    CHECK(q.equal_through(geom_inverse(1, 1, 10), q.cutoff()));
    CHECK(q.cutoff() >= 8);
}
