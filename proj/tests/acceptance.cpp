// Acceptance suite: one pass/fail line per criterion, exact arithmetic only.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "oddsl2/bubbles.hpp"
#include "oddsl2/cyclotomic.hpp"
#include "oddsl2/onh.hpp"
#include "oddsl2/udot.hpp"
#include "oddsl2/verify.hpp"

using namespace oddsl2;

namespace {

int g_failures = 0;

void criterion(int number, const char* name, const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string err;
    try {
        ok = body();
    } catch (const std::exception& e) {
        ok = false;
        err = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%2d] %-68s %s (%.2fs)\n", number, name, ok ? "PASS" : "FAIL", secs);
    if (!ok) {
        ++g_failures;
        if (!err.empty()) std::printf("     error: %s\n", err.c_str());
    }
    std::fflush(stdout);
}

CoveringScalar pi_mono(int e = 1) { return CoveringScalar::monomial(1, 0, e); }

bool c1_qint_laws() {
    for (long n = 1; n <= 20; ++n) {
        if (qint(-n) != -(pi_mono(static_cast<int>(n % 2)) * qint(n))) return false;
        if (qint(n).bar() != qint(n)) return false;
    }
    return true;
}

bool c2_binomials() {
    for (long n = 0; n <= 12; ++n)
        for (long a = 0; a <= n; ++a) {
            CoveringScalar b = qbinom(n, a);
            if (!b.is_nonnegative()) return false;
            if (b != qfact(n).divided_by(qfact(a) * qfact(n - a))) return false;
        }
    return true;
}

// all monomials x^alpha with 2|alpha| <= maxdeg
std::vector<SkewPoly> monomials(int n, int maxdeg) {
    std::vector<SkewPoly> out;
    for (int d = 0; 2 * d <= maxdeg; ++d)
        for (const auto& key : onh_basis_of_degree(n, 2 * d))
            if (key.w == Permutation::identity(n)) out.push_back(SkewPoly::monomial(n, key.alpha));
    return out;
}

bool c3_odd_relations() {
    for (int n = 2; n <= 4; ++n) {
        auto monos = monomials(n, 8);
        for (const auto& m : monos) {
            // family 1: x_i x_j + x_j x_i = 0 (i != j) as multiplication operators
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    SkewPoly xi = SkewPoly::variable(n, i), xj = SkewPoly::variable(n, j);
                    if (!(xi * (xj * m) + xj * (xi * m)).is_zero()) return false;
                }
            for (int i = 1; i < n; ++i) {
                SkewPoly di = oddpartial(i, m);
                // family 2: d_i d_j + d_j d_i = 0 for |i-j| > 1
                for (int j = 1; j < n; ++j)
                    if (std::abs(i - j) > 1)
                        if (!(oddpartial(i, oddpartial(j, m)) + oddpartial(j, di)).is_zero())
                            return false;
                // family 3: d_i^2 = 0
                if (!oddpartial(i, di).is_zero()) return false;
                // family 4: braid
                if (i + 1 < n) {
                    SkewPoly lhs = oddpartial(i, oddpartial(i + 1, di));
                    SkewPoly rhs = oddpartial(i + 1, oddpartial(i, oddpartial(i + 1, m)));
                    if (lhs != rhs) return false;
                }
                // family 5: d_i x_j + x_j d_i = 0 for j not in {i, i+1}
                for (int j = 1; j <= n; ++j) {
                    if (j == i || j == i + 1) continue;
                    SkewPoly xj = SkewPoly::variable(n, j);
                    if (!(oddpartial(i, xj * m) + xj * di).is_zero()) return false;
                }
                SkewPoly xi = SkewPoly::variable(n, i), xi1 = SkewPoly::variable(n, i + 1);
                // family 6: x_i d_i + d_i x_{i+1} = 1
                if (xi * di + oddpartial(i, xi1 * m) != m) return false;
                // family 7: d_i x_i + x_{i+1} d_i = 1
                if (oddpartial(i, xi * m) + xi1 * di != m) return false;
                // family 8: the two unit decompositions agree
                if (xi * di + oddpartial(i, xi1 * m) != oddpartial(i, xi * m) + xi1 * di)
                    return false;
            }
        }
    }
    return true;
}

bool c4_normal_form_soundness() {
    std::mt19937 rng(20240915);
    for (int n = 2; n <= 4; ++n) {
        auto monos = monomials(n, 6);
        std::uniform_int_distribution<int> len(1, 8), pick(0, 2 * n - 2);
        int words = n == 2 ? 150 : (n == 3 ? 180 : 170); // 500 total
        for (int t = 0; t < words; ++t) {
            OnhWord w;
            int L = len(rng);
            for (int i = 0; i < L; ++i) {
                int p = pick(rng);
                w.push_back(p < n ? OnhLetter{true, p + 1} : OnhLetter{false, p - n + 1});
            }
            OnhElement nf = normal_form(n, w);
            for (const auto& m : monos)
                if (onh_act(n, w, m) != onh_act(nf, m)) return false;
        }
    }
    return true;
}

bool c5_idempotents() {
    for (int n = 1; n <= 4; ++n) {
        OnhElement e = e_idempotent(n);
        if (onh_mul(e, e) != e) return false;
    }
    return true;
}

bool c6_regular_decomposition() {
    const int cutoff = 10;
    for (int n = 1; n <= 3; ++n) {
        TruncatedSeries lhs = graded_dim_onh(n, cutoff);
        TruncatedSeries ideal = graded_dim_left_ideal(e_idempotent(n), cutoff);
        // multiplicity [n]! and the categorical shift <binom(n,2)> with its
        // parity twist: sum_w (pi q^-2)^l(w) = (pi q^-1)^binom(n,2) [n]!
        int c2 = n * (n - 1) / 2;
        TruncatedSeries pred =
            ideal.times_scalar(qfact(n) * CoveringScalar::monomial(1, -c2, c2 % 2));
        if (!lhs.equal_through(pred, cutoff)) return false;
    }
    return true;
}

bool c7_cyclotomic_totals() {
    auto binom = [](long a, long b) {
        if (b < 0 || b > a) return 0L;
        long r = 1;
        for (long i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    for (int n = 1; n <= 3; ++n) {
        long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        for (int L = 0; L <= 4; ++L)
            if (quotient_dims(n, L).total != fact * fact * binom(L, n)) return false;
    }
    return true;
}

bool c8_covering_relation() {
    for (int Lambda = 0; Lambda <= 8; ++Lambda) {
        WeightModule m(Lambda);
        for (int k = 0; k <= Lambda; ++k) {
            CoveringScalar ef =
                k < Lambda ? m.f_coef(k) * m.e_coef(k + 1) : CoveringScalar::zero();
            CoveringScalar fe = k > 0 ? m.e_coef(k) * m.f_coef(k - 1) : CoveringScalar::zero();
            if (ef - pi_mono() * fe != qint(Lambda - 2 * k)) return false;
        }
    }
    return true;
}

bool c9_multiplication() {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> lam(-6, 6), ab(0, 3);
    auto rand_sym = [&](int src) {
        int a = ab(rng), b = ab(rng);
        return parse_canonical("E(" + std::to_string(a) + ")F(" + std::to_string(b) +
                               ")@lam=" + std::to_string(src));
    };
    int done = 0;
    while (done < 200) {
        CanonicalElement z = rand_sym(lam(rng));
        if (z.is_zero()) continue;
        CanonicalElement y = rand_sym(z.target());
        if (y.is_zero()) continue;
        CanonicalElement x = rand_sym(y.target());
        if (x.is_zero()) continue;
        ++done;
        CanonicalElement xy = multiply(x, y), yz = multiply(y, z);
        // associativity
        if (multiply(xy, z) != multiply(x, yz)) return false;
        // positivity of structure constants on canonical basis elements
        for (const auto& [s, c] : xy.terms())
            if (!c.is_nonnegative()) return false;
        for (const auto& [s, c] : yz.terms())
            if (!c.is_nonnegative()) return false;
        // oracle agreement across all V^Lambda, Lambda <= 12
        for (int Lambda = 0; Lambda <= 12; ++Lambda)
            for (int k = 0; k <= Lambda; ++k) {
                ModuleVector vy = apply_to_module(y, Lambda, k);
                ModuleVector seq(static_cast<std::size_t>(Lambda) + 1, CoveringScalar::zero());
                for (std::size_t t = 0; t < vy.size(); ++t) {
                    if (vy[t].is_zero()) continue;
                    ModuleVector part = apply_to_module(x, Lambda, static_cast<int>(t));
                    for (std::size_t u = 0; u < seq.size(); ++u) seq[u] += part[u] * vy[t];
                }
                if (seq != apply_to_module(xy, Lambda, k)) return false;
            }
    }
    return true;
}

bool c10_form_values() {
    const int cutoff = 20;
    TruncatedSeries expect = geom_inverse(1, 1, cutoff);
    for (int lamv : {-3, 0, 2, 5}) {
        TruncatedSeries f =
            sesquilinear_form(CanonicalElement::F1(lamv), CanonicalElement::F1(lamv), cutoff);
        if (!(f == expect)) return false;
        TruncatedSeries e =
            sesquilinear_form(CanonicalElement::E1(lamv), CanonicalElement::E1(lamv), cutoff);
        if (!(e == expect)) return false;
    }
    return true;
}

bool c11_fake_bubbles() {
    auto B = solve_fake_bubbles(10);
    if (B[0] != RPoly::one()) return false;
    if (B[1] != RPoly::generator(1)) return false;
    if (B[2] != RPoly::generator(1) * RPoly::generator(1) - RPoly::generator(2)) return false;
    for (int m = 0; m <= 10; ++m) {
        RPoly sum;
        for (int j = 0; j <= m; ++j) {
            RPoly t = B[static_cast<std::size_t>(j)];
            if (m - j > 0) t = t * RPoly::generator(m - j);
            sum = (j % 2 == 0) ? sum + t : sum - t;
        }
        if (m == 0 && sum != RPoly::one()) return false;
        if (m > 0 && !sum.is_zero()) return false;
    }
    return true;
}

bool c12_hom_enumerator() {
    for (XiMode mode : {XiMode::integer_free_rank, XiMode::char2, XiMode::char_not_2}) {
        if (!(hom_dim_series({}, {}, 1, mode, 16).full == xi_series(mode, 16))) return false;
        HomDims strand = hom_dim_series({+1}, {+1}, 0, mode, 16);
        TruncatedSeries expect = (xi_series(mode, 18) * geom_inverse(1, 1, 18)).truncated(16);
        if (!(strand.full == expect)) return false;
    }
    // adjunction-shift symmetry on five small cases
    struct Case {
        std::vector<int> lower, upper;
        int lam;
    };
    std::vector<Case> cases = {
        {{+1}, {+1}, 2},  {{+1, -1}, {}, 1}, {{-1, +1}, {-1, +1}, 0},
        {{+1, +1}, {+1, +1}, -2}, {{-1}, {-1}, 3},
    };
    for (const auto& c : cases)
        for (const auto& check : char2_consistency(c.lower, c.upper, c.lam, 10))
            if (!check.passed) return false;
    return true;
}

} // namespace

int main() {
    std::printf("acceptance suite (exact arithmetic, no tolerances)\n");
    criterion(1, "(q,pi)-integers: negation law and bar invariance, n <= 20", c1_qint_laws);
    criterion(2, "binomials: positivity and factorial quotient, 0 <= a <= n <= 12", c2_binomials);
    criterion(3, "odd divided difference relations on monomials of degree <= 8, n <= 4",
              c3_odd_relations);
    criterion(4, "normal-form soundness on 500 random words (n <= 4, length <= 8)",
              c4_normal_form_soundness);
    criterion(5, "e_n squared equals e_n for n <= 4", c5_idempotents);
    criterion(6, "regular representation decomposition through degree 10, n <= 3",
              c6_regular_decomposition);
    criterion(7, "cyclotomic totals match (n!)^2 C(Lambda,n), n <= 3, Lambda <= 4",
              c7_cyclotomic_totals);
    criterion(8, "covering relation on V^Lambda for Lambda <= 8", c8_covering_relation);
    criterion(9, "multiplication: associativity, positivity, module oracle (200 triples)",
              c9_multiplication);
    criterion(10, "form values <F,F> = <E,E> = (1 - pi q^2)^-1 through degree 20",
              c10_form_values);
    criterion(11, "fake bubbles B_0..B_10 solve the defining recursion", c11_fake_bubbles);
    criterion(12, "hom enumerator: closed case, single strand, adjunction shifts",
              c12_hom_enumerator);
    if (g_failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
