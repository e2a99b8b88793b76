#include "oddsl2/verify.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "oddsl2/bubbles.hpp"
#include "oddsl2/cyclotomic.hpp"
#include "oddsl2/onh.hpp"
#include "oddsl2/udot.hpp"

namespace oddsl2 {

namespace {

using Clock = std::chrono::steady_clock;

void run_check(std::vector<CheckResult>& out, const std::string& name,
               const std::function<bool()>& body) {
    auto t0 = Clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception&) {
        ok = false;
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    out.push_back({name, ok, secs});
}

bool check_qint_negation() {
    for (long n = 1; n <= 20; ++n) {
        CoveringScalar lhs = qint(-n);
        CoveringScalar rhs = -(CoveringScalar::monomial(1, 0, static_cast<int>(n % 2)) * qint(n));
        if (lhs != rhs) return false;
        if (qint(n).bar() != qint(n)) return false;
        if (qint(n) != qint_by_division(n)) return false;
    }
    return true;
}

bool check_qbinom_positive() {
    for (long n = 0; n <= 10; ++n)
        for (long a = 0; a <= n; ++a) {
            CoveringScalar b = qbinom(n, a);
            if (!b.is_nonnegative()) return false;
            CoveringScalar viaFact = qfact(n).divided_by(qfact(a) * qfact(n - a));
            if (b != viaFact) return false;
        }
    return true;
}

bool check_bar_multiplicative() {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> qe(-4, 4), pe(0, 1), co(-5, 5);
    for (int t = 0; t < 200; ++t) {
        CoveringScalar x, y;
        for (int i = 0; i < 3; ++i) {
            x += CoveringScalar::monomial(co(rng), qe(rng), pe(rng));
            y += CoveringScalar::monomial(co(rng), qe(rng), pe(rng));
        }
        if ((x * y).bar() != x.bar() * y.bar()) return false;
        if (x.bar().bar() != x) return false;
    }
    return true;
}

bool check_odd_relations_small() {
    const int n = 3;
    for (int deg = 0; deg <= 4; ++deg)
        for (const auto& key : onh_basis_of_degree(n, 2 * deg)) {
            if (!(key.w == Permutation::identity(n))) continue;
            SkewPoly m = SkewPoly::monomial(n, key.alpha);
            for (int i = 1; i < n; ++i) {
                if (oddpartial(i, m) != oddpartial_closed(i, m)) return false;
                if (!oddpartial(i, oddpartial(i, m)).is_zero()) return false;
            }
            for (int i = 1; i + 1 < n; ++i) {
                SkewPoly lhs = oddpartial(i, oddpartial(i + 1, oddpartial(i, m)));
                SkewPoly rhs = oddpartial(i + 1, oddpartial(i, oddpartial(i + 1, m)));
                if (lhs != rhs) return false;
            }
        }
    return true;
}

bool check_normal_form_sound() {
    const int n = 3;
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> len(1, 6), pick(0, 2 * n - 2);
    for (int t = 0; t < 60; ++t) {
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
        for (int deg = 0; deg <= 2; ++deg)
            for (auto& key : onh_basis_of_degree(n, 2 * deg)) {
                if (!(key.w == Permutation::identity(n))) continue;
                SkewPoly m = SkewPoly::monomial(n, key.alpha);
                if (onh_act(n, w, m) != onh_act(nf, m)) return false;
            }
    }
    return true;
}

bool check_e_idempotent() {
    for (int n = 1; n <= 3; ++n) {
        OnhElement e = e_idempotent(n);
        if (onh_mul(e, e) != e) return false;
    }
    return true;
}

bool check_covering_relation_on_modules() {
    for (int Lambda = 0; Lambda <= 8; ++Lambda) {
        WeightModule m(Lambda);
        for (int k = 0; k <= Lambda; ++k) {
            // E F v_k - pi F E v_k = [Lambda - 2k] v_k
            CoveringScalar ef = k < Lambda ? m.f_coef(k) * m.e_coef(k + 1) : CoveringScalar::zero();
            CoveringScalar fe = k > 0 ? m.e_coef(k) * m.f_coef(k - 1) : CoveringScalar::zero();
            CoveringScalar lhs = ef - CoveringScalar::monomial(1, 0, 1) * fe;
            if (lhs != qint(Lambda - 2 * k)) return false;
        }
    }
    return true;
}

bool check_e_closed_form() {
    for (int Lambda = 0; Lambda <= 8; ++Lambda) {
        WeightModule m(Lambda);
        for (int k = 1; k <= Lambda; ++k) {
            CoveringScalar closed =
                CoveringScalar::monomial(1, 0, (k - 1) % 2) * qint(Lambda - k + 1);
            if (m.e_coef(k) != closed) return false;
        }
    }
    return true;
}

bool check_udot_small() {
    set_multiply_validation(true, 6);
    bool ok = true;
    for (int lam = -3; lam <= 3 && ok; ++lam) {
        CanonicalElement ef = multiply(CanonicalElement::E1(lam - 2), CanonicalElement::F1(lam));
        CanonicalElement fe = multiply(CanonicalElement::F1(lam + 2), CanonicalElement::E1(lam));
        CanonicalElement rhs =
            fe.times(CoveringScalar::monomial(1, 0, 1)) +
            CanonicalElement::idempotent(lam).times(qint(lam));
        ok = ef == rhs;
    }
    set_multiply_validation(false);
    return ok;
}

bool check_form_values() {
    for (int lam : {-2, 0, 3}) {
        TruncatedSeries f = sesquilinear_form(CanonicalElement::F1(lam),
                                              CanonicalElement::F1(lam), 12);
        if (!(f == geom_inverse(1, 1, 12))) return false;
        TruncatedSeries e = sesquilinear_form(CanonicalElement::E1(lam),
                                              CanonicalElement::E1(lam), 12);
        if (!(e == geom_inverse(1, 1, 12))) return false;
    }
    return true;
}

bool check_fake_bubbles() {
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
        RPoly expect = m == 0 ? RPoly::one() : RPoly::zero();
        if (sum != expect) return false;
    }
    return true;
}

bool check_xi_oracle() {
    for (XiMode mode : {XiMode::integer_free_rank, XiMode::char2, XiMode::char_not_2})
        if (!(xi_series(mode, 16) == xi_series_by_enumeration(mode, 16))) return false;
    return true;
}

bool check_hom_small() {
    HomDims empty = hom_dim_series({}, {}, 2, XiMode::char2, 12);
    if (!(empty.full == xi_series(XiMode::char2, 12))) return false;
    HomDims strand = hom_dim_series({+1}, {+1}, 2, XiMode::char2, 12);
    if (!(strand.full == (xi_series(XiMode::char2, 14) * geom_inverse(1, 1, 14)).truncated(12)))
        return false;
    return true;
}

bool check_cyclotomic_totals() {
    for (int n = 1; n <= 2; ++n)
        for (int L = 0; L <= 3; ++L) {
            long fact = 1;
            for (int i = 2; i <= n; ++i) fact *= i;
            long binom = 1;
            if (n > L) {
                binom = 0;
            } else {
                long num = 1, den = 1;
                for (int i = 0; i < n; ++i) {
                    num *= L - i;
                    den *= i + 1;
                }
                binom = num / den;
            }
            if (quotient_dims(n, L).total != fact * fact * binom) return false;
        }
    return true;
}

} // namespace

std::vector<CheckResult> run_verification(bool quick) {
    std::vector<CheckResult> out;
    run_check(out, "qint: negation law, bar-invariance, division cross-check", check_qint_negation);
    run_check(out, "qbinom: positivity and factorial quotient", check_qbinom_positive);
    run_check(out, "bar: ring involution on random pairs", check_bar_multiplicative);
    run_check(out, "odd divided differences: Leibniz vs closed formula, dd=0, braid",
              check_odd_relations_small);
    run_check(out, "normal form: acts like the raw word", check_normal_form_sound);
    run_check(out, "e_n: idempotent for n<=3", check_e_idempotent);
    run_check(out, "weight modules: covering relation", check_covering_relation_on_modules);
    run_check(out, "weight modules: closed E-coefficient", check_e_closed_form);
    run_check(out, "covering algebra: EF = pi FE + [lam], oracle-validated", check_udot_small);
    run_check(out, "sesquilinear form: <F,F> and <E,E> geometric series", check_form_values);
    run_check(out, "fake bubbles: recursion solved and verified to m=10", check_fake_bubbles);
    run_check(out, "bubble series: product formula vs monomial count", check_xi_oracle);
    run_check(out, "hom enumerator: closed case and single strand", check_hom_small);
    if (!quick)
        run_check(out, "cyclotomic totals: (n!)^2 C(Lambda,n)", check_cyclotomic_totals);
    return out;
}

} // namespace oddsl2
