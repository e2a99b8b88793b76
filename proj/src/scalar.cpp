#include "oddsl2/scalar.hpp"

#include <sstream>

namespace oddsl2 {

CoveringScalar CoveringScalar::integer(Int c) {
    CoveringScalar s;
    s.add_term(0, 0, c);
    return s;
}

CoveringScalar CoveringScalar::monomial(Int c, int q_exp, int pi_exp) {
    CoveringScalar s;
    s.add_term(q_exp, pi_exp, c);
    return s;
}

void CoveringScalar::add_term(int q_exp, int pi_exp, const Int& c) {
    if (c == 0) return;
    pi_exp = ((pi_exp % 2) + 2) % 2;
    Key k{q_exp, pi_exp};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Int CoveringScalar::coeff(int q_exp, int pi_exp) const {
    auto it = terms_.find({q_exp, ((pi_exp % 2) + 2) % 2});
    return it == terms_.end() ? Int(0) : it->second;
}

CoveringScalar CoveringScalar::operator+(const CoveringScalar& o) const {
    CoveringScalar r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

CoveringScalar CoveringScalar::operator-(const CoveringScalar& o) const {
    CoveringScalar r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

CoveringScalar CoveringScalar::operator-() const {
    CoveringScalar r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

CoveringScalar CoveringScalar::operator*(const CoveringScalar& o) const {
    CoveringScalar r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

CoveringScalar CoveringScalar::bar() const {
    // q^a pi^e |-> (pi q^-1)^a pi^e = q^-a pi^(a+e)
    CoveringScalar r;
    for (const auto& [k, c] : terms_) r.add_term(-k.first, k.first + k.second, c);
    return r;
}

std::map<int, Int> CoveringScalar::specialize_pi(int pi_value) const {
    std::map<int, Int> poly;
    for (const auto& [k, c] : terms_) {
        Int v = (k.second == 1 && pi_value == -1) ? -c : c;
        poly[k.first] += v;
        if (poly[k.first] == 0) poly.erase(k.first);
    }
    return poly;
}

Rat CoveringScalar::specialize(int pi_value, const Rat& q_value) const {
    Rat acc = 0;
    for (const auto& [exp, c] : specialize_pi(pi_value)) {
        Rat p = 1;
        int e = exp >= 0 ? exp : -exp;
        for (int i = 0; i < e; ++i) p *= q_value;
        if (exp < 0) p = Rat(1) / p;
        acc += Rat(c) * p;
    }
    return acc;
}

bool CoveringScalar::is_nonnegative() const {
    for (const auto& [k, c] : terms_)
        if (c < 0) return false;
    return true;
}

int CoveringScalar::min_q_exp() const { return terms_.begin()->first.first; }
int CoveringScalar::max_q_exp() const { return terms_.rbegin()->first.first; }

namespace {

// z = a + b*pi in Z[pi]/(pi^2-1)
struct ZPi {
    Int a, b;
    bool is_zero() const { return a == 0 && b == 0; }
};

// Exact division in Z[pi]/(pi^2-1); nullopt if no integral quotient exists.
std::optional<ZPi> zpi_divide(const ZPi& num, const ZPi& den) {
    // (x + y pi)(c + d pi) = (xc + yd) + (xd + yc) pi
    const Int &c = den.a, &d = den.b;
    Int det = c * c - d * d;
    if (det != 0) {
        Int xn = num.a * c - num.b * d;
        Int yn = num.b * c - num.a * d;
        if (xn % det != 0 || yn % det != 0) return std::nullopt;
        return ZPi{xn / det, yn / det};
    }
    // c = ±d: divisor proportional to (1 ± pi)
    if (c == 0 && d == 0) return std::nullopt;
    if (c == d) {
        // (x+y pi)c(1+pi) = c(x+y) (1+pi)/... require num = t(1+pi), t = num.a, num.a == num.b
        if (num.a != num.b) return std::nullopt;
        if (num.a % c != 0) return std::nullopt;
        // any lift works; choose y = 0
        return ZPi{num.a / c, 0};
    }
    // c = -d
    if (num.a != -num.b) return std::nullopt;
    if (num.a % c != 0) return std::nullopt;
    return ZPi{num.a / c, 0};
}

ZPi leading_zpi(const CoveringScalar& s, int q_exp) {
    return ZPi{s.coeff(q_exp, 0), s.coeff(q_exp, 1)};
}

} // namespace

std::optional<CoveringScalar> CoveringScalar::try_divide(const CoveringScalar& num,
                                                         const CoveringScalar& den) {
    if (den.is_zero()) return std::nullopt;
    if (num.is_zero()) return CoveringScalar::zero();
    CoveringScalar rem = num;
    CoveringScalar quot;
    const int dlead = den.max_q_exp();
    ZPi dc = leading_zpi(den, dlead);
    int guard = 4 * (num.max_q_exp() - num.min_q_exp() + den.max_q_exp() - den.min_q_exp() + 2);
    while (!rem.is_zero()) {
        if (--guard < 0) return std::nullopt;
        int rlead = rem.max_q_exp();
        ZPi rc = leading_zpi(rem, rlead);
        auto q = zpi_divide(rc, dc);
        if (!q) return std::nullopt;
        CoveringScalar t;
        t.add_term(rlead - dlead, 0, q->a);
        t.add_term(rlead - dlead, 1, q->b);
        if (t.is_zero()) return std::nullopt;
        quot += t;
        rem -= t * den;
        if (!rem.is_zero() && rem.max_q_exp() >= rlead) return std::nullopt;
    }
    return quot;
}

CoveringScalar CoveringScalar::divided_by(const CoveringScalar& den) const {
    auto q = try_divide(*this, den);
    if (!q) throw NonExactDivision("covering-scalar division not exact: (" + to_string() +
                                   ") / (" + den.to_string() + ")");
    return *q;
}

std::string CoveringScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool printed = false;
        if (a != 1 || (k.first == 0 && k.second == 0)) {
            os << a.str();
            printed = true;
        }
        if (k.second == 1) {
            if (printed) os << "*";
            os << "pi";
            printed = true;
        }
        if (k.first != 0) {
            if (printed) os << "*";
            os << "q";
            if (k.first != 1) os << "^" << k.first;
        }
    }
    return os.str();
}

CoveringScalar qint(long n) {
    if (n == 0) return CoveringScalar::zero();
    if (n < 0) {
        // [-n] = -pi^n [n]
        CoveringScalar s = qint(-n);
        return -(CoveringScalar::monomial(1, 0, static_cast<int>((-n) % 2)) * s);
    }
    CoveringScalar s;
    for (long k = 0; k < n; ++k)
        s += CoveringScalar::monomial(1, static_cast<int>(2 * k - n + 1), static_cast<int>(k % 2));
    return s;
}

CoveringScalar qint_by_division(long n) {
    if (n == 0) return CoveringScalar::zero();
    long m = n >= 0 ? n : -n;
    // (pi q)^m - q^-m
    CoveringScalar num = CoveringScalar::monomial(1, static_cast<int>(m), static_cast<int>(m % 2)) -
                         CoveringScalar::monomial(1, static_cast<int>(-m), 0);
    CoveringScalar den = CoveringScalar::monomial(1, 1, 1) - CoveringScalar::monomial(1, -1, 0);
    CoveringScalar q = num.divided_by(den);
    if (n >= 0) return q;
    return -(CoveringScalar::monomial(1, 0, static_cast<int>(m % 2)) * q);
}

CoveringScalar qfact(long n) {
    CoveringScalar s = CoveringScalar::one();
    for (long k = 1; k <= n; ++k) s *= qint(k);
    return s;
}

CoveringScalar qbinom(long n, long a) {
    if (a < 0) throw std::invalid_argument("qbinom: a must be nonnegative");
    CoveringScalar num = CoveringScalar::one();
    for (long i = 1; i <= a; ++i) num *= qint(n + i - a);
    return num.divided_by(qfact(a));
}

} // namespace oddsl2
