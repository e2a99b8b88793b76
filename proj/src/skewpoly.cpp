#include "oddsl2/skewpoly.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace oddsl2 {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    std::vector<bool> seen(w_.size(), false);
    for (int v : w_) {
        if (v < 1 || v > static_cast<int>(w_.size()) || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("not a permutation in one-line notation");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::transposition(int n, int i) {
    Permutation w = identity(n);
    std::swap(w.w_[static_cast<std::size_t>(i - 1)], w.w_[static_cast<std::size_t>(i)]);
    return w;
}

Permutation Permutation::operator*(const Permutation& o) const {
    std::vector<int> w(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i)
        w[i] = (*this)(o.w_[i]);
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> w(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i)
        w[static_cast<std::size_t>(w_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(w));
}

int Permutation::length() const {
    int inv = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
        for (std::size_t j = i + 1; j < w_.size(); ++j)
            if (w_[i] > w_[j]) ++inv;
    return inv;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < w_.size(); ++i) os << (i ? " " : "") << w_[i];
    os << "]";
    return os.str();
}

SkewPoly SkewPoly::one(int n) { return monomial(n, Exponents(static_cast<std::size_t>(n), 0)); }

SkewPoly SkewPoly::variable(int n, int i) {
    Exponents a(static_cast<std::size_t>(n), 0);
    a[static_cast<std::size_t>(i - 1)] = 1;
    return monomial(n, a);
}

SkewPoly SkewPoly::monomial(int n, const Exponents& alpha, Int c) {
    SkewPoly f(n);
    f.add_term(alpha, c);
    return f;
}

void SkewPoly::add_term(const Exponents& alpha, const Int& c) {
    if (c == 0) return;
    assert(static_cast<int>(alpha.size()) == n_);
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
        terms_.emplace(alpha, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void SkewPoly::check_same(const SkewPoly& o) const {
    if (n_ != o.n_)
        throw MismatchedVariableCount("skew polynomials over different variable counts");
}

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
    check_same(o);
    SkewPoly r = *this;
    for (const auto& [a, c] : o.terms_) r.add_term(a, c);
    return r;
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const {
    check_same(o);
    SkewPoly r = *this;
    for (const auto& [a, c] : o.terms_) r.add_term(a, -c);
    return r;
}

SkewPoly SkewPoly::operator-() const {
    SkewPoly r(n_);
    for (const auto& [a, c] : terms_) r.terms_.emplace(a, -c);
    return r;
}

int skew_sign(const Exponents& alpha, const Exponents& beta) {
    long cross = 0;
    for (std::size_t i = 1; i < alpha.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            cross += static_cast<long>(alpha[i]) * beta[j];
    return cross % 2 == 0 ? 1 : -1;
}

SkewPoly SkewPoly::operator*(const SkewPoly& o) const {
    check_same(o);
    SkewPoly r(n_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) {
            Exponents s(a);
            for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
            r.add_term(s, ca * cb * skew_sign(a, b));
        }
    return r;
}

SkewPoly SkewPoly::times(const Int& c) const {
    SkewPoly r(n_);
    if (c == 0) return r;
    for (const auto& [a, cc] : terms_) r.terms_.emplace(a, cc * c);
    return r;
}

std::string SkewPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : terms_) {
        Int abs = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool allzero = true;
        std::ostringstream mono;
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (int k = 0; k < a[i]; ++k) {
                if (!allzero || k) mono << "*";
                mono << "x" << (i + 1);
                allzero = false;
            }
        }
        if (allzero) {
            os << abs.str();
        } else {
            if (abs != 1) os << abs.str() << "*";
            os << mono.str();
        }
    }
    return os.str();
}

SkewPoly act(const Permutation& w, const SkewPoly& f) {
    if (w.n() != f.n())
        throw MismatchedVariableCount("permutation and polynomial sizes differ");
    SkewPoly r(f.n());
    for (const auto& [a, c] : f.terms()) {
        // letters x_1^a1 ... map to x_{w(1)}^a1 ...; re-sorting the letter blocks
        // contributes (-1)^(a_i a_j) per out-of-order block pair.
        Exponents b(a.size(), 0);
        long inv = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            b[static_cast<std::size_t>(w(static_cast<int>(i) + 1) - 1)] += a[i];
            for (std::size_t j = i + 1; j < a.size(); ++j)
                if (w(static_cast<int>(i) + 1) > w(static_cast<int>(j) + 1))
                    inv += static_cast<long>(a[i]) * a[j];
        }
        r.add_term(b, inv % 2 == 0 ? c : -c);
    }
    return r;
}

namespace {

// Leibniz expansion on a single monomial given as an exponent vector.
// partial_i(x_j rest) = delta(j in {i,i+1}) rest - x_{s_i(j)} partial_i(rest).
SkewPoly oddpartial_monomial(int i, int n, const Exponents& alpha) {
    // find first letter
    int j = 0;
    for (std::size_t t = 0; t < alpha.size(); ++t)
        if (alpha[t] > 0) { j = static_cast<int>(t) + 1; break; }
    if (j == 0) return SkewPoly::zero(n);
    Exponents rest = alpha;
    rest[static_cast<std::size_t>(j - 1)] -= 1;
    SkewPoly r(n);
    if (j == i || j == i + 1)
        r = r + SkewPoly::monomial(n, rest);
    int sj = j == i ? i + 1 : (j == i + 1 ? i : j);
    SkewPoly tail = oddpartial_monomial(i, n, rest);
    if (!tail.is_zero())
        r = r - SkewPoly::variable(n, sj) * tail;
    return r;
}

} // namespace

SkewPoly oddpartial(int i, const SkewPoly& f) {
    if (i < 1 || i >= f.n()) throw std::invalid_argument("oddpartial: index out of range");
    SkewPoly r(f.n());
    for (const auto& [a, c] : f.terms())
        r = r + oddpartial_monomial(i, f.n(), a).times(c);
    return r;
}

SkewPoly oddpartial_closed(int i, const SkewPoly& f) {
    if (i < 1 || i >= f.n()) throw std::invalid_argument("oddpartial: index out of range");
    const int n = f.n();
    Permutation si = Permutation::transposition(n, i);
    SkewPoly diff = SkewPoly::variable(n, i + 1) - SkewPoly::variable(n, i);
    SkewPoly num(n);
    for (const auto& [a, c] : f.terms()) {
        SkewPoly m = SkewPoly::monomial(n, a, c);
        long parity = std::accumulate(a.begin(), a.end(), 0L) % 2;
        // (x_{i+1} - x_i) f - (-1)^p(f) s_i(f) (x_{i+1} - x_i), per monomial
        num = num + (parity ? diff * m + act(si, m) * diff : diff * m - act(si, m) * diff);
    }
    // divide by x_{i+1}^2 - x_i^2 (central), leading term x_{i+1}^2
    SkewPoly rem = num;
    SkewPoly quot(n);
    const std::size_t ui = static_cast<std::size_t>(i - 1), ui1 = static_cast<std::size_t>(i);
    while (!rem.is_zero()) {
        // pick a term with maximal exponent of x_{i+1}
        auto best = rem.terms().begin();
        for (auto it = rem.terms().begin(); it != rem.terms().end(); ++it)
            if (it->first[ui1] > best->first[ui1]) best = it;
        Exponents a = best->first;
        Int c = best->second;
        if (a[ui1] < 2)
            throw NonExactDivision("closed-formula division by x_{i+1}^2 - x_i^2 not exact");
        Exponents t = a;
        t[ui1] -= 2;
        quot.add_term(t, c);
        // rem -= t * (x_{i+1}^2 - x_i^2); the divisor is central so side is irrelevant
        Exponents d1(static_cast<std::size_t>(n), 0), d2(static_cast<std::size_t>(n), 0);
        d1[ui1] = 2;
        d2[ui] = 2;
        rem = rem - SkewPoly::monomial(n, t, c) * (SkewPoly::monomial(n, d1) - SkewPoly::monomial(n, d2));
    }
    return quot;
}

bool is_odd_symmetric(const SkewPoly& f) {
    for (int i = 1; i < f.n(); ++i)
        if (!oddpartial(i, f).is_zero()) return false;
    return true;
}

SkewPoly parse_skew(const std::string& src, int n) {
    std::size_t p = 0;
    auto skip = [&] { while (p < src.size() && std::isspace(static_cast<unsigned char>(src[p]))) ++p; };
    auto parse_int = [&]() -> Int {
        std::size_t start = p;
        while (p < src.size() && std::isdigit(static_cast<unsigned char>(src[p]))) ++p;
        if (p == start) throw ParseError(start, "expected integer");
        return Int(src.substr(start, p - start));
    };
    SkewPoly acc(n);
    skip();
    if (p == src.size()) throw ParseError(p, "empty polynomial");
    bool first = true;
    while (true) {
        skip();
        int sign = 1;
        if (p < src.size() && (src[p] == '+' || src[p] == '-')) {
            sign = src[p] == '-' ? -1 : 1;
            ++p;
        } else if (!first) {
            if (p >= src.size()) break;
            throw ParseError(p, "expected '+' or '-' between terms");
        }
        first = false;
        skip();
        // term: [int] ('*'? factor)* where factor = x<k>
        Int coef = sign;
        bool have_factor = false;
        SkewPoly term = SkewPoly::one(n);
        if (p < src.size() && std::isdigit(static_cast<unsigned char>(src[p]))) {
            coef = coef * parse_int();
            have_factor = true;
        }
        while (true) {
            skip();
            if (p < src.size() && src[p] == '*') {
                ++p;
                skip();
            }
            if (p < src.size() && src[p] == 'x') {
                std::size_t xs = p;
                ++p;
                Int k = parse_int();
                if (k < 1 || k > n) throw ParseError(xs, "variable index out of range");
                term = term * SkewPoly::variable(n, static_cast<int>(k));
                have_factor = true;
            } else {
                break;
            }
        }
        if (!have_factor) throw ParseError(p, "expected a term");
        acc = acc + term.times(coef);
        skip();
        if (p >= src.size()) break;
        if (src[p] != '+' && src[p] != '-') throw ParseError(p, "unexpected character");
    }
    return acc;
}

} // namespace oddsl2
