#include "oddsl2/series.hpp"

#include <algorithm>
#include <sstream>

namespace oddsl2 {

TruncatedSeries TruncatedSeries::one(int cutoff) {
    TruncatedSeries s(cutoff);
    s.add_term(0, 0, 1);
    return s;
}

TruncatedSeries TruncatedSeries::from_scalar(const CoveringScalar& s, int cutoff) {
    int lo = s.is_zero() ? 0 : std::min(0, s.min_q_exp());
    TruncatedSeries r(cutoff, lo);
    for (const auto& [k, c] : s.terms()) r.add_term(k.first, k.second, c);
    return r;
}

Int TruncatedSeries::coeff(int q_exp, int pi_exp) const {
    auto it = terms_.find({q_exp, ((pi_exp % 2) + 2) % 2});
    return it == terms_.end() ? Int(0) : it->second;
}

void TruncatedSeries::add_term(int q_exp, int pi_exp, const Int& c) {
    if (c == 0 || q_exp > cutoff_) return;
    min_exp_ = std::min(min_exp_, q_exp);
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

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    TruncatedSeries r(std::min(cutoff_, o.cutoff_), std::min(min_exp_, o.min_exp_));
    for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, c);
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    TruncatedSeries r(std::min(cutoff_, o.cutoff_), std::min(min_exp_, o.min_exp_));
    for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, c);
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    // exact through min(c1 + m2, c2 + m1): a dropped term of one factor has
    // exponent > cutoff, and the other factor contributes at least min_exp.
    int cut = std::min(cutoff_ + o.min_exp_, o.cutoff_ + min_exp_);
    TruncatedSeries r(cut, min_exp_ + o.min_exp_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            int e = ka.first + kb.first;
            if (e > cut) continue;
            r.add_term(e, ka.second + kb.second, ca * cb);
        }
    return r;
}

TruncatedSeries TruncatedSeries::times_scalar(const CoveringScalar& s) const {
    if (s.is_zero()) return TruncatedSeries(cutoff_, min_exp_);
    return *this * from_scalar(s, cutoff_ + std::max(0, -s.min_q_exp()) + std::max(0, s.max_q_exp()));
}

TruncatedSeries TruncatedSeries::shifted(int q_exp, int pi_exp, const Int& c) const {
    TruncatedSeries r(cutoff_ + q_exp, min_exp_ + q_exp);
    for (const auto& [k, cc] : terms_) r.add_term(k.first + q_exp, k.second + pi_exp, cc * c);
    return r;
}

TruncatedSeries TruncatedSeries::divided_by_scalar(const CoveringScalar& den) const {
    if (den.is_zero()) throw NonExactDivision("series division by zero scalar");
    const int dlo = den.min_q_exp();
    const Int c0 = den.coeff(dlo, 0);
    const Int c1 = den.coeff(dlo, 1);
    // lowest coefficient must be a unit: ±pi^e
    Int det = c0 * c0 - c1 * c1;
    if (det != 1 && det != -1)
        throw NonExactDivision("series division: lowest coefficient of divisor is not a unit: " +
                               den.to_string());
    TruncatedSeries rem = *this;
    int cut = cutoff_ - dlo; // quotient exact through this degree
    TruncatedSeries quot(cut, min_exp_ - dlo);
    while (!rem.terms_.empty()) {
        auto it = rem.terms_.begin();
        int rlo = it->first.first;
        if (rlo - dlo > cut) break;
        // solve (x + y pi)(c0 + c1 pi) = (a0 + a1 pi) over Z (unit divisor: always solvable)
        Int a0 = rem.coeff(rlo, 0), a1 = rem.coeff(rlo, 1);
        Int x = (a0 * c0 - a1 * c1) / det;
        Int y = (a1 * c0 - a0 * c1) / det;
        CoveringScalar t;
        if (x != 0) t += CoveringScalar::monomial(x, rlo - dlo, 0);
        if (y != 0) t += CoveringScalar::monomial(y, rlo - dlo, 1);
        quot.add_term(rlo - dlo, 0, x);
        quot.add_term(rlo - dlo, 1, y);
        // subtract the exact scalar product so the remainder keeps its cutoff
        rem -= from_scalar(t * den, rem.cutoff());
        // the lowest term was cancelled; anything at the same exponent means a bug
        if (!rem.terms_.empty() && rem.terms_.begin()->first.first <= rlo)
            throw NonExactDivision("series division failed to make progress");
    }
    return quot;
}

TruncatedSeries TruncatedSeries::truncated(int new_cutoff) const {
    TruncatedSeries r(std::min(new_cutoff, cutoff_), min_exp_);
    for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, c);
    return r;
}

TruncatedSeries TruncatedSeries::pow(int e) const {
    TruncatedSeries r = one(cutoff_);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool TruncatedSeries::equal_through(const TruncatedSeries& o, int through) const {
    for (const auto& [k, c] : terms_)
        if (k.first <= through && o.coeff(k.first, k.second) != c) return false;
    for (const auto& [k, c] : o.terms_)
        if (k.first <= through && coeff(k.first, k.second) != c) return false;
    return true;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return equal_through(o, std::min(cutoff_, o.cutoff_));
}

std::map<int, Int> TruncatedSeries::even_part() const {
    std::map<int, Int> r;
    for (const auto& [k, c] : terms_)
        if (k.second == 0) r[k.first] = c;
    return r;
}

std::map<int, Int> TruncatedSeries::pi_part() const {
    std::map<int, Int> r;
    for (const auto& [k, c] : terms_)
        if (k.second == 1) r[k.first] = c;
    return r;
}

std::string TruncatedSeries::to_string() const {
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

TruncatedSeries geom_inverse(int s, int pi_power, int cutoff) {
    if (s < 1) throw std::invalid_argument("geom_inverse: s must be >= 1");
    TruncatedSeries r(cutoff, 0);
    for (int k = 0; 2 * s * k <= cutoff; ++k) r.add_term(2 * s * k, pi_power * k, 1);
    return r;
}

} // namespace oddsl2
