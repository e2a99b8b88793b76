#include "oddsl2/onh.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace oddsl2 {

std::vector<int> canonical_reduced_word(const Permutation& w) {
    std::vector<int> word;
    Permutation v = w;
    const int n = w.n();
    while (!(v == Permutation::identity(n))) {
        // smallest left descent: smallest i with v^-1(i) > v^-1(i+1)
        Permutation vi = v.inverse();
        int i = 0;
        for (int t = 1; t < n; ++t)
            if (vi(t) > vi(t + 1)) { i = t; break; }
        assert(i > 0);
        word.push_back(i);
        v = Permutation::transposition(n, i) * v;
    }
    return word;
}

OnhElement OnhElement::one(int n) {
    return basis(n, Permutation::identity(n), Exponents(static_cast<std::size_t>(n), 0));
}

OnhElement OnhElement::basis(int n, const Permutation& w, const Exponents& alpha, Int c) {
    OnhElement e(n);
    e.add_term(OnhKey{w, alpha}, c);
    return e;
}

void OnhElement::add_term(const OnhKey& k, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

OnhElement OnhElement::operator+(const OnhElement& o) const {
    if (n_ != o.n_) throw MismatchedVariableCount("ONH elements over different strand counts");
    OnhElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

OnhElement OnhElement::operator-(const OnhElement& o) const {
    if (n_ != o.n_) throw MismatchedVariableCount("ONH elements over different strand counts");
    OnhElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
    return r;
}

OnhElement OnhElement::times(const Int& c) const {
    OnhElement r(n_);
    if (c == 0) return r;
    for (const auto& [k, cc] : terms_) r.terms_.emplace(k, cc * c);
    return r;
}

std::string OnhElement::to_string() const {
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
        std::vector<std::string> parts;
        for (int i : canonical_reduced_word(k.w)) parts.push_back("d" + std::to_string(i));
        for (std::size_t t = 0; t < k.alpha.size(); ++t)
            for (int r = 0; r < k.alpha[t]; ++r) parts.push_back("x" + std::to_string(t + 1));
        if (a != 1 || parts.empty()) os << a.str() << (parts.empty() ? "" : " ");
        for (std::size_t t = 0; t < parts.size(); ++t) os << (t ? " " : "") << parts[t];
    }
    return os.str();
}

SkewPoly onh_act(int n, const OnhWord& word, const SkewPoly& f) {
    if (f.n() != n) throw MismatchedVariableCount("word and polynomial sizes differ");
    SkewPoly g = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (it->is_x)
            g = SkewPoly::variable(n, it->idx) * g;
        else
            g = oddpartial(it->idx, g);
    }
    return g;
}

namespace {

OnhWord key_to_word(int n, const OnhKey& k) {
    OnhWord w;
    for (int i : canonical_reduced_word(k.w)) w.push_back(OnhLetter{false, i});
    for (std::size_t t = 0; t < k.alpha.size(); ++t)
        for (int r = 0; r < k.alpha[t]; ++r)
            w.push_back(OnhLetter{true, static_cast<int>(t) + 1});
    (void)n;
    return w;
}

Exponents staircase(int n) {
    Exponents d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = n - 1 - i;
    return d;
}

void compositions(int total, int parts, Exponents& cur, std::vector<Exponents>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int h = 0; h <= total; ++h) {
        cur.push_back(h);
        compositions(total - h, parts - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<Exponents> exponents_of_weight(int n, int total) {
    std::vector<Exponents> out;
    if (total < 0) return out;
    Exponents cur;
    compositions(total, n, cur, out);
    return out;
}

// Sign of a reduced d-word relative to the canonical word of its permutation,
// determined by comparing operator actions on x^delta. Cached per word.
class SignCache {
public:
    int sign_of(int n, const std::vector<int>& word, const Permutation& w) {
        auto key = std::make_pair(n, word);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        OnhWord given, canon;
        for (int i : word) given.push_back(OnhLetter{false, i});
        for (int i : canonical_reduced_word(w)) canon.push_back(OnhLetter{false, i});
        // probe with monomials of increasing degree until the canonical word
        // acts nonzero; the two operators agree up to a global sign
        const int l = w.length();
        for (int extra = 0; extra <= 2 * n; ++extra) {
            for (auto& alpha : exponents_of_weight(n, l + extra)) {
                SkewPoly probe = SkewPoly::monomial(n, alpha);
                SkewPoly b = onh_act(n, canon, probe);
                if (b.is_zero()) continue;
                SkewPoly a = onh_act(n, given, probe);
                int s;
                if (a == b)
                    s = 1;
                else if (a == -b)
                    s = -1;
                else
                    throw NonTerminatingReduction("d-word does not act as ±d_w");
                cache_.emplace(std::move(key), s);
                return s;
            }
        }
        throw NonTerminatingReduction("d_w acts as zero on all probe monomials");
    }

private:
    std::map<std::pair<int, std::vector<int>>, int> cache_;
};

SignCache g_sign_cache;

} // namespace

OnhElement normal_form(int n, const std::vector<std::pair<Int, OnhWord>>& combo) {
    OnhElement out(n);
    // worklist of (coef, word) with all dot-slide rewrites pending
    std::vector<std::pair<Int, OnhWord>> work(combo.begin(), combo.end());
    while (!work.empty()) {
        auto [c, w] = std::move(work.back());
        work.pop_back();
        if (c == 0) continue;
        // leftmost x-letter immediately left of a d-letter
        std::size_t p = w.size();
        for (std::size_t t = 0; t + 1 < w.size(); ++t) {
            if (w[t].is_x && !w[t + 1].is_x) { p = t; break; }
        }
        if (p != w.size()) {
            int j = w[p].idx, i = w[p + 1].idx;
            if (j == i || j == i + 1) {
                // x_i d_i = 1 - d_i x_{i+1};  x_{i+1} d_i = 1 - d_i x_i
                OnhWord unit(w);
                unit.erase(unit.begin() + static_cast<long>(p), unit.begin() + static_cast<long>(p) + 2);
                work.emplace_back(c, std::move(unit));
                OnhWord slid(w);
                slid[p] = OnhLetter{false, i};
                slid[p + 1] = OnhLetter{true, j == i ? i + 1 : i};
                work.emplace_back(-c, std::move(slid));
            } else {
                OnhWord slid(w);
                std::swap(slid[p], slid[p + 1]);
                work.emplace_back(-c, std::move(slid));
            }
            continue;
        }
        // now d-letters precede x-letters
        std::vector<int> dword;
        Exponents alpha(static_cast<std::size_t>(n), 0);
        long xsign = 0; // inversions among x-letters (distinct indices)
        std::vector<int> xs;
        for (const auto& l : w) {
            if (l.is_x)
                xs.push_back(l.idx);
            else
                dword.push_back(l.idx);
        }
        for (std::size_t a = 0; a < xs.size(); ++a) {
            alpha[static_cast<std::size_t>(xs[a] - 1)] += 1;
            for (std::size_t b = a + 1; b < xs.size(); ++b)
                if (xs[a] > xs[b]) ++xsign;
        }
        Permutation perm = Permutation::identity(n);
        for (int i : dword) perm = perm * Permutation::transposition(n, i);
        if (static_cast<int>(dword.size()) != perm.length()) continue; // non-reduced: zero
        int dsign = dword.empty() ? 1 : g_sign_cache.sign_of(n, dword, perm);
        Int coef = c * dsign * (xsign % 2 == 0 ? 1 : -1);
        out.add_term(OnhKey{perm, alpha}, coef);
    }
    return out;
}

OnhElement normal_form(int n, const OnhWord& word) {
    return normal_form(n, {{Int(1), word}});
}

OnhElement onh_mul(const OnhElement& a, const OnhElement& b) {
    if (a.n() != b.n()) throw MismatchedVariableCount("ONH elements over different strand counts");
    const int n = a.n();
    std::vector<std::pair<Int, OnhWord>> combo;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            OnhWord w = key_to_word(n, ka);
            OnhWord wb = key_to_word(n, kb);
            w.insert(w.end(), wb.begin(), wb.end());
            combo.emplace_back(ca * cb, std::move(w));
        }
    return normal_form(n, combo);
}

OnhElement e_idempotent(int n) {
    if (n < 1) throw std::invalid_argument("e_idempotent: n must be >= 1");
    std::vector<int> w0(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w0[static_cast<std::size_t>(i)] = n - i;
    OnhElement f = OnhElement::basis(n, Permutation(w0), staircase(n));
    // d_{w0} x^delta squares to s * itself where s = d_{w0}(x^delta) = ±1,
    // a sign that depends on the reduced-word convention; normalize so the
    // result is the idempotent
    SkewPoly val = onh_act(f, SkewPoly::one(n));
    auto it = val.terms().find(Exponents(static_cast<std::size_t>(n), 0));
    if (val.terms().size() != 1 || it == val.terms().end() ||
        (it->second != 1 && it->second != -1))
        throw NonTerminatingReduction("d_{w0}(x^delta) is not ±1");
    return it->second == 1 ? f : f.times(-1);
}

SkewPoly onh_act(const OnhElement& e, const SkewPoly& f) {
    SkewPoly g(e.n());
    for (const auto& [k, c] : e.terms())
        g = g + onh_act(e.n(), key_to_word(e.n(), k), f).times(c);
    return g;
}

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<OnhKey> onh_basis_of_degree(int n, int d) {
    std::vector<OnhKey> keys;
    for (const auto& w : symmetric_group(n)) {
        int rest = d + 2 * w.length();
        if (rest < 0 || rest % 2 != 0) continue;
        for (auto& a : exponents_of_weight(n, rest / 2)) keys.push_back(OnhKey{w, a});
    }
    return keys;
}

TruncatedSeries graded_dim_onh(int n, int cutoff) {
    CoveringScalar wsum;
    for (const auto& w : symmetric_group(n)) {
        int l = w.length();
        wsum += CoveringScalar::monomial(1, -2 * l, l % 2);
    }
    TruncatedSeries dots = geom_inverse(1, 1, cutoff + n * (n - 1));
    return (dots.pow(n) * TruncatedSeries::from_scalar(wsum, cutoff + n * (n - 1))).truncated(cutoff);
}

int rank_of_int_matrix(std::vector<std::vector<Int>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::vector<std::vector<Rat>> m;
    m.reserve(rows.size());
    for (auto& r : rows) {
        std::vector<Rat> rr(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) rr[i] = Rat(r[i]);
        m.push_back(std::move(rr));
    }
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[row]);
        for (std::size_t r2 = row + 1; r2 < m.size(); ++r2) {
            if (m[r2][col] == 0) continue;
            Rat f = m[r2][col] / m[row][col];
            for (std::size_t c2 = col; c2 < cols; ++c2) m[r2][c2] -= f * m[row][c2];
        }
        ++row;
        ++rank;
    }
    return rank;
}

TruncatedSeries graded_dim_left_ideal(const OnhElement& e, int cutoff) {
    const int n = e.n();
    const int lmax = n * (n - 1) / 2; // l(w0)
    TruncatedSeries out(cutoff, -2 * lmax);
    for (int d = -2 * lmax; d <= cutoff; d += 2) {
        auto keys = onh_basis_of_degree(n, d);
        std::map<OnhKey, std::size_t> index;
        for (std::size_t i = 0; i < keys.size(); ++i) index.emplace(keys[i], i);
        std::vector<std::vector<Int>> rows;
        for (const auto& k : keys) {
            OnhElement prod = onh_mul(OnhElement::basis(n, k.w, k.alpha), e);
            if (prod.is_zero()) continue;
            std::vector<Int> row(keys.size(), 0);
            for (const auto& [pk, pc] : prod.terms()) {
                auto it = index.find(pk);
                if (it == index.end())
                    throw NonTerminatingReduction("product left its degree slice");
                row[it->second] = pc;
            }
            rows.push_back(std::move(row));
        }
        int r = rank_of_int_matrix(std::move(rows));
        if (r > 0) out.add_term(d, (((d / 2) % 2) + 2) % 2, r);
    }
    return out;
}

OnhWord parse_onh_word(const std::string& src, int n) {
    OnhWord w;
    std::size_t p = 0;
    while (p < src.size()) {
        if (std::isspace(static_cast<unsigned char>(src[p]))) { ++p; continue; }
        char kind = src[p];
        if (kind != 'x' && kind != 'd') throw ParseError(p, "expected letter 'x<i>' or 'd<i>'");
        std::size_t start = p;
        ++p;
        std::size_t ds = p;
        while (p < src.size() && std::isdigit(static_cast<unsigned char>(src[p]))) ++p;
        if (p == ds) throw ParseError(p, "expected index after letter");
        int idx = std::stoi(src.substr(ds, p - ds));
        if (kind == 'x' && (idx < 1 || idx > n)) throw ParseError(start, "x-index out of range");
        if (kind == 'd' && (idx < 1 || idx > n - 1)) throw ParseError(start, "d-index out of range");
        w.push_back(OnhLetter{kind == 'x', idx});
    }
    return w;
}

std::string onh_word_to_string(const OnhWord& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i)
        os << (i ? " " : "") << (w[i].is_x ? "x" : "d") << w[i].idx;
    return os.str();
}

} // namespace oddsl2
