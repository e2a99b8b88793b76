#include "oddsl2/bubbles.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace oddsl2 {

XiMode xi_mode_from_string(const std::string& s) {
    if (s == "integer_free_rank" || s == "integer") return XiMode::integer_free_rank;
    if (s == "char2") return XiMode::char2;
    if (s == "char_not_2" || s == "char0") return XiMode::char_not_2;
    throw ParseError(0, "unknown mode '" + s + "' (integer_free_rank|char2|char_not_2)");
}

std::string to_string(XiMode m) {
    switch (m) {
        case XiMode::integer_free_rank: return "integer_free_rank";
        case XiMode::char2: return "char2";
        default: return "char_not_2";
    }
}

TruncatedSeries xi_series(XiMode mode, int cutoff) {
    TruncatedSeries out = TruncatedSeries::one(cutoff);
    switch (mode) {
        case XiMode::integer_free_rank:
            // prod_a (1 - (pi q^2)^(2a))^-1: generators z_{2a}
            for (int a = 1; 4 * a <= cutoff; ++a) out *= geom_inverse(2 * a, 0, cutoff);
            break;
        case XiMode::char2:
            // prod_a (1 - (pi q^2)^a)^-1
            for (int a = 1; 2 * a <= cutoff; ++a) out *= geom_inverse(a, a % 2, cutoff);
            break;
        case XiMode::char_not_2:
            // prod_a (1 - (pi q^2)^(2a))^-1 (1 + (pi q^2)^(2a-1))
            for (int a = 1; 4 * a <= cutoff; ++a) out *= geom_inverse(2 * a, 0, cutoff);
            for (int a = 1; 2 * (2 * a - 1) <= cutoff; ++a) {
                TruncatedSeries f = TruncatedSeries::one(cutoff);
                f.add_term(2 * (2 * a - 1), (2 * a - 1) % 2, 1);
                out *= f;
            }
            break;
    }
    return out;
}

namespace {

void enumerate_monomials(XiMode mode, int cutoff, int min_index, int degree, int parity,
                         TruncatedSeries& out) {
    out.add_term(degree, parity, 1);
    for (int a = min_index; degree + 2 * a <= cutoff; ++a) {
        if (mode == XiMode::integer_free_rank && a % 2 == 1) continue;
        // in char != 2 an odd generator appears at most once
        int next_min = (mode == XiMode::char_not_2 && a % 2 == 1) ? a + 1 : a;
        enumerate_monomials(mode, cutoff, next_min, degree + 2 * a, parity + a % 2, out);
    }
}

} // namespace

TruncatedSeries xi_series_by_enumeration(XiMode mode, int cutoff) {
    TruncatedSeries out(cutoff);
    enumerate_monomials(mode, cutoff, 1, 0, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// Formal real-bubble polynomials
// ---------------------------------------------------------------------------

RPoly RPoly::one() {
    RPoly p;
    p.add_term({}, 1);
    return p;
}

RPoly RPoly::generator(int a) {
    if (a < 1) throw std::invalid_argument("r-generator index must be >= 1");
    RPoly p;
    p.add_term({a}, 1);
    return p;
}

void RPoly::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    assert(std::is_sorted(m.begin(), m.end()));
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

RPoly RPoly::operator+(const RPoly& o) const {
    RPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

RPoly RPoly::operator-(const RPoly& o) const {
    RPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

RPoly RPoly::operator*(const RPoly& o) const {
    RPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            // merge two ascending monomials; each swap of odd-parity
            // generators across each other contributes a sign
            long oddswaps = 0;
            for (int u : ma)
                for (int v : mb)
                    if (v < u && u % 2 == 1 && v % 2 == 1) ++oddswaps;
            Monomial m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            Int prod = ca * cb;
            r.add_term(m, oddswaps % 2 == 0 ? prod : Int(-prod));
        }
    return r;
}

RPoly RPoly::times(const Int& c) const {
    RPoly r;
    if (c == 0) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

std::map<RPoly::Monomial, Int> RPoly::commutative_image() const {
    std::map<Monomial, Int> img;
    for (const auto& [m, c] : terms_) {
        img[m] += c;
        if (img[m] == 0) img.erase(m);
    }
    return img;
}

std::string RPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (a != 1 || m.empty()) os << a.str();
        std::size_t i = 0;
        bool lead = !(a != 1 || m.empty());
        while (i < m.size()) {
            std::size_t j = i;
            while (j < m.size() && m[j] == m[i]) ++j;
            if (!lead) os << "*";
            lead = false;
            os << "r" << m[i];
            if (j - i > 1) os << "^" << (j - i);
            i = j;
        }
    }
    return os.str();
}

std::vector<RPoly> solve_fake_bubbles(int m_max) {
    if (m_max < 0) throw std::invalid_argument("solve_fake_bubbles: m_max must be >= 0");
    std::vector<RPoly> B;
    B.push_back(RPoly::one()); // B_0
    for (int m = 1; m <= m_max; ++m) {
        // sum_{j=0}^m (-1)^j B_j r_{m-j} = (-1)^m delta_{m,0}, r_0 = 1:
        // B_m = (-1)^(m+1) sum_{j<m} (-1)^j B_j r_{m-j}
        RPoly acc;
        for (int j = 0; j < m; ++j) {
            RPoly t = B[static_cast<std::size_t>(j)] * RPoly::generator(m - j);
            acc = (j % 2 == 0) ? acc + t : acc - t;
        }
        // B_m = (-1)^(m+1) sum_{j<m} (-1)^j B_j r_{m-j}
        B.push_back(m % 2 == 1 ? acc : acc.times(-1));
    }
    return B;
}

// ---------------------------------------------------------------------------
// Minimal diagram slice engine
// ---------------------------------------------------------------------------

namespace {

struct Strand {
    int id;
    int orient; // +1 flowing up, -1 flowing down at the current height
};

struct SliceState {
    std::vector<Strand> strands;
    int lam;
    int degree = 0;
    int parity = 0;

    int region_right_of(std::size_t pos) const {
        // weight label of the gap just right of strand `pos`, sweeping in
        // from the rightmost region lam; crossing a strand leftward adds
        // +2 for an up strand and -2 for a down strand
        int mu = lam;
        for (std::size_t t = strands.size(); t-- > pos + 1;)
            mu += 2 * strands[t].orient;
        return mu;
    }

    void crossing(std::size_t p) {
        std::swap(strands[p], strands[p + 1]);
        degree -= 2;
        parity += 1;
    }

    // join adjacent strands p, p+1 at a local maximum
    void cap(std::size_t p) {
        int mu = region_right_of(p + 1);
        if (strands[p].orient == +1 && strands[p + 1].orient == -1) {
            // rightward at the apex
            degree += 1 - mu;
            parity += mu - 1;
        } else if (strands[p].orient == -1 && strands[p + 1].orient == +1) {
            degree += 1 + mu;
        } else {
            throw std::logic_error("cap requires opposite orientations");
        }
        strands.erase(strands.begin() + static_cast<long>(p),
                      strands.begin() + static_cast<long>(p) + 2);
    }

    // insert strands at position p meeting in a local minimum below
    void cup(std::size_t p, int id_left, int o_left, int id_right, int o_right) {
        strands.insert(strands.begin() + static_cast<long>(p),
                       {Strand{id_left, o_left}, Strand{id_right, o_right}});
        int mu = region_right_of(p + 1);
        if (o_left == +1 && o_right == -1) {
            // leftward at the nadir
            degree += 1 - mu;
        } else if (o_left == -1 && o_right == +1) {
            degree += 1 + mu;
            parity += mu + 1;
        } else {
            throw std::logic_error("cup requires opposite orientations");
        }
    }

    std::size_t position_of(int id) const {
        for (std::size_t t = 0; t < strands.size(); ++t)
            if (strands[t].id == id) return t;
        throw std::logic_error("strand not present");
    }
};

// moves recorded by the top-down pass over the cup zone
struct TopDownMove {
    bool is_join; // join = (in real time) a cup insertion
    std::size_t pos;
    int id_left = 0, o_left = 0, id_right = 0, o_right = 0;
};

} // namespace

DiagramWeight minimal_diagram_weight(const std::vector<int>& lower, const std::vector<int>& upper,
                                     int lam, const std::vector<std::pair<int, int>>& matching) {
    const int m = static_cast<int>(lower.size());
    const int k = static_cast<int>(upper.size());
    auto is_lower = [&](int id) { return id < m; };
    auto orient_at = [&](int id) { return id < m ? lower[static_cast<std::size_t>(id)]
                                                 : upper[static_cast<std::size_t>(id - m)]; };

    std::vector<std::pair<int, int>> caps, cups, throughs; // (left id, right id) / (lower, upper)
    for (auto [u, v] : matching) {
        if (u > v) std::swap(u, v);
        if (is_lower(u) && is_lower(v)) {
            if (orient_at(u) == orient_at(v))
                throw std::logic_error("cap endpoints must have opposite orientations");
            caps.emplace_back(u, v);
        } else if (!is_lower(u) && !is_lower(v)) {
            if (orient_at(u) == orient_at(v))
                throw std::logic_error("cup endpoints must have opposite orientations");
            cups.emplace_back(u, v);
        } else {
            if (orient_at(u) != orient_at(v))
                throw std::logic_error("through strand endpoints must agree");
            throughs.emplace_back(u, v);
        }
    }
    std::sort(caps.begin(), caps.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    std::sort(cups.begin(), cups.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });

    SliceState st;
    st.lam = lam;
    for (int i = 0; i < m; ++i) st.strands.push_back(Strand{i, lower[static_cast<std::size_t>(i)]});

    // cap zone: innermost caps first (ascending right endpoint); walk the left
    // leg rightward across every intervening strand
    for (const auto& [lid, rid] : caps) {
        std::size_t pl = st.position_of(lid), pr = st.position_of(rid);
        while (pl + 1 < pr) {
            st.crossing(pl);
            ++pl;
        }
        st.cap(pl);
    }

    // cup zone, computed top-down and replayed in reverse
    std::vector<TopDownMove> moves;
    {
        SliceState top;
        top.lam = lam; // labels unused in the structural pass
        for (int j = 0; j < k; ++j)
            top.strands.push_back(Strand{m + j, upper[static_cast<std::size_t>(j)]});
        for (const auto& [lid, rid] : cups) {
            std::size_t pl = top.position_of(lid), pr = top.position_of(rid);
            while (pl + 1 < pr) {
                moves.push_back(TopDownMove{false, pl});
                std::swap(top.strands[pl], top.strands[pl + 1]);
                ++pl;
            }
            TopDownMove j;
            j.is_join = true;
            j.pos = pl;
            j.id_left = top.strands[pl].id;
            j.o_left = top.strands[pl].orient;
            j.id_right = top.strands[pl + 1].id;
            j.o_right = top.strands[pl + 1].orient;
            moves.push_back(j);
            top.strands.erase(top.strands.begin() + static_cast<long>(pl),
                              top.strands.begin() + static_cast<long>(pl) + 2);
        }
        // braid zone: sort current through strands into the top-down residual order
        std::vector<int> target;
        for (const auto& s : top.strands) target.push_back(s.id);
        // map upper id -> lower id along through strands
        std::map<int, int> upper_to_lower;
        for (const auto& [lo, up] : throughs) upper_to_lower.emplace(up, lo);
        std::vector<int> want;
        for (int idu : target) want.push_back(upper_to_lower.at(idu));
        // bubble-sort st.strands into `want` with crossing slices
        for (std::size_t i = 0; i < want.size(); ++i) {
            std::size_t at = 0;
            for (std::size_t t = 0; t < st.strands.size(); ++t)
                if (st.strands[t].id == want[i]) at = t;
            while (at > i) {
                st.crossing(at - 1);
                --at;
            }
        }
        // relabel through strands by their upper ids so cup replay positions match
        for (auto& s : st.strands)
            for (const auto& [lo, up] : throughs)
                if (s.id == lo) s.id = up;
    }
    for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
        if (it->is_join) {
            st.cup(it->pos, it->id_left, it->o_left, it->id_right, it->o_right);
        } else {
            st.crossing(it->pos);
        }
    }
    // final cross-section must match the upper boundary
    if (st.strands.size() != static_cast<std::size_t>(k))
        throw std::logic_error("slice replay lost strands");
    for (int j = 0; j < k; ++j) {
        if (st.strands[static_cast<std::size_t>(j)].id != m + j ||
            st.strands[static_cast<std::size_t>(j)].orient != upper[static_cast<std::size_t>(j)])
            throw std::logic_error("slice replay does not reach the upper boundary");
    }
    return DiagramWeight{st.degree, ((st.parity % 2) + 2) % 2};
}

DiagramWeight bubble_weight(bool clockwise, int dots, int lam) {
    SliceState st;
    st.lam = lam;
    if (clockwise) {
        // left side up, right side down: left cup then right cap
        st.cup(0, 0, +1, 1, -1);
        st.cap(0);
    } else {
        st.cup(0, 0, -1, 1, +1);
        st.cap(0);
    }
    st.degree += 2 * dots;
    st.parity += dots;
    return DiagramWeight{st.degree, ((st.parity % 2) + 2) % 2};
}

// ---------------------------------------------------------------------------
// Hom-space enumerator
// ---------------------------------------------------------------------------

namespace {

void enumerate_matchings(const std::vector<int>& orient, const std::vector<bool>& is_lower,
                         std::vector<int>& partner, std::size_t from,
                         std::vector<std::vector<std::pair<int, int>>>& out) {
    std::size_t i = from;
    while (i < partner.size() && partner[i] >= 0) ++i;
    if (i == partner.size()) {
        std::vector<std::pair<int, int>> match;
        for (std::size_t t = 0; t < partner.size(); ++t)
            if (partner[t] > static_cast<int>(t))
                match.emplace_back(static_cast<int>(t), partner[t]);
        out.push_back(std::move(match));
        return;
    }
    for (std::size_t j = i + 1; j < partner.size(); ++j) {
        if (partner[j] >= 0) continue;
        bool compatible = (is_lower[i] == is_lower[j]) ? orient[i] != orient[j]
                                                       : orient[i] == orient[j];
        if (!compatible) continue;
        partner[i] = static_cast<int>(j);
        partner[j] = static_cast<int>(i);
        enumerate_matchings(orient, is_lower, partner, i + 1, out);
        partner[i] = partner[j] = -1;
    }
}

} // namespace

HomDims hom_dim_series(const std::vector<int>& lower, const std::vector<int>& upper, int lam,
                       XiMode mode, int cutoff) {
    const int m = static_cast<int>(lower.size());
    const int k = static_cast<int>(upper.size());
    HomDims dims{TruncatedSeries(cutoff), TruncatedSeries(cutoff), TruncatedSeries(cutoff)};
    if ((m + k) % 2 != 0) return dims; // no perfect matching

    std::vector<int> orient(lower);
    orient.insert(orient.end(), upper.begin(), upper.end());
    std::vector<bool> is_lower(static_cast<std::size_t>(m + k), false);
    for (int i = 0; i < m; ++i) is_lower[static_cast<std::size_t>(i)] = true;

    std::vector<std::vector<std::pair<int, int>>> matchings;
    if (m + k == 0) {
        matchings.push_back({});
    } else {
        std::vector<int> partner(static_cast<std::size_t>(m + k), -1);
        enumerate_matchings(orient, is_lower, partner, 0, matchings);
    }
    if (matchings.empty()) return dims;

    const int strands = (m + k) / 2;
    // working cutoff: strand degrees can push below 0, dots/bubbles are >= 0
    int min_deg = 0;
    std::vector<DiagramWeight> weights;
    weights.reserve(matchings.size());
    for (const auto& match : matchings) {
        DiagramWeight w = minimal_diagram_weight(lower, upper, lam, match);
        min_deg = std::min(min_deg, w.degree);
        weights.push_back(w);
    }
    int work = cutoff + std::max(0, -min_deg);
    TruncatedSeries dots = geom_inverse(1, 1, work).pow(strands);
    TruncatedSeries bubbles = xi_series(mode, work);
    TruncatedSeries factor = dots * bubbles;

    TruncatedSeries full(cutoff, min_deg);
    for (const auto& w : weights) {
        TruncatedSeries term = factor.shifted(w.degree, w.parity);
        full += term.truncated(cutoff);
    }
    dims.full = full;
    for (const auto& [e, c] : full.even_part()) dims.even.add_term(e, 0, c);
    for (const auto& [e, c] : full.pi_part()) dims.odd.add_term(e, 0, c);
    return dims;
}

std::vector<AdjunctionCheck> char2_consistency(const std::vector<int>& lower,
                                               const std::vector<int>& upper, int lam,
                                               int cutoff) {
    std::vector<AdjunctionCheck> checks;
    const XiMode mode = XiMode::char2;
    if ((lower.size() + upper.size()) % 2 != 0) {
        HomDims d = hom_dim_series(lower, upper, lam, mode, cutoff);
        checks.push_back({"odd endpoint count gives the zero space", d.full.is_zero()});
        return checks;
    }
    if (lower.empty() && upper.empty()) {
        HomDims d = hom_dim_series(lower, upper, lam, mode, cutoff);
        checks.push_back({"closed case equals the bubble series",
                          d.full == xi_series(mode, cutoff)});
        return checks;
    }
    if (!lower.empty()) {
        // rotate the rightmost lower endpoint to the end of the upper boundary
        std::vector<int> low2(lower.begin(), lower.end() - 1);
        std::vector<int> up2(upper);
        int s = lower.back();
        up2.push_back(-s);
        int lam2 = lam + 2 * s;
        HomDims lhs = hom_dim_series(lower, upper, lam, mode, cutoff);
        HomDims rhs = hom_dim_series(low2, up2, lam2, mode, cutoff);
        // s=+1: hom(e+) = q^(1+lam) hom(...); s=-1: hom(e-) = pi^(lam-1) q^(1-lam) hom(...)
        TruncatedSeries shifted = s == +1 ? rhs.full.shifted(1 + lam, 0)
                                          : rhs.full.shifted(1 - lam, lam - 1);
        int through = std::min(lhs.full.cutoff(), shifted.cutoff());
        checks.push_back({"rotating the last lower endpoint shifts the series by a monomial",
                          lhs.full.equal_through(shifted, through)});
    }
    if (!upper.empty()) {
        // rotate the rightmost upper endpoint down; the rotated space carries
        // the appended lower symbol u = -s at the new rightmost weight lam+2s
        std::vector<int> up2(upper.begin(), upper.end() - 1);
        std::vector<int> low2(lower);
        int s = upper.back();
        int u = -s;
        low2.push_back(u);
        int lam2 = lam + 2 * s;
        HomDims lhs = hom_dim_series(lower, upper, lam, mode, cutoff);
        HomDims rhs = hom_dim_series(low2, up2, lam2, mode, cutoff);
        TruncatedSeries expect = u == +1 ? lhs.full.shifted(1 + lam2, 0)
                                         : lhs.full.shifted(1 - lam2, lam2 - 1);
        int through = std::min(rhs.full.cutoff(), expect.cutoff());
        checks.push_back({"rotating the last upper endpoint shifts the series by a monomial",
                          rhs.full.equal_through(expect, through)});
    }
    return checks;
}

std::vector<int> parse_signed_sequence(const std::string& s) {
    std::vector<int> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '+')
            out.push_back(+1);
        else if (ch == '-')
            out.push_back(-1);
        else
            throw ParseError(i, "signed sequences use only '+' and '-'");
    }
    return out;
}

} // namespace oddsl2
