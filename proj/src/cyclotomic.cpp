#include "oddsl2/cyclotomic.hpp"

#include <algorithm>

namespace oddsl2 {

CycQuotient quotient_dims(int n, int Lambda) {
    if (n < 1 || Lambda < 0) throw std::invalid_argument("quotient_dims: bad arguments");
    CycQuotient out;
    out.n = n;
    out.Lambda = Lambda;
    const int lw0 = n * (n - 1) / 2;
    // top-degree heuristic: Grassmannian top degree plus the matrix-shift spread
    const int stop = 2 * n * std::max(Lambda - n, 0) + 2 * n * (n - 1);
    const int zero_run_needed = 4;

    // x_1^Lambda as an element
    Exponents xl(static_cast<std::size_t>(n), 0);
    xl[0] = Lambda;
    OnhElement xpow = OnhElement::basis(n, Permutation::identity(n), xl);

    // cache x_1^Lambda * b per right factor b
    std::map<OnhKey, OnhElement> right_products;

    int zero_run = 0;
    for (int d = -2 * lw0;; d += 2) {
        auto keys = onh_basis_of_degree(n, d);
        std::map<OnhKey, std::size_t> index;
        for (std::size_t i = 0; i < keys.size(); ++i) index.emplace(keys[i], i);

        std::vector<std::vector<Int>> rows;
        for (int da = -2 * lw0; da <= d - 2 * Lambda + 2 * lw0; da += 2) {
            int db = d - 2 * Lambda - da;
            auto as = onh_basis_of_degree(n, da);
            auto bs = onh_basis_of_degree(n, db);
            if (as.empty() || bs.empty()) continue;
            for (const auto& kb : bs) {
                auto it = right_products.find(kb);
                if (it == right_products.end()) {
                    OnhElement rp = onh_mul(xpow, OnhElement::basis(n, kb.w, kb.alpha));
                    it = right_products.emplace(kb, std::move(rp)).first;
                }
                if (it->second.is_zero()) continue;
                for (const auto& ka : as) {
                    OnhElement prod = onh_mul(OnhElement::basis(n, ka.w, ka.alpha), it->second);
                    if (prod.is_zero()) continue;
                    std::vector<Int> row(keys.size(), 0);
                    for (const auto& [pk, pc] : prod.terms()) row[index.at(pk)] = pc;
                    rows.push_back(std::move(row));
                }
            }
        }
        int ideal_rank = rank_of_int_matrix(std::move(rows));
        int dim = static_cast<int>(keys.size()) - ideal_rank;
        if (dim > 0) {
            out.dims[d] = dim;
            out.total += dim;
            zero_run = 0;
        } else {
            ++zero_run;
        }
        if (d >= stop && zero_run >= zero_run_needed) break;
        if (d > stop + 2 * zero_run_needed + 2 * lw0 + 2)
            throw DegreeBudgetExceeded("cyclotomic quotient dimensions did not vanish in time");
    }
    return out;
}

WeightModule::WeightModule(int Lambda) : Lambda_(Lambda) {
    if (Lambda < 0) throw std::invalid_argument("weight_module: Lambda must be >= 0");
    ecoef_.assign(static_cast<std::size_t>(Lambda) + 1, CoveringScalar::zero());
    CoveringScalar c = CoveringScalar::zero(); // c_0
    for (int k = 0; k + 1 <= Lambda; ++k) {
        // c_{k+1} = ([Lambda - 2k] + pi [k] c_k) / [k+1], division exact
        CoveringScalar num =
            qint(Lambda - 2 * k) + CoveringScalar::monomial(1, 0, 1) * qint(k) * c;
        c = num.divided_by(qint(k + 1));
        ecoef_[static_cast<std::size_t>(k) + 1] = c;
    }
}

CoveringScalar WeightModule::f_coef(int k) const {
    if (k < 0 || k >= Lambda_) return CoveringScalar::zero();
    return qint(k + 1);
}

CoveringScalar WeightModule::e_coef(int k) const {
    if (k <= 0 || k > Lambda_) return CoveringScalar::zero();
    return ecoef_[static_cast<std::size_t>(k)];
}

WeightModule weight_module(int Lambda) { return WeightModule(Lambda); }

ModuleVector act_word(const std::string& word, int Lambda, int k) {
    if (k < 0 || k > Lambda) throw std::invalid_argument("act_word: k out of range");
    WeightModule m(Lambda);
    ModuleVector v(static_cast<std::size_t>(Lambda) + 1, CoveringScalar::zero());
    v[static_cast<std::size_t>(k)] = CoveringScalar::one();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        char ch = *it;
        if (ch == ' ') continue;
        if (ch != 'E' && ch != 'F') throw ParseError(0, "module word letters must be E or F");
        ModuleVector next(v.size(), CoveringScalar::zero());
        for (std::size_t t = 0; t < v.size(); ++t) {
            if (v[t].is_zero()) continue;
            int kk = static_cast<int>(t);
            if (ch == 'F' && kk + 1 <= Lambda)
                next[t + 1] += v[t] * m.f_coef(kk);
            if (ch == 'E' && kk - 1 >= 0)
                next[t - 1] += v[t] * m.e_coef(kk);
        }
        v = std::move(next);
    }
    return v;
}

} // namespace oddsl2
