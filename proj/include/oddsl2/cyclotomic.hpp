#pragma once

#include <map>
#include <string>
#include <vector>

#include "oddsl2/onh.hpp"
#include "oddsl2/scalar.hpp"

namespace oddsl2 {

// Per-degree dimensions of the cyclotomic quotient ONH_n / (x_1^Lambda).
struct CycQuotient {
    int n = 0;
    int Lambda = 0;
    std::map<int, int> dims; // Z-degree -> dimension (zero entries omitted)
    long total = 0;
};

// Brute force: in each degree slice, quotient the {d_w x^alpha} basis by the
// span of a * x_1^Lambda * b over basis words a, b of complementary degree.
CycQuotient quotient_dims(int n, int Lambda);

// The K_0 shadow of the cyclotomic tower: the simple weight module V^Lambda
// with basis v_0..v_Lambda, weight(v_k) = Lambda - 2k.
// F v_k = [k+1] v_{k+1} and E v_k is defined by the covering-relation
// recursion c_{k+1} = ([Lambda-2k] + pi [k] c_k) / [k+1], c_0 = 0.
class WeightModule {
public:
    explicit WeightModule(int Lambda);

    int Lambda() const { return Lambda_; }
    int weight(int k) const { return Lambda_ - 2 * k; }
    // coefficient of v_{k+1} in F v_k (zero when k = Lambda)
    CoveringScalar f_coef(int k) const;
    // coefficient of v_{k-1} in E v_k (zero when k = 0)
    CoveringScalar e_coef(int k) const;

private:
    int Lambda_;
    std::vector<CoveringScalar> ecoef_; // ecoef_[k] for k = 0..Lambda
};

WeightModule weight_module(int Lambda);

// A vector in V^Lambda with CoveringScalar coordinates over v_0..v_Lambda.
using ModuleVector = std::vector<CoveringScalar>;

// Apply a word over {E, F} (composition: rightmost letter acts first) to v_k.
ModuleVector act_word(const std::string& word, int Lambda, int k);

} // namespace oddsl2
