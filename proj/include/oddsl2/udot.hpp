#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "oddsl2/cyclotomic.hpp"
#include "oddsl2/series.hpp"

namespace oddsl2 {

// A canonical basis symbol of the idempotented covering quantum group:
// E^(a) F^(b) 1_lam (kind EF, only for lam < b-a) or F^(b) E^(a) 1_lam
// (kind FE, for lam >= b-a; ties are always stored as FE).
enum class SymbolKind { EF, FE };

struct CanonicalSymbol {
    SymbolKind kind;
    int a = 0; // E divided power
    int b = 0; // F divided power
    int lam = 0; // source weight

    int source() const { return lam; }
    int target() const { return lam + 2 * (a - b); }

    bool operator<(const CanonicalSymbol& o) const {
        return std::tie(lam, a, b, kind) < std::tie(o.lam, o.a, o.b, o.kind);
    }
    bool operator==(const CanonicalSymbol& o) const {
        return kind == o.kind && a == o.a && b == o.b && lam == o.lam;
    }
    std::string to_string() const;
};

// A CoveringScalar-linear combination of canonical symbols sharing source and
// target weights. The empty combination is the zero element.
class CanonicalElement {
public:
    CanonicalElement() = default;
    static CanonicalElement zero() { return CanonicalElement(); }
    static CanonicalElement idempotent(int lam); // 1_lam
    static CanonicalElement symbol(const CanonicalSymbol& s, const CoveringScalar& c);
    // Convenience: E 1_lam and F 1_lam as canonical elements.
    static CanonicalElement E1(int lam);
    static CanonicalElement F1(int lam);

    bool is_zero() const { return terms_.empty(); }
    const std::map<CanonicalSymbol, CoveringScalar>& terms() const { return terms_; }
    void add(const CanonicalSymbol& s, const CoveringScalar& c);

    int source() const; // requires nonzero
    int target() const; // requires nonzero

    CanonicalElement operator+(const CanonicalElement& o) const;
    CanonicalElement operator-(const CanonicalElement& o) const;
    CanonicalElement times(const CoveringScalar& c) const;
    bool operator==(const CanonicalElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const CanonicalElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::map<CanonicalSymbol, CoveringScalar> terms_;
};

// Composite x after y. Weight-incompatible arguments give the zero element
// (the WeightMismatch flag of the CLI layer).
CanonicalElement multiply(const CanonicalElement& x, const CanonicalElement& y);

// When enabled, every multiply() is replayed on the modules V^Lambda for
// Lambda <= bound and any disagreement throws OracleMismatch.
void set_multiply_validation(bool enabled, int lambda_bound = 8);

// Action of an element on v_k in V^Lambda; zero vector on weight mismatch.
ModuleVector apply_to_module(const CanonicalElement& x, int Lambda, int k);

// Compare actions of x and y on every basis vector of every V^Lambda with
// Lambda <= lambda_max.
bool oracle_equal(const CanonicalElement& x, const CanonicalElement& y, int lambda_max);

// The linear anti-automorphism rho, the anti-linear anti-automorphism
// tau = bar . rho, and the bar involution.
CanonicalElement rho(const CanonicalElement& x);
CanonicalElement tau(const CanonicalElement& x);
CanonicalElement bar(const CanonicalElement& x);

// Sesquilinear form <x,y>, computed by stripping letters off the left
// argument through tau-adjointness until the base case on pure F divided
// powers applies. Exact through `cutoff`.
TruncatedSeries sesquilinear_form(const CanonicalElement& x, const CanonicalElement& y,
                                  int cutoff);
// Variant that strips from the right argument first; used to check that the
// reduction is direction-independent.
TruncatedSeries sesquilinear_form_rightstrip(const CanonicalElement& x,
                                             const CanonicalElement& y, int cutoff);
// Bilinear form (x,y) = bar(<x, bar(y)>).
TruncatedSeries bilinear_form(const CanonicalElement& x, const CanonicalElement& y, int cutoff);

// Symbol grammar: E(a)F(b)@lam=<int> | F(b)E(a)@lam=<int>, with either block
// optional, e.g. "F(1)@lam=3" or "1@lam=0".
CanonicalElement parse_canonical(const std::string& src);

} // namespace oddsl2
