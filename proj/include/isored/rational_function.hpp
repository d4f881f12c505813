#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "isored/polynomial.hpp"

namespace isored {

// Exact rational function num/den over the rationals.
//
// Canonical form: lowest terms, monic denominator, zero is 0/1.  Equality is
// therefore componentwise.  The class 𝕎 of reduced-graph edge weights
// additionally has deg(num) ≤ deg(den); intermediate arithmetic may leave
// that class, which in_W() reports.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Polynomial::one()) {}
    RationalFunction(long long n) : num_(Polynomial::constant(Rational(n))), den_(Polynomial::one()) {}
    RationalFunction(const Rational& c) : num_(Polynomial::constant(c)), den_(Polynomial::one()) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(Polynomial::one()) {}
    // Normalizing constructor; raises ZeroDenominator for den = 0.
    RationalFunction(Polynomial num, Polynomial den);

    // The indeterminate λ (not in 𝕎).
    static RationalFunction lambda();

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    // Valid only when is_constant().
    Rational constant_value() const;
    bool in_W() const { return num_.degree() <= den_.degree(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    // Raises DivisionByZeroFunction on the zero function.
    RationalFunction inverse() const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    // Coefficients c_0..c_K of the expansion f(λ) = Σ_j c_j λ^(-j).
    // Requires deg(num) ≤ deg(den); raises NotProper otherwise.
    std::vector<Rational> series_at_infinity(int K) const;

    std::string to_string(const std::string& var = "λ") const;

  private:
    Polynomial num_;
    Polynomial den_;
};

// rf_normalize of the build contract: lowest terms, monic denominator.
inline RationalFunction rf_normalize(Polynomial num, Polynomial den) {
    return RationalFunction(std::move(num), std::move(den));
}

bool lex_less(const RationalFunction& a, const RationalFunction& b);

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

// Exact decomposition f = constant + Σ_k a_k/(λ−r_k)^(ℓ_k).
struct PartialFractionForm {
    struct Term {
        Rational root;   // r_k
        int power = 1;   // ℓ_k ≥ 1
        Rational coeff;  // a_k, nonzero
    };
    Rational constant;
    // Distinct (root, power) pairs, sorted by (root, power) for determinism.
    std::vector<Term> terms;
};

// Requires f ∈ 𝕎 (NotProper otherwise) and a denominator splitting into
// rational linear factors (NonSplittingDenominator names the residual
// factor otherwise).  The result recombines to f exactly; that identity is
// verified internally before returning.
PartialFractionForm partial_fractions(const RationalFunction& f);

RationalFunction recombine(const PartialFractionForm& form);

// Rational roots of p with multiplicity, plus the rootless residual factor.
struct RationalRoots {
    std::vector<std::pair<Rational, int>> roots;
    Polynomial residual;  // constant iff p splits over the rationals
};
RationalRoots rational_roots(const Polynomial& p);

}  // namespace isored
