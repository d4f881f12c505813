#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "isored/rational.hpp"

namespace isored {

// Dense univariate polynomial over exact rationals, coefficients stored in
// ascending degree.  The zero polynomial has an empty coefficient vector;
// otherwise the top coefficient is nonzero.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return constant(Rational(1)); }
    static Polynomial constant(const Rational& a);
    // The variable itself (the monomial of degree 1).
    static Polynomial x();
    static Polynomial monomial(int degree, const Rational& a);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    // Zero beyond the stored range.
    const Rational& coeff(int k) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative() const;
    Rational eval(const Rational& x0) const;
    Polynomial monic() const;

    // Renders in descending degree with explicit signs, e.g. "-λ^3 + 2λ".
    std::string to_string(const std::string& var = "λ") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// Quotient and remainder of a by b over the rationals; b must be nonzero.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);

// Division known to be exact; raises InternalError on a nonzero remainder.
Polynomial poly_exact_div(const Polynomial& a, const Polynomial& b);

// Monic gcd; poly_gcd(0,0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

Polynomial poly_pow(const Polynomial& p, int e);

// True iff p has no repeated roots, i.e. gcd(p, p') is constant.
// Raises ZeroPolynomial for p = 0.
bool is_squarefree(const Polynomial& p);

// Total order for use in sorted containers; degree first, then coefficients.
bool lex_less(const Polynomial& a, const Polynomial& b);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace isored
