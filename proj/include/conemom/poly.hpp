#pragma once

#include "conemom/rational.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace conemom {

// Dense univariate polynomial over Q, coefficients stored low-to-high with
// trailing zeros trimmed.  The zero polynomial has an empty coefficient
// vector and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const Rational& a);
    // coeff * x^k
    static Poly monomial(int k, const Rational& coeff);
    // (1 + x)^k expanded via binomial coefficients, k >= 0.
    static Poly one_plus_x_pow(int k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }

    // Coefficient of x^k; zero beyond the degree.
    const Rational& operator[](int k) const;
    const Rational& leading() const; // requires non-zero

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, Poly p);
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly derivative() const;
    Rational eval(const Rational& x) const;

    // Quotient and remainder; throws ZeroPolynomial when dividing by zero.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

    // Synthetic division by (x - x0): returns quotient, remainder = eval(x0).
    std::pair<Poly, Rational> deflate(const Rational& x0) const;

    // Largest positive rational c with p/c integral of content one; sign of
    // coefficients preserved.  Requires non-zero.
    Rational content() const;
    Poly primitive_part() const;

    // p divided by x^k; requires the low k coefficients to vanish.
    Poly shift_down(int k) const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Primitive gcd with positive leading coefficient; gcd(0,0) throws.
Poly poly_gcd(Poly a, Poly b);

} // namespace conemom
