#pragma once

#include "conemom/poly.hpp"

namespace conemom {

// Quotient of polynomials kept in canonical form: gcd(num, den) = 1 and den
// is a primitive integer polynomial with positive leading coefficient (so a
// constant function always has den == 1).
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Poly::constant(1)) {}
    RationalFunction(Poly num, Poly den);
    explicit RationalFunction(Poly num) : num_(std::move(num)), den_(Poly::constant(1)) {}
    explicit RationalFunction(const Rational& c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return den_.degree() == 0 && num_.degree() <= 0; }
    // Requires is_constant().
    Rational constant_value() const;

    // Throws errc::pole_in_domain when den(x) == 0.
    Rational eval(const Rational& x) const;
    bool has_pole_at(const Rational& x) const { return den_.eval(x) == 0; }

    RationalFunction derivative() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend RationalFunction operator*(const Rational& c, RationalFunction a) {
        return a *= RationalFunction(c);
    }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

private:
    void normalize();

    Poly num_;
    Poly den_;
};

}  // namespace conemom
