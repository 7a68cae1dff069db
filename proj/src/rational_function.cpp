#include "conemom/rational_function.hpp"

#include "conemom/errors.hpp"

namespace conemom {

RationalFunction::RationalFunction(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(errc::zero_polynomial, "rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() >= 1) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
    }
    Rational scale = den_.content();
    if (den_.leading() < 0) scale = -scale;
    Rational inv = 1 / scale;
    num_ = inv * num_;
    den_ = inv * den_;
}

Rational RationalFunction::constant_value() const {
    if (!is_constant()) fail(errc::invalid_argument, "rational function is not constant");
    return num_[0];
}

Rational RationalFunction::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) fail(errc::pole_in_domain, "evaluation at a pole of a rational function");
    return num_.eval(x) / d;
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = Rational(-1) * r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.num_.is_zero()) fail(errc::zero_polynomial, "division by the zero rational function");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

}  // namespace conemom
