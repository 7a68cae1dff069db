#include "conemom/poly.hpp"
#include "conemom/errors.hpp"

#include <algorithm>

namespace conemom {

namespace {
const Rational kZero(0);
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Poly Poly::constant(const Rational& a) {
    Poly p;
    if (a != 0)
        p.c_.push_back(a);
    return p;
}

Poly Poly::monomial(int k, const Rational& coeff) {
    Poly p;
    if (coeff != 0) {
        p.c_.assign(static_cast<size_t>(k) + 1, kZero);
        p.c_.back() = coeff;
    }
    return p;
}

Poly Poly::one_plus_x_pow(int k) {
    std::vector<Rational> c(static_cast<size_t>(k) + 1);
    Int binom(1);
    for (int i = 0; i <= k; ++i) {
        c[static_cast<size_t>(i)] = Rational(binom);
        binom = binom * (k - i) / (i + 1);
    }
    return Poly(std::move(c));
}

const Rational& Poly::operator[](int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size()))
        return kZero;
    return c_[static_cast<size_t>(k)];
}

const Rational& Poly::leading() const {
    if (c_.empty())
        fail(errc::zero_polynomial, "zero polynomial has no leading coefficient");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& a : r.c_)
        a = -a;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), kZero);
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), kZero);
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, kZero);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
}

Poly operator*(const Rational& s, Poly p) {
    for (auto& a : p.c_)
        a *= s;
    p.trim();
    return p;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1)
        return Poly();
    std::vector<Rational> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        c[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return Poly(std::move(c));
}

Rational Poly::eval(const Rational& x) const {
    Rational v(0);
    for (size_t i = c_.size(); i-- > 0;)
        v = v * x + c_[i];
    return v;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero())
        fail(errc::zero_polynomial, "polynomial division by zero");
    Poly r(a);
    if (a.degree() < b.degree())
        return {Poly(), r};
    std::vector<Rational> q(static_cast<size_t>(a.degree() - b.degree()) + 1, kZero);
    const Rational& lead = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Rational f = r.leading() / lead;
        q[static_cast<size_t>(k)] = f;
        for (int i = 0; i <= b.degree(); ++i)
            r.c_[static_cast<size_t>(i + k)] -= f * b.c_[static_cast<size_t>(i)];
        r.trim();
    }
    return {Poly(std::move(q)), r};
}

std::pair<Poly, Rational> Poly::deflate(const Rational& x0) const {
    if (c_.empty())
        return {Poly(), kZero};
    size_t n = c_.size() - 1;
    std::vector<Rational> q(n);
    Rational carry = c_[n];
    for (size_t i = n; i-- > 0;) {
        q[i] = carry;
        carry = c_[i] + x0 * carry;
    }
    return {Poly(std::move(q)), carry};
}

Rational Poly::content() const {
    if (c_.empty())
        fail(errc::zero_polynomial, "zero polynomial has no content");
    Int den_lcm(1), num_gcd(0);
    for (const auto& a : c_)
        den_lcm = lcm(den_lcm, denominator(a));
    for (const auto& a : c_) {
        Rational scaled = a * Rational(den_lcm);
        num_gcd = gcd(num_gcd, numerator(scaled));
    }
    return Rational(abs(num_gcd), den_lcm);
}

Poly Poly::primitive_part() const {
    Rational c = content();
    Poly r(*this);
    for (auto& a : r.c_)
        a /= c;
    return r;
}

Poly Poly::shift_down(int k) const {
    if (k == 0)
        return *this;
    for (int i = 0; i < k; ++i)
        if ((*this)[i] != 0)
            fail(errc::invalid_argument, "shift_down would drop non-zero coefficients");
    if (static_cast<size_t>(k) >= c_.size())
        return Poly();
    return Poly(std::vector<Rational>(c_.begin() + k, c_.end()));
}

Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero())
        fail(errc::zero_polynomial, "gcd of two zero polynomials");
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        if (r.is_zero())
            b = Poly();
        else
            b = r.primitive_part();
    }
    Poly g = a.primitive_part();
    if (g.leading() < 0)
        g = -g;
    return g;
}

} // namespace conemom
