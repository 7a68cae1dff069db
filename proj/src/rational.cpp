#include "conemom/rational.hpp"
#include "conemom/errors.hpp"

#include <cctype>
#include <cmath>

namespace conemom {

Rational rational_from_double(double x) {
    if (!std::isfinite(x))
        fail(errc::invalid_argument, "cannot convert non-finite double to rational");
    return Rational(x); // mpq_set_d is exact for finite doubles
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// GMP's string constructor auto-detects the base from "0"/"0x" prefixes, so
// leading zeros must be stripped to keep everything decimal.
Int decimal_digits_to_int(std::string_view digits) {
    size_t nz = digits.find_first_not_of('0');
    if (nz == std::string_view::npos)
        return Int(0);
    return Int{std::string(digits.substr(nz))};
}

Int parse_int(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = (s[0] == '-');
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        fail(errc::invalid_argument, "malformed integer literal");
    Int v = decimal_digits_to_int(s);
    return neg ? Int(-v) : v;
}

} // namespace

Rational parse_rational(std::string_view text) {
    if (text.empty())
        fail(errc::invalid_argument, "empty rational literal");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Int num = parse_int(text.substr(0, slash));
        Int den = parse_int(text.substr(slash + 1));
        if (den == 0)
            fail(errc::invalid_argument, "zero denominator");
        return Rational(num, den);
    }

    // Decimal literal: sign, digits, optional fraction, optional exponent.
    std::string_view s = text;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = (s[0] == '-');
        s.remove_prefix(1);
    }

    long exp10 = 0;
    if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
        exp10 = static_cast<long>(parse_int(s.substr(epos + 1)).convert_to<long long>());
        s = s.substr(0, epos);
    }

    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty())
            fail(errc::invalid_argument, "malformed decimal literal");
        if (!ip.empty() && !all_digits(ip))
            fail(errc::invalid_argument, "malformed decimal literal");
        if (!fp.empty() && !all_digits(fp))
            fail(errc::invalid_argument, "malformed decimal literal");
        digits = std::string(ip) + std::string(fp);
        exp10 -= static_cast<long>(fp.size());
    } else {
        if (!all_digits(s))
            fail(errc::invalid_argument, "malformed rational literal");
        digits = std::string(s);
    }
    if (digits.empty())
        fail(errc::invalid_argument, "malformed rational literal");

    Rational v{decimal_digits_to_int(digits)};
    if (exp10 > 0)
        v *= Rational(boost::multiprecision::pow(Int(10), static_cast<unsigned>(exp10)));
    else if (exp10 < 0)
        v /= Rational(boost::multiprecision::pow(Int(10), static_cast<unsigned>(-exp10)));
    return neg ? Rational(-v) : v;
}

std::string to_string(const Rational& q) {
    Int num = numerator(q), den = denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

Rational pow2(long e) {
    if (e >= 0)
        return Rational(Int(1) << e);
    return Rational(Int(1), Int(1) << (-e));
}

} // namespace conemom
