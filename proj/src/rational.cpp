#include "hvf/rational.hpp"

#include <cctype>
#include <ostream>

#include <mpfr.h>

#include "hvf/errors.hpp"

namespace hvf
{

Rational::Rational(const BigInt &num, const BigInt &den)
{
    if (den == 0) {
        throw division_error("rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

namespace
{

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

BigInt parse_integer(std::string_view s)
{
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw domain_error("malformed integer literal");
    }
    BigInt v(std::string(s), 10);
    return neg ? BigInt(-v) : v;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw domain_error("empty rational literal");
    }
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const BigInt num = parse_integer(text.substr(0, slash));
        return Rational(num, parse_integer(text.substr(slash + 1)));
    }
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool neg = false;
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
            neg = int_part.front() == '-';
            int_part.remove_prefix(1);
        }
        if ((int_part.empty() && frac.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
            (!frac.empty() && !all_digits(frac))) {
            throw domain_error("malformed decimal literal: " + std::string(text));
        }
        std::string digits = std::string(int_part) + std::string(frac);
        BigInt num(digits.empty() ? std::string("0") : digits, 10);
        BigInt den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        Rational r(num, den);
        return neg ? -r : r;
    }
    return Rational(parse_integer(text));
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw division_error("division by zero rational");
    }
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw division_error("inverse of zero rational");
    }
    Rational r;
    r.q_ = 1 / q_;
    return r;
}

double Rational::to_double() const
{
    return static_cast<double>(to_long_double());
}

long double Rational::to_long_double() const
{
    // mpq_get_d truncates and misbehaves near the exponent limits; go through MPFR.
    mpfr_t x;
    mpfr_init2(x, 128);
    mpfr_set_q(x, q_.get_mpq_t(), MPFR_RNDN);
    const long double v = mpfr_get_ld(x, MPFR_RNDN);
    mpfr_clear(x);
    return v;
}

std::string Rational::str() const
{
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational pow(const Rational &base, unsigned exponent)
{
    Rational result(1);
    Rational b = base;
    while (exponent != 0) {
        if (exponent & 1u) {
            result *= b;
        }
        exponent >>= 1;
        if (exponent != 0) {
            b *= b;
        }
    }
    return result;
}

Rational abs(const Rational &x)
{
    return x.sign() < 0 ? -x : x;
}

std::ostream &operator<<(std::ostream &os, const Rational &q)
{
    return os << q.str();
}

BigInt factorial(unsigned n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace hvf
