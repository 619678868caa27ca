#ifndef HVF_RATIONAL_HPP
#define HVF_RATIONAL_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hvf
{

using BigInt = mpz_class;

// Exact rational number, always in lowest terms with a positive denominator.
class Rational
{
public:
    Rational() = default;
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(long long v) : q_(static_cast<long>(v)) {}
    Rational(const BigInt &n) : q_(n) {}
    Rational(const BigInt &num, const BigInt &den);
    Rational(long num, long den);
    explicit Rational(const mpq_class &q) : q_(q) { q_.canonicalize(); }

    // Accepts "p/q", "p", and finite decimals such as "-1.25".
    static Rational parse(std::string_view text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    const mpq_class &raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational inverse() const;
    double to_double() const;
    long double to_long_double() const;

    // Always "p/q", including a unit denominator.
    std::string str() const;

    Rational &operator+=(const Rational &o)
    {
        q_ += o.q_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        q_ -= o.q_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        q_ *= o.q_;
        return *this;
    }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a)
    {
        Rational r;
        r.q_ = -a.q_;
        return r;
    }
    friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

Rational pow(const Rational &base, unsigned exponent);
Rational abs(const Rational &x);

std::ostream &operator<<(std::ostream &os, const Rational &q);

BigInt factorial(unsigned n);

} // namespace hvf

#endif
