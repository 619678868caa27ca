#ifndef HVF_NUMFIELD_HPP
#define HVF_NUMFIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "hvf/rational.hpp"

namespace hvf
{

// Integer polynomial, ascending coefficients, no trailing zeros.
struct IntPolynomial {
    std::vector<BigInt> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    BigInt leading() const { return coeffs.back(); }
    std::string str(const std::string &var = "x") const;
    friend bool operator==(const IntPolynomial &, const IntPolynomial &) = default;
};

// Phi_n(y), computed by exact division of y^n - 1 by Phi_d for d | n, d < n.
IntPolynomial cyclotomic_polynomial(int n);

// Monic minimal polynomial of 2cos(pi/mu) over Q. Cached per mu.
IntPolynomial minimal_polynomial(int mu);

// Arithmetic context for Q(varpi_mu): the minimal polynomial and its degree.
class FieldContext
{
public:
    static std::shared_ptr<const FieldContext> get(int mu);

    int mu() const { return mu_; }
    int degree() const { return static_cast<int>(modulus_.size()) - 1; }
    const std::vector<Rational> &modulus() const { return modulus_; }

    explicit FieldContext(int mu);

private:
    int mu_;
    std::vector<Rational> modulus_;
};

// c0 + c1 varpi + ... reduced modulo the minimal polynomial. An element without
// a context is a rational constant and adopts the context of the other operand.
class FieldElement
{
public:
    FieldElement() : coeffs_{Rational(0)} {}
    FieldElement(int v) : coeffs_{Rational(v)} {}
    FieldElement(const Rational &v) : coeffs_{v} {}
    FieldElement(std::shared_ptr<const FieldContext> ctx, std::vector<Rational> coeffs);

    static FieldElement varpi(int mu);
    static FieldElement constant(int mu, const Rational &v);

    const std::shared_ptr<const FieldContext> &context() const { return ctx_; }
    int mu() const { return ctx_ ? ctx_->mu() : 0; }
    // Coefficients padded to the field degree (length 1 without a context).
    std::vector<Rational> coeffs() const;

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const { return coeffs_.empty() ? Rational(0) : coeffs_[0]; }

    FieldElement inverse() const;

    FieldElement &operator+=(const FieldElement &o);
    FieldElement &operator-=(const FieldElement &o);
    FieldElement &operator*=(const FieldElement &o);
    FieldElement &operator/=(const FieldElement &o) { return *this *= o.inverse(); }

    friend FieldElement operator+(FieldElement a, const FieldElement &b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement &b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement &b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement &b) { return a /= b; }
    friend FieldElement operator-(const FieldElement &a);
    friend bool operator==(const FieldElement &a, const FieldElement &b);

    // Real embedding varpi -> 2cos(pi/mu), evaluated in MPFR.
    double to_double() const;
    long double to_long_double() const;
    std::string embed_string(int digits) const;

    // Human form such as "1/2 + varpi^2"; LaTeX uses \varpi.
    std::string str() const;
    std::string latex() const;

private:
    void adopt(const FieldElement &o);
    void trim();

    std::shared_ptr<const FieldContext> ctx_;
    std::vector<Rational> coeffs_; // trailing zeros trimmed, at least one entry
};

FieldElement pow(const FieldElement &base, unsigned exponent);

// 2cos(pi/mu) to the requested number of decimal digits.
std::string varpi_string(int mu, int digits);
long double varpi_value(int mu);

} // namespace hvf

#endif
