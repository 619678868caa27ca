#ifndef HVF_DOMAIN_HPP
#define HVF_DOMAIN_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <string>

#include "hvf/numfield.hpp"
#include "hvf/rational.hpp"

namespace hvf
{

// Per-domain hooks used by the generic series, matrix and Eisenstein code.
// Every domain T supports T(0), T(1), +, -, *, / and ==.
template <typename T> struct scalar_traits;

template <> struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational from_rational(const Rational &q) { return q; }
    static bool is_zero(const Rational &x) { return x.is_zero(); }
    template <typename R> static std::complex<R> to_complex(const Rational &x)
    {
        return {static_cast<R>(x.to_long_double()), R(0)};
    }
    static std::string str(const Rational &x) { return x.str(); }
};

template <> struct scalar_traits<FieldElement> {
    static constexpr bool exact = true;
    static FieldElement from_rational(const Rational &q) { return FieldElement(q); }
    static bool is_zero(const FieldElement &x) { return x.is_zero(); }
    template <typename R> static std::complex<R> to_complex(const FieldElement &x)
    {
        return {static_cast<R>(x.to_long_double()), R(0)};
    }
    static std::string str(const FieldElement &x) { return x.str(); }
};

template <typename F> struct float_traits {
    static constexpr bool exact = false;
    static F from_rational(const Rational &q) { return static_cast<F>(q.to_long_double()); }
    static bool is_zero(const F &x) { return x == F(0); }
    template <typename R> static std::complex<R> to_complex(const F &x) { return {static_cast<R>(x), R(0)}; }
    static std::string str(const F &x)
    {
        std::ostringstream os;
        os.precision(std::numeric_limits<F>::max_digits10);
        os << x;
        return os.str();
    }
};

template <> struct scalar_traits<double> : float_traits<double> {
};
template <> struct scalar_traits<long double> : float_traits<long double> {
};

template <typename F> struct scalar_traits<std::complex<F>> {
    static constexpr bool exact = false;
    static std::complex<F> from_rational(const Rational &q) { return {static_cast<F>(q.to_long_double()), F(0)}; }
    static bool is_zero(const std::complex<F> &x) { return x == std::complex<F>(0); }
    template <typename R> static std::complex<R> to_complex(const std::complex<F> &x)
    {
        return {static_cast<R>(x.real()), static_cast<R>(x.imag())};
    }
    static std::string str(const std::complex<F> &x)
    {
        std::ostringstream os;
        os.precision(std::numeric_limits<F>::max_digits10);
        os << x.real() << (x.imag() < 0 ? "-" : "+") << std::abs(x.imag()) << "i";
        return os.str();
    }
};

template <typename T> T from_rational(const Rational &q)
{
    return scalar_traits<T>::from_rational(q);
}

} // namespace hvf

#endif
