#include "hvf/combinat.hpp"

#include "hvf/errors.hpp"

namespace hvf
{

Rational binom(long n, long k)
{
    if (k < 0) {
        return Rational(0);
    }
    if (n >= 0) {
        if (k > n) {
            return Rational(0);
        }
        BigInt r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return Rational(r);
    }
    // n(n-1)...(n-k+1)/k! for negative n.
    BigInt r;
    const BigInt nn(n);
    mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(r);
}

Rational rising(const Rational &z, long k)
{
    if (k < 0) {
        throw domain_error("rising binomial needs k >= 0");
    }
    Rational num(1);
    for (long i = 0; i < k; ++i) {
        num *= z + Rational(i);
    }
    return num / Rational(factorial(static_cast<unsigned>(k)));
}

Rational bracket(long r, long l, long m)
{
    if (l < 0 || m < 0 || r < 0) {
        throw domain_error("bracket arguments must be nonnegative");
    }
    if (l > r) {
        throw domain_error("bracket requires l <= r");
    }
    return Rational(factorial(static_cast<unsigned>(r - l)), factorial(static_cast<unsigned>(r))) *
           Rational(factorial(static_cast<unsigned>(m + l)), factorial(static_cast<unsigned>(m)));
}

bool check_coeff_equiv(long bound)
{
    if (bound < 1) {
        throw domain_error("bound must be at least 1");
    }
    for (long r = 0; r <= bound; ++r) {
        for (long l = 0; l <= r; ++l) {
            for (long m = 0; m <= r - l; ++m) {
                for (long p = 0; p <= r - l - m; ++p) {
                    const Rational lhs = rising(Rational(m + 1), p) * bracket(r, l, m + p);
                    const Rational rhs = binom(r - l, m) * bracket(r, l + m, p);
                    if (lhs != rhs) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

IdentitySides vandermonde_like(long k, long y, long p)
{
    if (k < 0 || y < 0 || p < 0) {
        throw domain_error("vandermonde_like arguments must be nonnegative");
    }
    Rational lhs(0);
    for (long l = 0; l <= k; ++l) {
        const Rational term = binom(k, l) * binom(y - l, p);
        lhs += (l % 2 == 0) ? term : -term;
    }
    return {lhs, binom(y - k, y - p)};
}

bool check_vandermonde_like(long bound)
{
    for (long y = 0; y <= bound; ++y) {
        for (long k = 0; k <= y; ++k) {
            for (long p = 0; p <= bound; ++p) {
                const auto s = vandermonde_like(k, y, p);
                if (s.lhs != s.rhs) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace hvf
