#ifndef HVF_COMBINAT_HPP
#define HVF_COMBINAT_HPP

#include <utility>
#include <vector>

#include "hvf/domain.hpp"
#include "hvf/rational.hpp"

namespace hvf
{

// Binomial coefficient. Generalized to negative n via the falling factorial;
// zero for k < 0 and for k > n >= 0.
Rational binom(long n, long k);

// Rising binomial: z(z+1)...(z+k-1)/k!, so that rising(z+1, k) = binom(z+k, k).
Rational rising(const Rational &z, long k);

// Bracket coefficient (r-l)!/r! * (m+l)!/m!. Requires 0 <= l <= r and m >= 0.
Rational bracket(long r, long l, long m);

// rising(m+1, p) * bracket(r, l, m+p) == binom(r-l, m) * bracket(r, l+m, p)
// over all r <= bound, l <= r, m <= r-l, p <= r-l-m.
bool check_coeff_equiv(long bound);

struct IdentitySides {
    Rational lhs;
    Rational rhs;
};

// lhs = sum_l (-1)^l binom(k,l) binom(y-l,p), rhs = binom(y-k, y-p).
IdentitySides vandermonde_like(long k, long y, long p);

// Exhaustive check of vandermonde_like over k <= y <= bound, p <= bound.
bool check_vandermonde_like(long bound);

template <typename T> T binom_as(long n, long k)
{
    return from_rational<T>(binom(n, k));
}

// Forward binomial transform b_n = sum_j binom(n,j) a_j and its alternating inverse.
template <typename T> std::vector<T> binomial_transform(const std::vector<T> &a)
{
    std::vector<T> out(a.size(), T(0));
    for (std::size_t n = 0; n < a.size(); ++n) {
        for (std::size_t j = 0; j <= n; ++j) {
            out[n] += a[j] * binom_as<T>(static_cast<long>(n), static_cast<long>(j));
        }
    }
    return out;
}

template <typename T> std::vector<T> inverse_binomial_transform(const std::vector<T> &b)
{
    std::vector<T> out(b.size(), T(0));
    for (std::size_t n = 0; n < b.size(); ++n) {
        for (std::size_t j = 0; j <= n; ++j) {
            T term = b[j] * binom_as<T>(static_cast<long>(n), static_cast<long>(j));
            if ((n - j) % 2 == 1) {
                out[n] -= term;
            } else {
                out[n] += term;
            }
        }
    }
    return out;
}

} // namespace hvf

#endif
