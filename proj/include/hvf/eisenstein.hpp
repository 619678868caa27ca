#ifndef HVF_EISENSTEIN_HPP
#define HVF_EISENSTEIN_HPP

#include <complex>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "hvf/numfield.hpp"
#include "hvf/qseries.hpp"

namespace hvf
{

// Constant C in E2(Sz)/z^2 = E2(z) - C Sz, held as numerator/(pi i) with an
// exact numerator in Q(varpi_mu).
class StructureConstant
{
public:
    // 2 mu varpi / ((mu-2) pi i), the value forced by the weight-2 equation.
    static StructureConstant from_system(int mu);
    // lcm(2, mu) / (pi i).
    static StructureConstant from_lcm(int mu);
    static StructureConstant with_numerator(int mu, const Rational &numerator);

    int mu() const { return mu_; }
    const FieldElement &numerator() const { return numerator_; }
    const std::string &kind() const { return kind_; }

    template <typename R> std::complex<R> value() const
    {
        return {R(0), -static_cast<R>(numerator_.to_long_double()) / std::numbers::pi_v<R>};
    }
    // E2(i) = C i / 2, since S fixes i.
    template <typename R> R fixed_point() const
    {
        return static_cast<R>(numerator_.to_long_double()) / (R(2) * std::numbers::pi_v<R>);
    }
    std::string str() const { return "(" + numerator_.str() + ")/(pi*i)"; }

private:
    StructureConstant(int mu, FieldElement numerator, std::string kind)
        : mu_(mu), numerator_(std::move(numerator)), kind_(std::move(kind))
    {
    }
    int mu_;
    FieldElement numerator_;
    std::string kind_;
};

// Closure pivot at each order 0..trunc: the coefficient of a_n in the top
// equation. Depends only on (mu, n). Cached.
std::vector<Rational> recursion_pivots(int mu, int trunc);

// Orders n >= 2 (up to trunc) at which the pivot vanishes.
std::vector<int> degenerate_orders(int mu, int trunc);

// Eisenstein series of weights 2, 4, ..., 2mu with unit constant terms.
template <typename T> struct EisensteinFamily {
    int mu = 0;
    int trunc = 0;
    T a1{};
    std::map<int, T> pins;
    std::vector<QSeries<T>> members; // members[k-1] has weight 2k
    QSeries<T> closure_residual;

    const QSeries<T> &series(int weight) const
    {
        if (weight % 2 != 0 || weight < 2 || weight > 2 * mu) {
            throw domain_error("no Eisenstein member of weight " + std::to_string(weight));
        }
        return members[static_cast<std::size_t>(weight / 2 - 1)];
    }
    const QSeries<T> &E2() const { return members[0]; }
};

namespace detail
{

template <typename T> struct SystemCoefficients {
    T alpha;                 // weight-2 equation: theta E2 = alpha (E2^2 - E4)
    std::vector<T> k_beta;   // k (mu-2)/(2mu)
    std::vector<T> gamma;    // (mu-k)/mu
    std::vector<T> e4_coeff; // (k-2)/2

    explicit SystemCoefficients(int mu)
    {
        alpha = from_rational<T>(Rational(mu - 2, 4 * mu));
        k_beta.resize(static_cast<std::size_t>(mu) + 1);
        gamma.resize(static_cast<std::size_t>(mu) + 1);
        e4_coeff.resize(static_cast<std::size_t>(mu) + 1);
        for (int k = 1; k <= mu; ++k) {
            k_beta[k] = from_rational<T>(Rational(k * (mu - 2), 2 * mu));
            gamma[k] = from_rational<T>(Rational(mu - k, mu));
            e4_coeff[k] = from_rational<T>(Rational(k - 2, 2));
        }
    }
};

template <typename T> T conv_at(const std::vector<T> &a, const std::vector<T> &b, int n)
{
    T acc(0);
    for (int j = 0; j <= n; ++j) {
        acc += a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(n - j)];
    }
    return acc;
}

// Fill order n of every member from a trial a_n and return the residual of
// the top equation at that order. e[k] holds the weight-2k coefficients.
template <typename T>
T fill_order(int mu, const SystemCoefficients<T> &sc, std::vector<std::vector<T>> &e, int n, const T &an)
{
    const std::size_t un = static_cast<std::size_t>(n);
    const T nT = from_rational<T>(Rational(n));
    e[1][un] = an;
    e[2][un] = conv_at(e[1], e[1], n) - nT * an / sc.alpha;
    for (int k = 2; k < mu; ++k) {
        T rhs = sc.k_beta[k] * conv_at(e[1], e[k], n) - nT * e[k][un];
        if (k > 2) {
            rhs -= sc.e4_coeff[k] * conv_at(e[2], e[k - 1], n);
        }
        e[k + 1][un] = rhs / sc.gamma[k];
    }
    T res = nT * e[mu][un] - sc.k_beta[mu] * conv_at(e[1], e[mu], n);
    res += sc.e4_coeff[mu] * conv_at(e[2], e[mu - 1], n);
    return res;
}

} // namespace detail

// Solve the system order by order. a1 is the q-coefficient of E2; pins give
// a_n at orders where the pivot vanishes. Exact domains use the literal
// two-evaluation solve; floating domains use the exact pivot table.
template <typename T>
EisensteinFamily<T> hecke_eisenstein(int mu, int trunc, const T &a1, const std::map<int, T> &pins = {})
{
    if (mu < 3) {
        throw domain_error("mu must be at least 3");
    }
    if (trunc < 1) {
        throw domain_error("truncation must be at least 1");
    }
    constexpr bool exact = scalar_traits<T>::exact;
    const detail::SystemCoefficients<T> sc(mu);
    const std::vector<Rational> table = recursion_pivots(mu, trunc);
    std::vector<std::vector<T>> e(static_cast<std::size_t>(mu) + 1,
                                  std::vector<T>(static_cast<std::size_t>(trunc) + 1, T(0)));
    for (int k = 1; k <= mu; ++k) {
        e[k][0] = T(1);
    }
    for (const auto &[n, v] : pins) {
        if (n < 2 || n > trunc || !table[static_cast<std::size_t>(n)].is_zero()) {
            throw domain_error("pin at order " + std::to_string(n) + " is not a degenerate order");
        }
    }
    const T r1 = detail::fill_order(mu, sc, e, 1, a1);
    if constexpr (exact) {
        if (!scalar_traits<T>::is_zero(r1)) {
            throw degenerate_recursion(mu, 1, true);
        }
    }
    for (int n = 2; n <= trunc; ++n) {
        const Rational &tp = table[static_cast<std::size_t>(n)];
        const T r0 = detail::fill_order(mu, sc, e, n, T(0));
        T pivot;
        if constexpr (exact) {
            pivot = detail::fill_order(mu, sc, e, n, T(1)) - r0;
            if (!(pivot == from_rational<T>(tp))) {
                throw domain_error("pivot disagrees with the exact table");
            }
        } else {
            pivot = from_rational<T>(tp);
        }
        if (tp.is_zero()) {
            auto it = pins.find(n);
            if (it == pins.end()) {
                throw degenerate_recursion(mu, n, exact && !scalar_traits<T>::is_zero(r0));
            }
            const T res = detail::fill_order(mu, sc, e, n, it->second);
            if constexpr (exact) {
                if (!scalar_traits<T>::is_zero(res)) {
                    throw degenerate_recursion(mu, n, true);
                }
            }
            continue;
        }
        const T an = (T(0) - r0) / pivot;
        detail::fill_order(mu, sc, e, n, an);
    }

    EisensteinFamily<T> fam;
    fam.mu = mu;
    fam.trunc = trunc;
    fam.a1 = a1;
    fam.pins = pins;
    for (int k = 1; k <= mu; ++k) {
        fam.members.emplace_back(e[k], 2 * k);
    }
    // Top equation evaluated on the full series, independent of the solve.
    const QSeries<T> &e2 = fam.members[0];
    const QSeries<T> &e4 = fam.members[1];
    const QSeries<T> &top = fam.members[static_cast<std::size_t>(mu - 1)];
    const QSeries<T> &below = fam.members[static_cast<std::size_t>(mu - 2)];
    QSeries<T> res = theta(top) - (e2 * top).with_weight(std::nullopt) * sc.k_beta[mu];
    res += (e4 * below).with_weight(std::nullopt) * sc.e4_coeff[mu];
    fam.closure_residual = res;
    return fam;
}

// Residual of the weight-2k equation (k = 1..mu) on the family, as a series.
template <typename T> QSeries<T> system_residual(const EisensteinFamily<T> &fam, int k)
{
    const int mu = fam.mu;
    if (k < 1 || k > mu) {
        throw domain_error("equation index out of range");
    }
    const detail::SystemCoefficients<T> sc(mu);
    auto untag = [](const QSeries<T> &s) { return s.with_weight(std::nullopt); };
    const QSeries<T> &e2 = fam.members[0];
    if (k == 1) {
        return theta(e2) - untag(e2 * e2 - fam.members[1]) * sc.alpha;
    }
    const QSeries<T> &ek = fam.members[static_cast<std::size_t>(k - 1)];
    QSeries<T> res = theta(ek) - untag(e2 * ek) * sc.k_beta[k];
    if (k < mu) {
        res += untag(fam.members[static_cast<std::size_t>(k)]) * sc.gamma[k];
    }
    if (k > 2) {
        res += untag(fam.members[1] * fam.members[static_cast<std::size_t>(k - 2)]) * sc.e4_coeff[k];
    }
    return res;
}

} // namespace hvf

#endif
