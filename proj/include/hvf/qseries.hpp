#ifndef HVF_QSERIES_HPP
#define HVF_QSERIES_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "hvf/domain.hpp"
#include "hvf/errors.hpp"
#include "hvf/rational.hpp"

namespace hvf
{

// Truncated expansion c_0 + c_1 q + ... + c_N q^N with an optional weight tag.
// Binary operations truncate to the shorter operand.
template <typename T> class QSeries
{
public:
    QSeries() : coeffs_(1, T(0)) {}
    explicit QSeries(int trunc, std::optional<int> weight = std::nullopt)
        : coeffs_(static_cast<std::size_t>(check_trunc(trunc)) + 1, T(0)), weight_(weight)
    {
    }
    QSeries(std::vector<T> coeffs, std::optional<int> weight = std::nullopt)
        : coeffs_(std::move(coeffs)), weight_(weight)
    {
        if (coeffs_.empty()) {
            throw domain_error("series needs at least a constant term");
        }
    }

    static QSeries constant(int trunc, const T &c, std::optional<int> weight = std::nullopt)
    {
        QSeries s(trunc, weight);
        s.coeffs_[0] = c;
        return s;
    }

    int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::optional<int> weight() const { return weight_; }
    QSeries with_weight(std::optional<int> w) const
    {
        QSeries s = *this;
        s.weight_ = w;
        return s;
    }
    const std::vector<T> &coeffs() const { return coeffs_; }
    T &operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }
    const T &operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }

    QSeries truncate(int n) const
    {
        QSeries s = *this;
        s.coeffs_.resize(static_cast<std::size_t>(std::min(n, trunc())) + 1);
        return s;
    }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const T &c) { return scalar_traits<T>::is_zero(c); });
    }

    QSeries &operator+=(const QSeries &o)
    {
        weight_ = merge_sum_tag(weight_, o.weight_);
        shrink_to(o.trunc());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        return *this;
    }
    QSeries &operator-=(const QSeries &o)
    {
        weight_ = merge_sum_tag(weight_, o.weight_);
        shrink_to(o.trunc());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] -= o.coeffs_[i];
        }
        return *this;
    }
    QSeries &operator*=(const T &s)
    {
        for (auto &c : coeffs_) {
            c *= s;
        }
        return *this;
    }

    friend QSeries operator+(QSeries a, const QSeries &b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries &b) { return a -= b; }
    friend QSeries operator*(QSeries a, const T &s) { return a *= s; }
    friend QSeries operator*(const T &s, QSeries a) { return a *= s; }
    friend QSeries operator-(QSeries a)
    {
        for (auto &c : a.coeffs_) {
            c = T(0) - c;
        }
        return a;
    }

    // Cauchy product.
    friend QSeries operator*(const QSeries &a, const QSeries &b)
    {
        const int n = std::min(a.trunc(), b.trunc());
        std::optional<int> w;
        if (a.weight_ && b.weight_) {
            w = *a.weight_ + *b.weight_;
        }
        QSeries out(n, w);
        for (int i = 0; i <= n; ++i) {
            if (scalar_traits<T>::is_zero(a[i])) {
                continue;
            }
            for (int j = 0; i + j <= n; ++j) {
                out.coeffs_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
            }
        }
        return out;
    }

    // Coefficient of q^n in a*b, without forming the whole product.
    static T product_coeff(const QSeries &a, const QSeries &b, int n)
    {
        T acc(0);
        for (int j = 0; j <= n; ++j) {
            acc += a[j] * b[n - j];
        }
        return acc;
    }

    friend bool operator==(const QSeries &a, const QSeries &b) { return a.coeffs_ == b.coeffs_; }

    template <typename U, typename F> QSeries<U> map(F &&f) const
    {
        std::vector<U> out;
        out.reserve(coeffs_.size());
        for (const auto &c : coeffs_) {
            out.push_back(f(c));
        }
        return QSeries<U>(std::move(out), weight_);
    }

private:
    static int check_trunc(int trunc)
    {
        if (trunc < 0) {
            throw domain_error("truncation order must be nonnegative");
        }
        return trunc;
    }
    static std::optional<int> merge_sum_tag(std::optional<int> a, std::optional<int> b)
    {
        if (a && b && *a != *b) {
            throw domain_error("adding series of different weight");
        }
        return a ? a : b;
    }
    void shrink_to(int n)
    {
        if (n < trunc()) {
            coeffs_.resize(static_cast<std::size_t>(n) + 1);
        }
    }

    std::vector<T> coeffs_;
    std::optional<int> weight_;
};

template <typename T> QSeries<T> pow(const QSeries<T> &base, unsigned exponent)
{
    std::optional<int> w;
    if (base.weight()) {
        w = *base.weight() * static_cast<int>(exponent);
    }
    QSeries<T> result = QSeries<T>::constant(base.trunc(), T(1), base.weight() ? std::optional<int>(0) : std::nullopt);
    QSeries<T> b = base;
    while (exponent != 0) {
        if (exponent & 1u) {
            result = result * b;
        }
        exponent >>= 1;
        if (exponent != 0) {
            b = b * b;
        }
    }
    return result.with_weight(w);
}

// q d/dq. The result carries no weight tag.
template <typename T> QSeries<T> theta(const QSeries<T> &s)
{
    QSeries<T> out(s.trunc());
    for (int n = 1; n <= s.trunc(); ++n) {
        out[n] = s[n] * from_rational<T>(Rational(n));
    }
    return out;
}

template <typename R, typename T> QSeries<R> convert_series(const QSeries<T> &s)
{
    return s.template map<R>([](const T &c) {
        if constexpr (std::is_same_v<R, T>) {
            return c;
        } else if constexpr (std::is_floating_point_v<R>) {
            return static_cast<R>(c.to_long_double());
        } else {
            return R(c);
        }
    });
}

// sum_{d | n} d^m.
BigInt divisor_sigma(unsigned m, long n);

// sum_n (n sigma_3(n) - n^2 sigma_1(n))/6 q^n.
QSeries<Rational> extremal_D63(int trunc);

// Exact coefficients c with sum c_i basis_i == target through matchN, then
// checked through the common truncation. Throws residual_error with the first
// order at which no combination matches.
std::vector<Rational> express_in_depth_basis(const QSeries<Rational> &target,
                                             const std::vector<QSeries<Rational>> &basis, int matchN);

} // namespace hvf

#endif
