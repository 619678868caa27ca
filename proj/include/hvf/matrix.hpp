#ifndef HVF_MATRIX_HPP
#define HVF_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hvf/combinat.hpp"
#include "hvf/domain.hpp"
#include "hvf/errors.hpp"

namespace hvf
{

// Dense square matrix, row-major.
template <typename T> class SquareMatrix
{
public:
    explicit SquareMatrix(std::size_t dim = 1) : dim_(dim), data_(dim * dim, T(0))
    {
        if (dim == 0) {
            throw domain_error("matrix dimension must be at least 1");
        }
    }

    static SquareMatrix identity(std::size_t dim)
    {
        SquareMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    std::size_t dim() const { return dim_; }
    T &operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const T &operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    SquareMatrix &operator+=(const SquareMatrix &o)
    {
        check_dim(o);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] += o.data_[i];
        }
        return *this;
    }
    SquareMatrix &operator-=(const SquareMatrix &o)
    {
        check_dim(o);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] -= o.data_[i];
        }
        return *this;
    }
    SquareMatrix &operator*=(const T &s)
    {
        for (auto &v : data_) {
            v *= s;
        }
        return *this;
    }

    friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix &b) { return a += b; }
    friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix &b) { return a -= b; }
    friend SquareMatrix operator*(SquareMatrix a, const T &s) { return a *= s; }
    friend SquareMatrix operator*(const T &s, SquareMatrix a) { return a *= s; }
    friend SquareMatrix operator-(SquareMatrix a)
    {
        for (auto &v : a.data_) {
            v = T(0) - v;
        }
        return a;
    }

    friend SquareMatrix operator*(const SquareMatrix &a, const SquareMatrix &b)
    {
        a.check_dim(b);
        SquareMatrix out(a.dim_);
        for (std::size_t i = 0; i < a.dim_; ++i) {
            for (std::size_t k = 0; k < a.dim_; ++k) {
                const T &aik = a(i, k);
                if (scalar_traits<T>::is_zero(aik)) {
                    continue;
                }
                for (std::size_t j = 0; j < a.dim_; ++j) {
                    out(i, j) += aik * b(k, j);
                }
            }
        }
        return out;
    }

    template <typename V> std::vector<V> apply(const std::vector<V> &v) const
    {
        if (v.size() != dim_) {
            throw domain_error("vector length does not match matrix dimension");
        }
        std::vector<V> out(dim_, V(0));
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                out[i] += V((*this)(i, j)) * v[j];
            }
        }
        return out;
    }

    friend bool operator==(const SquareMatrix &a, const SquareMatrix &b)
    {
        return a.dim_ == b.dim_ && a.data_ == b.data_;
    }

    bool is_zero() const
    {
        for (const auto &v : data_) {
            if (!scalar_traits<T>::is_zero(v)) {
                return false;
            }
        }
        return true;
    }

    SquareMatrix transpose() const
    {
        SquareMatrix out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                out(j, i) = (*this)(i, j);
            }
        }
        return out;
    }

    SquareMatrix pow(unsigned e) const
    {
        SquareMatrix result = identity(dim_);
        SquareMatrix b = *this;
        while (e != 0) {
            if (e & 1u) {
                result = result * b;
            }
            e >>= 1;
            if (e != 0) {
                b = b * b;
            }
        }
        return result;
    }

    // Gauss-Jordan elimination with first-nonzero pivoting (exact domains).
    SquareMatrix inverse() const
    {
        SquareMatrix a = *this;
        SquareMatrix inv = identity(dim_);
        for (std::size_t col = 0; col < dim_; ++col) {
            std::size_t piv = col;
            while (piv < dim_ && scalar_traits<T>::is_zero(a(piv, col))) {
                ++piv;
            }
            if (piv == dim_) {
                throw division_error("singular matrix");
            }
            if (piv != col) {
                for (std::size_t j = 0; j < dim_; ++j) {
                    std::swap(a(piv, j), a(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            }
            const T scale = T(1) / a(col, col);
            for (std::size_t j = 0; j < dim_; ++j) {
                a(col, j) *= scale;
                inv(col, j) *= scale;
            }
            for (std::size_t i = 0; i < dim_; ++i) {
                if (i == col || scalar_traits<T>::is_zero(a(i, col))) {
                    continue;
                }
                const T f = a(i, col);
                for (std::size_t j = 0; j < dim_; ++j) {
                    a(i, j) -= f * a(col, j);
                    inv(i, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

    // Characteristic polynomial det(X I - M), ascending coefficients, monic,
    // by the Faddeev-LeVerrier recurrence (needs division by integers).
    std::vector<T> char_poly() const
    {
        const std::size_t n = dim_;
        std::vector<T> c(n + 1, T(0));
        c[n] = T(1);
        SquareMatrix mk(n); // M_0 = 0
        for (std::size_t k = 1; k <= n; ++k) {
            SquareMatrix next = *this * mk;
            for (std::size_t i = 0; i < n; ++i) {
                next(i, i) += c[n - k + 1];
            }
            mk = next;
            SquareMatrix am = *this * mk;
            T tr(0);
            for (std::size_t i = 0; i < n; ++i) {
                tr += am(i, i);
            }
            c[n - k] = (T(0) - tr) / from_rational<T>(Rational(static_cast<long>(k)));
        }
        return c;
    }

private:
    void check_dim(const SquareMatrix &o) const
    {
        if (o.dim_ != dim_) {
            throw domain_error("matrix dimension mismatch");
        }
    }

    std::size_t dim_;
    std::vector<T> data_;
};

// P_r(z): entry (i,j) = binom(i,j) z^(i-j) for i >= j.
template <typename T> SquareMatrix<T> pascal(int r, const T &z)
{
    SquareMatrix<T> m(static_cast<std::size_t>(r) + 1);
    for (int i = 0; i <= r; ++i) {
        T zp(1);
        for (int j = i; j >= 0; --j) {
            m(i, j) = binom_as<T>(i, j) * zp;
            zp *= z;
        }
    }
    return m;
}

// A_r: subdiagonal 1..r.
template <typename T> SquareMatrix<T> creation(int r)
{
    SquareMatrix<T> m(static_cast<std::size_t>(r) + 1);
    for (int i = 1; i <= r; ++i) {
        m(i, i - 1) = from_rational<T>(Rational(i));
    }
    return m;
}

// A_r(z) = A_r + z I.
template <typename T> SquareMatrix<T> creation_shifted(int r, const T &z)
{
    SquareMatrix<T> m = creation<T>(r);
    for (int i = 0; i <= r; ++i) {
        m(i, i) = z;
    }
    return m;
}

// iota_r: antidiagonal of ones.
template <typename T> SquareMatrix<T> exchange(int r)
{
    SquareMatrix<T> m(static_cast<std::size_t>(r) + 1);
    for (int i = 0; i <= r; ++i) {
        m(i, r - i) = T(1);
    }
    return m;
}

template <typename T> SquareMatrix<T> half_x(const SquareMatrix<T> &m)
{
    return exchange<T>(static_cast<int>(m.dim()) - 1) * m;
}

template <typename T> SquareMatrix<T> half_y(const SquareMatrix<T> &m)
{
    return m * exchange<T>(static_cast<int>(m.dim()) - 1);
}

template <typename T> SquareMatrix<T> diag(const std::vector<T> &values)
{
    SquareMatrix<T> m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

// Literal finite exponential sum_{m=0}^{r} c^m A_r^m / m!.
template <typename T> SquareMatrix<T> nilpotent_exp(const T &c, int r)
{
    const SquareMatrix<T> a = creation<T>(r);
    SquareMatrix<T> term = SquareMatrix<T>::identity(static_cast<std::size_t>(r) + 1);
    SquareMatrix<T> sum = term;
    for (int m = 1; m <= r; ++m) {
        term = term * a;
        term *= c / from_rational<T>(Rational(m));
        sum += term;
    }
    return sum;
}

// Sym^r of a 2x2 matrix g in the basis w_k = e^(r-k) f^k / (k!(r-k)!),
// with g e = g00 e + g10 f and g f = g01 e + g11 f.
template <typename T> SquareMatrix<T> sym_power(int r, const SquareMatrix<T> &g)
{
    if (g.dim() != 2) {
        throw domain_error("sym_power needs a 2x2 matrix");
    }
    if (r < 0) {
        throw domain_error("sym_power needs r >= 0");
    }
    const std::size_t n = static_cast<std::size_t>(r) + 1;
    SquareMatrix<T> out(n);
    // Powers of the images: (ge)^i and (gf)^j as coefficient lists in e^(deg-t) f^t.
    auto poly_pow = [](const T &ce, const T &cf, int e) {
        std::vector<T> p(static_cast<std::size_t>(e) + 1, T(0));
        for (int t = 0; t <= e; ++t) {
            T v = binom_as<T>(e, t);
            for (int s = 0; s < e - t; ++s) {
                v *= ce;
            }
            for (int s = 0; s < t; ++s) {
                v *= cf;
            }
            p[static_cast<std::size_t>(t)] = v;
        }
        return p;
    };
    for (int k = 0; k <= r; ++k) {
        const auto pe = poly_pow(g(0, 0), g(1, 0), r - k);
        const auto pf = poly_pow(g(0, 1), g(1, 1), k);
        std::vector<T> prod(n, T(0));
        for (std::size_t a = 0; a < pe.size(); ++a) {
            for (std::size_t b = 0; b < pf.size(); ++b) {
                prod[a + b] += pe[a] * pf[b];
            }
        }
        // g w_k = prod / ((r-k)! k!); e^(r-l) f^l = (r-l)! l! w_l.
        for (int l = 0; l <= r; ++l) {
            const Rational scale = Rational(factorial(static_cast<unsigned>(l)) * factorial(static_cast<unsigned>(r - l)),
                                            factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(r - k)));
            out(static_cast<std::size_t>(l), static_cast<std::size_t>(k)) =
                prod[static_cast<std::size_t>(l)] * from_rational<T>(scale);
        }
    }
    return out;
}

template <typename T, typename U, typename F> SquareMatrix<U> map_matrix(const SquareMatrix<T> &m, F &&f)
{
    SquareMatrix<U> out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            out(i, j) = f(m(i, j));
        }
    }
    return out;
}

} // namespace hvf

#endif
