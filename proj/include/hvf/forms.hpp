#ifndef HVF_FORMS_HPP
#define HVF_FORMS_HPP

#include <string>
#include <vector>

#include "hvf/combinat.hpp"
#include "hvf/eisenstein.hpp"
#include "hvf/qseries.hpp"

namespace hvf
{

template <typename T> struct AutomorphicForm {
    int weight = 0;
    QSeries<T> series;
};

// U = sum_{k=0}^{r} B_k E2^k with B_k of weight w - 2k.
template <typename T> struct QuasiForm {
    int mu = 0;
    int weight = 0;
    int depth = 0;
    std::vector<QSeries<T>> components;

    void validate() const
    {
        if (mu < 3) {
            throw domain_error("mu must be at least 3");
        }
        if (weight % 2 != 0) {
            throw domain_error("weight must be even");
        }
        if (depth < 0 || 2 * depth > weight) {
            throw domain_error("depth must satisfy 0 <= r <= w/2");
        }
        if (static_cast<int>(components.size()) != depth + 1) {
            throw domain_error("expected depth+1 components");
        }
        for (int k = 0; k <= depth; ++k) {
            const auto w = components[static_cast<std::size_t>(k)].weight();
            if (w && *w != weight - 2 * k) {
                throw domain_error("component " + std::to_string(k) + " has weight " + std::to_string(*w) +
                                   ", expected " + std::to_string(weight - 2 * k));
            }
        }
    }

    int trunc() const
    {
        int n = components.front().trunc();
        for (const auto &c : components) {
            n = std::min(n, c.trunc());
        }
        return n;
    }
};

// Hauptbuch with the powers of C stripped: g_l = C^l ghat[l].
template <typename T> struct Hauptbuch {
    int mu = 0;
    int weight = 0;
    int depth = 0;
    std::vector<QSeries<T>> ghat;
    StructureConstant C;
};

// Lower-triangular array with entry (n,k) = binom(n,k) g_{n-k}, stored as the
// stripped series plus the power of C it carries.
template <typename T> struct TransferMatrix {
    int depth = 0;
    std::vector<std::vector<QSeries<T>>> entries; // entries[n][k], k <= n
    std::vector<std::vector<int>> c_power;
};

template <typename T> void check_family(const QuasiForm<T> &u, const EisensteinFamily<T> &fam)
{
    u.validate();
    if (u.mu != fam.mu) {
        throw domain_error("quasiform and Eisenstein family have different mu");
    }
}

template <typename T> QSeries<T> assemble(const QuasiForm<T> &u, const EisensteinFamily<T> &fam)
{
    check_family(u, fam);
    const int n = std::min(u.trunc(), fam.trunc);
    const QSeries<T> e2 = fam.E2().truncate(n);
    QSeries<T> power = QSeries<T>::constant(n, T(1), 0);
    QSeries<T> total(n, u.weight);
    for (int k = 0; k <= u.depth; ++k) {
        QSeries<T> b = u.components[static_cast<std::size_t>(k)].truncate(n);
        if (!b.weight()) {
            b = b.with_weight(u.weight - 2 * k);
        }
        total += b * power;
        power = power * e2;
    }
    return total;
}

// ghat_l = sum_{m=0}^{r-l} bracket(r,l,m) B_{l+m} E2^m.
template <typename T>
Hauptbuch<T> hauptbuch(const QuasiForm<T> &u, const EisensteinFamily<T> &fam, const StructureConstant &C)
{
    check_family(u, fam);
    if (C.mu() != u.mu) {
        throw domain_error("structure constant for a different mu");
    }
    const int r = u.depth;
    const int n = std::min(u.trunc(), fam.trunc);
    const QSeries<T> e2 = fam.E2().truncate(n);
    std::vector<QSeries<T>> powers{QSeries<T>::constant(n, T(1), 0)};
    for (int m = 1; m <= r; ++m) {
        powers.push_back(powers.back() * e2);
    }
    Hauptbuch<T> h{u.mu, u.weight, r, {}, C};
    for (int l = 0; l <= r; ++l) {
        QSeries<T> g(n, u.weight - 2 * l);
        for (int m = 0; m <= r - l; ++m) {
            QSeries<T> b = u.components[static_cast<std::size_t>(l + m)].truncate(n);
            if (!b.weight()) {
                b = b.with_weight(u.weight - 2 * (l + m));
            }
            g += (b * powers[static_cast<std::size_t>(m)]) * from_rational<T>(bracket(r, l, m));
        }
        h.ghat.push_back(g);
    }
    return h;
}

template <typename T> TransferMatrix<T> transfer_matrix(const Hauptbuch<T> &h)
{
    TransferMatrix<T> t;
    t.depth = h.depth;
    for (int n = 0; n <= h.depth; ++n) {
        std::vector<QSeries<T>> row;
        std::vector<int> powers;
        for (int k = 0; k <= n; ++k) {
            row.push_back(h.ghat[static_cast<std::size_t>(n - k)] * binom_as<T>(n, k));
            powers.push_back(n - k);
        }
        t.entries.push_back(row);
        t.c_power.push_back(powers);
    }
    return t;
}

// The quasiform of weight w - 2l and depth r - l whose components are
// bracket(r,l,m) B_{l+m}; its assembled series is ghat_l.
template <typename T> QuasiForm<T> truncated_form(const QuasiForm<T> &u, int l)
{
    u.validate();
    if (l < 0 || l > u.depth) {
        throw domain_error("index out of range");
    }
    QuasiForm<T> out{u.mu, u.weight - 2 * l, u.depth - l, {}};
    for (int m = 0; m <= u.depth - l; ++m) {
        out.components.push_back(u.components[static_cast<std::size_t>(l + m)] *
                                 from_rational<T>(bracket(u.depth, l, m)));
    }
    return out;
}

template <typename R, typename T> Hauptbuch<R> convert_hauptbuch(const Hauptbuch<T> &h)
{
    Hauptbuch<R> out{h.mu, h.weight, h.depth, {}, h.C};
    for (const auto &g : h.ghat) {
        out.ghat.push_back(convert_series<R>(g));
    }
    return out;
}

template <typename R, typename T> QuasiForm<R> convert_form(const QuasiForm<T> &u)
{
    QuasiForm<R> out{u.mu, u.weight, u.depth, {}};
    for (const auto &c : u.components) {
        out.components.push_back(convert_series<R>(c));
    }
    return out;
}

template <typename R, typename T> EisensteinFamily<R> convert_family(const EisensteinFamily<T> &f)
{
    EisensteinFamily<R> out;
    out.mu = f.mu;
    out.trunc = f.trunc;
    out.a1 = convert_series<R>(QSeries<T>(std::vector<T>{f.a1}))[0];
    for (const auto &[n, v] : f.pins) {
        out.pins[n] = convert_series<R>(QSeries<T>(std::vector<T>{v}))[0];
    }
    for (const auto &m : f.members) {
        out.members.push_back(convert_series<R>(m));
    }
    out.closure_residual = convert_series<R>(f.closure_residual);
    return out;
}

// E2 as a quasiform: weight 2, depth 1, B_0 = 0, B_1 = 1.
template <typename T> QuasiForm<T> quasiform_E2(int mu, int trunc)
{
    return {mu, 2, 1, {QSeries<T>(trunc, 2), QSeries<T>::constant(trunc, T(1), 0)}};
}

// D63 = (5 E2^3 - 3 E2 E4 - 2 E6)/51840 over a weight-6 family at mu = 3.
template <typename T> QuasiForm<T> quasiform_D63(const EisensteinFamily<T> &fam)
{
    if (fam.mu != 3) {
        throw domain_error("the extremal form is defined for mu = 3");
    }
    const int n = fam.trunc;
    const T d = from_rational<T>(Rational(1, 51840));
    return {3,
            6,
            3,
            {fam.series(6) * (from_rational<T>(Rational(-2)) * d), fam.series(4) * (from_rational<T>(Rational(-3)) * d),
             QSeries<T>(n, 2), QSeries<T>::constant(n, from_rational<T>(Rational(5)) * d, 0)}};
}

} // namespace hvf

#endif
