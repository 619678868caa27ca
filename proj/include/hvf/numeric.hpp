#ifndef HVF_NUMERIC_HPP
#define HVF_NUMERIC_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "hvf/forms.hpp"
#include "hvf/multiplier.hpp"

namespace hvf
{

template <typename R> using Complex = std::complex<R>;

template <typename R> R varpi_of(int mu)
{
    return static_cast<R>(varpi_value(mu));
}

template <typename R> struct EvalResult {
    Complex<R> value;
    R tail; // |q|^(N+1)/(1-|q|) times the largest of the last few |c_n|
};

template <typename R> Complex<R> q_of(int mu, const Complex<R> &z)
{
    const R scale = R(2) * std::numbers::pi_v<R> / varpi_of<R>(mu);
    return std::exp(Complex<R>(R(0), scale) * z);
}

template <typename R, typename T> EvalResult<R> eval_series(const QSeries<T> &s, int mu, const Complex<R> &z)
{
    if (!(z.imag() > R(0))) {
        throw evaluation_error("evaluation point must lie in the upper half-plane");
    }
    const Complex<R> q = q_of<R>(mu, z);
    Complex<R> acc(0);
    for (int n = s.trunc(); n >= 0; --n) {
        acc = acc * q + scalar_traits<T>::template to_complex<R>(s[n]);
    }
    const R aq = std::abs(q);
    R recent(0);
    for (int n = std::max(0, s.trunc() - 7); n <= s.trunc(); ++n) {
        recent = std::max(recent, std::abs(scalar_traits<T>::template to_complex<R>(s[n])));
    }
    const R tail = std::pow(aq, static_cast<R>(s.trunc() + 1)) / (R(1) - aq) * recent;
    return {acc, tail};
}

// Real 2x2 matrix acting by Moebius transformations.
template <typename R> struct GroupElement {
    R a, b, c, d;

    R det() const { return a * d - b * c; }
    friend GroupElement operator*(const GroupElement &x, const GroupElement &y)
    {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
};

template <typename R> GroupElement<R> generator_T(int mu)
{
    return {R(1), varpi_of<R>(mu), R(0), R(1)};
}

template <typename R> GroupElement<R> generator_S()
{
    return {R(0), R(-1), R(1), R(0)};
}

// Factor of automorphy cz + d.
template <typename R> Complex<R> cocycle(const GroupElement<R> &g, const Complex<R> &z)
{
    return g.c * z + g.d;
}

template <typename R> Complex<R> mobius(const GroupElement<R> &g, const Complex<R> &z)
{
    const Complex<R> den = cocycle(g, z);
    if (std::abs(den) == R(0)) {
        throw evaluation_error("pole of the Moebius transformation");
    }
    return (g.a * z + g.b) / den;
}

template <typename R> struct SamplePlan {
    std::vector<Complex<R>> points;
    R tol = R(1e-6);
    int trunc = 64;
};

// Checks Im z >= 0.4 and Im(-1/z) >= 0.4 for every point.
template <typename R> void check_plan(const SamplePlan<R> &plan)
{
    for (const auto &z : plan.points) {
        const R im_s = z.imag() / std::norm(z);
        if (z.imag() < R(0.4) || im_s < R(0.4)) {
            throw domain_error("sample point violates the Im >= 0.4 admissibility bound");
        }
    }
}

inline double unit_from_bits(std::uint64_t bits)
{
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::vector<std::complex<double>> default_plan_points(std::uint64_t seed, int count);

// Points z = rho e^(i theta), rho in [0.9, 1.1], theta in [pi/3, 2pi/3].
template <typename R> SamplePlan<R> default_plan(std::uint64_t seed = 20240611u, int count = 12, R tol = R(1e-6), int trunc = 64)
{
    SamplePlan<R> plan;
    for (const auto &p : default_plan_points(seed, count)) {
        plan.points.emplace_back(static_cast<R>(p.real()), static_cast<R>(p.imag()));
    }
    plan.tol = tol;
    plan.trunc = trunc;
    check_plan(plan);
    return plan;
}

struct PointReport {
    std::complex<double> z;
    double residual = 0;
    double tail_bound = 0;
};

struct VerificationReport {
    std::string check;
    int mu = 0;
    int weight = 0;
    int depth = 0;
    std::vector<PointReport> points;
    double max_residual = 0;
    double max_tail = 0;
    double tol = 0;
    bool pass = false;

    void add(std::complex<double> z, double residual, double tail)
    {
        points.push_back({z, residual, tail});
        max_residual = std::max(max_residual, residual);
        max_tail = std::max(max_tail, tail);
    }
    void finish(double tolerance)
    {
        tol = tolerance;
        pass = max_residual < tolerance && std::isfinite(max_residual);
    }
};

template <typename R> std::complex<double> to_cd(const Complex<R> &z)
{
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

// |E2(Sz)/z^2 - E2(z) + C Sz| over the plan.
template <typename R, typename T>
VerificationReport verify_E2_anomaly(int mu, const QSeries<T> &e2, const StructureConstant &C, const SamplePlan<R> &plan)
{
    check_plan(plan);
    VerificationReport rep{"E2_anomaly", mu, 2, 1};
    const Complex<R> c = C.template value<R>();
    const auto S = generator_S<R>();
    for (const auto &z : plan.points) {
        const Complex<R> sz = mobius(S, z);
        const auto at_z = eval_series<R>(e2, mu, z);
        const auto at_sz = eval_series<R>(e2, mu, sz);
        const Complex<R> res = at_sz.value / (z * z) - at_z.value + c * sz;
        const R tail = at_sz.tail / std::norm(z) + at_z.tail;
        rep.add(to_cd(z), static_cast<double>(std::abs(res)), static_cast<double>(tail));
    }
    rep.finish(static_cast<double>(plan.tol));
    return rep;
}

// |E2(z + varpi) - E2(z)| over the plan.
template <typename R, typename T>
VerificationReport verify_T_periodicity(int mu, const QSeries<T> &s, int weight, const SamplePlan<R> &plan)
{
    VerificationReport rep{"T_periodicity", mu, weight, 0};
    const auto Tg = generator_T<R>(mu);
    for (const auto &z : plan.points) {
        const auto a = eval_series<R>(s, mu, mobius(Tg, z));
        const auto b = eval_series<R>(s, mu, z);
        rep.add(to_cd(z), static_cast<double>(std::abs(a.value - b.value)), static_cast<double>(a.tail + b.tail));
    }
    rep.finish(static_cast<double>(plan.tol));
    return rep;
}

// max of |H(Sz)/z^w - H(z)| and |H(Tz) - H(z)|.
template <typename R, typename T>
VerificationReport verify_automorphic(const AutomorphicForm<T> &h, int mu, const SamplePlan<R> &plan)
{
    check_plan(plan);
    VerificationReport rep{"automorphic", mu, h.weight, 0};
    const auto S = generator_S<R>();
    const auto Tg = generator_T<R>(mu);
    for (const auto &z : plan.points) {
        const auto at_z = eval_series<R>(h.series, mu, z);
        const auto at_sz = eval_series<R>(h.series, mu, mobius(S, z));
        const auto at_tz = eval_series<R>(h.series, mu, mobius(Tg, z));
        const Complex<R> zw = std::pow(z, h.weight);
        const R rs = std::abs(at_sz.value / zw - at_z.value);
        const R rt = std::abs(at_tz.value - at_z.value);
        const R tail = at_sz.tail / std::abs(zw) + at_z.tail + at_tz.tail;
        rep.add(to_cd(z), static_cast<double>(std::max(rs, rt)), static_cast<double>(tail));
    }
    rep.finish(static_cast<double>(plan.tol));
    return rep;
}

// G(z) = (C^l ghat_l(z))_l with an aggregate tail bound.
template <typename R> struct GVector {
    std::vector<Complex<R>> g;
    R tail = R(0);
};

template <typename R, typename T> GVector<R> eval_G(const Hauptbuch<T> &h, const Complex<R> &z)
{
    GVector<R> out;
    const Complex<R> c = h.C.template value<R>();
    Complex<R> cp(1);
    for (int l = 0; l <= h.depth; ++l) {
        const auto e = eval_series<R>(h.ghat[static_cast<std::size_t>(l)], h.mu, z);
        out.g.push_back(cp * e.value);
        out.tail += std::abs(cp) * e.tail;
        cp *= c;
    }
    return out;
}

template <typename R> struct FValue {
    std::vector<Complex<R>> via_exponential; // e^(z A_r) G(z)
    std::vector<Complex<R>> via_transfer;    // P(G)(z) (1, z, ..., z^r)
    R tail = R(0);

    R route_gap() const
    {
        R gap(0);
        for (std::size_t i = 0; i < via_exponential.size(); ++i) {
            gap = std::max(gap, std::abs(via_exponential[i] - via_transfer[i]));
        }
        return gap;
    }
};

template <typename R, typename T> FValue<R> eval_F(const Hauptbuch<T> &h, const Complex<R> &z)
{
    const int r = h.depth;
    const GVector<R> G = eval_G<R>(h, z);
    FValue<R> out;
    out.via_exponential = nilpotent_exp<Complex<R>>(z, r).apply(G.g);

    const TransferMatrix<T> tm = transfer_matrix(h);
    const Complex<R> c = h.C.template value<R>();
    std::vector<Complex<R>> nu{Complex<R>(1)};
    for (int k = 1; k <= r; ++k) {
        nu.push_back(nu.back() * z);
    }
    out.via_transfer.assign(static_cast<std::size_t>(r) + 1, Complex<R>(0));
    for (int n = 0; n <= r; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto e = eval_series<R>(tm.entries[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)], h.mu, z);
            const Complex<R> entry = std::pow(c, tm.c_power[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]) * e.value;
            out.via_transfer[static_cast<std::size_t>(n)] += entry * nu[static_cast<std::size_t>(k)];
        }
    }
    const R zr = std::pow(std::max(R(1), std::abs(z)), static_cast<R>(r));
    out.tail = G.tail * zr * std::pow(R(2), static_cast<R>(r));
    return out;
}

template <typename R> R vec_inf_diff(const std::vector<Complex<R>> &a, const std::vector<Complex<R>> &b)
{
    R m(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

template <typename R> SquareMatrix<Complex<R>> embed_matrix(const SquareMatrix<FieldElement> &m)
{
    return map_matrix<FieldElement, Complex<R>>(m, [](const FieldElement &x) { return Complex<R>(static_cast<R>(x.to_long_double()), R(0)); });
}

template <typename R> SquareMatrix<Complex<R>> embed_matrix(const SquareMatrix<Rational> &m)
{
    return map_matrix<Rational, Complex<R>>(m, [](const Rational &x) { return Complex<R>(static_cast<R>(x.to_long_double()), R(0)); });
}

// |F(Tz) - eps_T F(z)|_inf over the plan.
template <typename R, typename T> VerificationReport verify_vector_T(const Hauptbuch<T> &h, const SamplePlan<R> &plan)
{
    check_plan(plan);
    VerificationReport rep{"vector_T", h.mu, h.weight, h.depth};
    const auto eps = embed_matrix<R>(epsilon_T(h.mu, h.depth));
    const auto Tg = generator_T<R>(h.mu);
    for (const auto &z : plan.points) {
        const auto fz = eval_F<R>(h, z);
        const auto ftz = eval_F<R>(h, mobius(Tg, z));
        const R res = vec_inf_diff(ftz.via_exponential, eps.apply(fz.via_exponential));
        rep.add(to_cd(z), static_cast<double>(res), static_cast<double>(fz.tail + ftz.tail));
    }
    rep.finish(static_cast<double>(plan.tol));
    return rep;
}

// |F(Sz)/z^(w-r) - M F(z)|_inf with M = vector_form_S_multiplier(r).
template <typename R, typename T> VerificationReport verify_vector_S(const Hauptbuch<T> &h, const SamplePlan<R> &plan)
{
    check_plan(plan);
    VerificationReport rep{"vector_S", h.mu, h.weight, h.depth};
    const auto eps = embed_matrix<R>(vector_form_S_multiplier(h.depth));
    const auto S = generator_S<R>();
    for (const auto &z : plan.points) {
        const auto fz = eval_F<R>(h, z);
        const auto fsz = eval_F<R>(h, mobius(S, z));
        const Complex<R> zw = std::pow(z, h.weight - h.depth);
        std::vector<Complex<R>> lhs = fsz.via_exponential;
        for (auto &v : lhs) {
            v /= zw;
        }
        const R res = vec_inf_diff(lhs, eps.apply(fz.via_exponential));
        rep.add(to_cd(z), static_cast<double>(res), static_cast<double>(fz.tail + fsz.tail / std::abs(zw)));
    }
    rep.finish(static_cast<double>(plan.tol));
    return rep;
}

// g_l(Sz)/z^(w-r-l) = sum_m binom(r-l,m) g_{l+m}(z) z^(r-l-m), together with
//   z^(r-w) sum_j binom(l,j) g_j(Sz) (Sz)^(l-j) = (-1)^l sum_m binom(r-l,m) g_m(z) z^(r-l-m).
// The residual is the larger of the two.
template <typename R, typename T>
VerificationReport verify_g_under_S(const Hauptbuch<T> &h, int l, const SamplePlan<R> &plan)
{
    check_plan(plan);
    const int r = h.depth;
    if (l < 0 || l > r) {
        throw domain_error("index out of range");
    }
    VerificationReport rep{"g_under_S", h.mu, h.weight, r};
    rep.check += "_" + std::to_string(l);
    const auto S = generator_S<R>();
    for (const auto &z : plan.points) {
        const Complex<R> sz = mobius(S, z);
        const auto gz = eval_G<R>(h, z);
        const auto gsz = eval_G<R>(h, sz);
        const auto &G = gz.g;
        const auto &GS = gsz.g;

        Complex<R> rhs(0);
        for (int m = 0; m <= r - l; ++m) {
            rhs += binom_as<R>(r - l, m) * G[static_cast<std::size_t>(l + m)] * std::pow(z, r - l - m);
        }
        const Complex<R> lhs = GS[static_cast<std::size_t>(l)] / std::pow(z, h.weight - r - l);
        const R prop = std::abs(lhs - rhs);

        Complex<R> conv(0);
        for (int j = 0; j <= l; ++j) {
            conv += binom_as<R>(l, j) * GS[static_cast<std::size_t>(j)] * std::pow(sz, l - j);
        }
        conv /= std::pow(z, h.weight - r);
        Complex<R> crhs(0);
        for (int m = 0; m <= r - l; ++m) {
            crhs += binom_as<R>(r - l, m) * G[static_cast<std::size_t>(m)] * std::pow(z, r - l - m);
        }
        if (l % 2 == 1) {
            crhs = -crhs;
        }
        const R cor = std::abs(conv - crhs);
        const R zr = std::pow(std::max(R(1), std::abs(z)), static_cast<R>(r));
        const R tail = (gz.tail + gsz.tail / std::pow(std::abs(z), static_cast<R>(h.weight - r - l))) * zr *
                       std::pow(R(2), static_cast<R>(r));
        rep.add(to_cd(z), static_cast<double>(std::max(prop, cor)), static_cast<double>(tail));
    }
    rep.finish(static_cast<double>(plan.tol));
    return rep;
}

// f_n/z^n = sum_i binom(n,i) g_i/z^i and back with alternating signs.
// Compares against eval_F and checks the inverse recovers g.
template <typename R, typename T> bool orthogonality_check(const Hauptbuch<T> &h, const Complex<R> &z, R tol)
{
    const auto G = eval_G<R>(h, z).g;
    std::vector<Complex<R>> a;
    for (std::size_t i = 0; i < G.size(); ++i) {
        a.push_back(G[i] / std::pow(z, static_cast<int>(i)));
    }
    const auto f_scaled = binomial_transform(a);
    const auto back = inverse_binomial_transform(f_scaled);
    const auto F = eval_F<R>(h, z).via_transfer;
    R scale(1);
    for (const auto &v : a) {
        scale = std::max(scale, std::abs(v));
    }
    for (std::size_t n = 0; n < G.size(); ++n) {
        if (std::abs(f_scaled[n] - F[n] / std::pow(z, static_cast<int>(n))) > tol * scale) {
            return false;
        }
        if (std::abs(back[n] - a[n]) > tol * scale) {
            return false;
        }
    }
    return true;
}

// floor(w (mu-2) / (4 mu)) + 1 for w = 0 mod 4.
long dim_automorphic(int mu, int weight);

} // namespace hvf

#endif
