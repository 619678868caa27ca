#ifndef HVF_CALIBRATE_HPP
#define HVF_CALIBRATE_HPP

#include <cmath>
#include <map>
#include <vector>

#include "hvf/numeric.hpp"

namespace hvf
{

struct CalibrationOptions {
    double scan_step = 0.25;
    double scan_bound = 1000.0;
    int max_iterations = 200;
    // Anomaly points used only when degenerate orders must be fitted. They lie
    // outside the default verification region.
    std::vector<std::complex<double>> fit_points{{0.25, 1.1}, {-0.35, 1.2}};
};

template <typename R> struct CalibrationResult {
    R a1 = R(0);
    std::map<int, R> pins;        // absolute a_n at degenerate orders
    std::map<int, R> pin_scales;  // a_n / a1^n
    R residual = R(0);            // |E2(i) - target| (plus anomaly norm when fitting)
    R tail = R(0);
    int iterations = 0;
};

namespace detail
{

template <typename R> std::map<int, R> scaled_pins(R a1, const std::vector<int> &orders, const std::vector<R> &scales)
{
    std::map<int, R> pins;
    for (std::size_t j = 0; j < orders.size(); ++j) {
        pins[orders[j]] = scales[j] * std::pow(a1, orders[j]);
    }
    return pins;
}

template <typename R> EvalResult<R> e2_at_i(int mu, int trunc, R a1, const std::map<int, R> &pins)
{
    const auto fam = hecke_eisenstein<R>(mu, trunc, a1, pins);
    return eval_series<R>(fam.E2(), mu, Complex<R>(R(0), R(1)));
}

} // namespace detail

// Real a1 with E2(i; a1) = C i / 2. Degenerate orders are fitted jointly with
// a1 by Gauss-Newton on the fixed-point equation and the anomaly at
// opts.fit_points, with a_n = s_n a1^n.
template <typename R>
CalibrationResult<R> calibrate_a1(int mu, int trunc, R tol, const StructureConstant &C,
                                  const CalibrationOptions &opts = {})
{
    if (mu < 3) {
        throw domain_error("mu must be at least 3");
    }
    if (!(tol > R(0))) {
        throw domain_error("tolerance must be positive");
    }
    const R target = C.template fixed_point<R>();
    const std::vector<int> orders = degenerate_orders(mu, trunc);
    std::vector<R> scales(orders.size(), R(0));

    auto f = [&](R a) {
        return detail::e2_at_i<R>(mu, trunc, a, detail::scaled_pins(a, orders, scales)).value.real() - target;
    };

    CalibrationResult<R> out;
    // Outward scan for a sign change, nearest to zero first.
    const R f0 = f(R(0));
    R lo = 0, hi = 0, flo = f0, fhi = f0;
    bool bracketed = f0 == R(0);
    R prev_neg = 0, prev_pos = 0, fprev_neg = f0, fprev_pos = f0;
    const R step = static_cast<R>(opts.scan_step);
    for (int j = 1; !bracketed && j * step <= static_cast<R>(opts.scan_bound); ++j) {
        for (int sgn : {-1, 1}) {
            const R a = sgn * j * step;
            const R fa = f(a);
            R &prev = sgn < 0 ? prev_neg : prev_pos;
            R &fprev = sgn < 0 ? fprev_neg : fprev_pos;
            if (std::isfinite(fa) && std::isfinite(fprev) && (fa == R(0) || (fa < R(0)) != (fprev < R(0)))) {
                lo = prev;
                flo = fprev;
                hi = a;
                fhi = fa;
                bracketed = true;
                break;
            }
            prev = a;
            fprev = fa;
        }
    }
    if (!bracketed) {
        throw calibration_error("no sign change of E2(i) - target for |a1| <= " + std::to_string(opts.scan_bound));
    }
    // Bisection to a narrow bracket, then secant.
    int it = 0;
    while (std::abs(hi - lo) > R(1e-6) * std::max(R(1), std::abs(lo)) && it < opts.max_iterations && fhi != R(0)) {
        const R mid = (lo + hi) / 2;
        const R fm = f(mid);
        if ((fm < R(0)) == (flo < R(0))) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
        ++it;
    }
    R x0 = lo, x1 = hi, f0s = flo, f1s = fhi;
    if (std::abs(f0s) < std::abs(f1s)) {
        std::swap(x0, x1);
        std::swap(f0s, f1s);
    }
    for (int k = 0; k < 50 && f1s != R(0) && f1s != f0s; ++k, ++it) {
        const R x2 = x1 - f1s * (x1 - x0) / (f1s - f0s);
        x0 = x1;
        f0s = f1s;
        x1 = x2;
        f1s = f(x1);
        if (std::abs(x1 - x0) <= std::numeric_limits<R>::epsilon() * 4 * std::max(R(1), std::abs(x1))) {
            break;
        }
    }
    R a1 = x1;

    if (!orders.empty()) {
        // Unknowns p = (a1, s_1, ..., s_d); residuals: fixed point, then
        // Re/Im of the anomaly at each fit point.
        const Complex<R> c = C.template value<R>();
        std::vector<R> p{a1};
        p.insert(p.end(), scales.begin(), scales.end());
        auto resid = [&](const std::vector<R> &x) {
            const std::vector<R> s(x.begin() + 1, x.end());
            const auto fam = hecke_eisenstein<R>(mu, trunc, x[0], detail::scaled_pins(x[0], orders, s));
            std::vector<R> out{eval_series<R>(fam.E2(), mu, Complex<R>(R(0), R(1))).value.real() - target};
            for (const auto &zp : opts.fit_points) {
                const Complex<R> z(static_cast<R>(zp.real()), static_cast<R>(zp.imag()));
                const Complex<R> sz = R(-1) / z;
                const Complex<R> v = eval_series<R>(fam.E2(), mu, sz).value / (z * z) -
                                     eval_series<R>(fam.E2(), mu, z).value + c * sz;
                out.push_back(v.real());
                out.push_back(v.imag());
            }
            return out;
        };
        const std::size_t np = p.size();
        if (1 + 2 * opts.fit_points.size() < np) {
            throw calibration_error("too few fit points for the number of degenerate orders");
        }
        bool converged = false;
        for (int k = 0; k < opts.max_iterations; ++k, ++it) {
            const std::vector<R> r0 = resid(p);
            const std::size_t m = r0.size();
            std::vector<std::vector<R>> J(m, std::vector<R>(np));
            for (std::size_t j = 0; j < np; ++j) {
                std::vector<R> dp = p;
                const R h = std::sqrt(std::numeric_limits<R>::epsilon()) * std::max(R(1), std::abs(p[j]));
                dp[j] += h;
                const auto r1 = resid(dp);
                for (std::size_t i = 0; i < m; ++i) {
                    J[i][j] = (r1[i] - r0[i]) / h;
                }
            }
            // Normal equations (J^T J) d = -J^T r.
            std::vector<std::vector<R>> A(np, std::vector<R>(np + 1, R(0)));
            for (std::size_t a = 0; a < np; ++a) {
                for (std::size_t b = 0; b < np; ++b) {
                    for (std::size_t i = 0; i < m; ++i) {
                        A[a][b] += J[i][a] * J[i][b];
                    }
                }
                for (std::size_t i = 0; i < m; ++i) {
                    A[a][np] -= J[i][a] * r0[i];
                }
            }
            for (std::size_t col = 0; col < np; ++col) {
                std::size_t piv = col;
                for (std::size_t row = col + 1; row < np; ++row) {
                    if (std::abs(A[row][col]) > std::abs(A[piv][col])) {
                        piv = row;
                    }
                }
                std::swap(A[col], A[piv]);
                if (A[col][col] == R(0)) {
                    throw calibration_error("singular Gauss-Newton system");
                }
                for (std::size_t row = 0; row < np; ++row) {
                    if (row == col) {
                        continue;
                    }
                    const R fct = A[row][col] / A[col][col];
                    for (std::size_t q = col; q <= np; ++q) {
                        A[row][q] -= fct * A[col][q];
                    }
                }
            }
            R norm_step(0), norm_p(0);
            for (std::size_t j = 0; j < np; ++j) {
                const R d = A[j][np] / A[j][j];
                p[j] += d;
                norm_step = std::max(norm_step, std::abs(d));
                norm_p = std::max(norm_p, std::abs(p[j]));
            }
            if (!std::isfinite(norm_step)) {
                throw calibration_error("Gauss-Newton diverged");
            }
            if (norm_step <= R(1e-12) * std::max(R(1), norm_p)) {
                converged = true;
                ++it;
                break;
            }
        }
        if (!converged) {
            throw calibration_error("Gauss-Newton did not converge");
        }
        a1 = p[0];
        scales.assign(p.begin() + 1, p.end());
        R rn(0);
        for (R v : resid(p)) {
            rn = std::max(rn, std::abs(v));
        }
        out.residual = rn;
    }

    out.a1 = a1;
    out.pins = detail::scaled_pins(a1, orders, scales);
    for (std::size_t j = 0; j < orders.size(); ++j) {
        out.pin_scales[orders[j]] = scales[j];
    }
    const auto ev = detail::e2_at_i<R>(mu, trunc, a1, out.pins);
    out.residual = std::max(out.residual, std::abs(ev.value.real() - target));
    out.tail = ev.tail;
    out.iterations = it;
    if (!(out.residual <= tol)) {
        throw calibration_error("calibration residual " + std::to_string(static_cast<double>(out.residual)) +
                                " exceeds tolerance");
    }
    if (!(out.tail <= tol)) {
        throw calibration_error("truncation too short: tail bound at z = i exceeds tolerance");
    }
    return out;
}

} // namespace hvf

#endif
