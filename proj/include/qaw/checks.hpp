#pragma once

// Quadrature-based identity checks: orthogonality, the kernel
// multiplication law, the degree projection, the delta-approximation
// limit, and the q-Hermite dual-evaluation check.  Each returns
// CheckReport records whose witness pins down the evaluation point.

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qaw/kernels.hpp"
#include "qaw/params.hpp"
#include "qaw/polynomials.hpp"
#include "qaw/quadrature.hpp"
#include "qaw/report.hpp"

namespace qaw {

namespace detail {

inline std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string fmt_g(cplx v) {
    if (v.imag() == 0.0) return fmt_g(v.real());
    return fmt_g(v.real()) + (v.imag() < 0 ? "" : "+") + fmt_g(v.imag()) + "i";
}

inline std::string fmt_params(const ParamSet& p) {
    std::string out = "(";
    for (size_t i = 0; i < p.values().size(); ++i) {
        if (i) out += ",";
        out += fmt_g(p.values()[i]);
    }
    return out + ")";
}

}  // namespace detail

// Orthogonality of the four-parameter family: for m, n <= n_max,
// integral of p_n p_m rho over (-1,1) equals delta_{mn} / h_n.  Diagonal
// entries are compared relatively, off-diagonal absolutely.
inline std::vector<CheckReport> check_orthogonality(
    const ParamSet& lambda, long n_max, double tol,
    const QuadratureConfig& cfg = {}, const TruncationPolicy& policy = {}) {
    std::vector<CheckReport> out;
    auto weight = [&](double xv) { return aw_weight(xv, lambda, policy); };
    for (long m = 0; m <= n_max; ++m) {
        for (long n = 0; n <= n_max; ++n) {
            cplx I = integrate_weighted(
                [&](double xv) {
                    return aw_poly(n, xv, lambda, policy) *
                           aw_poly(m, xv, lambda, policy);
                },
                weight, cfg);
            double err;
            if (m == n) {
                const double expect = 1.0 / aw_norm(n, lambda, policy);
                err = std::abs(I - expect) / std::abs(expect);
            } else {
                err = std::abs(I);
            }
            CheckReport r = make_report(
                "check_orthogonality[" + std::to_string(m) + "," + std::to_string(n) +
                    "]",
                err, tol,
                {{"lambda", detail::fmt_params(lambda)},
                 {"q", detail::fmt_g(lambda.qv())},
                 {"m", std::to_string(m)},
                 {"n", std::to_string(n)},
                 {"integral", detail::fmt_g(I)}});
            out.push_back(std::move(r));
        }
    }
    return out;
}

// Orthonormality of the q-oscillator wavefunctions Psi_n on (-1, 1).
inline std::vector<CheckReport> check_wavefunction_orthogonality(
    long n_max, QBase qb, double tol, const QuadratureConfig& cfg = {},
    const TruncationPolicy& policy = {}) {
    std::vector<CheckReport> out;
    for (long m = 0; m <= n_max; ++m) {
        for (long n = 0; n <= n_max; ++n) {
            cplx I = integrate_theta(
                [&](double th) -> cplx {
                    const double xv = std::cos(th);
                    return q_wavefunction(m, xv, qb, policy) *
                           q_wavefunction(n, xv, qb, policy) * std::sin(th);
                },
                cfg);
            const double expect = (m == n) ? 1.0 : 0.0;
            double err = std::abs(I - expect);
            out.push_back(make_report(
                "check_wavefunction_orthogonality[" + std::to_string(m) + "," +
                    std::to_string(n) + "]",
                err, tol,
                {{"q", detail::fmt_g(qb.value())},
                 {"m", std::to_string(m)},
                 {"n", std::to_string(n)},
                 {"integral", detail::fmt_g(I)}}));
        }
    }
    return out;
}

// Kernel multiplication law:
//   integral K_t(x,y; lambda,mu) K_{t'}(y,x'; mu,lambda') rho_mu(y) dy
//     = K_{t t'}(x,x'; lambda,lambda') / h_0^mu.
inline CheckReport check_multiplication(const ParamSet& lambda, const MuParams& mu,
                                        const ParamSet& lambda2, cplx t, cplx t2,
                                        double x, double x2, double tol,
                                        const QuadratureConfig& cfg = {},
                                        long N = 80,
                                        const TruncationPolicy& policy = {}) {
    KernelParams kp_left(lambda, mu, t);
    KernelParams kp_right(mu.set(), MuParams(mu.set(), lambda2.values()), t2);
    KernelParams kp_product(lambda, MuParams(lambda, lambda2.values()), t * t2);
    const ParamSet& mu_set = mu.set();
    cplx lhs = integrate_weighted(
        [&](double yv) {
            return kernel_direct(x, yv, kp_left, N, policy).value *
                   kernel_direct(yv, x2, kp_right, N, policy).value;
        },
        [&](double yv) { return aw_weight(yv, mu_set, policy); }, cfg);
    cplx rhs = kernel_direct(x, x2, kp_product, N, policy).value /
               aw_h0(mu_set, policy);
    const double err = std::abs(lhs - rhs) / std::abs(rhs);
    return make_report("kernel_multiplication", err, tol,
                       {{"lambda", detail::fmt_params(lambda)},
                        {"mu", detail::fmt_params(mu_set)},
                        {"lambda2", detail::fmt_params(lambda2)},
                        {"q", detail::fmt_g(lambda.qv())},
                        {"t", detail::fmt_g(t)},
                        {"t2", detail::fmt_g(t2)},
                        {"x", detail::fmt_g(x)},
                        {"x2", detail::fmt_g(x2)},
                        {"lhs", detail::fmt_g(lhs)},
                        {"rhs", detail::fmt_g(rhs)}});
}

// Degree projection: t^m h_m^lambda p_m(x; lambda) equals
// h_0^lambda h_m^mu integral K_t(x,y) p_m(y; mu) rho_mu(y) dy.
inline CheckReport check_projection(const ParamSet& lambda, const MuParams& mu,
                                    cplx t, long m, double x, double tol,
                                    const QuadratureConfig& cfg = {}, long N = 80,
                                    const TruncationPolicy& policy = {}) {
    KernelParams kp(lambda, mu, t);
    const ParamSet& mu_set = mu.set();
    cplx integral = integrate_weighted(
        [&](double yv) {
            return kernel_direct(x, yv, kp, N, policy).value *
                   aw_poly(m, yv, mu_set, policy);
        },
        [&](double yv) { return aw_weight(yv, mu_set, policy); }, cfg);
    cplx lhs = aw_h0(lambda, policy) * aw_norm(m, mu_set, policy) * integral;
    cplx rhs = std::pow(t, static_cast<double>(m)) * aw_norm(m, lambda, policy) *
               aw_poly(m, x, lambda, policy);
    const double err = std::abs(lhs - rhs) / std::abs(rhs);
    return make_report("kernel_projection", err, tol,
                       {{"lambda", detail::fmt_params(lambda)},
                        {"mu", detail::fmt_params(mu_set)},
                        {"q", detail::fmt_g(lambda.qv())},
                        {"t", detail::fmt_g(t)},
                        {"m", std::to_string(m)},
                        {"x", detail::fmt_g(x)},
                        {"lhs", detail::fmt_g(lhs)},
                        {"rhs", detail::fmt_g(rhs)}});
}

// Delta-approximation behaviour of the normalized q-Hermite kernel:
// integral K_r(x, y) f(y) dy -> f(x) as r -> 1^-.  Panels double past
// r = 0.99 because the kernel peak width scales like (1 - r).
inline CheckReport check_delta_limit(double r,
                                     const std::function<double(double)>& f,
                                     double x, double tol, QBase qb,
                                     QuadratureConfig cfg = {},
                                     const TruncationPolicy& policy = {}) {
    if (!(r > 0.0 && r < 1.0))
        fail(ErrorCode::InvalidParameter, "check_delta_limit requires 0 < r < 1");
    if (r >= 0.99) cfg.panels *= 4;
    cplx I = integrate_theta(
        [&](double ph) -> cplx {
            const double yv = std::cos(ph);
            return qhermite_delta_kernel(x, yv, r, qb, policy) * f(yv) *
                   std::sin(ph);
        },
        cfg);
    const double err = std::abs(I.real() - f(x));
    return make_report("qhermite_delta_limit", err, tol,
                       {{"q", detail::fmt_g(qb.value())},
                        {"r", detail::fmt_g(r)},
                        {"x", detail::fmt_g(x)},
                        {"integral", detail::fmt_g(I.real())},
                        {"f(x)", detail::fmt_g(f(x))}});
}

// Dual evaluation of the continuous q-Hermite polynomial: the finite
// limit-form sum against the binomial-sum definition.  Both are exact
// finite sums, so agreement is expected to near machine precision.
inline CheckReport check_qhermite_limit(long n, double th, QBase qb,
                                        double tol = 1e-12) {
    const double lhs = qhermite_limit_sum(n, th, qb);
    const double rhs = cont_qhermite(n, std::cos(th), qb);
    const double err = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
    return make_report("qhermite_limit_form[n=" + std::to_string(n) + "]", err,
                       tol,
                       {{"q", detail::fmt_g(qb.value())},
                        {"n", std::to_string(n)},
                        {"theta", detail::fmt_g(th)},
                        {"lhs", detail::fmt_g(lhs)},
                        {"rhs", detail::fmt_g(rhs)}});
}

}  // namespace qaw
