#pragma once

// Composite Gauss-Legendre quadrature in the theta coordinate.  All weight
// integrals are evaluated after the substitution x = cos(theta): the
// Jacobian sin(theta) tames the (1-x^2)^{-1/2} endpoint behaviour of the
// weights, leaving integrands that are smooth over (0, pi).

#include <cmath>
#include <complex>
#include <functional>

#include <boost/math/quadrature/gauss.hpp>

#include "qaw/error.hpp"
#include "qaw/types.hpp"

namespace qaw {

struct QuadratureConfig {
    long panels = 64;
    long nodes_per_panel = 16;
    double theta_lo = 0.0;
    double theta_hi = M_PI;

    void validate() const {
        if (panels < 1 || nodes_per_panel < 1)
            fail(ErrorCode::InvalidParameter,
                 "quadrature requires panels >= 1 and nodes_per_panel >= 1");
        if (panels * nodes_per_panel > 1000000L)
            fail(ErrorCode::InvalidParameter,
                 "quadrature requires panels * nodes_per_panel <= 1e6");
        if (!(theta_lo >= 0.0 && theta_lo < theta_hi && theta_hi <= M_PI))
            fail(ErrorCode::InvalidParameter,
                 "quadrature domain must satisfy 0 <= lo < hi <= pi");
    }
};

namespace detail {

// One Gauss-Legendre panel [a, b] at a compile-time order.
template <unsigned Order>
cplx gl_panel(const std::function<cplx(double)>& f, double a, double b) {
    using rule = boost::math::quadrature::gauss<double, Order>;
    const auto& xs = rule::abscissa();
    const auto& ws = rule::weights();
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    cplx sum{0.0, 0.0};
    size_t i = 0;
    if (Order % 2 == 1) {
        sum += ws[0] * f(mid);
        i = 1;
    }
    for (; i < xs.size(); ++i)
        sum += ws[i] * (f(mid + half * xs[i]) + f(mid - half * xs[i]));
    return half * sum;
}

inline cplx gl_panel_dispatch(const std::function<cplx(double)>& f, double a,
                              double b, long order) {
    switch (order) {
        case 8:  return gl_panel<8>(f, a, b);
        case 16: return gl_panel<16>(f, a, b);
        case 24: return gl_panel<24>(f, a, b);
        case 32: return gl_panel<32>(f, a, b);
        case 48: return gl_panel<48>(f, a, b);
        case 64: return gl_panel<64>(f, a, b);
        default:
            fail(ErrorCode::InvalidParameter,
                 "supported Gauss-Legendre orders: 8, 16, 24, 32, 48, 64");
    }
}

}  // namespace detail

// Integral of f(theta) d(theta) over the configured domain.
inline cplx integrate_theta(const std::function<cplx(double)>& f,
                            const QuadratureConfig& cfg = {}) {
    cfg.validate();
    const double width = (cfg.theta_hi - cfg.theta_lo) / cfg.panels;
    cplx total{0.0, 0.0};
    for (long p = 0; p < cfg.panels; ++p) {
        const double a = cfg.theta_lo + p * width;
        total += detail::gl_panel_dispatch(f, a, a + width, cfg.nodes_per_panel);
    }
    require_finite(total, "integrate_theta");
    return total;
}

// Integral of f(x) * weight(x) dx over (-1, 1) via x = cos(theta).
inline cplx integrate_weighted(const std::function<cplx(double)>& f,
                               const std::function<double(double)>& weight,
                               const QuadratureConfig& cfg = {}) {
    return integrate_theta(
        [&](double th) -> cplx {
            const double x = std::cos(th);
            cplx fv = f(x);
            if (!is_finite(fv))
                fail(ErrorCode::NonFiniteIntegrand,
                     "integrate_weighted integrand non-finite");
            return fv * weight(x) * std::sin(th);
        },
        cfg);
}

}  // namespace qaw
