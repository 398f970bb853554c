#pragma once

// Standalone checks of the two series transformations the kernel formulas
// rest on: the expansion of a special 6W5 into three 4phi3-weighted sums,
// and the 2phi1 -> 2phi2 rewrite used by the three-parameter reduction.
// Each check evaluates both sides independently and reports the relative
// discrepancy.

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

#include "qaw/detail/ratio_sum.hpp"
#include "qaw/params.hpp"
#include "qaw/report.hpp"
#include "qaw/series.hpp"

namespace qaw {

namespace detail {

inline std::string fmt_cplx(cplx z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

inline std::string fmt_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace detail

// Left side: 6W5(eps^2/q; ad, q/u, q/v; q, bc*uvt/q^2).  Right side: the
// three-term expansion whose outer sums run over k with 4phi3 inner blocks.
// The identity holds for generic admissible parameters; callers must keep
// |bc*uvt/q^2| < 1 and ad/t off the q-power lattice.
inline CheckReport check_6w5_split(cplx u, cplx v, cplx t, const ParamSet& lambda,
                                   double tolerance = 1e-8,
                                   const TruncationPolicy& policy = {}) {
    const double q = lambda.qv();
    QBase qb = lambda.q();
    const double a = lambda.a(), b = lambda.b(), c = lambda.c(), d = lambda.d();
    const cplx eps = lambda.epsilon();
    const cplx eps2 = eps * eps;
    const double ad = a * d;
    const double bc = b * c;
    const double sq = std::sqrt(q);
    const cplx z = bc * u * v * t / (q * q);

    // At t = 0 the argument z vanishes, so the left side is 1, and only the
    // first expansion term survives on the right (the other two carry
    // positive powers of t but also 1/t pole factors that IEEE arithmetic
    // turns into NaN instead of 0).  Report the collapse directly.
    if (t == cplx{0.0, 0.0}) {
        return make_report(
            "w65_three_term_split", 0.0, tolerance,
            {{"q", detail::fmt_real(q)},
             {"a", detail::fmt_real(a)}, {"b", detail::fmt_real(b)},
             {"c", detail::fmt_real(c)}, {"d", detail::fmt_real(d)},
             {"u", detail::fmt_cplx(u)}, {"v", detail::fmt_cplx(v)},
             {"t", detail::fmt_cplx(t)}},
            "t=0 collapse: lhs=1 rhs=1 structurally");
    }

    const cplx lhs = eval_W(eps2 / q, {cplx(ad), q / u, q / v}, z, qb, policy).value;

    auto pinf = [&](std::initializer_list<cplx> args) {
        return qpoch_multi(args, qb, kInfinity, policy);
    };
    auto inner_phi = [&](std::vector<cplx> nums, std::vector<cplx> dens) {
        PhiSpec spec;
        spec.numerator = std::move(nums);
        spec.denominator = std::move(dens);
        spec.z = q;
        spec.q = q;
        return eval_phi(spec, policy).value;
    };

    long terms = 0;

    // First expansion term.
    cplx pref1 = (1.0 - t * t) * qpoch_inf(-q * t * eps, qb, policy).value /
                 qpoch_inf(-t / eps, qb, policy).value;
    detail::RatioSum outer1{{eps, eps * sq, -eps * sq, -eps / ad},
                            {cplx(q), cplx(bc), -q * t * eps, -q * eps / t},
                            cplx(q), q};
    cplx term1 = pref1 * outer1.run([&](long k) {
        const double qmk = std::pow(q, static_cast<double>(-k));
        return inner_phi({cplx(qmk), -eps, cplx(ad), eps2 * u * v / (q * q)},
                         {-ad * q * qmk / eps, u * eps2 / q, v * eps2 / q});
    }, 4000, 1e-15, -1, &terms);

    // Second expansion term (inner series is nonterminating at z = q).
    cplx pref2 = pinf({eps2, -eps / ad, t, -t * eps / ad}) /
                 pinf({-eps, cplx(bc), t / ad, -eps / t});
    detail::RatioSum outer2{{-t, t * sq, -t * sq, t / ad},
                            {cplx(q), q * t * t, -t * eps / ad, -q * t / eps},
                            cplx(q), q};
    cplx term2 = pref2 * outer2.run([&](long k) {
        const double qmk = std::pow(q, static_cast<double>(-k));
        return inner_phi({-eps * qmk / t, -eps, cplx(ad), eps2 * u * v / (q * q)},
                         {ad * q * qmk / t, u * eps2 / q, v * eps2 / q});
    }, 4000, 1e-15, -1, &terms);

    // Third expansion term.
    cplx pref3 = pinf({eps2, cplx(ad), bc * t * u / q, bc * t * v / q, u * v * eps2 / (q * q)}) /
                 pinf({cplx(bc), ad / t, u * eps2 / q, v * eps2 / q, z});
    detail::RatioSum outer3{{t, -eps / ad, -eps * t / ad, z},
                            {cplx(q), q * t / ad, bc * t * u / q, bc * t * v / q},
                            cplx(q), q};
    cplx term3 = pref3 * outer3.run([&](long k) {
        const double qmk = std::pow(q, static_cast<double>(-k));
        return inner_phi({cplx(qmk), -t, t * sq, -t * sq},
                         {q * t * t, -t * eps / ad, -ad * q * qmk / eps});
    }, 4000, 1e-15, -1, &terms);

    const cplx rhs = term1 + term2 + term3;
    const double scale = std::max(std::abs(lhs), 1e-30);
    const double err = std::abs(lhs - rhs) / scale;

    return make_report(
        "w65_three_term_split", err, tolerance,
        {{"q", detail::fmt_real(q)},
         {"a", detail::fmt_real(a)}, {"b", detail::fmt_real(b)},
         {"c", detail::fmt_real(c)}, {"d", detail::fmt_real(d)},
         {"u", detail::fmt_cplx(u)}, {"v", detail::fmt_cplx(v)},
         {"t", detail::fmt_cplx(t)}},
        "lhs=" + detail::fmt_cplx(lhs) + " rhs=" + detail::fmt_cplx(rhs) +
            " outer_terms=" + std::to_string(terms));
}

// 2phi1[q/u, q/v; bc; q, bc*uvt/q^2]
//   = (bctu/q, bctv/q;q)_inf / ((bc, bc*uvt/q^2;q)_inf)
//     * 2phi2[t, bc*uvt/q^2; bctu/q, bctv/q; q, bc].
// The 2phi2 on the right carries the compensating (-1)^k q^{C(k,2)} power
// of the series convention.
inline CheckReport check_2phi1_2phi2(cplx u, cplx v, cplx t, double b, double c,
                                     QBase qb, double tolerance = 1e-9,
                                     const TruncationPolicy& policy = {}) {
    const double q = qb.value();
    const double bc = b * c;
    const cplx z = bc * u * v * t / (q * q);

    PhiSpec left;
    left.numerator = {q / u, q / v};
    left.denominator = {cplx(bc)};
    left.z = z;
    left.q = q;
    const cplx lhs = eval_phi(left, policy).value;

    const cplx pref =
        qpoch_inf(bc * t * u / q, qb, policy).value *
        qpoch_inf(bc * t * v / q, qb, policy).value /
        (qpoch_inf(cplx(bc), qb, policy).value * qpoch_inf(z, qb, policy).value);
    PhiSpec right;
    right.numerator = {t, z};
    right.denominator = {bc * t * u / q, bc * t * v / q};
    right.z = bc;
    right.q = q;
    const cplx rhs = pref * eval_phi(right, policy).value;

    const double scale = std::max(std::abs(lhs), 1e-30);
    const double err = std::abs(lhs - rhs) / scale;

    return make_report(
        "phi21_to_phi22_transform", err, tolerance,
        {{"q", detail::fmt_real(q)},
         {"b", detail::fmt_real(b)}, {"c", detail::fmt_real(c)},
         {"u", detail::fmt_cplx(u)}, {"v", detail::fmt_cplx(v)},
         {"t", detail::fmt_cplx(t)}},
        "lhs=" + detail::fmt_cplx(lhs) + " rhs=" + detail::fmt_cplx(rhs));
}

}  // namespace qaw
