#pragma once

// The Askey-Wilson polynomial family, its degenerate relatives, weights and
// normalization constants, plus the classical Hermite helpers.
//
// Evaluation strategy for the four-parameter polynomials: the terminating
// 4phi3 series is used through n <= 6, where its alternating terms (largest
// ~ q^{-n(n-1)/2}) still cancel to ~1e-9 relative accuracy in doubles.
// Beyond that the series loses digits rapidly (observed: ~1e-4 by n = 8,
// unusable by n = 10), while the three-term recurrence in n stays at
// machine precision through n >= 60, so higher degrees switch to the
// recurrence.  The recurrence requires the first parameter to be nonzero;
// the degenerate families with a = 0 have their own evaluators.

#include <cmath>
#include <complex>
#include <vector>

#include "qaw/params.hpp"
#include "qaw/qpochhammer.hpp"
#include "qaw/series.hpp"

namespace qaw {

constexpr int kAwSeriesMaxDegree = 6;

namespace detail {

// Coefficients of 2x p_m = A_m p_{m+1} + (a + 1/a - A_m - C_m) p_m + C_m p_{m-1}
// for the 4phi3-normalized polynomials; valid with any of b, c, d zero.
struct RecurAC {
    double A;
    double C;
};

inline RecurAC aw_recurrence_coeffs(long m, double a, double b, double c, double d,
                                    double q) {
    const double abcd = a * b * c * d;
    const double qm = std::pow(q, static_cast<double>(m));
    RecurAC out;
    out.A = (1 - a * b * qm) * (1 - a * c * qm) * (1 - a * d * qm) *
            (1 - abcd * std::pow(q, static_cast<double>(m - 1))) /
            (a * (1 - abcd * std::pow(q, static_cast<double>(2 * m - 1))) *
             (1 - abcd * std::pow(q, static_cast<double>(2 * m))));
    out.C = a * (1 - qm) * (1 - b * c * std::pow(q, static_cast<double>(m - 1))) *
            (1 - b * d * std::pow(q, static_cast<double>(m - 1))) *
            (1 - c * d * std::pow(q, static_cast<double>(m - 1))) /
            ((1 - abcd * std::pow(q, static_cast<double>(2 * m - 2))) *
             (1 - abcd * std::pow(q, static_cast<double>(2 * m - 1))));
    return out;
}

inline cplx aw_poly_series(long n, double x, double a, double b, double c, double d,
                           double q, const TruncationPolicy& policy = {}) {
    const double th = std::acos(x);
    const cplx ei = std::polar(1.0, th);
    PhiSpec spec;
    spec.numerator = {cplx(std::pow(q, static_cast<double>(-n))),
                      cplx(a * b * c * d * std::pow(q, static_cast<double>(n - 1))),
                      a * ei, a / ei};
    spec.denominator = {cplx(a * b), cplx(a * c), cplx(a * d)};
    spec.z = q;
    spec.q = q;
    return eval_phi(spec, policy).value;
}

inline double aw_poly_recurrence(long n, double x, double a, double b, double c,
                                 double d, double q) {
    if (n == 0) return 1.0;
    double pm = 1.0;
    double p = aw_poly_series(1, x, a, b, c, d, q).real();
    for (long m = 1; m < n; ++m) {
        RecurAC rc = aw_recurrence_coeffs(m, a, b, c, d, q);
        double pn = (2 * x * p - (a + 1.0 / a - rc.A - rc.C) * p - rc.C * pm) / rc.A;
        pm = p;
        p = pn;
    }
    return p;
}

}  // namespace detail

// p_n(x; a,b,c,d): the terminating 4phi3 normalization.
inline cplx aw_poly(long n, double x, const ParamSet& lambda,
                    const TruncationPolicy& policy = {}) {
    if (n < 0) fail(ErrorCode::InvalidParameter, "aw_poly requires n >= 0");
    if (!(x >= -1.0 && x <= 1.0))
        fail(ErrorCode::InvalidParameter, "aw_poly requires -1 <= x <= 1");
    const double a = lambda.a(), b = lambda.b(), c = lambda.c(), d = lambda.d();
    const double q = lambda.qv();
    if (n <= kAwSeriesMaxDegree || a == 0.0) {
        if (a == 0.0 && n > kAwSeriesMaxDegree)
            fail(ErrorCode::InvalidParameter,
                 "aw_poly with first parameter 0 is limited to n <= 6; "
                 "use the degenerate-family evaluators");
        return detail::aw_poly_series(n, x, a, b, c, d, q, policy);
    }
    return cplx(detail::aw_poly_recurrence(n, x, a, b, c, d, q), 0.0);
}

// rho(x; a,b,c,d) = h(x; 1,-1,sqrt q,-sqrt q) / h(x; a,b,c,d) / sqrt(1-x^2).
inline double aw_weight(double x, const ParamSet& lambda,
                        const TruncationPolicy& policy = {}) {
    if (!(std::abs(x) < 1.0))
        fail(ErrorCode::EndpointSingularity, "aw_weight is singular at |x| = 1");
    const double q = lambda.qv();
    const double sq = std::sqrt(q);
    cplx num = h_multi(x, {cplx(1.0), cplx(-1.0), cplx(sq), cplx(-sq)}, lambda.q(), policy);
    cplx den{1.0, 0.0};
    for (double p : lambda.values())
        den *= h_factor(x, cplx(p), lambda.q(), policy).value;
    double w = (num / den).real() / std::sqrt(1.0 - x * x);
    if (!std::isfinite(w)) fail(ErrorCode::NonFiniteIntegrand, "aw_weight non-finite");
    return w;
}

// h_0: the n = 0 normalization constant of the orthogonality relation.
inline double aw_h0(const ParamSet& lambda, const TruncationPolicy& policy = {}) {
    const double a = lambda.a(), b = lambda.b(), c = lambda.c(), d = lambda.d();
    QBase qb = lambda.q();
    cplx num = qpoch_multi({cplx(lambda.qv()), cplx(a * b), cplx(a * c), cplx(a * d),
                            cplx(b * c), cplx(b * d), cplx(c * d)},
                           qb, kInfinity, policy);
    cplx den = qpoch_inf(cplx(a * b * c * d), qb, policy).value;
    return (num / den).real() / (2.0 * M_PI);
}

// h_n = h_0 (1-abcd q^{2n-1}) (abcd/q, ab, ac, ad;q)_n
//           / ((1-abcd/q) (q, cd, bd, bc;q)_n) a^{-2n}.
inline double aw_norm(long n, const ParamSet& lambda,
                      const TruncationPolicy& policy = {}) {
    if (n < 0) fail(ErrorCode::InvalidParameter, "aw_norm requires n >= 0");
    const double h0 = aw_h0(lambda, policy);
    if (n == 0) return h0;
    const double a = lambda.a(), b = lambda.b(), c = lambda.c(), d = lambda.d();
    const double q = lambda.qv();
    const double abcd = a * b * c * d;
    if (a == 0.0)
        fail(ErrorCode::InvalidParameter, "aw_norm requires a != 0 for n >= 1");
    QBase qb = lambda.q();
    const double pole = 1.0 - abcd * std::pow(q, static_cast<double>(2 * n - 1));
    if (std::abs(pole) < 1e-12)
        fail(ErrorCode::PoleInDenominator, "aw_norm: abcd q^{2n-1} = 1");
    double num = pole *
                 (qpoch_n(cplx(abcd / q), qb, n) * qpoch_n(cplx(a * b), qb, n) *
                  qpoch_n(cplx(a * c), qb, n) * qpoch_n(cplx(a * d), qb, n)).real();
    double den = (1.0 - abcd / q) *
                 (qpoch_n(cplx(q), qb, n) * qpoch_n(cplx(c * d), qb, n) *
                  qpoch_n(cplx(b * d), qb, n) * qpoch_n(cplx(b * c), qb, n)).real();
    return h0 * num / den * std::pow(a, static_cast<double>(-2 * n));
}

// p_n via the q-integral representation: a lattice-sum alternative route
// used as a cross-check on aw_poly.  Requires d != 0 (the formula divides
// by d); the d = 0 families have direct evaluators.
inline cplx aw_poly_qint(long n, double x, const ParamSet& lambda,
                         const TruncationPolicy& policy = {}) {
    const double a = lambda.a(), b = lambda.b(), c = lambda.c(), d = lambda.d();
    const double q = lambda.qv();
    if (d == 0.0)
        fail(ErrorCode::InvalidParameter, "aw_poly_qint requires d != 0");
    QBase qb = lambda.q();
    const double th = std::acos(x);
    const cplx ei = std::polar(1.0, th);
    const cplx eps2 = cplx(a * b * c * d);
    const cplx hxd = qpoch_inf(d * ei, qb, policy).value *
                     qpoch_inf(d / ei, qb, policy).value;
    const cplx A = cplx(0.0, -1.0) * q * (1.0 - q) / (2.0 * d) *
                   qpoch_multi({cplx(q), cplx(a * b), cplx(a * c), cplx(b * c)}, qb,
                               kInfinity, policy) *
                   hxd * aw_weight(x, lambda, policy);
    auto integrand = [&](cplx u) -> cplx {
        cplx val = qpoch_multi({d * u * ei, d * u / ei, eps2 * u / q}, qb, kInfinity, policy) /
                   qpoch_multi({d * a * u / q, d * b * u / q, d * c * u / q}, qb,
                               kInfinity, policy);
        val *= qpoch_n(q / u, qb, n) / qpoch_n(eps2 * u / q, qb, n) *
               std::pow(a * d * u / q, static_cast<double>(n));
        return val;
    };
    const cplx I = q_integral(integrand, q * ei / d, q / (d * ei), qb, policy).value;
    return I / A * qpoch_n(cplx(b * c), qb, n) / qpoch_n(cplx(a * d), qb, n);
}

// Continuous dual q-Hahn: the terminating 3phi2 (d = 0 reduction).
inline cplx dual_qhahn(long n, double x, double a, double b, double c, QBase qb,
                       const TruncationPolicy& policy = {}) {
    return aw_poly(n, x, ParamSet({a, b, c}, qb), policy);
}

// Al-Salam-Chihara: the c = d = 0 reduction.
inline cplx alsalam_chihara(long n, double x, double a, double b, QBase qb,
                            const TruncationPolicy& policy = {}) {
    return aw_poly(n, x, ParamSet({a, b}, qb), policy);
}

// The (ab;q)_n a^{-n} / (q;q)_n renormalization of Al-Salam-Chihara used by
// the fixed-argument kernel family.
inline cplx alsalam_chihara_norm(long n, double x, double a, double b, QBase qb,
                                 const TruncationPolicy& policy = {}) {
    cplx scale = qpoch_n(cplx(a * b), qb, n) /
                 qpoch_n(cplx(qb.value()), qb, n) * std::pow(a, static_cast<double>(-n));
    return scale * alsalam_chihara(n, x, a, b, qb, policy);
}

// Second printed form of the Al-Salam-Chihara polynomial:
// (b e^{-i th};q)_n (a e^{i th})^n / (ab;q)_n * 2phi1 — used as a
// dual-evaluation cross-check.
inline cplx alsalam_chihara_phi21(long n, double x, double a, double b, QBase qb,
                                  const TruncationPolicy& policy = {}) {
    const double q = qb.value();
    const double th = std::acos(x);
    const cplx ei = std::polar(1.0, th);
    PhiSpec spec;
    spec.numerator = {cplx(std::pow(q, static_cast<double>(-n))), a * ei};
    spec.denominator = {std::pow(q, static_cast<double>(1 - n)) * ei / b};
    spec.z = q / (b * ei);
    spec.q = q;
    cplx front = qpoch_n(b / ei, qb, n) / qpoch_n(cplx(a * b), qb, n) *
                 std::pow(a * ei, static_cast<double>(n));
    return front * eval_phi(spec, policy).value;
}

// Continuous big q-Hermite: the b = c = d = 0 reduction.
inline cplx big_qhermite(long n, double x, double a, QBase qb,
                         const TruncationPolicy& policy = {}) {
    return aw_poly(n, x, ParamSet({a}, qb), policy);
}

// Explicit finite-sum form of the big q-Hermite polynomial:
// (a e^{i th})^n sum_k (q^{-n}, a e^{i th};q)_k / (q;q)_k
//                      (-q^n e^{-2i th})^k q^{-C(k,2)}.
inline cplx big_qhermite_expanded(long n, double x, double a, QBase qb) {
    const double q = qb.value();
    const double th = std::acos(x);
    const cplx ei = std::polar(1.0, th);
    const cplx e2m = 1.0 / (ei * ei);
    cplx sum{0.0, 0.0};
    cplx poch_qn{1.0, 0.0};   // (q^{-n};q)_k
    cplx poch_ae{1.0, 0.0};   // (a e^{i th};q)_k
    cplx poch_q{1.0, 0.0};    // (q;q)_k
    const double qmn = std::pow(q, static_cast<double>(-n));
    for (long k = 0; k <= n; ++k) {
        double expo = static_cast<double>(n) * k - 0.5 * k * (k - 1);
        sum += poch_qn * poch_ae / poch_q * std::pow(-e2m, static_cast<double>(k)) *
               std::pow(q, expo);
        const double qk = std::pow(q, static_cast<double>(k));
        poch_qn *= (1.0 - qmn * qk);
        poch_ae *= (1.0 - a * ei * qk);
        poch_q *= (1.0 - q * qk);
    }
    return std::pow(a * ei, static_cast<double>(n)) * sum;
}

// Continuous q-Hermite polynomial H_n(x|q): the q-binomial exponential sum.
inline double cont_qhermite(long n, double x, QBase qb) {
    if (n < 0) fail(ErrorCode::InvalidParameter, "cont_qhermite requires n >= 0");
    const double q = qb.value();
    const double th = std::acos(x);
    std::vector<double> qq(n + 1);
    qq[0] = 1.0;
    for (long k = 1; k <= n; ++k) qq[k] = qq[k - 1] * (1.0 - std::pow(q, static_cast<double>(k)));
    double sum = 0.0;
    for (long k = 0; k <= n; ++k)
        sum += qq[n] / (qq[k] * qq[n - k]) * std::cos((n - 2 * k) * th);
    return sum;
}

// Finite-sum limit form of the continuous q-Hermite polynomial:
// e^{i n th} sum_{k<=n} (q^{-n};q)_k/(q;q)_k (-e^{-2i th})^k q^{nk - C(k,2)}.
// Equals cont_qhermite(n, cos th) exactly; the dual evaluation is a suite
// check.
inline double qhermite_limit_sum(long n, double th, QBase qb) {
    const double q = qb.value();
    const cplx e2m = std::polar(1.0, -2.0 * th);
    const double qmn = std::pow(q, static_cast<double>(-n));
    cplx sum{0.0, 0.0};
    cplx poch_qn{1.0, 0.0};  // (q^{-n};q)_k
    double poch_q = 1.0;     // (q;q)_k
    for (long k = 0; k <= n; ++k) {
        const double expo = static_cast<double>(n) * k - 0.5 * k * (k - 1);
        sum += poch_qn / poch_q * std::pow(-e2m, static_cast<double>(k)) *
               std::pow(q, expo);
        const double qk = std::pow(q, static_cast<double>(k));
        poch_qn *= (1.0 - qmn * qk);
        poch_q *= (1.0 - q * qk);
    }
    return (std::polar(1.0, n * th) * sum).real();
}

// Weight shape of the q-harmonic oscillator:
// rho_0(x) = 4 sqrt(1-x^2) prod_{k>=1} (1 - 2(2x^2-1)q^k + q^{2k}).
inline double qhermite_rho0(double x, QBase qb, const TruncationPolicy& policy = {}) {
    if (!(std::abs(x) < 1.0))
        fail(ErrorCode::EndpointSingularity, "rho_0 is defined on |x| < 1");
    const double x2 = 2.0 * x * x - 1.0;
    double tail = h_factor(x2, cplx(qb.value()), qb, policy).value.real();
    return 4.0 * std::sqrt(1.0 - x * x) * tail;
}

// Psi_n(x|q) = [(q^{n+1};q)_inf / 2 pi]^{1/2} sqrt(rho_0(x)) H_n(x|q).
inline double q_wavefunction(long n, double x, QBase qb,
                             const TruncationPolicy& policy = {}) {
    const double q = qb.value();
    double head = qpoch_inf(cplx(std::pow(q, static_cast<double>(n + 1))), qb, policy)
                      .value.real() / (2.0 * M_PI);
    return std::sqrt(head) * std::sqrt(qhermite_rho0(x, qb, policy)) *
           cont_qhermite(n, x, qb);
}

// Continuous q-Laguerre: Al-Salam-Chihara (renormalized form) at
// a = q^{(2 alpha + 1)/4}, b = q^{(2 alpha + 3)/4}; needs alpha > -1/2 to
// keep |a| < 1.
inline cplx q_laguerre(long n, double x, double alpha_lag, QBase qb,
                       const TruncationPolicy& policy = {}) {
    if (!(alpha_lag > -0.5))
        fail(ErrorCode::InvalidParameter, "q_laguerre requires alpha > -1/2");
    const double q = qb.value();
    const double a = std::pow(q, (2.0 * alpha_lag + 1.0) / 4.0);
    const double b = std::pow(q, (2.0 * alpha_lag + 3.0) / 4.0);
    return alsalam_chihara_norm(n, x, a, b, qb, policy);
}

// Physicists' Hermite polynomial by the three-term recurrence.
inline double hermite(long n, double x) {
    if (n < 0) fail(ErrorCode::InvalidParameter, "hermite requires n >= 0");
    double hm = 1.0, h = 2.0 * x;
    if (n == 0) return hm;
    for (long k = 1; k < n; ++k) {
        double hn = 2.0 * x * h - 2.0 * k * hm;
        hm = h;
        h = hn;
    }
    return h;
}

// Normalized oscillator wavefunction Psi_n(x) = (2^n n! sqrt pi)^{-1/2}
// H_n(x) e^{-x^2/2}, evaluated by the normalized recurrence
// Psi_{n+1} = x sqrt(2/(n+1)) Psi_n - sqrt(n/(n+1)) Psi_{n-1} to avoid
// overflow in 2^n n!.
inline double hermite_psi(long n, double x) {
    if (n < 0) fail(ErrorCode::InvalidParameter, "hermite_psi requires n >= 0");
    const double p0 = std::exp(-x * x / 2.0) / std::pow(M_PI, 0.25);
    if (n == 0) return p0;
    double pm = p0;
    double p = x * std::sqrt(2.0) * p0;
    for (long k = 1; k < n; ++k) {
        double pn = x * std::sqrt(2.0 / (k + 1)) * p - std::sqrt(k / (k + 1.0)) * pm;
        pm = p;
        p = pn;
    }
    return p;
}

}  // namespace qaw
