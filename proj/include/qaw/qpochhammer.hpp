#pragma once

// Finite and infinite q-shifted factorials (a;q)_n, (a;q)_inf, the
// multi-parameter product, and the quadratic product function
// h(x;a) = prod_n (1 - 2ax q^n + a^2 q^{2n}).

#include <cmath>
#include <complex>
#include <initializer_list>
#include <vector>

#include "qaw/types.hpp"

namespace qaw {

// (a;q)_n = prod_{j=0}^{n-1} (1 - a q^j); exactly 1 for n = 0.
inline cplx qpoch_n(cplx a, QBase q, long n) {
    if (n < 0) fail(ErrorCode::InvalidParameter, "qpoch_n requires n >= 0");
    cplx prod{1.0, 0.0};
    cplx aq = a;
    for (long j = 0; j < n; ++j) {
        prod *= (1.0 - aq);
        aq *= q.value();
    }
    return prod;
}

// True when z sits on the lattice {q^{-m} : 0 <= m <= max_m} within the
// given relative distance.  Used both for structural zeros of infinite
// products and for denominator pole guards.
inline bool on_inverse_q_lattice(cplx z, double q, double rel_dist = 1e-10,
                                 int max_m = 60) {
    double point = 1.0;
    for (int m = 0; m <= max_m; ++m) {
        if (std::abs(z - point) <= rel_dist * point) return true;
        point /= q;
        if (!std::isfinite(point)) break;
    }
    return false;
}

// (a;q)_inf truncated at the first N with |a| q^N < rel_tol * (1-q); the
// geometric tail bound then keeps the remaining relative error below
// rel_tol.  A parameter on the q^{-m} lattice makes the product exactly
// zero; that is reported through structural_zero rather than left to
// cancellation.
inline SeriesValue qpoch_inf(cplx a, QBase q, const TruncationPolicy& policy = {}) {
    policy.validate();
    if (!is_finite(a)) fail(ErrorCode::InvalidParameter, "qpoch_inf requires finite a");
    SeriesValue out;
    if (a == cplx{0.0, 0.0}) {
        out.value = 1.0;
        return out;
    }
    if (on_inverse_q_lattice(a, q.value(), 1e-14)) {
        // One factor (1 - a q^m) vanishes identically.
        out.value = 0.0;
        out.structural_zero = true;
        return out;
    }
    const double qv = q.value();
    const double cutoff = policy.rel_tol * (1.0 - qv);
    cplx prod{1.0, 0.0};
    cplx aq = a;
    long n = 0;
    while (std::abs(aq) >= cutoff) {
        prod *= (1.0 - aq);
        aq *= qv;
        if (++n > policy.max_terms)
            fail(ErrorCode::MaxTermsExceeded,
                 "qpoch_inf truncation bound exceeds max_terms");
    }
    out.value = prod;
    out.terms_used = n;
    out.tail_estimate = std::abs(aq) / (1.0 - qv) * std::abs(prod);
    require_finite(out.value, "qpoch_inf");
    return out;
}

constexpr long kInfinity = -1;  // sentinel order for qpoch_multi

// (a_1,...,a_m;q)_n as a plain product of per-parameter factors; n may be
// kInfinity for the infinite version.
inline cplx qpoch_multi(const std::vector<cplx>& as, QBase q, long n,
                        const TruncationPolicy& policy = {}) {
    if (as.empty()) fail(ErrorCode::InvalidParameter, "qpoch_multi requires a nonempty list");
    cplx prod{1.0, 0.0};
    for (const cplx& a : as)
        prod *= (n == kInfinity) ? qpoch_inf(a, q, policy).value : qpoch_n(a, q, n);
    return prod;
}

inline cplx qpoch_multi(std::initializer_list<cplx> as, QBase q, long n,
                        const TruncationPolicy& policy = {}) {
    return qpoch_multi(std::vector<cplx>(as), q, n, policy);
}

// h(x;a) = prod_{n>=0} (1 - 2ax q^n + a^2 q^{2n})
//        = (a e^{i theta};q)_inf (a e^{-i theta};q)_inf  with x = cos theta.
// Evaluated in the real quadratic form, which keeps the value exactly real
// for real a.
inline SeriesValue h_factor(double x, cplx a, QBase q, const TruncationPolicy& policy = {}) {
    policy.validate();
    if (!(x >= -1.0 && x <= 1.0))
        fail(ErrorCode::InvalidParameter, "h_factor requires -1 <= x <= 1");
    SeriesValue out;
    if (a == cplx{0.0, 0.0}) {
        out.value = 1.0;
        return out;
    }
    const double qv = q.value();
    const double cutoff = policy.rel_tol * (1.0 - qv);
    cplx prod{1.0, 0.0};
    cplx aq = a;
    long n = 0;
    while (std::abs(aq) >= cutoff) {
        prod *= (1.0 - 2.0 * aq * x + aq * aq);
        aq *= qv;
        if (++n > policy.max_terms)
            fail(ErrorCode::MaxTermsExceeded, "h_factor truncation bound exceeds max_terms");
    }
    out.value = prod;
    out.terms_used = n;
    out.tail_estimate = 2.0 * std::abs(aq) / (1.0 - qv) * std::abs(prod);
    require_finite(out.value, "h_factor");
    return out;
}

// h(x; a_1, ..., a_r) = prod_j h(x; a_j).
inline cplx h_multi(double x, const std::vector<cplx>& as, QBase q,
                    const TruncationPolicy& policy = {}) {
    cplx prod{1.0, 0.0};
    for (const cplx& a : as) prod *= h_factor(x, a, q, policy).value;
    return prod;
}

inline cplx h_multi(double x, std::initializer_list<cplx> as, QBase q,
                    const TruncationPolicy& policy = {}) {
    return h_multi(x, std::vector<cplx>(as), q, policy);
}

}  // namespace qaw
