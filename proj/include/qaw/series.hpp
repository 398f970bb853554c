#pragma once

// General basic hypergeometric series engine:
//
//   r+1_phi_r[a1..a_{r+1}; b1..b_r; q, z]
//     = sum_k (a1..;q)_k / ((q, b1..;q)_k) * [(-1)^k q^{C(k,2)}]^{1+s-r} z^k
//
// in the convention where an "unbalanced" series (fewer numerator than
// denominator parameters plus one) carries the compensating power
// [(-1)^k q^{k(k-1)/2}]^{excess}.  Terms advance by multiplicative ratio,
// never by recomputing Pochhammers.  Also the very-well-poised wrapper and
// the Jackson q-integral.

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "qaw/qpochhammer.hpp"
#include "qaw/types.hpp"

namespace qaw {

struct PhiSpec {
    std::vector<cplx> numerator;    // a_1 ... a_{r+1}
    std::vector<cplx> denominator;  // b_1 ... b_r (the implicit (q;q)_k is not listed)
    cplx z{0.0, 0.0};
    double q = 0.5;
};

namespace detail {

// Index n such that a = q^{-n} within rel 1e-12, or -1.  Callers construct
// q^{-n} by powering, so exact equality is unreliable.
inline long termination_index(cplx a, double q) {
    if (a.real() <= 0.0 || std::abs(a.imag()) > 1e-12 * std::abs(a)) return -1;
    if (std::abs(a) < 1.0 - 1e-12) return -1;
    double n_guess = std::log(std::abs(a)) / std::log(1.0 / q);
    long n = std::lround(n_guess);
    if (n < 0) return -1;
    double point = std::pow(q, -static_cast<double>(n));
    if (std::abs(a - point) <= 1e-12 * point) return n;
    return -1;
}

}  // namespace detail

inline SeriesValue eval_phi(const PhiSpec& spec, const TruncationPolicy& policy = {}) {
    policy.validate();
    QBase q(spec.q);
    const double qv = spec.q;

    // Terminating if any numerator parameter sits on q^{-n}; the smallest
    // such n wins (later factors are never reached).
    long n_term = -1;
    for (const cplx& a : spec.numerator) {
        long n = detail::termination_index(a, qv);
        if (n >= 0 && (n_term < 0 || n < n_term)) n_term = n;
    }

    // A numerator parameter that is exactly zero freezes its Pochhammer at 1;
    // nothing special needed.  Denominator parameters on the q^{-m} lattice
    // produce a genuine division by zero at k = m+1 unless the series
    // terminates first.
    for (const cplx& b : spec.denominator) {
        double point = 1.0;
        for (int m = 0; m <= 60; ++m) {
            bool reached = (n_term < 0) || (m < n_term);
            if (reached && std::abs(b - point) <= 1e-10 * point)
                fail(ErrorCode::PoleInDenominator,
                     "phi denominator parameter within 1e-10 of q^-" + std::to_string(m));
            point /= qv;
        }
    }

    const int excess = 1 + static_cast<int>(spec.denominator.size()) -
                       static_cast<int>(spec.numerator.size());
    if (n_term < 0 && excess <= 0 && std::abs(spec.z) >= 1.0)
        fail(ErrorCode::Divergent,
             "nonterminating phi series with |z| >= 1 and no compensating q-power");

    cplx total{0.0, 0.0};
    cplx term{1.0, 0.0};
    int consecutive_small = 0;
    long k = 0;
    double last_mag = 1.0;
    while (true) {
        total += term;
        last_mag = std::abs(term);
        if (n_term >= 0 && k == n_term) {
            SeriesValue out;
            out.value = total;
            out.terms_used = k + 1;
            out.tail_estimate = 0.0;
            out.terminated = true;
            require_finite(out.value, "eval_phi");
            return out;
        }
        if (n_term < 0) {
            if (last_mag <= policy.rel_tol * std::max(std::abs(total), policy.abs_tol)) {
                if (++consecutive_small >= 2) break;
            } else {
                consecutive_small = 0;
            }
        }
        if (k + 1 >= policy.max_terms)
            fail(ErrorCode::MaxTermsExceeded, "phi series did not converge within max_terms");
        const double qk = std::pow(qv, static_cast<double>(k));
        cplx ratio = spec.z;
        for (const cplx& a : spec.numerator) ratio *= (1.0 - a * qk);
        ratio /= (1.0 - std::pow(qv, static_cast<double>(k + 1)));
        for (const cplx& b : spec.denominator) ratio /= (1.0 - b * qk);
        for (int e = 0; e < excess; ++e) ratio *= -qk;
        for (int e = 0; e < -excess; ++e) ratio /= -qk;
        term *= ratio;
        ++k;
    }

    SeriesValue out;
    out.value = total;
    out.terms_used = k + 1;
    // Geometric tail proxy from the last term; exact only for |z|-dominated
    // tails, reported as a diagnostic, not a guarantee.
    double zmag = std::abs(spec.z);
    out.tail_estimate = (zmag < 1.0) ? last_mag * zmag / (1.0 - zmag) : last_mag;
    out.terminated = false;
    require_finite(out.value, "eval_phi");
    return out;
}

// Very-well-poised r+1_W_r(a; b1, ..., b_{r-2}; q, z): the phi series with
// numerator (a, q sqrt a, -q sqrt a, b1, ...) and denominator
// (sqrt a, -sqrt a, aq/b1, ...).  sqrt a is the principal branch.
inline SeriesValue eval_W(cplx a, const std::vector<cplx>& bs, cplx z, QBase q,
                          const TruncationPolicy& policy = {}) {
    const double qv = q.value();
    const cplx ra = std::sqrt(a);  // principal branch: Re >= 0
    PhiSpec spec;
    spec.q = qv;
    spec.z = z;
    spec.numerator = {a, qv * ra, -qv * ra};
    spec.denominator = {ra, -ra};
    for (const cplx& b : bs) {
        spec.numerator.push_back(b);
        spec.denominator.push_back(a * qv / b);
    }
    return eval_phi(spec, policy);
}

// Jackson q-integral on the geometric lattice:
//   int_0^a f du   = a (1-q) sum_m f(a q^m) q^m,
//   int_a^b f du   = int_0^b - int_0^a.
// Endpoints (and hence lattice points) may be complex.
inline SeriesValue q_integral(const std::function<cplx(cplx)>& f, cplx a, cplx b,
                              QBase q, const TruncationPolicy& policy = {}) {
    policy.validate();
    const double qv = q.value();
    auto half = [&](cplx endpoint, long& used) -> cplx {
        if (endpoint == cplx{0.0, 0.0}) return {0.0, 0.0};
        cplx sum{0.0, 0.0};
        double qm = 1.0;
        int consecutive_small = 0;
        for (long m = 0; m < policy.max_terms; ++m) {
            cplx fv = f(endpoint * qm);
            if (!is_finite(fv))
                fail(ErrorCode::NonFiniteIntegrand, "q_integral integrand non-finite on lattice");
            cplx term = fv * qm;
            sum += term;
            ++used;
            if (std::abs(term) <= policy.rel_tol * std::max(std::abs(sum), policy.abs_tol)) {
                if (++consecutive_small >= 2) return endpoint * (1.0 - qv) * sum;
            } else {
                consecutive_small = 0;
            }
            qm *= qv;
        }
        fail(ErrorCode::MaxTermsExceeded, "q_integral lattice sum did not converge");
    };
    SeriesValue out;
    long used = 0;
    out.value = half(b, used) - half(a, used);
    out.terms_used = used;
    require_finite(out.value, "q_integral");
    return out;
}

}  // namespace qaw
