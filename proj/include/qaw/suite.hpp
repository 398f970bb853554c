#pragma once

// Check registry and runner.  Every identity in the library is registered
// here with a per-identity tolerance; the runner executes the registered
// checks at the standard resonance-free parameter point plus seeded random
// admissible samples and returns reports in deterministic order.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qaw/checks.hpp"
#include "qaw/identities.hpp"
#include "qaw/kernels.hpp"
#include "qaw/params.hpp"
#include "qaw/polynomials.hpp"
#include "qaw/quadrature.hpp"
#include "qaw/report.hpp"

namespace qaw {

// One blessed resonance-free point used by every suite; fixing it in one
// place keeps the suites comparable.
inline ParamSet standard_lambda(double q = 0.5) {
    return ParamSet({0.4, 0.3, 0.2, 0.1}, QBase(q));
}

inline MuParams standard_mu(const ParamSet& lambda) {
    return MuParams::from_gamma_delta(lambda, 0.25, 0.15);
}

inline MuParams standard_mu_unity(const ParamSet& lambda) {
    return MuParams::unity_from_gamma(lambda, 0.25);
}

struct SuiteConfig {
    unsigned long long seed = 42;
    long samples = 20;  // draws for the randomly sampled identities
    std::string only;   // run only registry ids containing this substring
    std::map<std::string, double> tol_overrides;
};

struct RegisteredCheck {
    std::string id;
    double tolerance;
    std::function<std::vector<CheckReport>(const SuiteConfig&, double)> run;
};

namespace detail {

// Portable uniform draw on [0, 1): fixed bit arithmetic rather than
// distribution objects so that a seed pins the byte-exact sample sequence.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// Per-check generator: independent of which other checks run, so a filter
// never shifts the samples of the surviving checks.
inline std::mt19937_64 check_rng(const SuiteConfig& cfg, const std::string& id) {
    std::seed_seq seq{cfg.seed, static_cast<unsigned long long>(std::hash<std::string>{}(id))};
    return std::mt19937_64(seq);
}

inline std::vector<std::pair<std::string, std::string>> grid_witness(
    const char* extra_key, const std::string& extra_val) {
    return {{"grid", "theta,phi in {0.7,1.5,2.4}"}, {extra_key, extra_val}};
}

}  // namespace detail

// Admissible random draw for the three-term split identity: parameters in
// a band that keeps every constituent series convergent (argument bound
// 0.85, base-to-lattice separation) per the sampling policy.
struct W65Sample {
    double a, b, c, d, q, t;
    cplx u, v;
};

inline W65Sample draw_w65_sample(std::mt19937_64& rng) {
    for (;;) {
        double vals[4];
        for (double& v : vals) v = detail::uniform(rng, 0.05, 0.65);
        std::sort(vals, vals + 4, std::greater<double>());
        const double a = vals[0], b = vals[2], c = vals[1], d = vals[3];
        const double q = detail::uniform(rng, 0.3, 0.7);
        const double t = detail::uniform(rng, 0.05, 0.5);
        const cplx u = std::polar(detail::uniform(rng, 0.7, 1.3),
                                  detail::uniform(rng, -0.4, 0.4));
        const cplx v = std::polar(detail::uniform(rng, 0.7, 1.3),
                                  detail::uniform(rng, -0.4, 0.4));
        const double eps = std::sqrt(a * b * c * d);
        if (!(std::abs(b * c * u * v * t / (q * q)) < 0.85 &&
              q * eps / (a * d) < 0.9 && a * d / t < 0.95))
            continue;
        // The three-term expansion develops large mutually cancelling terms
        // when ad/t drifts toward the q-power lattice.  The reciprocal of
        // (t/ad, ad/t; q)_inf tracks that amplification well (measured: a
        // bound of 100 keeps the split residual below ~1e-9 in doubles), so
        // reject draws whose predicted condition number exceeds it.
        const double adt = a * d / t;
        auto pinf = [q](double x) {
            double p = 1.0;
            while (std::abs(x) > 1e-14) {
                p *= (1.0 - x);
                x *= q;
            }
            return p;
        };
        const double cond = 1.0 / std::abs(pinf(adt) * pinf(1.0 / adt));
        if (cond > 100.0) continue;
        return {a, b, c, d, q, t, u, v};
    }
}

// Full registry.  Ordering here is the execution order; reports are
// re-sorted by identity_id before returning.
inline std::vector<RegisteredCheck> suite_registry() {
    std::vector<RegisteredCheck> reg;
    const TruncationPolicy policy{};

    reg.push_back({"w65_three_term_split", 1e-8,
                   [](const SuiteConfig& cfg, double tol) {
                       auto rng = detail::check_rng(cfg, "w65_three_term_split");
                       std::vector<CheckReport> out;
                       for (long i = 0; i < cfg.samples; ++i) {
                           W65Sample s = draw_w65_sample(rng);
                           ParamSet lam({s.a, s.b, s.c, s.d}, QBase(s.q));
                           out.push_back(check_6w5_split(s.u, s.v, s.t, lam, tol));
                       }
                       return out;
                   }});

    reg.push_back({"phi21_to_phi22_transform", 1e-9,
                   [](const SuiteConfig& cfg, double tol) {
                       auto rng = detail::check_rng(cfg, "phi21_to_phi22_transform");
                       std::vector<CheckReport> out;
                       for (long i = 0; i < cfg.samples; ++i) {
                           for (;;) {
                               const double q = detail::uniform(rng, 0.3, 0.7);
                               const double t = detail::uniform(rng, 0.05, 0.5);
                               const double b = detail::uniform(rng, 0.05, 0.7);
                               const double c = detail::uniform(rng, 0.05, 0.7);
                               const cplx u = std::polar(detail::uniform(rng, 0.7, 1.3),
                                                         detail::uniform(rng, -0.4, 0.4));
                               const cplx v = std::polar(detail::uniform(rng, 0.7, 1.3),
                                                         detail::uniform(rng, -0.4, 0.4));
                               if (std::abs(b * c * u * v * t / (q * q)) > 0.85) continue;
                               out.push_back(
                                   check_2phi1_2phi2(u, v, t, b, c, QBase(q), tol));
                               break;
                           }
                       }
                       return out;
                   }});

    reg.push_back({"check_orthogonality", 1e-8,
                   [policy](const SuiteConfig&, double tol) {
                       return check_orthogonality(standard_lambda(), 3, tol, {}, policy);
                   }});

    reg.push_back({"check_wavefunction_orthogonality", 1e-8,
                   [policy](const SuiteConfig&, double tol) {
                       return check_wavefunction_orthogonality(4, QBase(0.5), tol, {},
                                                               policy);
                   }});

    reg.push_back(
        {"kernel_explicit_vs_direct", 1e-7,
         [policy](const SuiteConfig&, double tol) {
             ParamSet lam = standard_lambda();
             KernelParams kp(lam, standard_mu(lam), cplx(0.3));
             const double x = std::cos(1.0), y = std::cos(1.3);
             cplx direct = kernel_direct(x, y, kp, 80, policy).value;
             KernelValue expl = kernel_explicit(x, y, kp, policy);
             const double err = std::abs(expl.value - direct) / std::abs(direct);
             return std::vector<CheckReport>{make_report(
                 "kernel_explicit_vs_direct", err, tol,
                 {{"theta", "1.0"},
                  {"phi", "1.3"},
                  {"t", "0.3"},
                  {"direct", detail::fmt_g(direct)},
                  {"explicit", detail::fmt_g(expl.value)}})};
         }});

    reg.push_back(
        {"kernel_unity_near_boundary", 1e-2,
         [policy](const SuiteConfig&, double tol) {
             ParamSet lam = standard_lambda();
             MuParams mu = standard_mu_unity(lam);
             KernelParams kp(lam, mu, cplx(0.999));
             const double x = std::cos(0.7), y = std::cos(1.9);
             cplx direct = kernel_direct(x, y, kp, 240, policy).value;
             cplx closed = kernel_unity(x, y, lam, mu, policy);
             const double err = std::abs(closed - direct) / std::abs(direct);
             return std::vector<CheckReport>{make_report(
                 "kernel_unity_near_boundary", err, tol,
                 {{"theta", "0.7"},
                  {"phi", "1.9"},
                  {"t", "0.999"},
                  {"direct", detail::fmt_g(direct)},
                  {"closed", detail::fmt_g(closed)}})};
         }});

    reg.push_back({"kernel_multiplication", 1e-6,
                   [policy](const SuiteConfig&, double tol) {
                       ParamSet lam = standard_lambda();
                       return std::vector<CheckReport>{check_multiplication(
                           lam, standard_mu(lam), lam, cplx(0.35), cplx(0.35),
                           std::cos(1.0), std::cos(1.8), tol, {}, 80, policy)};
                   }});

    reg.push_back({"kernel_projection", 1e-7,
                   [policy](const SuiteConfig&, double tol) {
                       ParamSet lam = standard_lambda();
                       MuParams mu = standard_mu(lam);
                       std::vector<CheckReport> out;
                       for (long m = 0; m <= 4; ++m)
                           out.push_back(check_projection(lam, mu, cplx(0.4), m,
                                                          std::cos(1.2), tol, {}, 80,
                                                          policy));
                       return out;
                   }});

    reg.push_back(
        {"kernel_symmetry", 1e-9,
         [policy](const SuiteConfig&, double tol) {
             ParamSet lam = standard_lambda();
             MuParams mu(lam, lam.values());
             KernelParams kp(lam, mu, cplx(0.3));
             const double x = std::cos(0.9), y = std::cos(2.0);
             cplx k1 = kernel_direct(x, y, kp, 80, policy).value;
             cplx k2 = kernel_direct(y, x, kp, 80, policy).value;
             const double err = std::abs(k1 - k2) / std::abs(k1);
             return std::vector<CheckReport>{make_report(
                 "kernel_symmetry", err, tol,
                 {{"theta", "0.9"}, {"phi", "2.0"}, {"t", "0.3"}})};
         }});

    reg.push_back(
        {"aw_poly_dual_evaluation", 1e-9,
         [policy](const SuiteConfig&, double tol) {
             ParamSet lam = standard_lambda();
             std::vector<CheckReport> out;
             for (long n = 4; n <= kAwSeriesMaxDegree; ++n) {
                 const double x = std::cos(1.1);
                 const double via_series =
                     detail::aw_poly_series(n, x, lam.a(), lam.b(), lam.c(), lam.d(),
                                            lam.qv(), policy).real();
                 const double via_recur = detail::aw_poly_recurrence(
                     n, x, lam.a(), lam.b(), lam.c(), lam.d(), lam.qv());
                 const double err = std::abs(via_series - via_recur) /
                                    std::max(1.0, std::abs(via_recur));
                 out.push_back(make_report(
                     "aw_poly_dual_evaluation[n=" + std::to_string(n) + "]", err, tol,
                     {{"n", std::to_string(n)},
                      {"series", detail::fmt_g(via_series)},
                      {"recurrence", detail::fmt_g(via_recur)}}));
             }
             return out;
         }});

    reg.push_back(
        {"aw_qintegral_representation", 1e-9,
         [policy](const SuiteConfig&, double tol) {
             ParamSet lam = standard_lambda();
             std::vector<CheckReport> out;
             for (long n = 0; n <= 4; ++n) {
                 const double x = std::cos(0.9);
                 cplx via_qint = aw_poly_qint(n, x, lam, policy);
                 cplx via_series = aw_poly(n, x, lam, policy);
                 const double err =
                     std::abs(via_qint - via_series) / std::abs(via_series);
                 out.push_back(make_report(
                     "aw_qintegral_representation[n=" + std::to_string(n) + "]", err,
                     tol,
                     {{"n", std::to_string(n)}, {"theta", "0.9"}}));
             }
             return out;
         }});

    reg.push_back(
        {"mehler_series_vs_closed", 1e-10,
         [](const SuiteConfig&, double tol) {
             const double closed = mehler_kernel(0.7, -0.3, 0.5);
             const double series = mehler_series(0.7, -0.3, 0.5, 50);
             const double err = std::abs(closed - series);
             return std::vector<CheckReport>{make_report(
                 "mehler_series_vs_closed", err, tol,
                 {{"x", "0.7"}, {"y", "-0.3"}, {"t", "0.5"}, {"N", "50"}})};
         }});

    reg.push_back(
        {"qhermite_poisson_series_vs_closed", 1e-10,
         [policy](const SuiteConfig&, double tol) {
             QBase qb(0.5);
             const double x = std::cos(1.0), y = std::cos(0.7);
             const double closed = qhermite_poisson(x, y, 0.4, qb, policy);
             const double series = qhermite_poisson_series(x, y, 0.4, qb, 60);
             const double err = std::abs(closed - series) / std::abs(series);
             return std::vector<CheckReport>{make_report(
                 "qhermite_poisson_series_vs_closed", err, tol,
                 {{"theta", "1.0"}, {"phi", "0.7"}, {"r", "0.4"}, {"N", "60"}})};
         }});

    reg.push_back(
        {"qhermite_delta_normalization", 1e-8,
         [policy](const SuiteConfig&, double tol) {
             return std::vector<CheckReport>{check_delta_limit(
                 0.99, [](double) { return 1.0; }, std::cos(1.1), tol, QBase(0.5), {},
                 policy)};
         }});

    reg.push_back(
        {"qhermite_delta_limit", 0.05,
         [policy](const SuiteConfig&, double tol) {
             return std::vector<CheckReport>{check_delta_limit(
                 0.995, [](double yv) { return yv * yv; }, 0.3, tol, QBase(0.5), {},
                 policy)};
         }});

    reg.push_back({"qhermite_limit_form", 1e-12,
                   [](const SuiteConfig&, double tol) {
                       std::vector<CheckReport> out;
                       for (long n = 0; n <= 10; ++n)
                           out.push_back(check_qhermite_limit(n, 1.1, QBase(0.5), tol));
                       return out;
                   }});

    // Degenerate-family closed forms against their direct bilinear sums at
    // the standard point (theta, phi) = (0.7, 1.9), t = 0.3.
    reg.push_back(
        {"dual_qhahn_vs_direct", 1e-7,
         [policy](const SuiteConfig&, double tol) {
             const double q = 0.5, a = 0.4, b = 0.3, c = 0.2, ga = 0.25;
             const double al = a * c / ga, be = 0.35;
             const double x = std::cos(0.7), y = std::cos(1.9);
             QBase qb(q);
             cplx direct = dual_qhahn_direct(x, y, a, b, c, al, be, ga, cplx(0.3), qb);
             cplx closed =
                 dual_qhahn_kernel(x, y, a, b, c, al, be, ga, cplx(0.3), qb, policy);
             const double err = std::abs(closed - direct) / std::abs(direct);
             return std::vector<CheckReport>{make_report(
                 "dual_qhahn_vs_direct", err, tol,
                 {{"params", "a=0.4 b=0.3 c=0.2 alpha=0.32 beta=0.35 gamma=0.25"},
                  {"t", "0.3"},
                  {"direct", detail::fmt_g(direct)},
                  {"closed", detail::fmt_g(closed)}})};
         }});

    reg.push_back(
        {"dual_qhahn_unity_near_boundary", 1e-2,
         [policy](const SuiteConfig&, double tol) {
             const double q = 0.5, a = 0.4, b = 0.3, c = 0.2, ga = 0.25;
             const double al = a * c / ga, be = b * c / ga;
             const double x = std::cos(0.7), y = std::cos(1.9);
             QBase qb(q);
             cplx direct =
                 dual_qhahn_direct(x, y, a, b, c, al, be, ga, cplx(0.999), qb, 400);
             cplx closed =
                 dual_qhahn_kernel_unity(x, y, a, b, c, al, be, ga, qb, policy);
             const double err = std::abs(closed - direct) / std::abs(direct);
             return std::vector<CheckReport>{make_report(
                 "dual_qhahn_unity_near_boundary", err, tol,
                 {{"t", "0.999"},
                  {"direct", detail::fmt_g(direct)},
                  {"closed", detail::fmt_g(closed)}})};
         }});

    reg.push_back(
        {"asc_vs_direct", 1e-7,
         [policy](const SuiteConfig&, double tol) {
             const double a = 0.4, b = 0.3, al = 0.32, be = a * b / al;
             const double x = std::cos(0.7), y = std::cos(1.9);
             QBase qb(0.5);
             cplx direct = asc_direct(x, y, a, b, al, be, cplx(0.3), qb);
             cplx closed = asc_kernel(x, y, a, b, al, be, cplx(0.3), qb, policy);
             const double err = std::abs(closed - direct) / std::abs(direct);
             return std::vector<CheckReport>{make_report(
                 "asc_vs_direct", err, tol,
                 {{"params", "a=0.4 b=0.3 alpha=0.32 beta=0.375"},
                  {"t", "0.3"},
                  {"direct", detail::fmt_g(direct)},
                  {"closed", detail::fmt_g(closed)}})};
         }});

    reg.push_back(
        {"asc_unity_near_boundary", 1e-2,
         [policy](const SuiteConfig&, double tol) {
             const double a = 0.4, b = 0.3, al = 0.32, be = a * b / al;
             const double x = std::cos(0.7), y = std::cos(1.9);
             QBase qb(0.5);
             cplx direct = asc_direct(x, y, a, b, al, be, cplx(0.999), qb, 400);
             cplx closed = asc_kernel_unity(x, y, a, b, al, be, qb, policy);
             const double err = std::abs(closed - direct) / std::abs(direct);
             return std::vector<CheckReport>{make_report(
                 "asc_unity_near_boundary", err, tol,
                 {{"t", "0.999"},
                  {"direct", detail::fmt_g(direct)},
                  {"closed", detail::fmt_g(closed)}})};
         }});

    reg.push_back(
        {"asc_norm_vs_direct", 1e-7,
         [policy](const SuiteConfig&, double tol) {
             const double a = 0.4, b = 0.3, al = 0.32, be = a * b / al;
             const double x = std::cos(0.7), y = std::cos(1.9);
             QBase qb(0.5);
             cplx direct = asc_norm_direct(x, y, a, b, al, be, cplx(0.3), qb);
             cplx closed = asc_kernel_norm_a(x, y, a, b, al, be, cplx(0.3), qb, policy);
             const double err = std::abs(closed - direct) / std::abs(direct);
             return std::vector<CheckReport>{make_report(
                 "asc_norm_vs_direct", err, tol,
                 {{"t", "0.3"},
                  {"direct", detail::fmt_g(direct)},
                  {"closed", detail::fmt_g(closed)}})};
         }});

    reg.push_back(
        {"asc_norm_forms_agree", 1e-9,
         [policy](const SuiteConfig&, double tol) {
             const double x = std::cos(1.1), y = std::cos(0.6);
             QBase qb(0.4);
             cplx ka = asc_kernel_norm_a(x, y, 0.5, 0.3, 0.3, 0.5, cplx(0.35), qb,
                                         policy);
             cplx kb = asc_kernel_norm_b(x, y, 0.5, 0.3, 0.3, 0.5, cplx(0.35), qb,
                                         policy);
             const double err = std::abs(ka - kb) / std::abs(ka);
             return std::vector<CheckReport>{make_report(
                 "asc_norm_forms_agree", err, tol,
                 {{"q", "0.4"},
                  {"params", "a=0.5 b=0.3 alpha=0.3 beta=0.5"},
                  {"t", "0.35"},
                  {"theta", "1.1"},
                  {"phi", "0.6"},
                  {"form_a", detail::fmt_g(ka)},
                  {"form_b", detail::fmt_g(kb)}})};
         }});

    reg.push_back(
        {"bigqh_vs_direct", 1e-7,
         [policy](const SuiteConfig&, double tol) {
             const double x = std::cos(0.7), y = std::cos(1.9);
             QBase qb(0.5);
             cplx direct = bigqh_direct(x, y, 0.4, 0.3, cplx(0.3), qb);
             cplx closed = bigqh_kernel(x, y, 0.4, 0.3, cplx(0.3), qb, policy);
             const double err = std::abs(closed - direct) / std::abs(direct);
             return std::vector<CheckReport>{make_report(
                 "bigqh_vs_direct", err, tol,
                 {{"a", "0.4"}, {"alpha", "0.3"}, {"t", "0.3"},
                  {"direct", detail::fmt_g(direct)},
                  {"closed", detail::fmt_g(closed)}})};
         }});

    reg.push_back(
        {"bigqh_norm_vs_direct", 1e-7,
         [policy](const SuiteConfig&, double tol) {
             const double x = std::cos(0.7), y = std::cos(1.9);
             QBase qb(0.5);
             cplx direct = bigqh_norm_direct(x, y, 0.4, 0.3, cplx(0.3), qb);
             cplx closed = bigqh_kernel_norm(x, y, 0.4, 0.3, cplx(0.3), qb, policy);
             const double err = std::abs(closed - direct) / std::abs(direct);
             return std::vector<CheckReport>{make_report(
                 "bigqh_norm_vs_direct", err, tol,
                 {{"a", "0.4"}, {"alpha", "0.3"}, {"t", "0.3"},
                  {"direct", detail::fmt_g(direct)},
                  {"closed", detail::fmt_g(closed)}})};
         }});

    reg.push_back(
        {"qbessel_vs_direct", 1e-7,
         [policy](const SuiteConfig&, double tol) {
             const double x = std::cos(0.7), y = std::cos(1.9);
             QBase qb(0.5);
             cplx direct = qbessel_direct(x, y, 0.3, cplx(0.3), qb);
             cplx closed = qhermite_qbessel_kernel(x, y, 0.3, cplx(0.3), qb, policy);
             const double err = std::abs(closed - direct) / std::abs(direct);
             return std::vector<CheckReport>{make_report(
                 "qbessel_vs_direct", err, tol,
                 {{"alpha", "0.3"}, {"t", "0.3"},
                  {"direct", detail::fmt_g(direct)},
                  {"closed", detail::fmt_g(closed)}})};
         }});

    reg.push_back(
        {"qbessel_reduction", 1e-11,
         [policy](const SuiteConfig&, double tol) {
             const double x = std::cos(0.7), y = std::cos(1.9);
             QBase qb(0.5);
             cplx at_zero = bigqh_kernel_norm(x, y, 0.0, 0.3, cplx(0.3), qb, policy);
             cplx reduced = qhermite_qbessel_kernel(x, y, 0.3, cplx(0.3), qb, policy);
             const double err = std::abs(at_zero - reduced) / std::abs(reduced);
             return std::vector<CheckReport>{make_report(
                 "qbessel_reduction", err, tol,
                 {{"alpha", "0.3"}, {"t", "0.3"},
                  {"bigqh_norm(a=0)", detail::fmt_g(at_zero)},
                  {"qbessel", detail::fmt_g(reduced)}})};
         }});

    return reg;
}

// Executes the registered checks (optionally filtered), resolves per-check
// tolerance overrides, and returns reports sorted by identity_id.
inline std::vector<CheckReport> run_suite(const SuiteConfig& cfg = {}) {
    std::vector<CheckReport> out;
    for (const RegisteredCheck& reg : suite_registry()) {
        if (!cfg.only.empty() && reg.id.find(cfg.only) == std::string::npos) continue;
        double tol = reg.tolerance;
        auto it = cfg.tol_overrides.find(reg.id);
        if (it != cfg.tol_overrides.end()) tol = it->second;
        std::vector<CheckReport> reports = reg.run(cfg, tol);
        for (CheckReport& r : reports) out.push_back(std::move(r));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const CheckReport& a, const CheckReport& b) {
                         return a.identity_id < b.identity_id;
                     });
    return out;
}

}  // namespace qaw
