#pragma once

// Poisson-type kernels: the brute-force bilinear oracle, the explicit
// three-part closed formula, the t -> 1 product form, the degenerate-family
// kernels (continuous dual q-Hahn, Al-Salam-Chihara, big q-Hermite,
// q-Hermite/q-Bessel), and the classical Mehler kernel.
//
// Every closed form here has a companion *_direct oracle that evaluates the
// defining bilinear series term by term; the test suite compares the two.
//
// Overflow note: the bilinear sums pair a coefficient that grows like
// a^{-2n} with polynomial values that decay like a^n, so naive evaluation
// overflows near n ~ 380 even though each full term is O(1).  The direct
// sums therefore iterate the scaled quantities X_n = p_n(x)/a^n and fold
// the a^n factors into the coefficient ratio, which keeps every
// intermediate bounded.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qaw/detail/ratio_sum.hpp"
#include "qaw/params.hpp"
#include "qaw/polynomials.hpp"
#include "qaw/qpochhammer.hpp"
#include "qaw/series.hpp"

namespace qaw {

// Value of a multi-part kernel formula.  When parts are present the value
// is their exact sum; part_terms records outer-sum lengths per part.
struct KernelValue {
    cplx value{0.0, 0.0};
    bool has_parts = false;
    std::array<cplx, 3> parts{};
    std::array<long, 3> part_terms{};
};

namespace detail {

inline void pole_guard(cplx arg, double q, const char* label) {
    if (on_inverse_q_lattice(arg, q, 1e-10))
        fail(ErrorCode::PoleGuardTripped,
             std::string("denominator factor vanishes: ") + label);
}

inline void require_product(double got, double want, const char* relation) {
    const double scale = std::max({std::abs(got), std::abs(want), 1e-30});
    if (std::abs(got - want) > 1e-12 * scale)
        fail(ErrorCode::ConstraintViolated, relation);
}

// Iterates X_n = p_n(x; a,b,c,d) / a^n by the three-term recurrence in
// scaled form; X_n stays O(1) where p_n itself can overflow/underflow.
class ScaledAwSequence {
  public:
    ScaledAwSequence(double x, double a, double b, double c, double d, double q)
        : x_(x), a_(a), b_(b), c_(c), d_(d), q_(q) {
        if (a == 0.0)
            fail(ErrorCode::InvalidParameter,
                 "bilinear sum requires a nonzero leading parameter");
    }

    double current() const noexcept { return xc_; }

    void advance() {
        if (n_ == 0) {
            xm_ = xc_;
            xc_ = aw_poly_series(1, x_, a_, b_, c_, d_, q_).real() / a_;
        } else {
            RecurAC rc = aw_recurrence_coeffs(n_, a_, b_, c_, d_, q_);
            const double bn = a_ + 1.0 / a_ - rc.A - rc.C;
            const double next =
                ((2.0 * x_ - bn) * xc_ - (rc.C / a_) * xm_) / (rc.A * a_);
            xm_ = xc_;
            xc_ = next;
        }
        ++n_;
    }

  private:
    double x_, a_, b_, c_, d_, q_;
    long n_ = 0;
    double xm_ = 0.0;
    double xc_ = 1.0;
};

}  // namespace detail

// Bilinear oracle: (h_0)^{-1} sum_{n<N} h_n t^n p_n(x; lambda) p_n(y; mu).
// This is the reference against which every closed form is checked.
inline SeriesValue kernel_direct(double x, double y, const KernelParams& kp,
                                 long N, const TruncationPolicy& policy = {}) {
    if (N < 1) fail(ErrorCode::InvalidParameter, "kernel_direct requires N >= 1");
    const double a = kp.lambda.a(), b = kp.lambda.b(), c = kp.lambda.c(),
                 d = kp.lambda.d();
    const ParamSet& ms = kp.mu.set();
    const double al = ms.a(), be = ms.b(), ga = ms.c(), de = ms.d();
    const double q = kp.lambda.qv();
    if (al == 0.0)
        fail(ErrorCode::InvalidParameter,
             "bilinear sum requires a nonzero leading mu parameter");
    detail::ScaledAwSequence X(x, a, b, c, d, q);
    detail::ScaledAwSequence Y(y, al, be, ga, de, q);
    const double abcd = a * b * c * d;
    cplx g{1.0, 0.0};  // h_n t^n (a al)^n / h_0
    cplx sum{0.0, 0.0};
    cplx last{0.0, 0.0};
    long used = 0;
    int consecutive_small = 0;
    for (long n = 0; n < N; ++n) {
        last = g * X.current() * Y.current();
        sum += last;
        ++used;
        if (std::abs(last) <= policy.rel_tol * std::max(std::abs(sum), 1e-300)) {
            if (++consecutive_small >= 2) break;
        } else {
            consecutive_small = 0;
        }
        const double qn = std::pow(q, static_cast<double>(n));
        g *= (1 - abcd * std::pow(q, static_cast<double>(2 * n + 1))) /
             (1 - abcd * std::pow(q, static_cast<double>(2 * n - 1))) *
             (1 - abcd * std::pow(q, static_cast<double>(n - 1))) * (1 - a * b * qn) *
             (1 - a * c * qn) * (1 - a * d * qn) /
             ((1 - std::pow(q, static_cast<double>(n + 1))) * (1 - c * d * qn) *
              (1 - b * d * qn) * (1 - b * c * qn)) *
             kp.t * (al / a);
        X.advance();
        Y.advance();
    }
    SeriesValue out;
    out.value = sum;
    out.terms_used = used;
    const double at = std::abs(kp.t);
    out.tail_estimate = at < 1.0 ? std::abs(last) * at / (1.0 - at) : std::abs(last);
    require_finite(out.value, "kernel_direct");
    return out;
}

namespace detail {

// Evaluator for the explicit three-part kernel formula.  The first two
// parts share a terminating m-sum whose very-well-poised core depends only
// on (l, m), so both are memoized across the outer sums.
class ExplicitKernel {
  public:
    ExplicitKernel(double x, double y, const KernelParams& kp,
                   const TruncationPolicy& policy)
        : policy_(policy),
          a_(kp.lambda.a()),
          b_(kp.lambda.b()),
          c_(kp.lambda.c()),
          d_(kp.lambda.d()),
          al_(kp.mu.alpha()),
          be_(kp.mu.beta()),
          ga_(kp.mu.gamma()),
          de_(kp.mu.delta()),
          q_(kp.lambda.qv()),
          qb_(kp.lambda.q()),
          sq_(std::sqrt(kp.lambda.qv())),
          t_(kp.t),
          eps_(kp.epsilon),
          th_(std::acos(x)),
          ph_(std::acos(y)),
          eip_(std::polar(1.0, std::acos(y))) {}

    KernelValue run() {
        KernelValue out;
        out.has_parts = true;
        if (t_ == cplx{0.0, 0.0}) {
            // Only the n = 0 term of the bilinear sum survives; the first
            // part carries it and the others vanish.
            out.parts = {cplx{1.0, 0.0}, cplx{0.0, 0.0}, cplx{0.0, 0.0}};
            out.value = {1.0, 0.0};
            return out;
        }
        std::tie(out.parts[0], out.parts[1]) = parts12(th_);
        out.part_terms[0] = terms1_;
        out.part_terms[1] = terms2_;
        // The third part is stated for theta and added again with theta
        // negated (the "evaluate, reflect, add" construction).
        out.parts[2] = part3_half(th_) + part3_half(-th_);
        out.part_terms[2] = terms3_;
        out.value = out.parts[0] + out.parts[1] + out.parts[2];
        require_finite(out.value, "kernel_explicit");
        return out;
    }

  private:
    const TruncationPolicy& policy_;
    double a_, b_, c_, d_, al_, be_, ga_, de_, q_;
    QBase qb_;
    double sq_;
    cplx t_, eps_;
    double th_, ph_;
    cplx eip_;
    std::map<std::pair<long, long>, cplx> w_cache_;
    std::map<long, cplx> g_cache_;
    long terms1_ = 0, terms2_ = 0, terms3_ = 0;

    double qp(long e) const { return std::pow(q_, static_cast<double>(e)); }

    cplx P(std::initializer_list<cplx> args) const {
        return qpoch_multi(args, qb_, kInfinity, policy_);
    }

    void guard(std::initializer_list<std::pair<const char*, cplx>> args) const {
        for (const auto& [label, v] : args) pole_guard(v, q_, label);
    }

    // Very-well-poised core shared by parts 1 and 2; independent of the
    // outer index k.
    cplx W87(long l, long m, cplx eit, cplx eit_) {
        auto key = std::make_pair(l, m);
        auto it = w_cache_.find(key);
        if (it != w_cache_.end()) return it->second;
        cplx v = eval_W(al_ * be_ * c_ * d_ / b_ * qp(l - 1) * eit_,
                        {c_ * eit_, d_ * qp(m) * eit_,
                         (al_ * be_ / b_) * qp(l - m) * eit_, c_ * d_ * qp(l),
                         cplx(al_ * be_ / (a_ * b_))},
                        a_ * eit, qb_, policy_).value;
        w_cache_.emplace(key, v);
        return v;
    }

    // Terminating m-sum of length l+1; cached per l.
    cplx G(long l, cplx eit, cplx eit_) {
        auto it = g_cache_.find(l);
        if (it != g_cache_.end()) return it->second;
        const cplx eip = eip_, eip_inv = 1.0 / eip_;
        RatioSum msum;
        msum.nums = {de_ / al_ * qp(-l),     qp(1 - l) / (al_ * be_),
                     b_ * qp(1 - l) / (al_ * be_ * c_), cplx(qp(-l)),
                     de_ * eip,              de_ * eip_inv,
                     d_ * eit,               d_ * eit_};
        msum.dens = {cplx(q_),               cplx(be_ * de_),
                     cplx(c_ * d_),          cplx(q_ * de_ / al_),
                     qp(1 - l) * eip_inv / al_, qp(1 - l) * eip / al_,
                     b_ * qp(1 - l) * eit_ / (al_ * be_),
                     b_ * qp(1 - l) * eit / (al_ * be_)};
        msum.z = b_ * c_ * q_ / (al_ * de_);
        msum.q = q_;
        const cplx vw_den = 1.0 - (de_ / al_) * qp(-l);
        cplx v = msum.run(
            [&](long m) {
                return (1.0 - (de_ / al_) * qp(2 * m - l)) / vw_den *
                       W87(l, m, eit, eit_);
            },
            l + 1, 1e-15, l);
        g_cache_.emplace(l, v);
        return v;
    }

    std::pair<cplx, cplx> parts12(double th) {
        const cplx eit = std::polar(1.0, th);
        const cplx eit_ = 1.0 / eit;
        const cplx eip = eip_, eip_inv = 1.0 / eip_;
        const cplx abb = al_ * be_ / b_;

        guard({{"ac", cplx(a_ * c_)},
               {"ad", cplx(a_ * d_)},
               {"alpha beta", cplx(al_ * be_)},
               {"alpha delta", cplx(al_ * de_)},
               {"alpha/delta", cplx(al_ / de_)},
               {"q t^2", q_ * t_ * t_},
               {"alpha beta e^{i th}/b", abb * eit},
               {"alpha beta c d e^{-i th}/b", abb * c_ * d_ * eit_},
               {"-t/eps", -t_ / eps_},
               {"-eps", cplx(-eps_)},
               {"bc", cplx(b_ * c_)},
               {"t/(ad)", t_ / (a_ * d_)},
               {"-eps/t", -eps_ / t_}});

        // Part 1: outer k-sum over a terminating l-sum over the cached G.
        const cplx pref1 =
            (1.0 - t_ * t_) *
            P({-q_ * t_ * eps_, abb * c_, abb * d_, a_ * eit, eps_ * eps_ * eit_ / b_}) /
            P({-t_ / eps_, cplx(a_ * c_), cplx(a_ * d_), abb * eit,
               abb * c_ * d_ * eit_});
        RatioSum outer1;
        outer1.nums = {eps_, eps_ * sq_, -eps_ * sq_, -eps_ / (a_ * d_)};
        outer1.dens = {cplx(q_), cplx(b_ * c_), -q_ * t_ * eps_, -q_ * eps_ / t_};
        outer1.z = q_;
        outer1.q = q_;
        cplx K1 = pref1 * outer1.run(
                              [&](long k) {
                                  RatioSum lsum;
                                  lsum.nums = {cplx(qp(-k)), -eps_, cplx(a_ * d_),
                                               al_ * eip, al_ * eip_inv, abb * eit,
                                               abb * eit_, abb * c_ * d_ * eit_};
                                  lsum.dens = {cplx(q_), -a_ * d_ * qp(1 - k) / eps_,
                                               cplx(al_ * be_), cplx(al_ * de_),
                                               cplx(al_ / de_), abb * d_, abb * c_,
                                               eps_ * eps_ * eit_ / b_};
                                  lsum.z = q_;
                                  lsum.q = q_;
                                  return lsum.run(
                                      [&](long l) { return G(l, eit, eit_); },
                                      k + 1, 1e-15, k);
                              },
                              4000, 1e-15, -1, &terms1_);

        // Part 2: same l-sum core with the k-dependence moved into the
        // first numerator/denominator pair.
        const cplx pref2 =
            P({eps_ * eps_, -eps_ / (a_ * d_), t_, -t_ * eps_ / (a_ * d_), abb * c_,
               abb * d_, a_ * eit, eps_ * eps_ * eit_ / b_}) /
            P({-eps_, cplx(b_ * c_), t_ / (a_ * d_), -eps_ / t_, cplx(a_ * c_),
               cplx(a_ * d_), abb * eit, abb * c_ * d_ * eit_});
        RatioSum outer2;
        outer2.nums = {-t_, t_ * sq_, -t_ * sq_, t_ / (a_ * d_)};
        outer2.dens = {cplx(q_), q_ * t_ * t_, -t_ * eps_ / (a_ * d_), -q_ * t_ / eps_};
        outer2.z = q_;
        outer2.q = q_;
        cplx K2 = pref2 * outer2.run(
                              [&](long k) {
                                  RatioSum lsum;
                                  lsum.nums = {-eps_ * qp(-k) / t_, -eps_,
                                               cplx(a_ * d_), al_ * eip, al_ * eip_inv,
                                               abb * eit, abb * eit_,
                                               abb * c_ * d_ * eit_};
                                  lsum.dens = {cplx(q_), a_ * d_ * qp(1 - k) / t_,
                                               cplx(al_ * be_), cplx(al_ * de_),
                                               cplx(al_ / de_), abb * c_, abb * d_,
                                               eps_ * eps_ * eit_ / b_};
                                  lsum.z = q_;
                                  lsum.q = q_;
                                  return lsum.run(
                                      [&](long l) { return G(l, eit, eit_); }, 800);
                              },
                              4000, 1e-15, -1, &terms2_);
        return {K1, K2};
    }

    cplx part3_half(double th) {
        const cplx eit = std::polar(1.0, th);
        const cplx eit_ = 1.0 / eit;
        const cplx eip = eip_, eip_inv = 1.0 / eip_;
        const cplx abb = al_ * be_ / b_;
        const cplx ctg = c_ * t_ / ga_;   // c t / gamma
        const cplx bctg = b_ * ctg;
        const cplx cdtg = ctg * de_;

        guard({{"ad/t", a_ * d_ / t_},
               {"bc delta t/gamma", bctg * de_},
               {"e^{-2i th}", eit_ * eit_},
               {"c t e^{i th} e^{i ph}/gamma", ctg * eit * eip},
               {"c t e^{i th} e^{-i ph}/gamma", ctg * eit * eip_inv}});

        const cplx pref =
            P({eps_ * eps_, a_ * eit_, c_ * eit_, d_ * eit_, abb * eit}) /
            P({cplx(a_ * c_), cplx(b_ * c_), cplx(c_ * d_), cplx(al_ * be_),
               a_ * d_ / t_, bctg * de_}) *
            P({c_ * t_ * eit, cdtg * eit, bctg * eip, bctg * eip_inv}) /
            P({eit_ * eit_, ctg * eit * eip, ctg * eit * eip_inv});

        RatioSum outer;
        outer.nums = {t_, -eps_ / (a_ * d_), -t_ * eps_ / (a_ * d_), bctg * de_,
                      ctg * eit * eip, ctg * eit * eip_inv};
        outer.dens = {cplx(q_), q_ * t_ / (a_ * d_), c_ * t_ * eit, cdtg * eit,
                      bctg * eip, bctg * eip_inv};
        outer.z = q_;
        outer.q = q_;
        return pref * outer.run(
                          [&](long k) {
                              PhiSpec i43;
                              i43.numerator = {cplx(qp(-k)), -t_, t_ * sq_, -t_ * sq_};
                              i43.denominator = {q_ * t_ * t_, -t_ * eps_ / (a_ * d_),
                                                 -a_ * d_ * qp(1 - k) / eps_};
                              i43.z = q_;
                              i43.q = q_;
                              const cplx phi_val = eval_phi(i43, policy_).value;
                              RatioSum lsum;
                              lsum.nums = {ctg * qp(k) * eit * eip,
                                           ctg * qp(k) * eit * eip_inv, a_ * eit,
                                           c_ * eit, d_ * eit};
                              lsum.dens = {c_ * t_ * qp(k) * eit, cdtg * qp(k) * eit,
                                           abb * eit, q_ * eit * eit, cplx(q_)};
                              lsum.z = q_;
                              lsum.q = q_;
                              cplx lval = lsum.run(
                                  [&](long l) {
                                      return eval_W(
                                                 bctg * de_ * qp(k - 1),
                                                 {(b_ * c_ / (be_ * ga_)) * t_ * qp(k),
                                                  (b_ * c_ / (al_ * ga_)) * t_ * qp(k),
                                                  b_ * qp(-l) * eit_, de_ * eip,
                                                  de_ * eip_inv},
                                                 abb * qp(l) * eit, qb_, policy_).value;
                                  },
                                  800);
                              return phi_val * lval;
                          },
                          4000, 1e-15, -1, &terms3_);
    }
};

}  // namespace detail

// Explicit three-part closed formula for the kernel; the total (not the
// individual parts) matches kernel_direct.
inline KernelValue kernel_explicit(double x, double y, const KernelParams& kp,
                                   const TruncationPolicy& policy = {}) {
    detail::ExplicitKernel eval(x, y, kp, policy);
    return eval.run();
}

// Closed product form of the kernel at t = 1 under the additional
// constraint beta gamma = b c with |beta| < |b|.
inline cplx kernel_unity(double x, double y, const ParamSet& lambda,
                         const MuParams& mu, const TruncationPolicy& policy = {}) {
    if (!mu.unity_ready())
        fail(ErrorCode::ConstraintViolated,
             "kernel_unity requires beta*gamma = b*c and |beta| < |b|");
    const double a = lambda.a(), b = lambda.b(), c = lambda.c(), d = lambda.d();
    const double al = mu.alpha(), be = mu.beta();
    const double q = lambda.qv();
    QBase qb = lambda.q();
    const double r = be / b;
    const cplx eit = std::polar(1.0, std::acos(x));
    const cplx eip = std::polar(1.0, std::acos(y));
    auto P = [&](std::initializer_list<cplx> args) {
        return qpoch_multi(args, qb, kInfinity, policy);
    };
    for (double denom_arg :
         {al * be, a * c, a * d, b * c, b * d, c * d})
        detail::pole_guard(cplx(denom_arg), q, "pairwise parameter product");
    return P({cplx(a * b * c * d)}) /
           P({cplx(al * be), cplx(a * c), cplx(a * d), cplx(b * c), cplx(b * d),
              cplx(c * d)}) *
           P({al * eip, al / eip, be * eip, be / eip, c * eit, c / eit,
              d * eit, d / eit, cplx(r * r)}) /
           P({r * eit * eip, r * eit / eip, r * eip / eit, r / (eit * eip)});
}

// ---------------------------------------------------------------------------
// Classical Mehler kernel.

// Closed form: [pi (1-t^2)]^{-1/2} exp[(4xyt - (x^2+y^2)(1+t^2)) / (2(1-t^2))].
inline double mehler_kernel(double x, double y, double t) {
    if (!(std::abs(t) < 1.0))
        fail(ErrorCode::InvalidParameter, "mehler_kernel requires |t| < 1");
    return std::exp((4.0 * x * y * t - (x * x + y * y) * (1.0 + t * t)) /
                    (2.0 * (1.0 - t * t))) /
           std::sqrt(M_PI * (1.0 - t * t));
}

// Series oracle: sum_{n<=N} t^n Psi_n(x) Psi_n(y) over the normalized
// oscillator wavefunctions.
inline double mehler_series(double x, double y, double t, long N) {
    if (!(std::abs(t) < 1.0))
        fail(ErrorCode::InvalidParameter, "mehler_series requires |t| < 1");
    if (N < 0) fail(ErrorCode::InvalidParameter, "mehler_series requires N >= 0");
    double px_m = hermite_psi(0, x), py_m = hermite_psi(0, y);
    double sum = px_m * py_m;
    if (N == 0) return sum;
    double px = x * std::sqrt(2.0) * px_m, py = y * std::sqrt(2.0) * py_m;
    double tn = t;
    sum += tn * px * py;
    for (long n = 1; n < N; ++n) {
        const double step = std::sqrt(2.0 / (n + 1)), back = std::sqrt(n / (n + 1.0));
        const double nx = x * step * px - back * px_m;
        const double ny = y * step * py - back * py_m;
        px_m = px; px = nx;
        py_m = py; py = ny;
        tn *= t;
        sum += tn * px * py;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Continuous q-Hermite Poisson kernel and its delta-approximation form.

// Closed product form of sum_n H_n(x|q) H_n(y|q) r^n / (q;q)_n.
inline double qhermite_poisson(double x, double y, double r, QBase qb,
                               const TruncationPolicy& policy = {}) {
    if (!(std::abs(r) < 1.0))
        fail(ErrorCode::InvalidParameter, "qhermite_poisson requires |r| < 1");
    const cplx eit = std::polar(1.0, std::acos(x));
    const cplx eip = std::polar(1.0, std::acos(y));
    cplx den = qpoch_multi({r * eit * eip, r * eit / eip, r * eip / eit,
                            r / (eit * eip)},
                           qb, kInfinity, policy);
    return (qpoch_inf(cplx(r * r), qb, policy).value / den).real();
}

// Series oracle for the same sum, truncated at N.
inline double qhermite_poisson_series(double x, double y, double r, QBase qb,
                                      long N) {
    double sum = 0.0;
    double coeff = 1.0;  // r^n / (q;q)_n
    const double q = qb.value();
    for (long n = 0; n <= N; ++n) {
        sum += coeff * cont_qhermite(n, x, qb) * cont_qhermite(n, y, qb);
        coeff *= r / (1.0 - std::pow(q, static_cast<double>(n + 1)));
    }
    return sum;
}

// Normalized form whose integral in dy over (-1,1) is exactly 1 and which
// approaches a delta at x as r -> 1^-:
//   (q, r^2, e^{2i ph}, e^{-2i ph};q)_inf
//     / [2 pi sin(ph) (r e^{i(th+ph)}, r e^{i(th-ph)},
//                      r e^{i(ph-th)}, r e^{-i(th+ph)};q)_inf].
inline double qhermite_delta_kernel(double x, double y, double r, QBase qb,
                                    const TruncationPolicy& policy = {}) {
    if (!(std::abs(r) < 1.0))
        fail(ErrorCode::InvalidParameter, "qhermite_delta_kernel requires |r| < 1");
    const double th = std::acos(x), ph = std::acos(y);
    if (std::sin(ph) < 1e-12)
        fail(ErrorCode::EndpointSingularity,
             "qhermite_delta_kernel is singular at ph in {0, pi}");
    const cplx e2p = std::polar(1.0, 2.0 * ph);
    const double num = (qpoch_inf(cplx(qb.value()), qb, policy).value *
                        qpoch_inf(cplx(r * r), qb, policy).value *
                        qpoch_inf(e2p, qb, policy).value *
                        qpoch_inf(1.0 / e2p, qb, policy).value).real();
    const double den =
        2.0 * M_PI * std::sin(ph) *
        qpoch_multi({r * std::polar(1.0, th + ph), r * std::polar(1.0, th - ph),
                     r * std::polar(1.0, ph - th), r * std::polar(1.0, -th - ph)},
                    qb, kInfinity, policy).real();
    return num / den;
}

// ---------------------------------------------------------------------------
// Continuous dual q-Hahn kernels (the d = delta = 0 reduction).

// Oracle: sum_n (ab, ac;q)_n / ((q, bc;q)_n a^{2n}) t^n p_n(x; a,b,c)
//                p_n(y; alpha,beta,gamma), in scaled form.
inline cplx dual_qhahn_direct(double x, double y, double a, double b, double c,
                              double al, double be, double ga, cplx t, QBase qb,
                              long N = 80) {
    const double q = qb.value();
    detail::ScaledAwSequence X(x, a, b, c, 0.0, q);
    detail::ScaledAwSequence Y(y, al, be, ga, 0.0, q);
    cplx g{1.0, 0.0};
    cplx sum{0.0, 0.0};
    int consecutive_small = 0;
    for (long n = 0; n < N; ++n) {
        cplx term = g * X.current() * Y.current();
        sum += term;
        if (std::abs(term) <= 1e-16 * std::max(std::abs(sum), 1e-300)) {
            if (++consecutive_small >= 2) break;
        } else {
            consecutive_small = 0;
        }
        const double qn = std::pow(q, static_cast<double>(n));
        g *= (1 - a * b * qn) * (1 - a * c * qn) /
             ((1 - std::pow(q, static_cast<double>(n + 1))) * (1 - b * c * qn)) *
             t * (al / a);
        X.advance();
        Y.advance();
    }
    return sum;
}

// Closed form: prefactor times a triple sum (outer k with paired-index
// Pochhammer ratios, middle l, inner very-well-poised core).
inline cplx dual_qhahn_kernel(double x, double y, double a, double b, double c,
                              double al, double be, double ga, cplx t, QBase qb,
                              const TruncationPolicy& policy = {}) {
    detail::require_product(al * ga, a * c, "dual q-Hahn requires alpha*gamma = a*c");
    // Only the n = 0 bilinear term survives at t = 0; the closed form's
    // very-well-poised core degenerates there (0/0 parameter pairs).
    if (t == cplx{0.0, 0.0}) return {1.0, 0.0};
    const double q = qb.value();
    const cplx eit = std::polar(1.0, std::acos(x));
    const cplx eip = std::polar(1.0, std::acos(y));
    const cplx eit_ = 1.0 / eit, eip_ = 1.0 / eip;
    const cplx ct = c * t / ga;
    auto P = [&](std::initializer_list<cplx> args) {
        return qpoch_multi(args, qb, kInfinity, policy);
    };
    for (auto& [label, v] : std::initializer_list<std::pair<const char*, cplx>>{
             {"alpha beta", cplx(al * be)},
             {"ac", cplx(a * c)},
             {"bc", cplx(b * c)},
             {"alpha c^2 t^2 e^{i ph}/gamma^2", al * c * c * t * t * eip / (ga * ga)},
             {"c t e^{i(th+ph)}/gamma", ct * eit * eip},
             {"c t e^{i(th-ph)}/gamma", ct * eit * eip_},
             {"c t e^{i(ph-th)}/gamma", ct * eip * eit_},
             {"c t e^{-i(th+ph)}/gamma", ct * eit_ * eip_}})
        detail::pole_guard(v, q, label);

    const cplx pref =
        P({c * c * t * t / (ga * ga), al * ct * eit, al * ct * eit_}) /
        P({cplx(al * be), cplx(a * c), cplx(b * c),
           al * c * c * t * t * eip / (ga * ga)}) *
        P({be * eip, b * ct * eip_, ga * eip_, c * ct * eip, al * t * eip}) /
        P({ct * eit * eip, ct * eit * eip_, ct * eip * eit_, ct * eit_ * eip_});

    auto inner = [&](long k) -> cplx {
        const double qk = std::pow(q, static_cast<double>(k));
        detail::RatioSum lsum;
        lsum.nums = {al * eip_, b * ct * qk / be,
                     al * c * c * t * t * qk * qk * eip / (ga * ga),
                     ct * qk * eit * eip_, ct * qk * eit_ * eip_};
        lsum.dens = {cplx(q), b * ct * qk * eip_,
                     c * c * t * t * qk * qk / (ga * ga), al * ct * qk * eit,
                     al * ct * qk * eit_};
        lsum.z = be * eip;
        lsum.q = q;
        return lsum.run(
            [&](long l) {
                const double qkl = std::pow(q, static_cast<double>(k + l));
                return eval_W(al * c * c * t * t / (ga * ga) *
                                  std::pow(q, static_cast<double>(2 * k + l - 1)) * eip,
                              {ct * qk * eit * eip, ct * qk * eip * eit_, al * eip,
                               (al * t / ga) * qkl, (c * c * t / (ga * ga)) * qkl},
                              ga * eip_, qb, policy).value;
            },
            900);
    };

    // Outer k-sum: coefficient ratio carries (-bc)^k q^{C(k,2)} together
    // with Pochhammers advancing two q-steps per k.
    const cplx A2k = al * c * c * t * t * eip / (ga * ga);
    const cplx B2k = c * c * t * t / (ga * ga);
    cplx total{0.0, 0.0};
    cplx coeff{1.0, 0.0};
    int consecutive_small = 0;
    for (long k = 0;; ++k) {
        if (k > 400)
            fail(ErrorCode::MaxTermsExceeded, "dual q-Hahn outer sum did not converge");
        cplx contrib = coeff * inner(k);
        total += contrib;
        if (std::abs(contrib) <= 1e-15 * std::max(std::abs(total), 1e-300)) {
            if (++consecutive_small >= 2) break;
        } else {
            consecutive_small = 0;
        }
        const double qk = std::pow(q, static_cast<double>(k));
        const double q2k = qk * qk;
        cplx ratio = (-b * c) * qk;
        ratio *= (1.0 - A2k * q2k) * (1.0 - A2k * q2k * q) /
                 ((1.0 - B2k * q2k) * (1.0 - B2k * q2k * q));
        for (const cplx& nn : {t, ct * eit * eip, ct * eit * eip_, ct * eip * eit_,
                               ct * eit_ * eip_})
            ratio *= (1.0 - nn * qk);
        for (const cplx& dd : {cplx(q), c * c * t * eip / ga, al * t * eip,
                               b * ct * eip_, al * ct * eit, al * ct * eit_})
            ratio /= (1.0 - dd * qk);
        coeff *= ratio;
    }
    return pref * total;
}

// t -> 1 closed product form; needs the extra constraint beta*gamma = b*c
// and |c| < |gamma|.
inline cplx dual_qhahn_kernel_unity(double x, double y, double a, double b,
                                    double c, double al, double be, double ga,
                                    QBase qb, const TruncationPolicy& policy = {}) {
    detail::require_product(al * ga, a * c, "dual q-Hahn requires alpha*gamma = a*c");
    detail::require_product(be * ga, b * c,
                            "dual q-Hahn unity requires beta*gamma = b*c");
    if (!(std::abs(c) < std::abs(ga)))
        fail(ErrorCode::ConstraintViolated,
             "dual q-Hahn unity requires |c| < |gamma|");
    const cplx eit = std::polar(1.0, std::acos(x));
    const cplx eip = std::polar(1.0, std::acos(y));
    const double r = c / ga;
    auto P = [&](std::initializer_list<cplx> args) {
        return qpoch_multi(args, qb, kInfinity, policy);
    };
    return P({al * eip, al / eip, be * eip, be / eip, c * eit, c / eit,
              cplx(r * r)}) /
           P({cplx(al * be), cplx(a * c), cplx(b * c), r * eit * eip, r * eit / eip,
              r * eip / eit, r / (eit * eip)});
}

// ---------------------------------------------------------------------------
// Al-Salam-Chihara kernels (the c = d = gamma = delta = 0 reduction).

// Oracle: sum_n (ab;q)_n / ((q;q)_n a^{2n}) t^n p_n(x; a,b) p_n(y; al,be).
inline cplx asc_direct(double x, double y, double a, double b, double al,
                       double be, cplx t, QBase qb, long N = 80) {
    const double q = qb.value();
    detail::ScaledAwSequence X(x, a, b, 0.0, 0.0, q);
    detail::ScaledAwSequence Y(y, al, be, 0.0, 0.0, q);
    cplx g{1.0, 0.0};
    cplx sum{0.0, 0.0};
    int consecutive_small = 0;
    for (long n = 0; n < N; ++n) {
        cplx term = g * X.current() * Y.current();
        sum += term;
        if (std::abs(term) <= 1e-16 * std::max(std::abs(sum), 1e-300)) {
            if (++consecutive_small >= 2) break;
        } else {
            consecutive_small = 0;
        }
        g *= (1 - a * b * std::pow(q, static_cast<double>(n))) /
             (1 - std::pow(q, static_cast<double>(n + 1))) * t * (al / a);
        X.advance();
        Y.advance();
    }
    return sum;
}

// Closed form: prefactor times a single very-well-poised series.
inline cplx asc_kernel(double x, double y, double a, double b, double al,
                       double be, cplx t, QBase qb,
                       const TruncationPolicy& policy = {}) {
    detail::require_product(al * be, a * b,
                            "Al-Salam-Chihara requires alpha*beta = a*b");
    if (t == cplx{0.0, 0.0}) return {1.0, 0.0};
    const double q = qb.value();
    const cplx eit = std::polar(1.0, std::acos(x));
    const cplx eip = std::polar(1.0, std::acos(y));
    const cplx eit_ = 1.0 / eit, eip_ = 1.0 / eip;
    auto P = [&](std::initializer_list<cplx> args) {
        return qpoch_multi(args, qb, kInfinity, policy);
    };
    const cplx s = al * t / a;
    for (auto& [label, v] : std::initializer_list<std::pair<const char*, cplx>>{
             {"ab", cplx(a * b)},
             {"alpha^2 t^2 e^{i th}/a", al * al * t * t * eit / a},
             {"alpha t e^{i(th+ph)}/a", s * eit * eip},
             {"alpha t e^{i(th-ph)}/a", s * eit * eip_},
             {"alpha t e^{i(ph-th)}/a", s * eip * eit_},
             {"alpha t e^{-i(th+ph)}/a", s * eit_ * eip_}})
        detail::pole_guard(v, q, label);
    const cplx pref =
        P({al * al * t * t / (a * a), b * eit_, al * al * t * eit / a, b * t * eit,
           al * t * eip, al * t * eip_}) /
        P({cplx(a * b), al * al * t * t * eit / a, s * eit * eip, s * eit * eip_,
           s * eip * eit_, s * eit_ * eip_});
    const cplx w = eval_W(al * al * t * t * eit / (a * q),
                          {t, al * t / be, a * eit, s * eit * eip, s * eit * eip_},
                          b * eit_, qb, policy).value;
    return pref * w;
}

// t -> 1 closed product form; needs |alpha| < |a|.
inline cplx asc_kernel_unity(double x, double y, double a, double b, double al,
                             double be, QBase qb,
                             const TruncationPolicy& policy = {}) {
    detail::require_product(al * be, a * b,
                            "Al-Salam-Chihara requires alpha*beta = a*b");
    if (!(std::abs(al) < std::abs(a)))
        fail(ErrorCode::ConstraintViolated,
             "Al-Salam-Chihara unity requires |alpha| < |a|");
    const cplx eit = std::polar(1.0, std::acos(x));
    const cplx eip = std::polar(1.0, std::acos(y));
    const double r = al / a;
    auto P = [&](std::initializer_list<cplx> args) {
        return qpoch_multi(args, qb, kInfinity, policy);
    };
    return P({b * eit, b / eit, al * eip, al / eip, cplx(r * r)}) /
           P({cplx(a * b), r * eit * eip, r * eit / eip, r * eip / eit,
              r / (eit * eip)});
}

// Renormalized family: sum_n (q;q)_n/(ab;q)_n t^n \hat p_n(x) \hat p_n(y)
// with \hat p_n = (ab;q)_n a^{-n}/(q;q)_n p_n.  Oracle in scaled form.
inline cplx asc_norm_direct(double x, double y, double a, double b, double al,
                            double be, cplx t, QBase qb, long N = 80) {
    const double q = qb.value();
    detail::ScaledAwSequence X(x, a, b, 0.0, 0.0, q);
    detail::ScaledAwSequence Y(y, al, be, 0.0, 0.0, q);
    cplx g{1.0, 0.0};
    cplx sum{0.0, 0.0};
    int consecutive_small = 0;
    for (long n = 0; n < N; ++n) {
        cplx term = g * X.current() * Y.current();
        sum += term;
        if (std::abs(term) <= 1e-16 * std::max(std::abs(sum), 1e-300)) {
            if (++consecutive_small >= 2) break;
        } else {
            consecutive_small = 0;
        }
        g *= (1 - al * be * std::pow(q, static_cast<double>(n))) /
             (1 - std::pow(q, static_cast<double>(n + 1))) * t;
        X.advance();
        Y.advance();
    }
    return sum;
}

// First closed form of the renormalized kernel.
inline cplx asc_kernel_norm_a(double x, double y, double a, double b, double al,
                              double be, cplx t, QBase qb,
                              const TruncationPolicy& policy = {}) {
    detail::require_product(al * be, a * b,
                            "Al-Salam-Chihara requires alpha*beta = a*b");
    if (t == cplx{0.0, 0.0}) return {1.0, 0.0};
    const cplx eit = std::polar(1.0, std::acos(x));
    const cplx eip = std::polar(1.0, std::acos(y));
    const cplx eit_ = 1.0 / eit, eip_ = 1.0 / eip;
    auto P = [&](std::initializer_list<cplx> args) {
        return qpoch_multi(args, qb, kInfinity, policy);
    };
    const cplx pref =
        P({t * t, b * eit_, al * t * eit, be * t * eit, a * t * eip, a * t * eip_}) /
        P({cplx(a * b), a * t * t * eit, t * eit * eip, t * eit * eip_,
           t * eip * eit_, t * eit_ * eip_});
    const cplx w = eval_W(a * t * t * eit / qb.value(),
                          {al * t / b, be * t / b, a * eit, t * eit * eip,
                           t * eit * eip_},
                          b * eit_, qb, policy).value;
    return pref * w;
}

// Second closed form of the same kernel; agreement of the two is a suite
// check.
inline cplx asc_kernel_norm_b(double x, double y, double a, double b, double al,
                              double be, cplx t, QBase qb,
                              const TruncationPolicy& policy = {}) {
    detail::require_product(al * be, a * b,
                            "Al-Salam-Chihara requires alpha*beta = a*b");
    if (t == cplx{0.0, 0.0}) return {1.0, 0.0};
    const cplx eit = std::polar(1.0, std::acos(x));
    const cplx eip = std::polar(1.0, std::acos(y));
    const cplx eit_ = 1.0 / eit, eip_ = 1.0 / eip;
    auto P = [&](std::initializer_list<cplx> args) {
        return qpoch_multi(args, qb, kInfinity, policy);
    };
    const cplx pref =
        P({be * t / a, al * t * eit, al * t * eit_, a * t * eip, a * t * eip_}) /
        P({al * a * t, t * eit * eip, t * eit * eip_, t * eip * eit_,
           t * eit_ * eip_});
    const cplx w = eval_W(al * a * t / qb.value(),
                          {al * t / b, a * eit, a * eit_, al * eip, al * eip_},
                          be * t / a, qb, policy).value;
    return pref * w;
}

// ---------------------------------------------------------------------------
// Big q-Hermite and q-Bessel kernels (single-parameter reductions).

// Oracle: sum_n t^n / ((q;q)_n a^{2n}) p_n(x; a) p_n(y; alpha).
inline cplx bigqh_direct(double x, double y, double a, double al, cplx t,
                         QBase qb, long N = 80) {
    const double q = qb.value();
    detail::ScaledAwSequence X(x, a, 0.0, 0.0, 0.0, q);
    detail::ScaledAwSequence Y(y, al, 0.0, 0.0, 0.0, q);
    cplx g{1.0, 0.0};
    cplx sum{0.0, 0.0};
    int consecutive_small = 0;
    for (long n = 0; n < N; ++n) {
        cplx term = g * X.current() * Y.current();
        sum += term;
        if (std::abs(term) <= 1e-16 * std::max(std::abs(sum), 1e-300)) {
            if (++consecutive_small >= 2) break;
        } else {
            consecutive_small = 0;
        }
        g *= t * (al / a) / (1 - std::pow(q, static_cast<double>(n + 1)));
        X.advance();
        Y.advance();
    }
    return sum;
}

// Closed 3phi2 form of the big q-Hermite kernel.
inline cplx bigqh_kernel(double x, double y, double a, double al, cplx t,
                         QBase qb, const TruncationPolicy& policy = {}) {
    if (t == cplx{0.0, 0.0}) return {1.0, 0.0};
    const cplx eit = std::polar(1.0, std::acos(x));
    const cplx eip = std::polar(1.0, std::acos(y));
    const cplx s = al * t / a;
    auto P = [&](std::initializer_list<cplx> args) {
        return qpoch_multi(args, qb, kInfinity, policy);
    };
    const cplx pref = P({al * al * t * t / (a * a), al * t * eip, al / eip}) /
                      P({s * eit * eip, s * eit / eip, s * eip / eit,
                         s / (eit * eip)});
    PhiSpec spec;
    spec.numerator = {t, s * eit * eip, s * eip / eit};
    spec.denominator = {al * al * t * t / (a * a), al * t * eip};
    spec.z = al / eip;
    spec.q = qb.value();
    return pref * eval_phi(spec, policy).value;
}

// Oracle for the renormalized variant: sum_n t^n/((q;q)_n (a alpha)^n) p p.
inline cplx bigqh_norm_direct(double x, double y, double a, double al, cplx t,
                              QBase qb, long N = 80) {
    const double q = qb.value();
    detail::ScaledAwSequence X(x, a, 0.0, 0.0, 0.0, q);
    detail::ScaledAwSequence Y(y, al, 0.0, 0.0, 0.0, q);
    cplx g{1.0, 0.0};
    cplx sum{0.0, 0.0};
    int consecutive_small = 0;
    for (long n = 0; n < N; ++n) {
        cplx term = g * X.current() * Y.current();
        sum += term;
        if (std::abs(term) <= 1e-16 * std::max(std::abs(sum), 1e-300)) {
            if (++consecutive_small >= 2) break;
        } else {
            consecutive_small = 0;
        }
        g *= t / (1 - std::pow(q, static_cast<double>(n + 1)));
        X.advance();
        Y.advance();
    }
    return sum;
}

// Closed 3phi2 form of the renormalized big q-Hermite kernel; at a = 0 it
// reduces to the q-Bessel kernel below.
inline cplx bigqh_kernel_norm(double x, double y, double a, double al, cplx t,
                              QBase qb, const TruncationPolicy& policy = {}) {
    if (t == cplx{0.0, 0.0}) return {1.0, 0.0};
    const cplx eit = std::polar(1.0, std::acos(x));
    const cplx eip = std::polar(1.0, std::acos(y));
    auto P = [&](std::initializer_list<cplx> args) {
        return qpoch_multi(args, qb, kInfinity, policy);
    };
    const cplx pref = P({t * t, a * t * eip, al / eip}) /
                      P({t * eit * eip, t * eit / eip, t * eip / eit,
                         t / (eit * eip)});
    PhiSpec spec;
    spec.numerator = {a * t / al, t * eit * eip, t * eip / eit};
    spec.denominator = {t * t, a * t * eip};
    spec.z = al / eip;
    spec.q = qb.value();
    return pref * eval_phi(spec, policy).value;
}

// Oracle pairing continuous q-Hermite with big q-Hermite:
// sum_n (t/alpha)^n/(q;q)_n H_n(x|q) p_n(y; alpha).
inline cplx qbessel_direct(double x, double y, double al, cplx t, QBase qb,
                           long N = 90) {
    const double q = qb.value();
    detail::ScaledAwSequence Y(y, al, 0.0, 0.0, 0.0, q);
    cplx g{1.0, 0.0};  // t^n / (q;q)_n after scaling p_n by al^n
    cplx sum{0.0, 0.0};
    int consecutive_small = 0;
    for (long n = 0; n < N; ++n) {
        cplx term = g * cont_qhermite(n, x, qb) * Y.current();
        sum += term;
        if (std::abs(term) <= 1e-16 * std::max(std::abs(sum), 1e-300)) {
            if (++consecutive_small >= 2) break;
        } else {
            consecutive_small = 0;
        }
        g *= t / (1 - std::pow(q, static_cast<double>(n + 1)));
        Y.advance();
    }
    return sum;
}

// Closed 2phi1 form of the q-Hermite/big q-Hermite kernel; equals
// bigqh_kernel_norm at a = 0.
inline cplx qhermite_qbessel_kernel(double x, double y, double al, cplx t,
                                    QBase qb,
                                    const TruncationPolicy& policy = {}) {
    if (t == cplx{0.0, 0.0}) return {1.0, 0.0};
    const cplx eit = std::polar(1.0, std::acos(x));
    const cplx eip = std::polar(1.0, std::acos(y));
    auto P = [&](std::initializer_list<cplx> args) {
        return qpoch_multi(args, qb, kInfinity, policy);
    };
    const cplx pref = P({t * t, al / eip}) /
                      P({t * eit * eip, t * eit / eip, t * eip / eit,
                         t / (eit * eip)});
    PhiSpec spec;
    spec.numerator = {t * eit * eip, t * eip / eit};
    spec.denominator = {t * t};
    spec.z = al / eip;
    spec.q = qb.value();
    return pref * eval_phi(spec, policy).value;
}

// Bare 2phi1 related to the q-Bessel addition formula.  The two readings
// differ in the second numerator exponent and the argument exponent:
// as_printed = true uses t e^{i(th-ph)} with argument alpha e^{-i th};
// false uses t e^{i(ph-th)} with argument alpha e^{-i ph}, which matches
// the 2phi1 factor of qhermite_qbessel_kernel.
inline cplx j_t(double x, double y, double al, cplx t, QBase qb,
                bool as_printed = true, const TruncationPolicy& policy = {}) {
    const cplx eit = std::polar(1.0, std::acos(x));
    const cplx eip = std::polar(1.0, std::acos(y));
    PhiSpec spec;
    if (as_printed) {
        spec.numerator = {t * eit * eip, t * eit / eip};
        spec.z = al / eit;
    } else {
        spec.numerator = {t * eit * eip, t * eip / eit};
        spec.z = al / eip;
    }
    spec.denominator = {t * t};
    spec.q = qb.value();
    return eval_phi(spec, policy).value;
}

}  // namespace qaw
