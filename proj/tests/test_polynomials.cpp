#include <catch2/catch_amalgamated.hpp>

#include <boost/math/quadrature/gauss.hpp>
#include <qaw/qaw.hpp>

using namespace qaw;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
const QBase kHalf(0.5);
ParamSet std_lambda() { return ParamSet({0.4, 0.3, 0.2, 0.1}, kHalf); }
}  // namespace

TEST_CASE("parameter-set admissibility") {
    CHECK_NOTHROW(ParamSet({}, kHalf));
    CHECK_NOTHROW(ParamSet({0.4}, kHalf));
    CHECK_NOTHROW(ParamSet({0.4, 0.3}, kHalf));
    CHECK_NOTHROW(ParamSet({0.4, 0.3, 0.2}, kHalf));
    CHECK_NOTHROW(ParamSet({0.4, 0.3, 0.2, 0.1}, kHalf));
    CHECK_NOTHROW(ParamSet({-0.4, 0.999, 0.2}, kHalf));
    CHECK_THROWS_AS(ParamSet({1.0, 0.3}, kHalf), Error);
    CHECK_THROWS_AS(ParamSet({0.4, -1.2}, kHalf), Error);
    CHECK_THROWS_AS(ParamSet({0.1, 0.2, 0.3, 0.4, 0.5}, kHalf), Error);
    // Missing slots read as zero so degenerate families share one code path.
    ParamSet three({0.4, 0.3, 0.2}, kHalf);
    CHECK(three.d() == 0.0);
    CHECK(three.a() == 0.4);
}

TEST_CASE("companion parameter-set product constraints") {
    ParamSet lam = std_lambda();
    // alpha*gamma must reproduce a*c and beta*delta must reproduce b*d.
    CHECK_NOTHROW(MuParams(lam, {0.32, 0.2, 0.25, 0.15}));
    CHECK_THROWS_MATCHES(
        MuParams(lam, {0.32, 0.2, 0.26, 0.15}), Error,
        Catch::Matchers::Predicate<Error>([](const Error& e) {
            return e.code() == ErrorCode::ConstraintViolated;
        }));
    CHECK_THROWS_AS(MuParams(lam, {0.32, 0.21, 0.25, 0.15}), Error);

    MuParams mu = MuParams::from_gamma_delta(lam, 0.25, 0.15);
    CHECK_THAT(mu.alpha(), WithinRel(0.32, 1e-15));
    CHECK_THAT(mu.beta(), WithinRel(0.2, 1e-15));
    CHECK_THAT(mu.gamma(), WithinRel(0.25, 1e-15));
    CHECK_THAT(mu.delta(), WithinRel(0.15, 1e-15));

    // The boundary-kernel variant additionally pins beta = bc/gamma and
    // delta = bd/beta.
    MuParams muu = MuParams::unity_from_gamma(lam, 0.25);
    CHECK_THAT(muu.beta(), WithinRel(0.24, 1e-15));
    CHECK_THAT(muu.delta(), WithinRel(0.125, 1e-15));
}

TEST_CASE("degree-zero and degree-one polynomial hand values") {
    ParamSet lam = std_lambda();
    const double th = 1.0;
    const double x = std::cos(th);
    CHECK(aw_poly(0, x, lam) == cplx(1.0, 0.0));

    // Two-term expansion of the bare terminating series for n = 1 (this
    // library evaluates the series itself, with no a^{-n} (ab,ac,ad;q)_n
    // prefactor).
    const double q = 0.5, a = 0.4, b = 0.3, c = 0.2, d = 0.1;
    const cplx eit = std::polar(1.0, th);
    const double abcd = a * b * c * d;
    cplx expect = 1.0 + (1.0 - 1.0 / q) * (1.0 - abcd) * (1.0 - a * eit) *
                            (1.0 - a / eit) /
                            ((1.0 - a * b) * (1.0 - a * c) * (1.0 - a * d) *
                             (1.0 - q)) *
                            q;
    cplx got = aw_poly(1, x, lam);
    CHECK_THAT(std::abs(got - expect), WithinAbs(0.0, 1e-13 * std::abs(expect)));
}

TEST_CASE("polynomial values are real with tiny imaginary residue") {
    ParamSet lam = std_lambda();
    for (long n = 0; n <= 8; ++n) {
        for (double th : {0.3, 1.0, 2.0, 2.8}) {
            cplx v = aw_poly(n, std::cos(th), lam);
            CHECK(std::abs(v.imag()) <= 1e-12 * (1.0 + std::abs(v)));
        }
    }
}

TEST_CASE("polynomial is symmetric in its last three parameters") {
    const double x = std::cos(1.3);
    std::vector<std::vector<double>> perms = {
        {0.4, 0.3, 0.2, 0.1}, {0.4, 0.2, 0.3, 0.1}, {0.4, 0.1, 0.2, 0.3},
        {0.4, 0.3, 0.1, 0.2}, {0.4, 0.2, 0.1, 0.3}, {0.4, 0.1, 0.3, 0.2}};
    for (long n : {1L, 3L, 5L}) {
        cplx base = aw_poly(n, x, ParamSet(perms[0], kHalf));
        for (const auto& p : perms) {
            cplx v = aw_poly(n, x, ParamSet(p, kHalf));
            // Different parameter orders route the same value through
            // differently ordered series, so allow a few ulps more slack.
            CHECK_THAT(std::abs(v - base), WithinAbs(0.0, 1e-11 * (1.0 + std::abs(base))));
        }
    }
}

TEST_CASE("frozen polynomial regression values") {
    ParamSet lam = std_lambda();
    CHECK_THAT(aw_poly(3, std::cos(1.0), lam).real(),
               WithinRel(-0.030229101555001137, 1e-12));
    CHECK_THAT(aw_poly(5, std::cos(2.0), lam).real(),
               WithinRel(0.024927900032253092, 1e-12));
}

TEST_CASE("weight function positivity, symmetry, and x = 0 oracle") {
    ParamSet lam = std_lambda();
    for (double x : {-0.9, -0.4, 0.0, 0.55, 0.95})
        CHECK(aw_weight(x, lam) > 0.0);

    // Reversing the parameter list cannot change the product.
    ParamSet rev({0.1, 0.2, 0.3, 0.4}, kHalf);
    CHECK_THAT(aw_weight(0.37, rev), WithinRel(aw_weight(0.37, std_lambda()), 1e-14));

    // At x = 0 every quadratic factor collapses to 1 + p^2 q^{2k}; build the
    // whole weight from brute-force products.
    const double q = 0.25;
    ParamSet lam25({0.4, 0.3, 0.2, 0.1}, QBase(q));
    auto brute_h0 = [&](double p) {
        double prod = 1.0;
        double pk = p;
        for (int k = 0; k < 300; ++k) {
            prod *= (1.0 + pk * pk);
            pk *= q;
        }
        return prod;
    };
    double numer = brute_h0(1.0) * brute_h0(-1.0) * brute_h0(std::sqrt(q)) *
                   brute_h0(-std::sqrt(q));
    double denom = brute_h0(0.4) * brute_h0(0.3) * brute_h0(0.2) * brute_h0(0.1);
    CHECK_THAT(aw_weight(0.0, lam25), WithinRel(numer / denom, 1e-12));

    CHECK_THROWS_MATCHES(aw_weight(1.0, lam), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::EndpointSingularity;
                         }));
    CHECK_THROWS_AS(aw_weight(-1.0, lam), Error);
}

TEST_CASE("normalization constants") {
    ParamSet lam = std_lambda();
    CHECK_THAT(aw_h0(lam), WithinRel(0.022496717117247433, 1e-13));
    CHECK_THAT(aw_norm(0, lam), WithinRel(aw_h0(lam), 1e-15));
    CHECK_THAT(aw_norm(3, lam), WithinRel(13.120897092100444, 1e-13));

    // With no parameters the constant collapses to (q;q)_inf / (2 pi).
    ParamSet empty({}, kHalf);
    CHECK_THAT(aw_h0(empty),
               WithinRel(qpoch_inf(cplx(0.5), kHalf).value.real() / (2.0 * M_PI),
                         1e-13));

    // Independent quadrature oracle: 1 / integral(p_2^2 rho) = h_2.
    QuadratureConfig qc;
    cplx I = integrate_weighted(
        [&](double xv) {
            cplx p = aw_poly(2, xv, lam);
            return p * p;
        },
        [&](double xv) { return aw_weight(xv, lam); }, qc);
    CHECK_THAT(1.0 / I.real(), WithinRel(aw_norm(2, lam), 1e-9));
}

TEST_CASE("q-integral representation agrees with the series evaluator") {
    ParamSet lam = std_lambda();
    CHECK_THAT(std::abs(aw_poly_qint(0, std::cos(1.0), lam) - cplx(1.0)),
               WithinAbs(0.0, 1e-11));
    for (long n : {1L, 2L}) {
        cplx ref = aw_poly(n, std::cos(1.0), lam);
        cplx alt = aw_poly_qint(n, std::cos(1.0), lam);
        CHECK_THAT(std::abs(alt - ref), WithinAbs(0.0, 1e-9 * std::abs(ref)));
    }
    cplx ref3 = aw_poly(3, std::cos(2.0), lam);
    CHECK_THAT(std::abs(aw_poly_qint(3, std::cos(2.0), lam) - ref3),
               WithinAbs(0.0, 1e-9 * std::abs(ref3)));
    // The representation divides by d, so d = 0 must be rejected.
    CHECK_THROWS_AS(aw_poly_qint(1, 0.3, ParamSet({0.4, 0.3, 0.2}, kHalf)), Error);
}

TEST_CASE("degeneration chain down to continuous q-Hermite") {
    const double x = std::cos(1.2);
    for (long n : {0L, 1L, 2L, 4L}) {
        cplx four = aw_poly(n, x, ParamSet({0.4, 0.3, 0.2}, kHalf));
        cplx dqh = dual_qhahn(n, x, 0.4, 0.3, 0.2, kHalf);
        CHECK_THAT(std::abs(four - dqh), WithinAbs(0.0, 1e-12 * (1.0 + std::abs(dqh))));

        cplx dqh0 = dual_qhahn(n, x, 0.4, 0.3, 0.0, kHalf);
        cplx asc = alsalam_chihara(n, x, 0.4, 0.3, kHalf);
        CHECK_THAT(std::abs(dqh0 - asc), WithinAbs(0.0, 1e-12 * (1.0 + std::abs(asc))));

        cplx asc0 = alsalam_chihara(n, x, 0.4, 0.0, kHalf);
        cplx bigqh = big_qhermite(n, x, 0.4, kHalf);
        CHECK_THAT(std::abs(asc0 - bigqh), WithinAbs(0.0, 1e-12 * (1.0 + std::abs(bigqh))));

        // In this normalization the one-parameter polynomial carries an a^n
        // scale, so its a -> 0 limit is the continuous q-Hermite polynomial
        // only after dividing that scale out.  The bare series cancels
        // catastrophically at tiny a; the explicit finite-sum form keeps the
        // a^n prefactor separate, so the division is exact and the O(a)
        // approach to the limit is visible.
        double qh = cont_qhermite(n, x, kHalf);
        double prev = 1e300;
        for (double a0 : {1e-2, 1e-4, 1e-6}) {
            cplx scaled = big_qhermite_expanded(n, x, a0, kHalf) *
                          std::pow(a0, -double(n));
            double diff = std::abs(scaled - qh);
            CHECK(diff <= 100.0 * a0 * (1.0 + std::abs(qh)));
            CHECK(diff <= prev + 1e-12);
            prev = diff;
        }
    }
}

TEST_CASE("dual q-Hahn degree-two term-by-term oracle") {
    const double q = 0.5, a = 0.4, b = 0.3, c = 0.2, th = 1.2;
    QBase qb(q);
    const cplx eit = std::polar(1.0, th);
    // Bare terminating series, three terms at n = 2; the leading numerator
    // parameter is q^{-2} = 4 at q = 1/2.
    auto pn = [&](cplx p, long k) { return qpoch_n(p, qb, k); };
    cplx expect(0.0, 0.0);
    for (long k = 0; k <= 2; ++k) {
        cplx term = pn(cplx(4.0), k) * pn(a * eit, k) * pn(a / eit, k) /
                    (pn(cplx(q), k) * pn(cplx(a * b), k) * pn(cplx(a * c), k)) *
                    std::pow(q, double(k));
        expect += term;
    }
    cplx got = dual_qhahn(2, std::cos(th), a, b, c, qb);
    CHECK_THAT(std::abs(got - expect), WithinAbs(0.0, 1e-12 * std::abs(expect)));
}

TEST_CASE("Al-Salam-Chihara dual series forms agree") {
    const double x = std::cos(0.9);
    for (long n : {0L, 1L, 2L, 3L, 5L}) {
        cplx lhs = alsalam_chihara(n, x, 0.4, 0.3, kHalf);
        cplx rhs = alsalam_chihara_phi21(n, x, 0.4, 0.3, kHalf);
        CHECK_THAT(std::abs(lhs - rhs), WithinAbs(0.0, 1e-10 * (1.0 + std::abs(lhs))));
    }
}

TEST_CASE("Al-Salam-Chihara normalized variant is a fixed multiple") {
    const double x = std::cos(0.9);
    const double a = 0.4, b = 0.3;
    for (long n : {0L, 1L, 2L, 4L}) {
        cplx plain = alsalam_chihara(n, x, a, b, kHalf);
        cplx norm = alsalam_chihara_norm(n, x, a, b, kHalf);
        cplx factor = qpoch_n(cplx(a * b), kHalf, n) /
                      (std::pow(a, double(n)) * qpoch_n(cplx(0.5), kHalf, n));
        CHECK_THAT(std::abs(norm - plain * factor),
                   WithinAbs(0.0, 1e-13 * (1.0 + std::abs(norm))));
    }
    CHECK(alsalam_chihara_norm(0, x, a, b, kHalf) == cplx(1.0, 0.0));
}

TEST_CASE("big q-Hermite closed forms and collapse") {
    const double th = 0.8;
    cplx lhs = big_qhermite(3, std::cos(th), 0.4, kHalf);
    cplx rhs = big_qhermite_expanded(3, std::cos(th), 0.4, kHalf);
    CHECK_THAT(std::abs(lhs - rhs), WithinAbs(0.0, 1e-11 * (1.0 + std::abs(lhs))));
    CHECK(big_qhermite(0, 0.3, 0.4, kHalf) == cplx(1.0, 0.0));
    CHECK_THAT(big_qhermite(3, std::cos(th), 0.4, kHalf).real(),
               WithinRel(0.0090651687341822829, 1e-11));
}

TEST_CASE("continuous q-Hermite small-degree algebra") {
    for (double q : {0.3, 0.5, 0.8}) {
        QBase qb(q);
        for (double x : {-0.7, 0.1, 0.6}) {
            CHECK(cont_qhermite(0, x, qb) == 1.0);
            CHECK_THAT(cont_qhermite(1, x, qb), WithinRel(2.0 * x, 1e-14));
            // e^{2 i th} + (1 + q) + e^{-2 i th} = 4x^2 - 2 + (1 + q).
            CHECK_THAT(cont_qhermite(2, x, qb),
                       WithinAbs(4.0 * x * x - 2.0 + 1.0 + q, 1e-13));
        }
        for (long n = 0; n <= 7; ++n) {
            double plus = cont_qhermite(n, 0.43, qb);
            double minus = cont_qhermite(n, -0.43, qb);
            double sign = (n % 2 == 0) ? 1.0 : -1.0;
            CHECK_THAT(minus, WithinAbs(sign * plus, 1e-12 * (1.0 + std::abs(plus))));
        }
    }
}

TEST_CASE("q-oscillator ground state and weight at the origin") {
    QBase qb(0.5);
    for (double x : {-0.9, -0.3, 0.2, 0.8})
        CHECK(q_wavefunction(0, x, qb) > 0.0);

    // rho_0(0) = 4 prod (1 + q^k)^2 over k >= 1.
    double brute = 4.0;
    double qk = 0.5;
    for (int k = 1; k < 200; ++k) {
        brute *= (1.0 + qk) * (1.0 + qk);
        qk *= 0.5;
    }
    CHECK_THAT(qhermite_rho0(0.0, qb), WithinRel(brute, 1e-12));

    // Normalization of the ground state over x in (-1, 1).
    QuadratureConfig qc;
    cplx I = integrate_theta(
        [&](double th) -> cplx {
            double xv = std::cos(th);
            double psi = q_wavefunction(0, xv, qb);
            return cplx(psi * psi * std::sin(th));
        },
        qc);
    CHECK_THAT(I.real(), WithinAbs(1.0, 1e-8));
}

TEST_CASE("q-Laguerre wrapper parameters and frozen value") {
    QBase q3(0.3);
    const double x = 0.5;
    CHECK(q_laguerre(0, x, 1.0, q3) == cplx(1.0, 0.0));
    // alpha = 0 routes to the normalized two-parameter family at
    // (q^{1/4}, q^{3/4}).
    QBase qb(0.5);
    cplx wrapped = q_laguerre(1, x, 0.0, qb);
    cplx direct = alsalam_chihara_norm(1, x, std::pow(0.5, 0.25),
                                       std::pow(0.5, 0.75), qb);
    CHECK_THAT(std::abs(wrapped - direct), WithinAbs(0.0, 1e-13 * std::abs(direct)));
    CHECK_THAT(q_laguerre(2, x, 1.0, q3).real(),
               WithinRel(-0.52514413641856994, 1e-12));
}

TEST_CASE("Hermite polynomials and oscillator wavefunctions") {
    for (double x : {-1.3, 0.0, 0.7, 2.1}) {
        CHECK(hermite(0, x) == 1.0);
        CHECK_THAT(hermite(1, x), WithinAbs(2.0 * x, 1e-14));
        CHECK_THAT(hermite(2, x), WithinAbs(4.0 * x * x - 2.0, 1e-13));
        CHECK_THAT(hermite(3, x), WithinAbs(8.0 * x * x * x - 12.0 * x, 1e-12));
    }
    using boost::math::quadrature::gauss;
    auto integrate = [](auto&& f) {
        double total = 0.0;
        for (int p = 0; p < 20; ++p) {
            double a = -10.0 + p;
            total += gauss<double, 64>::integrate(f, a, a + 1.0);
        }
        return total;
    };
    double n00 = integrate([](double x) {
        double v = hermite_psi(0, x);
        return v * v;
    });
    CHECK_THAT(n00, WithinAbs(1.0, 1e-10));
    double n12 = integrate([](double x) {
        return hermite_psi(1, x) * hermite_psi(2, x);
    });
    CHECK_THAT(n12, WithinAbs(0.0, 1e-10));
}
