#include <catch2/catch_amalgamated.hpp>

#include <limits>

#include <qaw/qaw.hpp>

using namespace qaw;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("quadrature configuration validation") {
    QuadratureConfig bad;
    bad.panels = 100000;
    bad.nodes_per_panel = 64;  // 6.4e6 nodes exceeds the budget
    CHECK_THROWS_AS(integrate_theta([](double) { return cplx(1.0); }, bad), Error);

    bad = {};
    bad.panels = 0;
    CHECK_THROWS_AS(integrate_theta([](double) { return cplx(1.0); }, bad), Error);

    bad = {};
    bad.theta_lo = 2.0;
    bad.theta_hi = 1.0;
    CHECK_THROWS_AS(integrate_theta([](double) { return cplx(1.0); }, bad), Error);

    bad = {};
    bad.nodes_per_panel = 10;  // unsupported Gauss-Legendre order
    CHECK_THROWS_AS(integrate_theta([](double) { return cplx(1.0); }, bad), Error);
}

TEST_CASE("every supported node order integrates sine exactly") {
    for (long order : {8L, 16L, 24L, 32L, 48L, 64L}) {
        QuadratureConfig qc;
        qc.nodes_per_panel = order;
        cplx I = integrate_theta([](double th) { return cplx(std::sin(th)); }, qc);
        CHECK_THAT(I.real(), WithinAbs(2.0, 1e-13));
        CHECK(I.imag() == 0.0);
    }
}

TEST_CASE("weighted integral of the constant gives the normalization") {
    ParamSet lam = standard_lambda();
    cplx I = integrate_weighted([](double) { return cplx(1.0); },
                                [&](double x) { return aw_weight(x, lam); },
                                QuadratureConfig{});
    CHECK_THAT(I.real(), WithinRel(1.0 / aw_h0(lam), 1e-8));
}

TEST_CASE("odd integrand against a symmetric weight vanishes") {
    // With no parameters the weight is even in x, so any odd f integrates
    // to zero.
    ParamSet empty({}, QBase(0.5));
    cplx I = integrate_weighted([](double x) { return cplx(x); },
                                [&](double x) { return aw_weight(x, empty); },
                                QuadratureConfig{});
    CHECK_THAT(std::abs(I), WithinAbs(0.0, 1e-10));
    cplx I3 = integrate_weighted([](double x) { return cplx(x * x * x); },
                                 [&](double x) { return aw_weight(x, empty); },
                                 QuadratureConfig{});
    CHECK_THAT(std::abs(I3), WithinAbs(0.0, 1e-10));
}

TEST_CASE("self-convergence under panel refinement") {
    ParamSet empty({}, QBase(0.5));
    auto weight = [&](double x) { return aw_weight(x, empty); };
    auto f = [](double x) { return cplx(x * x); };
    QuadratureConfig base;
    QuadratureConfig doubled;
    doubled.panels = base.panels * 2;
    QuadratureConfig tenfold;
    tenfold.panels = base.panels * 10;
    cplx I1 = integrate_weighted(f, weight, base);
    cplx I2 = integrate_weighted(f, weight, doubled);
    cplx I10 = integrate_weighted(f, weight, tenfold);
    CHECK_THAT(std::abs(I1 - I2), WithinAbs(0.0, 1e-10 * std::abs(I1)));
    CHECK_THAT(std::abs(I1 - I10), WithinAbs(0.0, 1e-10 * std::abs(I1)));

    // A suite-representative integrand: polynomial times the standard weight.
    ParamSet lam = standard_lambda();
    auto wf = [&](double x) { return aw_weight(x, lam); };
    auto pf = [&](double x) {
        return aw_poly(2, x, lam) * aw_poly(3, x, lam);
    };
    cplx J1 = integrate_weighted(pf, wf, base);
    cplx J2 = integrate_weighted(pf, wf, doubled);
    CHECK_THAT(std::abs(J1 - J2), WithinAbs(0.0, 1e-10));
}

TEST_CASE("non-finite integrands are reported, not propagated") {
    CHECK_THROWS_MATCHES(
        integrate_weighted(
            [](double) { return cplx(std::numeric_limits<double>::infinity()); },
            [](double) { return 1.0; }, QuadratureConfig{}),
        Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
            return e.code() == ErrorCode::NonFiniteIntegrand;
        }));
}

TEST_CASE("partial-domain integration composes") {
    QuadratureConfig left;
    left.theta_hi = 1.0;
    QuadratureConfig right;
    right.theta_lo = 1.0;
    auto f = [](double th) { return cplx(std::cos(3.0 * th) + th); };
    cplx whole = integrate_theta(f, QuadratureConfig{});
    cplx split = integrate_theta(f, left) + integrate_theta(f, right);
    CHECK_THAT(std::abs(whole - split), WithinAbs(0.0, 1e-12 * std::abs(whole)));
}
