#include <catch2/catch_amalgamated.hpp>

#include <qaw/qaw.hpp>

using namespace qaw;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("finite q-shifted factorial hand values") {
    QBase qb(0.5);
    // (0.5; 0.5)_2 = (1 - 0.5)(1 - 0.25)
    CHECK_THAT(qpoch_n(cplx(0.5), qb, 2).real(), WithinRel(0.375, 1e-15));
    CHECK(qpoch_n(cplx(0.5), qb, 2).imag() == 0.0);
    // A leading factor (1 - 1) kills the whole product.
    CHECK(qpoch_n(cplx(1.0), qb, 3) == cplx(0.0, 0.0));
    // Empty product convention.
    CHECK(qpoch_n(cplx(0.3), qb, 0) == cplx(1.0, 0.0));
    CHECK(qpoch_n(cplx(0.0), qb, 7) == cplx(1.0, 0.0));
}

TEST_CASE("finite q-shifted factorial forward recurrence") {
    QBase qb(0.7);
    cplx a(0.4, 0.2);
    for (long n = 0; n < 12; ++n) {
        cplx lhs = qpoch_n(a, qb, n + 1);
        cplx rhs = qpoch_n(a, qb, n) * (1.0 - a * std::pow(0.7, double(n)));
        CHECK_THAT(std::abs(lhs - rhs), WithinAbs(0.0, 1e-14 * std::abs(lhs) + 1e-300));
    }
}

TEST_CASE("infinite product against brute-force partial products") {
    {
        QBase qb(0.5);
        double brute = 1.0;
        double x = 0.5;
        for (int k = 0; k < 200; ++k) {
            brute *= (1.0 - x);
            x *= 0.5;
        }
        SeriesValue v = qpoch_inf(cplx(0.5), qb);
        CHECK_THAT(v.value.real(), WithinRel(brute, 1e-13));
        CHECK(v.value.imag() == 0.0);
        CHECK_THAT(v.value.real(), WithinRel(0.28878809508661879, 1e-14));
    }
    {
        // Slowly converging corner: a = q = 0.9 needs hundreds of factors.
        QBase qb(0.9);
        double brute = 1.0;
        double x = 0.9;
        for (int k = 0; k < 1000; ++k) {
            brute *= (1.0 - x);
            x *= 0.9;
        }
        SeriesValue v = qpoch_inf(cplx(0.9), qb);
        CHECK_THAT(v.value.real(), WithinRel(brute, 1e-11));
    }
}

TEST_CASE("infinite product special arguments") {
    QBase qb(0.5);
    CHECK(qpoch_inf(cplx(0.0), qb).value == cplx(1.0, 0.0));
    // a = 1 zeroes the first factor exactly.
    CHECK(qpoch_inf(cplx(1.0), qb).value == cplx(0.0, 0.0));
    SeriesValue z = qpoch_inf(cplx(1.0), qb);
    CHECK(z.structural_zero);
    // a = q^{-m} lands on the zero lattice for the *finite* symbol only;
    // the infinite product at a = q^{-2} = 4 has factor (1 - 4 q^2) = 0.
    SeriesValue z2 = qpoch_inf(cplx(4.0), qb);
    CHECK(z2.structural_zero);
    CHECK(z2.value == cplx(0.0, 0.0));
}

TEST_CASE("splitting m leading factors off the infinite product") {
    QBase qb(0.6);
    cplx a(0.35, 0.1);
    cplx full = qpoch_inf(a, qb).value;
    for (long m = 0; m <= 20; ++m) {
        cplx shifted = a * std::pow(0.6, double(m));
        cplx split = qpoch_n(a, qb, m) * qpoch_inf(shifted, qb).value;
        CHECK_THAT(std::abs(split - full), WithinAbs(0.0, 1e-13 * std::abs(full)));
    }
}

TEST_CASE("multi-argument infinite product equals product of singles") {
    QBase qb(0.5);
    std::vector<cplx> as = {cplx(0.4), cplx(-0.3), cplx(0.2, 0.1)};
    cplx prod(1.0, 0.0);
    for (cplx a : as) prod *= qpoch_inf(a, qb).value;
    cplx multi = qpoch_multi(as, qb, kInfinity);
    CHECK_THAT(std::abs(multi - prod), WithinAbs(0.0, 1e-14 * std::abs(prod)));
    // Finite-order variant.
    cplx prod3(1.0, 0.0);
    for (cplx a : as) prod3 *= qpoch_n(a, qb, 3);
    CHECK_THAT(std::abs(qpoch_multi(as, qb, 3) - prod3),
               WithinAbs(0.0, 1e-14 * std::abs(prod3)));
}

TEST_CASE("conjugate-pair product h(x; a) via its quadratic factors") {
    QBase qb(0.5);
    const double th = 1.1;
    const double x = std::cos(th);
    const double a = 0.45;
    // h(x; a) = prod_k (1 - 2 a x q^k + a^2 q^{2k})
    double brute = 1.0;
    double ak = a;
    for (int k = 0; k < 200; ++k) {
        brute *= (1.0 - 2.0 * ak * x + ak * ak);
        ak *= 0.5;
    }
    SeriesValue h = h_factor(x, cplx(a), qb);
    CHECK_THAT(h.value.real(), WithinRel(brute, 1e-13));
    CHECK_THAT(h.value.imag(), WithinAbs(0.0, 1e-14));
    // Same thing as the two-argument infinite product at e^{+-i theta}.
    cplx eit = std::polar(1.0, th);
    cplx two = qpoch_multi({a * eit, a / eit}, qb, kInfinity);
    CHECK_THAT(std::abs(h.value - two), WithinAbs(0.0, 1e-13 * std::abs(two)));
}

TEST_CASE("h(x; a) collapses to a perfect square at the endpoint x = 1") {
    QBase qb(0.5);
    const double a = 0.3;
    cplx single = qpoch_inf(cplx(a), qb).value;
    SeriesValue h = h_factor(1.0, cplx(a), qb);
    CHECK_THAT(h.value.real(), WithinRel((single * single).real(), 1e-13));
}

TEST_CASE("h over several parameters multiplies the single-parameter values") {
    QBase qb(0.5);
    const double x = std::cos(0.8);
    std::vector<cplx> as = {cplx(0.4), cplx(0.3), cplx(0.2), cplx(0.1)};
    cplx prod(1.0, 0.0);
    for (cplx a : as) prod *= h_factor(x, a, qb).value;
    cplx multi = h_multi(x, as, qb);
    CHECK_THAT(std::abs(multi - prod), WithinAbs(0.0, 1e-13 * std::abs(prod)));
}

TEST_CASE("base validation rejects q outside (0,1)") {
    CHECK_THROWS_AS(QBase(0.0), Error);
    CHECK_THROWS_AS(QBase(1.0), Error);
    CHECK_THROWS_AS(QBase(-0.5), Error);
    CHECK_THROWS_AS(QBase(1.5), Error);
    CHECK_NOTHROW(QBase(1e-8));
    CHECK_NOTHROW(QBase(0.999));
}

TEST_CASE("inverse-power lattice detector") {
    // q^{-3} = 8 at q = 0.5 sits on the lattice; nearby points do not.
    CHECK(on_inverse_q_lattice(cplx(8.0), 0.5));
    CHECK(on_inverse_q_lattice(cplx(1.0), 0.5));
    CHECK_FALSE(on_inverse_q_lattice(cplx(8.3), 0.5));
    CHECK_FALSE(on_inverse_q_lattice(cplx(0.5), 0.5));
    CHECK_FALSE(on_inverse_q_lattice(cplx(8.0, 2.0), 0.5));
}
