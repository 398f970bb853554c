#include <catch2/catch_amalgamated.hpp>

#include <qaw/qaw.hpp>

using namespace qaw;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("basic hypergeometric series at z = 0 is the leading term") {
    PhiSpec spec;
    spec.numerator = {cplx(0.3), cplx(0.2)};
    spec.denominator = {cplx(0.7)};
    spec.z = cplx(0.0);
    spec.q = 0.5;
    SeriesValue v = eval_phi(spec);
    CHECK(v.value == cplx(1.0, 0.0));
}

TEST_CASE("two-term terminating 2phi1 against a hand expansion") {
    // Top parameter q^{-1} stops the sum after k = 1:
    //   1 + (1 - q^{-1})(1 - b) / ((1 - q)(1 - c)) * q
    // At q = 0.5, b = 0.3, c = 0.7 this is 1 + (-1)(0.7)/(0.5*0.3) * 0.5 = -4/3.
    PhiSpec spec;
    spec.numerator = {cplx(2.0), cplx(0.3)};
    spec.denominator = {cplx(0.7)};
    spec.z = cplx(0.5);
    spec.q = 0.5;
    SeriesValue v = eval_phi(spec);
    CHECK(v.terminated);
    CHECK(v.terms_used == 2);
    CHECK(v.tail_estimate == 0.0);
    CHECK_THAT(v.value.real(), WithinRel(-4.0 / 3.0, 1e-14));
    CHECK_THAT(v.value.imag(), WithinAbs(0.0, 1e-15));
}

TEST_CASE("terminating series is stable under reversed summation order") {
    // Rebuild the terms of a terminating 4phi3 via the ratio recurrence and
    // sum them forwards and backwards; the engine's forward sum must agree
    // with both to near machine precision.
    const double q = 0.5;
    const long nterm = 6;  // top parameter q^{-6}
    std::vector<cplx> nums = {cplx(std::pow(q, -double(nterm))), cplx(0.35),
                              cplx(0.25, 0.1), cplx(-0.4)};
    std::vector<cplx> dens = {cplx(0.6), cplx(0.45), cplx(-0.2)};
    const cplx z(0.8, 0.3);

    std::vector<cplx> terms;
    cplx term(1.0, 0.0);
    for (long k = 0;; ++k) {
        terms.push_back(term);
        if (k == nterm) break;
        const double qk = std::pow(q, double(k));
        cplx ratio = z;
        for (cplx a : nums) ratio *= (1.0 - a * qk);
        ratio /= (1.0 - std::pow(q, double(k + 1)));
        for (cplx b : dens) ratio /= (1.0 - b * qk);
        term *= ratio;
    }
    cplx fwd(0.0, 0.0), rev(0.0, 0.0);
    for (size_t i = 0; i < terms.size(); ++i) fwd += terms[i];
    for (size_t i = terms.size(); i-- > 0;) rev += terms[i];
    CHECK_THAT(std::abs(fwd - rev), WithinAbs(0.0, 1e-12 * std::abs(fwd)));

    PhiSpec spec;
    spec.numerator = nums;
    spec.denominator = dens;
    spec.z = z;
    spec.q = q;
    SeriesValue v = eval_phi(spec);
    CHECK(v.terminated);
    CHECK(v.terms_used == nterm + 1);
    CHECK_THAT(std::abs(v.value - fwd), WithinAbs(0.0, 1e-13 * std::abs(fwd)));
}

TEST_CASE("unbalanced series picks up (-q^k)^excess compensation") {
    // 1phi2 has one more denominator than a balanced series; each term k
    // carries [(-1)^k q^{k(k-1)/2}]^2 relative to the plain parameter
    // ratio, i.e. the term-to-term ratio gains (-q^k)^2.  Check the engine
    // against an explicit term-by-term accumulation.
    const double q = 0.4;
    const cplx a(0.5), b1(0.3), b2(-0.2), z(1.7, 0.4);  // |z| > 1 is fine here
    cplx total(0.0, 0.0);
    cplx term(1.0, 0.0);
    for (long k = 0; k < 80; ++k) {
        total += term;
        const double qk = std::pow(q, double(k));
        cplx ratio = z * (1.0 - a * qk);
        ratio /= (1.0 - std::pow(q, double(k + 1)));
        ratio /= (1.0 - b1 * qk) * (1.0 - b2 * qk);
        ratio *= qk * qk;  // (-q^k)^excess with excess = 2
        term *= ratio;
    }
    PhiSpec spec;
    spec.numerator = {a};
    spec.denominator = {b1, b2};
    spec.z = z;
    spec.q = q;
    SeriesValue v = eval_phi(spec);
    CHECK_THAT(std::abs(v.value - total), WithinAbs(0.0, 1e-12 * std::abs(total)));
}

TEST_CASE("series engine error taxonomy") {
    PhiSpec spec;
    spec.q = 0.5;
    spec.z = cplx(0.9);
    spec.numerator = {cplx(0.4), cplx(0.3)};
    // Denominator parameter exactly on q^{-1} = 2 with no earlier termination.
    spec.denominator = {cplx(2.0)};
    CHECK_THROWS_MATCHES(eval_phi(spec), Error, Catch::Matchers::Predicate<Error>(
        [](const Error& e) { return e.code() == ErrorCode::PoleInDenominator; }));

    // Same denominator but a terminating numerator that stops the sum before
    // the pole is reached: must evaluate cleanly.
    spec.numerator = {cplx(2.0), cplx(0.3)};  // q^{-1} terminates at k = 1
    CHECK_NOTHROW(eval_phi(spec));

    // Balanced nonterminating series with |z| >= 1 diverges.
    spec.numerator = {cplx(0.4), cplx(0.3)};
    spec.denominator = {cplx(0.7)};
    spec.z = cplx(1.0);
    CHECK_THROWS_MATCHES(eval_phi(spec), Error, Catch::Matchers::Predicate<Error>(
        [](const Error& e) { return e.code() == ErrorCode::Divergent; }));

    // Convergent but capped: max_terms too small.
    spec.z = cplx(0.99);
    TruncationPolicy tight;
    tight.max_terms = 5;
    CHECK_THROWS_MATCHES(eval_phi(spec, tight), Error, Catch::Matchers::Predicate<Error>(
        [](const Error& e) { return e.code() == ErrorCode::MaxTermsExceeded; }));
}

TEST_CASE("very-well-poised wrapper matches its expanded parameter list") {
    QBase qb(0.5);
    const cplx a(0.36);  // sqrt(a) = 0.6 exactly
    std::vector<cplx> bs = {cplx(4.0), cplx(0.3), cplx(0.25), cplx(-0.2),
                            cplx(0.15)};  // b1 = q^{-2} terminates at k = 2
    const cplx z(0.7, 0.2);
    SeriesValue w = eval_W(a, bs, z, qb);
    CHECK(w.terminated);

    PhiSpec spec;
    const cplx ra = std::sqrt(a);
    spec.numerator = {a, 0.5 * ra, -0.5 * ra};
    spec.denominator = {ra, -ra};
    for (cplx b : bs) {
        spec.numerator.push_back(b);
        spec.denominator.push_back(a * 0.5 / b);
    }
    spec.z = z;
    spec.q = 0.5;
    SeriesValue direct = eval_phi(spec);
    CHECK_THAT(std::abs(w.value - direct.value),
               WithinAbs(0.0, 1e-14 * std::abs(direct.value)));
}

TEST_CASE("very-well-poised wrapper at z = 0") {
    QBase qb(0.5);
    SeriesValue w = eval_W(cplx(0.36), {cplx(0.3), cplx(0.2)}, cplx(0.0), qb);
    CHECK(w.value == cplx(1.0, 0.0));
}

TEST_CASE("Jackson q-integral of monomials over (0, 1)") {
    QBase qb(0.5);
    // integral_0^1 u^p d_q u = (1-q) sum q^{n(p+1)} = (1-q)/(1-q^{p+1})
    auto one = [](cplx) { return cplx(1.0); };
    auto lin = [](cplx u) { return u; };
    auto sq = [](cplx u) { return u * u; };
    CHECK_THAT(q_integral(one, cplx(0.0), cplx(1.0), qb).value.real(),
               WithinRel(1.0, 1e-13));
    CHECK_THAT(q_integral(lin, cplx(0.0), cplx(1.0), qb).value.real(),
               WithinRel(1.0 / 1.5, 1e-13));
    CHECK_THAT(q_integral(sq, cplx(0.0), cplx(1.0), qb).value.real(),
               WithinRel(1.0 / 1.75, 1e-13));
}

TEST_CASE("Jackson q-integral respects orientation exactly") {
    QBase qb(0.6);
    auto f = [](cplx u) { return u * u - cplx(0.3) * u + cplx(0.1); };
    cplx ab = q_integral(f, cplx(0.2), cplx(0.9), qb).value;
    cplx ba = q_integral(f, cplx(0.9), cplx(0.2), qb).value;
    CHECK(ab == -ba);  // defined as a difference of one-sided sums
}
