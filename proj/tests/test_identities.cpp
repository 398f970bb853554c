#include <catch2/catch_amalgamated.hpp>

#include <qaw/qaw.hpp>

using namespace qaw;

TEST_CASE("three-term expansion of the terminating very-well-poised sum") {
    ParamSet lambda({0.4, 0.3, 0.2, 0.1}, QBase(0.5));
    CheckReport r = check_6w5_split(cplx(1.1, 0.2), cplx(0.9, -0.1), cplx(0.3),
                                    lambda, 1e-9);
    INFO(r.diagnostics);
    CHECK(r.passed);
    CHECK(r.observed_error <= 1e-9);
}

TEST_CASE("three-term expansion at a second pinned parameter point") {
    ParamSet lambda({0.5, 0.4, 0.3, 0.2}, QBase(0.5));
    CheckReport r = check_6w5_split(cplx(1.0), cplx(1.0), cplx(0.25), lambda, 1e-9);
    INFO(r.diagnostics);
    CHECK(r.passed);
    CHECK(r.observed_error <= 1e-9);
}

TEST_CASE("three-term expansion collapses structurally at t = 0") {
    ParamSet lambda({0.4, 0.3, 0.2, 0.1}, QBase(0.5));
    CheckReport r = check_6w5_split(cplx(1.1, 0.2), cplx(0.9, -0.1), cplx(0.0),
                                    lambda);
    CHECK(r.passed);
    CHECK(r.observed_error == 0.0);
}

TEST_CASE("three-term expansion over a conditioned random parameter sample") {
    SuiteConfig cfg;
    cfg.seed = 20260823ULL;
    std::mt19937_64 rng = detail::check_rng(cfg, "test_identities_w65");
    for (int i = 0; i < 25; ++i) {
        W65Sample s = draw_w65_sample(rng);
        ParamSet lambda({s.a, s.b, s.c, s.d}, QBase(s.q));
        CheckReport r = check_6w5_split(s.u, s.v, cplx(s.t), lambda, 1e-8);
        INFO("sample " << i << ": " << r.diagnostics);
        CHECK(r.passed);
    }
}

TEST_CASE("series transformation adding a compensating q-power") {
    CheckReport r = check_2phi1_2phi2(cplx(1.2), cplx(0.8), cplx(0.35), 0.3, 0.5,
                                      QBase(0.4), 1e-9);
    INFO(r.diagnostics);
    CHECK(r.passed);
    CHECK(r.observed_error <= 1e-9);
}

TEST_CASE("series transformation degenerates to 1 = 1 at t = 0") {
    CheckReport r = check_2phi1_2phi2(cplx(1.2), cplx(0.8), cplx(0.0), 0.3, 0.5,
                                      QBase(0.4), 1e-12);
    INFO(r.diagnostics);
    CHECK(r.passed);
}

TEST_CASE("series transformation collapses when both free points equal q") {
    // u = v = q makes the left top parameters q/u = q/v = 1, so only the
    // k = 0 term survives on the left; the right side must agree.
    const double q = 0.4;
    CheckReport r = check_2phi1_2phi2(cplx(q), cplx(q), cplx(0.3), 0.35, 0.45,
                                      QBase(q), 1e-11);
    INFO(r.diagnostics);
    CHECK(r.passed);
}

TEST_CASE("series transformation over a random admissible sample") {
    SuiteConfig cfg;
    cfg.seed = 77ULL;
    std::mt19937_64 rng = detail::check_rng(cfg, "test_identities_2phi");
    for (int i = 0; i < 25; ++i) {
        const double q = detail::uniform(rng, 0.2, 0.7);
        const double b = detail::uniform(rng, 0.1, 0.6);
        const double c = detail::uniform(rng, 0.1, 0.6);
        const double t = detail::uniform(rng, 0.05, 0.6);
        const cplx u(detail::uniform(rng, 0.7, 1.3), detail::uniform(rng, -0.3, 0.3));
        const cplx v(detail::uniform(rng, 0.7, 1.3), detail::uniform(rng, -0.3, 0.3));
        CheckReport r = check_2phi1_2phi2(u, v, cplx(t), b, c, QBase(q), 1e-9);
        INFO("sample " << i << ": " << r.diagnostics);
        CHECK(r.passed);
    }
}

TEST_CASE("identity reports carry a reproduction witness") {
    ParamSet lambda({0.4, 0.3, 0.2, 0.1}, QBase(0.5));
    CheckReport r = check_6w5_split(cplx(1.1, 0.2), cplx(0.9, -0.1), cplx(0.3),
                                    lambda, 1e-9);
    CHECK(r.identity_id == "w65_three_term_split");
    auto has = [&](const std::string& key) {
        for (const auto& kv : r.witness)
            if (kv.first == key) return true;
        return false;
    };
    for (const char* key : {"q", "a", "b", "c", "d", "u", "v", "t"})
        CHECK(has(key));
    CHECK(r.tolerance == 1e-9);
}
