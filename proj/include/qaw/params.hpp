#pragma once

// Parameter containers: the ordered real tuple (a,b,c,d) and its degenerate
// shorter forms, the companion tuple (alpha,beta,gamma,delta) with its
// compatibility constraints, and the bundled kernel parameters.

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "qaw/qpochhammer.hpp"
#include "qaw/types.hpp"

namespace qaw {

// Ordered tuple of 0..4 real parameters with |p| < 1 each.  Shorter tuples
// represent the degenerate families (3: dual q-Hahn, 2: Al-Salam-Chihara,
// 1: big q-Hermite, 0: continuous q-Hermite); missing slots read as 0.
class ParamSet {
  public:
    ParamSet(std::vector<double> values, QBase q) : values_(std::move(values)), q_(q) {
        if (values_.size() > 4)
            fail(ErrorCode::InvalidParameter, "ParamSet holds at most 4 parameters");
        for (double v : values_) {
            if (!std::isfinite(v) || !(std::abs(v) < 1.0))
                fail(ErrorCode::InvalidParameter,
                     "ParamSet requires |parameter| < 1, got " + std::to_string(v));
        }
        // Pairwise products must stay off the q^{-m} lattice (h_n and weight
        // denominators).  For |p| < 1 only the m = 0 point is reachable.
        for (size_t i = 0; i < values_.size(); ++i)
            for (size_t j = i + 1; j < values_.size(); ++j)
                if (on_inverse_q_lattice(values_[i] * values_[j], q_.value()))
                    fail(ErrorCode::InvalidParameter,
                         "ParamSet pairwise product within 1e-10 of the q^-m lattice");
    }

    size_t size() const noexcept { return values_.size(); }
    QBase q() const noexcept { return q_; }
    double qv() const noexcept { return q_.value(); }

    // Slot accessors; absent slots are structural zeros.
    double a() const noexcept { return slot(0); }
    double b() const noexcept { return slot(1); }
    double c() const noexcept { return slot(2); }
    double d() const noexcept { return slot(3); }
    double operator[](size_t i) const noexcept { return slot(i); }

    double abcd() const noexcept { return a() * b() * c() * d(); }

    // epsilon = (abcd)^{1/2}, principal branch; purely imaginary when
    // abcd < 0 and downstream formulas accept that as a complex value.
    cplx epsilon() const {
        return std::sqrt(cplx(abcd(), 0.0));
    }

    const std::vector<double>& values() const noexcept { return values_; }

  private:
    double slot(size_t i) const noexcept { return i < values_.size() ? values_[i] : 0.0; }

    std::vector<double> values_;
    QBase q_;
};

// The companion tuple mu = (alpha,beta,gamma,delta).  Always validates
// alpha*gamma = a*c and beta*delta = b*d against its lambda within 1e-14
// relative; optionally also beta*gamma = b*c with |beta| < |b| when built
// for the t = 1 kernel.
class MuParams {
  public:
    MuParams(const ParamSet& lambda, std::vector<double> values, bool require_unity = false)
        : set_(std::move(values), lambda.q()) {
        const double ac = lambda.a() * lambda.c();
        const double bd = lambda.b() * lambda.d();
        check_product(set_.a() * set_.c(), ac, "alpha*gamma = a*c");
        check_product(set_.b() * set_.d(), bd, "beta*delta = b*d");
        if (require_unity) {
            const double bc = lambda.b() * lambda.c();
            check_product(set_.b() * set_.c(), bc, "beta*gamma = b*c");
            if (!(std::abs(set_.b()) < std::abs(lambda.b())))
                fail(ErrorCode::ConstraintViolated,
                     "unity kernel requires |beta| < |b|");
            unity_ready_ = true;
        }
    }

    // mu from (gamma, delta): alpha = ac/gamma, beta = bd/delta.
    static MuParams from_gamma_delta(const ParamSet& lambda, double gamma, double delta) {
        if (gamma == 0.0 || delta == 0.0)
            fail(ErrorCode::InvalidParameter, "MuParams::from_gamma_delta requires gamma, delta != 0");
        return MuParams(lambda, {lambda.a() * lambda.c() / gamma,
                                 lambda.b() * lambda.d() / delta, gamma, delta});
    }

    // mu for the t = 1 kernel from gamma alone: alpha = ac/gamma,
    // beta = bc/gamma, delta = bd/beta.
    static MuParams unity_from_gamma(const ParamSet& lambda, double gamma) {
        if (gamma == 0.0)
            fail(ErrorCode::InvalidParameter, "MuParams::unity_from_gamma requires gamma != 0");
        double alpha = lambda.a() * lambda.c() / gamma;
        double beta = lambda.b() * lambda.c() / gamma;
        if (beta == 0.0)
            fail(ErrorCode::InvalidParameter, "unity_from_gamma: beta = bc/gamma vanished");
        double delta = lambda.b() * lambda.d() / beta;
        return MuParams(lambda, {alpha, beta, gamma, delta}, /*require_unity=*/true);
    }

    const ParamSet& set() const noexcept { return set_; }
    double alpha() const noexcept { return set_.a(); }
    double beta() const noexcept { return set_.b(); }
    double gamma() const noexcept { return set_.c(); }
    double delta() const noexcept { return set_.d(); }
    bool unity_ready() const noexcept { return unity_ready_; }

  private:
    static void check_product(double got, double want, const char* relation) {
        double scale = std::max({std::abs(want), std::abs(got), 1e-30});
        if (std::abs(got - want) > 1e-14 * scale)
            fail(ErrorCode::ConstraintViolated,
                 std::string("mu incompatible with lambda: requires ") + relation);
    }

    ParamSet set_;
    bool unity_ready_ = false;
};

// Everything a kernel evaluation needs: lambda, mu, t, with |t| < 1 for
// series use and epsilon fixed once on construction.
struct KernelParams {
    ParamSet lambda;
    MuParams mu;
    cplx t;
    cplx epsilon;

    KernelParams(ParamSet lambda_in, MuParams mu_in, cplx t_in)
        : lambda(std::move(lambda_in)), mu(std::move(mu_in)), t(t_in),
          epsilon(lambda.epsilon()) {
        if (!is_finite(t) || !(std::abs(t) < 1.0))
            fail(ErrorCode::InvalidParameter, "KernelParams requires |t| < 1");
    }

    double qv() const noexcept { return lambda.qv(); }
    QBase q() const noexcept { return lambda.q(); }
};

}  // namespace qaw
