#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>

#include "qaw/error.hpp"

namespace qaw {

using cplx = std::complex<double>;

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Deformation parameter q, restricted to the open interval (0,1).  A strong
// type so that q can never be swapped with another double argument.
class QBase {
  public:
    explicit QBase(double q) : q_(q) {
        if (!(q > 0.0) || !(q < 1.0) || !std::isfinite(q))
            fail(ErrorCode::InvalidParameter,
                 "QBase requires 0 < q < 1 strictly, got q=" + std::to_string(q));
    }

    double value() const noexcept { return q_; }

  private:
    double q_;
};

// Governs truncation of every infinite product and series in the library.
// Defaults give double-precision headroom for q up to 0.99.
struct TruncationPolicy {
    double rel_tol = 1e-13;
    double abs_tol = 1e-300;
    long max_terms = 1000000;

    void validate() const {
        if (max_terms < 1)
            fail(ErrorCode::InvalidParameter, "TruncationPolicy.max_terms must be >= 1");
        if (!(rel_tol >= 0.0) || !std::isfinite(rel_tol))
            fail(ErrorCode::InvalidParameter, "TruncationPolicy.rel_tol must be finite and nonnegative");
        if (!(abs_tol >= 0.0) || !std::isfinite(abs_tol))
            fail(ErrorCode::InvalidParameter, "TruncationPolicy.abs_tol must be finite and nonnegative");
    }
};

// A complex result together with how it was obtained.  terminated means a
// numerator parameter q^{-n} cut the series off exactly; structural_zero
// flags an infinite product that vanished because a parameter sits on the
// q^{-m} lattice (an exact zero, as opposed to underflow).
struct SeriesValue {
    cplx value{0.0, 0.0};
    long terms_used = 0;
    double tail_estimate = 0.0;
    bool terminated = false;
    bool structural_zero = false;
};

inline void require_finite(const cplx& z, const char* what) {
    if (!is_finite(z))
        fail(ErrorCode::NonFiniteIntegrand, std::string(what) + " produced a non-finite value");
}

}  // namespace qaw
