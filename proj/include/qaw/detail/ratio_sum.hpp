#pragma once

// Outer-sum driver shared by the multi-sum kernel formulas: accumulates
// sum_k coeff_k * inner(k) where coeff_{k+1}/coeff_k =
// z * prod(1 - n_i q^k) / prod(1 - d_j q^k).  The stop rule requires two
// consecutive contributions below rel_tol of the partial sum, applied to
// fully evaluated inner values (the only tail proxy available for nested
// sums).

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "qaw/error.hpp"
#include "qaw/types.hpp"

namespace qaw::detail {

struct RatioSum {
    std::vector<cplx> nums;
    std::vector<cplx> dens;
    cplx z{1.0, 0.0};
    double q = 0.5;

    // inner(k) is re-evaluated per index; kmax bounds runaway sums.
    // force_terms >= 0 marks a terminating sum: index force_terms is the
    // last one carrying a nonzero coefficient, so the sum returns there
    // unconditionally.  Returns the accumulated total; adds the number of
    // outer terms used to *terms if provided.
    cplx run(const std::function<cplx(long)>& inner, long kmax = 4000,
             double rel_tol = 1e-15, long force_terms = -1,
             long* terms = nullptr) const {
        cplx total{0.0, 0.0};
        cplx coeff{1.0, 0.0};
        int consecutive_small = 0;
        for (long k = 0; k < kmax; ++k) {
            cplx contrib = coeff * inner(k);
            total += contrib;
            if (terms) ++*terms;
            if (k == force_terms) return total;
            if (std::abs(contrib) <= rel_tol * std::max(std::abs(total), 1e-300)) {
                if (++consecutive_small >= 2) return total;
            } else {
                consecutive_small = 0;
            }
            const double qk = std::pow(q, static_cast<double>(k));
            cplx ratio = z;
            for (const cplx& n : nums) ratio *= (1.0 - n * qk);
            for (const cplx& d : dens) ratio /= (1.0 - d * qk);
            coeff *= ratio;
        }
        fail(ErrorCode::MaxTermsExceeded, "nested outer sum did not converge");
    }
};

}  // namespace qaw::detail
