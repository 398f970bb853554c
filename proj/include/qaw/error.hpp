#pragma once

#include <stdexcept>
#include <string>

namespace qaw {

// Failure taxonomy for the whole library.  Every throw site names the
// violated invariant in the message so a CLI user sees which precondition
// broke, not just where.
enum class ErrorCode {
    InvalidParameter,    // argument outside its documented domain
    MaxTermsExceeded,    // truncation policy exhausted before convergence
    Divergent,           // nonterminating series with |z| >= 1
    PoleInDenominator,   // series denominator parameter on the q^{-m} lattice
    PoleGuardTripped,    // kernel denominator product factor on the lattice
    ConstraintViolated,  // cross-parameter compatibility condition broken
    EndpointSingularity, // evaluation at a singular endpoint (|x| = 1, sin = 0)
    NonFiniteIntegrand,  // NaN/Inf encountered during quadrature or summation
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::MaxTermsExceeded: return "MaxTermsExceeded";
        case ErrorCode::Divergent: return "Divergent";
        case ErrorCode::PoleInDenominator: return "PoleInDenominator";
        case ErrorCode::PoleGuardTripped: return "PoleGuardTripped";
        case ErrorCode::ConstraintViolated: return "ConstraintViolated";
        case ErrorCode::EndpointSingularity: return "EndpointSingularity";
        case ErrorCode::NonFiniteIntegrand: return "NonFiniteIntegrand";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    const char* code_name() const noexcept { return error_code_name(code_); }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace qaw
