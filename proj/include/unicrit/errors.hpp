// Error types shared across the library. All arithmetic is exact; any
// situation that would require rounding or truncation is an error here.
#pragma once

#include <stdexcept>
#include <string>

namespace unicrit {

// Base class for all mathematical failures raised by this library.
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands belong to different coefficient rings (variable tag or modulus
// mismatch).
struct IncompatibleRings : MathError {
    using MathError::MathError;
};

// exact_div was called on operands whose quotient has a nonzero remainder.
// This always signals an internal math error and must abort the computation.
struct NotDivisible : MathError {
    using MathError::MathError;
};

// An operation received a zero operand where a nonzero one is required.
struct ZeroOperand : MathError {
    using MathError::MathError;
};

// Inversion in a quotient ring met a zero divisor. The offending nontrivial
// factor of the modulus is reported in canonical text form.
struct ZeroDivisor : MathError {
    explicit ZeroDivisor(std::string factor_text)
        : MathError("zero divisor in quotient ring; modulus factor: " + factor_text),
          factor(std::move(factor_text)) {}
    std::string factor;
};

// A claimed d-th root of unity does not satisfy zeta^d = 1 in its ring.
struct NotRootOfUnity : MathError {
    using MathError::MathError;
};

// A certificate polynomial that must be squarefree is not.
struct NotSquarefree : MathError {
    using MathError::MathError;
};

// A soundness self-check failed (e.g. a reported witness does not reproduce
// the claimed portrait). Indicates a bug; callers should abort loudly.
struct CertificateFailure : MathError {
    using MathError::MathError;
};

// Malformed textual input (rationals, polynomials, quotient literals).
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::string offending)
        : std::runtime_error(what + (offending.empty() ? "" : " (at \"" + offending + "\")")),
          token(std::move(offending)) {}
    std::string token;
};

}  // namespace unicrit
