#pragma once

#include <stdexcept>
#include <string>

namespace vcqds {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands act on different qubit counts, or a state has the wrong dimension.
struct DimensionMismatch : Error {
    using Error::Error;
};

// Commutator closure grew past the configured cap.
struct ClosureCapExceeded : Error {
    ClosureCapExceeded(std::size_t attempted_dim, std::size_t cap_)
        : Error("Lie closure exceeded cap: dimension would reach " +
                std::to_string(attempted_dim) + " with cap " + std::to_string(cap_)),
          attempted(attempted_dim), cap(cap_) {}
    std::size_t attempted;
    std::size_t cap;
};

// Cartan commutation relations failed on a split (input was not closed).
struct InvolutionViolation : Error {
    using Error::Error;
};

// Subalgebra seed has no component inside the m part.
struct SeedNotInM : Error {
    using Error::Error;
};

// Optimizer ran out of iterations before reaching the gradient floor.
struct NoConvergence : Error {
    using Error::Error;
};

// Optimizer converged to a stationary point that is not a Cartan point.
struct ResidualTooLarge : Error {
    using Error::Error;
};

// Malformed input file; message carries the file name and line number.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace vcqds
