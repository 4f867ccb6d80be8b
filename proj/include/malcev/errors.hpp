#pragma once

#include <stdexcept>
#include <string>

namespace malcev {

// Base class for every domain error thrown by this library. Callers that
// want coarse handling can catch this; fine-grained types below carry the
// failure class promised by each operation's contract.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct ZeroDivisor : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// Structure-constant tables must satisfy c[i][j][k] == -c[j][i][k]; the
// offending index triple is preserved for diagnostics.
struct AntisymmetryViolation : Error {
    int i, j, k;
    AntisymmetryViolation(int i_, int j_, int k_, const std::string& what)
        : Error(what), i(i_), j(j_), k(k_) {}
};

struct UnsupportedAlgebra : Error {
    using Error::Error;
};

struct ZeroElement : Error {
    using Error::Error;
};

struct NonImaginarySpectrum : Error {
    using Error::Error;
};

struct NonConjugateSymmetricF : Error {
    using Error::Error;
};

struct SpectrumHit : Error {
    using Error::Error;
};

struct NotImaginary : Error {
    using Error::Error;
};

struct NotUnit : Error {
    using Error::Error;
};

struct BranchPoint : Error {
    using Error::Error;
};

struct InsufficientSamples : Error {
    using Error::Error;
};

struct UnsupportedOrder : Error {
    using Error::Error;
};

struct UnknownConvention : Error {
    using Error::Error;
};

struct NegativeDegree : Error {
    using Error::Error;
};

}  // namespace malcev
