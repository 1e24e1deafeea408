// Error types shared across the engine. Every failure mode named in a
// module contract gets its own type so callers can catch precisely.
#pragma once

#include <stdexcept>
#include <string>

namespace macqt {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroDenominator : Error {
    ZeroDenominator() : Error("zero denominator") {}
};
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};
struct NotPolynomial : Error {
    NotPolynomial() : Error("denominator does not divide numerator") {}
};
struct PoleAtPoint : Error {
    PoleAtPoint() : Error("denominator vanishes at evaluation point") {}
};
struct CellOutsideShape : Error {
    CellOutsideShape() : Error("cell lies outside the diagram") {}
};
struct LabelOutOfRange : Error {
    LabelOutOfRange() : Error("tableau label out of range") {}
};
struct NotACover : Error {
    NotACover() : Error("partitions do not differ by exactly one cell") {}
};
struct NotContained : Error {
    NotContained() : Error("partition is not contained in the other") {}
};
struct EmptySkew : Error {
    EmptySkew() : Error("skew size does not match the requested cell count") {}
};
struct SizeMismatch : Error {
    SizeMismatch() : Error("partition sizes do not match") {}
};
struct LengthMismatch : Error {
    LengthMismatch() : Error("exponent word length does not match partition size") {}
};
struct DegenerateSpectrum : Error {
    DegenerateSpectrum() : Error("eigenvalues are not pairwise distinct") {}
};
struct NotCoprime : Error {
    NotCoprime() : Error("index pair is not co-prime") {}
};
struct UnsupportedRegion : Error {
    UnsupportedRegion() : Error("operator index outside the supported lattice regions") {}
};
struct SingularSubstitution : Error {
    SingularSubstitution() : Error("tableau substitution hit a vanishing denominator") {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

} // namespace macqt
