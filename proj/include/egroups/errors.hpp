#pragma once

#include <stdexcept>
#include <string>

namespace egroups {

enum class ErrorKind {
    NotPrime,
    BadCharacteristic,
    ReducibleModulus,
    BadInput,
    ZeroPolynomial,
    SingularCurve,
    PointNotOnCurve,
    PointAtInfinity,
    NotSkew,
    NotAFlex,
    NotTwoTorsion,
    NotThreeTorsion,
    DimensionMismatch,
    SingularTransform,
    TooLarge,
    NoPointFound,
    Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace egroups
