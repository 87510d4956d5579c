#include "egroups/errors.hpp"

namespace egroups {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::BadCharacteristic: return "BadCharacteristic";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::BadInput: return "BadInput";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::SingularCurve: return "SingularCurve";
        case ErrorKind::PointNotOnCurve: return "PointNotOnCurve";
        case ErrorKind::PointAtInfinity: return "PointAtInfinity";
        case ErrorKind::NotSkew: return "NotSkew";
        case ErrorKind::NotAFlex: return "NotAFlex";
        case ErrorKind::NotTwoTorsion: return "NotTwoTorsion";
        case ErrorKind::NotThreeTorsion: return "NotThreeTorsion";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::SingularTransform: return "SingularTransform";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::NoPointFound: return "NoPointFound";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace egroups
