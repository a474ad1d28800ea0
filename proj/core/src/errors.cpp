#include "sepweb/errors.hpp"

namespace sepweb {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSelfAdjoint: return "NotSelfAdjoint";
    case ErrorCode::NotPseudoOrthogonal: return "NotPseudoOrthogonal";
    case ErrorCode::DegenerateAmbiguity: return "DegenerateAmbiguity";
    case ErrorCode::NonOrthogonalCT: return "NonOrthogonalCT";
    case ErrorCode::RangeViolation: return "RangeViolation";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::ComplexSpectrum: return "ComplexSpectrum";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::DegenerateSubspace: return "DegenerateSubspace";
    case ErrorCode::OutsideGeodesicFactor: return "OutsideGeodesicFactor";
    case ErrorCode::NotReducible: return "NotReducible";
    case ErrorCode::NoCanonicalPoint: return "NoCanonicalPoint";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::OutsideRegion: return "OutsideRegion";
    case ErrorCode::NumericalNonConvergence: return "NumericalNonConvergence";
    case ErrorCode::PoleEncountered: return "PoleEncountered";
    case ErrorCode::ModulusOutOfRange: return "ModulusOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownChart: return "UnknownChart";
  }
  return "Unknown";
}

}  // namespace sepweb
