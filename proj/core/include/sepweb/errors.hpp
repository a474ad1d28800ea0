#pragma once

#include <stdexcept>
#include <string>

namespace sepweb {

enum class ErrorCode {
  NotSelfAdjoint,
  NotPseudoOrthogonal,
  DegenerateAmbiguity,
  NonOrthogonalCT,
  RangeViolation,
  DegenerateTriple,
  ComplexSpectrum,
  DegenerateSpectrum,
  DegenerateSubspace,
  OutsideGeodesicFactor,
  NotReducible,
  NoCanonicalPoint,
  BadParams,
  OutsideRegion,
  NumericalNonConvergence,
  PoleEncountered,
  ModulusOutOfRange,
  ParseError,
  UnknownChart,
};

const char* error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sepweb
