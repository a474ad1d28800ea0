#pragma once

// The sepweb command line, callable in-process so tests can drive it.

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "sepweb/concircular.hpp"
#include "sepweb/expr.hpp"
#include "sepweb/verify.hpp"

namespace sepweb::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kInvalidTensor = 3,
  kDomain = 4,
};

inline constexpr int kSchemaVersion = 1;

// Reads {"A": 3x3 | number, "w": [t,x,y] | number, "m": number}. A scalar A means a
// multiple of the identity, a scalar w a constant vector. Throws ParseError.
ConcircularTensor ct_from_json(const nlohmann::json& j);
nlohmann::json ct_to_json(const ConcircularTensor& l);

nlohmann::json classification_json(const ConcircularTensor& l);
nlohmann::json verify_report_json(const VerifyReport& r, const VerifyOptions& opt);
nlohmann::json catalog_json();

// Rows u,v,w,t,x,y over a grid x grid slice with one coordinate held fixed.
std::vector<std::array<double, 6>> surface_grid(int web, int chart, const Params& p, int fixed_coord,
                                                double fixed_value, int grid);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sepweb::cli
