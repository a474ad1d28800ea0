#pragma once

// Property suite over the chart catalog: pullback, Killing, diagonality and
// inversion checks at seeded random samples.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sepweb {

struct VerifyOptions {
  std::uint64_t seed = 42;
  int samples = 100;
  double tol = 1e-8;
  std::optional<int> web;  // restrict to one web
};

struct ChartReport {
  int web = 0;
  int chart = 0;
  int samples = 0;
  double pullback = 0.0;
  double killing = 0.0;
  double diagonality = 0.0;
  double roundtrip = 0.0;
  bool roundtrip_skipped = false;
  bool pass = true;
  std::string error;
};

struct VerifyReport {
  std::vector<ChartReport> charts;  // sorted by (web, chart)
  int passed = 0;
  int failed = 0;
};

// Charts whose reducible inversion is allowed to report NumericalNonConvergence.
bool roundtrip_skipped(int web);

VerifyReport run_verify(const VerifyOptions& opt);

}  // namespace sepweb
