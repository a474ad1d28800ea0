#pragma once

// Raw catalog tables, parsed into records by catalog.cpp.

#include <array>
#include <string>
#include <vector>

#include "sepweb/catalog.hpp"

namespace sepweb::data {

struct RawWeb {
  int id;
  const char* name;
  Family family;
  const char* hm_label;  // null when the web has no such label
  const char* km_label;
  ParamRule rule;
  const char* note;
  ConcircularTensor (*generator)(const Params&);
};

struct RawChart {
  int web;
  int timelike;
  std::string ranges;  // chains separated by ';', tokens by spaces
  std::string lets;    // "name = expr" separated by ';'
  std::array<std::string, 3> map;
  std::array<std::string, 3> metric;
  std::string region;  // clauses separated by ';'
  std::string offset;  // three comma-separated expressions, empty for zero
};

const std::vector<RawWeb>& raw_webs();
const std::vector<RawChart>& raw_charts();

}  // namespace sepweb::data
