// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lisscheb/lisscheb.hpp"

namespace lisscheb::cli {

/// Reading or writing a file failed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline nlohmann::json spec_json(const NodeSpec& spec) {
  nlohmann::json j;
  j["variant"] = spec.is_shifted() ? "shifted" : "standard";
  j["n"] = std::vector<Index>(spec.n().entries().begin(), spec.n().entries().end());
  if (spec.is_shifted()) j["kappa"] = std::vector<Index>(spec.kappa().begin(), spec.kappa().end());
  return j;
}

NodeSpec spec_from_json(const nlohmann::json& j);

/// Writes text to path, or to out when path is empty.
void emit(const std::string& text, const std::string& path, std::ostream& out);

std::string read_file(const std::string& path);

/// Rows of comma-separated numbers after a header line.
std::vector<std::vector<std::string>> read_csv(const std::string& path);

std::string nodes_csv(const NodeSet& nodes);
nlohmann::json nodes_json(const NodeSet& nodes);
std::string gamma_csv(const GammaSet& gamma);
nlohmann::json gamma_json(const GammaSet& gamma);
nlohmann::json expansion_json(const ChebExpansion& p);
ChebExpansion expansion_from_json(const nlohmann::json& j);

/// Data file: d index columns then one value column, one row per node.
SampleVector read_samples(const std::shared_ptr<const NodeSet>& nodes, const std::string& path);

}  // namespace lisscheb::cli
