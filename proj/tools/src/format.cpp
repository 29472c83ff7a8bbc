// SPDX-License-Identifier: Apache-2.0
#include "format.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace lisscheb::cli {

namespace {

Index parse_index(const std::string& s) {
  Index v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ValidationError("not an integer: '" + s + "'");
  return v;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ValidationError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw ValidationError("not a number: '" + s + "'");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

NodeSpec spec_from_json(const nlohmann::json& j) {
  try {
    const auto variant = j.at("variant").get<std::string>();
    const auto n = j.at("n").get<std::vector<Index>>();
    auto dv = validate_pairwise_coprime(std::span<const Index>(n));
    if (variant == "standard") return NodeSpec::standard(std::move(dv));
    if (variant == "shifted") return NodeSpec::shifted(std::move(dv), j.at("kappa").get<std::vector<Index>>());
    throw ValidationError("unknown variant '" + variant + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed spec: ") + e.what());
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw IoError("write to '" + path + "' failed");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("'" + path + "' is empty");
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(trim(cell));
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::string nodes_csv(const NodeSet& nodes) {
  const std::size_t d = nodes.dim();
  std::string s;
  for (std::size_t j = 0; j < d; ++j) s += "i" + std::to_string(j + 1) + ",";
  for (std::size_t j = 0; j < d; ++j) s += "x" + std::to_string(j + 1) + ",";
  s += "weight,parity,face\n";
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    for (Index v : nodes.index(k)) s += std::to_string(v) + ",";
    for (double x : nodes.point(k)) s += fmt(x) + ",";
    s += fmt(nodes.weight(k)) + "," + std::to_string(nodes.parity(k)) + "," +
         std::to_string(nodes.face(k).bits()) + "\n";
  }
  return s;
}

nlohmann::json nodes_json(const NodeSet& nodes) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    nlohmann::json r;
    r["index"] = std::vector<Index>(nodes.index(k).begin(), nodes.index(k).end());
    r["point"] = std::vector<double>(nodes.point(k).begin(), nodes.point(k).end());
    r["weight"] = nodes.weight(k);
    r["parity"] = nodes.parity(k);
    r["face"] = nodes.face(k).bits();
    rows.push_back(std::move(r));
  }
  nlohmann::json j;
  j["spec"] = spec_json(nodes.spec());
  j["nodes"] = std::move(rows);
  return j;
}

std::string gamma_csv(const GammaSet& gamma) {
  std::string s;
  for (std::size_t j = 0; j < gamma.dim(); ++j) s += "g" + std::to_string(j + 1) + ",";
  s += "norm_sq,special\n";
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    for (Index v : gamma.element(k)) s += std::to_string(v) + ",";
    s += fmt(gamma.norm_sq(k)) + "," + (gamma.is_special(k) ? "1" : "0") + "\n";
  }
  return s;
}

nlohmann::json gamma_json(const GammaSet& gamma) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    nlohmann::json r;
    r["gamma"] = std::vector<Index>(gamma.element(k).begin(), gamma.element(k).end());
    r["norm_sq"] = gamma.norm_sq(k);
    r["special"] = gamma.is_special(k);
    rows.push_back(std::move(r));
  }
  nlohmann::json j;
  j["spec"] = spec_json(gamma.spec());
  j["gamma"] = std::move(rows);
  return j;
}

nlohmann::json expansion_json(const ChebExpansion& p) {
  const GammaSet& gamma = p.gamma_set();
  nlohmann::json terms = nlohmann::json::array();
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    nlohmann::json t;
    t["gamma"] = std::vector<Index>(gamma.element(k).begin(), gamma.element(k).end());
    t["coeff"] = p[k];
    terms.push_back(std::move(t));
  }
  nlohmann::json j;
  j["spec"] = spec_json(p.spec());
  j["terms"] = std::move(terms);
  return j;
}

ChebExpansion expansion_from_json(const nlohmann::json& j) {
  try {
    const auto gamma = build_gamma(spec_from_json(j.at("spec")));
    std::vector<double> c(gamma->size(), 0.0);
    for (const auto& t : j.at("terms")) {
      const auto g = t.at("gamma").get<std::vector<Index>>();
      const auto pos = gamma->find(g);
      if (!pos) throw NotInGammaSet("expansion term " + to_string(SpectralIndex(g)) + " is not in the spectral index set");
      c[*pos] = t.at("coeff").get<double>();
    }
    return ChebExpansion(gamma, std::move(c));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed expansion: ") + e.what());
  }
}

SampleVector read_samples(const std::shared_ptr<const NodeSet>& nodes, const std::string& path) {
  const std::size_t d = nodes->dim();
  std::vector<double> values(nodes->size(), 0.0);
  std::vector<bool> seen(nodes->size(), false);
  std::size_t line = 1;
  for (const auto& row : read_csv(path)) {
    ++line;
    if (row.size() != d + 1) {
      throw ValidationError("data row " + std::to_string(line) + " has " + std::to_string(row.size()) +
                            " columns, expected " + std::to_string(d + 1));
    }
    std::vector<Index> i(d);
    for (std::size_t j = 0; j < d; ++j) i[j] = parse_index(row[j]);
    const auto pos = nodes->find(i);
    if (!pos) throw IndexOutOfRange("data row " + std::to_string(line) + ": index " + to_string(MultiIndex(i)) + " is not a node index");
    if (seen[*pos]) throw ValidationError("data row " + std::to_string(line) + ": duplicate index " + to_string(MultiIndex(i)));
    seen[*pos] = true;
    values[*pos] = parse_double(row[d]);
  }
  for (std::size_t k = 0; k < seen.size(); ++k) {
    if (!seen[k]) {
      throw ValidationError("data has no value for node " +
                            to_string(MultiIndex(std::vector<Index>(nodes->index(k).begin(), nodes->index(k).end()))));
    }
  }
  return SampleVector(nodes, std::move(values));
}

}  // namespace lisscheb::cli
