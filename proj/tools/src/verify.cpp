// SPDX-License-Identifier: Apache-2.0
#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace lisscheb::cli {

namespace {

CheckResult check(const char* suite, const char* name, double measure, double tol) {
  return {suite, name, measure <= tol, measure, tol};
}

void orthogonality(const NodeSet& nodes, std::span<const double> w, std::vector<CheckResult>& out) {
  const auto gamma = build_gamma(nodes.spec());
  std::vector<std::vector<double>> chi(gamma->size());
  for (std::size_t k = 0; k < gamma->size(); ++k) chi[k] = chi_values(nodes, gamma->element(k));
  double off = 0.0;
  double diag = 0.0;
  for (std::size_t a = 0; a < gamma->size(); ++a) {
    for (std::size_t b = a; b < gamma->size(); ++b) {
      double s = 0.0;
      for (std::size_t k = 0; k < nodes.size(); ++k) s += w[k] * chi[a][k] * chi[b][k];
      if (a == b) {
        diag = std::max(diag, std::abs(s - gamma->norm_sq(a)));
      } else {
        off = std::max(off, std::abs(s));
      }
    }
  }
  out.push_back(check("orthogonality", "gram_off_diagonal", off, 1e-10));
  out.push_back(check("orthogonality", "gram_diagonal", diag, 1e-10));
}

void quadrature(const NodeSet& nodes, std::span<const double> w, std::vector<CheckResult>& out) {
  const NodeSpec& spec = nodes.spec();
  double sum = 0.0;
  double face = 0.0;
  double positive = 0.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    sum += w[k];
    face = std::max(face, std::abs(w[k] - node_weight(spec, nodes.face(k))));
    if (!(w[k] > 0.0)) positive = 1.0;
  }
  out.push_back(check("quadrature", "weights_positive", positive, 0.0));
  out.push_back(check("quadrature", "weights_sum", std::abs(sum - 1.0), 1e-14));
  out.push_back(check("quadrature", "weights_by_face", face, 1e-15));

  const std::size_t d = spec.dim();
  std::vector<Index> g(d, 0);
  double alias = 0.0;
  while (true) {
    const auto chi = chi_values(nodes, g);
    double rule = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) rule += w[k] * chi[k];
    alias = std::max(alias, std::abs(rule - alias_integral(spec, g)));
    std::size_t j = d;
    while (j-- > 0) {
      if (++g[j] < 2 * spec.extent(j)) break;
      g[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  out.push_back(check("quadrature", "alias_box", alias, 1e-12));
}

void transform(const NodeSet& nodes, std::span<const double> w, std::vector<CheckResult>& out) {
  auto shared = build_node_set(nodes.spec());
  std::mt19937_64 rng(20150916);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  double agree = 0.0;
  double round_trip = 0.0;
  double rule = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> v(nodes.size());
    for (auto& x : v) x = dist(rng);
    const SampleVector h(shared, v);
    const auto fast = coefficients_fast(h);
    const auto naive = coefficients_naive(h);
    double scale = 1.0;
    for (double c : naive.coeffs()) scale = std::max(scale, std::abs(c));
    for (std::size_t k = 0; k < fast.size(); ++k) agree = std::max(agree, std::abs(fast[k] - naive[k]) / scale);
    double integral = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      round_trip = std::max(round_trip, std::abs(expansion_eval(fast, nodes.point(k)) - v[k]));
      integral += w[k] * v[k];
    }
    rule = std::max(rule, std::abs(integral - fast[0]));
  }
  out.push_back(check("transform", "fast_vs_naive", agree, 1e-12));
  out.push_back(check("transform", "round_trip", round_trip, 1e-10));
  out.push_back(check("transform", "quadrature_of_interpolant", rule, 1e-12));
}

void curve(const NodeSet& nodes, std::span<const double> w, std::vector<CheckResult>& out) {
  const NodeSpec& spec = nodes.spec();
  const std::size_t d = spec.dim();
  const Index p = spec.n().product();

  std::vector<Index> hits(nodes.size(), 0);
  double mismatch = 0.0;
  auto record = [&](const std::vector<double>& x) {
    double best = 2.0;
    std::size_t at = 0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      double dist = 0.0;
      for (std::size_t j = 0; j < d; ++j) dist = std::max(dist, std::abs(x[j] - nodes.point(k)[j]));
      if (dist < best) {
        best = dist;
        at = k;
      }
    }
    mismatch = std::max(mismatch, best);
    ++hits[at];
  };
  if (!spec.is_shifted()) {
    const LCCurve c(spec.n(), 1, std::vector<Index>(d, 0));
    for (Index l = 0; l < 2 * p; ++l) record(lc_eval(c, grid_time(c, l)));
  } else {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
      if ((mask >> spec.g_index()) & 1U) continue;
      std::vector<int> u(d);
      for (std::size_t j = 0; j < d; ++j) u[j] = ((mask >> j) & 1U) ? -1 : 1;
      const LCCurve c(spec.n(), 2, std::vector<Index>(spec.kappa().begin(), spec.kappa().end()), u);
      for (Index l = 0; l < 4 * p; ++l) record(lc_eval(c, grid_time(c, l)));
    }
  }
  double uncovered = 0.0;
  double fibers = 0.0;
  double weighted = 0.0;
  const double total = static_cast<double>(spec.is_shifted() ? (4 * p) << (d - 1) : 2 * p);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (hits[k] == 0) uncovered += 1.0;
    fibers = std::max(fibers, std::abs(static_cast<double>(hits[k] - (Index{1} << nodes.face(k).size()))));
    weighted = std::max(weighted, std::abs(w[k] - static_cast<double>(hits[k]) / total));
  }
  double variety = 0.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (!variety_membership(spec, nodes.point(k), 1e-12)) variety += 1.0;
  }
  out.push_back(check("curve", "samples_on_nodes", mismatch, 1e-9));
  out.push_back(check("curve", "nodes_covered", uncovered, 0.0));
  out.push_back(check("curve", "fiber_sizes", fibers, 0.0));
  out.push_back(check("curve", "weights_from_fibers", weighted, 1e-15));
  out.push_back(check("curve", "variety_membership", variety, 0.0));
}

}  // namespace

Suite parse_suite(const std::string& name) {
  if (name == "all") return Suite::all;
  if (name == "orthogonality") return Suite::orthogonality;
  if (name == "curve") return Suite::curve;
  if (name == "quadrature") return Suite::quadrature;
  if (name == "transform") return Suite::transform;
  throw ValidationError("unknown suite '" + name + "'");
}

std::vector<CheckResult> run_suites(const NodeSet& nodes, std::span<const double> weights, Suite suite) {
  if (weights.size() != nodes.size()) throw ValidationError("weight vector does not match the node set");
  std::vector<CheckResult> out;
  if (suite == Suite::all || suite == Suite::orthogonality) orthogonality(nodes, weights, out);
  if (suite == Suite::all || suite == Suite::curve) curve(nodes, weights, out);
  if (suite == Suite::all || suite == Suite::quadrature) quadrature(nodes, weights, out);
  if (suite == Suite::all || suite == Suite::transform) transform(nodes, weights, out);
  return out;
}

}  // namespace lisscheb::cli
