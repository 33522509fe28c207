#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tsl/rational.hpp"

namespace tsl {

// Outcome of one decomposition / identity check: the left-hand side, the
// named partial sums, the true residual, and the bound it is held against.
// For exact identities the residual is tracked as a rational and `satisfied`
// means residual == 0; otherwise satisfied means |residual| <= bound.
struct DecompositionReport {
  std::string id;
  double lhs = 0.0;
  std::vector<std::pair<std::string, double>> parts;
  double residual = 0.0;
  bool exact = false;            // residual tracked in exact arithmetic
  bool residual_is_zero = false; // meaningful when exact
  Rat residual_exact{};
  double bound = 0.0;
  bool satisfied = false;
  std::string note;

  void add_part(std::string name, double v) { parts.emplace_back(std::move(name), v); }
  double part(const std::string& name) const {
    for (auto& [k, v] : parts)
      if (k == name) return v;
    return 0.0;
  }
};

}  // namespace tsl
