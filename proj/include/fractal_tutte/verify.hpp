#pragma once

// Self-check suite comparing the recursions against the brute-force oracles
// and the closed forms.

#include <array>
#include <string>
#include <vector>

#include "fractal_tutte/recursion.hpp"

namespace fractal_tutte {

inline constexpr unsigned kVerifyOracleCap = 2;
inline constexpr unsigned kVerifyClosedFormMax = 6;

struct GateResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first failing identity, or a short summary
};

struct VerifyOptions {
  unsigned oracle_n_max = kVerifyOracleCap;
  unsigned closed_form_n_max = kVerifyClosedFormMax;
  /// Step tables indexed like kAllFamilies; defaults to the built-in ones.
  /// Tests substitute perturbed tables here.
  std::array<const StepTable*, 3> tables = {nullptr, nullptr, nullptr};
};

/// Runs every gate (never stops early). Throws CapExceeded when
/// oracle_n_max > kVerifyOracleCap.
std::vector<GateResult> run_verification(const VerifyOptions& options = {});

}  // namespace fractal_tutte
