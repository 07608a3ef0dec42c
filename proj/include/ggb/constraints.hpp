#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ggb/riemannroch.hpp"

namespace ggb {

struct SchwarzenbergerResult {
  bool pass;
  long witness_twist = 0;  // smallest violating j when !pass
  Rat witness_value;       // the non-integral chi(E(j))
};

/// Schwarzenberger integrality: chi(E(j)) must be an integer for every
/// integer j. A polynomial of degree <= n that is integral at the n+1
/// consecutive points j = 0..n is integral everywhere (finite differences),
/// so only those are scanned.
SchwarzenbergerResult schwarzenberger_check(const ChernData& c, int n);

struct ScreenReport {
  std::vector<std::pair<std::string, std::string>> violations;  // (condition, witness)
  bool pass() const { return violations.empty(); }
};

/// Necessary conditions for global generation: c_i >= 0, c_1^2 - c_2 >= 0
/// (when n >= 2), and the Schwarzenberger integrality screen. All violations
/// are reported, not just the first.
ScreenReport gg_necessary(const ChernData& c, int n);

/// Chern data of K* for the kernel K of O^{h0} ->> E: rank h0 - rank(E),
/// total class dual(1/c(E)). Sends c_2 to c_1^2 - c_2 (an involution).
ChernData second_reduction(const ChernData& c, int n, int h0);

}  // namespace ggb
