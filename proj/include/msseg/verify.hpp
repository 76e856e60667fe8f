#pragma once

#include <string>
#include <vector>

namespace msseg {

struct VerifyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Numerical invariant suite: gradient/divergence adjointness, Neumann
// boundary behavior, the operator-norm bound, dual-ball projection
// idempotence/feasibility/non-expansiveness for all three norms, the
// closed-form Bregman multiplier, the telescoping sum of the spectral
// components, and mu-insensitivity of the thresholded solution.
std::vector<VerifyResult> run_verification();

}  // namespace msseg
