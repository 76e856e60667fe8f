#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "msseg/solver.hpp"

namespace msseg {

// Ordered record of an inverse-scale-space run (or a forward alpha sweep).
// masks[k] is the binary segmentation after step k; phis[k] = masks[k] -
// masks[k-1] with the empty mask prepended, so the phis telescope to the
// final mask exactly.
struct ScaleSequence {
  std::vector<ImageGrid> masks;
  std::vector<ImageGrid> phis;
  std::vector<double> responses;         // S_k = sum |phi_k|
  std::vector<double> alphas_effective;  // alpha/(k+1), or the sweep's alphas

  int steps() const { return static_cast<int>(masks.size()); }
};

// Per-step solver effort, for run manifests.
struct RunTrace {
  std::vector<int> inner_iterations;
  std::vector<ImageGrid> relaxed;  // converged v_k before thresholding
};

// Two-class intensity estimate (dark mean, bright mean), dark < bright.
// Classes are split at half the maximum of a 3x3 median-filtered copy and
// both means are taken over the filtered image, which keeps the estimate
// stable under heavy pixel noise while leaving noise-free multi-level
// images essentially untouched.
//
// Throws DegenerateInputError when a class comes out empty (constant images,
// images with no pixel below half max).
std::pair<double, double> estimate_constants(const ImageGrid& f);

// The adaptive regularization weight of Bregman step k (0-based): alpha/(k+1).
double effective_alpha(double alpha, int k);

// Inverse scale space segmentation: K Bregman steps of the convex two-phase
// model at fixed regularization alpha, warm-starting each inner solve and
// applying the closed-form multiplier update between steps. The mask marks
// the phase whose constant is `constants.second` (the brighter one when the
// constants come from estimate_constants). When `constants` is absent they
// are estimated from f.
ScaleSequence run_bregman(const ImageGrid& f, double alpha, int K, GammaNorm g,
                          const SolverConfig& cfg,
                          std::optional<std::pair<double, double>> constants = std::nullopt,
                          RunTrace* trace = nullptr);

// Forward scale space: independent convex solves for a strictly descending
// alpha list, warm-started down the list. Masks grow along the list
// (coarse -> fine); alphas_effective stores the sweep's alphas.
ScaleSequence run_forward_sweep(const ImageGrid& f, const std::vector<double>& alphas,
                                GammaNorm g, const SolverConfig& cfg,
                                std::optional<std::pair<double, double>> constants = std::nullopt,
                                RunTrace* trace = nullptr);

// Default alpha list for sweeps: n log-spaced values from hi down to lo.
std::vector<double> log_spaced_alphas(double hi, double lo, int n);

}  // namespace msseg
