#pragma once

#include "msseg/gamma.hpp"
#include "msseg/grid.hpp"

namespace msseg {

// First-order primal-dual parameters. Defaults satisfy the step-size
// condition tau * sigma * 8 <= 1 with theta = 1.
struct SolverConfig {
  double tau = 0.35355339059327373;    // 1/sqrt(8)
  double sigma = 0.35355339059327373;  // 1/sqrt(8)
  double theta = 1.0;
  int max_inner_its = 1000;
  double tol = 1e-6;  // mean absolute change of u per pixel
  double mu = 0.5;    // binarization threshold

  void validate() const;
};

// Iterate of the inner solver; carrying all three fields across calls makes
// a warm restart continue the iteration sequence exactly.
struct InnerState {
  ImageGrid u;      // relaxed solution, kept in [0,1]
  ImageGrid u_bar;  // extrapolated iterate
  DualField p;      // dual variable, kept in the gamma* unit ball

  bool empty() const { return u.empty(); }
};

struct SolveStats {
  int iterations = 0;
  double last_change = 0.0;  // mean absolute change at the final iteration
};

// Pixelwise (f - c1)^2 - (f - c2)^2; negative where f is closer to c1, so
// minimizing u * data pulls u toward 1 on the c1-side phase.
ImageGrid data_term(const ImageGrid& f, double c1, double c2);

// clamp(u_tilde - (step/alpha) * (data - alpha * p_breg), 0, 1)
ImageGrid prox_primal(const ImageGrid& u_tilde, double step, const ImageGrid& data, double alpha,
                      const ImageGrid& p_breg);

// Binary mask: 1 where v >= mu.
ImageGrid threshold(const ImageGrid& v, double mu);

// Solves one Bregman subproblem
//   min_u  <u, data>/alpha - <u, p_breg> + TV_gamma(u)  s.t. u in [0,1]
// with data = (f-c1)^2 - (f-c2)^2, by dual ascent with the gamma* ball
// projection, primal descent with prox_primal and over-relaxation. c1 is the
// constant of the phase the mask marks. A default-constructed `warm` starts
// from zero. Stops after cfg.max_inner_its iterations or when the mean
// absolute change drops below cfg.tol.
//
// Throws NumericalDivergenceError when a non-finite value appears.
InnerState solve_inner(const ImageGrid& f, double c1, double c2, double alpha,
                       const ImageGrid& p_breg, InnerState warm, GammaNorm g,
                       const SolverConfig& cfg, SolveStats* stats = nullptr);

// Primal objective <u, data> + alpha * TV_gamma(u) - alpha * <u, p_breg>;
// used by the monotonicity checks.
double inner_energy(const ImageGrid& u, const ImageGrid& data, double alpha,
                    const ImageGrid& p_breg, GammaNorm g);

}  // namespace msseg
