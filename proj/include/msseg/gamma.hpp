#pragma once

#include <string>

#include "msseg/grid.hpp"

namespace msseg {

// Norm body applied to each per-pixel gradient vector inside the total
// variation. The dual unit ball determines the eigenfunction (Wulff) shape:
// L1 -> axis-aligned squares, L2 -> discs, Linf -> diamonds.
enum class GammaNorm { L1, L2, Linf };

GammaNorm gamma_from_string(const std::string& name);  // "l1" | "l2" | "linf"
const char* gamma_name(GammaNorm g);

// Dual pairing: dual(L1) = Linf, dual(L2) = L2, dual(Linf) = L1.
GammaNorm gamma_dual(GammaNorm g);

// gamma applied to one 2-vector.
double gamma_value(GammaNorm g, double zx, double zy);

// Dual norm gamma* of one 2-vector (the dual-ball gauge).
double gamma_dual_value(GammaNorm g, double zx, double zy);

// Discrete generalized total variation: sum of gamma over the forward-
// difference gradient.
double tv_value(GammaNorm g, const ImageGrid& u);

// Per-pixel Euclidean projection of one vector onto {z : gamma*(z) <= 1}.
// A tiny inflation of the inside test makes the projection bitwise
// idempotent while keeping gamma* <= 1 + 1e-12 feasibility.
void project_dual_vector(GammaNorm g, double& zx, double& zy);

DualField project_dual_ball(GammaNorm g, const DualField& p);

// Largest gamma* over all pixels; feasible dual fields have value <= 1.
double dual_ball_violation(GammaNorm g, const DualField& p);

// Eigenvalue of a disc indicator under the isotropic flow: Per/Area = 2/r.
double disc_eigenvalue(double radius);

// Diagnostic check of the curvature condition for indicator eigenfunctions:
// an indicator of a convex connected set is an eigenfunction when the maximal
// boundary curvature does not exceed Per/Area.
struct EigenfunctionReport {
  double perimeter = 0.0;      // interior boundary-segment count
  double area = 0.0;           // pixel count
  double max_curvature = 0.0;  // osculating-circle estimate along the traced boundary
  bool satisfied = false;      // max_curvature <= perimeter/area + tolerance
};

// mask must be binary with a single 4-connected foreground component.
// window is the boundary-smoothing and chord half-span in boundary pixels.
EigenfunctionReport check_eigenfunction_condition(const ImageGrid& mask, int window = 5,
                                                  double tolerance = 0.1);

}  // namespace msseg
