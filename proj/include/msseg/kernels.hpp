#pragma once

#include "msseg/gamma.hpp"

namespace msseg::kernels {

// Hot per-pixel sweeps of the primal-dual iteration. Scalar versions are the
// reference; the AVX2 versions must produce bitwise-identical fields (both
// are compiled without FP contraction). Reductions may differ in summation
// order only.
//
// Both kernels assume the canonical dual layout: the x plane is zero on the
// last row and the y plane is zero on the last column. dual_update preserves
// it and the solver establishes it on entry, which lets primal_update apply
// the uniform backward-difference divergence stencil.
struct KernelTable {
  const char* name;

  // p <- Proj_{gamma* <= 1}(p + sigma * grad(ubar)), rows [y0, y1)
  void (*dual_update)(GammaNorm g, double* px, double* py, const double* ubar, int W, int H,
                      double sigma, int y0, int y1);

  // u_new = clamp(u + tau * div(p) - force, 0, 1),
  // ubar  = u_new + theta * (u_new - u_old), rows [y0, y1);
  // returns sum |u_new - u_old| over the processed rows.
  double (*primal_update)(double* u, double* ubar, const double* px, const double* py,
                          const double* force, int W, int H, double tau, double theta, int y0,
                          int y1);
};

enum class Backend { scalar, avx2 };

bool backend_available(Backend b);

// Startup default: AVX2 when the CPU supports it, overridable with the
// MSSEG_SIMD environment variable ("auto" | "scalar" | "avx2").
Backend active_backend();
void set_backend(Backend b);

const KernelTable& table();
const KernelTable& table_for(Backend b);

extern const KernelTable scalar_table;
#if defined(__x86_64__) || defined(_M_X64)
extern const KernelTable avx2_table;
#endif

}  // namespace msseg::kernels
