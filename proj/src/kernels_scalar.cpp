// Reference kernels. This translation unit is compiled with FP contraction
// disabled so the AVX2 variants can match it bitwise.

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "msseg/kernels.hpp"

namespace msseg::kernels {

namespace {

constexpr double kInsideEps = 1e-14;  // keep in sync with project_dual_vector

template <GammaNorm G>
inline void project(double& zx, double& zy) {
  if constexpr (G == GammaNorm::L2) {
    const double n2 = zx * zx + zy * zy;
    if (n2 > 1.0 + kInsideEps) {
      const double s = 1.0 / std::sqrt(n2);
      zx *= s;
      zy *= s;
    }
  } else if constexpr (G == GammaNorm::L1) {
    zx = std::min(1.0, std::max(-1.0, zx));
    zy = std::min(1.0, std::max(-1.0, zy));
  } else {
    const double ax = std::abs(zx), ay = std::abs(zy);
    if (ax + ay <= 1.0 + kInsideEps) return;
    const double sx = zx < 0 ? -1.0 : 1.0;
    const double sy = zy < 0 ? -1.0 : 1.0;
    if (ax - ay > 1.0) {
      zx = sx;
      zy = 0.0;
    } else if (ay - ax > 1.0) {
      zx = 0.0;
      zy = sy;
    } else {
      const double t = (ax + ay - 1.0) / 2.0;
      zx = sx * (ax - t);
      zy = sy * (ay - t);
    }
  }
}

template <GammaNorm G>
void dual_update_rows(double* px, double* py, const double* ubar, int W, int H, double sigma,
                      int y0, int y1) {
  for (int y = y0; y < y1; ++y) {
    const std::size_t off = static_cast<std::size_t>(y) * W;
    const double* row = ubar + off;
    const double* next = (y + 1 < H) ? row + W : nullptr;
    double* rx = px + off;
    double* ry = py + off;
    for (int x = 0; x < W; ++x) {
      const double gx = next ? next[x] - row[x] : 0.0;
      const double gy = (x + 1 < W) ? row[x + 1] - row[x] : 0.0;
      double vx = rx[x] + sigma * gx;
      double vy = ry[x] + sigma * gy;
      project<G>(vx, vy);
      rx[x] = vx;
      ry[x] = vy;
    }
  }
}

void dual_update(GammaNorm g, double* px, double* py, const double* ubar, int W, int H,
                 double sigma, int y0, int y1) {
  switch (g) {
    case GammaNorm::L1: dual_update_rows<GammaNorm::L1>(px, py, ubar, W, H, sigma, y0, y1); break;
    case GammaNorm::L2: dual_update_rows<GammaNorm::L2>(px, py, ubar, W, H, sigma, y0, y1); break;
    case GammaNorm::Linf:
      dual_update_rows<GammaNorm::Linf>(px, py, ubar, W, H, sigma, y0, y1);
      break;
  }
}

double primal_update(double* u, double* ubar, const double* px, const double* py,
                     const double* force, int W, int H, double tau, double theta, int y0, int y1) {
  (void)H;
  double change = 0.0;
  for (int y = y0; y < y1; ++y) {
    const std::size_t off = static_cast<std::size_t>(y) * W;
    const double* pxr = px + off;
    const double* pxm = (y > 0) ? pxr - W : nullptr;
    const double* pyr = py + off;
    double* ur = u + off;
    double* br = ubar + off;
    for (int x = 0; x < W; ++x) {
      double div = pxr[x] + pyr[x];
      if (pxm) div -= pxm[x];
      if (x > 0) div -= pyr[x - 1];
      const double old = ur[x];
      double v = old + tau * div - force[off + x];
      v = std::min(1.0, std::max(0.0, v));
      ur[x] = v;
      br[x] = v + theta * (v - old);
      change += std::abs(v - old);
    }
  }
  return change;
}

}  // namespace

const KernelTable scalar_table = {"scalar", dual_update, primal_update};

}  // namespace msseg::kernels
