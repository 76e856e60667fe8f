// AVX2 variants of the solver kernels (4 doubles per vector). Arithmetic
// mirrors kernels_scalar.cpp operation for operation, so the resulting
// fields are bitwise identical to the scalar reference; only the change
// reduction may round differently. Compiled with -mavx2, executed only when
// runtime dispatch selected the avx2 backend.

#include "msseg/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace msseg::kernels {

namespace {

constexpr double kInsideEps = 1e-14;

inline __m256d vabs(__m256d v) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v); }

inline __m256d vsign(__m256d v) {
  // +-1 with the sign bit of v; only used where the -0 lane cannot matter
  return _mm256_or_pd(_mm256_and_pd(v, _mm256_set1_pd(-0.0)), _mm256_set1_pd(1.0));
}

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

template <GammaNorm G>
inline void project_vec(__m256d& vx, __m256d& vy) {
  const __m256d one = _mm256_set1_pd(1.0);
  if constexpr (G == GammaNorm::L2) {
    const __m256d n2 = _mm256_add_pd(_mm256_mul_pd(vx, vx), _mm256_mul_pd(vy, vy));
    const __m256d outside = _mm256_cmp_pd(n2, _mm256_set1_pd(1.0 + kInsideEps), _CMP_GT_OQ);
    const __m256d s = _mm256_div_pd(one, _mm256_sqrt_pd(n2));
    vx = _mm256_blendv_pd(vx, _mm256_mul_pd(vx, s), outside);
    vy = _mm256_blendv_pd(vy, _mm256_mul_pd(vy, s), outside);
  } else if constexpr (G == GammaNorm::L1) {
    const __m256d neg = _mm256_set1_pd(-1.0);
    vx = _mm256_min_pd(one, _mm256_max_pd(neg, vx));
    vy = _mm256_min_pd(one, _mm256_max_pd(neg, vy));
  } else {
    const __m256d ax = vabs(vx), ay = vabs(vy);
    const __m256d sum = _mm256_add_pd(ax, ay);
    const __m256d inside = _mm256_cmp_pd(sum, _mm256_set1_pd(1.0 + kInsideEps), _CMP_LE_OQ);
    const __m256d sx = vsign(vx), sy = vsign(vy);
    const __m256d case_a = _mm256_cmp_pd(_mm256_sub_pd(ax, ay), one, _CMP_GT_OQ);
    const __m256d case_b = _mm256_cmp_pd(_mm256_sub_pd(ay, ax), one, _CMP_GT_OQ);
    const __m256d t = _mm256_div_pd(_mm256_sub_pd(sum, one), _mm256_set1_pd(2.0));
    __m256d gx = _mm256_mul_pd(sx, _mm256_sub_pd(ax, t));
    __m256d gy = _mm256_mul_pd(sy, _mm256_sub_pd(ay, t));
    const __m256d zero = _mm256_setzero_pd();
    gx = _mm256_blendv_pd(gx, sx, case_a);
    gy = _mm256_blendv_pd(gy, zero, case_a);
    gx = _mm256_blendv_pd(gx, zero, case_b);
    gy = _mm256_blendv_pd(gy, sy, case_b);
    vx = _mm256_blendv_pd(gx, vx, inside);
    vy = _mm256_blendv_pd(gy, vy, inside);
  }
}

template <GammaNorm G>
inline void project_scalar(double& zx, double& zy) {
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
  const __m256d vsigma = _mm256_set1_pd(sigma);
  for (int y = y0; y < y1; ++y) {
    const std::size_t off = static_cast<std::size_t>(y) * W;
    const double* row = ubar + off;
    const double* next = (y + 1 < H) ? row + W : nullptr;
    double* rx = px + off;
    double* ry = py + off;
    int x = 0;
    for (; x + 5 <= W; x += 4) {
      const __m256d r = _mm256_loadu_pd(row + x);
      const __m256d gx = next ? _mm256_sub_pd(_mm256_loadu_pd(next + x), r) : _mm256_setzero_pd();
      const __m256d gy = _mm256_sub_pd(_mm256_loadu_pd(row + x + 1), r);
      __m256d vx = _mm256_add_pd(_mm256_loadu_pd(rx + x), _mm256_mul_pd(vsigma, gx));
      __m256d vy = _mm256_add_pd(_mm256_loadu_pd(ry + x), _mm256_mul_pd(vsigma, gy));
      project_vec<G>(vx, vy);
      _mm256_storeu_pd(rx + x, vx);
      _mm256_storeu_pd(ry + x, vy);
    }
    for (; x < W; ++x) {
      const double gx = next ? next[x] - row[x] : 0.0;
      const double gy = (x + 1 < W) ? row[x + 1] - row[x] : 0.0;
      double vx = rx[x] + sigma * gx;
      double vy = ry[x] + sigma * gy;
      project_scalar<G>(vx, vy);
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
  const __m256d vtau = _mm256_set1_pd(tau);
  const __m256d vtheta = _mm256_set1_pd(theta);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d vacc = zero;
  double change = 0.0;

  auto scalar_px = [&](const double* pxr, const double* pxm, const double* pyr, double* ur,
                       double* br, const double* fr, int x) {
    double div = pxr[x] + pyr[x];
    if (pxm) div -= pxm[x];
    if (x > 0) div -= pyr[x - 1];
    const double old = ur[x];
    double v = old + tau * div - fr[x];
    v = std::min(1.0, std::max(0.0, v));
    ur[x] = v;
    br[x] = v + theta * (v - old);
    change += std::abs(v - old);
  };

  for (int y = y0; y < y1; ++y) {
    const std::size_t off = static_cast<std::size_t>(y) * W;
    const double* pxr = px + off;
    const double* pxm = (y > 0) ? pxr - W : nullptr;
    const double* pyr = py + off;
    const double* fr = force + off;
    double* ur = u + off;
    double* br = ubar + off;

    scalar_px(pxr, pxm, pyr, ur, br, fr, 0);
    int x = 1;
    for (; x + 4 <= W; x += 4) {
      __m256d div = _mm256_add_pd(_mm256_loadu_pd(pxr + x), _mm256_loadu_pd(pyr + x));
      if (pxm) div = _mm256_sub_pd(div, _mm256_loadu_pd(pxm + x));
      div = _mm256_sub_pd(div, _mm256_loadu_pd(pyr + x - 1));
      const __m256d old = _mm256_loadu_pd(ur + x);
      __m256d v = _mm256_sub_pd(_mm256_add_pd(old, _mm256_mul_pd(vtau, div)),
                                _mm256_loadu_pd(fr + x));
      v = _mm256_min_pd(one, _mm256_max_pd(zero, v));
      _mm256_storeu_pd(ur + x, v);
      const __m256d d = _mm256_sub_pd(v, old);
      _mm256_storeu_pd(br + x, _mm256_add_pd(v, _mm256_mul_pd(vtheta, d)));
      vacc = _mm256_add_pd(vacc, vabs(d));
    }
    for (; x < W; ++x) scalar_px(pxr, pxm, pyr, ur, br, fr, x);
  }
  return change + hsum(vacc);
}

}  // namespace

const KernelTable avx2_table = {"avx2", dual_update, primal_update};

}  // namespace msseg::kernels

#endif  // x86_64
