#include "msseg/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "msseg/kernels.hpp"
#include "msseg/parallel.hpp"

namespace msseg {

void SolverConfig::validate() const {
  if (!(tau > 0.0) || !(sigma > 0.0))
    throw InvalidArgumentError("SolverConfig: tau and sigma must be positive");
  if (tau * sigma * operator_norm_bound() > 1.0 + 1e-12)
    throw InvalidArgumentError("SolverConfig: tau*sigma*8 must not exceed 1");
  if (theta < 0.0 || theta > 1.0)
    throw InvalidArgumentError("SolverConfig: theta must lie in [0,1]");
  if (max_inner_its < 0) throw InvalidArgumentError("SolverConfig: negative iteration budget");
  if (!(tol >= 0.0)) throw InvalidArgumentError("SolverConfig: tolerance must be non-negative");
  if (!(mu > 0.0 && mu < 1.0)) throw InvalidArgumentError("SolverConfig: mu must lie in (0,1)");
}

ImageGrid data_term(const ImageGrid& f, double c1, double c2) {
  ImageGrid d(f.width(), f.height());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double a = f[i] - c1;
    const double b = f[i] - c2;
    d[i] = a * a - b * b;
  }
  return d;
}

ImageGrid prox_primal(const ImageGrid& u_tilde, double step, const ImageGrid& data, double alpha,
                      const ImageGrid& p_breg) {
  if (!(step > 0.0) || !(alpha > 0.0))
    throw InvalidArgumentError("prox_primal: step and alpha must be positive");
  ImageGrid u(u_tilde.width(), u_tilde.height());
  const double s = step / alpha;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double v = u_tilde[i] - s * (data[i] - alpha * p_breg[i]);
    u[i] = std::min(1.0, std::max(0.0, v));
  }
  return u;
}

ImageGrid threshold(const ImageGrid& v, double mu) {
  ImageGrid m(v.width(), v.height());
  for (std::size_t i = 0; i < v.size(); ++i) m[i] = v[i] >= mu ? 1.0 : 0.0;
  return m;
}

InnerState solve_inner(const ImageGrid& f, double c1, double c2, double alpha,
                       const ImageGrid& p_breg, InnerState warm, GammaNorm g,
                       const SolverConfig& cfg, SolveStats* stats) {
  cfg.validate();
  if (!(alpha > 0.0)) throw InvalidArgumentError("solve_inner: alpha must be positive");
  const int W = f.width(), H = f.height();
  if (!p_breg.same_extent(f)) throw InvalidArgumentError("solve_inner: p_breg extent mismatch");

  if (warm.empty()) {
    warm.u = ImageGrid(W, H, 0.0);
    warm.u_bar = warm.u;
    warm.p = DualField(W, H);
  } else if (!warm.u.same_extent(f) || !warm.p.same_extent(f)) {
    throw InvalidArgumentError("solve_inner: warm state extent mismatch");
  }

  // Canonicalize the warm state: out-of-range dual slots are outside the
  // gradient's range and must stay zero for the fast divergence stencil.
  for (int x = 0; x < W; ++x) warm.p.x(warm.p.idx(x, H - 1)) = 0.0;
  for (int y = 0; y < H; ++y) warm.p.y(warm.p.idx(W - 1, y)) = 0.0;

  // force = (tau/alpha) * (data - alpha * p_breg), fixed during the solve
  ImageGrid force(W, H);
  {
    const double s = cfg.tau / alpha;
    for (std::size_t i = 0; i < force.size(); ++i) {
      const double a = f[i] - c1;
      const double b = f[i] - c2;
      force[i] = s * ((a * a - b * b) - alpha * p_breg[i]);
    }
  }

  const auto& K = kernels::table();
  const std::size_t npix = f.size();
  std::vector<double> partial(static_cast<std::size_t>(max_chunks()), 0.0);
  double last_change = 0.0;
  int iters = 0;

  for (int n = 0; n < cfg.max_inner_its; ++n) {
    parallel_rows(H, [&](int y0, int y1, int) {
      K.dual_update(g, warm.p.x_data(), warm.p.y_data(), warm.u_bar.data(), W, H, cfg.sigma, y0,
                    y1);
    });
    std::fill(partial.begin(), partial.end(), 0.0);
    parallel_rows(H, [&](int y0, int y1, int chunk) {
      partial[chunk] = K.primal_update(warm.u.data(), warm.u_bar.data(), warm.p.x_data(),
                                       warm.p.y_data(), force.data(), W, H, cfg.tau, cfg.theta,
                                       y0, y1);
    });
    double change = 0.0;
    for (double c : partial) change += c;
    if (!std::isfinite(change))
      throw NumericalDivergenceError(
          "solve_inner: non-finite iterate at inner iteration " + std::to_string(n), n);
    last_change = change / static_cast<double>(npix);
    iters = n + 1;
    if (last_change < cfg.tol) break;
  }

  if (stats) {
    stats->iterations = iters;
    stats->last_change = last_change;
  }
  return warm;
}

double inner_energy(const ImageGrid& u, const ImageGrid& data, double alpha,
                    const ImageGrid& p_breg, GammaNorm g) {
  double e = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) e += u[i] * (data[i] - alpha * p_breg[i]);
  return e + alpha * tv_value(g, u);
}

}  // namespace msseg
