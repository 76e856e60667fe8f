#include "msseg/bregman.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace msseg {

namespace {

ImageGrid median3x3(const ImageGrid& f) {
  const int W = f.width(), H = f.height();
  ImageGrid m(W, H);
  double win[9];
  for (int y = 0; y < H; ++y)
    for (int x = 0; x < W; ++x) {
      int n = 0;
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
          const int xx = std::clamp(x + dx, 0, W - 1);
          const int yy = std::clamp(y + dy, 0, H - 1);
          win[n++] = f.at(xx, yy);
        }
      std::nth_element(win, win + 4, win + 9);
      m.at(x, y) = win[4];
    }
  return m;
}

// Signed data term with the mask-marked phase second: (f-c2)^2 - (f-c1)^2 is
// negative where f is nearer c2, so the solver grows the mask over that
// phase. estimate_constants orders (dark, bright), hence bright structures
// are segmented by default.
void check_constants(const std::pair<double, double>& c) {
  if (!std::isfinite(c.first) || !std::isfinite(c.second) || c.first == c.second)
    throw InvalidArgumentError("run: constants must be finite and distinct");
}

}  // namespace

std::pair<double, double> estimate_constants(const ImageGrid& f) {
  if (!f.all_finite()) throw InvalidArgumentError("estimate_constants: non-finite input");
  const ImageGrid m = median3x3(f);
  double mx = m[0];
  for (std::size_t i = 1; i < m.size(); ++i) mx = std::max(mx, m[i]);
  const double thr = 0.5 * mx;

  double lo_sum = 0.0, hi_sum = 0.0;
  std::size_t lo_n = 0, hi_n = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < thr) {
      lo_sum += m[i];
      ++lo_n;
    } else {
      hi_sum += m[i];
      ++hi_n;
    }
  }
  if (lo_n == 0 || hi_n == 0)
    throw DegenerateInputError(
        "estimate_constants: image has no two intensity classes (constant or single-level input)");
  const double c1 = lo_sum / static_cast<double>(lo_n);
  const double c2 = hi_sum / static_cast<double>(hi_n);
  if (!(c1 < c2))
    throw DegenerateInputError("estimate_constants: degenerate class means");
  return {c1, c2};
}

double effective_alpha(double alpha, int k) {
  if (k < 0) throw InvalidArgumentError("effective_alpha: negative step index");
  return alpha / static_cast<double>(k + 1);
}

ScaleSequence run_bregman(const ImageGrid& f, double alpha, int K, GammaNorm g,
                          const SolverConfig& cfg,
                          std::optional<std::pair<double, double>> constants, RunTrace* trace) {
  cfg.validate();
  if (K < 1) throw InvalidArgumentError("run_bregman: need at least one iteration");
  if (!(alpha > 0.0)) throw InvalidArgumentError("run_bregman: alpha must be positive");
  const auto [c_bg, c_fg] = constants ? *constants : estimate_constants(f);
  check_constants({c_bg, c_fg});

  const int W = f.width(), H = f.height();
  ImageGrid data = data_term(f, c_fg, c_bg);
  ImageGrid p_breg(W, H, 0.0);
  ImageGrid prev_mask(W, H, 0.0);
  InnerState state;  // zero start; warm across Bregman steps

  ScaleSequence seq;
  seq.masks.reserve(K);
  seq.phis.reserve(K);
  for (int k = 0; k < K; ++k) {
    SolveStats stats;
    try {
      state = solve_inner(f, c_fg, c_bg, alpha, p_breg, std::move(state), g, cfg, &stats);
    } catch (const NumericalDivergenceError& e) {
      throw NumericalDivergenceError(std::string(e.what()) + " (Bregman step " +
                                         std::to_string(k) + ")",
                                     e.inner_iteration, k);
    }

    ImageGrid mask = threshold(state.u, cfg.mu);
    ImageGrid phi(W, H);
    double response = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i) {
      phi[i] = mask[i] - prev_mask[i];
      response += std::abs(phi[i]);
    }
    seq.masks.push_back(mask);
    seq.phis.push_back(std::move(phi));
    seq.responses.push_back(response);
    seq.alphas_effective.push_back(effective_alpha(alpha, k));
    prev_mask = std::move(mask);

    // Closed-form multiplier update: p_{k+1} = p_k - data/alpha
    for (std::size_t i = 0; i < p_breg.size(); ++i) p_breg[i] -= data[i] / alpha;

    if (trace) {
      trace->inner_iterations.push_back(stats.iterations);
      trace->relaxed.push_back(state.u);
    }
  }
  return seq;
}

ScaleSequence run_forward_sweep(const ImageGrid& f, const std::vector<double>& alphas,
                                GammaNorm g, const SolverConfig& cfg,
                                std::optional<std::pair<double, double>> constants,
                                RunTrace* trace) {
  cfg.validate();
  if (alphas.empty()) throw InvalidArgumentError("run_forward_sweep: empty alpha list");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] > 0.0))
      throw InvalidArgumentError("run_forward_sweep: alphas must be positive");
    if (i > 0 && !(alphas[i] < alphas[i - 1]))
      throw InvalidArgumentError("run_forward_sweep: alphas must be strictly descending");
  }
  const auto [c_bg, c_fg] = constants ? *constants : estimate_constants(f);
  check_constants({c_bg, c_fg});

  const int W = f.width(), H = f.height();
  const ImageGrid p_zero(W, H, 0.0);
  ImageGrid prev_mask(W, H, 0.0);
  InnerState state;

  ScaleSequence seq;
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    SolveStats stats;
    try {
      state = solve_inner(f, c_fg, c_bg, alphas[j], p_zero, std::move(state), g, cfg, &stats);
    } catch (const NumericalDivergenceError& e) {
      throw NumericalDivergenceError(std::string(e.what()) + " (sweep position " +
                                         std::to_string(j) + ")",
                                     e.inner_iteration, static_cast<int>(j));
    }
    ImageGrid mask = threshold(state.u, cfg.mu);
    ImageGrid phi(W, H);
    double response = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i) {
      phi[i] = mask[i] - prev_mask[i];
      response += std::abs(phi[i]);
    }
    seq.masks.push_back(mask);
    seq.phis.push_back(std::move(phi));
    seq.responses.push_back(response);
    seq.alphas_effective.push_back(alphas[j]);
    prev_mask = std::move(mask);
    if (trace) {
      trace->inner_iterations.push_back(stats.iterations);
      trace->relaxed.push_back(state.u);
    }
  }
  return seq;
}

std::vector<double> log_spaced_alphas(double hi, double lo, int n) {
  if (!(hi > lo) || !(lo > 0.0) || n < 2)
    throw InvalidArgumentError("log_spaced_alphas: need hi > lo > 0 and n >= 2");
  std::vector<double> a(n);
  const double lh = std::log(hi), ll = std::log(lo);
  for (int i = 0; i < n; ++i)
    a[i] = std::exp(lh + (ll - lh) * static_cast<double>(i) / static_cast<double>(n - 1));
  return a;
}

}  // namespace msseg
