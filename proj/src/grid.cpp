#include "msseg/grid.hpp"

#include <cmath>
#include <random>

namespace msseg {

DualField gradient(const ImageGrid& u) {
  const int W = u.width(), H = u.height();
  DualField g(W, H);
  for (int y = 0; y < H; ++y) {
    const double* row = u.data() + u.idx(0, y);
    const double* next = (y + 1 < H) ? u.data() + u.idx(0, y + 1) : nullptr;
    double* gx = g.x_data() + g.idx(0, y);
    double* gy = g.y_data() + g.idx(0, y);
    for (int x = 0; x < W; ++x) {
      gx[x] = next ? next[x] - row[x] : 0.0;
      gy[x] = (x + 1 < W) ? row[x + 1] - row[x] : 0.0;
    }
  }
  return g;
}

ImageGrid divergence(const DualField& p) {
  const int W = p.width(), H = p.height();
  ImageGrid d(W, H);
  for (int y = 0; y < H; ++y) {
    for (int x = 0; x < W; ++x) {
      double v = 0.0;
      if (y + 1 < H) v += p.x(p.idx(x, y));
      if (y > 0) v -= p.x(p.idx(x, y - 1));
      if (x + 1 < W) v += p.y(p.idx(x, y));
      if (x > 0) v -= p.y(p.idx(x - 1, y));
      d[d.idx(x, y)] = v;
    }
  }
  return d;
}

double gradient_norm_estimate(int width, int height, int iterations, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ImageGrid v(width, height);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = dist(rng);

  double lambda = 0.0;
  for (int it = 0; it < iterations; ++it) {
    double norm = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) norm += v[i] * v[i];
    norm = std::sqrt(norm);
    if (norm == 0.0) return 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] /= norm;

    // w = grad^T grad v = -div(grad v)
    ImageGrid w = divergence(gradient(v));
    lambda = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      w[i] = -w[i];
      lambda += v[i] * w[i];
    }
    v = w;
  }
  return lambda;
}

}  // namespace msseg
