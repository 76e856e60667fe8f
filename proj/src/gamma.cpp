#include "msseg/gamma.hpp"

#include <algorithm>
#include <cmath>

namespace msseg {

namespace {
// Inflated inside-test threshold; see project_dual_vector.
constexpr double kInsideEps = 1e-14;
}  // namespace

GammaNorm gamma_from_string(const std::string& name) {
  if (name == "l1" || name == "L1") return GammaNorm::L1;
  if (name == "l2" || name == "L2") return GammaNorm::L2;
  if (name == "linf" || name == "Linf" || name == "LInf") return GammaNorm::Linf;
  throw InvalidArgumentError("unknown gamma norm '" + name + "' (expected l1, l2 or linf)");
}

const char* gamma_name(GammaNorm g) {
  switch (g) {
    case GammaNorm::L1: return "l1";
    case GammaNorm::L2: return "l2";
    case GammaNorm::Linf: return "linf";
  }
  return "?";
}

GammaNorm gamma_dual(GammaNorm g) {
  switch (g) {
    case GammaNorm::L1: return GammaNorm::Linf;
    case GammaNorm::L2: return GammaNorm::L2;
    case GammaNorm::Linf: return GammaNorm::L1;
  }
  return GammaNorm::L2;
}

double gamma_value(GammaNorm g, double zx, double zy) {
  switch (g) {
    case GammaNorm::L1: return std::abs(zx) + std::abs(zy);
    case GammaNorm::L2: return std::sqrt(zx * zx + zy * zy);
    case GammaNorm::Linf: return std::max(std::abs(zx), std::abs(zy));
  }
  return 0.0;
}

double gamma_dual_value(GammaNorm g, double zx, double zy) {
  return gamma_value(gamma_dual(g), zx, zy);
}

double tv_value(GammaNorm g, const ImageGrid& u) {
  const int W = u.width(), H = u.height();
  double sum = 0.0;
  for (int y = 0; y < H; ++y) {
    const double* row = u.data() + u.idx(0, y);
    const double* next = (y + 1 < H) ? u.data() + u.idx(0, y + 1) : nullptr;
    for (int x = 0; x < W; ++x) {
      const double gx = next ? next[x] - row[x] : 0.0;
      const double gy = (x + 1 < W) ? row[x + 1] - row[x] : 0.0;
      sum += gamma_value(g, gx, gy);
    }
  }
  return sum;
}

void project_dual_vector(GammaNorm g, double& zx, double& zy) {
  switch (g) {
    case GammaNorm::L2: {
      // dual ball = Euclidean disc
      const double n2 = zx * zx + zy * zy;
      if (n2 > 1.0 + kInsideEps) {
        const double s = 1.0 / std::sqrt(n2);
        zx *= s;
        zy *= s;
      }
      return;
    }
    case GammaNorm::L1: {
      // dual ball = Linf box, projection is a componentwise clamp
      zx = std::min(1.0, std::max(-1.0, zx));
      zy = std::min(1.0, std::max(-1.0, zy));
      return;
    }
    case GammaNorm::Linf: {
      // dual ball = L1 diamond; closed-form Euclidean projection in 2-D
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
      return;
    }
  }
}

DualField project_dual_ball(GammaNorm g, const DualField& p) {
  DualField q = p;
  for (std::size_t i = 0; i < q.size(); ++i) project_dual_vector(g, q.x(i), q.y(i));
  return q;
}

double dual_ball_violation(GammaNorm g, const DualField& p) {
  double worst = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    worst = std::max(worst, gamma_dual_value(g, p.x(i), p.y(i)));
  return worst;
}

double disc_eigenvalue(double radius) {
  if (!(radius > 0.0)) throw InvalidArgumentError("disc_eigenvalue: radius must be positive");
  return 2.0 / radius;
}

}  // namespace msseg
