#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>
#include <vector>

#include "msseg/gamma.hpp"

namespace msseg {

namespace {

// Moore neighborhood in clockwise order starting at West (y grows downward).
constexpr int kDX[8] = {-1, -1, 0, 1, 1, 1, 0, -1};
constexpr int kDY[8] = {0, -1, -1, -1, 0, 1, 1, 1};

int dir_index(int dx, int dy) {
  for (int d = 0; d < 8; ++d)
    if (kDX[d] == dx && kDY[d] == dy) return d;
  return -1;
}

// Clockwise Moore-neighbor boundary trace with Jacob's stopping criterion.
std::vector<std::pair<double, double>> trace_boundary(const ImageGrid& mask, int sx, int sy) {
  const int W = mask.width(), H = mask.height();
  auto fg = [&](int x, int y) {
    return x >= 0 && x < W && y >= 0 && y < H && mask.at(x, y) == 1.0;
  };

  std::vector<std::pair<double, double>> trace;
  int px = sx, py = sy;
  int back = 0;  // came from the West: start is the uppermost-leftmost pixel
  const int start_back = back;
  const long max_steps = 8L * static_cast<long>(mask.size()) + 16;

  trace.emplace_back(px, py);
  for (long step = 0; step < max_steps; ++step) {
    int found = -1;
    for (int k = 0; k < 8; ++k) {
      const int d = (back + k) % 8;
      if (fg(px + kDX[d], py + kDY[d])) {
        found = d;
        break;
      }
    }
    if (found < 0) break;  // isolated pixel

    const int prev = (found + 7) % 8;  // last background cell scanned
    const int bx = px + kDX[prev], by = py + kDY[prev];
    const int nx = px + kDX[found], ny = py + kDY[found];
    back = dir_index(bx - nx, by - ny);
    px = nx;
    py = ny;
    if (px == sx && py == sy && back == start_back) break;
    trace.emplace_back(px, py);
  }
  return trace;
}

std::vector<std::pair<double, double>> smooth_cyclic(const std::vector<std::pair<double, double>>& v,
                                                     int window, int passes) {
  const int n = static_cast<int>(v.size());
  const int half = window / 2;
  if (n < 3 || half < 1) return v;
  std::vector<std::pair<double, double>> cur = v, next(v.size());
  for (int pass = 0; pass < passes; ++pass) {
    for (int i = 0; i < n; ++i) {
      double sx = 0.0, sy = 0.0;
      for (int k = -half; k <= half; ++k) {
        const auto& q = cur[(i + k + n) % n];
        sx += q.first;
        sy += q.second;
      }
      next[i] = {sx / (2 * half + 1), sy / (2 * half + 1)};
    }
    cur.swap(next);
  }
  return cur;
}

double circumcircle_curvature(const std::pair<double, double>& a, const std::pair<double, double>& b,
                              const std::pair<double, double>& c) {
  const double abx = b.first - a.first, aby = b.second - a.second;
  const double acx = c.first - a.first, acy = c.second - a.second;
  const double bcx = c.first - b.first, bcy = c.second - b.second;
  const double cross = std::abs(abx * acy - aby * acx);
  const double lab = std::hypot(abx, aby);
  const double lac = std::hypot(acx, acy);
  const double lbc = std::hypot(bcx, bcy);
  const double denom = lab * lac * lbc;
  if (denom == 0.0) return 0.0;
  return 2.0 * cross / denom;
}

}  // namespace

EigenfunctionReport check_eigenfunction_condition(const ImageGrid& mask, int window,
                                                  double tolerance) {
  const int W = mask.width(), H = mask.height();
  long area = 0;
  int sx = -1, sy = -1;
  for (int y = 0; y < H; ++y)
    for (int x = 0; x < W; ++x) {
      const double v = mask.at(x, y);
      if (v != 0.0 && v != 1.0)
        throw InvalidArgumentError("check_eigenfunction_condition: mask must be binary");
      if (v == 1.0) {
        ++area;
        if (sx < 0) {
          sx = x;
          sy = y;
        }
      }
    }
  if (area == 0) throw DegenerateInputError("check_eigenfunction_condition: empty mask");

  // 4-connectivity check by flood fill from the first foreground pixel.
  {
    std::vector<char> seen(mask.size(), 0);
    std::vector<std::pair<int, int>> stack{{sx, sy}};
    seen[mask.idx(sx, sy)] = 1;
    long reached = 0;
    while (!stack.empty()) {
      auto [x, y] = stack.back();
      stack.pop_back();
      ++reached;
      const int nx4[4] = {x - 1, x + 1, x, x};
      const int ny4[4] = {y, y, y - 1, y + 1};
      for (int k = 0; k < 4; ++k) {
        const int nx = nx4[k], ny = ny4[k];
        if (nx < 0 || nx >= W || ny < 0 || ny >= H) continue;
        const std::size_t i = mask.idx(nx, ny);
        if (mask[i] == 1.0 && !seen[i]) {
          seen[i] = 1;
          stack.emplace_back(nx, ny);
        }
      }
    }
    if (reached != area)
      throw DegenerateInputError("check_eigenfunction_condition: mask is not connected");
  }

  EigenfunctionReport rep;
  rep.area = static_cast<double>(area);
  rep.perimeter = tv_value(GammaNorm::L1, mask);  // interior boundary-segment count

  if (rep.perimeter == 0.0) {
    // Full frame: Neumann boundary contributes no edges.
    rep.max_curvature = 0.0;
    rep.satisfied = true;
    return rep;
  }

  auto boundary = trace_boundary(mask, sx, sy);
  const int n = static_cast<int>(boundary.size());
  if (n >= 5) {
    auto sm = smooth_cyclic(boundary, window, 2);
    const int span = std::max(1, std::min(window, (n - 1) / 2));
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      const auto& a = sm[(i - span + n) % n];
      const auto& b = sm[i];
      const auto& c = sm[(i + span) % n];
      worst = std::max(worst, circumcircle_curvature(a, b, c));
    }
    rep.max_curvature = worst;
  } else {
    // A blob this small has no meaningful osculating circle; treat the
    // half-extent as the radius.
    rep.max_curvature = 1.0;
  }
  rep.satisfied = rep.max_curvature <= rep.perimeter / rep.area + tolerance;
  return rep;
}

}  // namespace msseg
