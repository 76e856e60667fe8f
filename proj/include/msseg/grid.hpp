#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "msseg/errors.hpp"

namespace msseg {

// 2-D scalar field with row-major storage: index(x, y) = y * width + x,
// x = column in [0, width), y = row in [0, height).
class ImageGrid {
 public:
  ImageGrid() = default;
  ImageGrid(int width, int height, double fill = 0.0)
      : width_(width), height_(height), values_(static_cast<std::size_t>(width) * height, fill) {
    if (width < 1 || height < 1)
      throw InvalidArgumentError("ImageGrid: extent must be at least 1x1");
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  double& operator[](std::size_t i) { return values_[i]; }
  double operator[](std::size_t i) const { return values_[i]; }
  double& at(int x, int y) { return values_[idx(x, y)]; }
  double at(int x, int y) const { return values_[idx(x, y)]; }
  std::size_t idx(int x, int y) const { return static_cast<std::size_t>(y) * width_ + x; }

  double* data() { return values_.data(); }
  const double* data() const { return values_.data(); }
  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }

  bool same_extent(const ImageGrid& o) const { return width_ == o.width_ && height_ == o.height_; }

  bool all_finite() const {
    for (double v : values_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  friend bool operator==(const ImageGrid& a, const ImageGrid& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ && a.values_ == b.values_;
  }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> values_;
};

// Per-pixel 2-vector field, stored as two planes with the ImageGrid layout.
// Component x is the forward difference along rows (vertical), component y
// along columns (horizontal); gradient() keeps x zero on the last row and y
// zero on the last column.
class DualField {
 public:
  DualField() = default;
  DualField(int width, int height)
      : width_(width), height_(height),
        x_(static_cast<std::size_t>(width) * height, 0.0),
        y_(static_cast<std::size_t>(width) * height, 0.0) {
    if (width < 1 || height < 1)
      throw InvalidArgumentError("DualField: extent must be at least 1x1");
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return x_.size(); }

  double& x(std::size_t i) { return x_[i]; }
  double x(std::size_t i) const { return x_[i]; }
  double& y(std::size_t i) { return y_[i]; }
  double y(std::size_t i) const { return y_[i]; }
  std::size_t idx(int x, int y) const { return static_cast<std::size_t>(y) * width_ + x; }

  double* x_data() { return x_.data(); }
  const double* x_data() const { return x_.data(); }
  double* y_data() { return y_.data(); }
  const double* y_data() const { return y_.data(); }

  bool same_extent(const ImageGrid& g) const { return width_ == g.width() && height_ == g.height(); }
  bool same_extent(const DualField& o) const { return width_ == o.width_ && height_ == o.height_; }

  friend bool operator==(const DualField& a, const DualField& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ && a.x_ == b.x_ && a.y_ == b.y_;
  }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> x_;
  std::vector<double> y_;
};

// Forward-difference gradient with Neumann boundary (grid spacing 1).
DualField gradient(const ImageGrid& u);

// Exact negative adjoint of gradient(): <grad u, p> = -<u, div p> for every
// u and p. The slots gradient() never writes (x on the last row, y on the
// last column) are ignored.
ImageGrid divergence(const DualField& p);

// Upper bound for the squared operator norm of the gradient stencil.
inline double operator_norm_bound() { return 8.0; }

// Power-iteration estimate of the largest eigenvalue of grad^T grad; used by
// the verification suite to check the 8.0 bound.
double gradient_norm_estimate(int width, int height, int iterations = 200, unsigned seed = 1);

}  // namespace msseg
