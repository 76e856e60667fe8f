#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "msseg/grid.hpp"

namespace msseg {

enum class ShapeKind { disc, square, diamond, rectangle, triangle };

// One painted shape. Sizes are in pixels:
//   disc     a = radius
//   square   a = side (half-open interval [c - a/2, c + a/2))
//   diamond  a = radius of the |dx|+|dy| <= a ball
//   rectangle  a = width, b = height (half-open)
//   triangle   a = base, b = height, apex pointing up
struct Shape {
  ShapeKind kind = ShapeKind::disc;
  double cx = 0.0;
  double cy = 0.0;
  double a = 0.0;
  double b = 0.0;
  double intensity = 1.0;

  bool contains(double x, double y) const;
};

// Deterministic synthetic scene. Identical (spec, seed) renders bit-identical
// images on any platform; Gaussian noise is counter-based (splitmix64 + Box-
// Muller) and applied per pixel without clamping.
struct SceneSpec {
  int width = 0;
  int height = 0;
  double background = 0.0;
  double noise_sigma = 0.0;
  std::uint64_t seed = 0;
  std::vector<Shape> shapes;

  void validate() const;
};

ImageGrid render(const SceneSpec& spec);

// i-th value of the seeded splitmix64 counter stream, and the derived
// standard normal draw for pixel index p (two counter values per pixel).
std::uint64_t counter_rng(std::uint64_t seed, std::uint64_t i);
double gaussian_at(std::uint64_t seed, std::uint64_t pixel_index);

// Documented preset catalogue. Names:
//   size-discs intensity-discs ambiguity-0.68 ambiguity-0.69 ambiguity-0.70
//   noisy-squares-<sigma> (sigma in {0, 0.25, 0.5, 0.75, 1})
//   eigenshapes-l1 eigenshapes-l2 eigenshapes-linf
//   non-wulff-rect mixed-shapes arms-network
// All geometry (grid sizes, radii, positions) is calibrated for this
// implementation; see the preset table in the README.
SceneSpec preset(const std::string& name);

std::vector<std::string> preset_names();

// Plain-text scene serialization (key: value lines plus one line per shape).
std::string scene_to_text(const SceneSpec& spec);
SceneSpec scene_from_text(const std::string& text);

}  // namespace msseg
