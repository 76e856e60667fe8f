#include "msseg/phantom.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace msseg {

namespace {

constexpr std::uint64_t kStreamGamma = 0x9E3779B97F4A7C15ull;

const char* kind_name(ShapeKind k) {
  switch (k) {
    case ShapeKind::disc: return "disc";
    case ShapeKind::square: return "square";
    case ShapeKind::diamond: return "diamond";
    case ShapeKind::rectangle: return "rectangle";
    case ShapeKind::triangle: return "triangle";
  }
  return "?";
}

ShapeKind kind_from_name(const std::string& s) {
  if (s == "disc") return ShapeKind::disc;
  if (s == "square") return ShapeKind::square;
  if (s == "diamond") return ShapeKind::diamond;
  if (s == "rectangle") return ShapeKind::rectangle;
  if (s == "triangle") return ShapeKind::triangle;
  throw InvalidArgumentError("scene: unknown shape kind '" + s + "'");
}

bool two_sizes(ShapeKind k) { return k == ShapeKind::rectangle || k == ShapeKind::triangle; }

struct BBox {
  double x0, x1, y0, y1;
};

BBox shape_bbox(const Shape& s) {
  switch (s.kind) {
    case ShapeKind::disc: return {s.cx - s.a, s.cx + s.a, s.cy - s.a, s.cy + s.a};
    case ShapeKind::diamond: return {s.cx - s.a, s.cx + s.a, s.cy - s.a, s.cy + s.a};
    case ShapeKind::square:
      return {s.cx - s.a / 2, s.cx + s.a / 2, s.cy - s.a / 2, s.cy + s.a / 2};
    case ShapeKind::rectangle:
      return {s.cx - s.a / 2, s.cx + s.a / 2, s.cy - s.b / 2, s.cy + s.b / 2};
    case ShapeKind::triangle:
      return {s.cx - s.a / 2, s.cx + s.a / 2, s.cy - s.b / 2, s.cy + s.b / 2};
  }
  return {0, 0, 0, 0};
}

}  // namespace

bool Shape::contains(double x, double y) const {
  const double dx = x - cx, dy = y - cy;
  switch (kind) {
    case ShapeKind::disc: return dx * dx + dy * dy <= a * a;
    case ShapeKind::square: return dx >= -a / 2 && dx < a / 2 && dy >= -a / 2 && dy < a / 2;
    case ShapeKind::diamond: return std::abs(dx) + std::abs(dy) <= a;
    case ShapeKind::rectangle: return dx >= -a / 2 && dx < a / 2 && dy >= -b / 2 && dy < b / 2;
    case ShapeKind::triangle: {
      const double from_top = dy + b / 2;  // 0 at the apex row
      if (from_top < 0.0 || from_top > b) return false;
      return std::abs(dx) <= (a / 2) * (from_top / b);
    }
  }
  return false;
}

void SceneSpec::validate() const {
  if (width < 1 || height < 1) throw InvalidArgumentError("scene: extent must be at least 1x1");
  if (!(background >= 0.0 && background < 1.0))
    throw InvalidArgumentError("scene: background must lie in [0,1)");
  if (!(noise_sigma >= 0.0)) throw InvalidArgumentError("scene: negative noise sigma");
  for (const Shape& s : shapes) {
    if (!(s.intensity > 0.0 && s.intensity <= 1.0))
      throw InvalidArgumentError("scene: shape intensity must lie in (0,1]");
    if (!(s.a > 0.0) || (two_sizes(s.kind) && !(s.b > 0.0)))
      throw InvalidArgumentError("scene: shape size must be positive");
    const BBox bb = shape_bbox(s);
    if (bb.x0 < 0.0 || bb.y0 < 0.0 || bb.x1 > width - 1.0 || bb.y1 > height - 1.0)
      throw InvalidArgumentError("scene: shape extends outside the image extent");
  }
}

std::uint64_t counter_rng(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + (i + 1) * kStreamGamma;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double gaussian_at(std::uint64_t seed, std::uint64_t pixel_index) {
  // top 53 bits shifted into (0,1]; u1 > 0 keeps the log finite
  const double u1 =
      static_cast<double>((counter_rng(seed, 2 * pixel_index) >> 11) + 1) * 0x1.0p-53;
  const double u2 =
      static_cast<double>((counter_rng(seed, 2 * pixel_index + 1) >> 11) + 1) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
}

ImageGrid render(const SceneSpec& spec) {
  spec.validate();
  ImageGrid f(spec.width, spec.height, spec.background);
  for (const Shape& s : spec.shapes) {
    const BBox bb = shape_bbox(s);
    const int x0 = std::max(0, static_cast<int>(std::floor(bb.x0)));
    const int x1 = std::min(spec.width - 1, static_cast<int>(std::ceil(bb.x1)));
    const int y0 = std::max(0, static_cast<int>(std::floor(bb.y0)));
    const int y1 = std::min(spec.height - 1, static_cast<int>(std::ceil(bb.y1)));
    for (int y = y0; y <= y1; ++y)
      for (int x = x0; x <= x1; ++x)
        if (s.contains(x, y)) f.at(x, y) = s.intensity;
  }
  if (spec.noise_sigma > 0.0) {
    for (std::size_t i = 0; i < f.size(); ++i)
      f[i] += spec.noise_sigma * gaussian_at(spec.seed, i);
  }
  return f;
}

namespace {

SceneSpec four_blob_scene(ShapeKind kind, double s0, double s1, double s2, double s3) {
  SceneSpec spec;
  spec.width = 256;
  spec.height = 256;
  spec.shapes = {
      {kind, 64, 64, s0, 0, 1.0},
      {kind, 192, 64, s1, 0, 1.0},
      {kind, 64, 192, s2, 0, 1.0},
      {kind, 192, 192, s3, 0, 1.0},
  };
  return spec;
}

SceneSpec ambiguity_scene(double large_intensity) {
  // Radii tuned so that at alpha = 200 the small bright disc and the large
  // dim one at intensity 0.68 enter the segmentation at the same step.
  SceneSpec spec;
  spec.width = 256;
  spec.height = 256;
  spec.shapes = {
      {ShapeKind::disc, 80, 128, 26, 0, large_intensity},
      {ShapeKind::disc, 176, 128, 13, 0, 1.0},
  };
  return spec;
}

}  // namespace

SceneSpec preset(const std::string& name) {
  if (name == "size-discs") {
    auto s = four_blob_scene(ShapeKind::disc, 42, 30, 21, 15);
    return s;
  }
  if (name == "intensity-discs") {
    auto s = four_blob_scene(ShapeKind::disc, 30, 30, 30, 30);
    s.shapes[0].intensity = 1.00;
    s.shapes[1].intensity = 0.85;
    s.shapes[2].intensity = 0.70;
    s.shapes[3].intensity = 0.55;
    return s;
  }
  if (name == "ambiguity-0.68") return ambiguity_scene(0.68);
  if (name == "ambiguity-0.69") return ambiguity_scene(0.69);
  if (name == "ambiguity-0.70") return ambiguity_scene(0.70);
  if (name.rfind("noisy-squares-", 0) == 0) {
    const std::string sig = name.substr(14);
    double sigma = -1.0;
    if (sig == "0") sigma = 0.0;
    else if (sig == "0.25") sigma = 0.25;
    else if (sig == "0.5") sigma = 0.5;
    else if (sig == "0.75") sigma = 0.75;
    else if (sig == "1") sigma = 1.0;
    if (sigma < 0.0) throw InvalidArgumentError("preset: unknown noise level in '" + name + "'");
    auto s = four_blob_scene(ShapeKind::square, 64, 44, 30, 20);
    s.noise_sigma = sigma;
    s.seed = 20250810;
    return s;
  }
  if (name == "eigenshapes-l1") {
    // Wulff shapes of the l1 dual ball: diamonds; segment with gamma = linf.
    return four_blob_scene(ShapeKind::diamond, 44, 30, 21, 14);
  }
  if (name == "eigenshapes-l2") {
    return four_blob_scene(ShapeKind::disc, 42, 30, 21, 15);
  }
  if (name == "eigenshapes-linf") {
    // Wulff shapes of the linf dual ball: squares; segment with gamma = l1.
    return four_blob_scene(ShapeKind::square, 64, 44, 30, 20);
  }
  if (name == "non-wulff-rect") {
    SceneSpec s;
    s.width = 256;
    s.height = 256;
    s.shapes = {{ShapeKind::rectangle, 128, 128, 120, 50, 1.0}};
    return s;
  }
  if (name == "mixed-shapes") {
    SceneSpec s;
    s.width = 256;
    s.height = 256;
    s.shapes = {
        {ShapeKind::disc, 60, 60, 28, 0, 1.0},
        {ShapeKind::disc, 204, 48, 16, 0, 1.0},
        {ShapeKind::square, 52, 200, 44, 0, 1.0},
        {ShapeKind::square, 206, 202, 26, 0, 1.0},
        {ShapeKind::triangle, 128, 130, 96, 84, 1.0},
    };
    return s;
  }
  if (name == "arms-network") {
    SceneSpec s;
    s.width = 256;
    s.height = 256;
    s.shapes = {
        {ShapeKind::disc, 128, 128, 24, 0, 1.0},
        {ShapeKind::rectangle, 188, 128, 72, 16, 1.0},
        {ShapeKind::rectangle, 128, 68, 10, 72, 1.0},
        {ShapeKind::rectangle, 68, 128, 72, 6, 1.0},
        {ShapeKind::rectangle, 128, 188, 4, 72, 1.0},
    };
    return s;
  }
  throw InvalidArgumentError("preset: unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
  return {"size-discs",      "intensity-discs", "ambiguity-0.68",  "ambiguity-0.69",
          "ambiguity-0.70",  "noisy-squares-0", "noisy-squares-0.25", "noisy-squares-0.5",
          "noisy-squares-0.75", "noisy-squares-1", "eigenshapes-l1",  "eigenshapes-l2",
          "eigenshapes-linf", "non-wulff-rect",  "mixed-shapes",    "arms-network"};
}

std::string scene_to_text(const SceneSpec& spec) {
  std::ostringstream out;
  char buf[256];
  out << "extent: " << spec.width << " " << spec.height << "\n";
  std::snprintf(buf, sizeof buf, "background: %.17g\n", spec.background);
  out << buf;
  std::snprintf(buf, sizeof buf, "noise_sigma: %.17g\n", spec.noise_sigma);
  out << buf;
  out << "seed: " << spec.seed << "\n";
  for (const Shape& s : spec.shapes) {
    if (two_sizes(s.kind))
      std::snprintf(buf, sizeof buf, "shape: %s %.17g %.17g %.17g %.17g %.17g\n",
                    kind_name(s.kind), s.cx, s.cy, s.a, s.b, s.intensity);
    else
      std::snprintf(buf, sizeof buf, "shape: %s %.17g %.17g %.17g %.17g\n", kind_name(s.kind),
                    s.cx, s.cy, s.a, s.intensity);
    out << buf;
  }
  return out.str();
}

SceneSpec scene_from_text(const std::string& text) {
  SceneSpec spec;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "extent:") {
      ls >> spec.width >> spec.height;
    } else if (key == "background:") {
      ls >> spec.background;
    } else if (key == "noise_sigma:") {
      ls >> spec.noise_sigma;
    } else if (key == "seed:") {
      ls >> spec.seed;
    } else if (key == "shape:") {
      std::string kind;
      ls >> kind;
      Shape s;
      s.kind = kind_from_name(kind);
      if (two_sizes(s.kind))
        ls >> s.cx >> s.cy >> s.a >> s.b >> s.intensity;
      else
        ls >> s.cx >> s.cy >> s.a >> s.intensity;
      if (ls.fail()) throw InvalidArgumentError("scene: malformed shape line '" + line + "'");
      spec.shapes.push_back(s);
    } else {
      throw InvalidArgumentError("scene: unknown key '" + key + "'");
    }
  }
  spec.validate();
  return spec;
}

}  // namespace msseg
