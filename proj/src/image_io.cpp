#include "msseg/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <memory>

namespace msseg {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

int pgm_next_token(std::FILE* f, char* buf, int cap) {
  int c;
  // skip whitespace and '#' comments
  for (;;) {
    c = std::fgetc(f);
    if (c == '#') {
      while (c != EOF && c != '\n') c = std::fgetc(f);
    } else if (c == EOF || !std::isspace(c)) {
      break;
    }
  }
  int n = 0;
  while (c != EOF && !std::isspace(c) && n < cap - 1) {
    buf[n++] = static_cast<char>(c);
    c = std::fgetc(f);
  }
  buf[n] = '\0';
  return n;
}

ImageGrid load_pgm(const std::string& path, std::FILE* f) {
  char tok[64];
  if (!pgm_next_token(f, tok, sizeof tok) || std::strcmp(tok, "P5") != 0)
    throw IoError(path + ": not a binary PGM (P5) file");
  long dims[3];
  for (int i = 0; i < 3; ++i) {
    if (!pgm_next_token(f, tok, sizeof tok)) throw IoError(path + ": truncated PGM header");
    dims[i] = std::strtol(tok, nullptr, 10);
  }
  const long W = dims[0], H = dims[1], maxval = dims[2];
  if (W < 1 || H < 1) throw IoError(path + ": zero-dimension image");
  if (maxval < 1 || maxval > 65535) throw IoError(path + ": unsupported PGM maxval");

  ImageGrid img(static_cast<int>(W), static_cast<int>(H));
  const std::size_t n = img.size();
  const int bytes = maxval > 255 ? 2 : 1;
  std::vector<unsigned char> raw(n * bytes);
  if (std::fread(raw.data(), 1, raw.size(), f) != raw.size())
    throw IoError(path + ": truncated PGM pixel data");
  const double scale = 1.0 / static_cast<double>(maxval);
  if (bytes == 1) {
    for (std::size_t i = 0; i < n; ++i) img[i] = raw[i] * scale;
  } else {
    for (std::size_t i = 0; i < n; ++i)
      img[i] = ((raw[2 * i] << 8) | raw[2 * i + 1]) * scale;  // big-endian
  }
  return img;
}

ImageGrid load_png(const std::string& path, std::FILE* f) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError(path + ": libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError(path + ": libpng init failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError(path + ": PNG decode error");
  }
  png_init_io(png, f);
  png_read_info(png, info);

  const png_uint_32 W = png_get_image_width(png, info);
  const png_uint_32 H = png_get_image_height(png, info);
  const int color = png_get_color_type(png, info);
  int depth = png_get_bit_depth(png, info);

  if (color != PNG_COLOR_TYPE_GRAY) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError(path +
                  ": only single-channel grayscale PNG input is supported; extract the channel "
                  "of interest first");
  }
  if (W < 1 || H < 1) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError(path + ": zero-dimension image");
  }
  if (depth < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
    depth = 8;
  }
  png_read_update_info(png, info);

  const int bytes = depth == 16 ? 2 : 1;
  std::vector<unsigned char> raw(static_cast<std::size_t>(W) * H * bytes);
  std::vector<png_bytep> rows(H);
  for (png_uint_32 y = 0; y < H; ++y) rows[y] = raw.data() + static_cast<std::size_t>(y) * W * bytes;
  png_read_image(png, rows.data());
  png_destroy_read_struct(&png, &info, nullptr);

  ImageGrid img(static_cast<int>(W), static_cast<int>(H));
  const double scale = depth == 16 ? 1.0 / 65535.0 : 1.0 / 255.0;
  for (std::size_t i = 0; i < img.size(); ++i)
    img[i] = (bytes == 2 ? ((raw[2 * i] << 8) | raw[2 * i + 1]) : raw[i]) * scale;
  return img;
}

}  // namespace

ImageGrid load_image(const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "rb"));
  if (!f) throw IoError(path + ": cannot open for reading");
  unsigned char magic[8] = {0};
  const std::size_t got = std::fread(magic, 1, sizeof magic, f.get());
  std::rewind(f.get());
  if (got >= 2 && magic[0] == 'P' && magic[1] == '5') return load_pgm(path, f.get());
  static const unsigned char png_sig[8] = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
  if (got == 8 && std::memcmp(magic, png_sig, 8) == 0) return load_png(path, f.get());
  throw IoError(path + ": unsupported format (expected binary PGM or grayscale PNG)");
}

void save_pgm(const ImageGrid& img, const std::string& path, int maxval) {
  if (maxval < 1 || maxval > 65535) throw InvalidArgumentError("save_pgm: bad maxval");
  FilePtr f(std::fopen(path.c_str(), "wb"));
  if (!f) throw IoError(path + ": cannot open for writing");
  std::fprintf(f.get(), "P5\n%d %d\n%d\n", img.width(), img.height(), maxval);
  if (maxval <= 255) {
    std::vector<unsigned char> raw(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) {
      const double v = std::min(1.0, std::max(0.0, img[i]));
      raw[i] = static_cast<unsigned char>(std::lround(v * maxval));
    }
    if (std::fwrite(raw.data(), 1, raw.size(), f.get()) != raw.size())
      throw IoError(path + ": short write");
  } else {
    std::vector<unsigned char> raw(img.size() * 2);
    for (std::size_t i = 0; i < img.size(); ++i) {
      const double v = std::min(1.0, std::max(0.0, img[i]));
      const auto q = static_cast<std::uint16_t>(std::lround(v * maxval));
      raw[2 * i] = static_cast<unsigned char>(q >> 8);
      raw[2 * i + 1] = static_cast<unsigned char>(q & 0xff);
    }
    if (std::fwrite(raw.data(), 1, raw.size(), f.get()) != raw.size())
      throw IoError(path + ": short write");
  }
}

void save_pgm_labels(const std::vector<int>& labels, int width, int height,
                     const std::string& path) {
  if (static_cast<std::size_t>(width) * height != labels.size())
    throw InvalidArgumentError("save_pgm_labels: extent mismatch");
  FilePtr f(std::fopen(path.c_str(), "wb"));
  if (!f) throw IoError(path + ": cannot open for writing");
  std::fprintf(f.get(), "P5\n%d %d\n65535\n", width, height);
  std::vector<unsigned char> raw(labels.size() * 2);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int v = std::clamp(labels[i], 0, 65535);
    raw[2 * i] = static_cast<unsigned char>(v >> 8);
    raw[2 * i + 1] = static_cast<unsigned char>(v & 0xff);
  }
  if (std::fwrite(raw.data(), 1, raw.size(), f.get()) != raw.size())
    throw IoError(path + ": short write");
}

namespace {

// viridis, 16 anchor points, linearly interpolated
constexpr unsigned char kViridis[16][3] = {
    {68, 1, 84},    {72, 26, 108},  {71, 47, 125},  {65, 68, 135},
    {57, 86, 140},  {49, 104, 142}, {42, 120, 142}, {35, 136, 142},
    {31, 152, 139}, {34, 168, 132}, {53, 183, 121}, {84, 197, 104},
    {122, 209, 81}, {165, 219, 54}, {210, 226, 27}, {253, 231, 37}};

void viridis_rgb(double t, unsigned char rgb[3]) {
  t = std::min(1.0, std::max(0.0, t));
  const double pos = t * 15.0;
  const int i = std::min(14, static_cast<int>(pos));
  const double w = pos - i;
  for (int c = 0; c < 3; ++c)
    rgb[c] = static_cast<unsigned char>(std::lround((1.0 - w) * kViridis[i][c] + w * kViridis[i + 1][c]));
}

}  // namespace

void save_label_png(const std::vector<int>& labels, int width, int height, int max_label,
                    const std::string& path) {
  if (static_cast<std::size_t>(width) * height != labels.size())
    throw InvalidArgumentError("save_label_png: extent mismatch");
  FilePtr f(std::fopen(path.c_str(), "wb"));
  if (!f) throw IoError(path + ": cannot open for writing");

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError(path + ": libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError(path + ": libpng init failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError(path + ": PNG encode error");
  }
  png_init_io(png, f.get());
  png_set_IHDR(png, info, width, height, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  std::vector<unsigned char> row(static_cast<std::size_t>(width) * 3);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const int v = labels[static_cast<std::size_t>(y) * width + x];
      unsigned char* px = &row[static_cast<std::size_t>(x) * 3];
      if (v <= 0 || max_label < 1) {
        px[0] = px[1] = px[2] = 128;  // background gray
      } else {
        unsigned char rgb[3];
        viridis_rgb(max_label > 1 ? (v - 1) / static_cast<double>(max_label - 1) : 0.0, rgb);
        px[0] = rgb[0];
        px[1] = rgb[1];
        px[2] = rgb[2];
      }
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace msseg
