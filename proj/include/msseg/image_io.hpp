#pragma once

#include <string>
#include <vector>

#include "msseg/grid.hpp"

namespace msseg {

// Reads an 8/16-bit binary PGM (P5) or a single-channel grayscale PNG and
// normalizes intensities to [0,1] by the format maximum. Multi-channel
// images are rejected with a message asking for channel extraction.
ImageGrid load_image(const std::string& path);

// Writes values scaled by maxval (clamped to [0,1] first). maxval 255 gives
// an 8-bit PGM, anything larger a 16-bit big-endian PGM.
void save_pgm(const ImageGrid& img, const std::string& path, int maxval = 255);

// 16-bit PGM holding raw integer labels (appearance indices).
void save_pgm_labels(const std::vector<int>& labels, int width, int height,
                     const std::string& path);

// 8-bit RGB PNG of integer labels: 0 maps to a neutral gray, 1..max_label
// sweep the viridis colormap.
void save_label_png(const std::vector<int>& labels, int width, int height, int max_label,
                    const std::string& path);

}  // namespace msseg
