#pragma once

#include <functional>
#include <vector>

#include "msseg/bregman.hpp"

namespace msseg {

// One scale component of the segmentation: phi is +1 where the pixel entered
// the mask at step k, -1 where it left, 0 elsewhere.
struct SpectralComponent {
  int k = 0;
  ImageGrid phi;
  double response = 0.0;  // sum |phi|
};

enum class TransformDirection { inverse, forward };

// Per-pixel first-appearance record. appearance holds 1-based step numbers
// (pixel entered the mask at step appearance-1, 0-based); 0 means the pixel
// never appeared. rework_pixels counts pixels with more than one sign change
// along the sequence (vanished or re-appeared).
struct ScaleMap {
  int width = 0;
  int height = 0;
  std::vector<int> appearance;
  long rework_pixels = 0;

  int max_index() const;
};

// Differences of consecutive binary masks. The inverse case prepends the
// empty mask, giving one component per step (appearing objects positive).
// The forward case walks the sequence in reverse (along increasing
// regularization), so vanishing objects yield positive components; k then
// numbers positions on that reversed axis.
std::vector<SpectralComponent> transform(const ScaleSequence& seq, TransformDirection direction);

std::vector<double> response(const std::vector<SpectralComponent>& components);

ScaleMap scale_map(const std::vector<SpectralComponent>& components);

// Local maxima of S carrying at least min_mass_fraction of the total mass;
// runs of adjacent qualifying indices merge to the largest entry.
std::vector<int> detect_peaks(const std::vector<double>& S, double min_mass_fraction = 0.02);

// Sum of phi_k over the components selected by `band` (0-based component
// index). `signed_sum`, when given, receives the raw telescoped field; the
// returned grid is clamped to {0,1}.
ImageGrid filter_scales(const std::vector<SpectralComponent>& components,
                        const std::function<bool(int)>& band, ImageGrid* signed_sum = nullptr);

}  // namespace msseg
