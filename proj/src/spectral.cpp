#include "msseg/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace msseg {

int ScaleMap::max_index() const {
  int mx = 0;
  for (int a : appearance) mx = std::max(mx, a);
  return mx;
}

std::vector<SpectralComponent> transform(const ScaleSequence& seq, TransformDirection direction) {
  const int K = seq.steps();
  if (K < 1 || (direction == TransformDirection::forward && K < 2))
    throw InvalidArgumentError("transform: sequence too short");

  const int W = seq.masks.front().width();
  const int H = seq.masks.front().height();
  std::vector<SpectralComponent> comps;

  if (direction == TransformDirection::inverse) {
    comps.reserve(K);
    const ImageGrid empty(W, H, 0.0);
    for (int k = 0; k < K; ++k) {
      const ImageGrid& cur = seq.masks[k];
      const ImageGrid& prev = k > 0 ? seq.masks[k - 1] : empty;
      SpectralComponent c;
      c.k = k;
      c.phi = ImageGrid(W, H);
      for (std::size_t i = 0; i < c.phi.size(); ++i) {
        c.phi[i] = cur[i] - prev[i];
        c.response += std::abs(c.phi[i]);
      }
      comps.push_back(std::move(c));
    }
  } else {
    // increasing regularization: reverse order, phi = -(u(t_{j+1}) - u(t_j))
    comps.reserve(K - 1);
    for (int j = 0; j + 1 < K; ++j) {
      const ImageGrid& at_t = seq.masks[K - 1 - j];
      const ImageGrid& at_t_next = seq.masks[K - 2 - j];
      SpectralComponent c;
      c.k = j;
      c.phi = ImageGrid(W, H);
      for (std::size_t i = 0; i < c.phi.size(); ++i) {
        c.phi[i] = -(at_t_next[i] - at_t[i]);
        c.response += std::abs(c.phi[i]);
      }
      comps.push_back(std::move(c));
    }
  }
  return comps;
}

std::vector<double> response(const std::vector<SpectralComponent>& components) {
  std::vector<double> S;
  S.reserve(components.size());
  for (const auto& c : components) S.push_back(c.response);
  return S;
}

ScaleMap scale_map(const std::vector<SpectralComponent>& components) {
  ScaleMap map;
  if (components.empty()) return map;
  map.width = components.front().phi.width();
  map.height = components.front().phi.height();
  map.appearance.assign(static_cast<std::size_t>(map.width) * map.height, 0);

  std::vector<int> changes(map.appearance.size(), 0);
  for (std::size_t ci = 0; ci < components.size(); ++ci) {
    const ImageGrid& phi = components[ci].phi;
    for (std::size_t i = 0; i < phi.size(); ++i) {
      if (phi[i] == 0.0) continue;
      ++changes[i];
      if (phi[i] > 0.0 && map.appearance[i] == 0)
        map.appearance[i] = static_cast<int>(ci) + 1;
    }
  }
  for (int c : changes)
    if (c > 1) ++map.rework_pixels;
  return map;
}

std::vector<int> detect_peaks(const std::vector<double>& S, double min_mass_fraction) {
  if (!(min_mass_fraction > 0.0 && min_mass_fraction < 1.0))
    throw InvalidArgumentError("detect_peaks: mass fraction must lie in (0,1)");
  double total = 0.0;
  for (double s : S) total += s;
  if (total <= 0.0) return {};
  const double thresh = min_mass_fraction * total;
  const int n = static_cast<int>(S.size());

  std::vector<int> peaks;
  int i = 0;
  while (i < n) {
    if (S[i] < thresh) {
      ++i;
      continue;
    }
    // run of adjacent qualifying indices; keep its largest entry
    int best = i;
    int j = i;
    while (j + 1 < n && S[j + 1] >= thresh) {
      ++j;
      if (S[j] > S[best]) best = j;
    }
    const double left = best > 0 ? S[best - 1] : 0.0;
    const double right = best + 1 < n ? S[best + 1] : 0.0;
    if (S[best] >= left && S[best] >= right) peaks.push_back(best);
    i = j + 1;
  }
  return peaks;
}

ImageGrid filter_scales(const std::vector<SpectralComponent>& components,
                        const std::function<bool(int)>& band, ImageGrid* signed_sum) {
  if (components.empty()) throw InvalidArgumentError("filter_scales: no components");
  const int W = components.front().phi.width();
  const int H = components.front().phi.height();
  ImageGrid acc(W, H, 0.0);
  for (const auto& c : components) {
    if (!band(c.k)) continue;
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c.phi[i];
  }
  if (signed_sum) *signed_sum = acc;
  ImageGrid mask(W, H);
  for (std::size_t i = 0; i < acc.size(); ++i)
    mask[i] = std::min(1.0, std::max(0.0, acc[i]));
  return mask;
}

}  // namespace msseg
