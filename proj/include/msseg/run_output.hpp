#pragma once

#include <map>
#include <string>
#include <vector>

#include "msseg/spectral.hpp"

namespace msseg {

// Everything needed to reproduce a run, serialized as plain text next to the
// numeric outputs. Timing fields are informational only.
struct RunManifest {
  std::string subcommand;
  std::string input;  // file path or "preset:<name>"
  std::string gamma;
  double alpha = 0.0;                 // bregman/segment runs
  std::vector<double> alphas;         // sweep runs
  int iterations = 0;                 // bregman K
  SolverConfig config;
  double c1 = 0.0;
  double c2 = 0.0;
  bool constants_estimated = false;
  int threads = 1;
  std::string simd;
  std::string output_dir;
  double seconds_solve = 0.0;
  double seconds_io = 0.0;
};

std::string format_double(double v);  // shortest round-trip decimal

// Writes mask_0001.pgm .. mask_KKKK.pgm (0/255), response.csv with header
// k,S,alpha_effective (k is the 0-based step; mask_000i belongs to row
// k = i-1), scale_map.pgm (16-bit first-appearance indices, 0 = never),
// scale_map.png (viridis over gray) and manifest.txt.
void save_outputs(const ScaleSequence& seq, const std::vector<SpectralComponent>& components,
                  const ScaleMap& map, const RunManifest& manifest, const std::string& dir);

void write_manifest(const RunManifest& m, const std::string& path);
std::map<std::string, std::string> read_manifest(const std::string& path);

// Reloads the masks of a previous run directory into a ScaleSequence
// (alphas_effective from the manifest when present).
ScaleSequence load_run(const std::string& dir);

}  // namespace msseg
