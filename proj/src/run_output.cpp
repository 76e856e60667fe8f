#include "msseg/run_output.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "msseg/image_io.hpp"
#include "msseg/version.hpp"

namespace fs = std::filesystem;

namespace msseg {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::string mask_name(int i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "mask_%04d.pgm", i);
  return buf;
}

}  // namespace

void write_manifest(const RunManifest& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError(path + ": cannot open for writing");
  out << "tool: msseg " << kVersion << "\n";
  out << "subcommand: " << m.subcommand << "\n";
  out << "input: " << m.input << "\n";
  out << "gamma: " << m.gamma << "\n";
  if (!m.alphas.empty()) {
    out << "alphas:";
    for (double a : m.alphas) out << " " << format_double(a);
    out << "\n";
  } else {
    out << "alpha: " << format_double(m.alpha) << "\n";
  }
  if (m.iterations > 0) out << "iterations: " << m.iterations << "\n";
  out << "tau: " << format_double(m.config.tau) << "\n";
  out << "sigma: " << format_double(m.config.sigma) << "\n";
  out << "theta: " << format_double(m.config.theta) << "\n";
  out << "max_inner_its: " << m.config.max_inner_its << "\n";
  out << "tol: " << format_double(m.config.tol) << "\n";
  out << "mu: " << format_double(m.config.mu) << "\n";
  out << "c1: " << format_double(m.c1) << (m.constants_estimated ? " (estimated)" : " (override)")
      << "\n";
  out << "c2: " << format_double(m.c2) << (m.constants_estimated ? " (estimated)" : " (override)")
      << "\n";
  out << "threads: " << m.threads << "\n";
  out << "simd: " << m.simd << "\n";
  out << "output_dir: " << m.output_dir << "\n";
  out << "seconds_solve: " << format_double(m.seconds_solve) << "\n";
  out << "seconds_io: " << format_double(m.seconds_io) << "\n";
}

std::map<std::string, std::string> read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path + ": cannot open manifest");
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string key = line.substr(0, colon);
    std::string val = line.substr(colon + 1);
    while (!val.empty() && val.front() == ' ') val.erase(val.begin());
    kv[key] = val;
  }
  return kv;
}

void save_outputs(const ScaleSequence& seq, const std::vector<SpectralComponent>& components,
                  const ScaleMap& map, const RunManifest& manifest, const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError(dir + ": cannot create output directory");

  for (int k = 0; k < seq.steps(); ++k)
    save_pgm(seq.masks[k], (fs::path(dir) / mask_name(k + 1)).string(), 255);

  {
    const std::string path = (fs::path(dir) / "response.csv").string();
    std::ofstream csv(path);
    if (!csv) throw IoError(path + ": cannot open for writing");
    csv << "k,S,alpha_effective\n";
    for (std::size_t k = 0; k < components.size(); ++k) {
      const double ae = k < seq.alphas_effective.size() ? seq.alphas_effective[k] : 0.0;
      csv << k << "," << format_double(components[k].response) << "," << format_double(ae)
          << "\n";
    }
  }

  if (!map.appearance.empty()) {
    save_pgm_labels(map.appearance, map.width, map.height,
                    (fs::path(dir) / "scale_map.pgm").string());
    save_label_png(map.appearance, map.width, map.height, seq.steps(),
                   (fs::path(dir) / "scale_map.png").string());
  }

  write_manifest(manifest, (fs::path(dir) / "manifest.txt").string());
}

ScaleSequence load_run(const std::string& dir) {
  std::vector<fs::path> mask_paths;
  if (!fs::is_directory(dir)) throw IoError(dir + ": not a run directory");
  for (const auto& e : fs::directory_iterator(dir)) {
    const std::string name = e.path().filename().string();
    if (name.rfind("mask_", 0) == 0 && e.path().extension() == ".pgm")
      mask_paths.push_back(e.path());
  }
  if (mask_paths.empty()) throw IoError(dir + ": no mask_*.pgm files found");
  std::sort(mask_paths.begin(), mask_paths.end());

  ScaleSequence seq;
  for (const auto& p : mask_paths) {
    ImageGrid m = load_image(p.string());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = m[i] >= 0.5 ? 1.0 : 0.0;
    seq.masks.push_back(std::move(m));
  }

  const int K = seq.steps();
  const int W = seq.masks.front().width(), H = seq.masks.front().height();
  ImageGrid prev(W, H, 0.0);
  for (int k = 0; k < K; ++k) {
    ImageGrid phi(W, H);
    double resp = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i) {
      phi[i] = seq.masks[k][i] - prev[i];
      resp += std::abs(phi[i]);
    }
    prev = seq.masks[k];
    seq.phis.push_back(std::move(phi));
    seq.responses.push_back(resp);
  }

  // alpha schedule from the manifest when available
  const fs::path mpath = fs::path(dir) / "manifest.txt";
  if (fs::exists(mpath)) {
    auto kv = read_manifest(mpath.string());
    if (auto it = kv.find("alphas"); it != kv.end()) {
      std::istringstream in(it->second);
      double a;
      while (in >> a) seq.alphas_effective.push_back(a);
    } else if (auto it2 = kv.find("alpha"); it2 != kv.end()) {
      const double alpha = std::stod(it2->second);
      for (int k = 0; k < K; ++k) seq.alphas_effective.push_back(effective_alpha(alpha, k));
    }
  }
  if (static_cast<int>(seq.alphas_effective.size()) != K)
    seq.alphas_effective.assign(K, 0.0);
  return seq;
}

}  // namespace msseg
