// Shared helpers for tests: fast desk-scale configs and tree comparison.
#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "pipeline/config.h"

namespace choralegen::testing {

/// Small synthesis constants so corpus-level tests stay fast; everything else
/// keeps the production defaults.
inline PipelineConfig deskConfig() {
  PipelineConfig config;
  config.synth.num_harmonics = 12;
  config.synth.num_noise_bands = 9;
  config.synth.fir_taps = 65;
  return config;
}

/// Maps relative path -> file bytes for every regular file under root.
inline std::map<std::string, std::string> snapshotTree(
    const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  std::map<std::string, std::string> tree;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::string bytes((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
    tree[entry.path().lexically_relative(root).generic_string()] =
        std::move(bytes);
  }
  return tree;
}

/// First difference between two trees, or empty when byte-identical.
inline std::string firstTreeDifference(
    const std::map<std::string, std::string>& a,
    const std::map<std::string, std::string>& b) {
  for (const auto& [path, bytes] : a) {
    const auto it = b.find(path);
    if (it == b.end()) return "missing in second tree: " + path;
    if (it->second != bytes) return "content differs: " + path;
  }
  for (const auto& [path, bytes] : b) {
    if (!a.count(path)) return "missing in first tree: " + path;
  }
  return "";
}

}  // namespace choralegen::testing
