#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>

namespace hnn::cli {

inline constexpr int kSchemaVersion = 1;

struct RunConfig {
  std::string command;
  /// Path to a tower file, or the tower text itself with ';' for newlines.
  /// Empty means the free group of rank 2.
  std::string tower;
  std::string word;

  int stages = 4;
  int radius = 2;
  int power_bound = 4;
  int order_bound = 5;
  std::size_t cap = 20000;
  std::size_t candidates = 1000;
  std::size_t root_samples = 400;
  std::uint64_t seed = 1;
  std::string g0_mode = "free";

  std::string extension = "n=2 b=1,1";
  std::string alpha = "1";
  std::string beta = "2";
  int instances = 100;

  int omega_bound = 8;
  int copies = 3;
  int offset = 3;
  int support = 2;
  int embed_bound = 6;

  int count = 50;
  std::string element = "g0";
};

/// `data` is the structured report and depends only on the RunConfig;
/// `text` is for people and may carry timings.
struct Report {
  nlohmann::ordered_json data;
  std::string text;
  /// A counterexample or failed identity was found.
  bool failed = false;
};

Report run_reduce(const RunConfig& cfg);
Report run_build(const RunConfig& cfg);
Report run_lemmas(const RunConfig& cfg);
Report run_field(const RunConfig& cfg);
Report run_minstruct(const RunConfig& cfg);
Report run_classical(const RunConfig& cfg);

Report run(const RunConfig& cfg);

}  // namespace hnn::cli
