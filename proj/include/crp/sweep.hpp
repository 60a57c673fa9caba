#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "crp/twisted.hpp"

namespace crp {

// All reduced words of exactly the given length over x, y, z (or a, b, ... past three),
// in lexicographic letter order.
std::vector<Word> enumerate_reduced_words(int alphabet_size, std::size_t length);
// Lengths 0..max_length in (length, lex) order.
std::vector<Word> enumerate_reduced_words_up_to(int alphabet_size, std::size_t max_length);

struct SweepConfig {
  int alphabet_size = 2;
  std::size_t max_len_u = 4;
  std::size_t max_len_w = 6;
  unsigned parallelism = 1;
  std::optional<std::string> output_path;
  std::size_t oracle_bound = 6;
};

struct FailureSample {
  Word u;
  Word w;
  std::string reason;
};

struct SweepReport {
  std::size_t pairs_checked = 0;
  std::size_t case_a_count = 0;
  std::size_t case_b_count = 0;
  std::size_t failures = 0;
  std::size_t oracle_checked = 0;
  std::vector<FailureSample> failure_samples;
  double wall_time_seconds = 0;
};

inline constexpr std::size_t kMaxFailureSamples = 100;

// Empty when the pair passes; otherwise the failure reason.
std::optional<std::string> check_pair(const Word& u, const Word& w, std::size_t oracle_bound,
                                      MainCase* tag = nullptr, bool* oracle_used = nullptr);

SweepReport run_sweep(const SweepConfig& cfg);

nlohmann::json sweep_to_json(const SweepConfig& cfg, const SweepReport& rep);

}  // namespace crp
