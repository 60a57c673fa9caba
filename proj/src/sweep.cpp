#include "crp/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <thread>

namespace crp {

namespace {

// Up to three generators are x, y, z; larger alphabets start at a.
std::vector<Letter> ordered_letters(int alphabet_size) {
  std::vector<Letter> out;
  int first = alphabet_size <= 3 ? 'x' - 'a' + 1 : 1;
  for (int g = first; g < first + alphabet_size; ++g) {
    out.emplace_back(g, false);
    out.emplace_back(g, true);
  }
  return out;
}

void extend(const std::vector<Letter>& letters, std::size_t length, Word& prefix,
            std::vector<Word>& out) {
  if (prefix.size() == length) {
    out.push_back(prefix);
    return;
  }
  for (Letter l : letters) {
    if (!prefix.empty() && is_inverse_pair(prefix.back(), l)) continue;
    prefix.push_back(l);
    extend(letters, length, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Word> enumerate_reduced_words(int alphabet_size, std::size_t length) {
  if (alphabet_size < 1) throw std::invalid_argument("alphabet size must be at least 1");
  std::vector<Word> out;
  Word prefix;
  extend(ordered_letters(alphabet_size), length, prefix, out);
  return out;
}

std::vector<Word> enumerate_reduced_words_up_to(int alphabet_size, std::size_t max_length) {
  std::vector<Word> out;
  for (std::size_t n = 0; n <= max_length; ++n) {
    auto layer = enumerate_reduced_words(alphabet_size, n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::optional<std::string> check_pair(const Word& u, const Word& w, std::size_t oracle_bound,
                                      MainCase* tag, bool* oracle_used) {
  try {
    auto mw = main_theorem(u, w);
    if (tag) *tag = mw.tag;
    auto rep = verify_witness(u, w, mw);
    if (!rep.passed()) return "verify: " + rep.failed_checks();
    bool in_bound = u.size() <= oracle_bound && w.size() <= oracle_bound;
    if (oracle_used) *oracle_used = in_bound;
    if (in_bound && !oracle_witness_search(u, w, oracle_bound).contains(mw)) {
      return std::string("oracle: witness not among brute-force witnesses");
    }
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
  return std::nullopt;
}

SweepReport run_sweep(const SweepConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  auto us = enumerate_reduced_words_up_to(cfg.alphabet_size, cfg.max_len_u);
  auto ws = enumerate_reduced_words_up_to(cfg.alphabet_size, cfg.max_len_w);
  const std::size_t total = us.size() * ws.size();
  const unsigned jobs = std::max(1u, cfg.parallelism);

  struct Partial {
    SweepReport rep;
    std::vector<std::size_t> sample_index;
  };
  std::vector<Partial> parts(jobs);

  auto worker = [&](unsigned id) {
    Partial& p = parts[id];
    for (std::size_t i = id; i < total; i += jobs) {
      const Word& u = us[i / ws.size()];
      const Word& w = ws[i % ws.size()];
      MainCase tag = MainCase::A;
      bool oracle_used = false;
      auto failure = check_pair(u, w, cfg.oracle_bound, &tag, &oracle_used);
      ++p.rep.pairs_checked;
      if (oracle_used) ++p.rep.oracle_checked;
      if (failure) {
        ++p.rep.failures;
        if (p.rep.failure_samples.size() < kMaxFailureSamples) {
          p.rep.failure_samples.push_back({u, w, *failure});
          p.sample_index.push_back(i);
        }
      } else if (tag == MainCase::A) {
        ++p.rep.case_a_count;
      } else {
        ++p.rep.case_b_count;
      }
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
    for (auto& t : threads) t.join();
  }

  SweepReport out;
  std::vector<std::pair<std::size_t, FailureSample>> samples;
  for (auto& p : parts) {
    out.pairs_checked += p.rep.pairs_checked;
    out.case_a_count += p.rep.case_a_count;
    out.case_b_count += p.rep.case_b_count;
    out.failures += p.rep.failures;
    out.oracle_checked += p.rep.oracle_checked;
    for (std::size_t k = 0; k < p.sample_index.size(); ++k) {
      samples.emplace_back(p.sample_index[k], std::move(p.rep.failure_samples[k]));
    }
  }
  std::sort(samples.begin(), samples.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t k = 0; k < samples.size() && k < kMaxFailureSamples; ++k) {
    out.failure_samples.push_back(std::move(samples[k].second));
  }
  out.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (cfg.output_path) {
    std::ofstream file(*cfg.output_path);
    if (!file) throw std::runtime_error("cannot write report to " + *cfg.output_path);
    file << sweep_to_json(cfg, out).dump(2) << '\n';
    if (!file) throw std::runtime_error("cannot write report to " + *cfg.output_path);
  }
  return out;
}

nlohmann::json sweep_to_json(const SweepConfig& cfg, const SweepReport& rep) {
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& s : rep.failure_samples) {
    samples.push_back({{"u", format_word(s.u)}, {"w", format_word(s.w)}, {"reason", s.reason}});
  }
  return {{"config",
           {{"alphabet_size", cfg.alphabet_size},
            {"max_len_u", cfg.max_len_u},
            {"max_len_w", cfg.max_len_w},
            {"parallelism", cfg.parallelism},
            {"oracle_bound", cfg.oracle_bound}}},
          {"pairs_checked", rep.pairs_checked},
          {"case_a_count", rep.case_a_count},
          {"case_b_count", rep.case_b_count},
          {"failures", rep.failures},
          {"oracle_checked", rep.oracle_checked},
          {"failure_samples", samples},
          {"wall_time_seconds", rep.wall_time_seconds}};
}

}  // namespace crp
