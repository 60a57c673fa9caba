#include <CLI11.hpp>
#include <iostream>

#include "crp/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Cyclically reduced products of free-group words"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::string word, other;
  auto word_op = [&](const char* name, const char* help, bool binary) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("word", word, "word, e.g. xyX (1 = empty)")->required();
    if (binary) sub->add_option("other", other, "second word")->required();
    sub->add_flag("--json", json, "machine-readable output");
    return sub;
  };
  auto* reduce_cmd = word_op("reduce", "free reduction", false);
  auto* cyc_cmd = word_op("cycreduce", "cyclic reduction t c t^-1", false);
  auto* crprod_cmd = word_op("crprod", "cyclically reduced product u*v", true);
  auto* rot_cmd = word_op("rotations", "all rotations", false);
  auto* root_cmd = word_op("root", "primitive root and exponent", false);
  auto* witness_cmd = word_op("witness", "twisted associativity witness for (u, w)", true);

  crp::SweepConfig cfg;
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive theorem sweep");
  verify_cmd->add_option("--alphabet", cfg.alphabet_size, "number of generators")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-u", cfg.max_len_u, "maximum length of u");
  verify_cmd->add_option("--max-w", cfg.max_len_w, "maximum length of w");
  verify_cmd->add_option("--jobs", cfg.parallelism, "worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out", cfg.output_path, "write the JSON report here");
  verify_cmd->add_option("--oracle-bound", cfg.oracle_bound, "oracle length bound");
  verify_cmd->add_flag("--json", json, "machine-readable output");

  std::string path, mode = "basic";
  auto* identity_cmd = app.add_subcommand("identity", "check identities from a file");
  identity_cmd->add_option("path", path, "identity file")->required();
  identity_cmd->add_option("--mode", mode, "basic, strict or collapse:N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : crp::kExitUsage;
  }

  for (auto* sub : {reduce_cmd, cyc_cmd, crprod_cmd, rot_cmd, root_cmd}) {
    if (sub->parsed()) {
      std::vector<std::string> args{word};
      if (sub == crprod_cmd) args.push_back(other);
      return crp::cmd_word_ops(sub->get_name(), args, json, std::cout, std::cerr);
    }
  }
  if (witness_cmd->parsed()) return crp::cmd_single(word, other, json, std::cout, std::cerr);
  if (verify_cmd->parsed()) return crp::cmd_verify_sweep(cfg, json, std::cout, std::cerr);
  if (identity_cmd->parsed()) return crp::cmd_identity_check(path, mode, std::cout, std::cerr);
  return crp::kExitUsage;
}
