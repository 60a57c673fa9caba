#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "crp/sweep.hpp"

namespace crp {

enum ExitStatus : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

// op is one of reduce, cycreduce, crprod, rotations, root.
int cmd_word_ops(const std::string& op, const std::vector<std::string>& args, bool json,
                 std::ostream& out, std::ostream& err);

int cmd_single(const std::string& u_text, const std::string& w_text, bool json, std::ostream& out,
               std::ostream& err);

int cmd_verify_sweep(const SweepConfig& cfg, bool json, std::ostream& out, std::ostream& err);

// mode is basic, strict or collapse:N.
int cmd_identity_check(const std::string& path, const std::string& mode, std::ostream& out,
                       std::ostream& err);

}  // namespace crp
