#include "crp/cli.hpp"

#include <fstream>
#include <sstream>

#include "crp/serialize.hpp"

namespace crp {

namespace {

int parse_failure(const ParseError& e, std::ostream& err) {
  err << "parse error: " << e.what() << '\n';
  return kExitUsage;
}

}  // namespace

int cmd_word_ops(const std::string& op, const std::vector<std::string>& args, bool json,
                 std::ostream& out, std::ostream& err) {
  std::size_t arity = op == "crprod" ? 2 : 1;
  if (args.size() != arity) {
    err << op << " expects " << arity << " word argument(s)\n";
    return kExitUsage;
  }
  try {
    std::vector<Word> ws;
    for (const auto& a : args) ws.push_back(parse_word(a));
    nlohmann::json j;
    std::string text;
    if (op == "reduce") {
      text = format_word(reduce(ws[0]));
      j["result"] = text;
    } else if (op == "cycreduce") {
      auto [t, c] = cyc_reduce(ws[0]);
      text = "t=" + format_word(t) + " c=" + format_word(c);
      j = {{"t", format_word(t)}, {"c", format_word(c)}};
    } else if (op == "crprod") {
      auto [result, conj] = cyc_reduced_product(ws[0], ws[1]);
      text = format_word(result);
      j = {{"result", text}, {"conjugator", format_word(conj)}};
    } else if (op == "rotations") {
      j["result"] = nlohmann::json::array();
      for (const auto& r : rotations(ws[0])) {
        if (!text.empty()) text += ' ';
        text += format_word(r);
        j["result"].push_back(format_word(r));
      }
    } else if (op == "root") {
      auto [root, m] = primitive_root(ws[0]);
      text = format_word(root) + "^" + std::to_string(m);
      j = {{"root", format_word(root)}, {"exponent", m}};
    } else {
      err << "unknown word operation " << op << '\n';
      return kExitUsage;
    }
    out << (json ? j.dump() : text) << '\n';
    return kExitPass;
  } catch (const ParseError& e) {
    return parse_failure(e, err);
  } catch (const std::exception& e) {
    err << op << ": " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_single(const std::string& u_text, const std::string& w_text, bool json, std::ostream& out,
               std::ostream& err) {
  Word u, w;
  try {
    u = parse_word(u_text);
    w = parse_word(w_text);
  } catch (const ParseError& e) {
    return parse_failure(e, err);
  }
  auto mw = main_theorem(u, w);
  auto rep = verify_witness(u, w, mw);
  if (json) {
    auto j = witness_to_json(mw);
    j["verification"] = report_to_json(rep);
    out << j.dump() << '\n';
  } else {
    bool a = mw.tag == MainCase::A;
    out << "case " << (a ? "A" : "B") << '\n';
    out << "u = " << mw.u << "\nw = " << mw.w << '\n';
    out << "u' = " << mw.u_prime << '\n';
    if (a) {
      out << "u'' = " << mw.u_dblprime << '\n';
    } else {
      out << "h = " << mw.h << '\n';
    }
    out << "f = u^-1*w = " << mw.f << "\ng = w*u^-1 = " << mw.g << '\n';
    out << "first product = " << first_claim(mw).product << '\n';
    out << "second product = " << second_claim(mw).product << '\n';
    out << "cert1 = " << format_identity({mw.cert1, {}}) << '\n';
    out << "cert2 = " << format_identity({mw.cert2, {}}) << '\n';
    for (const auto& [name, ok] : rep.checks) out << name << ": " << (ok ? "true" : "false") << '\n';
    out << "verified: " << (rep.passed() ? "true" : "false") << '\n';
  }
  return rep.passed() ? kExitPass : kExitFail;
}

int cmd_verify_sweep(const SweepConfig& cfg, bool json, std::ostream& out, std::ostream& err) {
  if (cfg.alphabet_size < 1 || cfg.parallelism < 1) {
    err << "alphabet size and job count must be positive\n";
    return kExitUsage;
  }
  SweepReport rep;
  try {
    rep = run_sweep(cfg);
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  if (json) {
    out << sweep_to_json(cfg, rep).dump() << '\n';
  } else {
    out << "pairs checked: " << rep.pairs_checked << '\n'
        << "case A: " << rep.case_a_count << '\n'
        << "case B: " << rep.case_b_count << '\n'
        << "oracle checked: " << rep.oracle_checked << '\n'
        << "failures: " << rep.failures << '\n';
    for (const auto& s : rep.failure_samples) {
      out << "  u=" << s.u << " w=" << s.w << " " << s.reason << '\n';
    }
    out << "wall time: " << rep.wall_time_seconds << " s\n";
  }
  return rep.failures == 0 ? kExitPass : kExitFail;
}

int cmd_identity_check(const std::string& path, const std::string& mode, std::ostream& out,
                       std::ostream& err) {
  std::size_t collapse_bound = 0;
  if (mode.rfind("collapse:", 0) == 0) {
    try {
      collapse_bound = std::stoul(mode.substr(9));
    } catch (const std::exception&) {
      err << "bad collapse bound in mode " << mode << '\n';
      return kExitUsage;
    }
  } else if (mode != "basic" && mode != "strict") {
    err << "unknown mode " << mode << " (basic, strict, collapse:N)\n";
    return kExitUsage;
  }
  std::ifstream file(path);
  if (!file) {
    err << "cannot read " << path << '\n';
    return kExitUsage;
  }
  int status = kExitPass;
  std::string line;
  for (std::size_t number = 1; std::getline(file, line); ++number) {
    if (line.empty() || line[0] == '#') continue;
    TwoSidedIdentity id;
    try {
      id = parse_identity(line);
    } catch (const ParseError& e) {
      err << "line " << number << ": malformed at offset " << e.offset() << ": " << e.what()
          << '\n';
      return kExitUsage;
    }
    out << "line " << number << ": ";
    IdentitySequence nf;
    try {
      nf = normal_forms(id).nf1;
    } catch (const std::invalid_argument&) {
      out << "error: psi(lhs) != psi(rhs)\n";
      status = kExitFail;
      continue;
    }
    if (!eval_sequence(nf).empty()) {
      out << "error: psi != 1\n";
      status = kExitFail;
      continue;
    }
    bool verdict;
    std::string detail;
    if (mode == "basic") {
      verdict = is_basic(nf);
    } else if (mode == "strict") {
      verdict = is_strictly_basic(nf);
    } else {
      auto moves = collapse_search(nf, collapse_bound);
      verdict = moves.has_value();
      if (moves) {
        for (const auto& m : *moves) detail += ' ' + format_move(m);
      }
    }
    out << (verdict ? "true" : "false") << detail << '\n';
    if (!verdict) status = kExitFail;
  }
  return status;
}

}  // namespace crp
