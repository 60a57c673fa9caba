#include "crp/serialize.hpp"

namespace crp {

namespace {

std::size_t offset_to(const Word& w, const Word& product) {
  auto k = rotation_offset(cyc_reduce(w).core, product);
  if (!k) throw std::invalid_argument("witness_to_json: claim is not a rotation of rho^(w)");
  return *k;
}

std::string format_certificate(const IdentitySequence& cert) {
  return format_identity({cert, {}});
}

IdentitySequence parse_certificate(const std::string& text) {
  auto id = parse_identity(text);
  if (!id.rhs.empty()) throw std::invalid_argument("certificate must have an empty right side");
  return id.lhs;
}

}  // namespace

nlohmann::json witness_to_json(const MainWitness& mw) {
  nlohmann::json j;
  j["case"] = mw.tag == MainCase::A ? "A" : "B";
  j["u"] = format_word(mw.u);
  j["w"] = format_word(mw.w);
  j["u_prime"] = format_word(mw.u_prime);
  if (mw.tag == MainCase::A) {
    j["u_dblprime"] = format_word(mw.u_dblprime);
  } else {
    j["h"] = format_word(mw.h);
  }
  j["f"] = format_word(mw.f);
  j["g"] = format_word(mw.g);
  j["offset1"] = offset_to(mw.w, first_claim(mw).product);
  j["offset2"] = offset_to(mw.w, second_claim(mw).product);
  j["cert1"] = format_certificate(mw.cert1);
  j["cert2"] = format_certificate(mw.cert2);
  return j;
}

MainWitness witness_from_json(const nlohmann::json& j) {
  MainWitness mw;
  auto tag = j.at("case").get<std::string>();
  if (tag != "A" && tag != "B") throw std::invalid_argument("unknown witness case " + tag);
  mw.tag = tag == "A" ? MainCase::A : MainCase::B;
  auto word = [&](const char* key) { return parse_word(j.at(key).get<std::string>()); };
  mw.u = word("u");
  mw.w = word("w");
  mw.u_prime = word("u_prime");
  if (mw.tag == MainCase::A) {
    mw.u_dblprime = word("u_dblprime");
  } else {
    mw.h = word("h");
  }
  mw.f = word("f");
  mw.g = word("g");
  mw.cert1 = parse_certificate(j.at("cert1").get<std::string>());
  mw.cert2 = parse_certificate(j.at("cert2").get<std::string>());
  return mw;
}

nlohmann::json report_to_json(const VerificationReport& rep) {
  nlohmann::json checks = nlohmann::json::object();
  for (const auto& [name, ok] : rep.checks) checks[name] = ok;
  return {{"passed", rep.passed()}, {"checks", checks}};
}

}  // namespace crp
