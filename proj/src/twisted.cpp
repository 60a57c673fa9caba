#include "crp/twisted.hpp"

#include <algorithm>
#include <optional>
#include <variant>

#include "crp/word_equations.hpp"

namespace crp {

namespace {

Word cstar(const Word& a, const Word& b) { return cyc_reduced_product(a, b).result; }

Word conj(const Word& a, const Word& x) { return reduce(concat(a, x, invert(a))); }

bool is_reduced_rotation(const Word& u, const Word& u0) {
  auto rs = rotations(u);
  return std::any_of(rs.begin(), rs.end(), [&](const Word& r) { return reduce(r) == u0; });
}

ProductMode product_mode(const Word& v, const Word& u0, const Word& f) {
  if (v == cstar(u0, f)) return ProductMode::LeftProduct;
  if (v == cstar(f, u0)) return ProductMode::RightProduct;
  return ProductMode::Equivalent;
}

TwistWitness rotation_witness(Word v, Word u0, ProductMode mode, int proof_case) {
  TwistWitness tw;
  tw.tag = TwistTag::Rotation;
  tw.v = std::move(v);
  tw.u0 = std::move(u0);
  tw.mode = mode;
  tw.proof_case = proof_case;
  return tw;
}

TwistWitness conjugated_witness(Word v, Word u0, Word h, ConjugatedForm form, int proof_case) {
  TwistWitness tw;
  tw.tag = TwistTag::Conjugated;
  tw.v = std::move(v);
  tw.u0 = std::move(u0);
  tw.h = std::move(h);
  tw.form = form;
  tw.proof_case = proof_case;
  return tw;
}

void require_reduced(const Word& w, const char* op) {
  if (!is_reduced(w)) throw std::invalid_argument(std::string(op) + ": concatenation is not reduced");
}

}  // namespace

BaseLemmaWitness base_lemma(const Word& u, const Word& w, const Word& alpha, const Word& beta,
                            Side side) {
  Word ru = reduce(u);
  Word rw = reduce(w);
  Word ra = reduce(alpha);
  Word rb = reduce(beta);
  Word u_part = concat(ra, invert(ru), invert(ra));
  Word w_part = concat(rb, rw, invert(rb));

  BaseLemmaWitness out;
  out.u0 = conj(ra, ru);
  out.f = reduce(side == Side::Left ? concat(u_part, w_part) : concat(w_part, u_part));
  out.strong = is_reduced(concat(beta, rw, invert(beta)));

  IdentitySequence lhs;
  Word gamma;
  if (side == Side::Left) {
    gamma = invert(cyc_reduced_product(out.u0, out.f).conjugator);
    lhs = {{ra, ru}, {ra, invert(ru)}, {rb, rw}};
  } else {
    gamma = invert(cyc_reduced_product(out.f, out.u0).conjugator);
    lhs = {{rb, rw}, {ra, invert(ru)}, {ra, ru}};
  }
  lhs = conjugate_all(lhs, gamma);
  IdentitySequence rhs{{reduce(concat(gamma, rb)), rw}};
  out.certificate = normal_forms({lhs, rhs}).nf1;
  return out;
}

TwistWitness tec2(const Word& f, const Word& t, const Word& u) {
  Word T = concat(t, f, invert(t), u);
  require_reduced(T, "tec2");
  auto [s, v] = cyc_reduce(T);
  if (u.empty()) return rotation_witness(v, Word{}, ProductMode::LeftProduct, 0);

  const std::size_t a = s.size();
  const std::size_t e = a + v.size();
  const std::size_t b1 = t.size();
  const std::size_t b2 = b1 + f.size();
  const std::size_t b3 = b2 + t.size();
  auto cut = [&](std::size_t from, std::size_t to) { return T.substr(from, to - from); };

  if (a >= b3) {
    Word u1 = cut(b3, a);
    return rotation_witness(v, concat(invert(t), u1, v, invert(u1), t, invert(f)),
                            ProductMode::LeftProduct, 1);
  }
  if (a >= b2 && e >= b3) {
    Word t1i = cut(b2, a);
    return rotation_witness(v, concat(invert(f), t1i, cut(a, b3), cut(b3, e), invert(t1i)),
                            ProductMode::RightProduct, 2);
  }
  if (a >= b2) {
    Word t2i = cut(b2, a);
    return rotation_witness(v, concat(invert(f), t2i, v, invert(t2i)), ProductMode::RightProduct,
                            3);
  }
  if (a >= b1 && e >= b3) {
    return rotation_witness(v, concat(invert(t), cut(b3, e), invert(cut(b1, a))),
                            ProductMode::RightProduct, 4);
  }
  if (a >= b1 && e >= b2) {
    return rotation_witness(v, concat(cut(b2, e), invert(cut(b1, a))), ProductMode::RightProduct,
                            5);
  }
  if (a >= b1) {
    Word f2 = cut(e, b2);
    return rotation_witness(v, invert(cut(b1, a)).substr(f2.size()), ProductMode::LeftProduct, 6);
  }
  if (e >= b2) {
    Word h = cut(a, b1);
    Word u0 = e >= b3 ? concat(invert(s), cut(b3, e)) : cut(b2, e).substr(h.size());
    int proof_case = e >= b3 ? 7 : 8;
    if (h.empty()) return rotation_witness(v, u0, ProductMode::RightProduct, proof_case);
    return conjugated_witness(v, u0, h, ConjugatedForm::HfhU, proof_case);
  }
  throw std::logic_error("tec2: both bars inside t f with u != 1");
}

TwistWitness tec2a(const Word& f, const Word& t, const Word& u) {
  require_reduced(concat(u, t, f, invert(t)), "tec2a");
  TwistWitness r = tec2(reverse(f), invert(reverse(t)), reverse(u));
  r.v = reverse(r.v);
  r.u0 = reverse(r.u0);
  if (r.tag == TwistTag::Conjugated) {
    r.h = invert(reverse(r.h));
    r.form = ConjugatedForm::UHfh;
  } else if (r.mode == ProductMode::LeftProduct) {
    r.mode = ProductMode::RightProduct;
  } else if (r.mode == ProductMode::RightProduct) {
    r.mode = ProductMode::LeftProduct;
  }
  return r;
}

namespace {

// Relation of the result to v is only up to rotation from here on.
TwistWitness settle(TwistWitness r, const Word& v, const Word& f) {
  r.v = v;
  r.u0 = reduce(r.u0);
  if (r.tag == TwistTag::Rotation) {
    r.mode = product_mode(v, r.u0, f);
  } else {
    r.form = ConjugatedForm::Rotated;
  }
  return r;
}

}  // namespace

TwistWitness tec2b(const Word& f, const Word& t, const Word& u1, const Word& u2) {
  if (u1.empty()) throw std::invalid_argument("tec2b: u1 must be nonempty");
  require_reduced(concat(u1, t, f, invert(t), u2), "tec2b");
  Word v = cyc_reduce(concat(u2, u1, t, f, invert(t))).core;
  if (u2.empty()) return settle(tec2a(f, t, u1), v, f);

  Word X = concat(u1, t, f, invert(t));
  std::size_t k = 0;
  while (k < u2.size() && k < X.size() && is_inverse_pair(u2[u2.size() - 1 - k], X[k])) ++k;
  Word u3 = u2.first(u2.size() - k);
  const std::size_t n1 = u1.size();
  const std::size_t nt = t.size();

  if (k <= n1) return settle(tec2a(f, t, concat(u3, u1.substr(k))), v, f);
  if (k <= n1 + nt) {
    std::size_t j = k - n1;
    return settle(tec2c(f, t.substr(j), u3, invert(t.first(j))), v, f);
  }
  Word v0 = concat(u3, X.substr(k));
  Word alpha = concat(invert(t), invert(u1));
  auto bl = base_lemma(concat(u1, u2), v0, alpha, invert(t), Side::Left);
  if (bl.f != f) throw std::logic_error("tec2b: base lemma factor mismatch");
  int proof_case = k <= n1 + nt + f.size() ? 3 : 4;
  auto r = rotation_witness(v, bl.u0, ProductMode::Equivalent, proof_case);
  return settle(r, v, f);
}

TwistWitness tec2c(const Word& f, const Word& t, const Word& u1, const Word& u2) {
  Word T = concat(u1, t, f, invert(t), u2);
  require_reduced(T, "tec2c");
  if (u1.empty()) return tec2(f, t, u2);
  return settle(tec2b(f, t, u1, u2), cyc_reduce(T).core, f);
}

bool verify_twist(const TwistWitness& tw, const Word& f, const Word& u, bool literal_rotation) {
  bool u0_ok = literal_rotation ? is_rotation(u, tw.u0) : is_reduced_rotation(u, tw.u0);
  if (!u0_ok) return false;
  if (tw.tag == TwistTag::Rotation) {
    Word p = cstar(tw.u0, f);
    switch (tw.mode) {
      case ProductMode::LeftProduct:
        return tw.v == p;
      case ProductMode::RightProduct:
        return tw.v == cstar(f, tw.u0);
      case ProductMode::Equivalent:
        return is_rotation(tw.v, p);
    }
    return false;
  }
  if (tw.h.empty()) return false;
  Word hfh = concat(tw.h, f, invert(tw.h));
  switch (tw.form) {
    case ConjugatedForm::HfhU:
      return tw.v == concat(hfh, tw.u0);
    case ConjugatedForm::UHfh:
      return tw.v == concat(tw.u0, hfh);
    case ConjugatedForm::Rotated:
      return is_rotation(tw.v, concat(tw.u0, hfh));
  }
  return false;
}

namespace {

struct FirstHalf {
  bool conjugated = false;
  Word u_prime;
  Word h;
  std::optional<Word> alpha;
};

Word rotation_reducing_to(const Word& u, const Word& u0) {
  for (const auto& r : rotations(u)) {
    if (reduce(r) == u0) return r;
  }
  throw std::logic_error("no rotation of " + format_word(u) + " reduces to " + format_word(u0));
}

// Case split for the first claim; u and w reduced.
FirstHalf first_half(const Word& u, const Word& w) {
  if (u.empty()) return {false, Word{}, Word{}, Word{}};
  if (w.empty()) {
    auto [tau, c] = cyc_reduce(u);
    return {false, rotate_left(u, tau.size() + c.size()), Word{}, invert(tau)};
  }
  if (w == u) return {false, u, Word{}, Word{}};

  Word U = invert(u);
  Word f = cstar(U, w);
  auto sc = shirv_decompose(U, w);

  if (const auto* c1 = std::get_if<ShirvCase1>(&sc)) {
    // w = u1 t f t^-1 u2, u = u1 u2
    Word u1 = invert(c1->a);
    Word u2 = invert(c1->u1);
    const Word& t = c1->s;
    if (t.empty()) return {false, concat(u2, u1), Word{}, u2};
    auto tw = tec2c(f, t, u1, u2);
    if (tw.tag == TwistTag::Conjugated) return {true, tw.u0, tw.h, std::nullopt};
    return {false, rotation_reducing_to(u, tw.u0), Word{}, std::nullopt};
  }

  Word alpha, beta, up;
  if (const auto* c2 = std::get_if<ShirvCase2>(&sc)) {
    alpha = invert(c2->t);
    beta = alpha;
    up = concat(invert(c2->t), invert(c2->a), invert(c2->c1));
  } else {
    const auto& c3 = std::get<ShirvCase3>(sc);
    // u = x1 t f^-1 t^-1 x2, w = x1 x2
    Word x1 = invert(c3.a);
    const Word& x2 = c3.v1;
    const Word& t = c3.s;
    alpha = concat(invert(t), x2);
    beta = concat(invert(t), invert(x1));
    up = concat(invert(t), x2, x1, t, invert(f));
  }
  auto bl = base_lemma(u, w, alpha, beta, Side::Left);
  if (bl.f != f || bl.u0 != reduce(up)) {
    throw std::logic_error("main_theorem: base lemma disagrees with the case split");
  }
  return {false, up, Word{}, alpha};
}

// alpha with rho(alpha u alpha^-1) = ut and rho(alpha x alpha^-1) = xt, searched in
// seed * <root(u)>.
std::optional<Word> simultaneous_conjugator(const Word& u, const Word& ut, const Word& x,
                                            const Word& xt, const std::optional<Word>& seed) {
  auto fits_x = [&](const Word& a) { return conj(a, x) == xt; };
  if (u.empty()) {
    if (!ut.empty()) return std::nullopt;
    auto a = conjugator(x, xt);
    if (a && fits_x(*a)) return a;
    return std::nullopt;
  }
  Word a0;
  if (seed && conj(*seed, u) == ut) {
    a0 = reduce(*seed);
  } else if (auto c = conjugator(u, ut)) {
    a0 = *c;
  } else {
    return std::nullopt;
  }
  if (fits_x(a0)) return a0;
  Word r = primitive_root(u).root;
  Word ri = invert(r);
  std::size_t bound = x.size() + xt.size() + 2 * a0.size() + 2 * r.size() + 4;
  Word up = a0, down = a0;
  for (std::size_t k = 1; k <= bound; ++k) {
    up = reduce(concat(up, r));
    if (fits_x(up)) return up;
    down = reduce(concat(down, ri));
    if (fits_x(down)) return down;
  }
  return std::nullopt;
}

IdentitySequence claim_certificate(const Word& u, const Word& w, const Claim& c, bool first,
                                   const std::optional<Word>& seed) {
  Word x = reduce(first ? concat(invert(u), w) : concat(w, invert(u)));
  const Word& urot = first ? c.left : c.right;
  const Word& other = first ? c.right : c.left;
  Word gamma = invert(cyc_reduced_product(c.left, c.right).conjugator);
  auto alpha = simultaneous_conjugator(u, reduce(urot), x, reduce(other), seed);
  Word a = alpha ? *alpha : seed.value_or(Word{});
  IdentitySequence lhs = first ? IdentitySequence{{a, u}, {a, invert(u)}, {a, w}}
                               : IdentitySequence{{a, w}, {a, invert(u)}, {a, u}};
  lhs = conjugate_all(lhs, gamma);
  IdentitySequence rhs{{reduce(concat(gamma, a)), w}};
  return normal_forms({lhs, rhs}).nf1;
}

}  // namespace

Claim first_claim(const MainWitness& mw) {
  Claim c;
  c.left = mw.u_prime;
  c.right = mw.tag == MainCase::A ? mw.f : concat(mw.h, mw.f, invert(mw.h));
  c.product = cstar(c.left, c.right);
  return c;
}

Claim second_claim(const MainWitness& mw) {
  Claim c;
  if (mw.tag == MainCase::A) {
    c.left = mw.g;
    c.right = mw.u_dblprime;
  } else {
    c.left = concat(mw.h, mw.g, invert(mw.h));
    c.right = mw.u_prime;
  }
  c.product = cstar(c.left, c.right);
  return c;
}

MainWitness main_theorem(const Word& u_in, const Word& w_in) {
  MainWitness mw;
  mw.u = reduce(u_in);
  mw.w = reduce(w_in);
  const Word& u = mw.u;
  const Word& w = mw.w;
  mw.f = cstar(invert(u), w);
  mw.g = cstar(w, invert(u));

  auto first = first_half(u, w);
  std::optional<Word> second_seed;
  if (first.conjugated) {
    mw.tag = MainCase::B;
    mw.u_prime = first.u_prime;
    mw.h = first.h;
  } else {
    mw.tag = MainCase::A;
    mw.u_prime = first.u_prime;
    auto mirrored = first_half(reverse(u), reverse(w));
    if (!mirrored.conjugated) {
      mw.u_dblprime = reverse(mirrored.u_prime);
      if (mirrored.alpha) second_seed = invert(reverse(*mirrored.alpha));
    } else {
      // the mirrored instance took the conjugated route; pick the first rotation that works
      Word target = cyc_reduce(w).core;
      for (const auto& r : rotations(u)) {
        if (is_rotation(target, cstar(mw.g, r))) {
          mw.u_dblprime = r;
          break;
        }
      }
    }
  }
  mw.cert1 = claim_certificate(u, w, first_claim(mw), true, first.alpha);
  mw.cert2 = claim_certificate(u, w, second_claim(mw), false, second_seed);
  return mw;
}

CorollaryWitness corollary_witness(const Word& u, const Word& w) {
  auto mw = main_theorem(u, w);
  CorollaryWitness cw;
  cw.u_prime = reduce(mw.u_prime);
  cw.u_dblprime = reduce(mw.tag == MainCase::A ? mw.u_dblprime : mw.u_prime);
  cw.h = mw.h;
  cw.f = mw.f;
  cw.g = mw.g;
  cw.cert1 = mw.cert1;
  cw.cert2 = mw.cert2;
  return cw;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

std::string VerificationReport::failed_checks() const {
  std::string out;
  for (const auto& [name, ok] : checks) {
    if (ok) continue;
    if (!out.empty()) out += ',';
    out += name;
  }
  return out;
}

namespace {

void check_certificate(VerificationReport& rep, const std::string& name,
                       const IdentitySequence& cert, const Word& u, const Word& w,
                       const Claim& claim, bool first) {
  std::vector<Word> expected = first ? std::vector<Word>{u, invert(u), w, invert(w)}
                                     : std::vector<Word>{w, invert(u), u, invert(w)};
  bool pattern = cert.size() == expected.size();
  for (std::size_t i = 0; pattern && i < cert.size(); ++i) {
    pattern = cert[i].relator == expected[i] && is_reduced(cert[i].coefficient);
  }
  bool identity = eval_sequence(cert).empty();
  bool strict = identity && is_strictly_basic(cert);
  bool tracks = false;
  if (pattern) {
    Word gamma = invert(cyc_reduced_product(claim.left, claim.right).conjugator);
    Word alpha = reduce(concat(invert(gamma), cert.front().coefficient));
    Word x = reduce(first ? concat(invert(u), w) : concat(w, invert(u)));
    const Word& urot = first ? claim.left : claim.right;
    const Word& other = first ? claim.right : claim.left;
    tracks = conj(alpha, u) == reduce(urot) && conj(alpha, x) == reduce(other);
  }
  rep.checks.emplace_back(name + "_pattern", pattern);
  rep.checks.emplace_back(name + "_identity", identity);
  rep.checks.emplace_back(name + "_strictly_basic", strict);
  rep.checks.emplace_back(name + "_tracks", tracks);
}

}  // namespace

VerificationReport verify_witness(const Word& u_in, const Word& w_in, const MainWitness& mw) {
  Word u = reduce(u_in);
  Word w = reduce(w_in);
  Word target = cyc_reduce(w).core;
  MainWitness fresh = mw;
  fresh.f = cstar(invert(u), w);
  fresh.g = cstar(w, invert(u));

  VerificationReport rep;
  rep.checks.emplace_back("inputs", mw.u == u && mw.w == w);
  rep.checks.emplace_back("f", mw.f == fresh.f);
  rep.checks.emplace_back("g", mw.g == fresh.g);
  if (mw.tag == MainCase::A) {
    rep.checks.emplace_back("u_prime_rotation", is_rotation(u, mw.u_prime));
    rep.checks.emplace_back("u_dblprime_rotation", is_rotation(u, mw.u_dblprime));
  } else {
    rep.checks.emplace_back("u_prime_reduced_rotation", is_reduced_rotation(u, mw.u_prime));
    rep.checks.emplace_back("h_nonempty", !mw.h.empty());
    rep.checks.emplace_back("f_equals_g", fresh.f == fresh.g);
    rep.checks.emplace_back(
        "concatenation_cyclically_reduced",
        is_cyclically_reduced(concat(mw.u_prime, mw.h, fresh.f, invert(mw.h))));
  }
  Claim c1 = first_claim(fresh);
  Claim c2 = second_claim(fresh);
  rep.checks.emplace_back("claim1_rotation", is_rotation(target, c1.product));
  rep.checks.emplace_back("claim2_rotation", is_rotation(target, c2.product));
  check_certificate(rep, "cert1", mw.cert1, u, w, c1, true);
  check_certificate(rep, "cert2", mw.cert2, u, w, c2, false);
  return rep;
}

bool OracleResult::contains(const MainWitness& mw) const {
  auto has = [](const std::vector<Word>& set, const Word& x) {
    return std::find(set.begin(), set.end(), x) != set.end();
  };
  if (mw.tag == MainCase::A) {
    return has(case_a_prime, mw.u_prime) && has(case_a_dblprime, mw.u_dblprime);
  }
  return std::find(case_b.begin(), case_b.end(), std::make_pair(mw.u_prime, mw.h)) !=
         case_b.end();
}

OracleResult oracle_witness_search(const Word& u_in, const Word& w_in, std::size_t bound) {
  if (u_in.size() > bound || w_in.size() > bound) {
    throw std::length_error("oracle_witness_search: input longer than bound " +
                            std::to_string(bound));
  }
  Word u = reduce(u_in);
  Word w = reduce(w_in);
  Word target = cyc_reduce(w).core;
  Word f = cstar(invert(u), w);
  Word g = cstar(w, invert(u));

  OracleResult out;
  auto add = [](auto& set, auto x) {
    if (std::find(set.begin(), set.end(), x) == set.end()) set.push_back(std::move(x));
  };
  std::vector<Word> reduced_rots;
  for (const auto& r : rotations(u)) {
    if (is_rotation(target, cstar(r, f))) add(out.case_a_prime, r);
    if (is_rotation(target, cstar(g, r))) add(out.case_a_dblprime, r);
    add(reduced_rots, reduce(r));
  }
  if (f != g) return out;
  for (const auto& rw : rotations(target)) {
    for (const auto& u0 : reduced_rots) {
      if (rw.size() < u0.size() + f.size() + 2) continue;
      std::size_t rest = rw.size() - u0.size() - f.size();
      if (rest % 2 != 0) continue;
      Word h = rw.substr(u0.size(), rest / 2);
      if (rw == concat(u0, h, f, invert(h))) add(out.case_b, std::make_pair(u0, h));
    }
  }
  return out;
}

}  // namespace crp
