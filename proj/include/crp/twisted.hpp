#pragma once

#include <string>
#include <utility>
#include <vector>

#include "crp/identities.hpp"
#include "crp/word.hpp"

namespace crp {

enum class Side { Left, Right };

struct BaseLemmaWitness {
  Word u0;
  Word f;
  bool strong = false;
  IdentitySequence certificate;
};

// u0 = rho(alpha u alpha^-1); f = rho(alpha u^-1 alpha^-1 beta w beta^-1) on the left,
// rho(beta w beta^-1 alpha u^-1 alpha^-1) on the right.
BaseLemmaWitness base_lemma(const Word& u, const Word& w, const Word& alpha, const Word& beta,
                            Side side);

enum class TwistTag { Rotation, Conjugated };
enum class ProductMode { LeftProduct, RightProduct, Equivalent };
// How v relates to u0, h, f in the conjugated outcome.
enum class ConjugatedForm { HfhU, UHfh, Rotated };

struct TwistWitness {
  TwistTag tag = TwistTag::Rotation;
  Word u0;
  Word h;
  ProductMode mode = ProductMode::Equivalent;
  ConjugatedForm form = ConjugatedForm::Rotated;
  Word v;
  // alignment case of the two-block lemma, 0 when not applicable
  int proof_case = 0;
};

// v = rho^(t f t^-1 u); requires t f t^-1 u reduced.
TwistWitness tec2(const Word& f, const Word& t, const Word& u);
// v = rho^(u t f t^-1); requires u t f t^-1 reduced.
TwistWitness tec2a(const Word& f, const Word& t, const Word& u);
// v = rho^(u2 u1 t f t^-1); requires u1 != 1 and u1 t f t^-1 u2 reduced.
TwistWitness tec2b(const Word& f, const Word& t, const Word& u1, const Word& u2);
// v = rho^(u1 t f t^-1 u2); requires u1 t f t^-1 u2 reduced.
TwistWitness tec2c(const Word& f, const Word& t, const Word& u1, const Word& u2);

// Checks a twist witness against f and u. With literal_rotation, u0 must be a rotation
// of u; otherwise the reduced form of one.
bool verify_twist(const TwistWitness& tw, const Word& f, const Word& u, bool literal_rotation);

enum class MainCase { A, B };

struct MainWitness {
  MainCase tag = MainCase::A;
  Word u;  // reduced input
  Word w;  // reduced input
  Word u_prime;
  Word u_dblprime;  // case A
  Word h;           // case B
  Word f;           // u^-1 * w
  Word g;           // w * u^-1
  IdentitySequence cert1;
  IdentitySequence cert2;
};

MainWitness main_theorem(const Word& u, const Word& w);

// The two factors whose cyclically reduced product is claimed to be a rotation of rho^(w).
struct Claim {
  Word left;
  Word right;
  Word product;
};
Claim first_claim(const MainWitness& mw);
Claim second_claim(const MainWitness& mw);

struct CorollaryWitness {
  Word u_prime;
  Word u_dblprime;
  Word h;
  Word f;
  Word g;
  IdentitySequence cert1;
  IdentitySequence cert2;
};

CorollaryWitness corollary_witness(const Word& u, const Word& w);

struct VerificationReport {
  std::vector<std::pair<std::string, bool>> checks;

  bool passed() const;
  std::string failed_checks() const;
};

VerificationReport verify_witness(const Word& u, const Word& w, const MainWitness& mw);

struct OracleResult {
  std::vector<Word> case_a_prime;                // rotations u' of rho(u) for the first claim
  std::vector<Word> case_a_dblprime;             // rotations u'' for the second claim
  std::vector<std::pair<Word, Word>> case_b;     // (u0, h) factorizations

  bool contains(const MainWitness& mw) const;
};

inline constexpr std::size_t kDefaultOracleBound = 12;

OracleResult oracle_witness_search(const Word& u, const Word& w,
                                   std::size_t bound = kDefaultOracleBound);

}  // namespace crp
