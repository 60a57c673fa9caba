#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crp/word.hpp"

namespace crp {

// The element (a, r) standing for a r a^-1.
struct ConjugatedRelator {
  Word coefficient;
  Word relator;

  friend bool operator==(const ConjugatedRelator&, const ConjugatedRelator&) = default;
  friend auto operator<=>(const ConjugatedRelator&, const ConjugatedRelator&) = default;
};

ConjugatedRelator inverse(const ConjugatedRelator& y);

using IdentitySequence = std::vector<ConjugatedRelator>;

struct TwoSidedIdentity {
  IdentitySequence lhs;
  IdentitySequence rhs;
};

Word eval_sequence(const IdentitySequence& h);

// Positions are 1-based. A move at position i acts on terms i and i + 1.
IdentitySequence peiffer_delete(const IdentitySequence& h, std::size_t i);

enum class ExchangeKind { A, B };
IdentitySequence exchange(const IdentitySequence& h, std::size_t i, ExchangeKind kind);

// (a_i, r_i) -> (rho(a_i c^-1), rho(c r_i c^-1))
IdentitySequence conjugate_term(const IdentitySequence& h, std::size_t i, const Word& c);

// Every coefficient a -> rho(c a).
IdentitySequence conjugate_all(const IdentitySequence& h, const Word& c);

// Free reduction over the terms as letters; no precondition on psi.
bool freely_trivial(const IdentitySequence& h);
bool is_basic(const IdentitySequence& h);
bool is_strictly_basic(const IdentitySequence& h);

struct NormalForms {
  IdentitySequence nf1;
  IdentitySequence nf2;
};
NormalForms normal_forms(const TwoSidedIdentity& id);

struct PeifferMove {
  enum class Kind { Delete, ExchangeA, ExchangeB } kind;
  std::size_t position;

  friend bool operator==(const PeifferMove&, const PeifferMove&) = default;
};

std::string format_move(const PeifferMove& m);
IdentitySequence apply_move(const IdentitySequence& h, const PeifferMove& m);

// The deletions performed by the free reduction, when it empties h.
std::optional<std::vector<PeifferMove>> deletion_trace(const IdentitySequence& h);

// Shortest move list (breadth first, at most max_moves) that empties h.
std::optional<std::vector<PeifferMove>> collapse_search(const IdentitySequence& h,
                                                        std::size_t max_moves);

// Text form: (coef;relator)*(coef;relator)==(coef;relator)
std::string format_sequence(const IdentitySequence& h);
std::string format_identity(const TwoSidedIdentity& id);
IdentitySequence parse_sequence(std::string_view text);
TwoSidedIdentity parse_identity(std::string_view line);

}  // namespace crp
