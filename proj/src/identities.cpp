#include "crp/identities.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace crp {

ConjugatedRelator inverse(const ConjugatedRelator& y) { return {y.coefficient, invert(y.relator)}; }

Word eval_sequence(const IdentitySequence& h) {
  Word all;
  for (const auto& [a, r] : h) {
    all.append(a);
    all.append(r);
    all.append(invert(a));
  }
  return reduce(all);
}

namespace {

void check_pair_position(const IdentitySequence& h, std::size_t i, const char* op) {
  if (i < 1 || i + 1 > h.size()) {
    throw std::out_of_range(std::string(op) + ": position " + std::to_string(i) +
                            " has no following term");
  }
}

bool cancels(const ConjugatedRelator& x, const ConjugatedRelator& y) {
  return x.coefficient == y.coefficient && x.relator == invert(y.relator);
}

}  // namespace

IdentitySequence peiffer_delete(const IdentitySequence& h, std::size_t i) {
  check_pair_position(h, i, "peiffer_delete");
  if (!cancels(h[i - 1], h[i])) {
    throw std::invalid_argument("peiffer_delete: terms " + std::to_string(i) + " and " +
                                std::to_string(i + 1) + " are not mutually inverse");
  }
  IdentitySequence out(h);
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i - 1),
            out.begin() + static_cast<std::ptrdiff_t>(i + 1));
  return out;
}

IdentitySequence exchange(const IdentitySequence& h, std::size_t i, ExchangeKind kind) {
  check_pair_position(h, i, "exchange");
  IdentitySequence out(h);
  const auto& [a, r] = h[i - 1];
  const auto& [b, s] = h[i];
  if (kind == ExchangeKind::A) {
    out[i - 1] = {b, s};
    out[i] = {reduce(concat(b, invert(s), invert(b), a)), r};
  } else {
    out[i - 1] = {reduce(concat(a, r, invert(a), b)), s};
    out[i] = {a, r};
  }
  return out;
}

IdentitySequence conjugate_term(const IdentitySequence& h, std::size_t i, const Word& c) {
  if (i < 1 || i > h.size()) {
    throw std::out_of_range("conjugate_term: position " + std::to_string(i) + " out of range");
  }
  IdentitySequence out(h);
  auto& [a, r] = out[i - 1];
  a = reduce(concat(a, invert(c)));
  r = reduce(concat(c, r, invert(c)));
  return out;
}

IdentitySequence conjugate_all(const IdentitySequence& h, const Word& c) {
  IdentitySequence out(h);
  for (auto& y : out) y.coefficient = reduce(concat(c, y.coefficient));
  return out;
}

bool freely_trivial(const IdentitySequence& h) { return deletion_trace(h).has_value(); }

bool is_basic(const IdentitySequence& h) {
  if (!eval_sequence(h).empty()) throw std::invalid_argument("is_basic: psi(h) != 1");
  return freely_trivial(h);
}

bool is_strictly_basic(const IdentitySequence& h) {
  if (!is_basic(h)) return false;
  return std::all_of(h.begin(), h.end(), [&](const ConjugatedRelator& y) {
    return y.coefficient == h.front().coefficient;
  });
}

NormalForms normal_forms(const TwoSidedIdentity& id) {
  if (eval_sequence(id.lhs) != eval_sequence(id.rhs)) {
    throw std::invalid_argument("normal_forms: psi(lhs) != psi(rhs)");
  }
  IdentitySequence back;
  for (auto it = id.rhs.rbegin(); it != id.rhs.rend(); ++it) back.push_back(inverse(*it));
  NormalForms out;
  out.nf1 = id.lhs;
  out.nf1.insert(out.nf1.end(), back.begin(), back.end());
  out.nf2 = back;
  out.nf2.insert(out.nf2.end(), id.lhs.begin(), id.lhs.end());
  return out;
}

std::string format_move(const PeifferMove& m) {
  const char* name = m.kind == PeifferMove::Kind::Delete      ? "delete"
                     : m.kind == PeifferMove::Kind::ExchangeA ? "exchangeA"
                                                              : "exchangeB";
  return std::string(name) + "@" + std::to_string(m.position);
}

IdentitySequence apply_move(const IdentitySequence& h, const PeifferMove& m) {
  switch (m.kind) {
    case PeifferMove::Kind::Delete:
      return peiffer_delete(h, m.position);
    case PeifferMove::Kind::ExchangeA:
      return exchange(h, m.position, ExchangeKind::A);
    case PeifferMove::Kind::ExchangeB:
      return exchange(h, m.position, ExchangeKind::B);
  }
  throw std::logic_error("apply_move: unknown kind");
}

std::optional<std::vector<PeifferMove>> deletion_trace(const IdentitySequence& h) {
  std::vector<const ConjugatedRelator*> stack;
  std::vector<PeifferMove> moves;
  for (const auto& y : h) {
    if (!stack.empty() && cancels(*stack.back(), y)) {
      moves.push_back({PeifferMove::Kind::Delete, stack.size()});
      stack.pop_back();
    } else {
      stack.push_back(&y);
    }
  }
  if (!stack.empty()) return std::nullopt;
  return moves;
}

std::optional<std::vector<PeifferMove>> collapse_search(const IdentitySequence& h,
                                                        std::size_t max_moves) {
  if (!eval_sequence(h).empty()) throw std::invalid_argument("collapse_search: psi(h) != 1");
  if (h.empty()) return std::vector<PeifferMove>{};

  std::map<IdentitySequence, std::pair<IdentitySequence, PeifferMove>> parent;
  std::deque<std::pair<IdentitySequence, std::size_t>> queue{{h, 0}};
  std::set<IdentitySequence> seen{h};

  auto trace_back = [&](IdentitySequence cur) {
    std::vector<PeifferMove> moves;
    while (cur != h) {
      const auto& [prev, move] = parent.at(cur);
      moves.push_back(move);
      cur = prev;
    }
    std::reverse(moves.begin(), moves.end());
    return moves;
  };

  while (!queue.empty()) {
    auto [cur, depth] = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 1; i < cur.size(); ++i) {
      for (auto kind : {PeifferMove::Kind::Delete, PeifferMove::Kind::ExchangeA,
                        PeifferMove::Kind::ExchangeB}) {
        if (kind == PeifferMove::Kind::Delete && !cancels(cur[i - 1], cur[i])) continue;
        PeifferMove move{kind, i};
        auto next = apply_move(cur, move);
        // each remaining pair still needs one deletion
        if (depth + 1 + next.size() / 2 > max_moves) continue;
        if (!seen.insert(next).second) continue;
        parent.emplace(next, std::make_pair(cur, move));
        if (next.empty()) return trace_back(next);
        queue.emplace_back(std::move(next), depth + 1);
      }
    }
  }
  return std::nullopt;
}

std::string format_sequence(const IdentitySequence& h) {
  std::string out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i > 0) out += '*';
    out += '(' + format_word(h[i].coefficient) + ';' + format_word(h[i].relator) + ')';
  }
  return out;
}

std::string format_identity(const TwoSidedIdentity& id) {
  return format_sequence(id.lhs) + "==" + format_sequence(id.rhs);
}

namespace {

IdentitySequence parse_sequence_at(std::string_view text, std::size_t base) {
  IdentitySequence out;
  std::size_t i = 0;
  auto fail = [&](std::size_t at, const std::string& what) {
    throw ParseError(base + at + 1, what + " at offset " + std::to_string(base + at + 1));
  };
  auto parse_part = [&](std::size_t from, std::size_t to) {
    try {
      return parse_word(text.substr(from, to - from));
    } catch (const ParseError& e) {
      fail(from + e.offset() - 1, "bad word");
    }
    return Word{};
  };
  while (i < text.size()) {
    if (!out.empty()) {
      if (text[i] != '*') fail(i, "expected '*'");
      ++i;
    }
    if (i >= text.size() || text[i] != '(') fail(i, "expected '('");
    std::size_t semi = text.find(';', i);
    std::size_t close = text.find(')', i);
    if (semi == std::string_view::npos || close == std::string_view::npos || semi > close) {
      fail(i, "unterminated term");
    }
    Word a = parse_part(i + 1, semi);
    Word r = parse_part(semi + 1, close);
    out.push_back({std::move(a), std::move(r)});
    i = close + 1;
  }
  return out;
}

}  // namespace

IdentitySequence parse_sequence(std::string_view text) { return parse_sequence_at(text, 0); }

TwoSidedIdentity parse_identity(std::string_view line) {
  std::size_t eq = line.find("==");
  if (eq == std::string_view::npos) throw ParseError(line.size() + 1, "missing '=='");
  if (line.find("==", eq + 2) != std::string_view::npos) {
    throw ParseError(line.find("==", eq + 2) + 1, "more than one '=='");
  }
  return {parse_sequence_at(line.substr(0, eq), 0), parse_sequence_at(line.substr(eq + 2), eq + 2)};
}

}  // namespace crp
