#include "crp/word.hpp"

#include <algorithm>

namespace crp {

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos > size()) throw std::out_of_range("Word::substr: position past the end");
  std::size_t n = std::min(len, size() - pos);
  return Word(begin() + static_cast<std::ptrdiff_t>(pos),
              begin() + static_cast<std::ptrdiff_t>(pos + n));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Word parse_word(std::string_view text) {
  if (text == "1") return {};
  if (text.empty()) throw ParseError(1, "empty word text (use \"1\")");
  Word w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c >= 'a' && c <= 'z') {
      w.push_back(Letter(c - 'a' + 1, false));
    } else if (c >= 'A' && c <= 'Z') {
      w.push_back(Letter(c - 'A' + 1, true));
    } else {
      throw ParseError(i + 1, "unexpected character '" + std::string(1, c) + "' at offset " +
                                  std::to_string(i + 1));
    }
  }
  return w;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (l.generator() > 26) {
      throw std::out_of_range("generator " + std::to_string(l.generator()) +
                              " has no letter in the text notation");
    }
    char base = l.is_inverse() ? 'A' : 'a';
    out.push_back(static_cast<char>(base + l.generator() - 1));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << format_word(w); }

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.append(v);
  return out;
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

Word reverse(const Word& w) {
  return Word(std::vector<Letter>(w.letters().rbegin(), w.letters().rend()));
}

bool has_prefix(const Word& w, const Word& p) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

bool has_suffix(const Word& w, const Word& s) {
  return s.size() <= w.size() &&
         std::equal(s.begin(), s.end(), w.end() - static_cast<std::ptrdiff_t>(s.size()));
}

Word reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && is_inverse_pair(stack.back(), l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (is_inverse_pair(w[i - 1], w[i])) return false;
  }
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_reduced(w)) return false;
  return w.size() < 2 || !is_inverse_pair(w.front(), w.back());
}

CyclicReduction cyc_reduce(const Word& w) {
  Word r = reduce(w);
  std::size_t n = r.size();
  std::size_t i = 0;
  while (2 * i + 1 < n && is_inverse_pair(r[i], r[n - 1 - i])) ++i;
  return {r.first(i), r.substr(i, n - 2 * i)};
}

Word reduced_product(const Word& u, const Word& v) { return reduce(concat(u, v)); }

CyclicProduct cyc_reduced_product(const Word& u, const Word& v) {
  auto cr = cyc_reduce(concat(u, v));
  return {std::move(cr.core), std::move(cr.conjugator)};
}

Word rotate_left(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  return concat(w.substr(k), w.first(k));
}

std::vector<Word> rotations(const Word& w) {
  if (w.empty()) return {Word{}};
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out.push_back(rotate_left(w, k));
  return out;
}

std::optional<std::size_t> rotation_offset(const Word& u, const Word& v) {
  if (u.size() != v.size()) return std::nullopt;
  if (u.empty()) return 0;
  Word uu = concat(u, u);
  auto it = std::search(uu.begin(), uu.end(), v.begin(), v.end());
  auto k = static_cast<std::size_t>(it - uu.begin());
  if (k >= u.size()) return std::nullopt;
  return k;
}

std::optional<Word> is_cyclic_perm(const Word& u, const Word& v) {
  auto k = rotation_offset(u, v);
  if (!k) return std::nullopt;
  return u.first(*k);
}

bool is_rotation(const Word& u, const Word& v) { return rotation_offset(u, v).has_value(); }

Word canonical_rotation(const Word& w) {
  std::size_t n = w.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    Letter a = w[(i + k) % n];
    Letter b = w[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return rotate_left(w, std::min(i, j));
}

PrimitiveRoot primitive_root(const Word& w) {
  if (!is_reduced(w)) throw std::invalid_argument("primitive_root: word is not reduced");
  if (w.empty()) return {Word{}, 0};
  auto [t, c] = cyc_reduce(w);
  std::size_t n = c.size();
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && c[i] != c[k]) k = border[k - 1];
    if (c[i] == c[k]) ++k;
    border[i] = k;
  }
  std::size_t period = n - border[n - 1];
  if (n % period != 0) period = n;
  return {concat(t, c.first(period), invert(t)), n / period};
}

std::optional<Word> conjugator(const Word& x, const Word& y) {
  auto cx = cyc_reduce(x);
  auto cy = cyc_reduce(y);
  auto p = is_cyclic_perm(cx.core, cy.core);
  if (!p) return std::nullopt;
  // core_y = p^-1 core_x p
  return reduce(concat(cy.conjugator, invert(*p), invert(cx.conjugator)));
}

}  // namespace crp
