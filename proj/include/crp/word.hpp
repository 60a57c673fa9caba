#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crp {

// A generator x_g (g >= 1) or its inverse.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(std::int32_t generator, bool inverse)
      : value_(inverse ? -generator : generator) {}

  static constexpr Letter from_signed(std::int32_t v) {
    Letter l;
    l.value_ = v;
    return l;
  }

  constexpr std::int32_t generator() const { return value_ < 0 ? -value_ : value_; }
  constexpr bool is_inverse() const { return value_ < 0; }
  constexpr std::int32_t signed_value() const { return value_; }
  constexpr Letter inverse() const { return from_signed(-value_); }

  friend constexpr bool operator==(Letter, Letter) = default;

  // generator ascending, then the positive letter first
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
    if (auto c = a.generator() <=> b.generator(); c != 0) return c;
    return b.value_ <=> a.value_;
  }

 private:
  std::int32_t value_ = 1;
};

constexpr bool is_inverse_pair(Letter a, Letter b) { return a == b.inverse(); }

class Word {
 public:
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  Word(const_iterator first, const_iterator last) : letters_(first, last) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  const_iterator begin() const { return letters_.begin(); }
  const_iterator end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const { return letters_; }

  void push_back(Letter l) { letters_.push_back(l); }
  void pop_back() { letters_.pop_back(); }
  void append(const Word& w) { letters_.insert(letters_.end(), w.begin(), w.end()); }

  // Letters [pos, pos + len), clamped to the end.
  Word substr(std::size_t pos, std::size_t len = SIZE_MAX) const;
  Word first(std::size_t n) const { return substr(0, n); }
  Word last(std::size_t n) const { return substr(n > size() ? 0 : size() - n); }

  friend bool operator==(const Word&, const Word&) = default;
  // lexicographic in the letter order; a proper prefix sorts first
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

// (length, lex) order used for enumeration.
bool shortlex_less(const Word& a, const Word& b);

class ParseError : public std::invalid_argument {
 public:
  // offset is 1-based
  ParseError(std::size_t offset, const std::string& what)
      : std::invalid_argument(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

Word parse_word(std::string_view text);
std::string format_word(const Word& w);
std::ostream& operator<<(std::ostream& os, const Word& w);

namespace literals {
inline Word operator""_w(const char* s, std::size_t n) { return parse_word({s, n}); }
}  // namespace literals

Word concat(const Word& u, const Word& v);
template <typename... Ws>
Word concat(const Word& u, const Word& v, const Ws&... rest) {
  return concat(concat(u, v), rest...);
}
Word invert(const Word& w);
Word reverse(const Word& w);
bool has_prefix(const Word& w, const Word& p);
bool has_suffix(const Word& w, const Word& s);

Word reduce(const Word& w);
bool is_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

// rho(w) = conjugator . core . conjugator^-1 as a literal factorization.
struct CyclicReduction {
  Word conjugator;
  Word core;
};
CyclicReduction cyc_reduce(const Word& w);

Word reduced_product(const Word& u, const Word& v);

// result = u*v; rho(uv) = conjugator . result . conjugator^-1
struct CyclicProduct {
  Word result;
  Word conjugator;
};
CyclicProduct cyc_reduced_product(const Word& u, const Word& v);

// Letters k.. followed by letters ..k-1 (k taken mod |w|).
Word rotate_left(const Word& w, std::size_t k);
// All |w| rotations in offset order; {1} for the empty word.
std::vector<Word> rotations(const Word& w);
// Least k with rotate_left(u, k) == v.
std::optional<std::size_t> rotation_offset(const Word& u, const Word& v);
// Shortest p with u p = p v literally, when u ~ v.
std::optional<Word> is_cyclic_perm(const Word& u, const Word& v);
bool is_rotation(const Word& u, const Word& v);
Word canonical_rotation(const Word& w);

// rho(w) = rho(root^exponent) with root primitive; w must be reduced.
struct PrimitiveRoot {
  Word root;
  std::size_t exponent;
};
PrimitiveRoot primitive_root(const Word& w);

// Some alpha with rho(alpha x alpha^-1) = rho(y).
std::optional<Word> conjugator(const Word& x, const Word& y);

}  // namespace crp
