#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crp/sweep.hpp"
#include "crp/word.hpp"
#include "oracles.hpp"

using namespace crp;
using namespace crp::literals;

namespace {

std::string fmt(const Word& w) { return format_word(w); }

// Every word over x, X, y, Y up to the given length, reduced or not.
std::vector<std::string> all_strings(std::size_t max_len) {
  std::vector<std::string> out{""};
  std::vector<std::string> layer{""};
  for (std::size_t n = 1; n <= max_len; ++n) {
    std::vector<std::string> next;
    for (const auto& s : layer) {
      for (char c : std::string("xXyY")) next.push_back(s + c);
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("parse and format") {
  Word w = "xYy"_w;
  REQUIRE(w.size() == 3);
  CHECK(w[0] == Letter(24, false));
  CHECK(w[1] == Letter(25, true));
  CHECK(w[2] == Letter(25, false));
  CHECK("1"_w.empty());
  CHECK_THROWS_AS(parse_word("x y"), ParseError);
  CHECK(fmt(Word{}) == "1");
  CHECK(fmt(Word{Letter(24, false), Letter(25, true)}) == "xY");
  CHECK(fmt("xxY"_w) == "xxY");
  CHECK_THROWS_AS(format_word(Word{Letter(27, false)}), std::out_of_range);
}

TEST_CASE("parse errors carry 1-based offsets") {
  try {
    parse_word("x(");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  try {
    parse_word("");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
  CHECK_THROWS_AS(parse_word("x1"), ParseError);
}

TEST_CASE("format round trip over all short words") {
  for (const auto& s : all_strings(5)) {
    Word w = oracle::W(s);
    CHECK(oracle::S(w) == s);
    CHECK(parse_word(format_word(w)) == w);
  }
}

TEST_CASE("concat invert reverse") {
  CHECK(fmt(concat("xy"_w, "Yx"_w)) == "xyYx");
  CHECK(fmt(concat("1"_w, "x"_w)) == "x");
  CHECK(fmt(concat("x"_w, "1"_w)) == "x");
  CHECK(fmt(invert("xy"_w)) == "YX");
  CHECK(fmt(invert("1"_w)) == "1");
  CHECK(fmt(invert("xYxyy"_w)) == "YYXyX");
  CHECK(fmt(reverse("xYy"_w)) == "yYx");
  CHECK(fmt(reverse("1"_w)) == "1");
  CHECK(fmt(invert("xYy"_w)) == "YyX");
  CHECK(fmt(reverse(invert("xYy"_w))) == "XyY");
  CHECK(fmt(invert(reverse("xYy"_w))) == "XyY");
  for (const auto& s : all_strings(4)) {
    Word w = oracle::W(s);
    CHECK(oracle::S(invert(w)) == oracle::inv(s));
    CHECK(invert(invert(w)) == w);
  }
}

TEST_CASE("reduce examples and oracle") {
  CHECK(fmt(reduce("xXy"_w)) == "y");
  CHECK(fmt(reduce("xyYX"_w)) == "1");
  CHECK(fmt(reduce("xyYxxX"_w)) == "xx");
  CHECK(is_reduced("xyX"_w));
  CHECK_FALSE(is_cyclically_reduced("xyX"_w));
  CHECK(is_reduced("1"_w));
  CHECK(is_cyclically_reduced("1"_w));
  CHECK_FALSE(is_reduced("xX"_w));
  CHECK_FALSE(is_cyclically_reduced("xX"_w));
  for (const auto& s : all_strings(7)) {
    Word w = oracle::W(s);
    auto expect = oracle::reduce(s);
    REQUIRE(oracle::S(reduce(w)) == expect);
    CHECK(is_reduced(w) == (expect == s));
    CHECK((s.size() - expect.size()) % 2 == 0);
  }
}

TEST_CASE("cyclic reduction examples and oracle") {
  auto a = cyc_reduce("xyX"_w);
  CHECK(fmt(a.conjugator) == "x");
  CHECK(fmt(a.core) == "y");
  auto b = cyc_reduce("YXyxy"_w);
  CHECK(fmt(b.conjugator) == "YX");
  CHECK(fmt(b.core) == "y");
  auto c = cyc_reduce("yy"_w);
  CHECK(fmt(c.conjugator) == "1");
  CHECK(fmt(c.core) == "yy");
  for (const auto& s : all_strings(7)) {
    Word w = oracle::W(s);
    auto [t, core] = cyc_reduce(w);
    auto [et, ecore] = oracle::cyc(s);
    REQUIRE(oracle::S(t) == et);
    REQUIRE(oracle::S(core) == ecore);
    CHECK(concat(t, core, invert(t)) == reduce(w));
    CHECK(is_cyclically_reduced(core));
  }
}

TEST_CASE("products") {
  CHECK(fmt(reduced_product("xy"_w, "YX"_w)) == "1");
  CHECK(fmt(reduced_product("xy"_w, "Yx"_w)) == "xx");
  CHECK(reduced_product("1"_w, "xXy"_w) == "y"_w);

  auto p = cyc_reduced_product("xy"_w, "X"_w);
  CHECK(fmt(p.result) == "y");
  CHECK(fmt(p.conjugator) == "x");
  auto q = cyc_reduced_product("y"_w, "x"_w);
  CHECK(fmt(q.result) == "yx");
  CHECK(fmt(q.conjugator) == "1");
  auto r = cyc_reduced_product("xy"_w, "Yx"_w);
  CHECK(fmt(r.result) == "xx");
  CHECK(fmt(r.conjugator) == "1");

  // not associative
  Word left = cyc_reduced_product(cyc_reduced_product("xy"_w, "X"_w).result, "x"_w).result;
  Word right = cyc_reduced_product("xy"_w, cyc_reduced_product("X"_w, "x"_w).result).result;
  CHECK(fmt(left) == "yx");
  CHECK(fmt(right) == "xy");

  auto strs = all_strings(4);
  for (std::size_t i = 0; i < strs.size(); i += 3) {
    for (std::size_t j = 0; j < strs.size(); j += 5) {
      Word u = oracle::W(strs[i]), v = oracle::W(strs[j]);
      auto [res, conj] = cyc_reduced_product(u, v);
      REQUIRE(oracle::S(res) == oracle::cstar(strs[i], strs[j]));
      CHECK(concat(conj, res, invert(conj)) == reduce(concat(u, v)));
      CHECK(res == cyc_reduced_product(reduce(u), reduce(v)).result);
    }
  }
}

TEST_CASE("rotations") {
  auto r = rotations("xy"_w);
  REQUIRE(r.size() == 2);
  CHECK(fmt(r[0]) == "xy");
  CHECK(fmt(r[1]) == "yx");
  auto e = rotations("1"_w);
  REQUIRE(e.size() == 1);
  CHECK(e[0].empty());
  auto d = rotations("xx"_w);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == d[1]);
  CHECK(rotate_left("xyY"_w, 4) == "yYx"_w);

  CHECK(fmt(*is_cyclic_perm("xy"_w, "yx"_w)) == "x");
  CHECK(fmt(*is_cyclic_perm("xy"_w, "xy"_w)) == "1");
  CHECK_FALSE(is_cyclic_perm("xy"_w, "xx"_w).has_value());

  for (const auto& s : all_strings(5)) {
    Word w = oracle::W(s);
    auto rs = rotations(w);
    auto expect = oracle::all_rotations(s);
    REQUIRE(rs.size() == expect.size());
    for (std::size_t k = 0; k < rs.size(); ++k) CHECK(oracle::S(rs[k]) == expect[k]);
    CHECK(oracle::S(canonical_rotation(w)) == oracle::least_rotation(s));
  }
}

TEST_CASE("cyclic permutation witness is shortest") {
  auto strs = all_strings(4);
  for (const auto& a : strs) {
    for (const auto& b : strs) {
      if (a.size() != b.size()) continue;
      Word u = oracle::W(a), v = oracle::W(b);
      auto p = is_cyclic_perm(u, v);
      REQUIRE(p.has_value() == oracle::is_rotation(a, b));
      CHECK(is_rotation(u, v) == p.has_value());
      if (!p) continue;
      CHECK(concat(u, *p) == concat(*p, v));
      for (std::size_t k = 0; k < p->size(); ++k) {
        Word shorter = u.first(k);
        CHECK(concat(u, shorter) != concat(shorter, v));
      }
      auto off = rotation_offset(u, v);
      REQUIRE(off.has_value());
      CHECK(rotate_left(u, *off) == v);
    }
  }
}

TEST_CASE("canonical rotation") {
  CHECK(fmt(canonical_rotation("yx"_w)) == "xy");
  CHECK(fmt(canonical_rotation("1"_w)) == "1");
  CHECK(fmt(canonical_rotation("xYxY"_w)) == "xYxY");
}

TEST_CASE("primitive root") {
  auto a = primitive_root("xyxy"_w);
  CHECK(fmt(a.root) == "xy");
  CHECK(a.exponent == 2);
  auto b = primitive_root("x"_w);
  CHECK(fmt(b.root) == "x");
  CHECK(b.exponent == 1);
  auto c = primitive_root("xyyX"_w);
  CHECK(fmt(c.root) == "xyX");
  CHECK(c.exponent == 2);
  CHECK(reduce(concat(c.root, c.root)) == "xyyX"_w);
  auto d = primitive_root("1"_w);
  CHECK(d.root.empty());
  CHECK(d.exponent == 0);
  CHECK_THROWS(primitive_root("xX"_w));

  for (const auto& w : enumerate_reduced_words_up_to(2, 8)) {
    auto [root, m] = primitive_root(w);
    auto [eroot, em] = oracle::root(format_word(w));
    REQUIRE(oracle::S(root) == eroot);
    REQUIRE(m == em);
  }
}

TEST_CASE("conjugator search") {
  for (const auto& x : enumerate_reduced_words_up_to(2, 4)) {
    for (const auto& r : rotations(cyc_reduce(x).core)) {
      Word y = concat("yx"_w, r, "XY"_w);
      auto c = conjugator(x, y);
      REQUIRE(c.has_value());
      CHECK(reduce(concat(*c, x, invert(*c))) == reduce(y));
    }
  }
  CHECK_FALSE(conjugator("x"_w, "y"_w).has_value());
  CHECK_FALSE(conjugator("xy"_w, "xx"_w).has_value());
}

TEST_CASE("shortlex order and word order") {
  CHECK(shortlex_less("y"_w, "xx"_w));
  CHECK("x"_w < "X"_w);
  CHECK("X"_w < "y"_w);
  CHECK("x"_w < "xy"_w);
}
