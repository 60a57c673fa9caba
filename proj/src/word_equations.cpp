#include "crp/word_equations.hpp"

#include <algorithm>

namespace crp {

LeviSolution levi_split(const Word& u1, const Word& u2, const Word& v1, const Word& v2) {
  if (concat(u1, u2) != concat(v1, v2)) {
    throw std::invalid_argument("levi_split: u1 u2 and v1 v2 differ");
  }
  if (u1.size() > v1.size()) return {LeviSide::FirstLonger, u1.substr(v1.size())};
  if (u1.size() < v1.size()) return {LeviSide::SecondLonger, v1.substr(u1.size())};
  return {LeviSide::Equal, Word{}};
}

namespace {

std::vector<std::size_t> cut_points(std::span<const Word> parts) {
  std::vector<std::size_t> cuts{0};
  for (const auto& p : parts) cuts.push_back(cuts.back() + p.size());
  return cuts;
}

std::vector<std::size_t> place(std::span<const std::size_t> bars,
                               const std::vector<std::size_t>& cuts) {
  std::size_t parts = cuts.size() - 1;
  std::size_t total = cuts.back();
  std::vector<std::size_t> counts(parts, 0);
  for (std::size_t q : bars) {
    std::size_t target = parts;
    for (std::size_t i = 0; i < parts; ++i) {
      if (cuts[i] <= q && q < cuts[i + 1]) {
        target = i;
        break;
      }
    }
    if (target == parts && q == total) {
      for (std::size_t i = parts; i-- > 0;) {
        if (cuts[i] < cuts[i + 1]) {
          target = i;
          break;
        }
      }
    }
    if (target == parts) target = parts - 1;
    ++counts[target];
  }
  return counts;
}

}  // namespace

BarPlacement align_factorizations(std::span<const Word> u_parts, std::span<const Word> v_parts) {
  if (u_parts.empty() || v_parts.empty()) {
    throw std::invalid_argument("align_factorizations: empty factorization");
  }
  Word whole;
  for (const auto& p : u_parts) whole.append(p);
  Word other;
  for (const auto& p : v_parts) other.append(p);
  if (whole != other) throw std::invalid_argument("align_factorizations: products differ");

  auto ucuts = cut_points(u_parts);
  auto vcuts = cut_points(v_parts);
  std::span<const std::size_t> ubars(ucuts.data() + 1, ucuts.size() - 2);
  std::span<const std::size_t> vbars(vcuts.data() + 1, vcuts.size() - 2);

  BarPlacement out;
  out.bars_in_u = place(vbars, ucuts);
  out.bars_in_v = place(ubars, vcuts);

  std::vector<std::size_t> merged(ucuts);
  merged.insert(merged.end(), vcuts.begin(), vcuts.end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    out.fragments.push_back(whole.substr(merged[i], merged[i + 1] - merged[i]));
  }
  return out;
}

Cancellation max_cancellation(const Word& u, const Word& v) {
  if (!is_reduced(u) || !is_reduced(v)) {
    throw std::invalid_argument("max_cancellation: inputs must be reduced");
  }
  std::size_t k = 0;
  while (k < u.size() && k < v.size() && is_inverse_pair(u[u.size() - 1 - k], v[k])) ++k;
  return {u.first(u.size() - k), u.last(k), v.substr(k)};
}

ShirvCase shirv_decompose(const Word& u, const Word& v) {
  if (!is_reduced(u) || !is_reduced(v)) {
    throw std::invalid_argument("shirv_decompose: inputs must be reduced");
  }
  if (u == invert(v)) throw std::invalid_argument("shirv_decompose: u = v^-1");
  auto [ul, a, vr] = max_cancellation(u, v);
  auto [T, P] = cyc_reduce(concat(ul, vr));
  std::size_t n = T.size();
  if (n < ul.size() && n < vr.size()) {
    return ShirvCase2{ul.substr(n), vr.first(vr.size() - n), T, a};
  }
  if (n >= ul.size()) return ShirvCase1{ul, a, T.substr(ul.size())};
  return ShirvCase3{vr, T.substr(vr.size()), a};
}

ShirvAssembly assemble(const ShirvCase& c, const Word& product) {
  struct Visitor {
    const Word& p;
    ShirvAssembly operator()(const ShirvCase1& k) const {
      Word tail = concat(k.s, p, invert(k.s), invert(k.u1));
      return {concat(k.u1, k.a), concat(invert(k.a), tail), concat(k.u1, tail)};
    }
    ShirvAssembly operator()(const ShirvCase2& k) const {
      return {concat(k.t, k.c1, k.a), concat(invert(k.a), k.c2, invert(k.t)),
              concat(k.t, k.c1, k.c2, invert(k.t))};
    }
    ShirvAssembly operator()(const ShirvCase3& k) const {
      Word head = concat(invert(k.v1), k.s, p, invert(k.s));
      return {concat(head, k.a), concat(invert(k.a), k.v1), concat(head, k.v1)};
    }
  };
  return std::visit(Visitor{product}, c);
}

}  // namespace crp
