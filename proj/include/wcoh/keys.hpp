// Basis-key families and their weights. The weight is the e0-eigenvalue;
// every operator in the library is weight-homogeneous, which is what makes
// identities checked inside a finite weight window exact.
#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "wcoh/formal_sum.hpp"

namespace wcoh {

// ---------------------------------------------------------------------------
// W1 basis: e_i = x^{i+1} d/dx, i >= -1. weight(e_i) = i.

struct W1Key {
  int i = -1;
  friend auto operator<=>(const W1Key&, const W1Key&) = default;
};
inline int weight_of(const W1Key& k) { return k.i; }

using W1Elem = FormalSum<W1Key>;

// ---------------------------------------------------------------------------
// Omega^{<=1}: x^i (i >= 0, weight i) and f^i = x^i dx (i >= 0, weight i+1).

enum class OmegaKind : unsigned char { Fun, Form };  // x^i vs f^i

struct OmegaKey {
  OmegaKind kind = OmegaKind::Fun;
  int i = 0;
  friend auto operator<=>(const OmegaKey&, const OmegaKey&) = default;
};
inline OmegaKey xk(int i) { return OmegaKey{OmegaKind::Fun, i}; }
inline OmegaKey fk(int i) { return OmegaKey{OmegaKind::Form, i}; }
inline int weight_of(const OmegaKey& k) {
  return k.kind == OmegaKind::Fun ? k.i : k.i + 1;
}

using OmegaElem = FormalSum<OmegaKey>;

// ---------------------------------------------------------------------------
// Theta covectors: theta^i dual to e_i, weight(theta^i) = -i. Wedge words
// are strictly increasing index lists.

using ThetaWord = std::vector<int>;  // strictly increasing

inline int weight_of_theta(const ThetaWord& w) {
  int s = 0;
  for (int i : w) s -= i;
  return s;
}

// Sort a wedge word of one family; returns the permutation sign, or nullopt
// for a repeated generator (the wedge is zero).
inline std::optional<std::pair<std::vector<int>, int>> wedge_normalize(
    std::vector<int> word) {
  int sign = 1;
  for (std::size_t i = 1; i < word.size(); ++i)
    for (std::size_t j = i; j > 0 && word[j] < word[j - 1]; --j) {
      std::swap(word[j], word[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < word.size(); ++i)
    if (word[i] == word[i - 1]) return std::nullopt;
  return std::make_pair(std::move(word), sign);
}

// ---------------------------------------------------------------------------
// XMono: monomial in the affine jet coordinates x_1, x_2, ... of F(N),
// stored as a sorted multiset of indices. weight = sum of indices.

struct XMono {
  std::vector<int> idx;  // sorted ascending, entries >= 1
  friend auto operator<=>(const XMono&, const XMono&) = default;

  bool is_one() const { return idx.empty(); }
  int weight() const { return std::accumulate(idx.begin(), idx.end(), 0); }
  std::size_t degree() const { return idx.size(); }

  XMono times(const XMono& o) const {
    XMono r;
    r.idx.resize(idx.size() + o.idx.size());
    std::merge(idx.begin(), idx.end(), o.idx.begin(), o.idx.end(),
               r.idx.begin());
    return r;
  }
};
inline XMono xmono() { return XMono{}; }
inline XMono xmono(int i) { return XMono{{i}}; }
inline XMono xmono(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return XMono{std::move(v)};
}
inline int weight_of(const XMono& m) { return m.weight(); }

using FPoly = FormalSum<XMono>;

inline FPoly fpoly_one() { return FPoly(xmono()); }

inline FPoly operator*(const FPoly& a, const FPoly& b) {
  return bilinear<XMono, XMono, XMono>(
      a, b, [](const XMono& x, const XMono& y) {
        return FPoly(x.times(y));
      });
}

// ---------------------------------------------------------------------------
// U(s): PBW normal form e_{-1}^a e_0^b. weight = -a.

struct UsWord {
  int a = 0;  // power of e_{-1}
  int b = 0;  // power of e_0
  friend auto operator<=>(const UsWord&, const UsWord&) = default;
  bool is_one() const { return a == 0 && b == 0; }
  int weight() const { return -a; }
};
inline int weight_of(const UsWord& w) { return w.weight(); }

using UsElem = FormalSum<UsWord>;

// ---------------------------------------------------------------------------
// U(n): PBW monomials as weakly increasing words over {1, 2, ...};
// the product is concatenation + straightening (see usalg.hpp for U(s),
// pairing.hpp for where these get consumed).

struct UnWord {
  std::vector<int> j;  // weakly increasing, entries >= 1
  friend auto operator<=>(const UnWord&, const UnWord&) = default;
  bool is_one() const { return j.empty(); }
  int weight() const { return std::accumulate(j.begin(), j.end(), 0); }
};
inline int weight_of(const UnWord& w) { return w.weight(); }

// ---------------------------------------------------------------------------
// Weight windows.

struct WeightWindow {
  int lo = 0;
  int hi = 0;
  bool contains(int w) const { return lo <= w && w <= hi; }
};

// Drop all keys whose weight lies outside the window. Idempotent, linear.
template <class K>
FormalSum<K> truncate(const FormalSum<K>& v, const WeightWindow& w) {
  return v.filter([&](const K& k) { return w.contains(weight_of(k)); });
}

}  // namespace wcoh
