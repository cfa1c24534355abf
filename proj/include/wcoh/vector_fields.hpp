// Formal vector fields: the general-n Lie algebra W_n on the monomial
// basis e_i^J = x^J d_i, its n = 1 specialization W_1 with the matched-pair
// splitting s (+) n, and the W_1-module Omega^{<=1} of formal functions and
// 1-forms together with the dual theta-covector actions.
#pragma once

#include <stdexcept>

#include "wcoh/keys.hpp"

namespace wcoh {

// ---------------------------------------------------------------------------
// W_n, general n. Basis element x^{j_1}...x^{j_r} d/dx^i with J a multiset
// (sorted). J empty encodes e_i = d_i.

struct WnKey {
  int n = 1;               // ambient dimension
  int lower = 1;           // i in 1..n
  std::vector<int> upper;  // sorted multiset, entries in 1..n
  friend auto operator<=>(const WnKey&, const WnKey&) = default;
};

using WnElem = FormalSum<WnKey>;

inline int multiplicity(const std::vector<int>& ms, int v) {
  return static_cast<int>(std::count(ms.begin(), ms.end(), v));
}

inline std::vector<int> multiset_insert(std::vector<int> ms, int v) {
  ms.insert(std::upper_bound(ms.begin(), ms.end(), v), v);
  return ms;
}

inline std::vector<int> multiset_erase_one(std::vector<int> ms, int v) {
  auto it = std::find(ms.begin(), ms.end(), v);
  ms.erase(it);
  return ms;
}

// Bracket of monomial vector fields:
//   [x^A d_i, x^B d_p] = mult_i(B) x^{A u B \ i} d_p
//                      - mult_p(A) x^{B u A \ p} d_i.
// This is the multiset reading of the displayed structure constants in
// which the hatted-index sums run over positions; for pairwise-distinct
// indices it coincides with the displays verbatim.
inline WnElem bracket_wn(const WnKey& a, const WnKey& b) {
  if (a.n != b.n) throw std::invalid_argument("bracket_wn: mismatched n");
  WnElem out;
  int ma = multiplicity(b.upper, a.lower);
  if (ma != 0) {
    std::vector<int> up = multiset_erase_one(b.upper, a.lower);
    for (int v : a.upper) up = multiset_insert(up, v);
    out.add(WnKey{a.n, b.lower, up}, Scalar(ma));
  }
  int mb = multiplicity(a.upper, b.lower);
  if (mb != 0) {
    std::vector<int> up = multiset_erase_one(a.upper, b.lower);
    for (int v : b.upper) up = multiset_insert(up, v);
    out.add(WnKey{a.n, a.lower, up}, Scalar(-mb));
  }
  return out;
}

inline WnElem bracket_wn(const WnElem& a, const WnElem& b) {
  return bilinear<WnKey, WnKey, WnKey>(
      a, b, [](const WnKey& x, const WnKey& y) { return bracket_wn(x, y); });
}

// The displayed bracket formulas transcribed literally (distinguished first
// upper index, position sums over the rest). Cross-check only: agrees with
// bracket_wn whenever all indices involved are pairwise distinct.
inline WnElem bracket_wn_displayed(const WnKey& a, const WnKey& b) {
  auto term = [](int n, int lower, std::vector<int> upper, int c, WnElem& o) {
    std::sort(upper.begin(), upper.end());
    o.add(WnKey{n, lower, std::move(upper)}, Scalar(c));
  };
  WnElem out;
  const auto &A = a.upper, &B = b.upper;
  if (A.empty() && B.empty()) return out;  // [e_i, e_j] = 0
  if (A.empty()) {                         // [e_l, e_p^{q l_1..}] = d_l^q ...
    if (B.front() == a.lower) {
      std::vector<int> up(B.begin() + 1, B.end());
      term(a.n, b.lower, up, 1, out);
    }
    return out;
  }
  if (B.empty()) return -bracket_wn_displayed(b, a);
  // [e_i^{j k_1..k_r}, e_p^{q l_1..l_s}]
  int i = a.lower, p = b.lower, j = A.front(), q = B.front();
  std::vector<int> ks(A.begin() + 1, A.end()), ls(B.begin() + 1, B.end());
  if (i == q) {
    std::vector<int> up = A;
    up.insert(up.end(), ls.begin(), ls.end());
    term(a.n, p, up, 1, out);
  }
  for (std::size_t m = 0; m < ls.size(); ++m)
    if (i == ls[m]) {
      std::vector<int> up = {j, q};
      up.insert(up.end(), ks.begin(), ks.end());
      for (std::size_t t = 0; t < ls.size(); ++t)
        if (t != m) up.push_back(ls[t]);
      term(a.n, p, up, 1, out);
    }
  if (p == j) {
    std::vector<int> up = B;
    up.insert(up.end(), ks.begin(), ks.end());
    term(a.n, i, up, -1, out);
  }
  for (std::size_t m = 0; m < ks.size(); ++m)
    if (p == ks[m]) {
      std::vector<int> up = {j, q};
      up.insert(up.end(), ls.begin(), ls.end());
      for (std::size_t t = 0; t < ks.size(); ++t)
        if (t != m) up.push_back(ks[t]);
      term(a.n, i, up, -1, out);
    }
  return out;
}

// e_k of W_1 as a W_n monomial at n = 1 (k+1 upper ones).
inline WnKey w1_as_wn(int k) {
  return WnKey{1, 1, std::vector<int>(static_cast<std::size_t>(k + 1), 1)};
}

// ---------------------------------------------------------------------------
// W_1.  [e_p, e_q] = (q - p) e_{p+q}; s = span{e_-1, e_0}, n = span{e_i, i>=1}.

inline W1Elem bracket_w1(int p, int q) {
  W1Elem out;
  if (p + q >= -1) out.add(W1Key{p + q}, Scalar(q - p));
  return out;
}

inline W1Elem bracket_w1(const W1Elem& a, const W1Elem& b) {
  return bilinear<W1Key, W1Key, W1Key>(
      a, b, [](const W1Key& x, const W1Key& y) { return bracket_w1(x.i, y.i); });
}

inline bool in_s(const W1Key& k) { return k.i <= 0; }
inline bool in_n(const W1Key& k) { return k.i >= 1; }

struct MatchedPair {
  W1Elem s_part;  // xi |> X  (projection of [xi, X] to s)
  W1Elem n_part;  // xi <| X  (projection to n)
};

// Bracket-and-project matched-pair actions for xi in n, X in s.
inline MatchedPair matched_pair(const W1Elem& xi, const W1Elem& X) {
  for (const auto& [k, c] : xi)
    if (!in_n(k)) throw std::invalid_argument("matched_pair: xi not in n");
  for (const auto& [k, c] : X)
    if (!in_s(k)) throw std::invalid_argument("matched_pair: X not in s");
  W1Elem br = bracket_w1(xi, X);
  return MatchedPair{br.filter([](const W1Key& k) { return in_s(k); }),
                     br.filter([](const W1Key& k) { return in_n(k); })};
}

// ---------------------------------------------------------------------------
// Left W_1-action on Omega^{<=1} (Lie derivative):
//   e_p . x^j = j x^{p+j}           (zero when p + j < 0)
//   e_p . f^j = (p + j + 1) f^{p+j}

inline OmegaElem act_on_forms(int p, const OmegaKey& k) {
  OmegaElem out;
  if (k.kind == OmegaKind::Fun) {
    if (k.i != 0 && p + k.i >= 0) out.add(xk(p + k.i), Scalar(k.i));
  } else {
    int c = p + k.i + 1;
    if (c != 0 && p + k.i >= 0) out.add(fk(p + k.i), Scalar(c));
  }
  return out;
}

inline OmegaElem act_on_forms(const W1Elem& v, const OmegaElem& w) {
  return bilinear<W1Key, OmegaKey, OmegaKey>(
      v, w, [](const W1Key& e, const OmegaKey& k) { return act_on_forms(e.i, k); });
}

inline OmegaElem act_on_forms(int p, const OmegaElem& w) {
  return act_on_forms(W1Elem(W1Key{p}), w);
}

// Right module action omega . X := -X . omega.
inline OmegaElem right_act(const OmegaElem& w, const W1Elem& v) {
  return -act_on_forms(v, w);
}

// Right action on covectors: (theta . X)(Y) = theta([X, Y]), i.e.
// theta^i . e_p = (i - 2p) theta^{i-p}, restricted to the ambient family
// of the hosting complex (s* keeps i - p <= 0, n* keeps i - p >= 1).
enum class ThetaSpace { Full, SStar, NStar };

inline bool theta_in_space(int i, ThetaSpace sp) {
  switch (sp) {
    case ThetaSpace::Full: return i >= -1;
    case ThetaSpace::SStar: return i == -1 || i == 0;
    case ThetaSpace::NStar: return i >= 1;
  }
  return false;
}

inline FormalSum<int> theta_right_act(int i, int p, ThetaSpace sp) {
  FormalSum<int> out;
  int c = i - 2 * p, j = i - p;
  if (c != 0 && theta_in_space(j, sp)) out.add(j, Scalar(c));
  return out;
}

// ---------------------------------------------------------------------------
// Module product Omega^0 x Omega^{<=1} -> Omega^{<=1}:
//   x^i x^j = x^{i+j}, x^i f^j = f^{i+j}, f^i f^j = 0.

inline OmegaElem module_product(const OmegaKey& a, const OmegaKey& b) {
  OmegaElem out;
  if (a.kind == OmegaKind::Form && b.kind == OmegaKind::Form) return out;
  if (a.kind == OmegaKind::Fun && b.kind == OmegaKind::Fun)
    out.add(xk(a.i + b.i), Scalar(1));
  else
    out.add(fk(a.i + b.i), Scalar(1));
  return out;
}

inline OmegaElem module_product(const OmegaElem& a, const OmegaElem& b) {
  return bilinear<OmegaKey, OmegaKey, OmegaKey>(
      a, b, [](const OmegaKey& x, const OmegaKey& y) { return module_product(x, y); });
}

}  // namespace wcoh
