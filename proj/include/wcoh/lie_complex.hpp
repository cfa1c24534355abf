// Chevalley-Eilenberg machinery for W_1 and the matched-pair bicomplex
// Omega^{<=1} (x) /\ s* (x) /\ n*. The vertical differential is the s-CE
// coboundary in basis form; the horizontal differential is the natural-iso
// image of the W_1 coboundary, which twists the naive row differential by
// (-1)^{s-degree}. With that twist the printed values of section 5.2 hold
// verbatim and the total differential is the plain sum.
#pragma once

#include "wcoh/calculus.hpp"
#include "wcoh/vector_fields.hpp"

namespace wcoh {

// ---------------------------------------------------------------------------
// Cochains of W_1 with Omega coefficients: omega (x) theta-wedge over the
// full index range {-1, 0, 1, ...}.

struct W1CochainKey {
  OmegaKey omega;
  ThetaWord th;  // strictly increasing, entries >= -1
  friend auto operator<=>(const W1CochainKey&, const W1CochainKey&) = default;
};
inline int weight_of(const W1CochainKey& k) {
  return weight_of(k.omega) + weight_of_theta(k.th);
}

using W1Cochain = FormalSum<W1CochainKey>;

// Evaluate a homogeneous-degree cochain on basis arguments e_{args[0]}, ...
inline OmegaElem eval_cochain(const W1Cochain& c, std::vector<int> args) {
  auto norm = wedge_normalize(args);
  OmegaElem out;
  if (!norm) return out;
  for (const auto& [k, coeff] : c)
    if (k.th == norm->first) out.add(k.omega, coeff * Scalar(norm->second));
  return out;
}

// Evaluate with a formal first argument.
inline OmegaElem eval_cochain(const W1Cochain& c, const W1Elem& first,
                              const std::vector<int>& rest) {
  OmegaElem out;
  for (const auto& [k, coeff] : first) {
    std::vector<int> args = {k.i};
    args.insert(args.end(), rest.begin(), rest.end());
    OmegaElem v = eval_cochain(c, args);
    v *= coeff;
    out += v;
  }
  return out;
}

// Pointwise CE coboundary value
//   d c (xi_1, .., xi_{k+1}) = sum_{r<s} (-1)^{r+s-1} c([xi_r, xi_s], ..)
//                            + sum_t (-1)^t xi_t . c(.., ^xi_t, ..)
inline OmegaElem d_ce_w1_eval(const W1Cochain& c, const std::vector<int>& args) {
  OmegaElem out;
  const int k1 = static_cast<int>(args.size());
  for (int r = 0; r < k1; ++r)
    for (int s = r + 1; s < k1; ++s) {
      std::vector<int> rest;
      for (int t = 0; t < k1; ++t)
        if (t != r && t != s) rest.push_back(args[t]);
      OmegaElem v = eval_cochain(c, bracket_w1(args[r], args[s]), rest);
      if ((r + s) % 2 == 0) v = -v;  // (-1)^{(r+1)+(s+1)-1} for 1-based r,s
      out += v;
    }
  for (int t = 0; t < k1; ++t) {
    std::vector<int> rest;
    for (int u = 0; u < k1; ++u)
      if (u != t) rest.push_back(args[u]);
    OmegaElem v = act_on_forms(args[t], eval_cochain(c, rest));
    if (t % 2 == 0) v = -v;  // (-1)^{t+1} for 1-based t
    out += v;
  }
  return out;
}

// ---------------------------------------------------------------------------
// The (3.6) bicomplex.

struct Bi36Key {
  OmegaKey omega;
  ThetaWord s;  // subset of {-1, 0}
  ThetaWord n;  // strictly increasing, entries >= 1
  friend auto operator<=>(const Bi36Key&, const Bi36Key&) = default;
};
inline int weight_of(const Bi36Key& k) {
  return weight_of(k.omega) + weight_of_theta(k.s) + weight_of_theta(k.n);
}

using Bi36Elem = FormalSum<Bi36Key>;

// Right action on a theta wedge word (derivation, no Koszul signs).
inline FormalSum<ThetaWord> theta_word_right_act(const ThetaWord& w, int p,
                                                 ThetaSpace sp) {
  FormalSum<ThetaWord> out;
  for (std::size_t t = 0; t < w.size(); ++t) {
    for (const auto& [j, c] : theta_right_act(w[t], p, sp)) {
      ThetaWord nw = w;
      nw[t] = j;
      auto norm = wedge_normalize(nw);
      if (norm) out.add(norm->first, c * Scalar(norm->second));
    }
  }
  return out;
}

// de Rham coboundary on s* wedges: d(theta^-1) = theta^-1 ^ theta^0,
// d(theta^0) = 0, extended as an order-1 derivation.
inline FormalSum<ThetaWord> d_dr_s(const ThetaWord& w) {
  FormalSum<ThetaWord> out;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (w[t] != -1) continue;
    ThetaWord nw;
    for (std::size_t u = 0; u < w.size(); ++u) {
      if (u == t) {
        nw.push_back(-1);
        nw.push_back(0);
      } else {
        nw.push_back(w[u]);
      }
    }
    auto norm = wedge_normalize(nw);
    if (norm)
      out.add(norm->first, Scalar(t % 2 == 0 ? 1 : -1) * Scalar(norm->second));
  }
  return out;
}

// de Rham coboundary on n* wedges: d(theta^k) = sum_{i<j, i+j=k} (j-i)
// theta^i ^ theta^j, order-1 derivation.
inline FormalSum<ThetaWord> d_dr_n(const ThetaWord& w) {
  FormalSum<ThetaWord> out;
  for (std::size_t t = 0; t < w.size(); ++t) {
    int k = w[t];
    for (int i = 1; 2 * i < k; ++i) {
      int j = k - i;
      ThetaWord nw;
      for (std::size_t u = 0; u < w.size(); ++u) {
        if (u == t) {
          nw.push_back(i);
          nw.push_back(j);
        } else {
          nw.push_back(w[u]);
        }
      }
      auto norm = wedge_normalize(nw);
      if (norm)
        out.add(norm->first,
                Scalar(j - i) * Scalar(t % 2 == 0 ? 1 : -1) *
                    Scalar(norm->second));
    }
  }
  return out;
}

// Vertical differential of (3.6): the s-CE coboundary in basis form,
//   d(w (x) s (x) n) = sum_j (w.e_j (x) th^j ^ s (x) n
//                           + w (x) th^j ^ s (x) n.e_j)
//                    + w (x) d_DR(s) (x) n.
inline Bi36Elem d36_up(const Bi36Elem& v, int index_cap = 1 << 20) {
  Bi36Elem out;
  for (const auto& [k, c] : v) {
    for (int j : {-1, 0}) {
      ThetaWord cat = {j};
      cat.insert(cat.end(), k.s.begin(), k.s.end());
      auto sw = wedge_normalize(cat);
      if (!sw) continue;
      Scalar sign(sw->second);
      // omega . e_j leg
      for (const auto& [ok, oc] :
           right_act(OmegaElem(k.omega), W1Elem(W1Key{j})))
        out.add(Bi36Key{ok, sw->first, k.n}, c * oc * sign);
      // n-leg action
      for (const auto& [nw2, nc] :
           theta_word_right_act(k.n, j, ThetaSpace::NStar)) {
        bool ok_cap = true;
        for (int idx : nw2) ok_cap = ok_cap && idx <= index_cap;
        if (ok_cap) out.add(Bi36Key{k.omega, sw->first, nw2}, c * nc * sign);
      }
    }
    // d_DR on the s-legs
    for (const auto& [s2, cs] : d_dr_s(k.s))
      out.add(Bi36Key{k.omega, s2, k.n}, c * cs);
  }
  return out;
}

// Truncation by index caps (safe for exactness claims: the output equals
// the cap-truncation of the true image whenever the input carries every
// term with indices <= cap).
inline Bi36Elem truncate36(const Bi36Elem& v, int cap) {
  return v.filter([&](const Bi36Key& k) {
    if (k.omega.i > cap) return false;
    for (int i : k.n)
      if (i > cap) return false;
    return true;
  });
}

// Naive horizontal differential (the literal n-CE coboundary of the row).
inline Bi36Elem d36_right_naive(const Bi36Elem& v, int index_cap) {
  Bi36Elem out;
  for (const auto& [k, c] : v) {
    for (int i = 1; i <= index_cap; ++i) {
      ThetaWord ni = {i};
      auto nw = wedge_normalize([&] {
        ThetaWord cat = ni;
        cat.insert(cat.end(), k.n.begin(), k.n.end());
        return cat;
      }());
      if (nw) {
        Scalar sign(nw->second);
        // omega . e_i leg
        for (const auto& [ok, oc] :
             right_act(OmegaElem(k.omega), W1Elem(W1Key{i})))
          if (ok.i <= index_cap)
            out.add(Bi36Key{ok, k.s, nw->first}, c * oc * sign);
        // s*-leg action (only e_1 moves theta^0 to -2 theta^{-1})
        for (const auto& [sw2, sc] :
             theta_word_right_act(k.s, i, ThetaSpace::SStar))
          out.add(Bi36Key{k.omega, sw2, nw->first}, c * sc * sign);
      }
    }
    // d_DR on the n-legs
    for (const auto& [n2, cn] : d_dr_n(k.n)) {
      bool ok_cap = true;
      for (int idx : n2) ok_cap = ok_cap && idx <= index_cap;
      if (ok_cap) out.add(Bi36Key{k.omega, k.s, n2}, c * cn);
    }
  }
  return out;
}

// Horizontal differential of (3.6) as induced by the natural isomorphism:
// the naive row differential twisted by (-1)^{#s-legs}.
inline Bi36Elem d36_right(const Bi36Elem& v, int index_cap) {
  Bi36Elem out;
  for (const auto& [k, c] : v) {
    Bi36Elem single(k, (k.s.size() % 2 == 0) ? c : -c);
    out += d36_right_naive(single, index_cap);
  }
  return out;
}

inline Bi36Elem d36_total(const Bi36Elem& v, int index_cap) {
  return d36_up(v, index_cap) + d36_right(v, index_cap);
}

// ---------------------------------------------------------------------------
// Natural isomorphism (3.7): in this basis it is a re-tagging, since the
// canonical sort places the s-indices {-1, 0} ahead of the n-indices.

inline Bi36Elem natural_iso(const W1Cochain& c) {
  Bi36Elem out;
  for (const auto& [k, coeff] : c) {
    ThetaWord s, n;
    for (int i : k.th) (i <= 0 ? s : n).push_back(i);
    out.add(Bi36Key{k.omega, s, n}, coeff);
  }
  return out;
}

inline W1Cochain natural_iso_inv(const Bi36Elem& v) {
  W1Cochain out;
  for (const auto& [k, coeff] : v) {
    ThetaWord th = k.s;
    th.insert(th.end(), k.n.begin(), k.n.end());
    out.add(W1CochainKey{k.omega, th}, coeff);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cup products.

// Basis form (3.2): (w (x) eta) u (w' (x) zeta) = w w' (x) eta ^ zeta.
inline W1Cochain cup_basis(const W1Cochain& a, const W1Cochain& b) {
  return bilinear<W1CochainKey, W1CochainKey, W1CochainKey>(
      a, b, [](const W1CochainKey& x, const W1CochainKey& y) {
        W1Cochain out;
        ThetaWord cat = x.th;
        cat.insert(cat.end(), y.th.begin(), y.th.end());
        auto norm = wedge_normalize(cat);
        if (!norm) return out;
        for (const auto& [ok, oc] : module_product(x.omega, y.omega))
          out.add(W1CochainKey{ok, norm->first}, oc * Scalar(norm->second));
        return out;
      });
}

// Shuffle form (3.1), evaluated pointwise: used as the independent oracle.
inline OmegaElem cup_shuffle_eval(const W1Cochain& a, int p, const W1Cochain& b,
                                  int q, const std::vector<int>& args) {
  OmegaElem out;
  const int n = p + q;
  std::vector<int> sel(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < p; ++i) sel[static_cast<std::size_t>(i)] = 1;
  std::sort(sel.begin(), sel.end());
  // iterate over all subsets S of size p via permutations of the mask
  do {
    std::vector<int> s_args, t_args;
    std::vector<int> s_pos, t_pos;
    for (int i = 0; i < n; ++i)
      if (sel[static_cast<std::size_t>(i)]) {
        s_args.push_back(args[static_cast<std::size_t>(i)]);
        s_pos.push_back(i + 1);
      } else {
        t_args.push_back(args[static_cast<std::size_t>(i)]);
        t_pos.push_back(i + 1);
      }
    // nu(S) = sum over t_j of #{ s_i > t_j }
    int nu = 0;
    for (int tp : t_pos)
      for (int sp : s_pos)
        if (sp > tp) ++nu;
    OmegaElem va = eval_cochain(a, s_args);
    OmegaElem vb = eval_cochain(b, t_args);
    OmegaElem prod = module_product(va, vb);
    if (nu % 2 == 1) prod = -prod;
    out += prod;
  } while (std::next_permutation(sel.begin(), sel.end()));
  return out;
}

// Total-complex cup (3.8): (a (x) mu (x) nu) u (w (x) la (x) rho)
//   = (-1)^{q p'} a w (x) mu ^ la (x) nu ^ rho.
inline Bi36Elem tot_cup(const Bi36Elem& a, const Bi36Elem& b) {
  return bilinear<Bi36Key, Bi36Key, Bi36Key>(
      a, b, [](const Bi36Key& x, const Bi36Key& y) {
        Bi36Elem out;
        ThetaWord scat = x.s;
        scat.insert(scat.end(), y.s.begin(), y.s.end());
        auto snorm = wedge_normalize(scat);
        if (!snorm) return out;
        ThetaWord ncat = x.n;
        ncat.insert(ncat.end(), y.n.begin(), y.n.end());
        auto nnorm = wedge_normalize(ncat);
        if (!nnorm) return out;
        Scalar sign((static_cast<int>(x.n.size() * y.s.size()) % 2 == 0) ? 1 : -1);
        for (const auto& [ok, oc] : module_product(x.omega, y.omega))
          out.add(Bi36Key{ok, snorm->first, nnorm->first},
                  oc * sign * Scalar(snorm->second) * Scalar(nnorm->second));
        return out;
      });
}

// ---------------------------------------------------------------------------
// The explicit generators (5.2) and (5.3), materialized to an index cap.

inline Bi36Elem lambda36(int cap) {
  Bi36Elem out;
  out.add(Bi36Key{xk(0), {0}, {}}, Scalar(1));  // 1 (x) theta^0
  for (int i = 1; i <= cap; ++i)
    out.add(Bi36Key{xk(i), {}, {i}}, Scalar(i + 1));
  return out;
}

inline Bi36Elem mu36(int cap) {
  Bi36Elem out;
  for (int i = 1; i <= cap; ++i)
    out.add(Bi36Key{fk(i - 1), {}, {i}}, Scalar((i + 1) * i));
  return out;
}

}  // namespace wcoh
