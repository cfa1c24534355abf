// The bicrossed-product Hopf algebra H = F(N) |>< U(s), the SAYD module
// Omega_delta^{<=1}, and the cocyclic module (4.1) with its Hochschild and
// Connes operators.
#pragma once

#include "wcoh/bicomplex48.hpp"

namespace wcoh {

// Basis element f |>< u of H.
struct HKey {
  XMono f;
  UsWord u;
  friend auto operator<=>(const HKey&, const HKey&) = default;
  bool is_one() const { return f.is_one() && u.is_one(); }
};
inline int weight_of(const HKey& k) { return -k.f.weight() + k.u.weight(); }

using HElem = FormalSum<HKey>;

inline HElem h_of(const FPoly& f, const UsElem& u) {
  HElem out;
  for (const auto& [mf, cf] : f)
    for (const auto& [wu, cu] : u) out.add(HKey{mf, wu}, cf * cu);
  return out;
}

// Degree-q cochain key of C^q(H, V): v (x) h^1 (x) ... (x) h^q.
struct HCKey {
  OmegaKey v;
  std::vector<HKey> legs;
  friend auto operator<=>(const HCKey&, const HCKey&) = default;
};
inline int weight_of(const HCKey& k) {
  int w = weight_of(k.v);
  for (const auto& h : k.legs) w += weight_of(h);
  return w;
}

using HCochain = FormalSum<HCKey>;

class CyclicModule {
 public:
  explicit CyclicModule(const Calculus& cal)
      : cal_(cal), bc_(cal) {}

  const Calculus& cal() const { return cal_; }

  // ----- Hopf structure of H -----

  // The flow action of s on F(N) is an anti-representation, so the honest
  // left U(s)-module-algebra action composes through the antipode:
  //   tau(u) := act_us(S_U(u)).
  FPoly act_tau(const UsWord& u, const FPoly& f) const {
    FPoly out;
    for (const auto& [w, c] : us_antipode(u)) out += c * cal_.act_us(w, f);
    return out;
  }

  // (f |>< u)(g |>< v) = f tau(u_(1))(g) |>< u_(2) v
  HElem mul(const HKey& a, const HKey& b) const {
    HElem out;
    for (const auto& [du, cu] : us_coproduct(a.u)) {
      FPoly acted = act_tau(du.first, FPoly(b.f));
      FPoly left = FPoly(a.f) * acted;
      UsElem right = us_mul(UsElem(du.second), UsElem(b.u));
      HElem t = h_of(left, right);
      t *= cu;
      out += t;
    }
    return out;
  }

  HElem mul(const HElem& a, const HElem& b) const {
    return bilinear<HKey, HKey, HKey>(
        a, b, [&](const HKey& x, const HKey& y) { return mul(x, y); });
  }

  Scalar counit(const HKey& k) const {
    return k.f.is_one() ? Scalar(k.u.a == 0 && k.u.b == 0 ? 1 : 0)
                        : Scalar::zero();
  }

  // The H^{cop}-model coaction legs: the stored (2.1)-side legs with the
  // F-part antipoded. Delta_H and Psi both use this side.
  Legs<UsWord> us_legs_cop(const UsWord& w) const {
    Legs<UsWord> out;
    for (const auto& [sw, leg] : cal_.us_legs(w, leg_cap()))
      out.emplace_back(sw, cal_.fdb().antipode(leg));
    return out;
  }

  // Delta(f |>< u) = (f_(1) |>< u_(1)<0>) (x) (f_(2) u_(1)<1> |>< u_(2))
  const FormalSum<std::pair<HKey, HKey>>& coproduct(const HKey& k) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = dh_cache_.find(k);
    if (it != dh_cache_.end()) return it->second;
    FormalSum<std::pair<HKey, HKey>> out;
    const FPoly2& df = cal_.fdb().coproduct_mono_capped(k.f, leg_cap());
    for (const auto& [du, cu] : us_coproduct(k.u)) {
      for (const auto& [w1leg, leg] : cal_.us_legs(du.first, leg_cap())) {
        for (const auto& [mm, cf] : df) {
          FPoly second = FPoly(mm.b) * leg;
          for (const auto& [m2, c2] : second)
            out.add({HKey{mm.a, w1leg}, HKey{m2, du.second}},
                    cu * cf * c2);
        }
      }
    }
    return dh_cache_.emplace(k, std::move(out)).first->second;
  }

  // S(f |>< u) = (1 |>< S_U(u_<0>)) . (S_F(f u_<1>) |>< 1)
  const HElem& antipode(const HKey& k) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = sh_cache_.find(k);
      if (it != sh_cache_.end()) return it->second;
    }
    HElem out;
    for (const auto& [uleg, leg] : cal_.us_legs(k.u, leg_cap())) {
      FPoly inner = cal_.fdb().antipode(FPoly(k.f) * leg);
      UsElem su = us_antipode(uleg);
      for (const auto& [wu, cu] : su)
        out += cu * mul_h_left(HKey{xmono(), wu}, inner);
    }
    std::lock_guard<std::mutex> lock(mu_);
    return sh_cache_.emplace(k, std::move(out)).first->second;
  }

  HElem antipode(const HElem& v) const {
    HElem out;
    for (const auto& [k, c] : v) out += c * antipode(k);
    return out;
  }

  // ----- SAYD structure on Omega_delta^{<=1} -----

  // omega . (f |>< u) = eps(f) delta(u_(1)) S(u_(2)) . omega,
  // where U(s) acts on Omega through the W_1 action.
  OmegaElem sayd_act(const OmegaKey& v, const HKey& h) const {
    OmegaElem out;
    if (!h.f.is_one()) return out;
    for (const auto& [du, cu] : us_coproduct(h.u)) {
      if (Calculus::delta_char(du.first).is_zero()) continue;
      UsElem su = us_antipode(du.second);
      for (const auto& [wu, c2] : su) {
        // act by the word e_{-1}^a e_0^b on Omega, letters right-to-left
        OmegaElem w(v);
        for (int t = 0; t < wu.b; ++t) w = act_on_forms(0, w);
        for (int t = 0; t < wu.a; ++t) w = act_on_forms(-1, w);
        w *= cu * c2;
        out += w;
      }
    }
    return out;
  }

  OmegaElem sayd_act(const OmegaElem& v, const HElem& h) const {
    OmegaElem out;
    for (const auto& [kv, cv] : v)
      for (const auto& [kh, ch] : h) {
        OmegaElem t = sayd_act(kv, kh);
        t *= cv * ch;
        out += t;
      }
    return out;
  }

  // Coaction V -> H (x) V: v |-> (S(v_<1>) |>< 1) (x) v_<0>, with S applied
  // to the stored inverse-side legs (this is the placement that makes the
  // left-comodule coassociativity hold).
  std::vector<std::tuple<HKey, OmegaKey, Scalar>> sayd_coact(
      const OmegaKey& v) const {
    std::vector<std::tuple<HKey, OmegaKey, Scalar>> out;
    for (const auto& [vk, leg] : cal_.omega_legs(v, leg_cap())) {
      FPoly s = cal_.fdb().antipode(leg);
      for (const auto& [m, c] : s)
        out.emplace_back(HKey{m, UsWord{}}, vk, c);
    }
    return out;
  }

  // ----- cocyclic structure (4.1) -----

  HCochain face(int i, const HCochain& c) const {
    HCochain out;
    for (const auto& [k, coeff] : c) {
      const int q = static_cast<int>(k.legs.size());
      if (i < 0 || i > q + 1) throw std::invalid_argument("face: bad index");
      if (i == 0) {
        HCKey k2 = k;
        k2.legs.insert(k2.legs.begin(), HKey{xmono(), UsWord{}});
        out.add(k2, coeff);
      } else if (i <= q) {
        for (const auto& [dd, cc] :
             coproduct(k.legs[static_cast<std::size_t>(i - 1)])) {
          HCKey k2 = k;
          k2.legs[static_cast<std::size_t>(i - 1)] = dd.first;
          k2.legs.insert(k2.legs.begin() + i, dd.second);
          out.add(k2, coeff * cc);
        }
      } else {
        for (const auto& [hk, vk, cc] : sayd_coact(k.v)) {
          HCKey k2;
          k2.v = vk;
          k2.legs = k.legs;
          k2.legs.push_back(hk);
          out.add(k2, coeff * cc);
        }
      }
    }
    return out;
  }

  HCochain degeneracy(int j, const HCochain& c) const {
    HCochain out;
    for (const auto& [k, coeff] : c) {
      const int q = static_cast<int>(k.legs.size());
      if (j < 0 || j >= q) throw std::invalid_argument("degeneracy: bad index");
      HCKey k2 = k;
      Scalar e = counit(k2.legs[static_cast<std::size_t>(j)]);
      k2.legs.erase(k2.legs.begin() + j);
      out.add(k2, coeff * e);
    }
    return out;
  }

  // t(v (x) h^1 (x) ... (x) h^q)
  //   = v_<0> h^1_(1) (x) S(h^1_(2)) . (h^2 (x) ... (x) h^q (x) v_<-1>)
  HCochain cyclic(const HCochain& c) const {
    HCochain out;
    for (const auto& [k, coeff] : c) {
      if (k.legs.empty()) {
        out.add(k, coeff);
        continue;
      }
      for (const auto& [hk, vk, cv] : sayd_coact(k.v)) {
        for (const auto& [dd, cd] : coproduct(k.legs[0])) {
          OmegaElem v2 = sayd_act(vk, dd.first);
          if (v2.is_zero()) continue;
          // diagonal action of S(h^1_(2)) on the remaining legs + v_<-1>
          std::vector<HKey> tail(k.legs.begin() + 1, k.legs.end());
          tail.push_back(hk);
          HElem sh = antipode(dd.second);
          for (const auto& [kk, cc] : diag_act(sh, tail)) {
            for (const auto& [v2k, v2c] : v2)
              out.add(HCKey{v2k, kk}, coeff * cv * cd * cc * v2c);
          }
        }
      }
    }
    return out;
  }

  // h . (a^1 (x) ... (x) a^r) = h_(1) a^1 (x) ... (x) h_(r) a^r
  FormalSum<std::vector<HKey>> diag_act(const HElem& h,
                                        const std::vector<HKey>& legs) const {
    FormalSum<std::vector<HKey>> out;
    if (legs.empty()) {
      Scalar e;
      for (const auto& [k, c] : h) e += c * counit(k);
      out.add(legs, e);
      return out;
    }
    for (const auto& [k, c] : h) {
      std::function<void(std::size_t, const HKey&, std::vector<HKey>,
                         const Scalar&)>
          rec = [&](std::size_t slot, const HKey& rem, std::vector<HKey> acc,
                    const Scalar& cc) {
            if (slot + 1 == legs.size()) {
              for (const auto& [pk, pc] : mul(rem, legs[slot])) {
                auto acc2 = acc;
                acc2.push_back(pk);
                out.add(acc2, cc * pc);
              }
              return;
            }
            for (const auto& [dd, dc] : coproduct(rem))
              for (const auto& [pk, pc] : mul(dd.first, legs[slot])) {
                auto acc2 = acc;
                acc2.push_back(pk);
                rec(slot + 1, dd.second, acc2, cc * dc * pc);
              }
          };
      rec(0, k, {}, c);
    }
    return out;
  }

  // Hochschild coboundary b = sum (-1)^i face_i.
  HCochain hochschild_b(const HCochain& c) const {
    HCochain out;
    int q = degree_of(c);
    if (q < 0) return out;
    for (int i = 0; i <= q + 1; ++i) {
      HCochain t = face(i, c);
      if (i % 2 == 1) t = -t;
      out += t;
    }
    return out;
  }

  // Connes boundary B = (sum_i (-1)^{qi} t^i) s_q t_{q+1} (Id - (-1)^{q+1} t).
  HCochain connes_B(const HCochain& c) const {
    int q1 = degree_of(c);  // degree q+1 input
    HCochain out;
    if (q1 <= 0) return out;
    int q = q1 - 1;
    HCochain t1 = cyclic(c);
    if ((q + 1) % 2 == 1) t1 = -t1;
    HCochain pre = c - t1;
    HCochain step = degeneracy(q, cyclic(pre));
    for (int i = 0; i <= q; ++i) {
      HCochain pw = step;
      for (int rep = 0; rep < i; ++rep) pw = cyclic(pw);
      if ((q * i) % 2 == 1) pw = -pw;
      out += pw;
    }
    return out;
  }

  int degree_of(const HCochain& c) const {
    for (const auto& [k, coeff] : c) return static_cast<int>(k.legs.size());
    return -1;
  }

  int leg_cap() const { return cal_.window_bound(); }

  const HopfBicomplex& bicomplex() const { return bc_; }

 private:
  HElem mul_h_left(const HKey& left, const FPoly& right_f) const {
    HElem out;
    for (const auto& [m, c] : right_f)
      out += c * mul(left, HKey{m, UsWord{}});
    return out;
  }

  const Calculus& cal_;
  HopfBicomplex bc_;
  mutable std::mutex mu_;
  mutable std::map<HKey, FormalSum<std::pair<HKey, HKey>>> dh_cache_;
  mutable std::map<HKey, HElem> sh_cache_;
};

}  // namespace wcoh
