// Shared computational context: the F(N) structure maps at a fixed
// coordinate order, the pairing blocks, the s-action on F(N), and the
// coaction tables produced by weight-block duality.
//
// Stored coaction conventions (the ledger's "sides" entries):
//   * Omega legs encode translation by the inverse jet:
//       omega_{<0>} <omega_{<1>}, phi> = omega . phi^{-1}
//     (the paper's "left action dualized, then antipode" right coaction).
//   * theta (s*) legs are likewise the inverse-side legs:
//       theta^0 -> theta^0 (x) 1 - 2 theta^{-1} (x) x_1.
//   * U(s) legs dualize v |-> S(v) |> u of the straightening action, the
//     (2.1) side: e_{-1} -> e_{-1} (x) 1 + 2 e_0 (x) x_1.
// Formulas that need the other side apply the antipode explicitly; the
// calibration suite pins every use.
#pragma once

#include <tuple>

#include "wcoh/pairing.hpp"
#include "wcoh/usalg.hpp"

namespace wcoh {

template <class K>
using Legs = std::vector<std::pair<K, FPoly>>;

class Calculus {
 public:
  Calculus(int window_bound, int order)
      : D_(window_bound),
        order_(order),
        fdb_(order),
        pb_(order),
        uni_(order),
        inv_(order) {
    if (order_ < D_ + 2)
      throw std::invalid_argument("Calculus: jet order must be >= D + 2");
    for (int i = 1; i <= order_; ++i) uni_.coeff(i) = FPoly(xmono(i));
    inv_ = invert(uni_);
  }

  int window_bound() const { return D_; }
  int order() const { return order_; }
  const FaaDiBruno& fdb() const { return fdb_; }
  const PairingBlocks& pairing() const { return pb_; }

  FPoly paper_x(int i) const { return fdb_.paper_x(i); }

  // ----- s-action on F(N) by derivations (flow formulas) -----
  //   e_0 |> is the weight grading; e_{-1} |> x_i = (i+2) x_{i+1} - 2 x_1 x_i.
  FPoly act_e0(const FPoly& f) const {
    FPoly out;
    for (const auto& [m, c] : f) out.add(m, Scalar(m.weight()) * c);
    return out;
  }

  FPoly act_em1(const FPoly& f) const {
    FPoly out;
    for (const auto& [m, c] : f) {
      for (std::size_t p = 0; p < m.idx.size(); ++p) {
        int i = m.idx[p];
        XMono rest;
        rest.idx = m.idx;
        rest.idx.erase(rest.idx.begin() + static_cast<std::ptrdiff_t>(p));
        out.add(rest.times(xmono(i + 1)), Scalar(i + 2) * c);
        out.add(rest.times(xmono(1)).times(xmono(i)), Scalar(-2) * c);
      }
    }
    return out;
  }

  FPoly act_s(int j, const FPoly& f) const {
    return j == -1 ? act_em1(f) : act_e0(f);
  }

  // rho~(e_{-1}^a e_0^b) = (e_0 |>)^b (e_{-1} |>)^a; the generator flows
  // anticommute, so this is the unique algebra-consistent word extension.
  FPoly act_us(const UsWord& w, const FPoly& f) const {
    FPoly r = f;
    for (int i = 0; i < w.a; ++i) r = act_em1(r);
    for (int i = 0; i < w.b; ++i) r = act_e0(r);
    return r;
  }

  FPoly act_us(const UsElem& u, const FPoly& f) const {
    FPoly out;
    for (const auto& [w, c] : u) out += c * act_us(w, f);
    return out;
  }

  // delta character of U(s): trace-normalized so delta(e_0) = 1.
  static Scalar delta_char(const UsWord& w) {
    return w.a == 0 ? Scalar::one() : Scalar::zero();
  }

  // ----- Omega^{<=1} coaction legs -----
  // inverse_side = true gives the stored coaction (legs of omega . phi^{-1});
  // false gives the plain right-translation expansion (legs of omega . phi),
  // used by the group-cohomology coboundaries. Power series are memoized.
  Legs<OmegaKey> omega_legs(const OmegaKey& k, int dmax,
                            bool inverse_side = true) const {
    const TruncSeries<FPoly>& val = omega_series(k, inverse_side);
    Legs<OmegaKey> out;
    for (int e = k.i; e <= val.cap(); ++e) {
      const FPoly& leg = val[e];
      if (leg.is_zero()) continue;
      if (e - k.i > dmax) continue;
      out.emplace_back(k.kind == OmegaKind::Fun ? xk(e) : fk(e), leg);
    }
    return out;
  }

  const TruncSeries<FPoly>& omega_series(const OmegaKey& k,
                                         bool inverse_side) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_tuple(k.kind == OmegaKind::Form, k.i, inverse_side);
    auto it = series_cache_.find(key);
    if (it != series_cache_.end()) return it->second;
    TruncSeries<FPoly> s = (inverse_side ? inv_ : uni_).series();
    TruncSeries<FPoly> val(s.cap());
    if (k.i == 0) {
      val[0] = fpoly_one();
    } else {
      // reuse the cached previous power when available
      OmegaKey prev{OmegaKind::Fun, k.i - 1};
      auto pit = series_cache_.find(
          std::make_tuple(false, k.i - 1, inverse_side));
      if (pit != series_cache_.end()) {
        val = pit->second * s;
      } else {
        val[0] = fpoly_one();
        for (int t = 0; t < k.i; ++t) val = val * s;
      }
      (void)prev;
    }
    if (k.kind == OmegaKind::Form) val = val * s.derivative();
    return series_cache_.emplace(key, std::move(val)).first->second;
  }

  // ----- theta (s*) coaction legs, inverse side -----
  Legs<int> theta_legs(int i) const {
    Legs<int> out;
    out.emplace_back(i, fpoly_one());
    if (i == 0) out.emplace_back(-1, Scalar(-2) * FPoly(xmono(1)));
    return out;
  }

  // ----- U(s) coaction legs (duality against S(v) |> u), memoized -----
  const Legs<UsWord>& us_legs(const UsWord& w, int dmax) const {
    std::lock_guard<std::mutex> lock(us_mu_);
    auto key = std::make_pair(w, dmax);
    auto it = us_cache_.find(key);
    if (it != us_cache_.end()) return it->second;
    return us_cache_.emplace(key, us_legs_compute(w, dmax)).first->second;
  }

  Legs<UsWord> us_legs_compute(const UsWord& w, int dmax) const {
    Legs<UsWord> out;
    out.emplace_back(w, fpoly_one());
    for (int d = 1; d <= dmax; ++d) {
      const auto& blk = pb_.block(d);
      // functional values per target s-word
      std::map<UsWord, QVec> vals;
      for (std::size_t a = 0; a < blk.words.size(); ++a) {
        UsElem acted = us_conj_act(blk.words[a], w);
        for (const auto& [sigma, c] : acted) {
          auto [it, fresh] = vals.emplace(
              sigma, QVec(blk.words.size(), Scalar::zero()));
          it->second[a] = c;
        }
      }
      for (const auto& [sigma, v] : vals)
        out.emplace_back(sigma, pb_.with_pairings(d, v));
    }
    return out;
  }

  // S(v) |> u for a PBW word v of U(n): letters applied first-to-last,
  // overall sign (-1)^{length}.
  UsElem us_conj_act(const UnWord& v, const UsWord& w) const {
    UsElem r(w);
    for (int j : v.j) r = un_letter_act_elem(j, r);
    if (v.j.size() % 2 == 1) r = -r;
    return r;
  }

 private:
  int D_;
  int order_;
  FaaDiBruno fdb_;
  PairingBlocks pb_;
  Jet<FPoly> uni_;
  Jet<FPoly> inv_;
  mutable std::mutex mu_;
  mutable std::map<std::tuple<bool, int, bool>, TruncSeries<FPoly>>
      series_cache_;
  mutable std::mutex us_mu_;
  mutable std::map<std::pair<UsWord, int>, Legs<UsWord>> us_cache_;
};

}  // namespace wcoh
