// The Hopf algebra F(N) of polynomial functions on the jet group N, in the
// affine coordinates x_i(psi) = psi_i. The coproduct encodes composition
// (psi1 psi2)(x) = psi1(psi2(x)) with the first tensor leg evaluated on the
// outer factor; the antipode is pullback along the compositional inverse.
//
// All structure maps are computed from "universal jets" whose coefficients
// are the coordinate generators themselves, so the only primitive is exact
// series manipulation.
#pragma once

#include <map>
#include <mutex>
#include <stdexcept>

#include "wcoh/jet.hpp"

namespace wcoh {

struct XMono2 {
  XMono a, b;
  friend auto operator<=>(const XMono2&, const XMono2&) = default;
};
inline int weight_of(const XMono2& m) { return m.a.weight() + m.b.weight(); }

using FPoly2 = FormalSum<XMono2>;

inline FPoly2 operator*(const FPoly2& x, const FPoly2& y) {
  return bilinear<XMono2, XMono2, XMono2>(
      x, y, [](const XMono2& p, const XMono2& q) {
        return FPoly2(XMono2{p.a.times(q.a), p.b.times(q.b)});
      });
}

inline FPoly2 tensor(const FPoly& x, const FPoly& y) {
  FPoly2 out;
  for (const auto& [ka, ca] : x)
    for (const auto& [kb, cb] : y) out.add(XMono2{ka, kb}, ca * cb);
  return out;
}

inline Scalar evaluate(const FPoly& f, const RatJet& psi) {
  Scalar out;
  for (const auto& [m, c] : f) {
    Scalar t = c;
    for (int i : m.idx) {
      if (i > psi.order())
        throw std::runtime_error("evaluate: jet order too small for coordinate");
      t *= psi.coeff(i);
    }
    out += t;
  }
  return out;
}

// Structure maps of F(N) up to a fixed coordinate order.
class FaaDiBruno {
 public:
  explicit FaaDiBruno(int order) : order_(order) {
    // Universal jet: coefficients are the generators x_i themselves.
    Jet<FPoly> uni(order);
    for (int i = 1; i <= order; ++i) uni.coeff(i) = FPoly(xmono(i));

    // Antipode on generators: coordinates of the compositional inverse.
    Jet<FPoly> inv = invert(uni);
    s_gen_.reserve(order);
    for (int i = 1; i <= order; ++i) s_gen_.push_back(inv.coeff(i));

    // Coproduct on generators from powers of the universal series:
    //   x_m(psi1 o psi2) = x_m(psi2) + sum_{k=1}^{m} x_k(psi1) [x^{m+1}] psi2^{k+1}.
    std::vector<TruncSeries<FPoly>> pw;
    pw.reserve(static_cast<std::size_t>(order) + 2);
    {
      TruncSeries<FPoly> s = uni.series(), p(order + 1);
      p[0] = fpoly_one();
      pw.push_back(p);
      for (int j = 1; j <= order + 1; ++j) {
        p = p * s;
        pw.push_back(p);
      }
    }
    d_gen_.reserve(order);
    for (int m = 1; m <= order; ++m) {
      FPoly2 d = tensor(fpoly_one(), FPoly(xmono(m)));
      for (int k = 1; k <= m; ++k)
        d += tensor(FPoly(xmono(k)),
                    pw[static_cast<std::size_t>(k) + 1][m + 1]);
      d_gen_.push_back(std::move(d));
    }

    // The paper's display coordinates: [x^i] log psi'(x) / (i+1). These
    // agree with x_i on single-letter flows and make the Prop 5.4 and
    // section 5.3 displays exact; see the conventions ledger.
    TruncSeries<FPoly> lg = uni.series().derivative().log();
    paper_gen_.reserve(order);
    for (int i = 1; i <= order && i <= lg.cap(); ++i)
      paper_gen_.push_back(lg[i].map_keys<XMono>([](const XMono& m) {
        return FPoly(m);
      }) * Scalar(1, i + 1));
  }

  int order() const { return order_; }

  Scalar counit(const FPoly& f) const { return f.coeff(xmono()); }

  FPoly antipode(const FPoly& f) const {
    FPoly out;
    for (const auto& [m, c] : f) out += c * antipode_mono(m);
    return out;
  }

  FPoly2 coproduct(const FPoly& f) const {
    FPoly2 out;
    for (const auto& [m, c] : f) {
      FPoly2 t = coproduct_mono(m);
      t *= c;
      out += t;
    }
    return out;
  }

  const FPoly& antipode_mono(const XMono& m) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = s_cache_.find(m);
    if (it != s_cache_.end()) return it->second;
    FPoly t = fpoly_one();
    for (int i : m.idx) t = t * gen_checked(s_gen_, i);
    return s_cache_.emplace(m, std::move(t)).first->second;
  }

  const FPoly2& coproduct_mono(const XMono& m) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = d_cache_.find(m);
    if (it != d_cache_.end()) return it->second;
    FPoly2 t = tensor(fpoly_one(), fpoly_one());
    for (int i : m.idx) t = t * gen_checked(d_gen_, i);
    return d_cache_.emplace(m, std::move(t)).first->second;
  }

  // Coproduct with both tensor sides weight-capped. Leg weights only grow
  // along the product, so capping inside the loop is exact for the capped
  // part of the result.
  const FPoly2& coproduct_mono_capped(const XMono& m, int cap) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(m, cap);
    auto it = dcap_cache_.find(key);
    if (it != dcap_cache_.end()) return it->second;
    auto fits = [cap](const XMono2& k) {
      return k.a.weight() <= cap && k.b.weight() <= cap;
    };
    FPoly2 t = tensor(fpoly_one(), fpoly_one());
    for (int i : m.idx) t = (t * gen_checked(d_gen_, i)).filter(fits);
    return dcap_cache_.emplace(key, std::move(t)).first->second;
  }

  // x_i realized in the paper's normalization (log-derivative coordinates).
  FPoly paper_x(int i) const { return gen_checked(paper_gen_, i); }

 private:
  template <class T>
  const T& gen_checked(const std::vector<T>& v, int i) const {
    if (i < 1 || i > static_cast<int>(v.size()))
      throw std::runtime_error("FaaDiBruno: coordinate index beyond order");
    return v[static_cast<std::size_t>(i - 1)];
  }

  int order_;
  std::vector<FPoly> s_gen_;
  std::vector<FPoly2> d_gen_;
  std::vector<FPoly> paper_gen_;
  mutable std::mutex mu_;
  mutable std::map<XMono, FPoly> s_cache_;
  mutable std::map<XMono, FPoly2> d_cache_;
  mutable std::map<std::pair<XMono, int>, FPoly2> dcap_cache_;
};

}  // namespace wcoh
