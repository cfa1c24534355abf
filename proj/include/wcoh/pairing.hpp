// The nondegenerate pairing between F(N) and U(n), realized by first-order
// flows: <f, e_{j1}...e_{jk}> = d_{t1}...d_{tk}|_0 f(exp(t1 e_{j1}) o ... o
// exp(tk e_{jk})), with the first letter outermost in the composition.
// Multilinearity in the t's is enforced structurally by computing in the
// ring of square-free t-monomials.
#pragma once

#include <cstdint>
#include <map>
#include <mutex>

#include "wcoh/fpoly_hopf.hpp"
#include "wcoh/linalg.hpp"

namespace wcoh {

struct TMask {
  std::uint64_t bits = 0;
  friend auto operator<=>(const TMask&, const TMask&) = default;
};

using TPoly = FormalSum<TMask>;

inline TPoly operator*(const TPoly& x, const TPoly& y) {
  return bilinear<TMask, TMask, TMask>(x, y, [](const TMask& a, const TMask& b) {
    TPoly r;
    if ((a.bits & b.bits) == 0) r.add(TMask{a.bits | b.bits}, Scalar::one());
    return r;
  });
}

// <f, word> with an explicit jet order (must dominate the weights involved).
inline Scalar pair_fu(const FPoly& f, const UnWord& word, int order) {
  if (word.j.size() > 60) throw std::invalid_argument("pair_fu: word too long");
  // Composite of first-order flows exp(t_m e_{j_m}) = id + t_m x^{j_m + 1}.
  Jet<TPoly> acc = Jet<TPoly>::identity(order);
  bool first = true;
  for (std::size_t m = 0; m < word.j.size(); ++m) {
    Jet<TPoly> flow(order);
    int j = word.j[m];
    if (j > order) return Scalar::zero();
    flow.coeff(j).add(TMask{std::uint64_t(1) << m}, Scalar::one());
    acc = first ? flow : compose(acc, flow);
    first = false;
  }
  // Substitute x_i -> acc.coeff(i) and read the full-mask coefficient.
  TMask full{word.j.empty() ? 0 : ((std::uint64_t(1) << word.j.size()) - 1)};
  Scalar out;
  for (const auto& [m, c] : f) {
    TPoly t(TMask{0}, Scalar::one());
    for (int i : m.idx) {
      if (i > order) throw std::runtime_error("pair_fu: order too small");
      t = t * acc.coeff(i);
    }
    out += c * t.coeff(full);
  }
  return out;
}

// Weakly increasing words over {1,2,...} of total weight d: the PBW basis
// of U(n) in weight d (= partitions of d).
inline std::vector<UnWord> un_basis(int d) {
  std::vector<UnWord> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int minpart) -> void {
    if (remaining == 0) {
      out.push_back(UnWord{cur});
      return;
    }
    for (int p = minpart; p <= remaining; ++p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, d, 1);
  return out;
}

// Monomial basis of F(N) in weight d (same partitions).
inline std::vector<XMono> xmono_basis(int d) {
  std::vector<XMono> out;
  for (const auto& w : un_basis(d)) out.push_back(xmono(w.j));
  return out;
}

// Weight-blocked pairing data: Gram matrices G[a][m] = <x_m, v_a> and exact
// solvers for producing F-elements with prescribed pairings. Blocks are
// memoized behind a mutex; values are immutable once built.
class PairingBlocks {
 public:
  explicit PairingBlocks(int order) : order_(order) {}

  int order() const { return order_; }

  struct Block {
    std::vector<UnWord> words;
    std::vector<XMono> monos;
    QMat gram;  // rows: words, cols: monos
  };

  const Block& block(int d) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
    Block b;
    b.words = un_basis(d);
    b.monos = xmono_basis(d);
    b.gram.resize(b.words.size());
    for (std::size_t a = 0; a < b.words.size(); ++a) {
      b.gram[a].resize(b.monos.size());
      for (std::size_t m = 0; m < b.monos.size(); ++m)
        b.gram[a][m] = pair_fu(FPoly(b.monos[m]), b.words[a], order_);
    }
    return cache_.emplace(d, std::move(b)).first->second;
  }

  // The unique weight-d element F with <F, v_a> = vals[a] for every PBW
  // word v_a of weight d. Throws if the Gram block is singular, which
  // would violate nondegeneracy.
  FPoly with_pairings(int d, const QVec& vals) const {
    const Block& b = block(d);
    auto sol = solve(b.gram, vals, static_cast<int>(b.monos.size()));
    if (!sol) throw std::runtime_error("PairingBlocks: singular pairing block");
    FPoly out;
    for (std::size_t m = 0; m < b.monos.size(); ++m)
      out.add(b.monos[m], (*sol)[m]);
    return out;
  }

  // Linear pairing against a general FPoly.
  Scalar pair(const FPoly& f, const UnWord& w) const {
    return pair_fu(f, w, order_);
  }

 private:
  int order_;
  mutable std::mutex mu_;
  mutable std::map<int, Block> cache_;
};

}  // namespace wcoh
