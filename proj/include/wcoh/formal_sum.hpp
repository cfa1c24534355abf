// Finitely supported linear combinations over an ordered key family.
// FormalSum<K> is the universal container here: vectors, forms, tensors,
// cochains are all formal sums over suitable key types.
#pragma once

#include <functional>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "wcoh/scalar.hpp"

namespace wcoh {

// Sparse linear combination with Scalar coefficients. Keys need a strict
// weak order; std::map keeps iteration (and hence serialization)
// canonical. Zero coefficients are never stored.
template <class K>
class FormalSum {
 public:
  using key_type = K;
  using map_type = std::map<K, Scalar>;
  using const_iterator = typename map_type::const_iterator;

  FormalSum() = default;
  FormalSum(const K& k, const Scalar& c) { add(k, c); }
  explicit FormalSum(const K& k) { add(k, Scalar::one()); }

  static FormalSum zero() { return FormalSum(); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  Scalar coeff(const K& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar::zero() : it->second;
  }

  void add(const K& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  FormalSum& operator*=(const Scalar& s) {
    if (s.is_zero()) { terms_.clear(); return *this; }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator*(const Scalar& s, FormalSum a) { return a *= s; }
  friend FormalSum operator*(FormalSum a, const Scalar& s) { return a *= s; }
  FormalSum operator-() const {
    FormalSum r(*this);
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }

  friend bool operator==(const FormalSum& a, const FormalSum& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const FormalSum& a, const FormalSum& b) {
    return !(a == b);
  }

  // Linear extension of a key-level map K -> FormalSum<K2>.
  template <class K2, class F>
  FormalSum<K2> map_keys(F&& f) const {
    FormalSum<K2> out;
    for (const auto& [k, c] : terms_) {
      FormalSum<K2> img = f(k);
      img *= c;
      out += img;
    }
    return out;
  }

  // Keep only keys satisfying the predicate.
  template <class P>
  FormalSum filter(P&& keep) const {
    FormalSum out;
    for (const auto& [k, c] : terms_)
      if (keep(k)) out.add(k, c);
    return out;
  }

 private:
  map_type terms_;
};

// Bilinear extension of a key-level product.
template <class KA, class KB, class KO, class F>
FormalSum<KO> bilinear(const FormalSum<KA>& a, const FormalSum<KB>& b, F&& prod) {
  FormalSum<KO> out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      FormalSum<KO> img = prod(ka, kb);
      img *= ca * cb;
      out += img;
    }
  return out;
}

}  // namespace wcoh
