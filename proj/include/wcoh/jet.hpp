// Truncated formal power series over an arbitrary commutative coefficient
// ring, and jets of formal diffeomorphisms psi(x) = x + sum psi_i x^{i+1}.
// Composition, reversion, reciprocal and log are all exact term
// manipulations; nothing here ever evaluates transcendentally.
#pragma once

#include <stdexcept>
#include <vector>

#include "wcoh/keys.hpp"

namespace wcoh {

template <class C>
struct Ring {
  static C one();
  static bool is_zero(const C& c);
};

template <>
struct Ring<Scalar> {
  static Scalar one() { return Scalar::one(); }
  static bool is_zero(const Scalar& c) { return c.is_zero(); }
};

template <class K>
struct Ring<FormalSum<K>> {
  static FormalSum<K> one() { return FormalSum<K>(K{}); }
  static bool is_zero(const FormalSum<K>& c) { return c.is_zero(); }
};

// Polynomial truncated beyond degree cap; a[d] is the x^d coefficient.
template <class C>
class TruncSeries {
 public:
  explicit TruncSeries(int cap) : cap_(cap), a_(static_cast<std::size_t>(cap) + 1) {}

  int cap() const { return cap_; }
  const C& operator[](int d) const { return a_[static_cast<std::size_t>(d)]; }
  C& operator[](int d) { return a_[static_cast<std::size_t>(d)]; }

  TruncSeries& operator+=(const TruncSeries& o) {
    for (int d = 0; d <= cap_ && d <= o.cap_; ++d) a_[d] += o.a_[d];
    return *this;
  }
  friend TruncSeries operator+(TruncSeries x, const TruncSeries& y) { return x += y; }

  friend TruncSeries operator*(const TruncSeries& x, const TruncSeries& y) {
    TruncSeries r(x.cap_);
    for (int i = 0; i <= x.cap_; ++i) {
      if (Ring<C>::is_zero(x.a_[i])) continue;
      for (int j = 0; i + j <= r.cap_ && j <= y.cap_; ++j)
        r.a_[i + j] += x.a_[i] * y.a_[j];
    }
    return r;
  }

  TruncSeries scaled(const Scalar& s) const {
    TruncSeries r(*this);
    for (auto& c : r.a_) c = s * c;
    return r;
  }

  // x^d -> d x^{d-1}
  TruncSeries derivative() const {
    TruncSeries r(cap_);
    for (int d = 1; d <= cap_; ++d) r.a_[d - 1] = Scalar(d) * a_[d];
    return r;
  }

  // this(g(x)) for g with zero constant term.
  TruncSeries compose(const TruncSeries& g) const {
    if (!Ring<C>::is_zero(g.a_[0]))
      throw std::invalid_argument("compose: inner constant term nonzero");
    TruncSeries r(cap_);
    for (int d = cap_; d >= 0; --d) {
      r = r * g;
      r.a_[0] += a_[d];
    }
    return r;
  }

  // 1 / this, valid when the constant term is 1.
  TruncSeries reciprocal() const {
    TruncSeries u(*this);
    u.a_[0] += Scalar(-1) * Ring<C>::one();  // u = this - 1
    TruncSeries r(cap_), pw(cap_);
    r.a_[0] = Ring<C>::one();
    pw.a_[0] = Ring<C>::one();
    for (int k = 1; k <= cap_; ++k) {
      pw = pw * u;
      r += pw.scaled(Scalar((k % 2 == 0) ? 1 : -1));
    }
    return r;
  }

  // log(this), valid when the constant term is 1.
  TruncSeries log() const {
    TruncSeries u(*this);
    u.a_[0] += Scalar(-1) * Ring<C>::one();
    TruncSeries r(cap_), pw(cap_);
    pw.a_[0] = Ring<C>::one();
    for (int k = 1; k <= cap_; ++k) {
      pw = pw * u;
      r += pw.scaled(Scalar((k % 2 == 0) ? -1 : 1, k));
    }
    return r;
  }

 private:
  int cap_;
  std::vector<C> a_;
};

// ---------------------------------------------------------------------------
// Jets: psi(x) = x + sum_{i=1}^{k} psi_i x^{i+1}. psi(0) = 0 and
// psi'(0) = 1 are structural. All operations are exact modulo x^{k+2}.

template <class C>
class Jet {
 public:
  explicit Jet(int order) : c_(static_cast<std::size_t>(order)) {}
  Jet(int order, std::vector<C> coeffs) : c_(std::move(coeffs)) {
    c_.resize(static_cast<std::size_t>(order));
  }

  static Jet identity(int order) { return Jet(order); }

  int order() const { return static_cast<int>(c_.size()); }
  // psi_i, 1-based.
  const C& coeff(int i) const { return c_[static_cast<std::size_t>(i - 1)]; }
  C& coeff(int i) { return c_[static_cast<std::size_t>(i - 1)]; }

  bool is_identity() const {
    for (const auto& c : c_)
      if (!Ring<C>::is_zero(c)) return false;
    return true;
  }

  TruncSeries<C> series() const {
    TruncSeries<C> s(order() + 1);
    s[1] = Ring<C>::one();
    for (int i = 1; i <= order(); ++i) s[i + 1] = coeff(i);
    return s;
  }

  static Jet from_series(const TruncSeries<C>& s, int order) {
    Jet r(order);
    for (int i = 1; i <= order && i + 1 <= s.cap(); ++i) r.coeff(i) = s[i + 1];
    return r;
  }

  friend bool operator==(const Jet& x, const Jet& y) { return x.c_ == y.c_; }

 private:
  std::vector<C> c_;  // psi_1 .. psi_k
};

// (psi1 psi2)(x) = psi1(psi2(x)), truncated at the common order.
template <class C>
Jet<C> compose(const Jet<C>& a, const Jet<C>& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("compose: order mismatch");
  return Jet<C>::from_series(a.series().compose(b.series()), a.order());
}

// Compositional inverse by Newton iteration (psi'(0) = 1, precision
// doubles each round).
template <class C>
Jet<C> invert(const Jet<C>& a) {
  const int k = a.order();
  auto fs = a.series();
  auto fps = fs.derivative();
  TruncSeries<C> g(k + 1);
  g[1] = Ring<C>::one();
  int prec = 1;  // g inverts a modulo x^{prec+1}
  while (prec < k + 1) {
    prec = std::min(2 * prec, k + 1);
    TruncSeries<C> err = fs.compose(g);
    err[1] += Scalar(-1) * Ring<C>::one();  // f(g) - x
    TruncSeries<C> corr = err * fps.compose(g).reciprocal();
    for (int d = 0; d <= k + 1; ++d) g[d] += Scalar(-1) * corr[d];
  }
  return Jet<C>::from_series(g, k);
}

using RatJet = Jet<Scalar>;

// Jet text format "[k; p1, p2, ...]" with exact rationals.
inline std::string jet_to_string(const RatJet& j) {
  std::string s = "[" + std::to_string(j.order()) + ";";
  for (int i = 1; i <= j.order(); ++i) {
    s += (i == 1 ? " " : ", ");
    s += j.coeff(i).str();
  }
  return s + "]";
}

}  // namespace wcoh
