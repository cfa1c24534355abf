// Exact rational scalars over GMP. Every computation in this library is
// arithmetic in Q; there is no floating point anywhere.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

namespace wcoh {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (mpq_class canonicalization enforces both).
class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(long n) : v_(static_cast<signed long>(n)) {}
  Scalar(long n, long d) : v_(static_cast<signed long>(n), static_cast<signed long>(d)) {
    v_.canonicalize();
  }
  explicit Scalar(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit Scalar(const mpz_class& n) : v_(n) {}

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  Scalar operator-() const { return Scalar(mpq_class(-v_)); }
  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
  Scalar& operator/=(const Scalar& o) { v_ /= o.v_; return *this; }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }

  Scalar inverse() const { return Scalar(mpq_class(1) / v_); }

  // Canonical text form "p" or "p/q", q > 0.
  std::string str() const { return v_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.v_.get_str();
  }

 private:
  mpq_class v_;
};

inline Scalar frac(long n, long d) { return Scalar(n, d); }

}  // namespace wcoh
