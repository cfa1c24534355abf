#include <catch_amalgamated.hpp>
#include <random>

#include "wcoh/keys.hpp"
#include "wcoh/linalg.hpp"

using namespace wcoh;

namespace {
std::mt19937_64 rng(20240811);
Scalar rand_scalar() {
  std::uniform_int_distribution<long> num(-12, 12), den(1, 9);
  return Scalar(num(rng), den(rng));
}
}  // namespace

TEST_CASE("scalar field axioms on random triples") {
  for (int t = 0; t < 200; ++t) {
    Scalar a = rand_scalar(), b = rand_scalar(), c = rand_scalar();
    REQUIRE(a + (b + c) == (a + b) + c);
    REQUIRE(a * (b * c) == (a * b) * c);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    if (!a.is_zero()) REQUIRE(a * a.inverse() == Scalar::one());
  }
}

TEST_CASE("scalar stays in lowest terms") {
  Scalar s(6, 4);
  REQUIRE(s.num() == 3);
  REQUIRE(s.den() == 2);
  REQUIRE(Scalar(-3, -6).str() == "1/2");
  REQUIRE((Scalar(1, 3) + Scalar(2, 3)).str() == "1");
}

TEST_CASE("wedge_normalize") {
  // [theta^0, theta^-1] -> ([theta^-1, theta^0], -1)
  auto r = wedge_normalize({0, -1});
  REQUIRE(r);
  REQUIRE(r->first == std::vector<int>{-1, 0});
  REQUIRE(r->second == -1);

  // repeated generator is zero
  REQUIRE(!wedge_normalize({-1, -1}));

  // [theta^1, theta^-1, theta^0] -> sorted with sign +1 (two inversions)
  auto r3 = wedge_normalize({1, -1, 0});
  REQUIRE(r3);
  REQUIRE(r3->first == std::vector<int>({-1, 0, 1}));
  REQUIRE(r3->second == 1);

  // brute-force inversion count agrees on random words
  std::uniform_int_distribution<int> pick(-1, 8);
  for (int t = 0; t < 100; ++t) {
    std::vector<int> w(4);
    for (auto& x : w) x = pick(rng);
    auto rr = wedge_normalize(w);
    bool repeated = false;
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[i] == w[j]) repeated = true;
        if (w[i] > w[j]) ++inv;
      }
    if (repeated) {
      REQUIRE(!rr);
    } else {
      REQUIRE(rr);
      REQUIRE(rr->second == (inv % 2 == 0 ? 1 : -1));
    }
  }

  // normalizing a normalized word is stable with sign +1
  auto rs = wedge_normalize({-1, 0, 3});
  REQUIRE(rs->second == 1);
}

TEST_CASE("weights") {
  REQUIRE(weight_of(W1Key{0}) == 0);
  REQUIRE(weight_of(fk(2)) == 3);  // e_0 . f^2 = 3 f^2
  // x^1 (x) theta^1 has weight 1 + (-1) = 0
  REQUIRE(weight_of(xk(1)) + (-1) == 0);
  REQUIRE(weight_of_theta({1}) == -1);
  REQUIRE(weight_of(xmono({1, 2, 2})) == 5);
  REQUIRE(weight_of(UsWord{2, 5}) == -2);
}

TEST_CASE("truncate") {
  FormalSum<OmegaKey> v;
  v.add(xk(3), Scalar(2));
  v.add(xk(9), Scalar(1));
  auto t = truncate(v, WeightWindow{0, 8});
  REQUIRE(t.coeff(xk(3)) == Scalar(2));
  REQUIRE(t.coeff(xk(9)).is_zero());
  REQUIRE(truncate(FormalSum<OmegaKey>{}, WeightWindow{-4, 4}).is_zero());
  // idempotent and linear
  REQUIRE(truncate(t, WeightWindow{0, 8}) == t);
  FormalSum<OmegaKey> w;
  w.add(xk(5), Scalar(7));
  w.add(xk(10), Scalar(3));
  auto lhs = truncate(v + w, WeightWindow{0, 8});
  auto rhs = truncate(v, WeightWindow{0, 8}) + truncate(w, WeightWindow{0, 8});
  REQUIRE(lhs == rhs);
}

TEST_CASE("formal sum basics") {
  FPoly p(xmono(1), Scalar(2));
  p.add(xmono(1), Scalar(-2));
  REQUIRE(p.is_zero());
  FPoly q = FPoly(xmono(1)) * FPoly(xmono(2));
  REQUIRE(q.coeff(xmono({1, 2})) == Scalar::one());
}

TEST_CASE("exact linear algebra") {
  // 2-term complex 0 -> Q -> Q -> 0 with the identity map: rank 1, no kernel
  QMat id1 = {{Scalar(1)}};
  REQUIRE(rank(id1, 1) == 1);
  REQUIRE(kernel_basis(id1, 1).empty());

  QMat a = {{Scalar(1), Scalar(2), Scalar(3)},
            {Scalar(2), Scalar(4), Scalar(6)},
            {Scalar(1), Scalar(1), Scalar(1)}};
  REQUIRE(rank(a, 3) == 2);
  auto ker = kernel_basis(a, 3);
  REQUIRE(ker.size() == 1);
  for (const auto& row : a) {
    Scalar dot;
    for (int j = 0; j < 3; ++j) dot += row[j] * ker[0][j];
    REQUIRE(dot.is_zero());
  }

  // randomized: solve returns actual solutions, kernel vectors annihilate
  std::uniform_int_distribution<long> ent(-5, 5);
  for (int t = 0; t < 50; ++t) {
    int m = 4, n = 5;
    QMat mat(m, QVec(n));
    for (auto& r : mat)
      for (auto& x : r) x = Scalar(ent(rng));
    QVec x0(n);
    for (auto& x : x0) x = Scalar(ent(rng), 1 + (t % 3));
    QVec b(m, Scalar::zero());
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) b[i] += mat[i][j] * x0[j];
    auto sol = solve(mat, b, n);
    REQUIRE(sol);
    for (int i = 0; i < m; ++i) {
      Scalar acc;
      for (int j = 0; j < n; ++j) acc += mat[i][j] * (*sol)[j];
      REQUIRE(acc == b[i]);
    }
    for (const auto& k : kernel_basis(mat, n))
      for (int i = 0; i < m; ++i) {
        Scalar acc;
        for (int j = 0; j < n; ++j) acc += mat[i][j] * k[j];
        REQUIRE(acc.is_zero());
      }
    // rank + nullity = n
    REQUIRE(rank(mat, n) + static_cast<int>(kernel_basis(mat, n).size()) == n);
  }

  // inconsistent system
  QMat c = {{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(1)}};
  REQUIRE(!solve(c, {Scalar(0), Scalar(1)}, 2));

  SpanBuilder sb(3);
  REQUIRE(sb.add({Scalar(1), Scalar(0), Scalar(1)}));
  REQUIRE(sb.add({Scalar(0), Scalar(1), Scalar(0)}));
  REQUIRE(!sb.add({Scalar(2), Scalar(3), Scalar(2)}));
  REQUIRE(sb.contains({Scalar(1), Scalar(1), Scalar(1)}));
  REQUIRE(!sb.contains({Scalar(0), Scalar(0), Scalar(1)}));
}
