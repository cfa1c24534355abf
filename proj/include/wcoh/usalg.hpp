// U(s) for the affine subalgebra s = span{e_-1, e_0} of W_1, in the PBW
// basis e_{-1}^a e_0^b, together with the straightening action of n-letters
// coming from the matched pair W_1 = s |><| n.
#pragma once

#include "wcoh/keys.hpp"
#include "wcoh/vector_fields.hpp"

namespace wcoh {

inline Scalar binom(int n, int k) {
  if (k < 0 || k > n) return Scalar::zero();
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Scalar(b);
}

// e_0^b e_{-1}^a = e_{-1}^a (e_0 - a)^b, so products normal-order in closed
// form.
inline UsElem us_mul(const UsWord& x, const UsWord& y) {
  UsElem out;
  for (int t = 0; t <= x.b; ++t) {
    // (e_0 - a2)^{b1} = sum_t C(b1,t) e_0^t (-a2)^{b1-t}
    Scalar c = binom(x.b, t);
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(y.a),
                  static_cast<unsigned long>(x.b - t));
    c *= Scalar(pw);
    if ((x.b - t) % 2 == 1) c = -c;
    out.add(UsWord{x.a + y.a, t + y.b}, c);
  }
  return out;
}

inline UsElem us_mul(const UsElem& x, const UsElem& y) {
  return bilinear<UsWord, UsWord, UsWord>(
      x, y, [](const UsWord& a, const UsWord& b) { return us_mul(a, b); });
}

inline UsElem us_one() { return UsElem(UsWord{0, 0}); }
inline UsElem us_e(int i) {  // i in {-1, 0}
  return UsElem(i == -1 ? UsWord{1, 0} : UsWord{0, 1});
}

inline Scalar us_counit(const UsElem& u) { return u.coeff(UsWord{0, 0}); }

// Delta(e_{-1}^a e_0^b): both generators are primitive.
inline FormalSum<std::pair<UsWord, UsWord>> us_coproduct(const UsWord& w) {
  FormalSum<std::pair<UsWord, UsWord>> out;
  for (int i = 0; i <= w.a; ++i)
    for (int j = 0; j <= w.b; ++j)
      out.add({UsWord{i, j}, UsWord{w.a - i, w.b - j}},
              binom(w.a, i) * binom(w.b, j));
  return out;
}

inline UsElem us_antipode(const UsWord& w) {
  // S reverses and negates letters: (-1)^{a+b} e_0^b e_{-1}^a.
  UsElem r = us_mul(UsWord{0, w.b}, UsWord{w.a, 0});
  if ((w.a + w.b) % 2 == 1) r = -r;
  return r;
}

inline UsElem us_antipode(const UsElem& u) {
  return u.map_keys<UsWord>([](const UsWord& w) { return us_antipode(w); });
}

// Lie ledger: xi |> X = proj_s [xi, X], xi <| X = proj_n [xi, X].
// Straightening action of a single n-letter e_j (j >= 1) on U(s):
//   e_j |> (X w) = (e_j |> X) w + X (e_j |> w) + (e_j <| X) |> w,
// with e_j |> 1 = 0. Values stay in U(s); the n-remainder re-enters
// through the recursion and disappears when its index exceeds what a
// single s-letter can absorb.
inline UsElem un_letter_act(int j, const UsWord& w);

inline UsElem un_letter_act_elem(int j, const UsElem& u) {
  UsElem out;
  for (const auto& [w, c] : u) out += c * un_letter_act(j, w);
  return out;
}

inline UsElem un_letter_act(int j, const UsWord& w) {
  UsElem out;
  if (w.is_one()) return out;
  // Peel the leading letter X (e_{-1} first in the PBW order).
  int x_index = (w.a > 0) ? -1 : 0;
  UsWord rest = (w.a > 0) ? UsWord{w.a - 1, w.b} : UsWord{w.a, w.b - 1};
  W1Elem br = bracket_w1(j, x_index);  // [e_j, X]
  for (const auto& [k, c] : br) {
    if (in_s(k)) {
      // (e_j |> X) rest
      UsElem s_part = us_mul(k.i == -1 ? UsWord{1, 0} : UsWord{0, 1}, rest);
      out += c * s_part;
    } else {
      // (e_j <| X) |> rest
      out += c * un_letter_act(k.i, rest);
    }
  }
  // X (e_j |> rest)
  UsElem tail = un_letter_act(j, rest);
  out += us_mul(UsElem(x_index == -1 ? UsWord{1, 0} : UsWord{0, 1}), tail);
  return out;
}

// Left action of a U(n) PBW word, letters composing outside-in.
inline UsElem un_word_act(const UnWord& v, const UsElem& u) {
  UsElem r = u;
  for (auto it = v.j.rbegin(); it != v.j.rend(); ++it)
    r = un_letter_act_elem(*it, r);
  return r;
}

}  // namespace wcoh
