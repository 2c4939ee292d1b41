#pragma once

// Extension tower for BLS12-381:
//   Fp2  = Fp[u]  / (u^2 + 1)
//   Fp6  = Fp2[v] / (v^3 - (u + 1))
//   Fp12 = Fp6[w] / (w^2 - v)

#include <optional>
#include <utility>

#include "nimsa/crypto/field.hpp"

namespace nimsa::crypto {

struct Fp2 {
  Fp c0, c1;

  static constexpr Fp2 zero() { return {}; }
  static constexpr Fp2 one() { return {Fp::one(), Fp::zero()}; }
  static Fp2 from_canonical(const bls12_381::Limbs2x6& l) {
    return {Fp::from_canonical(l[0]), Fp::from_canonical(l[1])};
  }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  friend bool operator==(const Fp2&, const Fp2&) = default;

  friend Fp2 operator+(const Fp2& a, const Fp2& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
  friend Fp2 operator-(const Fp2& a, const Fp2& b) { return {a.c0 - b.c0, a.c1 - b.c1}; }
  Fp2 operator-() const { return {-c0, -c1}; }

  friend Fp2 operator*(const Fp2& a, const Fp2& b) {
    Fp t0 = a.c0 * b.c0;
    Fp t1 = a.c1 * b.c1;
    return {t0 - t1, (a.c0 + a.c1) * (b.c0 + b.c1) - t0 - t1};
  }
  friend Fp2 operator*(const Fp2& a, const Fp& s) { return {a.c0 * s, a.c1 * s}; }

  Fp2& operator+=(const Fp2& b) { return *this = *this + b; }
  Fp2& operator-=(const Fp2& b) { return *this = *this - b; }
  Fp2& operator*=(const Fp2& b) { return *this = *this * b; }

  Fp2 square() const {
    Fp a = c0 + c1;
    Fp b = c0 - c1;
    Fp c = c0 * c1;
    return {a * b, c.dbl()};
  }
  Fp2 dbl() const { return {c0.dbl(), c1.dbl()}; }
  Fp2 conjugate() const { return {c0, -c1}; }
  Fp norm() const { return c0.square() + c1.square(); }

  // Multiplication by the cubic non-residue xi = u + 1.
  Fp2 mul_by_xi() const { return {c0 - c1, c0 + c1}; }

  Fp2 inverse() const {
    Fp t = norm().inverse();
    return {c0 * t, -(c1 * t)};
  }

  template <std::size_t M>
  Fp2 pow(const Limbs<M>& e) const {
    Fp2 acc = one();
    for (std::size_t i = limbs::bit_length(e); i-- > 0;) {
      acc = acc.square();
      if (limbs::bit(e, i)) acc = acc * *this;
    }
    return acc;
  }

  bool is_square() const { return norm().is_square(); }

  // Square root for p = 3 mod 4 (Adj & Rodriguez-Henriquez, Alg. 9).
  std::optional<Fp2> sqrt() const;

  bool sgn0() const {
    bool sign0 = c0.sgn0();
    bool zero0 = c0.is_zero();
    bool sign1 = c1.sgn0();
    return sign0 || (zero0 && sign1);
  }

  bool is_lexicographically_largest() const {
    if (!c1.is_zero()) return c1.is_lexicographically_largest();
    return c0.is_lexicographically_largest();
  }

  static Fp2 select(bool take_b, const Fp2& a, const Fp2& b) {
    return {Fp::select(take_b, a.c0, b.c0), Fp::select(take_b, a.c1, b.c1)};
  }
};

struct Fp6 {
  Fp2 c0, c1, c2;

  static Fp6 zero() { return {}; }
  static Fp6 one() { return {Fp2::one(), {}, {}}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
  friend bool operator==(const Fp6&, const Fp6&) = default;

  friend Fp6 operator+(const Fp6& a, const Fp6& b) { return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2}; }
  friend Fp6 operator-(const Fp6& a, const Fp6& b) { return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2}; }
  Fp6 operator-() const { return {-c0, -c1, -c2}; }

  friend Fp6 operator*(const Fp6& a, const Fp6& b) {
    Fp2 t0 = a.c0 * b.c0;
    Fp2 t1 = a.c1 * b.c1;
    Fp2 t2 = a.c2 * b.c2;
    Fp2 r0 = ((a.c1 + a.c2) * (b.c1 + b.c2) - t1 - t2).mul_by_xi() + t0;
    Fp2 r1 = (a.c0 + a.c1) * (b.c0 + b.c1) - t0 - t1 + t2.mul_by_xi();
    Fp2 r2 = (a.c0 + a.c2) * (b.c0 + b.c2) - t0 - t2 + t1;
    return {r0, r1, r2};
  }

  Fp6 square() const { return *this * *this; }

  // Multiplication by v: (c0, c1, c2) -> (xi*c2, c0, c1).
  Fp6 mul_by_v() const { return {c2.mul_by_xi(), c0, c1}; }

  Fp6 inverse() const {
    Fp2 a = c0.square() - (c1 * c2).mul_by_xi();
    Fp2 b = c2.square().mul_by_xi() - c0 * c1;
    Fp2 c = c1.square() - c0 * c2;
    Fp2 f = c0 * a + ((c2 * b) + (c1 * c)).mul_by_xi();
    Fp2 fi = f.inverse();
    return {a * fi, b * fi, c * fi};
  }
};

struct Fp12 {
  Fp6 c0, c1;

  static Fp12 one() { return {Fp6::one(), {}}; }

  bool is_one() const { return c0 == Fp6::one() && c1.is_zero(); }
  friend bool operator==(const Fp12&, const Fp12&) = default;

  friend Fp12 operator*(const Fp12& a, const Fp12& b) {
    Fp6 t0 = a.c0 * b.c0;
    Fp6 t1 = a.c1 * b.c1;
    return {t0 + t1.mul_by_v(), (a.c0 + a.c1) * (b.c0 + b.c1) - t0 - t1};
  }
  Fp12& operator*=(const Fp12& b) { return *this = *this * b; }

  Fp12 square() const {
    Fp6 ab = c0 * c1;
    Fp6 r0 = (c0 + c1) * (c0 + c1.mul_by_v()) - ab - ab.mul_by_v();
    return {r0, ab + ab};
  }

  Fp12 conjugate() const { return {c0, -c1}; }

  // Squaring for elements of the cyclotomic subgroup (Granger-Scott).
  Fp12 cyclotomic_square() const {
    auto fp4_square = [](const Fp2& a, const Fp2& b) {
      Fp2 t0 = a.square();
      Fp2 t1 = b.square();
      return std::pair<Fp2, Fp2>{t1.mul_by_xi() + t0, (a + b).square() - t0 - t1};
    };
    Fp2 z0 = c0.c0, z4 = c0.c1, z3 = c0.c2;
    Fp2 z2 = c1.c0, z1 = c1.c1, z5 = c1.c2;
    auto [a0, a1] = fp4_square(z0, z1);
    z0 = (a0 - z0).dbl() + a0;
    z1 = (a1 + z1).dbl() + a1;
    auto [b0, b1] = fp4_square(z2, z3);
    auto [d0, d1] = fp4_square(z4, z5);
    z4 = (b0 - z4).dbl() + b0;
    z5 = (b1 + z5).dbl() + b1;
    Fp2 e = d1.mul_by_xi();
    z2 = (e + z2).dbl() + e;
    z3 = (d0 - z3).dbl() + d0;
    return {{z0, z4, z3}, {z2, z1, z5}};
  }

  Fp12 inverse() const {
    Fp6 t = (c0.square() - c1.square().mul_by_v()).inverse();
    return {c0 * t, -(c1 * t)};
  }

  // x -> x^p
  Fp12 frobenius() const;

  template <std::size_t M>
  Fp12 pow(const Limbs<M>& e) const {
    Fp12 acc = one();
    for (std::size_t i = limbs::bit_length(e); i-- > 0;) {
      acc = acc.square();
      if (limbs::bit(e, i)) acc = acc * *this;
    }
    return acc;
  }
};

}  // namespace nimsa::crypto
