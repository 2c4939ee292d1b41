#pragma once

// Short Weierstrass curves y^2 = x^3 + b (a = 0) in Jacobian coordinates.
//   G1: E(Fp)  : y^2 = x^3 + 4
//   G2: E'(Fp2): y^2 = x^3 + 4(u + 1)   (M-type sextic twist)

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "nimsa/crypto/tower.hpp"

namespace nimsa::crypto {

struct G1Curve {
  using Field = Fp;
  static Fp b() { return Fp::from_u64(4); }
};

struct G2Curve {
  using Field = Fp2;
  static Fp2 b() { return {Fp::from_u64(4), Fp::from_u64(4)}; }
};

template <class Curve>
struct AffinePoint {
  using F = typename Curve::Field;
  F x, y;
  bool infinity = true;
};

template <class Curve>
class JacobianPoint {
 public:
  using F = typename Curve::Field;

  JacobianPoint() = default;
  JacobianPoint(const F& x, const F& y, const F& z) : x_(x), y_(y), z_(z) {}

  static JacobianPoint identity() { return {}; }
  static JacobianPoint from_affine(const F& x, const F& y) { return {x, y, F::one()}; }

  bool is_identity() const { return z_.is_zero(); }

  const F& x() const { return x_; }
  const F& y() const { return y_; }
  const F& z() const { return z_; }

  JacobianPoint dbl() const {
    if (is_identity()) return *this;
    // dbl-2009-l
    F a = x_.square();
    F b = y_.square();
    F c = b.square();
    F d = ((x_ + b).square() - a - c).dbl();
    F e = a.dbl() + a;
    F f = e.square();
    F x3 = f - d.dbl();
    F c8 = c.dbl().dbl().dbl();
    F y3 = e * (d - x3) - c8;
    F z3 = (y_ * z_).dbl();
    return {x3, y3, z3};
  }

  friend JacobianPoint operator+(const JacobianPoint& p, const JacobianPoint& q) {
    if (p.is_identity()) return q;
    if (q.is_identity()) return p;
    // add-2007-bl
    F z1z1 = p.z_.square();
    F z2z2 = q.z_.square();
    F u1 = p.x_ * z2z2;
    F u2 = q.x_ * z1z1;
    F s1 = p.y_ * q.z_ * z2z2;
    F s2 = q.y_ * p.z_ * z1z1;
    F h = u2 - u1;
    F r = (s2 - s1).dbl();
    if (h.is_zero()) {
      if (r.is_zero()) return p.dbl();
      return identity();
    }
    F i = h.dbl().square();
    F j = h * i;
    F v = u1 * i;
    F x3 = r.square() - j - v.dbl();
    F y3 = r * (v - x3) - (s1 * j).dbl();
    F z3 = ((p.z_ + q.z_).square() - z1z1 - z2z2) * h;
    return {x3, y3, z3};
  }

  JacobianPoint operator-() const { return {x_, -y_, z_}; }
  friend JacobianPoint operator-(const JacobianPoint& p, const JacobianPoint& q) { return p + (-q); }
  JacobianPoint& operator+=(const JacobianPoint& q) { return *this = *this + q; }

  // Double-and-add over every bit of the scalar width.
  template <std::size_t M>
  JacobianPoint mul(const Limbs<M>& k) const {
    JacobianPoint acc;
    for (std::size_t i = 64 * M; i-- > 0;) {
      acc = acc.dbl();
      if (limbs::bit(k, i)) acc = acc + *this;
    }
    return acc;
  }
  JacobianPoint mul(const Fr& k) const { return mul(k.to_canonical()); }

  AffinePoint<Curve> to_affine() const {
    if (is_identity()) return {};
    F zi = z_.inverse();
    F zi2 = zi.square();
    return {x_ * zi2, y_ * zi2 * zi, false};
  }

  bool is_on_curve() const {
    if (is_identity()) return true;
    F z2 = z_.square();
    F z6 = z2.square() * z2;
    return y_.square() == x_.square() * x_ + Curve::b() * z6;
  }

  friend bool operator==(const JacobianPoint& p, const JacobianPoint& q) {
    if (p.is_identity() || q.is_identity()) return p.is_identity() && q.is_identity();
    F z1z1 = p.z_.square();
    F z2z2 = q.z_.square();
    if (!(p.x_ * z2z2 == q.x_ * z1z1)) return false;
    return p.y_ * z2z2 * q.z_ == q.y_ * z1z1 * p.z_;
  }

 private:
  F x_{}, y_{}, z_{};
};

using G1 = JacobianPoint<G1Curve>;
using G2 = JacobianPoint<G2Curve>;

G1 g1_generator();
G2 g2_generator();

bool in_subgroup(const G1& p);
bool in_subgroup(const G2& p);

inline constexpr std::size_t kG1CompressedSize = 48;
inline constexpr std::size_t kG2CompressedSize = 96;

/// Compressed point encodings in the widely deployed BLS12-381 format:
/// big-endian x (c1 before c0 for Fp2) with the three top bits of the first
/// byte carrying compression (0x80), infinity (0x40) and y-sign (0x20).
std::array<std::uint8_t, kG1CompressedSize> serialize(const G1& p);
std::array<std::uint8_t, kG2CompressedSize> serialize(const G2& p);

/// Rejects non-canonical encodings, points off the curve and points outside
/// the prime-order subgroup.
std::optional<G1> deserialize_g1(std::span<const std::uint8_t> in);
std::optional<G2> deserialize_g2(std::span<const std::uint8_t> in);

}  // namespace nimsa::crypto
