#include "nimsa/crypto/pairing.hpp"

namespace nimsa::crypto {
namespace {

// |x| for the BLS parameter x = -0xd201000000010000.
constexpr Limbs<1> kAbsX = {0xd201000000010000ULL};

// Line through the untwisted image of (xt, yt) with twist slope `lambda`,
// evaluated at (xp, yp) and scaled by w^3:
//   (lambda*xt - yt) + (-lambda*xp) w^2 + yp w^3
Fp12 line_value(const Fp2& lambda, const Fp2& xt, const Fp2& yt, const Fp& xp, const Fp& yp) {
  Fp12 l{};
  l.c0.c0 = lambda * xt - yt;
  l.c0.c1 = -(lambda * xp);
  l.c1.c1 = Fp2{yp, Fp::zero()};
  return l;
}

// Multiplication by a line value, exploiting its three non-zero slots.
Fp12 mul_by_line(const Fp12& f, const Fp12& l) {
  const Fp2& a = l.c0.c0;
  const Fp2& b = l.c0.c1;
  const Fp2& c = l.c1.c1;
  // c0 part of the line is (a, b, 0); c1 part is (0, c, 0).
  auto mul_ab = [&](const Fp6& x) {
    // (x0 + x1 v + x2 v^2)(a + b v)
    return Fp6{x.c0 * a + (x.c2 * b).mul_by_xi(), x.c0 * b + x.c1 * a, x.c1 * b + x.c2 * a};
  };
  auto mul_c = [&](const Fp6& x) {
    // (x0 + x1 v + x2 v^2)(c v)
    return Fp6{(x.c2 * c).mul_by_xi(), x.c0 * c, x.c1 * c};
  };
  Fp6 t0 = mul_ab(f.c0);
  Fp6 t1 = mul_c(f.c1);
  Fp6 r0 = t0 + t1.mul_by_v();
  Fp6 r1 = mul_ab(f.c1) + mul_c(f.c0);
  return {r0, r1};
}

// a^x for a in the cyclotomic subgroup.
Fp12 pow_x(const Fp12& a) {
  Fp12 acc = a;
  for (std::size_t i = limbs::bit_length(kAbsX) - 1; i-- > 0;) {
    acc = acc.cyclotomic_square();
    if (limbs::bit(kAbsX, i)) acc = acc * a;
  }
  return acc.conjugate();
}

Fp12 frobenius2(const Fp12& a) { return a.frobenius().frobenius(); }

}  // namespace

Fp12 miller_loop(const G1& p, const G2& q) {
  if (p.is_identity() || q.is_identity()) return Fp12::one();
  const auto pa = p.to_affine();
  const auto qa = q.to_affine();
  Fp2 xt = qa.x;
  Fp2 yt = qa.y;
  Fp12 f = Fp12::one();
  for (std::size_t i = limbs::bit_length(kAbsX) - 1; i-- > 0;) {
    f = f.square();
    Fp2 xt2 = xt.square();
    Fp2 lambda = (xt2.dbl() + xt2) * yt.dbl().inverse();
    f = mul_by_line(f, line_value(lambda, xt, yt, pa.x, pa.y));
    Fp2 x3 = lambda.square() - xt.dbl();
    yt = lambda * (xt - x3) - yt;
    xt = x3;
    if (limbs::bit(kAbsX, i)) {
      lambda = (qa.y - yt) * (qa.x - xt).inverse();
      f = mul_by_line(f, line_value(lambda, xt, yt, pa.x, pa.y));
      x3 = lambda.square() - xt - qa.x;
      yt = lambda * (xt - x3) - yt;
      xt = x3;
    }
  }
  return f.conjugate();
}

Gt final_exponentiation(const Fp12& f) {
  // Easy part: f^((p^6 - 1)(p^2 + 1)); lands in the cyclotomic subgroup
  // where inversion is conjugation.
  Fp12 t = f.conjugate() * f.inverse();
  t = frobenius2(t) * t;
  // Hard part, cubed: (x-1)^2 (x+p) (x^2+p^2-1) + 3.
  Fp12 a = pow_x(t) * t.conjugate();
  a = pow_x(a) * a.conjugate();
  Fp12 b = pow_x(a) * a.frobenius();
  Fp12 c = pow_x(pow_x(b)) * frobenius2(b) * b.conjugate();
  return c * t.square() * t;
}

Gt pairing(const G1& p, const G2& q) { return final_exponentiation(miller_loop(p, q)); }

bool gt_in_subgroup(const Gt& f) { return f.pow(bls12_381::kOrderR).is_one(); }

namespace {

template <class Visit>
void for_each_word(const Fp12& f, Visit&& visit) {
  for (const Fp6* six : {&f.c1, &f.c0}) {
    for (const Fp2* two : {&six->c2, &six->c1, &six->c0}) {
      visit(two->c1);
      visit(two->c0);
    }
  }
}

}  // namespace

std::array<std::uint8_t, kGtSize> serialize(const Gt& f) {
  std::array<std::uint8_t, kGtSize> out{};
  std::size_t off = 0;
  for_each_word(f, [&](const Fp& w) {
    w.to_be_bytes(std::span(out).subspan(off, 48));
    off += 48;
  });
  return out;
}

std::optional<Gt> deserialize_gt(std::span<const std::uint8_t> in) {
  if (in.size() != kGtSize) return std::nullopt;
  Fp12 f{};
  std::array<Fp*, 12> slots{};
  std::size_t k = 0;
  for (Fp6* six : {&f.c1, &f.c0}) {
    for (Fp2* two : {&six->c2, &six->c1, &six->c0}) {
      slots[k++] = &two->c1;
      slots[k++] = &two->c0;
    }
  }
  for (std::size_t i = 0; i < 12; ++i) {
    auto w = Fp::from_be_bytes(in.subspan(48 * i, 48));
    if (!w) return std::nullopt;
    *slots[i] = *w;
  }
  if (!gt_in_subgroup(f)) return std::nullopt;
  return f;
}

}  // namespace nimsa::crypto
