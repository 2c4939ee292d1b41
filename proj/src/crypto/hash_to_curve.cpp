#include "nimsa/crypto/hash_to_curve.hpp"

#include "nimsa/crypto/hash.hpp"

namespace nimsa::crypto {
namespace {

namespace k = bls12_381;

constexpr std::size_t kFieldChunk = 64;  // L = ceil((381 + 128) / 8)
constexpr Limbs<6> kPPlus1Div4 = limbs::shr(limbs::add_small(k::kModulusP, 1), 2);
constexpr Limbs<1> kG1CofactorEff = {0xd201000000010001ULL};

Fp fp_from_chunk(std::span<const std::uint8_t> chunk) {
  return Fp::from_wide(limbs::from_be_bytes<12>(chunk));
}

std::optional<Fp> sqrt_of(const Fp& a) {
  Fp r = a.pow(kPPlus1Div4);
  if (!(r.square() == a)) return std::nullopt;
  return r;
}
std::optional<Fp2> sqrt_of(const Fp2& a) { return a.sqrt(); }

template <class F>
struct IsoCurve {
  F a, b, z;
};

// Horner evaluation, coefficients in ascending degree.
template <class F, class Coeff, std::size_t N, class Conv>
F eval_poly(const std::array<Coeff, N>& coeffs, const F& x, Conv conv) {
  F acc = F::zero();
  for (std::size_t i = N; i-- > 0;) acc = acc * x + conv(coeffs[i]);
  return acc;
}

// Simplified SWU onto y^2 = x^3 + A x + B, returns affine (x, y).
template <class F>
std::pair<F, F> sswu(const F& u, const IsoCurve<F>& c) {
  F zu2 = c.z * u.square();
  F tv1 = zu2.square() + zu2;
  F neg_b_over_a = -(c.b * c.a.inverse());
  F x1 = tv1.is_zero() ? c.b * (c.z * c.a).inverse() : neg_b_over_a * (F::one() + tv1.inverse());
  F gx1 = (x1.square() + c.a) * x1 + c.b;
  F x2 = zu2 * x1;
  F gx2 = (x2.square() + c.a) * x2 + c.b;
  bool e1 = gx1.is_square();
  F x = F::select(e1, x2, x1);
  F gx = F::select(e1, gx2, gx1);
  F y = *sqrt_of(gx);
  if (u.sgn0() != y.sgn0()) y = -y;
  return {x, y};
}

const IsoCurve<Fp>& iso11() {
  static const IsoCurve<Fp> c{Fp::from_canonical(k::kIso11A), Fp::from_canonical(k::kIso11B),
                              Fp::from_canonical(k::kIso11Z)};
  return c;
}

const IsoCurve<Fp2>& iso3() {
  static const IsoCurve<Fp2> c{Fp2::from_canonical(k::kIso3A), Fp2::from_canonical(k::kIso3B),
                               Fp2::from_canonical(k::kIso3Z)};
  return c;
}

template <class Point, class F, class Tables>
Point isogeny_map(const F& xp, const F& yp, const Tables& t) {
  F xn = t.xnum(xp), xd = t.xden(xp), yn = t.ynum(xp), yd = t.yden(xp);
  if (xd.is_zero() || yd.is_zero()) return Point::identity();
  F inv = (xd * yd).inverse();
  F x = xn * yd * inv;
  F y = yp * yn * xd * inv;
  return Point::from_affine(x, y);
}

struct Iso11Tables {
  static Fp conv(const Limbs<6>& l) { return Fp::from_canonical(l); }
  Fp xnum(const Fp& x) const { return eval_poly<Fp>(k::kIso11XNum, x, conv); }
  Fp xden(const Fp& x) const { return eval_poly<Fp>(k::kIso11XDen, x, conv); }
  Fp ynum(const Fp& x) const { return eval_poly<Fp>(k::kIso11YNum, x, conv); }
  Fp yden(const Fp& x) const { return eval_poly<Fp>(k::kIso11YDen, x, conv); }
};

struct Iso3Tables {
  static Fp2 conv(const k::Limbs2x6& l) { return Fp2::from_canonical(l); }
  Fp2 xnum(const Fp2& x) const { return eval_poly<Fp2>(k::kIso3XNum, x, conv); }
  Fp2 xden(const Fp2& x) const { return eval_poly<Fp2>(k::kIso3XDen, x, conv); }
  Fp2 ynum(const Fp2& x) const { return eval_poly<Fp2>(k::kIso3YNum, x, conv); }
  Fp2 yden(const Fp2& x) const { return eval_poly<Fp2>(k::kIso3YDen, x, conv); }
};

Bytes with_counter(std::span<const std::uint8_t> msg, std::uint8_t ctr) {
  Bytes m(msg.begin(), msg.end());
  m.push_back(ctr);
  return m;
}

}  // namespace

G1 map_to_curve_g1(const Fp& u) {
  auto [x, y] = sswu(u, iso11());
  return isogeny_map<G1>(x, y, Iso11Tables{});
}

G2 map_to_curve_g2(const Fp2& u) {
  auto [x, y] = sswu(u, iso3());
  return isogeny_map<G2>(x, y, Iso3Tables{});
}

G1 clear_cofactor_g1(const G1& p) { return p.mul(kG1CofactorEff); }
G2 clear_cofactor_g2(const G2& p) { return p.mul(k::kG2CofactorEff); }

G1 hash_to_g1(std::span<const std::uint8_t> msg, std::span<const std::uint8_t> dst) {
  Bytes uniform = expand_message_xmd(msg, dst, 2 * kFieldChunk);
  std::span<const std::uint8_t> u(uniform);
  Fp u0 = fp_from_chunk(u.first(kFieldChunk));
  Fp u1 = fp_from_chunk(u.subspan(kFieldChunk, kFieldChunk));
  return clear_cofactor_g1(map_to_curve_g1(u0) + map_to_curve_g1(u1));
}

G2 hash_to_g2(std::span<const std::uint8_t> msg, std::span<const std::uint8_t> dst) {
  Bytes uniform = expand_message_xmd(msg, dst, 4 * kFieldChunk);
  std::span<const std::uint8_t> u(uniform);
  auto chunk = [&](std::size_t i) { return fp_from_chunk(u.subspan(i * kFieldChunk, kFieldChunk)); };
  Fp2 u0{chunk(0), chunk(1)};
  Fp2 u1{chunk(2), chunk(3)};
  return clear_cofactor_g2(map_to_curve_g2(u0) + map_to_curve_g2(u1));
}

G1 hash_to_g1_try_increment(std::span<const std::uint8_t> msg, std::span<const std::uint8_t> dst) {
  for (unsigned ctr = 0;; ++ctr) {
    Bytes h = expand_message_xmd(with_counter(msg, static_cast<std::uint8_t>(ctr)), dst, kFieldChunk + 1);
    Fp x = fp_from_chunk(std::span<const std::uint8_t>(h).first(kFieldChunk));
    auto y = sqrt_of((x.square() * x) + G1Curve::b());
    if (!y) continue;
    if (y->sgn0() != bool(h.back() & 1)) *y = -*y;
    G1 p = clear_cofactor_g1(G1::from_affine(x, *y));
    if (!p.is_identity()) return p;
  }
}

G2 hash_to_g2_try_increment(std::span<const std::uint8_t> msg, std::span<const std::uint8_t> dst) {
  for (unsigned ctr = 0;; ++ctr) {
    Bytes h = expand_message_xmd(with_counter(msg, static_cast<std::uint8_t>(ctr)), dst, 2 * kFieldChunk + 1);
    std::span<const std::uint8_t> s(h);
    Fp2 x{fp_from_chunk(s.first(kFieldChunk)), fp_from_chunk(s.subspan(kFieldChunk, kFieldChunk))};
    auto y = (x.square() * x + G2Curve::b()).sqrt();
    if (!y) continue;
    if (y->sgn0() != bool(h.back() & 1)) *y = -*y;
    G2 p = clear_cofactor_g2(G2::from_affine(x, *y));
    if (!p.is_identity()) return p;
  }
}

}  // namespace nimsa::crypto
