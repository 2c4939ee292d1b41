#include "nimsa/crypto/curve.hpp"

namespace nimsa::crypto {
namespace {

constexpr std::uint8_t kFlagCompressed = 0x80;
constexpr std::uint8_t kFlagInfinity = 0x40;
constexpr std::uint8_t kFlagSign = 0x20;

constexpr Limbs<6> kPPlus1Div4 = limbs::shr(limbs::add_small(bls12_381::kModulusP, 1), 2);

std::optional<Fp> fp_sqrt(const Fp& a) {
  Fp r = a.pow(kPPlus1Div4);
  if (!(r.square() == a)) return std::nullopt;
  return r;
}

std::optional<Fp> read_fp(std::span<const std::uint8_t> in) { return Fp::from_be_bytes(in); }

bool all_zero_after_flags(std::span<const std::uint8_t> in) {
  if ((in[0] & 0x1f) != 0) return false;
  for (std::size_t i = 1; i < in.size(); ++i) {
    if (in[i] != 0) return false;
  }
  return true;
}

}  // namespace

G1 g1_generator() {
  return G1::from_affine(Fp::from_canonical(bls12_381::kG1GenX), Fp::from_canonical(bls12_381::kG1GenY));
}

G2 g2_generator() {
  return G2::from_affine(Fp2::from_canonical(bls12_381::kG2GenX), Fp2::from_canonical(bls12_381::kG2GenY));
}

bool in_subgroup(const G1& p) { return p.is_on_curve() && p.mul(bls12_381::kOrderR).is_identity(); }
bool in_subgroup(const G2& p) { return p.is_on_curve() && p.mul(bls12_381::kOrderR).is_identity(); }

std::array<std::uint8_t, kG1CompressedSize> serialize(const G1& p) {
  std::array<std::uint8_t, kG1CompressedSize> out{};
  if (p.is_identity()) {
    out[0] = kFlagCompressed | kFlagInfinity;
    return out;
  }
  auto a = p.to_affine();
  a.x.to_be_bytes(out);
  out[0] |= kFlagCompressed;
  if (a.y.is_lexicographically_largest()) out[0] |= kFlagSign;
  return out;
}

std::array<std::uint8_t, kG2CompressedSize> serialize(const G2& p) {
  std::array<std::uint8_t, kG2CompressedSize> out{};
  if (p.is_identity()) {
    out[0] = kFlagCompressed | kFlagInfinity;
    return out;
  }
  auto a = p.to_affine();
  a.x.c1.to_be_bytes(std::span(out).first(48));
  a.x.c0.to_be_bytes(std::span(out).subspan(48));
  out[0] |= kFlagCompressed;
  if (a.y.is_lexicographically_largest()) out[0] |= kFlagSign;
  return out;
}

std::optional<G1> deserialize_g1(std::span<const std::uint8_t> in) {
  if (in.size() != kG1CompressedSize) return std::nullopt;
  const std::uint8_t flags = in[0] & 0xe0;
  if (!(flags & kFlagCompressed)) return std::nullopt;
  if (flags & kFlagInfinity) {
    if ((flags & kFlagSign) || !all_zero_after_flags(in)) return std::nullopt;
    return G1::identity();
  }
  std::array<std::uint8_t, 48> xb{};
  std::copy(in.begin(), in.end(), xb.begin());
  xb[0] &= 0x1f;
  auto x = read_fp(xb);
  if (!x) return std::nullopt;
  auto y = fp_sqrt(x->square() * *x + G1Curve::b());
  if (!y) return std::nullopt;
  if (y->is_lexicographically_largest() != bool(flags & kFlagSign)) *y = -*y;
  G1 p = G1::from_affine(*x, *y);
  if (!in_subgroup(p)) return std::nullopt;
  return p;
}

std::optional<G2> deserialize_g2(std::span<const std::uint8_t> in) {
  if (in.size() != kG2CompressedSize) return std::nullopt;
  const std::uint8_t flags = in[0] & 0xe0;
  if (!(flags & kFlagCompressed)) return std::nullopt;
  if (flags & kFlagInfinity) {
    if ((flags & kFlagSign) || !all_zero_after_flags(in)) return std::nullopt;
    return G2::identity();
  }
  std::array<std::uint8_t, 48> c1b{};
  std::copy(in.begin(), in.begin() + 48, c1b.begin());
  c1b[0] &= 0x1f;
  auto c1 = read_fp(c1b);
  auto c0 = read_fp(in.subspan(48));
  if (!c0 || !c1) return std::nullopt;
  Fp2 x{*c0, *c1};
  auto y = (x.square() * x + G2Curve::b()).sqrt();
  if (!y) return std::nullopt;
  if (y->is_lexicographically_largest() != bool(flags & kFlagSign)) *y = -*y;
  G2 p = G2::from_affine(x, *y);
  if (!in_subgroup(p)) return std::nullopt;
  return p;
}

}  // namespace nimsa::crypto
