#include "nimsa/crypto/tower.hpp"

namespace nimsa::crypto {
namespace {

constexpr Limbs<6> kP = bls12_381::kModulusP;
constexpr Limbs<6> kPMinus3Div4 = limbs::shr(limbs::sub_small(kP, 3), 2);
constexpr Limbs<6> kPMinus1Div2 = limbs::shr(limbs::sub_small(kP, 1), 1);
constexpr Limbs<6> kPMinus1Div6 = limbs::div_small(limbs::sub_small(kP, 1), 6);

// gamma[k] = xi^(k (p-1) / 6): w^(k p) = w^k * gamma[k].
struct FrobeniusTable {
  std::array<Fp2, 6> gamma;
  FrobeniusTable() {
    const Fp2 xi{Fp::one(), Fp::one()};
    Fp2 g1 = xi.pow(kPMinus1Div6);
    gamma[0] = Fp2::one();
    for (std::size_t k = 1; k < 6; ++k) gamma[k] = gamma[k - 1] * g1;
  }
};

const FrobeniusTable& frobenius_table() {
  static const FrobeniusTable table;
  return table;
}

}  // namespace

std::optional<Fp2> Fp2::sqrt() const {
  const Fp2 minus_one{-Fp::one(), Fp::zero()};
  Fp2 a1 = pow(kPMinus3Div4);
  Fp2 alpha = a1.square() * *this;
  Fp2 a0 = alpha.conjugate() * alpha;
  if (a0 == minus_one) return std::nullopt;
  Fp2 x0 = a1 * *this;
  Fp2 x;
  if (alpha == minus_one) {
    x = Fp2{-x0.c1, x0.c0};  // u * x0
  } else {
    Fp2 b = (Fp2::one() + alpha).pow(kPMinus1Div2);
    x = b * x0;
  }
  if (!(x.square() == *this)) return std::nullopt;
  return x;
}

Fp12 Fp12::frobenius() const {
  const auto& g = frobenius_table().gamma;
  // Coefficients by power of w: c0 = (w^0, w^2, w^4), c1 = (w^1, w^3, w^5).
  return {
      {c0.c0.conjugate(), c0.c1.conjugate() * g[2], c0.c2.conjugate() * g[4]},
      {c1.c0.conjugate() * g[1], c1.c1.conjugate() * g[3], c1.c2.conjugate() * g[5]},
  };
}

}  // namespace nimsa::crypto
