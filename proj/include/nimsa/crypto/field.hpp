#pragma once

// Fixed-width Montgomery arithmetic over a prime modulus.
//
// Elements are stored as N little-endian 64-bit limbs in Montgomery form
// (a * 2^(64N) mod m) and are always fully reduced, so limb-wise equality
// is field equality.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <type_traits>

#if defined(__x86_64__)
#include <immintrin.h>
#endif

#include "nimsa/crypto/bls12_381_constants.hpp"

namespace nimsa::crypto {

template <std::size_t N>
using Limbs = std::array<std::uint64_t, N>;

namespace limbs {

using u128 = unsigned __int128;

template <std::size_t N>
constexpr bool less(const Limbs<N>& a, const Limbs<N>& b) {
  for (std::size_t i = N; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

template <std::size_t N>
constexpr bool is_zero(const Limbs<N>& a) {
  std::uint64_t acc = 0;
  for (auto w : a) acc |= w;
  return acc == 0;
}

// a -= b, returns borrow.
template <std::size_t N>
constexpr std::uint64_t sub_in_place(Limbs<N>& a, const Limbs<N>& b) {
#if defined(__x86_64__)
  if (!std::is_constant_evaluated()) {
    unsigned char bw = 0;
    for (std::size_t i = 0; i < N; ++i) {
      unsigned long long out;
      bw = _subborrow_u64(bw, a[i], b[i], &out);
      a[i] = out;
    }
    return bw;
  }
#endif
  std::uint64_t borrow = 0;
  for (std::size_t i = 0; i < N; ++i) {
    u128 d = static_cast<u128>(a[i]) - b[i] - borrow;
    a[i] = static_cast<std::uint64_t>(d);
    borrow = static_cast<std::uint64_t>(d >> 64) & 1;
  }
  return borrow;
}

// a += b, returns carry.
template <std::size_t N>
constexpr std::uint64_t add_in_place(Limbs<N>& a, const Limbs<N>& b) {
#if defined(__x86_64__)
  if (!std::is_constant_evaluated()) {
    unsigned char cy = 0;
    for (std::size_t i = 0; i < N; ++i) {
      unsigned long long out;
      cy = _addcarry_u64(cy, a[i], b[i], &out);
      a[i] = out;
    }
    return cy;
  }
#endif
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < N; ++i) {
    u128 s = static_cast<u128>(a[i]) + b[i] + carry;
    a[i] = static_cast<std::uint64_t>(s);
    carry = static_cast<std::uint64_t>(s >> 64);
  }
  return carry;
}

template <std::size_t N>
constexpr Limbs<N> add_small(Limbs<N> a, std::uint64_t v) {
  for (std::size_t i = 0; i < N && v; ++i) {
    u128 s = static_cast<u128>(a[i]) + v;
    a[i] = static_cast<std::uint64_t>(s);
    v = static_cast<std::uint64_t>(s >> 64);
  }
  return a;
}

template <std::size_t N>
constexpr Limbs<N> sub_small(Limbs<N> a, std::uint64_t v) {
  for (std::size_t i = 0; i < N && v; ++i) {
    std::uint64_t before = a[i];
    a[i] -= v;
    v = before < v ? 1 : 0;
  }
  return a;
}

template <std::size_t N>
constexpr Limbs<N> shr(Limbs<N> a, unsigned bits) {
  for (unsigned b = 0; b < bits; ++b) {
    for (std::size_t i = 0; i < N; ++i) {
      std::uint64_t hi = i + 1 < N ? a[i + 1] : 0;
      a[i] = (a[i] >> 1) | (hi << 63);
    }
  }
  return a;
}

template <std::size_t N>
constexpr Limbs<N> div_small(const Limbs<N>& a, std::uint64_t d) {
  Limbs<N> q{};
  u128 rem = 0;
  for (std::size_t i = N; i-- > 0;) {
    u128 cur = (rem << 64) | a[i];
    q[i] = static_cast<std::uint64_t>(cur / d);
    rem = cur % d;
  }
  return q;
}

template <std::size_t N>
constexpr std::size_t bit_length(const Limbs<N>& a) {
  for (std::size_t i = N; i-- > 0;) {
    if (a[i]) return 64 * i + (64 - static_cast<std::size_t>(__builtin_clzll(a[i])));
  }
  return 0;
}

template <std::size_t N>
constexpr bool bit(const Limbs<N>& a, std::size_t i) {
  return (a[i / 64] >> (i % 64)) & 1;
}

template <std::size_t N>
constexpr Limbs<N> from_be_bytes(std::span<const std::uint8_t> in) {
  Limbs<N> out{};
  std::size_t n = in.size();
  for (std::size_t k = 0; k < n && k < 8 * N; ++k) {
    out[k / 8] |= static_cast<std::uint64_t>(in[n - 1 - k]) << (8 * (k % 8));
  }
  return out;
}

template <std::size_t N>
constexpr void to_be_bytes(const Limbs<N>& a, std::span<std::uint8_t> out) {
  std::size_t n = out.size();
  for (std::size_t k = 0; k < n; ++k) {
    out[n - 1 - k] = k < 8 * N ? static_cast<std::uint8_t>(a[k / 8] >> (8 * (k % 8))) : 0;
  }
}

// -m^-1 mod 2^64 by Newton iteration.
constexpr std::uint64_t mont_neg_inv(std::uint64_t m0) {
  std::uint64_t inv = 1;
  for (int i = 0; i < 7; ++i) inv *= 2 - m0 * inv;
  return 0 - inv;
}

// 2^bits mod m by repeated doubling.
template <std::size_t N>
constexpr Limbs<N> pow2_mod(const Limbs<N>& m, std::size_t bits) {
  Limbs<N> a{};
  a[0] = 1;
  for (std::size_t i = 0; i < bits; ++i) {
    std::uint64_t carry = add_in_place(a, a);
    if (carry || !less(a, m)) sub_in_place(a, m);
  }
  return a;
}

}  // namespace limbs

// Params must provide `static constexpr std::size_t kLimbs` and
// `static constexpr Limbs<kLimbs> kModulus` (odd, top limb not saturated).
template <class Params>
class MontField {
 public:
  static constexpr std::size_t kLimbs = Params::kLimbs;
  static constexpr std::size_t kBytes = (limbs::bit_length(Params::kModulus) + 7) / 8;
  using Repr = Limbs<kLimbs>;

  static constexpr Repr kModulus = Params::kModulus;

  constexpr MontField() = default;

  static constexpr MontField zero() { return MontField{}; }
  static constexpr MontField one() { return from_raw(kR1); }

  // Canonical integer < modulus into Montgomery form; caller guarantees range.
  static constexpr MontField from_canonical(const Repr& a) {
    MontField out;
    out.v_ = mont_mul(a, kR2);
    return out;
  }

  static constexpr MontField from_u64(std::uint64_t v) {
    Repr a{};
    a[0] = v;
    return from_canonical(a);
  }

  // Reduces an arbitrary little-endian integer of up to 2N limbs.
  static constexpr MontField from_wide(const Limbs<2 * kLimbs>& wide) {
    Repr lo{}, hi{};
    for (std::size_t i = 0; i < kLimbs; ++i) {
      lo[i] = wide[i];
      hi[i] = wide[kLimbs + i];
    }
    // value = lo + hi * R; in Montgomery form that is lo*R + hi*R^2.
    MontField a = from_raw(mont_mul(reduce_once(lo), kR2));
    MontField b = from_raw(mont_mul(reduce_once(hi), kR3));
    return a + b;
  }

  static std::optional<MontField> from_be_bytes(std::span<const std::uint8_t> in) {
    if (in.size() != kBytes) return std::nullopt;
    Repr a = limbs::from_be_bytes<kLimbs>(in);
    if (!limbs::less(a, kModulus)) return std::nullopt;
    return from_canonical(a);
  }

  constexpr Repr to_canonical() const {
    Repr one_raw{};
    one_raw[0] = 1;
    return mont_mul(v_, one_raw);
  }

  void to_be_bytes(std::span<std::uint8_t> out) const {
    limbs::to_be_bytes<kLimbs>(to_canonical(), out);
  }

  constexpr bool is_zero() const { return limbs::is_zero(v_); }
  constexpr bool is_one() const { return v_ == kR1; }

  friend constexpr bool operator==(const MontField& a, const MontField& b) { return a.v_ == b.v_; }

  friend constexpr MontField operator+(MontField a, const MontField& b) {
    std::uint64_t carry = limbs::add_in_place(a.v_, b.v_);
    a.v_ = reduce_masked(a.v_, carry);
    return a;
  }

  friend constexpr MontField operator-(MontField a, const MontField& b) {
    const std::uint64_t mask = 0 - limbs::sub_in_place(a.v_, b.v_);
    Repr fix = kModulus;
    for (auto& w : fix) w &= mask;
    limbs::add_in_place(a.v_, fix);
    return a;
  }

  constexpr MontField operator-() const { return zero() - *this; }

  friend constexpr MontField operator*(const MontField& a, const MontField& b) {
    return from_raw(mont_mul(a.v_, b.v_));
  }

  MontField& operator+=(const MontField& b) { return *this = *this + b; }
  MontField& operator-=(const MontField& b) { return *this = *this - b; }
  MontField& operator*=(const MontField& b) { return *this = *this * b; }

  constexpr MontField square() const { return *this * *this; }
  constexpr MontField dbl() const { return *this + *this; }

  template <std::size_t M>
  constexpr MontField pow(const Limbs<M>& e) const {
    MontField acc = one();
    for (std::size_t i = limbs::bit_length(e); i-- > 0;) {
      acc = acc.square();
      if (limbs::bit(e, i)) acc = acc * *this;
    }
    return acc;
  }

  // Zero maps to zero. Binary extended Euclid on the canonical value; the
  // running time depends on the input.
  MontField inverse() const {
    if (is_zero()) return zero();
    Repr u = to_canonical();
    Repr v = kModulus;
    Repr x1{}, x2{};
    x1[0] = 1;
    auto halve = [](Repr& r) { r = limbs::shr(r, 1); };
    auto halve_mod = [&](Repr& x) {
      if (x[0] & 1) {
        std::uint64_t carry = limbs::add_in_place(x, kModulus);
        halve(x);
        x[kLimbs - 1] |= carry << 63;
      } else {
        halve(x);
      }
    };
    auto sub_mod = [](Repr& a, const Repr& b) {
      if (limbs::sub_in_place(a, b)) limbs::add_in_place(a, kModulus);
    };
    Repr one_l{};
    one_l[0] = 1;
    while (u != one_l && v != one_l) {
      while (!(u[0] & 1)) {
        halve(u);
        halve_mod(x1);
      }
      while (!(v[0] & 1)) {
        halve(v);
        halve_mod(x2);
      }
      if (!limbs::less(u, v)) {
        limbs::sub_in_place(u, v);
        sub_mod(x1, x2);
      } else {
        limbs::sub_in_place(v, u);
        sub_mod(x2, x1);
      }
    }
    return from_canonical(u == one_l ? x1 : x2);
  }

  // Euler's criterion; zero counts as a square.
  bool is_square() const {
    if (is_zero()) return true;
    return pow(kHalfModulus).is_one();
  }

  // Least significant bit of the canonical value.
  bool sgn0() const { return to_canonical()[0] & 1; }

  // True when the canonical value exceeds (m-1)/2.
  bool is_lexicographically_largest() const {
    return limbs::less(kHalfModulus, to_canonical());
  }

  static constexpr MontField select(bool take_b, const MontField& a, const MontField& b) {
    const std::uint64_t mask = 0 - static_cast<std::uint64_t>(take_b);
    MontField out;
    for (std::size_t i = 0; i < kLimbs; ++i) out.v_[i] = (a.v_[i] & ~mask) | (b.v_[i] & mask);
    return out;
  }

  constexpr const Repr& raw() const { return v_; }

  static constexpr Repr kModulusMinus2 = limbs::sub_small(kModulus, 2);
  static constexpr Repr kHalfModulus = limbs::shr(kModulus, 1);

 private:
  static constexpr MontField from_raw(const Repr& r) {
    MontField out;
    out.v_ = r;
    return out;
  }

  static constexpr Repr reduce_once(Repr a) {
    while (!limbs::less(a, kModulus)) limbs::sub_in_place(a, kModulus);
    return a;
  }

  // CIOS with the "no-carry" shortcut, valid because the top modulus limb
  // leaves at least one spare bit.
  static constexpr Repr mont_mul(const Repr& a, const Repr& b) {
    using limbs::u128;
    static_assert(Params::kModulus[kLimbs - 1] < (~std::uint64_t{0} >> 1) - 1);
    Repr t{};
#pragma GCC unroll 8
    for (std::size_t i = 0; i < kLimbs; ++i) {
      u128 s = static_cast<u128>(a[0]) * b[i] + t[0];
      std::uint64_t ca = static_cast<std::uint64_t>(s >> 64);
      const std::uint64_t t0 = static_cast<std::uint64_t>(s);
      const std::uint64_t m = t0 * kInv;
      s = static_cast<u128>(m) * kModulus[0] + t0;
      std::uint64_t cm = static_cast<std::uint64_t>(s >> 64);
#pragma GCC unroll 8
      for (std::size_t j = 1; j < kLimbs; ++j) {
        s = static_cast<u128>(a[j]) * b[i] + t[j] + ca;
        ca = static_cast<std::uint64_t>(s >> 64);
        s = static_cast<u128>(m) * kModulus[j] + static_cast<std::uint64_t>(s) + cm;
        cm = static_cast<std::uint64_t>(s >> 64);
        t[j - 1] = static_cast<std::uint64_t>(s);
      }
      t[kLimbs - 1] = ca + cm;
    }
    return reduce_masked(t, 0);
  }

  // Returns v - modulus when (high:v) >= modulus, else v, without branching.
  static constexpr Repr reduce_masked(const Repr& v, std::uint64_t high) {
    Repr d = v;
    const std::uint64_t borrow = limbs::sub_in_place(d, kModulus);
    // Keep v only when the subtraction borrowed and there was no high word.
    const std::uint64_t keep = 0 - (borrow & static_cast<std::uint64_t>(high == 0));
    Repr out{};
    for (std::size_t i = 0; i < kLimbs; ++i) out[i] = (v[i] & keep) | (d[i] & ~keep);
    return out;
  }

  static constexpr std::uint64_t kInv = limbs::mont_neg_inv(Params::kModulus[0]);
  static constexpr Repr kR1 = limbs::pow2_mod(Params::kModulus, 64 * kLimbs);
  static constexpr Repr kR2 = limbs::pow2_mod(Params::kModulus, 128 * kLimbs);
  static constexpr Repr kR3 = limbs::pow2_mod(Params::kModulus, 192 * kLimbs);

  Repr v_{};
};

struct FpParams {
  static constexpr std::size_t kLimbs = 6;
  static constexpr Limbs<6> kModulus = bls12_381::kModulusP;
};

struct FrParams {
  static constexpr std::size_t kLimbs = 4;
  static constexpr Limbs<4> kModulus = bls12_381::kOrderR;
};

/// Base field of BLS12-381 (381-bit prime p).
using Fp = MontField<FpParams>;
/// Scalar field: integers modulo the prime group order r.
using Fr = MontField<FrParams>;

}  // namespace nimsa::crypto
