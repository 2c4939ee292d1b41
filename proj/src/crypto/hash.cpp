#include "nimsa/crypto/hash.hpp"

#include <openssl/crypto.h>
#include <openssl/evp.h>
#include <openssl/hmac.h>

#include <stdexcept>

namespace nimsa::crypto {

Digest sha256(std::span<const std::uint8_t> data) {
  Digest out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("EVP_Digest(sha256) failed");
  }
  return out;
}

Digest hmac_sha256(std::span<const std::uint8_t> key, std::span<const std::uint8_t> data) {
  Digest out{};
  unsigned int len = 0;
  // OpenSSL rejects a null key pointer even when the length is zero.
  static const std::uint8_t kEmpty = 0;
  const std::uint8_t* k = key.empty() ? &kEmpty : key.data();
  if (HMAC(EVP_sha256(), k, static_cast<int>(key.size()), data.data(), data.size(), out.data(), &len) ==
      nullptr) {
    throw std::runtime_error("HMAC(sha256) failed");
  }
  return out;
}

Digest hkdf_extract(std::span<const std::uint8_t> salt, std::span<const std::uint8_t> ikm) {
  return hmac_sha256(salt, ikm);
}

Bytes hkdf_expand(std::span<const std::uint8_t> prk, std::span<const std::uint8_t> info, std::size_t length) {
  if (length > 255 * 32) throw std::invalid_argument("hkdf_expand: length too large");
  Bytes out;
  out.reserve(length);
  Bytes block;
  Digest t{};
  std::size_t t_len = 0;
  for (std::uint8_t counter = 1; out.size() < length; ++counter) {
    block.assign(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(t_len));
    block.insert(block.end(), info.begin(), info.end());
    block.push_back(counter);
    t = hmac_sha256(prk, block);
    t_len = t.size();
    std::size_t take = std::min(t.size(), length - out.size());
    out.insert(out.end(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(take));
  }
  return out;
}

Bytes expand_message_xmd(std::span<const std::uint8_t> msg, std::span<const std::uint8_t> dst,
                         std::size_t length) {
  constexpr std::size_t kBlock = 64;
  constexpr std::size_t kOut = 32;
  const std::size_t ell = (length + kOut - 1) / kOut;
  if (ell > 255 || length > 65535 || dst.size() > 255) {
    throw std::invalid_argument("expand_message_xmd: parameters out of range");
  }
  Bytes dst_prime(dst.begin(), dst.end());
  dst_prime.push_back(static_cast<std::uint8_t>(dst.size()));

  Bytes b0_in(kBlock, 0);
  b0_in.insert(b0_in.end(), msg.begin(), msg.end());
  b0_in.push_back(static_cast<std::uint8_t>(length >> 8));
  b0_in.push_back(static_cast<std::uint8_t>(length));
  b0_in.push_back(0);
  b0_in.insert(b0_in.end(), dst_prime.begin(), dst_prime.end());
  const Digest b0 = sha256(b0_in);

  Bytes out;
  out.reserve(ell * kOut);
  Digest prev{};
  for (std::size_t i = 1; i <= ell; ++i) {
    Bytes in(kOut);
    for (std::size_t k = 0; k < kOut; ++k) in[k] = i == 1 ? b0[k] : static_cast<std::uint8_t>(b0[k] ^ prev[k]);
    in.push_back(static_cast<std::uint8_t>(i));
    in.insert(in.end(), dst_prime.begin(), dst_prime.end());
    prev = sha256(in);
    out.insert(out.end(), prev.begin(), prev.end());
  }
  out.resize(length);
  return out;
}

bool constant_time_equal(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  if (a.size() != b.size()) return false;
  return CRYPTO_memcmp(a.data(), b.data(), a.size()) == 0;
}

}  // namespace nimsa::crypto
