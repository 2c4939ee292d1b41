#include <bit>
#include <random>
#include <set>
#include <tuple>

#include "doctest.h"
#include "nimsa/idnike.hpp"
#include "test_util.hpp"

using namespace nimsa;
using namespace nimsa::crypto;
using nimsa::test::hex;

namespace {

// From tests/oracle/idnike_vectors.py.
constexpr const char* kMrLabel = "00034d523100040a0000020100";
constexpr const char* kHaLabel = "000248410004c0000201";
constexpr const char* kH1Mr =
    "8904e54aa90a0b0ac542d16817d474086ee45af73cf04eb81cc97da6a52c6a3d6eb2ff65e164407e6c6c7f2358cc74e9";
constexpr const char* kH2Ha =
    "920cc5b4de7637f76645d9f428fc8adaf6057b3768edc1520cd28e49642259c7ad063cbd75517c8a78106d12eed133e0"
    "10e215e056f1033e7a1c79ebab9790e1df81cf6b82d98f883d28ef1e6797f211949c3c2dbf7c11ccfeed4f761d723be0";
constexpr const char* kKDigest = "fb56c640b671d970e5396fdfbcafb0fab87408ba70dcd64c2b35de3ad31bb535";
constexpr const char* kKSessionKey = "b8eaa206c12561b50ddd55be32865453a28abaabc5d043fb2b579309f44ee51c";

// From tests/oracle/crypto_vectors.py: K encoded as 0x00..01.
constexpr const char* kSkOneSeed1 = "be31a4d7b0953e848114ab759d7d6096825a2537a4041213d1090107e05c7ee7";
constexpr const char* kSkOneSeed2 = "40c72a6c6df99bf21662c3288120b353cede3f5059c2dfa49f8417487e03750d";

Bytes b(std::string_view s) { return Bytes(s.begin(), s.end()); }

IdentityLabel mr_label(std::string_view id, Bytes ip, unsigned ifn) { return {b(id), std::move(ip), ifn}; }
IdentityLabel ha_label() { return {b("HA"), {192, 0, 2, 1}, std::nullopt}; }

// Replays a fixed list of scalars, four words each, least significant first.
struct ScriptedRng {
  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  std::vector<std::uint64_t> words;
  std::size_t pos = 0;
  result_type operator()() { return words.at(pos++); }
};

Bytes random_bytes(std::mt19937_64& rng, std::size_t n) {
  Bytes out(n);
  for (auto& x : out) x = static_cast<std::uint8_t>(rng());
  return out;
}

}  // namespace

TEST_CASE("setup") {
  CHECK(setup(SecurityLevel::test, 42) == setup(SecurityLevel::test, 42));
  CHECK_FALSE(setup(SecurityLevel::test, 42) == setup(SecurityLevel::test, 43));
  CHECK(setup("standard").level() == SecurityLevel::standard);
  CHECK_THROWS_AS(setup("toy"), ConfigError);

  auto suite = setup(SecurityLevel::standard);
  const G1 p = g1_generator();
  const G2 q = g2_generator();
  Gt base = suite.pair(p, q);
  CHECK_FALSE(base.is_one());
  CHECK(suite.pair(p.mul(Limbs<1>{2}), q.mul(Limbs<1>{3})) == base.pow(Limbs<1>{6}));

  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto m = gen_master(suite, rng);
    G1 x = p.mul(m.s);
    auto back = deserialize_g1(serialize(x));
    REQUIRE(back.has_value());
    CHECK(*back == x);
  }
}

TEST_CASE("gen_master") {
  auto suite = setup(SecurityLevel::test);
  ScriptedRng scripted{{0, 0, 0, 0, 7, 0, 0, 0}};
  CHECK(gen_master(suite, scripted).s == Fr::from_u64(7));

  // A value >= r is rejected as well.
  auto r = bls12_381::kOrderR;
  ScriptedRng over{{r[0], r[1], r[2], r[3], 9, 0, 0, 0}};
  CHECK(gen_master(suite, over).s == Fr::from_u64(9));

  std::set<Limbs<4>> seen;
  for (std::uint64_t i = 0; i < 100; ++i) {
    std::mt19937_64 a(2 * i), c(2 * i + 1);
    seen.insert(gen_master(suite, a).s.to_canonical());
    seen.insert(gen_master(suite, c).s.to_canonical());
  }
  CHECK(seen.size() == 200);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    auto s = gen_master(suite, rng).s;
    REQUIRE_FALSE(s.is_zero());
    REQUIRE(limbs::less(s.to_canonical(), r));
  }
}

TEST_CASE("encode_label") {
  Bytes a = encode_label(b("MR1"), Bytes{10, 0, 0, 2}, 0u);
  Bytes c = encode_label(b("MR1"), Bytes{10, 0, 0, 20}, std::nullopt);
  CHECK(hex(a) == kMrLabel);
  CHECK(a != c);
  CHECK(hex(encode_label(ha_label())) == kHaLabel);
  CHECK(encode_label(ha_label()) == encode_label(ha_label()));

  CHECK_THROWS_AS(encode_label(Bytes{}, Bytes{1}, std::nullopt), EncodingError);
  CHECK_THROWS_AS(encode_label(Bytes(70000, 1), Bytes{1}, std::nullopt), EncodingError);
  CHECK_THROWS_AS(encode_label(b("x"), Bytes(65536, 1), std::nullopt), EncodingError);
  CHECK_THROWS_AS(encode_label(b("x"), Bytes{1}, 256u), EncodingError);
  CHECK_NOTHROW(encode_label(Bytes(65535, 1), Bytes{}, 255u));
}

TEST_CASE("label encoding is injective on random triples") {
  std::mt19937_64 rng(2024);
  std::set<Bytes> encodings;
  std::set<std::tuple<Bytes, Bytes, std::optional<unsigned>>> triples;
  for (int i = 0; i < 10000; ++i) {
    // Short fields over a tiny alphabet make boundary-shifted triples likely.
    Bytes id = random_bytes(rng, 1 + rng() % 4);
    Bytes ip = random_bytes(rng, rng() % 5);
    for (auto& x : id) x &= 1;
    for (auto& x : ip) x &= 1;
    std::optional<unsigned> ifn;
    if (rng() % 2) ifn = static_cast<unsigned>(rng() % 3);
    if (!triples.insert(std::make_tuple(id, ip, ifn)).second) continue;
    CHECK(encodings.insert(encode_label(id, ip, ifn)).second);
  }
  CHECK(triples.size() == encodings.size());
}

TEST_CASE("derive_private_point") {
  auto suite = setup(SecurityLevel::standard);
  auto mr = mr_label("MR1", {10, 0, 0, 2}, 0);
  auto one = master_from_u64(1);

  auto p1 = derive_private_point(suite, one, mr);
  CHECK(hex(serialize(std::get<G1>(p1.point))) == kH1Mr);
  auto h2 = derive_private_point(suite, one, ha_label());
  CHECK(hex(serialize(std::get<G2>(h2.point))) == kH2Ha);

  auto s = master_from_u64(0x1234567);
  auto two_s = MasterSecret{s.s + s.s};
  auto a = derive_private_point(suite, s, mr);
  CHECK(serialize(std::get<G1>(a.point)) == serialize(std::get<G1>(derive_private_point(suite, s, mr).point)));
  CHECK(std::get<G1>(derive_private_point(suite, two_s, mr).point) == std::get<G1>(a.point).dbl());
  auto h = derive_private_point(suite, s, ha_label());
  CHECK(std::get<G2>(derive_private_point(suite, two_s, ha_label()).point) == std::get<G2>(h.point).dbl());
}

TEST_CASE("shared material with the identity scalar matches the reference") {
  auto suite = setup(SecurityLevel::standard);
  auto mr = mr_label("MR1", {10, 0, 0, 2}, 0);
  auto one = master_from_u64(1);
  auto k_mr = shared_from_private(suite, derive_private_point(suite, one, mr), ha_label());
  auto k_ha = shared_from_private(suite, derive_private_point(suite, one, ha_label()), mr);
  auto direct = suite.pair(std::get<G1>(hash_label(suite, mr).point), std::get<G2>(hash_label(suite, ha_label()).point));
  CHECK(k_mr.k == direct);
  CHECK(k_ha.k == direct);
  CHECK(hex(sha256(k_mr.bytes())) == kKDigest);
  CHECK(hex(derive_session_key(k_mr, 1).key_bytes) == kKSessionKey);

  CHECK_THROWS_AS(shared_from_private(suite, derive_private_point(suite, one, mr), mr), ContractError);
}

TEST_CASE("MR and HA agree on K for random domains") {
  auto suite = setup(SecurityLevel::standard);
  std::mt19937_64 rng(77);
  for (int i = 0; i < 100; ++i) {
    auto master = gen_master(suite, rng);
    IdentityLabel mr{random_bytes(rng, 1 + rng() % 16), random_bytes(rng, 4), static_cast<unsigned>(rng() % 256)};
    IdentityLabel ha{random_bytes(rng, 1 + rng() % 16), random_bytes(rng, 4), std::nullopt};
    auto k_mr = shared_from_private(suite, derive_private_point(suite, master, mr), ha);
    auto k_ha = shared_from_private(suite, derive_private_point(suite, master, ha), mr);
    REQUIRE(k_mr.bytes() == k_ha.bytes());
  }
}

TEST_CASE("adapter number changes K") {
  auto suite = setup(SecurityLevel::test, 3);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    auto master = gen_master(suite, rng);
    Bytes id = random_bytes(rng, 8), ip = random_bytes(rng, 4);
    auto ha_point = hash_label(suite, ha_label());
    auto k0 = shared_from_private(suite, derive_private_point(suite, master, {id, ip, 0u}), ha_point);
    auto k1 = shared_from_private(suite, derive_private_point(suite, master, {id, ip, 1u}), ha_point);
    CHECK(k0.bytes() != k1.bytes());
  }
}

TEST_CASE("derive_session_key") {
  SharedMaterial one{Fp12::one()};
  CHECK(hex(derive_session_key(one, 1).key_bytes) == kSkOneSeed1);
  CHECK(hex(derive_session_key(one, 2).key_bytes) == kSkOneSeed2);
  CHECK(derive_session_key(one, 1) == derive_session_key(one, 1));
  CHECK(derive_session_key(one, 5).seed_used == 5);
  CHECK_THROWS_AS(derive_session_key(one, 0), ContractError);
}

TEST_CASE("session key avalanche on a one-bit seed flip") {
  auto suite = setup(SecurityLevel::test);
  SharedMaterial k{suite.pair(g1_generator(), g2_generator())};
  std::mt19937_64 rng(4);
  double total = 0;
  for (int i = 0; i < 100; ++i) {
    std::uint32_t seed = 1 + static_cast<std::uint32_t>(rng() % 0x7ffffffe);
    std::uint32_t flipped = seed ^ (1u << (rng() % 31));
    if (flipped == 0) flipped = seed ^ 2u;
    auto a = derive_session_key(k, seed).key_bytes;
    auto c = derive_session_key(k, flipped).key_bytes;
    int diff = 0;
    for (std::size_t j = 0; j < a.size(); ++j) diff += std::popcount(static_cast<unsigned>(a[j] ^ c[j]));
    total += diff;
  }
  CHECK(total / 100 >= 0.25 * 256);
}
