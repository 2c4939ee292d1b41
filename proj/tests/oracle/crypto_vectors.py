#!/usr/bin/env python3
"""Reference values for the crypto unit tests, computed with py_ecc and the
standard library (hashlib/hmac). Output is pasted into tests/crypto_test.cpp.
"""
import hashlib
import hmac

from py_ecc.bls.hash import expand_message_xmd
from py_ecc.bls.hash_to_curve import hash_to_G1, hash_to_G2
from py_ecc.bls.point_compression import compress_G1, compress_G2
from py_ecc.optimized_bls12_381 import G1, G2, multiply, add

DST_G1 = b"QUUX-V01-CS02-with-BLS12381G1_XMD:SHA-256_SSWU_RO_"
DST_G2 = b"QUUX-V01-CS02-with-BLS12381G2_XMD:SHA-256_SSWU_RO_"


def g1hex(p):
    return "%096x" % compress_G1(p)


def g2hex(p):
    a, b = compress_G2(p)
    return "%096x%096x" % (a, b)


print("G1 gen", g1hex(G1))
print("G2 gen", g2hex(G2))
for k in [2, 3, 12345678901234567890, 2**200 + 17]:
    print("G1*%d" % k, g1hex(multiply(G1, k)))
    print("G2*%d" % k, g2hex(multiply(G2, k)))
for msg in [b"", b"abc"]:
    print("h2g1", msg, g1hex(hash_to_G1(msg, DST_G1, hashlib.sha256)))
    print("h2g2", msg, g2hex(hash_to_G2(msg, DST_G2, hashlib.sha256)))
print("xmd", expand_message_xmd(b"abc", b"QUUX-V01-CS02-with-expander-SHA256-128", 0x20, hashlib.sha256).hex())

# Session-key PRF oracle: HKDF-SHA256, salt "NIMSA-v1", info "NIMSA-v1" || seed_be32.
def session_key(k_bytes, seed):
    prk = hmac.new(b"NIMSA-v1", k_bytes, hashlib.sha256).digest()
    info = b"NIMSA-v1" + seed.to_bytes(4, "big")
    return hmac.new(prk, info + b"\x01", hashlib.sha256).digest()

k_one = b"\x00" * 575 + b"\x01"
print("sk(K=1,seed=1)", session_key(k_one, 1).hex())
print("sk(K=1,seed=2)", session_key(k_one, 2).hex())

# Auth tag oracle: HMAC-SHA-256(key, src || dst || len16 || header15 || payload).
key = b"\x0b" * 32
src = bytes([10, 0, 0, 2])
dst = bytes([192, 0, 2, 1])
header = bytes([1]) + (1).to_bytes(8, "big") + bytes([0]) + (1).to_bytes(4, "big") + bytes([0])
payload = b""
msg = src + dst + len(payload).to_bytes(2, "big") + header + payload
print("tag(minimal)", hmac.new(key, msg, hashlib.sha256).hexdigest())
