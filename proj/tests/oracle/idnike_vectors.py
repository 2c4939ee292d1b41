#!/usr/bin/env python3
"""Reference values for tests/idnike_test.cpp: label encoding, label hashes
under the standard-profile domain tags, K for s = 1 and its session key."""
import hashlib
import hmac

from py_ecc.bls.hash_to_curve import hash_to_G1, hash_to_G2
from py_ecc.bls.point_compression import compress_G1, compress_G2
from py_ecc.bls12_381 import pairing, field_modulus as p
from py_ecc.optimized_bls12_381 import normalize
from py_ecc.fields import bls12_381_FQ, bls12_381_FQ2

DST_G1 = b"NIMSA-v1-BLS12381G1_XMD:SHA-256_SSWU_RO_"
DST_G2 = b"NIMSA-v1-BLS12381G2_XMD:SHA-256_SSWU_RO_"


def label(dev, ip, ifn=None):
    out = len(dev).to_bytes(2, "big") + dev + len(ip).to_bytes(2, "big") + ip
    if ifn is not None:
        out += b"\x01" + bytes([ifn])
    return out


def gt_bytes(f):
    c = [int(x) for x in f.coeffs]
    words = {}
    for k in range(6):
        y = c[k + 6] % p
        words[(k % 2, k // 2)] = ((c[k] + y) % p, y)
    out = b""
    for i in (1, 0):
        for j in (2, 1, 0):
            x, y = words[(i, j)]
            out += y.to_bytes(48, "big") + x.to_bytes(48, "big")
    return out


def session_key(k_bytes, seed):
    prk = hmac.new(b"NIMSA-v1", k_bytes, hashlib.sha256).digest()
    info = b"NIMSA-v1" + seed.to_bytes(4, "big")
    return hmac.new(prk, info + b"\x01", hashlib.sha256).digest()


mr = label(b"MR1", bytes([10, 0, 0, 2]), 0)
ha = label(b"HA", bytes([192, 0, 2, 1]))
print("mr_label", mr.hex())
print("ha_label", ha.hex())
h1 = hash_to_G1(mr, DST_G1, hashlib.sha256)
h2 = hash_to_G2(ha, DST_G2, hashlib.sha256)
print("H1(mr)", "%096x" % compress_G1(h1))
a, b = compress_G2(h2)
print("H2(ha)", "%096x%096x" % (a, b))

# Affine conversion for the pure-python pairing.
x1, y1 = normalize(h1)
x2, y2 = normalize(h2)
from py_ecc.bls12_381 import FQ, FQ2
P = (FQ(int(x1)), FQ(int(y1)))
Q = (FQ2([int(c) for c in x2.coeffs]), FQ2([int(c) for c in y2.coeffs]))
k = (pairing(Q, P) ** 3).inv()
kb = gt_bytes(k)
print("K(s=1) sha256", hashlib.sha256(kb).hexdigest())
print("sk(K(s=1),seed=1)", session_key(kb, 1).hex())
