"""Reference GT value for e(g1, g2) in the repo's canonical encoding.

py_ecc evaluates the Miller loop over |x| without the final conjugation, so
its reduced pairing is the inverse of the usual one; our final exponentiation
also cubes. Expected value = pairing_py_ecc(g2, g1)^-3.
"""
from py_ecc.bls12_381 import G1, G2, pairing, field_modulus as p

f = (pairing(G2, G1) ** 3).inv()
c = [int(x) for x in f.coeffs]  # basis w^k, w^12 = 2w^6 - 2
words = {}
for k in range(6):
    y = c[k + 6] % p          # u = w^6 - 1
    x = (c[k] + y) % p
    words[(k % 2, k // 2)] = (x, y)
out = b""
for i in (1, 0):
    for j in (2, 1, 0):
        x, y = words[(i, j)]
        out += y.to_bytes(48, "big") + x.to_bytes(48, "big")
print(out.hex())
