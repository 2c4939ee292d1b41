#!/usr/bin/env python3
"""Emit include/nimsa/crypto/bls12_381_constants.hpp from py_ecc's tables.

Run once; the generated header is committed. Values are canonical
(non-Montgomery) little-endian 64-bit limbs.
"""
import sys

from py_ecc.optimized_bls12_381 import G1, G2, normalize
from py_ecc.optimized_bls12_381 import optimized_swu as swu

P = 0x1A0111EA397FE69A4B1BA7B6434BACD764774B84F38512BF6730D2A0F6B0F6241EABFFFEB153FFFFB9FEFFFFFFFFAAAB
R = 0x73EDA753299D7D483339D80809A1D80553BDA402FFFE5BFEFFFFFFFF00000001
H_EFF_G2 = 0xBC69F08F2EE75B3584C6A0EA91B352888E2A8E9145AD7689986FF031508FFE1329C2F178731DB956D82BF015D1212B02EC0EC69D7477C1AE954CBC06689F6A359894C0ADEBBF6B4E8020005AAA95551


def limbs(v, n):
    out = []
    for _ in range(n):
        out.append("0x%016xULL" % (v & (2**64 - 1)))
        v >>= 64
    assert v == 0
    return "{" + ", ".join(out) + "}"


def fp(v):
    return limbs(int(v) % P, 6)


def fp2(v):
    c0, c1 = (int(v[0]), int(v[1])) if isinstance(v, tuple) else (int(v.coeffs[0]), int(v.coeffs[1]))
    return "{{%s, %s}}" % (fp(c0), fp(c1))


def poly(name, coeffs, conv, ty):
    body = ",\n    ".join(conv(c) for c in coeffs)
    return "inline constexpr std::array<%s, %d> %s = {{\n    %s}};\n" % (ty, len(coeffs), name, body)


g1 = normalize(G1)
g2 = normalize(G2)
lines = []
lines.append("// Generated by tests/oracle/gen_bls_constants.py. Do not edit.\n")
lines.append("#pragma once\n\n#include <array>\n#include <cstdint>\n\nnamespace nimsa::crypto::bls12_381 {\n")
lines.append("using Limbs6 = std::array<std::uint64_t, 6>;\nusing Limbs4 = std::array<std::uint64_t, 4>;\nusing Limbs2x6 = std::array<Limbs6, 2>;\n\n")
lines.append("inline constexpr Limbs6 kModulusP = %s;\n" % limbs(P, 6))
lines.append("inline constexpr Limbs4 kOrderR = %s;\n" % limbs(R, 4))
lines.append("inline constexpr std::array<std::uint64_t, 10> kG2CofactorEff = %s;\n\n" % limbs(H_EFF_G2, 10))
lines.append("inline constexpr Limbs6 kG1GenX = %s;\n" % fp(g1[0]))
lines.append("inline constexpr Limbs6 kG1GenY = %s;\n" % fp(g1[1]))
lines.append("inline constexpr Limbs2x6 kG2GenX = %s;\n" % fp2(g2[0]))
lines.append("inline constexpr Limbs2x6 kG2GenY = %s;\n\n" % fp2(g2[1]))
lines.append("// Simplified SWU on the 11-isogenous curve E1': y^2 = x^3 + A'x + B'\n")
lines.append("inline constexpr Limbs6 kIso11A = %s;\n" % fp(swu.ISO_11_A))
lines.append("inline constexpr Limbs6 kIso11B = %s;\n" % fp(swu.ISO_11_B))
lines.append("inline constexpr Limbs6 kIso11Z = %s;\n" % fp(swu.ISO_11_Z))
names = ["kIso11XNum", "kIso11XDen", "kIso11YNum", "kIso11YDen"]
for nm, cs in zip(names, swu.ISO_11_MAP_COEFFICIENTS):
    lines.append(poly(nm, cs, fp, "Limbs6"))
lines.append("\n// Simplified SWU on the 3-isogenous twist E2': y^2 = x^3 + A'x + B'\n")
lines.append("inline constexpr Limbs2x6 kIso3A = %s;\n" % fp2(swu.ISO_3_A))
lines.append("inline constexpr Limbs2x6 kIso3B = %s;\n" % fp2(swu.ISO_3_B))
lines.append("inline constexpr Limbs2x6 kIso3Z = %s;\n" % fp2(swu.ISO_3_Z))
names = ["kIso3XNum", "kIso3XDen", "kIso3YNum", "kIso3YDen"]
for nm, cs in zip(names, swu.ISO_3_MAP_COEFFICIENTS):
    lines.append(poly(nm, cs, fp2, "Limbs2x6"))
lines.append("\n}  // namespace nimsa::crypto::bls12_381\n")
sys.stdout.write("".join(lines))
