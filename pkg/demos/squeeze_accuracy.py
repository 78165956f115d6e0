#!/usr/bin/env python3
"""Why squeeze matrix elements need careful evaluation.

The closed form for S_k[m', m](w) contains a terminating hypergeometric
sum whose terms can exceed the result by dozens of orders of magnitude.
This script shows the naive double-precision sum collapsing, the package
value staying put, and both checked against a truncated matrix
exponential that knows nothing about the closed form.
"""

import math

import numpy as np

from jacobigroup import light_cone_cut, oracle_squeeze, squeeze_me


def naive_direct(m_prime, m, k, w):
    # textbook transcription: prefactor times term-by-term float sum
    d = m_prime - m
    t = abs(w) ** 2
    pref = math.exp(
        0.5 * (math.lgamma(m_prime + 1) - math.lgamma(m + 1)
               + math.fsum(math.log(2 * k + m + i) for i in range(d)))
        - math.lgamma(d + 1) + k * math.log1p(-t) + d * math.log(abs(w))
    )
    total, term = 1.0, 1.0
    for j in range(m):
        term *= (j - m) * (2 * k + m_prime + j) / ((d + 1 + j) * (j + 1)) * t
        total += term
    return pref * (w / abs(w)) ** d * total


print("=== the hard corner: m = m' = 40, k = 1/4, w = 0.9 ===")
ref = squeeze_me(40, 40, 0.25, 0.9)
bad = naive_direct(40, 40, 0.25, 0.9)
print(f"package value : {ref.real:.18e}")
print(f"naive sum     : {bad.real:.18e}")
print(f"relative error of the naive sum: {abs(bad - ref) / abs(ref):.2e}")
print("(the alternating sum peaks around 1e26 on the way to a result of 1e-2)")

print("\n=== closed form vs truncated exponential ===")
dim = 96
for k in (0.25, 1.0, 2.5):
    for r in (0.2, 0.5):
        w = r * np.exp(0.7j)
        oracle = oracle_squeeze(dim, k, w)
        cut = min(20, light_cone_cut(dim, w))
        err = max(
            abs(squeeze_me(mp, m, k, w) - oracle[mp, m])
            for mp in range(cut) for m in range(cut)
        )
        print(f"k={k:4} |w|={r}: max deviation over {cut}x{cut} block = {err:.2e}")

print("\n=== the two algebraic forms agree everywhere ===")
rng = np.random.default_rng(1)
worst = 0.0
for _ in range(2000):
    m, mp = rng.integers(0, 41, 2)
    k = rng.uniform(0.05, 5.0)
    w = rng.uniform(0, 0.9) * np.exp(1j * rng.uniform(-np.pi, np.pi))
    a = squeeze_me(int(mp), int(m), k, w, form="direct")
    b = squeeze_me(int(mp), int(m), k, w, form="pfaff")
    worst = max(worst, abs(a - b) / max(abs(a), abs(b), 1e-280))
print(f"worst relative disagreement over 2000 random entries: {worst:.2e}")
