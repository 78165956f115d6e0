#!/usr/bin/env python3
"""A small gallery of coherent states and their reproducing kernel.

Walks through the basic objects: expansion coefficients on the product
basis, norms from the kernel closed form, and the normalization
prefactor that turns a kernel label into a physical state.
"""

import numpy as np

from jacobigroup import CsPoint, cs_coefficients, kernel, psi_relation

np.set_printoptions(precision=4, suppress=True, linewidth=100)

points = [
    ("vacuum", CsPoint(0.0, 0.0)),
    ("displaced", CsPoint(1.2 - 0.4j, 0.0)),
    ("squeezed", CsPoint(0.0, 0.55)),
    ("both", CsPoint(0.9j, 0.35 * np.exp(0.8j))),
]

for k in (0.25, 1.0):
    print(f"\n=== weight k = {k} ===")
    for name, p in points:
        c = cs_coefficients(p, k, n_max=40, m_max=40)
        norm_kernel = kernel(p, p, k).real
        # the coefficient box reproduces the kernel norm once the edge
        # mass is negligible
        print(f"{name:>10s}: z={p.z:.3g} w={p.w:.3g}  "
              f"K(p,p)={norm_kernel:10.4e}  sum|c|^2={c.norm_sq():10.4e}")
        mags = np.abs(c.coeffs[:6, :4])
        print("  leading |c[n,m]|:")
        for row in mags:
            print("   ", "  ".join(f"{v:8.2e}" for v in row))

print("\n=== normalization prefactor ===")
# the physical squeezed-displaced state sits at z = alpha - w conj(alpha);
# its prefactor squares against the kernel diagonal to exactly one
for alpha, w in [(1.5, 0.3), (2.0 - 1.0j, 0.6j), (3.0, 0.85)]:
    for k in (0.25, 1.0, 2.5):
        pre, pt = psi_relation(alpha, w, k)
        check = abs(pre) ** 2 * kernel(pt, pt, k).real
        print(f"alpha={alpha:>8} w={w:>5} k={k:4}: "
              f"|pre|^2 K(p,p) = {check:.15f}")
