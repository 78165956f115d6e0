#!/usr/bin/env python3
"""Convergence of the two scalar-product quadratures.

The disk rule is Gauss-Jacobi in the radial variable, so polynomials are
integrated exactly once the node count clears half the degree: the error
drops to machine precision in one step, not gradually.  The rule on the
full phase space (plane times disk) inherits the same behavior through
its Hermite and Jacobi factors.
"""

import numpy as np

from jacobigroup import (
    basis_function,
    scalar_product_cjk_quadrature,
    scalar_product_disk_quadrature,
    scalar_product_series,
)

k = 0.8
n = 20  # monomial degree: exactness needs 11 radial nodes
e_n = np.zeros(n + 1)
e_n[n] = 1.0
ref = scalar_product_series(e_n, e_n, k)

print(f"=== disk rule on (w^{n}, w^{n}) at k = {k} ===")
print(f"{'radial':>7s} {'relative error':>15s}")
for n_r in (4, 8, 10, 11, 16, 32):
    got = scalar_product_disk_quadrature(
        lambda w: w**n, lambda w: w**n, k, n_r, 48
    )
    print(f"{n_r:7d} {abs(got - ref) / abs(ref):15.2e}")

print(f"\n=== full-space rule: basis orthonormality at k = {k} ===")
modes = [(0, 0), (1, 0), (2, 1), (3, 2)]
print(f"{'nodes':>7s}", "  ".join(f"(n={n},s={s})" for n, s in modes))
for nodes in (8, 12, 16, 24):
    errs = []
    for n_m, s in modes:
        f = lambda a, w, n_m=n_m, s=s: basis_function(n_m, s, k, a, w)
        got = scalar_product_cjk_quadrature(
            f, f, k, n_hermite=nodes, n_radial=nodes, n_angular=2 * nodes
        )
        errs.append(abs(got - 1.0))
    print(f"{nodes:7d}", "  ".join(f"{e:9.2e}" for e in errs))

print("\n=== cross terms vanish by angular symmetry ===")
f1 = lambda a, w: basis_function(2, 1, k, a, w)
f2 = lambda a, w: basis_function(0, 0, k, a, w)
off = scalar_product_cjk_quadrature(f1, f2, k)
print(f"(f_21, f_00) = {abs(off):.2e}")
