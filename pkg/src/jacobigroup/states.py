"""Coherent states for the semidirect product of Heisenberg-Weyl with SU(1,1).

A state is labelled by a point (z, w) in C x D1 (plane times unit disk).
The unnormalized vectors e_{z,w} expand over the double ladder basis with
coefficients P_n(z, w) / sqrt(n!) in the plane index times a squeezed
geometric profile in the disk index.  This module provides those
coefficients, the reproducing kernel, three equivalent scalar products
(diagonal series, disk quadrature, plane-times-disk quadrature), and the
closed-form transformation of a state under a group element: the image
stays in the family up to a scalar multiplier.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.special import roots_hermite, roots_jacobi

from .groups import CoveringElement, JacobiElement, Su11Element
from .numerics import BargmannIndex, as_index, pn_scaled_sequence

__all__ = [
    "CsPoint",
    "CoeffVector",
    "ActionResult",
    "TruncationWarning",
    "DivergenceWarning",
    "cs_coefficients",
    "kernel",
    "basis_function",
    "scalar_product_series",
    "scalar_product_disk_quadrature",
    "scalar_product_cjk_quadrature",
    "psi_relation",
    "act_on_cs",
    "act_on_cs_covering",
    "series_lower",
    "series_raise",
    "series_weight",
    "mobius_action_series",
]


class TruncationWarning(UserWarning):
    """Coefficient mass is still sitting on the truncation boundary."""


class DivergenceWarning(UserWarning):
    """A diagonal series shows no sign of converging at the given length."""


@dataclass(frozen=True)
class CsPoint:
    """Coherent state label (z, w) with z in C and w in the open unit disk."""

    z: complex
    w: complex

    def __post_init__(self) -> None:
        if not abs(self.w) < 1:
            raise ValueError(f"|w| must be < 1, got {abs(self.w)}")


@dataclass
class CoeffVector:
    """Basis coefficients c[n, m] of a state over the double ladder basis.

    The first axis is the plane (oscillator) index, the second the disk
    index of the companion series with lowest weight k' = k - 1/4.  For
    k = 1/4 the companion factor is trivial and the array has one column.
    """

    k: BargmannIndex
    coeffs: np.ndarray
    tail_bound: float = 0.0

    @property
    def n_max(self) -> int:
        return self.coeffs.shape[0] - 1

    @property
    def m_max(self) -> int:
        return self.coeffs.shape[1] - 1

    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.coeffs) ** 2))

    def inner(self, other: "CoeffVector") -> complex:
        n = min(self.coeffs.shape[0], other.coeffs.shape[0])
        m = min(self.coeffs.shape[1], other.coeffs.shape[1])
        return complex(
            np.sum(self.coeffs[:n, :m].conj() * other.coeffs[:n, :m])
        )


@dataclass(frozen=True)
class ActionResult:
    """Image data of a coherent state under a group element.

    multiplier * e_{image} equals the transformed state; lambda1 and z0 are
    the intermediate quantities of the closed form (exponent of the scalar
    part and the translated plane label) kept for diagnostics.
    """

    multiplier: complex
    image: CsPoint
    lambda1: complex
    z0: complex


def _disk_profile(w: complex, k_prime: float, m_max: int) -> np.ndarray:
    # f_m = w^m sqrt(G(m + 2k') / (m! G(2k'))) by stable ratio recursion
    out = np.empty(m_max + 1, dtype=complex)
    out[0] = 1.0
    for m in range(m_max):
        out[m + 1] = out[m] * w * math.sqrt((m + 2 * k_prime) / (m + 1))
    return out


def cs_coefficients(
    point: CsPoint,
    k: BargmannIndex | float,
    n_max: int = 64,
    m_max: int = 64,
) -> CoeffVector:
    """Expand the unnormalized state e_{z,w} over the double ladder basis.

    c[n, m] = P_n(z, w) / sqrt(n!) * w^m sqrt(G(m + 2k') / (m! G(2k'))),

    computed entirely by scaled recurrences, so the entries stay finite for
    any truncation size.  A TruncationWarning is issued when the relative
    coefficient mass on the last row or column exceeds 1e-10; the ratio is
    stored as ``tail_bound`` either way.
    """
    ki = as_index(k)
    q = pn_scaled_sequence(n_max, point.z, point.w)
    kp = ki.k_prime
    if kp <= 1e-12:
        coeffs = q[:, None].copy()
    else:
        coeffs = np.outer(q, _disk_profile(point.w, kp, m_max))
    total = float(np.sum(np.abs(coeffs) ** 2))
    edge = float(np.sum(np.abs(coeffs[-1, :]) ** 2))
    if coeffs.shape[1] > 1:
        edge += float(np.sum(np.abs(coeffs[:, -1]) ** 2))
    tail = edge / total if total > 0 else 0.0
    if tail > 1e-10:
        warnings.warn(
            f"boundary mass ratio {tail:.2e}, increase n_max/m_max",
            TruncationWarning,
            stacklevel=2,
        )
    return CoeffVector(ki, coeffs, tail)


def kernel(
    p1: CsPoint, p2: CsPoint, k: BargmannIndex | float, log: bool = False
) -> complex:
    """Reproducing kernel of the coherent state family, in closed form.

    K = (1 - w1 conj(w2))^(-2k)
        * exp[(2 z1 conj(z2) + z1^2 conj(w2) + conj(z2)^2 w1)
              / (2 (1 - w1 conj(w2)))],

    holomorphic in p1 and antiholomorphic in p2, so over the basis
    coefficients c of ``cs_coefficients``

        K(p1, p2) = sum_nm c_{p1}[n, m] conj(c_{p2}[n, m]) = <e_{p2}, e_{p1}>

    with the product antilinear in its first slot.  K(p1, p2) equals
    conj(K(p2, p1)).  With ``log=True`` the (principal) logarithm is
    returned instead, which is the usable form near the disk boundary
    where K itself overflows.
    """
    ki = as_index(k)
    t = p1.w * p2.w.conjugate()
    expo = (
        2 * p1.z * p2.z.conjugate()
        + p1.z**2 * p2.w.conjugate()
        + p2.z.conjugate() ** 2 * p1.w
    ) / (2 * (1 - t))
    total = -2 * ki.k * cmath.log(1 - t) + expo
    if log:
        return total
    if total.real > 700.0:
        raise OverflowError(
            "kernel exceeds double range; call with log=True for the exponent"
        )
    return cmath.exp(total)


def _pn_scaled_at(n: int, z, w):
    # P_n / sqrt(n!) with array-valued z (and scalar or array w)
    prev = np.ones_like(np.asarray(z, dtype=complex))
    if n == 0:
        return prev
    cur = np.asarray(z, dtype=complex)
    for j in range(1, n):
        prev, cur = cur, (z * cur + w * math.sqrt(j) * prev) / math.sqrt(j + 1)
    return cur


def basis_function(n: int, s: int, k: BargmannIndex | float, alpha, w):
    """Orthonormal basis functions of the plane-times-disk model.

    f_{n s}(alpha, w) = P_n(z, w)/sqrt(n!) * w^s sqrt(G(s+2k')/(s! G(2k')))
    with z = alpha - w conj(alpha).  Requires k > 1/4 (nontrivial companion
    index); broadcasts over numpy arrays in alpha and w.
    """
    ki = as_index(k)
    kp = ki.k_prime
    if kp <= 1e-12:
        raise ValueError("basis functions need k > 1/4 (trivial disk factor otherwise)")
    if n < 0 or s < 0:
        raise ValueError("indices must be nonnegative")
    alpha = np.asarray(alpha, dtype=complex)
    w = np.asarray(w, dtype=complex)
    z = alpha - w * np.conj(alpha)
    lg = 0.5 * (math.lgamma(s + 2 * kp) - math.lgamma(s + 1) - math.lgamma(2 * kp))
    val = _pn_scaled_at(n, z, w) * np.power(w, s) * math.exp(lg)
    if val.ndim == 0:
        return complex(val)
    return val


def _pad_pair(f: np.ndarray, g: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    n = max(len(f), len(g))
    fp = np.zeros(n, dtype=complex)
    gp = np.zeros(n, dtype=complex)
    fp[: len(f)] = f
    gp[: len(g)] = g
    return fp, gp


def scalar_product_series(
    f_coeffs: np.ndarray, g_coeffs: np.ndarray, k: BargmannIndex | float
) -> complex:
    """Diagonal-series scalar product on power series in the disk variable.

    (f, g) = sum_n  G(2k) n! / G(2k + n) * conj(f_n) g_n,

    the weights being exactly the monomial norms of the weighted Bergman
    space.  Arrays of different lengths are zero padded.  Emits a
    DivergenceWarning when the final retained term is not small against
    the accumulated sum.
    """
    ki = as_index(k)
    f, g = _pad_pair(np.asarray(f_coeffs), np.asarray(g_coeffs))
    n = len(f)
    rho = np.empty(n)
    rho[0] = 1.0
    for j in range(n - 1):
        rho[j + 1] = rho[j] * (j + 1) / (2 * ki.k + j)
    terms = rho * np.conj(f) * g
    total = complex(np.sum(terms))
    mags = np.abs(terms)
    if (
        n > 8
        and mags[-4] > 0
        and mags[-4] < mags[-3] < mags[-2] < mags[-1]
        and mags[-1] > 1e-12 * max(abs(total), 1e-300)
    ):
        warnings.warn(
            "trailing terms of the diagonal series are growing",
            DivergenceWarning,
            stacklevel=2,
        )
    return total


def _eval_pair(func, *args, shape):
    vals = np.asarray(func(*args))
    if vals.ndim == 0:
        vals = np.broadcast_to(vals, shape)
    return vals


def scalar_product_disk_quadrature(
    f,
    g,
    k: BargmannIndex | float,
    n_radial: int = 64,
    n_angular: int = 64,
) -> complex:
    """Scalar product (2k-1)/pi * Int_D conj(f) g (1-|w|^2)^(2k-2) d^2 w.

    Radial integration uses a Gauss-Jacobi rule holding the full endpoint
    weight (1-t)^(2k-2), which keeps the rule exact for polynomial data
    down to k -> 1/2 where a plain Legendre rule degrades; the angular
    integral is the uniform trapezoid rule, exact for trigonometric
    polynomials below the node count.  Callables receive numpy arrays.
    """
    ki = as_index(k)
    if not ki.k > 0.5:
        raise ValueError("disk quadrature needs k > 1/2")
    x, wts = roots_jacobi(n_radial, 2 * ki.k - 2, 0.0)
    t = (x + 1.0) / 2.0
    theta = 2.0 * math.pi * np.arange(n_angular) / n_angular
    wgrid = np.sqrt(t)[:, None] * np.exp(1j * theta)[None, :]
    fv = _eval_pair(f, wgrid, shape=wgrid.shape)
    gv = _eval_pair(g, wgrid, shape=wgrid.shape)
    inner = np.sum(np.conj(fv) * gv, axis=1)
    scale = (2 * ki.k - 1) * 2.0 ** (1 - 2 * ki.k) / n_angular
    return complex(scale * np.sum(wts * inner))


def scalar_product_cjk_quadrature(
    f,
    g,
    k: BargmannIndex | float,
    n_hermite: int = 24,
    n_radial: int = 24,
    n_angular: int = 32,
) -> complex:
    """Scalar product over the full plane-times-disk sample space.

    (f, g) = (4k-3)/(2 pi^2) * Int  conj(f) g  (1-|w|^2)^(2k-2)
             exp(-|alpha|^2 + Re(conj(w) alpha^2))  d^2 alpha  d^2 w.

    The alpha Gaussian has principal axes rotated by Arg(w)/2 with widths
    1/sqrt(1 -+ |w|), so the plane integral is an exact two-axis
    Gauss-Hermite sum for polynomial data; its 1/sqrt(1-|w|^2) mass is
    folded into the radial weight.  The radial direction is parametrized
    by rho = |w| (the integrand is polynomial in rho, not in rho^2) under
    a Gauss-Jacobi rule carrying the full (1-rho)^(2k-5/2) endpoint
    weight.  Defined for k > 3/4, where the measure has a convergent
    normalization; smaller k raises ValueError.

    Callables are evaluated as f(alpha, w) on broadcast numpy arrays of
    shape (n_radial, n_angular, n_hermite, n_hermite).
    """
    ki = as_index(k)
    if not ki.k > 0.75:
        raise ValueError("plane-times-disk quadrature needs k > 3/4")
    a_exp = 2 * ki.k - 2.5
    x, wr = roots_jacobi(n_radial, a_exp, 0.0)
    rho = (x + 1.0) / 2.0
    xh, wh = roots_hermite(n_hermite)
    theta = 2.0 * math.pi * np.arange(n_angular) / n_angular

    s_lo = 1.0 / np.sqrt(1.0 - rho)  # axis with weakened restoring weight
    s_hi = 1.0 / np.sqrt(1.0 + rho)
    phase = np.exp(0.5j * theta)
    # alpha[i, j, p, q] = e^{i theta_j / 2} (s_lo_i x_p + i s_hi_i x_q)
    alpha = (
        phase[None, :, None, None]
        * (
            s_lo[:, None, None, None] * xh[None, None, :, None]
            + 1j * s_hi[:, None, None, None] * xh[None, None, None, :]
        )
    )
    wdisk = rho[:, None, None, None] * np.exp(1j * theta)[None, :, None, None]
    wdisk = np.broadcast_to(wdisk, alpha.shape)
    fv = _eval_pair(f, alpha, wdisk, shape=alpha.shape)
    gv = _eval_pair(g, alpha, wdisk, shape=alpha.shape)
    hbar = np.einsum("p,q,ijpq->ij", wh, wh, np.conj(fv) * gv)
    radial_w = wr * (1.0 + rho) ** a_exp * rho
    total = np.einsum("i,ij->", radial_w, hbar)
    const = (4 * ki.k - 3) / (2 * math.pi**2)
    scale = const * 2.0 ** (-a_exp - 1) * (2.0 * math.pi / n_angular)
    return complex(scale * total)


def psi_relation(
    alpha: complex, w: complex, k: BargmannIndex | float
) -> tuple[complex, CsPoint]:
    """Normalized-state change of label.

    The physical state at (alpha, w) equals prefactor * e_{z, w} with
    z = alpha - w conj(alpha) and
    prefactor = (1 - |w|^2)^k exp(-conj(alpha) z / 2).
    The prefactor makes |prefactor|^2 K((z,w),(z,w)) = 1 exactly.
    """
    ki = as_index(k)
    if not abs(w) < 1:
        raise ValueError(f"|w| must be < 1, got {abs(w)}")
    z = alpha - w * alpha.conjugate()
    pre = (1 - abs(w) ** 2) ** ki.k * cmath.exp(-alpha.conjugate() * z / 2)
    return pre, CsPoint(z, w)


def act_on_cs(
    h: JacobiElement, p: CsPoint, k: BargmannIndex | float
) -> ActionResult:
    """Transform a coherent state by a group element, in closed form.

    With h = (g, alpha, t), g = (a, b), the transformed state is again in
    the family:

        pi(h) e_{z,w} = multiplier * e_{z1, w1},
        den = conj(b) w + conj(a),        z0 = alpha - conj(alpha) w,
        w1  = (a w + b) / den,            z1 = (z + z0) / den,
        lambda1 = conj(b) (z+z0)^2 / (2 den) + conj(alpha) (z + z0/2),
        multiplier = den^(-2k) exp(-lambda1).

    The center coordinate t does not move the state (it only shifts a
    central phase) and is ignored here.  den^(-2k) uses the principal
    branch; for fractional 2k the branch is only locally continuous, and
    ``act_on_cs_covering`` is the branch-free version.
    """
    ki = as_index(k)
    a, b = h.g.a, h.g.b
    den = b.conjugate() * p.w + a.conjugate()
    z0 = h.alpha - h.alpha.conjugate() * p.w
    zs = p.z + z0
    w1 = (a * p.w + b) / den
    z1 = zs / den
    lam1 = b.conjugate() * zs**2 / (2 * den) + h.alpha.conjugate() * (p.z + z0 / 2)
    mult = cmath.exp(-2 * ki.k * cmath.log(den) - lam1)
    return ActionResult(mult, CsPoint(z1, w1), lam1, z0)


def act_on_cs_covering(
    c: CoveringElement,
    alpha: complex,
    p: CsPoint,
    k: BargmannIndex | float,
) -> ActionResult:
    """Branch-free coherent state transformation for the universal cover.

    Same geometry as ``act_on_cs`` for the projected element, but the
    scalar multiplier is written as

        exp(2 i k omega) (1 - |gamma|^2)^k (1 + conj(gamma) w)^(-2k)
        * exp(-lambda1),

    which is single valued in (omega, gamma) because Re(1 + conj(gamma) w)
    > 0 on the disk.  Raising omega by 2 pi multiplies the result by
    exp(4 pi i k); for k = 1/4 that is the sign flip of the two-valued
    metaplectic factor.
    """
    ki = as_index(k)
    g = c.project()
    a, b = g.a, g.b
    den = b.conjugate() * p.w + a.conjugate()
    z0 = alpha - alpha.conjugate() * p.w
    zs = p.z + z0
    w1 = (a * p.w + b) / den
    z1 = zs / den
    lam1 = b.conjugate() * zs**2 / (2 * den) + alpha.conjugate() * (p.z + z0 / 2)
    mult = (
        cmath.exp(2j * ki.k * c.omega)
        * (1 - abs(c.gamma) ** 2) ** ki.k
        * cmath.exp(-2 * ki.k * cmath.log(1 + c.gamma.conjugate() * p.w))
        * cmath.exp(-lam1)
    )
    return ActionResult(mult, CsPoint(z1, w1), lam1, z0)


def series_lower(coeffs: np.ndarray) -> np.ndarray:
    """Lowering generator d/dw on power series coefficients."""
    a = np.asarray(coeffs, dtype=complex)
    n = np.arange(1, len(a))
    return n * a[1:]


def series_raise(coeffs: np.ndarray, k: BargmannIndex | float) -> np.ndarray:
    """Raising generator w^2 d/dw + 2k w on power series coefficients."""
    ki = as_index(k)
    a = np.asarray(coeffs, dtype=complex)
    out = np.zeros(len(a) + 1, dtype=complex)
    n = np.arange(len(a))
    out[1:] = (n + 2 * ki.k) * a
    return out


def series_weight(coeffs: np.ndarray, k: BargmannIndex | float) -> np.ndarray:
    """Weight generator w d/dw + k on power series coefficients."""
    ki = as_index(k)
    a = np.asarray(coeffs, dtype=complex)
    return (np.arange(len(a)) + ki.k) * a


def mobius_action_series(
    g: Su11Element, n: int, k: BargmannIndex | float, n_cut: int
) -> np.ndarray:
    """Power series of the weighted Moebius substitution applied to w^n.

    Returns the first n_cut + 1 coefficients of

        (a w + b)^n (conj(b) w + conj(a))^(-2k-n),

    the image of the monomial w^n under the weight-k substitution
    operator.  Principal branch on conj(a)^(-2k-n); the binomial tail
    converges for |b/a| < 1.
    """
    ki = as_index(k)
    if n < 0 or n_cut < 0:
        raise ValueError("indices must be nonnegative")
    a, b = g.a, g.b
    poly = np.array(
        [math.comb(n, i) * a**i * b ** (n - i) for i in range(n + 1)],
        dtype=complex,
    )
    q = 2 * ki.k + n
    tail = np.zeros(n_cut + 1, dtype=complex)
    ratio = b.conjugate() / a.conjugate()
    cur = cmath.exp(-q * cmath.log(a.conjugate()))
    for j in range(n_cut + 1):
        tail[j] = cur
        cur = cur * (-(q + j) / (j + 1)) * ratio
    return np.convolve(poly, tail)[: n_cut + 1]
