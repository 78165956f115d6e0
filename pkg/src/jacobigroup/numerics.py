"""Scalar numerical kernels shared by the rest of the package.

Everything in here is elementary (log-gamma ratios, Laguerre and
hypergeometric evaluation, the two-variable Hermite-type polynomials) but
tuned for the parameter ranges the matrix-element formulas actually hit,
where naive evaluation loses digits long before the formulas themselves
break down.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp
import numpy as np

__all__ = [
    "BargmannIndex",
    "PoleError",
    "as_index",
    "log_gamma_ratio",
    "laguerre_assoc",
    "gauss_2f1_terminating",
    "pn_polynomial",
    "pn_sequence",
    "pn_scaled_sequence",
]


class PoleError(ValueError):
    """A hypergeometric denominator parameter hit a nonpositive integer."""


@dataclass(frozen=True)
class BargmannIndex:
    """Lowest weight k > 0 of a positive discrete series representation.

    The half-integer cases 2k = 1, 2, 3, ... are the ones that descend to
    single-valued representations; everything else lives on the universal
    cover and is tracked through explicit branch data downstream.
    """

    k: float

    def __post_init__(self) -> None:
        if not self.k > 0:
            raise ValueError(f"Bargmann index must be positive, got {self.k}")

    @property
    def weight_is_integer(self) -> bool:
        """True when 2k is an integer (single-valued representation)."""
        return abs(2 * self.k - round(2 * self.k)) <= 1e-12

    @property
    def k_prime(self) -> float:
        """Index of the companion series under the quadratic splitting, k - 1/4."""
        return self.k - 0.25

    def __float__(self) -> float:
        return float(self.k)


def as_index(k: BargmannIndex | float) -> BargmannIndex:
    """Coerce a plain positive number to a BargmannIndex."""
    if isinstance(k, BargmannIndex):
        return k
    return BargmannIndex(float(k))


# Stirling series coefficients B_{2n} / (2n (2n-1)) for the log-gamma tail.
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)


def _stirling_tail(x: float) -> float:
    # Asymptotic correction S(x) in ln G(x) = (x-1/2) ln x - x + ln(2 pi)/2 + S(x).
    # Accurate to ~1e-20 for x >= 16.
    inv = 1.0 / x
    inv2 = inv * inv
    acc = 0.0
    p = inv
    for c in _STIRLING:
        acc += c * p
        p *= inv2
    return acc


def log_gamma_ratio(x: float, y: float) -> float:
    """Compute ln(Gamma(x) / Gamma(y)) without cancellation.

    The naive difference of two log-gamma values loses relative accuracy
    once x and y are large and close (the two logs agree in their leading
    digits).  Here both arguments are shifted into the Stirling regime and
    the difference of the Stirling expansions is formed term by term, which
    keeps the relative error near machine precision for all positive
    arguments.

    Parameters
    ----------
    x, y : float
        Positive arguments of the two gamma factors.

    Returns
    -------
    float
    """
    if not (x > 0 and y > 0):
        raise ValueError(f"arguments must be positive, got {x}, {y}")
    if x == y:
        return 0.0
    lo = min(x, y)
    shift = max(0, math.ceil(16.0 - lo))
    corr = 0.0
    if shift:
        # ln G(z) = ln G(z + shift) - sum ln(z + j), applied to both arguments.
        corr = math.fsum(
            math.log((y + j) / (x + j)) for j in range(shift)
        )
    xs = x + shift
    ys = y + shift
    d = x - y
    main = d * math.log(xs) + (ys - 0.5) * math.log1p(d / ys) - d
    tail = _stirling_tail(xs) - _stirling_tail(ys)
    return main + tail + corr


def laguerre_assoc(n: int, s: float, x: float) -> float:
    """Associated Laguerre polynomial L_n^(s)(x) by the three-term recurrence.

    Upward recurrence in the degree is stable for the oscillatory and
    monotone regions alike, unlike the explicit alternating sum.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n == 0:
        return 1.0
    prev = 1.0
    cur = 1.0 + s - x
    for j in range(1, n):
        prev, cur = cur, ((2 * j + 1 + s - x) * cur - (j + s) * prev) / (j + 1)
    return cur


_CANCEL_RATIO = 16.0  # fast path only when |sum| is within this of the peak term


def _mp_convert(v):
    # Fraction -> exact mpf at the working precision; floats convert exactly.
    if isinstance(v, Fraction):
        return mp.mpf(v.numerator) / v.denominator
    return mp.mpf(v)


def _2f1_terms_mp(m: int, b, c, x, dps: int) -> mp.mpf:
    with mp.workdps(dps):
        bb, cc, xx = _mp_convert(b), _mp_convert(c), _mp_convert(x)
        t = mp.mpf(1)
        s = mp.mpf(1)
        for j in range(m):
            t = t * (j - m) * (bb + j) / ((cc + j) * (j + 1)) * xx
            if t == 0:
                break
            s += t
        return s


def gauss_2f1_terminating(
    m: int, b: float, c: float, x: float, b_exact=None, x_exact=None
) -> float:
    """Terminating Gauss series 2F1(-m, b; c; x) = sum_{j<=m} (-m)_j (b)_j / ((c)_j j!) x^j.

    The sum is evaluated left to right with exact (Shewchuk) accumulation.
    Terms of a terminating 2F1 alternate in sign, and for moderate m the
    partial sums can exceed the result by twenty orders of magnitude or
    more, far beyond what any summation order can rescue in double
    precision.  When the peak term dwarfs the accumulated sum, the series
    is recomputed in adaptive multiprecision until two precision levels
    agree, so the returned double carries close to full relative accuracy
    over the whole parameter range.

    Parameters
    ----------
    m : int
        Truncation order (the series has m + 1 terms).
    b, c, x : float
        Remaining upper parameter, lower parameter, and argument.
    b_exact, x_exact : Fraction, optional
        Exact values of b and x for callers that derive them from other
        quantities.  Severe cancellation amplifies the rounding already
        inside a derived argument, so the multiprecision rungs use these
        when given; the double-precision fast path always uses the floats.

    Raises
    ------
    PoleError
        If c is a nonpositive integer reached before the numerator
        terminates the series.
    """
    if m < 0:
        raise ValueError("order must be nonnegative")
    if m == 0:
        return 1.0
    if c <= 0 and c == int(c):
        # Pole at j = -c unless (b + j) annihilates the series first.
        pole_j = int(-c)
        kills_first = b <= 0 and b == int(b) and int(-b) < pole_j
        if pole_j <= m - 1 and not kills_first:
            raise PoleError(f"lower parameter c={c} is a nonpositive integer in range")

    terms = [1.0]
    t = 1.0
    for j in range(m):
        num = (j - m) * (b + j)
        den = (c + j) * (j + 1)
        t = t * num / den * x
        if t == 0.0:
            break
        terms.append(t)
    total = math.fsum(terms)
    peak = max(abs(u) for u in terms)
    if math.isfinite(peak) and peak <= _CANCEL_RATIO * abs(total) and m <= 64:
        return total

    # Severe cancellation: escalate precision until two rungs agree.
    if math.isfinite(peak) and total != 0.0:
        est_digits = max(0.0, math.log10(peak / abs(total)))
    else:
        est_digits = 34.0
    be = b if b_exact is None else b_exact
    xe = x if x_exact is None else x_exact
    dps = int(min(max(30.0, est_digits + 25.0), 400.0))
    prev = _2f1_terms_mp(m, be, c, xe, dps)
    for _ in range(6):
        dps = int(dps * 1.7) + 10
        cur = _2f1_terms_mp(m, be, c, xe, dps)
        if cur == prev or abs(cur - prev) <= 1e-17 * abs(cur):
            return float(cur)
        prev = cur
    return float(prev)


def pn_polynomial(n: int, z: complex, w: complex) -> complex:
    """Two-variable polynomial P_n(z, w) from P_{n+1} = z P_n + n w P_{n-1}.

    These interpolate between monomials (P_n(z, 0) = z^n) and Hermite
    polynomials, and carry the number-basis expansion of the displaced
    squeezed vacuum.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    prev = 1.0 + 0.0j
    if n == 0:
        return prev
    cur = complex(z)
    for j in range(1, n):
        prev, cur = cur, z * cur + j * w * prev
    return cur


def pn_sequence(n_max: int, z: complex, w: complex) -> np.ndarray:
    """All of P_0 .. P_{n_max} at once."""
    out = np.empty(n_max + 1, dtype=complex)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = z
    for j in range(1, n_max):
        out[j + 1] = z * out[j] + j * w * out[j - 1]
    return out


def pn_scaled_sequence(n_max: int, z: complex, w: complex) -> np.ndarray:
    """P_n / sqrt(n!) for n = 0 .. n_max.

    The scaled recurrence q_{n+1} = (z q_n + w sqrt(n) q_{n-1}) / sqrt(n+1)
    stays bounded where the raw P_n overflow, so this is the form used for
    coefficient vectors.
    """
    out = np.empty(n_max + 1, dtype=complex)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = z
    for j in range(1, n_max):
        out[j + 1] = (z * out[j] + w * math.sqrt(j) * out[j - 1]) / math.sqrt(j + 1)
    return out
