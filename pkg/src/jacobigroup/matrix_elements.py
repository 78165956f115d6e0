"""Closed-form matrix elements in the double ladder basis.

Displacement elements reduce to associated Laguerre polynomials, squeeze
elements to terminating Gauss hypergeometric sums (in two algebraically
equal forms), and the matrix element of a full group element factorizes
as displacement times squeeze with a rotation phase.  Everything here is
exact up to floating point; the truncated-operator oracle module provides
the independent values they are tested against.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .groups import CoveringElement, Su11Element
from .numerics import (
    BargmannIndex,
    as_index,
    gauss_2f1_terminating,
    laguerre_assoc,
    log_gamma_ratio,
)

__all__ = [
    "MeTable",
    "TailBoundError",
    "BranchWarning",
    "displacement_me",
    "expkminus_coeffs",
    "squeeze_me",
    "tg_me",
    "tg_me_covering",
    "jacobi_me",
    "jacobi_tail_bound",
    "me_table",
]


class BranchWarning(UserWarning):
    """Principal-branch phase in use where the weight is not integral."""


class TailBoundError(RuntimeError):
    """A truncated internal sum cannot certify the requested tolerance."""


@dataclass
class MeTable:
    """A block of matrix elements with the inputs and diagnostics attached."""

    kind: str
    k: float
    parameter: object
    entries: np.ndarray
    diagnostics: dict = field(default_factory=dict)


def displacement_me(m: int, n: int, alpha: complex) -> complex:
    """Oscillator displacement matrix element <m| D(alpha) |n>.

    For m >= n:
        sqrt(n!/m!) alpha^(m-n) L_n^{m-n}(|alpha|^2) exp(-|alpha|^2/2)
    and the m < n entries follow from D(alpha)^dagger = D(-alpha).
    """
    if m < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    if m < n:
        return complex(displacement_me(n, m, -alpha)).conjugate()
    alpha = complex(alpha)
    d = m - n
    x = abs(alpha) ** 2
    amp = math.exp(0.5 * log_gamma_ratio(n + 1.0, m + 1.0) - x / 2.0)
    return amp * alpha**d * laguerre_assoc(n, d, x)


def expkminus_coeffs(m: int, k: BargmannIndex | float, w: complex) -> np.ndarray:
    """Column of exp(-conj(w) K_minus) applied to the basis vector f_m.

    Returns c[p], p = 0..m, where the image is sum_p c[p] f_{m-p}:
        c[0] = 1,
        c[p+1] = c[p] * (-conj(w)) * sqrt((m-p)(2k+m-p-1)) / (p+1).
    This is the lowering half of the disentangled squeeze, useful on its
    own for building states with a prescribed leading component.
    """
    ki = as_index(k)
    if m < 0:
        raise ValueError("m must be nonnegative")
    out = np.empty(m + 1, dtype=complex)
    out[0] = 1.0
    wc = -complex(w).conjugate()
    for p in range(m):
        out[p + 1] = out[p] * wc * math.sqrt((m - p) * (2 * ki.k + m - p - 1)) / (p + 1)
    return out


def squeeze_me(
    m_prime: int,
    m: int,
    k: BargmannIndex | float,
    w: complex,
    form: str = "direct",
) -> complex:
    """Squeeze matrix element S_k[m', m](w) in the weight-k ladder basis.

    S(w) is the unitary single-mode squeeze at disk parameter w (|w| < 1).
    With d = m' - m >= 0 and t = |w|^2 the value is

        P * w^d * (1-t)^k       * F(-m, 2k+m'; d+1; t)          ("direct")
        P * w^d * (1-t)^(k+m)   * F(-m, 1-2k-m; d+1; -t/(1-t))  ("pfaff"),

    where P = sqrt(m'! Gamma(2k+m') / (m! Gamma(2k+m))) / d!.  The two
    forms are algebraically equal, with complementary conditioning: each
    stays well behaved in regions where the other's sum cancels badly, so
    their agreement is a meaningful accuracy check.  Entries with m' < m
    come from the identity S_k[m', m](w) = S_k[m, m'](-conj(w)).
    """
    ki = as_index(k)
    if m_prime < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    w = complex(w)
    if not abs(w) < 1:
        raise ValueError(f"|w| must be < 1, got {abs(w)}")
    if m_prime < m:
        return squeeze_me(m, m_prime, ki, -w.conjugate(), form=form)
    if w == 0:
        return 1.0 + 0.0j if m_prime == m else 0.0j
    d = m_prime - m
    t = abs(w) ** 2
    lp = 0.5 * (
        log_gamma_ratio(m_prime + 1.0, m + 1.0)
        + math.fsum(math.log(2 * ki.k + m + i) for i in range(d))
    ) - math.lgamma(d + 1)
    # exact rationals keep the escalated hypergeometric path from
    # amplifying the rounding already inside derived parameters
    tf, kf = Fraction(t), Fraction(ki.k)
    if form == "direct":
        expo = ki.k
        hyp = gauss_2f1_terminating(
            m, 2 * ki.k + m_prime, d + 1, t,
            b_exact=2 * kf + m_prime, x_exact=tf,
        )
    elif form == "pfaff":
        expo = ki.k + m
        hyp = gauss_2f1_terminating(
            m, 1 - 2 * ki.k - m, d + 1, -t / (1 - t),
            b_exact=1 - 2 * kf - m, x_exact=-tf / (1 - tf),
        )
    else:
        raise ValueError(f"unknown form {form!r}")
    phase = (w / abs(w)) ** d
    return math.exp(lp + expo * math.log1p(-t) + d * math.log(abs(w))) * phase * hyp


def tg_me(
    g: Su11Element, m_prime: int, m: int, k: BargmannIndex | float
) -> complex:
    """Matrix element of the rotation-squeeze operator for a group element.

    T(g) factors as the phase rotation through Arg(a) followed by the
    squeeze at b/a:

        T(g)[m', m] = exp(2 i Arg(a) (k + m')) S_k[m', m](b/a).

    The assignment g -> T(g) is an exact representation when 2k is an
    integer; otherwise the principal-branch phase makes it one only up to
    a locally constant phase cocycle, and a BranchWarning is issued (use
    ``tg_me_covering`` for the single-valued version on the cover).
    """
    ki = as_index(k)
    if not ki.weight_is_integer:
        warnings.warn(
            "2k is not an integer: principal-branch phase is not multiplicative",
            BranchWarning,
            stacklevel=2,
        )
    theta = cmath.phase(g.a)
    return cmath.exp(2j * theta * (ki.k + m_prime)) * squeeze_me(
        m_prime, m, ki, g.gamma
    )


def tg_me_covering(
    c: CoveringElement, m_prime: int, m: int, k: BargmannIndex | float
) -> complex:
    """Matrix element of the lifted rotation-squeeze operator.

    Identical to ``tg_me`` on the projected element except that the
    rotation angle is the covering coordinate omega itself, which makes
    g -> T(g) multiplicative for every k > 0.
    """
    ki = as_index(k)
    return cmath.exp(2j * c.omega * (ki.k + m_prime)) * squeeze_me(
        m_prime, m, ki, c.gamma
    )


def jacobi_tail_bound(
    n_prime: int, alpha: complex, s_max: int, eps: int
) -> float:
    """Bound on the discarded tail of the internal sum in ``jacobi_me``.

    The summand at sector level s' is a displacement element into Fock
    level N = 2s' + eps times a squeeze element of modulus at most one,
    and for N >= 2 n_prime

        |D[n', N](alpha)| <= e^{|alpha|^2/2} |alpha|^(N-n')
                             sqrt(N!/n'!) / (N-n')! ,

    which decays superexponentially.  Returns the sum of these bounds
    over the omitted levels.
    """
    a = abs(complex(alpha))
    n0 = 2 * (s_max + 1) + eps
    if a == 0.0:
        return 0.0 if n0 > n_prime else 1.0
    if n0 < 2 * n_prime:
        return math.inf  # bound not valid this early; raise s_max
    total = 0.0
    log_a = math.log(a)
    for step in range(512):
        n = n0 + 2 * step
        lb = (
            a * a / 2.0
            + (n - n_prime) * log_a
            + 0.5 * (math.lgamma(n + 1) - math.lgamma(n_prime + 1))
            - math.lgamma(n - n_prime + 1)
        )
        term = math.exp(lb) if lb < 700 else math.inf
        total += term
        if term < 1e-30 * max(total, 1e-300):
            break
    return total


def jacobi_me(
    n_prime: int,
    m_prime: int,
    s: int,
    m: int,
    eps: int,
    k: BargmannIndex | float,
    alpha: complex,
    w: complex,
    w_prime: complex,
    s_max: int = 48,
    tail_tol: float = 1e-10,
) -> complex:
    """Matrix element of displacement times two-sector squeeze.

    The state space is an oscillator (split into parity sectors eps = 0, 1
    carrying squeeze weight 1/4 + eps/2) tensored with a weight-k ladder.
    The element is

        <n', (m') | D(alpha) S_F(w) S_k(w') | (s, eps), m>
          = [ sum_{s'} D[n', 2s'+eps](alpha) S_{1/4+eps/2}[s', s](w) ]
            * S_k[m', m](w'),

    where the s' sum runs over the sector levels that D(alpha) couples to
    n'.  k names the weight of the w' factor.  The sum is truncated at
    ``s_max`` with a certified remainder from ``jacobi_tail_bound``; if
    the bound exceeds ``tail_tol`` a TailBoundError is raised rather than
    returning an uncertified value.
    """
    if eps not in (0, 1):
        raise ValueError("eps must be 0 or 1")
    ki = as_index(k)
    k_f = 0.25 + 0.5 * eps
    acc = 0.0j
    for s_p in range(s_max + 1):
        acc += displacement_me(n_prime, 2 * s_p + eps, alpha) * squeeze_me(
            s_p, s, k_f, w
        )
    bound = jacobi_tail_bound(n_prime, alpha, s_max, eps)
    if bound > tail_tol:
        raise TailBoundError(
            f"tail bound {bound:.2e} exceeds tolerance {tail_tol:.2e}; raise s_max"
        )
    return acc * squeeze_me(m_prime, m, ki, w_prime)


def _unitary_col_defect(entries: np.ndarray) -> float:
    cols = np.sum(np.abs(entries) ** 2, axis=0)
    return float(np.max(np.abs(cols - 1.0)))


def me_table(
    kind: str,
    k: BargmannIndex | float,
    parameter,
    dims: tuple[int, int],
    form: str = "direct",
    s_max: int = 48,
    tail_tol: float = 1e-10,
    fixed: tuple[int, int] = (0, 0),
) -> MeTable:
    """Tabulate a block of matrix elements with diagnostics.

    kind = "displacement": parameter is alpha, entries[m, n] for
    m <= dims[0], n <= dims[1]; k is carried through but unused.

    kind = "squeeze": parameter is w, entries[m', m].

    kind = "jacobi": parameter is (alpha, w, w'), the lower indices are
    pinned at ``fixed`` = (s, m), and entries[eps, n', m'] covers both
    parity sectors.  Diagnostics carry the worst internal tail bound.

    The unitarity column defect reported for the first two kinds measures
    truncation of the table, not accuracy of its entries.
    """
    kf = float(as_index(k).k) if kind != "displacement" else float(k)
    d0, d1 = dims
    if kind == "displacement":
        entries = np.array(
            [[displacement_me(mm, nn, parameter) for nn in range(d1 + 1)]
             for mm in range(d0 + 1)]
        )
        diag = {"max_col_defect": _unitary_col_defect(entries)}
    elif kind == "squeeze":
        entries = np.array(
            [[squeeze_me(mp, mm, k, parameter, form=form) for mm in range(d1 + 1)]
             for mp in range(d0 + 1)]
        )
        diag = {"form": form, "max_col_defect": _unitary_col_defect(entries)}
    elif kind == "jacobi":
        alpha, w, w_prime = parameter
        s, m = fixed
        entries = np.empty((2, d0 + 1, d1 + 1), dtype=complex)
        worst = 0.0
        for eps in (0, 1):
            for np_ in range(d0 + 1):
                worst = max(worst, jacobi_tail_bound(np_, alpha, s_max, eps))
                for mp in range(d1 + 1):
                    entries[eps, np_, mp] = jacobi_me(
                        np_, mp, s, m, eps, k, alpha, w, w_prime,
                        s_max=s_max, tail_tol=tail_tol,
                    )
        diag = {"tail_bound": worst, "s_max": s_max, "fixed": fixed}
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return MeTable(kind, kf, parameter, entries, diag)
