"""Group layer: SU(1,1), its universal cover, and the Jacobi group.

Elements of SU(1,1) are stored through the first row (a, b) of the matrix
[[a, b], [conj(b), conj(a)]] with |a|^2 - |b|^2 = 1.  The Jacobi group is
the semidirect product of the Heisenberg-Weyl group (translation alpha,
center t) with SU(1,1) acting on the translation part, and the universal
cover replaces the matrix by the pair (omega, gamma) with

    a = exp(i omega) / sqrt(1 - |gamma|^2),   b = a * gamma,

omega running over the whole real line.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

__all__ = [
    "Su11Element",
    "JacobiElement",
    "CoveringElement",
    "su11_identity",
    "su11_compose",
    "su11_inverse",
    "su11_act_disk",
    "su11_act_translation",
    "jacobi_identity",
    "jacobi_compose",
    "jacobi_inverse",
    "covering_identity",
    "covering_compose",
    "covering_inverse",
    "principal_lift",
]

_UNIT_TOL = 1e-9


@dataclass(frozen=True)
class Su11Element:
    """Matrix [[a, b], [conj(b), conj(a)]] with |a|^2 - |b|^2 = 1."""

    a: complex
    b: complex

    def __post_init__(self) -> None:
        defect = abs(self.a) ** 2 - abs(self.b) ** 2 - 1.0
        if abs(defect) > _UNIT_TOL:
            raise ValueError(f"not an SU(1,1) element, unit defect {defect:.3e}")

    @property
    def gamma(self) -> complex:
        """Disk coordinate b / a (always inside the unit disk)."""
        return self.b / self.a

    @property
    def unit_defect(self) -> float:
        return abs(self.a) ** 2 - abs(self.b) ** 2 - 1.0


@dataclass(frozen=True)
class JacobiElement:
    """Jacobi group element (g, alpha, t): SU(1,1) part, translation, center."""

    g: Su11Element
    alpha: complex
    t: float = 0.0


@dataclass(frozen=True)
class CoveringElement:
    """Point (omega, gamma) of the universal cover of SU(1,1), |gamma| < 1."""

    omega: float
    gamma: complex

    def __post_init__(self) -> None:
        if not abs(self.gamma) < 1:
            raise ValueError(f"|gamma| must be < 1, got {abs(self.gamma)}")

    def project(self) -> Su11Element:
        """Drop to the matrix group (omega survives only mod 2 pi)."""
        a = cmath.exp(1j * self.omega) / math.sqrt(1 - abs(self.gamma) ** 2)
        return Su11Element(a, a * self.gamma)


def su11_identity() -> Su11Element:
    return Su11Element(1.0 + 0.0j, 0.0j)


def su11_compose(g1: Su11Element, g2: Su11Element) -> Su11Element:
    """Matrix product g1 g2."""
    a = g1.a * g2.a + g1.b * g2.b.conjugate()
    b = g1.a * g2.b + g1.b * g2.a.conjugate()
    return Su11Element(a, b)


def su11_inverse(g: Su11Element) -> Su11Element:
    return Su11Element(g.a.conjugate(), -g.b)


def su11_act_disk(g: Su11Element, w: complex) -> complex:
    """Moebius action w -> (a w + b) / (conj(b) w + conj(a)) on the unit disk."""
    if not abs(w) < 1:
        raise ValueError(f"|w| must be < 1, got {abs(w)}")
    return (g.a * w + g.b) / (g.b.conjugate() * w + g.a.conjugate())


def su11_act_translation(g: Su11Element, alpha: complex) -> complex:
    """Real-linear action g . alpha = a alpha + b conj(alpha) on the plane.

    This is the vector action entering the semidirect product: it is the
    2x2 matrix itself acting on (alpha, conj(alpha)).
    """
    return g.a * alpha + g.b * alpha.conjugate()


def jacobi_identity() -> JacobiElement:
    return JacobiElement(su11_identity(), 0.0j, 0.0)


def jacobi_compose(h1: JacobiElement, h2: JacobiElement) -> JacobiElement:
    """Semidirect product law.

    (g1, a1, t1) (g2, a2, t2) = (g1 g2, g2^{-1}.a1 + a2,
                                 t1 + t2 + Im(g2^{-1}.a1 * conj(a2)))
    """
    g = su11_compose(h1.g, h2.g)
    moved = su11_act_translation(su11_inverse(h2.g), h1.alpha)
    alpha = moved + h2.alpha
    t = h1.t + h2.t + (moved * h2.alpha.conjugate()).imag
    return JacobiElement(g, alpha, t)


def jacobi_inverse(h: JacobiElement) -> JacobiElement:
    return JacobiElement(
        su11_inverse(h.g), -su11_act_translation(h.g, h.alpha), -h.t
    )


def covering_identity() -> CoveringElement:
    return CoveringElement(0.0, 0.0j)


def covering_compose(c1: CoveringElement, c2: CoveringElement) -> CoveringElement:
    """Composition upstairs, continuous in both factors.

    The product of the projected matrices determines gamma and omega mod
    2 pi; the winding is fixed by the increment

        delta = Arg(1 + gamma1 conj(gamma2) exp(-2 i omega2)),

    which lies in (-pi/2, pi/2) because |gamma1 gamma2| < 1, so omega
    composes as omega1 + omega2 + delta with no branch jumps.
    """
    u = 1 + c1.gamma * c2.gamma.conjugate() * cmath.exp(-2j * c2.omega)
    delta = cmath.phase(u)
    gamma = (c1.gamma * cmath.exp(-2j * c2.omega) + c2.gamma) / u
    return CoveringElement(c1.omega + c2.omega + delta, gamma)


def covering_inverse(c: CoveringElement) -> CoveringElement:
    return CoveringElement(-c.omega, -c.gamma * cmath.exp(2j * c.omega))


def principal_lift(g: Su11Element) -> CoveringElement:
    """Lift a matrix to the cover using the principal argument of a."""
    return CoveringElement(cmath.phase(g.a), g.gamma)
