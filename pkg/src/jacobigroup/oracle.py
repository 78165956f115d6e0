"""Independent oracle: truncated operators and matrix exponentials.

Everything in this module deliberately avoids the closed forms of
``matrix_elements`` and ``states``.  Operators are built as explicit
truncated matrices from the ladder relations, group elements are
exponentiated with ``scipy.linalg.expm`` (or an exact-Taylor product
route in extended precision where the exponential is ill conditioned),
and states are transported by plain matrix multiplication.  Agreement
between the two routes on truncation-safe index ranges is the
correctness evidence for the rest of the package.

Truncation is not benign everywhere: a squeeze at parameter w spreads
index n over roughly n (1+|w|)/(1-|w|), so only entries inside that
light cone of the cutoff are meaningful.  ``light_cone_cut`` gives the
safe index range; comparisons outside it measure the cutoff, not the
formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .groups import CoveringElement, JacobiElement, principal_lift
from .numerics import BargmannIndex, as_index
from .states import CoeffVector, CsPoint, cs_coefficients

__all__ = [
    "TruncatedOperator",
    "build_operators",
    "matrix_exp",
    "oracle_displacement",
    "oracle_squeeze",
    "oracle_su11",
    "oracle_action_on_cs",
    "interior_slice",
    "light_cone_cut",
]


@dataclass
class TruncatedOperator:
    """A finite section of an operator, tagged with where it came from."""

    dim: int
    entries: np.ndarray
    label: str


def _fock_ladders(dim: int) -> tuple[np.ndarray, np.ndarray]:
    a = np.zeros((dim, dim))
    for n in range(1, dim):
        a[n - 1, n] = math.sqrt(n)
    return a, a.T.copy()


def build_operators(
    dim, k: BargmannIndex | float, realization: str = "abstract_dseries"
) -> dict[str, TruncatedOperator]:
    """Truncated ladder operators in one of three realizations.

    "abstract_dseries": weight-k ladder on ``dim`` levels,
        K0 = diag(k + m),  Kp[m+1, m] = sqrt((m+1)(m+2k)) = Km[m, m+1].

    "fock_quarter": single oscillator on ``dim`` Fock levels,
        K0 = (a^dag a + 1/2)/2, Kp = a^dag^2/2, Km = a^2/2;
    the even and odd parity sectors carry weights 1/4 and 3/4 regardless
    of the k argument, which is ignored.  Also returns a and adag.

    "tensor_product": ``dim`` is a pair (fock_dim, ladder_dim); the
    oscillator realization is tensored with an abstract ladder of weight
    k - 1/4 (requires k > 1/4), K = K_fock x 1 + 1 x K'.  Returns the
    summed K's, the factor a and adag (acting on the first slot), and the
    bare second-factor generators under keys "K0p", "Kpp", "Kmp".
    """
    if realization == "abstract_dseries":
        ki = as_index(k)
        n = int(dim)
        m = np.arange(n)
        k0 = np.diag(ki.k + m.astype(float))
        kp = np.zeros((n, n))
        for j in range(n - 1):
            kp[j + 1, j] = math.sqrt((j + 1) * (j + 2 * ki.k))
        return {
            "K0": TruncatedOperator(n, k0, "dseries K0"),
            "Kp": TruncatedOperator(n, kp, "dseries K+"),
            "Km": TruncatedOperator(n, kp.T.copy(), "dseries K-"),
        }
    if realization == "fock_quarter":
        n = int(dim)
        a, adag = _fock_ladders(n)
        k0 = (adag @ a + 0.5 * np.eye(n)) / 2.0
        return {
            "K0": TruncatedOperator(n, k0, "fock K0"),
            "Kp": TruncatedOperator(n, adag @ adag / 2.0, "fock K+"),
            "Km": TruncatedOperator(n, a @ a / 2.0, "fock K-"),
            "a": TruncatedOperator(n, a, "fock a"),
            "adag": TruncatedOperator(n, adag, "fock a+"),
        }
    if realization == "tensor_product":
        ki = as_index(k)
        if not ki.k > 0.25:
            raise ValueError("tensor realization needs k > 1/4")
        nf, nd = dim
        fock = build_operators(nf, 0.25, "fock_quarter")
        disk = build_operators(nd, ki.k - 0.25, "abstract_dseries")
        eye_f = np.eye(nf)
        eye_d = np.eye(nd)
        out = {}
        for key in ("K0", "Kp", "Km"):
            total = np.kron(fock[key].entries, eye_d) + np.kron(
                eye_f, disk[key].entries
            )
            out[key] = TruncatedOperator(nf * nd, total, f"tensor {key}")
            out[key + "p"] = TruncatedOperator(nd, disk[key].entries, f"factor {key}'")
        for key in ("a", "adag"):
            out[key] = TruncatedOperator(
                nf * nd, np.kron(fock[key].entries, eye_d), f"tensor {key}"
            )
        return out
    raise ValueError(f"unknown realization {realization!r}")


def matrix_exp(matrix: np.ndarray) -> np.ndarray:
    """scipy expm with a finiteness check on the result."""
    out = expm(np.asarray(matrix))
    if not np.all(np.isfinite(out)):
        raise FloatingPointError("matrix exponential overflowed the truncation")
    return out


def oracle_displacement(dim: int, alpha: complex) -> np.ndarray:
    """D(alpha) on a truncated Fock space, by exponentiating the generator."""
    a, adag = _fock_ladders(dim)
    alpha = complex(alpha)
    return matrix_exp(alpha * adag - alpha.conjugate() * a)


def _zeta_from_disk(w: complex) -> complex:
    w = complex(w)
    r = abs(w)
    if r == 0.0:
        return 0.0j
    return math.atanh(r) * (w / r)


def _squeeze_product_mp(dim: int, k: float, w: complex, bits: int = 192) -> np.ndarray:
    # Exact-Taylor disentangled product exp(w K+) (1-|w|^2)^(K0 shift) exp(-conj(w) K-)
    # in extended precision.  Each factor is an exact polynomial of the nilpotent
    # truncated ladder, so the only error is the final rounding to double; float64
    # assembly loses everything to the e^40-scale intermediate terms.
    import gmpy2

    ctx = gmpy2.get_context()
    old_bits = ctx.precision
    ctx.precision = bits
    try:
        wm = gmpy2.mpc(w)
        vm = -wm.conjugate()
        t = gmpy2.norm(wm)
        km = gmpy2.mpfr(k)
        logd = gmpy2.log(1 - t)
        # cumulative ladder products R[l] = prod_{m<l} sqrt((m+1)(m+2k))
        r_cum = [gmpy2.mpfr(1)]
        for m in range(dim - 1):
            r_cum.append(r_cum[-1] * gmpy2.sqrt(gmpy2.mpfr(m + 1) * (m + 2 * km)))
        wpow = [gmpy2.mpc(1)]
        vpow = [gmpy2.mpc(1)]
        for p in range(1, dim):
            wpow.append(wpow[-1] * wm / p)
            vpow.append(vpow[-1] * vm / p)
        mid = [gmpy2.exp((km + l) * logd) / (r_cum[l] * r_cum[l]) for l in range(dim)]
        out = np.empty((dim, dim), dtype=complex)
        for i in range(dim):
            for j in range(dim):
                acc = gmpy2.mpc(0)
                for l in range(min(i, j) + 1):
                    acc += wpow[i - l] * vpow[j - l] * mid[l]
                out[i, j] = complex(acc * r_cum[i] * r_cum[j])
        return out
    finally:
        ctx.precision = old_bits


def oracle_squeeze(
    dim: int,
    k: BargmannIndex | float,
    w: complex,
    realization: str = "abstract_dseries",
    route: str = "generator",
) -> np.ndarray:
    """S(w) on a truncated space, independent of the closed forms.

    route = "generator" exponentiates zeta K+ - conj(zeta) K- with
    zeta = atanh(|w|) w/|w| via expm.  route = "product" multiplies the
    three disentangled factors, each an exact finite Taylor polynomial of
    a nilpotent truncated ladder, assembled in extended precision; it is
    only defined for the abstract realization.  The two routes agree on
    the light cone of the truncation and nowhere else, which is the point.
    """
    if route == "product":
        if realization != "abstract_dseries":
            raise ValueError("product route needs the abstract ladder realization")
        ki = as_index(k)
        if w == 0:
            return np.eye(dim, dtype=complex)
        return _squeeze_product_mp(int(dim), ki.k, complex(w))
    if route != "generator":
        raise ValueError(f"unknown route {route!r}")
    ops = build_operators(dim, k, realization)
    z = _zeta_from_disk(w)
    gen = z * ops["Kp"].entries - z.conjugate() * ops["Km"].entries
    return matrix_exp(gen.astype(complex))


def oracle_su11(
    dim: int,
    k: BargmannIndex | float,
    omega: float,
    gamma: complex,
    realization: str = "abstract_dseries",
) -> np.ndarray:
    """U(omega, gamma) = exp(2 i omega K0) S(gamma) on a truncated space.

    Built from the covering coordinates, so it is single valued in omega
    and multiplicative under the covering composition for every k.
    """
    ops = build_operators(dim, k, realization)
    rot = matrix_exp(2j * omega * ops["K0"].entries.astype(complex))
    return rot @ oracle_squeeze(dim, k, gamma, realization)


def oracle_action_on_cs(
    element,
    p: CsPoint,
    k: BargmannIndex | float,
    dims: tuple[int, int],
) -> CoeffVector:
    """Transport a coherent state by brute-force truncated matrices.

    ``element`` is a JacobiElement, or a pair (CoveringElement, alpha)
    when the fractional-weight phase matters.  The state is expanded on
    the oscillator x ladder product basis (cs_coefficients), the group
    element is exponentiated on each factor, and the coefficient matrix
    is conjugated through plain matmuls:

        C' = (U_fock D(alpha)) C U'_ladder^T.

    Entries of C' near the truncation edges are meaningless; compare on
    ``light_cone_cut`` of the squeeze parameter.
    """
    ki = as_index(k)
    nf, nd = dims
    if isinstance(element, JacobiElement):
        cov = principal_lift(element.g)
        alpha = element.alpha
    else:
        cov, alpha = element
    c0 = cs_coefficients(p, ki, n_max=nf - 1, m_max=nd - 1)
    uf = oracle_su11(nf, 0.25, cov.omega, cov.gamma, "fock_quarter") @ (
        oracle_displacement(nf, alpha)
    )
    if ki.k_prime <= 1e-12:
        # trivial second factor, the fock side carries the whole action
        coeffs = uf @ c0.coeffs
    else:
        ud = oracle_su11(nd, ki.k_prime, cov.omega, cov.gamma, "abstract_dseries")
        coeffs = uf @ c0.coeffs @ ud.T
    return CoeffVector(ki, coeffs, c0.tail_bound)


def interior_slice(dim: int, fraction: float = 0.75) -> slice:
    """Leading index block of a fixed fraction of the truncation."""
    if not 0 < fraction <= 1:
        raise ValueError("fraction must be in (0, 1]")
    return slice(0, max(1, int(dim * fraction)))


def light_cone_cut(dim: int, w, margin: float = 0.9) -> int:
    """Largest index a squeeze at parameter(s) w leaves truncation-clean.

    The squeeze couples level n mostly to levels up to about
    n (1+|w|)/(1-|w|); inverting at the cutoff gives the safe range
        n <= dim (1-|w|)/(1+|w|),
    shrunk by ``margin``.  For several parameters pass an iterable; the
    cut is the tightest one.
    """
    try:
        ws = list(w)
    except TypeError:
        ws = [w]
    cut = dim
    for wi in ws:
        r = abs(complex(wi))
        if not r < 1:
            raise ValueError(f"|w| must be < 1, got {r}")
        cut = min(cut, int(dim * (1 - r) / (1 + r) * margin))
    return max(cut, 1)
