"""Unitary interface matrices at the origin and their coefficient tables.

A self-adjoint point interaction is encoded by a unitary 2x2 matrix

    J = e^{i phi} [[alpha, -conj(beta)], [beta, conj(alpha)]],
    phi in [0, pi),  |alpha|^2 + |beta|^2 = 1,

coupling one-sided boundary values through

    (I - J) [u(0+); u(0-)] = i (I + J) [u'(0+); -u'(0-)].

Interactions are classified by rank(I + J):

* Case I   (rank 2): Re(alpha) != -cos(phi),
* Case II  (rank 1): Re(alpha) == -cos(phi) != -1,
* Case III (rank 0): J == -I.

Each case carries decay rates omega_+/- and four-entry coefficient tables
mu_+/-, mu_0 indexed by the signs of (x, y); the Green's-function module
consumes them verbatim.  Classification uses the tolerance band
EPS_CASE = 1e-10 and surfaces the margin |Re(alpha) + cos(phi)| so that
near-degenerate inputs are visible.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, NamedTuple

import numpy as np

from .errors import DomainError, NonFiniteInputError, NotUnitaryError, ZeroStrengthError

EPS_CASE = 1e-10
_UNITARITY_TOL = 1e-10


class CaseTag(enum.Enum):
    """rank(I + J): CASE_I <-> 2, CASE_II <-> 1, CASE_III <-> 0."""

    CASE_I = "I"
    CASE_II = "II"
    CASE_III = "III"

    @property
    def rank(self) -> int:
        return {"I": 2, "II": 1, "III": 0}[self.value]


@dataclass(frozen=True)
class InteractionCase:
    """Classification result: the case tag plus the boundary margin.

    ``margin`` is |Re(alpha) + cos(phi)|; values near EPS_CASE flag inputs
    sitting numerically between cases.
    """

    tag: CaseTag
    margin: float


class SignPair(NamedTuple):
    """Signs (sx, sy) of the two spatial arguments; each entry is +1 or -1."""

    sx: int
    sy: int


SIGN_PAIRS = (SignPair(1, 1), SignPair(1, -1), SignPair(-1, 1), SignPair(-1, -1))


def sign_pair(x: float, y: float) -> SignPair:
    """Sign pair of two nonzero reals; the origin is never classified."""
    if x == 0.0 or y == 0.0:
        raise DomainError(f"sign pair undefined at x={x}, y={y}; both must be nonzero")
    return SignPair(1 if x > 0 else -1, 1 if y > 0 else -1)


@dataclass(frozen=True)
class UnitaryInteraction:
    """Validated (phi, alpha, beta) triple with phi in [0, pi)."""

    phi: float
    alpha: complex
    beta: complex

    def __post_init__(self):
        for name, v in (("phi", self.phi), ("alpha", self.alpha), ("beta", self.beta)):
            c = complex(v)
            if not (math.isfinite(c.real) and math.isfinite(c.imag)):
                raise NonFiniteInputError(f"{name} must be finite")
        if not 0.0 <= self.phi < math.pi:
            raise NotUnitaryError(f"phi must lie in [0, pi), got {self.phi}")
        norm = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(norm - 1.0) > _UNITARITY_TOL:
            raise NotUnitaryError(
                f"|alpha|^2 + |beta|^2 deviates from 1 by {abs(norm - 1.0):.3e}"
            )

    def matrix(self) -> np.ndarray:
        """The 2x2 interface matrix e^{i phi}[[a, -conj b], [b, conj a]]."""
        ph = cmath.exp(1j * self.phi)
        a, b = complex(self.alpha), complex(self.beta)
        return ph * np.array([[a, -b.conjugate()], [b, a.conjugate()]], dtype=complex)


def from_parameters(phi: float, alpha: complex, beta: complex) -> UnitaryInteraction:
    """Validate and normalize: phi reduced mod pi into [0, pi), the
    compensating sign absorbed into (alpha, beta)."""
    phi = float(phi)
    alpha, beta = complex(alpha), complex(beta)
    if not math.isfinite(phi):
        raise NonFiniteInputError("phi must be finite")
    m = math.floor(phi / math.pi)
    phi0 = phi - m * math.pi
    if phi0 >= math.pi:  # rounding can land exactly on pi
        phi0 -= math.pi
        m += 1
    if phi0 < 0.0:
        phi0 += math.pi
        m -= 1
    if m % 2:
        alpha, beta = -alpha, -beta
    return UnitaryInteraction(phi0, alpha, beta)


def from_matrix(j: np.ndarray) -> UnitaryInteraction:
    """Recover (phi, alpha, beta) from a unitary 2x2 matrix.

    e^{i phi} = sqrt(det J) with the root chosen so phi lands in [0, pi);
    the reconstruction round-trips to J within the unitarity tolerance.
    """
    j = np.asarray(j, dtype=complex)
    if j.shape != (2, 2):
        raise NotUnitaryError(f"J must be 2x2, got shape {j.shape}")
    if not np.isfinite(j).all():
        raise NonFiniteInputError("J must be finite")
    defect = np.abs(j @ j.conj().T - np.eye(2)).max()
    if defect > _UNITARITY_TOL:
        raise NotUnitaryError(f"J fails unitarity by {defect:.3e}")
    det = j[0, 0] * j[1, 1] - j[0, 1] * j[1, 0]
    half = cmath.phase(det) / 2.0  # in (-pi/2, pi/2]
    phi = half + math.pi if half < 0.0 else half
    ph = cmath.exp(-1j * phi)
    return UnitaryInteraction(phi, ph * j[0, 0], ph * j[1, 0])


def classify(u: UnitaryInteraction) -> InteractionCase:
    """Case I/II/III with the margin |Re(alpha) + cos(phi)| attached."""
    margin = abs(u.alpha.real + math.cos(u.phi))
    if margin > EPS_CASE:
        tag = CaseTag.CASE_I
    elif abs(u.alpha.real + 1.0) > EPS_CASE:
        tag = CaseTag.CASE_II
    else:
        tag = CaseTag.CASE_III
    return InteractionCase(tag, margin)


def eta(u: UnitaryInteraction, s: SignPair) -> complex:
    """The four-branch sign-pair weight; zero on the |Re alpha| = 1 ridge.

    (+,+) -> -Im(alpha)/r, (+,-) -> -i*conj(beta)/r, (-,+) -> i*beta/r,
    (-,-) -> Im(alpha)/r with r = sqrt(1 - Re(alpha)^2).
    """
    ra = u.alpha.real
    if abs(abs(ra) - 1.0) <= EPS_CASE:
        return 0.0 + 0.0j
    r = math.sqrt(max(0.0, 1.0 - ra * ra))
    if s.sx > 0:
        val = -u.alpha.imag if s.sy > 0 else -1j * u.beta.conjugate()
    else:
        val = 1j * u.beta if s.sy > 0 else u.alpha.imag
    return complex(val) / r


@dataclass(frozen=True)
class GreenCoefficients:
    """Decay rates and sign-pair coefficient tables of one interaction.

    Whenever omega_j == 0 the matching mu_j table is exactly zero, keeping
    the mu_j/omega_j convention well-posed downstream.
    """

    omega_plus: float
    omega_minus: float
    mu_plus: Mapping[SignPair, complex]
    mu_minus: Mapping[SignPair, complex]
    mu_zero: Mapping[SignPair, complex]
    case: InteractionCase
    eta_table: Mapping[SignPair, complex] = field(repr=False, default=None)


def _theta(v: float) -> float:
    """Heaviside step for nonzero arguments: 1 on v > 0, 0 on v < 0."""
    return 1.0 if v > 0 else 0.0


@lru_cache(maxsize=512)
def coefficients(u: UnitaryInteraction) -> GreenCoefficients:
    """omega_+/- and the four-entry mu tables for the matching case."""
    case = classify(u)
    ra = u.alpha.real
    sphi = math.sin(u.phi)
    etas = {s: eta(u, s) for s in SIGN_PAIRS}
    zeros = {s: 0.0 + 0.0j for s in SIGN_PAIRS}

    if case.tag is CaseTag.CASE_III:
        return GreenCoefficients(
            0.0, 0.0, zeros, dict(zeros),
            {s: -1.0 + 0.0j for s in SIGN_PAIRS}, case, etas,
        )

    if case.tag is CaseTag.CASE_II:
        # cot(phi) written as -Re(alpha)/sin(phi): identical analytically
        # (Re alpha = -cos phi here) and exactly zero for the free particle.
        om = -ra / sphi
        mu_p = {s: -(om / 2.0) * (_theta(s.sx * s.sy) + etas[s]) for s in SIGN_PAIRS}
        mu_0 = {s: etas[s] - _theta(-s.sx * s.sy) for s in SIGN_PAIRS}
        return GreenCoefficients(om, 0.0, mu_p, zeros, mu_0, case, etas)

    root = math.sqrt(max(0.0, 1.0 - ra * ra))
    cphi = math.cos(u.phi)
    den = cphi + ra
    # omega_+ = (-sin(phi) + root)/den, rationalized to kill the cancellation:
    # the numerator difference of square roots equals (cos(phi) - Re(alpha))
    # over (root + sin(phi)).  This keeps omega_+ exactly zero whenever
    # Re(alpha) == cos(phi) bitwise (the delta' family).
    rsum = root + sphi
    om_p = (cphi - ra) / rsum if rsum > 0.0 else 0.0
    om_m = -rsum / den
    mu_p = {s: -(om_p / 2.0) * (_theta(s.sx * s.sy) + etas[s]) for s in SIGN_PAIRS}
    mu_m = {s: -(om_m / 2.0) * (_theta(s.sx * s.sy) - etas[s]) for s in SIGN_PAIRS}
    mu_0 = {s: complex(s.sx * s.sy) for s in SIGN_PAIRS}
    return GreenCoefficients(om_p, om_m, mu_p, mu_m, mu_0, case, etas)


def eta_matrix(u: UnitaryInteraction) -> np.ndarray:
    """eta as a 2x2 array: rows = sign of x, columns = sign of y, + first."""
    return np.array(
        [[eta(u, SignPair(1, 1)), eta(u, SignPair(1, -1))],
         [eta(u, SignPair(-1, 1)), eta(u, SignPair(-1, -1))]],
        dtype=complex,
    )


def mu_matrix(table: Mapping[SignPair, complex]) -> np.ndarray:
    """A mu table as a 2x2 array in the same row/column convention."""
    return np.array(
        [[table[SignPair(1, 1)], table[SignPair(1, -1)]],
         [table[SignPair(-1, 1)], table[SignPair(-1, -1)]]],
        dtype=complex,
    )


# -- named constructors -----------------------------------------------------


def free() -> UnitaryInteraction:
    """No interaction: J = [[0, 1], [1, 0]]."""
    return from_parameters(math.pi / 2.0, 0.0, -1j)


def delta(c: float) -> UnitaryInteraction:
    """Dirac-delta interaction of strength c != 0: cot(phi) = c."""
    c = _nonzero_strength(c)
    phi = math.atan2(1.0, c)
    return from_parameters(phi, -math.cos(phi), -1j * math.sin(phi))


def delta_prime(c: float) -> UnitaryInteraction:
    """delta'-interaction of strength c != 0: tan(phi) = -c."""
    c = _nonzero_strength(c)
    phi = math.atan(-c)
    if phi <= 0.0:
        phi += math.pi
    return from_parameters(phi, math.cos(phi), -1j * math.sin(phi))


def dirichlet() -> UnitaryInteraction:
    """Hard wall (vanishing boundary values): J = -I."""
    return from_parameters(0.0, -1.0, 0.0)


def neumann() -> UnitaryInteraction:
    """Vanishing one-sided derivatives: J = I."""
    return from_parameters(0.0, 1.0, 0.0)


def robin(a: float, b: float) -> UnitaryInteraction:
    """Decoupled Robin half-lines u'(0+) = a u(0+), u'(0-) = b u(0-).

    Uses sgn(0) = 1 in the orientation factor.
    """
    a, b = float(a), float(b)
    if not (math.isfinite(a) and math.isfinite(b)):
        raise NonFiniteInputError("a and b must be finite")
    sgn = 1.0 if b - a >= 0.0 else -1.0
    norm = math.sqrt(1.0 + a * a) * math.sqrt(1.0 + b * b)
    alpha = sgn * (1.0 - 1j * a) * (1.0 - 1j * b) / norm
    phase = sgn * (1.0 - 1j * a) * (1.0 + 1j * b) / norm
    return from_parameters(cmath.phase(phase), alpha, 0.0)


def random_interaction(rng: np.random.Generator) -> UnitaryInteraction:
    """Draw a uniformly-spread interaction for randomized suites.

    phi ~ U[0, pi); |alpha| = sqrt(U(0,1)) (uniform over the unit disk),
    phases U[0, 2pi); |beta| fixed by the modulus constraint.
    """
    phi = rng.uniform(0.0, math.pi)
    r = math.sqrt(rng.uniform(0.0, 1.0))
    tha = rng.uniform(0.0, 2.0 * math.pi)
    thb = rng.uniform(0.0, 2.0 * math.pi)
    alpha = r * cmath.exp(1j * tha)
    beta = math.sqrt(max(0.0, 1.0 - r * r)) * cmath.exp(1j * thb)
    return from_parameters(phi, alpha, beta)


def _nonzero_strength(c: float) -> float:
    c = float(c)
    if not math.isfinite(c):
        raise NonFiniteInputError("c must be finite")
    if c == 0.0:
        raise ZeroStrengthError("strength c must be nonzero")
    return c
