"""Negative bound states of the point interaction and their link to the
long-time asymptotics.

A negative decay rate in the interface coefficients is exactly a bound
state: the state decays like e^{omega |x|} with energy -omega^2, and the
same rate powers the persistent mode of the long-time expansion.  Rates
are read off in closed form; a 2x2 determinant and the interface system
serve as independent residual checks.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NonFiniteInputError
from .evolution import psi_asymptotic
from .green import _check_position, _check_time
from .interaction import SignPair, UnitaryInteraction, coefficients

__all__ = [
    "MULTIPLICITY_TOL",
    "BoundState",
    "asymptotic_consistency",
    "bound_states",
    "determinant_residual",
    "eigenfunction_residual",
]

# Two negative rates closer than this (relative to their size) are one
# doubly degenerate state rather than two simple ones.
MULTIPLICITY_TOL = 1e-10


@dataclass(frozen=True)
class BoundState:
    """One point in the negative spectrum.

    ``eigenfunctions`` holds (even, odd) coefficient pairs (u, v) of the
    profile (u + v sgn x) e^{omega |x|}; the energy is tied to the decay
    rate by energy = -omega^2 exactly.
    """

    energy: float
    omega: float
    multiplicity: int
    eigenfunctions: tuple[tuple[complex, complex], ...]

    def __post_init__(self) -> None:
        if not self.omega < 0.0:
            raise DomainError(f"decay rate must be negative, got {self.omega}")
        if self.energy != -(self.omega * self.omega):
            raise DomainError(
                f"energy {self.energy} is not minus the squared rate {self.omega}"
            )
        if self.multiplicity not in (1, 2):
            raise DomainError(f"multiplicity must be 1 or 2, got {self.multiplicity}")
        if len(self.eigenfunctions) != self.multiplicity:
            raise DomainError(
                f"{len(self.eigenfunctions)} eigenfunctions for "
                f"multiplicity {self.multiplicity}"
            )
        for even, odd in self.eigenfunctions:
            if even == 0 and odd == 0:
                raise DomainError("eigenfunction must have nonzero norm")


def _interface_matrix(u: UnitaryInteraction, omega: float) -> np.ndarray:
    j = u.matrix()
    eye = np.eye(2, dtype=complex)
    return (eye - j) - 1j * omega * (eye + j)


def _eigenpair(u: UnitaryInteraction, omega: float, top: bool) -> tuple[complex, complex]:
    ra = u.alpha.real
    r = math.sqrt(max(0.0, 1.0 - ra * ra))
    if r > 0.0:
        s = 1.0 if top else -1.0
        even = complex(1.0 - s * u.beta.imag / r)
        odd = -s * (u.alpha.imag + 1j * u.beta.real) / r
        if abs(even) + abs(odd) > 1e-8:
            return even, odd
    # The closed-form scaling vanishes on the purely-odd ray (and the
    # matrix parameter can be degenerate outright): fall back to a null
    # vector of the interface system itself.
    m = _interface_matrix(u, omega)
    first = np.array([m[0, 1], -m[0, 0]])
    second = np.array([m[1, 1], -m[1, 0]])
    vec = first if np.abs(first).sum() >= np.abs(second).sum() else second
    if np.abs(vec).sum() == 0.0:
        vec = np.array([1.0 + 0.0j, 0.0j])
    right, left = vec
    return complex(0.5 * (right + left)), complex(0.5 * (right - left))


def bound_states(u: UnitaryInteraction) -> list[BoundState]:
    """All negative bound states, read off from the interface coefficients.

    A strictly negative decay rate yields one state; two coinciding
    negative rates collapse into a single doubly degenerate state whose
    eigenspace is spanned by the even and odd profiles.
    """
    if not isinstance(u, UnitaryInteraction):
        raise TypeError(f"expected a UnitaryInteraction, got {type(u).__name__}")
    coeff = coefficients(u)
    om_p, om_m = coeff.omega_plus, coeff.omega_minus
    if (
        om_p < 0.0
        and om_m < 0.0
        and abs(om_p - om_m) < MULTIPLICITY_TOL * max(1.0, abs(om_p))
    ):
        return [
            BoundState(
                energy=-(om_p * om_p),
                omega=om_p,
                multiplicity=2,
                eigenfunctions=((1.0 + 0.0j, 0.0j), (0.0j, 1.0 + 0.0j)),
            )
        ]
    states = []
    for omega, top in ((om_p, True), (om_m, False)):
        if omega < 0.0:
            states.append(
                BoundState(
                    energy=-(omega * omega),
                    omega=omega,
                    multiplicity=1,
                    eigenfunctions=(_eigenpair(u, omega, top),),
                )
            )
    return states


def eigenfunction_residual(u: UnitaryInteraction, state: BoundState) -> float:
    """Worst interface residual over the state's eigenfunctions.

    Each profile (u + v sgn x) e^{omega |x|} is pushed through two
    routes: the jump condition on its one-sided values and slopes, and
    the homogeneous linear system in sqrt(-E).  Returns the largest
    entry magnitude across both.
    """
    if not isinstance(state, BoundState):
        raise TypeError(f"expected a BoundState, got {type(state).__name__}")
    j = u.matrix()
    eye = np.eye(2, dtype=complex)
    minus, plus = eye - j, eye + j
    root = math.sqrt(-state.energy)
    worst = 0.0
    for even, odd in state.eigenfunctions:
        vec = np.array([even + odd, even - odd])
        slopes = state.omega * vec
        jump = minus @ vec - 1j * (plus @ slopes)
        system = minus @ vec + 1j * root * (plus @ vec)
        worst = max(worst, np.abs(jump).max(), np.abs(system).max())
    return float(worst)


def determinant_residual(u: UnitaryInteraction, energy: float) -> float:
    """|det| of the interface system at a trial negative energy.

    Vanishes (to rounding) exactly at bound-state energies, so small
    values certify membership and large values certify absence.
    """
    energy = float(energy)
    if not math.isfinite(energy):
        raise NonFiniteInputError(f"trial energy must be finite, got {energy}")
    if not energy < 0.0:
        raise DomainError(f"trial energy must be negative, got {energy}")
    m = _interface_matrix(u, -math.sqrt(-energy))
    return abs(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])


def _stationary_sum(coeff, rates, side: int, k: float, x: float, t: float) -> complex:
    total = 0.0 + 0.0j
    for omega, mu_table in rates:
        weight = mu_table[SignPair(side, -1)] / (omega - 1j * k)
        weight += mu_table[SignPair(side, 1)] / (omega + 1j * k)
        total -= 2.0 * weight * cmath.exp(omega * abs(x) + 1j * omega * omega * t)
    return total


def asymptotic_consistency(u: UnitaryInteraction, k, x: float, t: float) -> int:
    """Mismatch count between spectrum and long-time persistent modes.

    The negative rates driving the persistent modes of the long-time
    expansion must coincide, as a multiset, with the reported bound-state
    rates; on a match the persistent-mode sum is additionally rebuilt
    from the reported rates and compared numerically at the probe point
    (k, x, t).  Returns 0 on full agreement.
    """
    k = float(k)
    if not math.isfinite(k):
        raise NonFiniteInputError(f"wavenumber must be finite, got {k}")
    if k == 0.0:
        raise DomainError("the probe wavenumber must be nonzero")
    t = _check_time(t)
    x = _check_position(x)

    coeff = coefficients(u)
    negative = [
        (omega, table)
        for omega, table in (
            (coeff.omega_plus, coeff.mu_plus),
            (coeff.omega_minus, coeff.mu_minus),
        )
        if omega < 0.0
    ]
    reported: list[float] = []
    for state in bound_states(u):
        reported.extend([state.omega] * state.multiplicity)

    mismatches = 0
    unmatched = list(reported)
    matched_rates = []
    for omega, table in negative:
        tol = MULTIPLICITY_TOL * max(1.0, abs(omega))
        for i, candidate in enumerate(unmatched):
            if abs(candidate - omega) <= tol:
                matched_rates.append((unmatched.pop(i), table))
                break
        else:
            mismatches += 1
    mismatches += len(unmatched)
    if mismatches:
        return mismatches

    side = 1 if x > 0 else -1
    from_case = _stationary_sum(coeff, negative, side, k, x, t)
    from_spectrum = _stationary_sum(coeff, matched_rates, side, k, x, t)
    scale = max(1.0, abs(psi_asymptotic(u, t, x, k)))
    if abs(from_spectrum - from_case) > 1e-8 * scale:
        return 1
    return 0
