"""Closed-form update of an X state after both atoms have crossed the cavity.

Each matrix element of the two-atom state after the two sequential
passes is a trig polynomial in the Rabi angle, with coefficients indexed
by the initial photon number.  Two coefficient sets are provided:

* ``CORRECTED`` -- the set derived from the exact sequential model (see
  ``docs/evolution_coefficients.md``); it preserves trace and positivity
  and matches the Fock-space oracle to machine precision.
* ``PUBLISHED`` -- a legacy variant that differs in two coefficients.  It
  drifts the trace and breaks Hermiticity for states with a nonzero
  coherence, and is retained only so the defect can be demonstrated;
  use :func:`published_form_report` for its diagnostics.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .xstate import XState, make_xstate

# Drift beyond this marks the published coefficient set as inconsistent
# for a given input; well above round-off, well below the defect size.
DIAGNOSTIC_TOL = 1e-9


@dataclass(frozen=True)
class EvolutionParams:
    """Initial photon number and Rabi angle of one double passage."""

    n: int
    gt: float

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or isinstance(self.n, bool):
            raise ValueError(f"photon number n must be an integer, got {self.n!r}")
        if self.n < 0:
            raise ValueError(f"photon number n must be nonnegative, got {self.n}")
        if not math.isfinite(self.gt):
            raise ValueError(f"Rabi angle gt must be finite, got {self.gt!r}")


class EvolutionMode(Enum):
    CORRECTED = "corrected"
    PUBLISHED = "published"


def trig_coeffs(m: int, gt: float) -> tuple[float, float]:
    """(cos(sqrt(m)*gt), sin(sqrt(m)*gt)) with the m = -1 convention (1, 0).

    The m = -1 case only ever appears multiplied by sin(sqrt(0)*gt)^2 = 0,
    so any finite convention is inert; (1, 0) keeps the formulas total.
    """
    if not isinstance(m, (int, np.integer)) or isinstance(m, bool):
        raise ValueError(f"index m must be an integer, got {m!r}")
    if m < -1:
        raise ValueError(f"index m must be >= -1, got {m}")
    if m == -1:
        return (1.0, 0.0)
    angle = math.sqrt(m) * gt
    return (math.cos(angle), math.sin(angle))


def _update(state: XState, params: EvolutionParams, published: bool):
    """Raw element update; returns populations, c23 row, c32 row."""
    n, gt = params.n, params.gt
    cm, sm = trig_coeffs(n - 1, gt)
    c0, s0 = trig_coeffs(n, gt)
    c1, s1 = trig_coeffs(n + 1, gt)
    c2, s2 = trig_coeffs(n + 2, gt)
    p11, p22, p33, p44 = state.populations()
    c23 = state.c23
    x = 2.0 * c23.real  # c23 + conj(c23)

    q11 = (p11 * c1**4 + p22 * s0**2 * c1**2 + p33 * s0**2 * c0**2
           + p44 * s0**2 * sm**2 + x * s0**2 * c1 * c0)
    q22 = (p11 * s1**2 * c1**2 + p22 * c0**2 * c1**2 + p33 * s0**4
           + p44 * s0**2 * cm**2 - x * s0**2 * c1 * c0)
    q33 = (p11 * s1**2 * c2**2 + p22 * s1**4 + p33 * c1**2 * c0**2
           + p44 * s0**2 * c0**2 - x * s1**2 * c1 * c0)
    # The published set carries s0^2 here instead of s1^2, which breaks
    # trace preservation whenever Re(c23) != 0.
    w44 = s0**2 if published else s1**2
    q44 = (p11 * s1**2 * s2**2 + p22 * s1**2 * c1**2 + p33 * s1**2 * c0**2
           + p44 * c0**4 + x * w44 * c1 * c0)
    q23 = (p11 * s1**2 * c1 * c2 - p22 * s1**2 * c1 * c0 - p33 * s0**2 * c1 * c0
           + p44 * s0**2 * c0 * cm + c23 * c1**2 * c0**2
           + np.conj(c23) * s1**2 * s0**2)
    # Lower-coherence row; the published set carries s2^2 on the p22 term
    # instead of s1^2, so it is not the conjugate of the row above.
    w32 = s2**2 if published else s1**2
    q32 = (p11 * s1**2 * c1 * c2 - p22 * w32 * c1 * c0 - p33 * s0**2 * c1 * c0
           + p44 * s0**2 * c0 * cm + c23 * s1**2 * s0**2
           + np.conj(c23) * c1**2 * c0**2)
    return (q11, q22, q33, q44), q23, q32


def evolve(state: XState, params: EvolutionParams,
           mode: EvolutionMode = EvolutionMode.CORRECTED) -> XState:
    """X state after both atoms have crossed the cavity once each.

    In ``CORRECTED`` mode the result is validated and is a proper state for
    every valid input.  In ``PUBLISHED`` mode the raw element values are
    returned unchecked, since that coefficient set violates the state
    invariants for inputs with Re(c23) != 0.
    """
    published = mode is EvolutionMode.PUBLISHED
    pops, q23, _ = _update(state, params, published)
    if published:
        return XState(*pops, q23)
    return make_xstate(*pops, q23)


@dataclass(frozen=True)
class PublishedFormReport:
    """Raw published-mode output plus how badly it violates state invariants."""

    state: XState            # unchecked; upper coherence taken from the c23 row
    trace_drift: float       # |trace - 1|
    hermiticity_drift: float  # |c32 row - conj(c23 row)|
    min_population: float
    coherence_excess: float  # max(0, |c23|^2 - p22*p33)

    @property
    def flag(self) -> bool:
        """True when any invariant is violated beyond the diagnostic tolerance."""
        return (self.trace_drift > DIAGNOSTIC_TOL
                or self.hermiticity_drift > DIAGNOSTIC_TOL
                or self.min_population < -DIAGNOSTIC_TOL
                or self.coherence_excess > DIAGNOSTIC_TOL)


def published_form_report(state: XState, params: EvolutionParams) -> PublishedFormReport:
    """Evaluate the published coefficient set and report its inconsistencies."""
    pops, q23, q32 = _update(state, params, published=True)
    return PublishedFormReport(
        state=XState(*pops, q23),
        trace_drift=abs(sum(pops) - 1.0),
        hermiticity_drift=abs(q32 - np.conj(q23)),
        min_population=min(pops),
        coherence_excess=max(0.0, abs(q23) ** 2 - pops[1] * pops[2]),
    )
