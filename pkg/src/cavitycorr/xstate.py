"""Two-qubit X-form density matrices and canonical initial states.

The states handled throughout this package are two-qubit density matrices
whose only nonzero elements are the four populations and the single
coherence between |10> and |01>.  The basis order is |11>, |10>, |01>,
|00>, with atom A occupying the first tensor slot.  Only the upper
coherence ``c23`` is stored; the lower one is always its complex
conjugate, so Hermiticity holds by construction.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

# Round-off budget for the trace / positivity checks.  The closed-form
# updates are short trig polynomials, so double precision keeps violations
# far below this.
ATOL = 1e-12


@dataclass(frozen=True)
class XState:
    """Validated X-form two-qubit state.

    Use :func:`make_xstate` to construct one; direct construction skips
    every invariant check (the published-coefficient evolution mode relies
    on this to represent its known-inconsistent output).
    """

    p11: float
    p22: float
    p33: float
    p44: float
    c23: complex

    def populations(self) -> tuple[float, float, float, float]:
        return (self.p11, self.p22, self.p33, self.p44)

    def trace(self) -> float:
        return self.p11 + self.p22 + self.p33 + self.p44

    def as_matrix(self) -> np.ndarray:
        """Dense 4x4 complex matrix in the |11>,|10>,|01>,|00> basis."""
        rho = np.zeros((4, 4), dtype=complex)
        rho[0, 0] = self.p11
        rho[1, 1] = self.p22
        rho[2, 2] = self.p33
        rho[3, 3] = self.p44
        rho[1, 2] = self.c23
        rho[2, 1] = np.conj(self.c23)
        return rho


def make_xstate(p11: float, p22: float, p33: float, p44: float,
                c23: complex, atol: float = ATOL) -> XState:
    """Validate and build an :class:`XState`.

    Populations within ``-atol`` of zero are clamped to exactly zero; the
    trace is never renormalized.  Raises ``ValueError`` naming the violated
    constraint otherwise.
    """
    pops = (float(p11), float(p22), float(p33), float(p44))
    c23 = complex(c23)
    for name, p in zip(("p11", "p22", "p33", "p44"), pops):
        if not math.isfinite(p):
            raise ValueError(f"{name} must be finite, got {p!r}")
    if not cmath.isfinite(c23):
        raise ValueError(f"c23 must be finite, got {c23!r}")

    trace = sum(pops)
    if abs(trace - 1.0) > atol:
        raise ValueError(f"trace must be 1 within {atol:g}, got trace = {trace!r}")
    clamped = []
    for name, p in zip(("p11", "p22", "p33", "p44"), pops):
        if p < -atol:
            raise ValueError(f"{name} must be nonnegative within {atol:g}, got {p!r}")
        clamped.append(0.0 if p < 0.0 else p)
    p11, p22, p33, p44 = clamped

    # Positivity of the central 2x2 block; the outer block is diagonal
    # because the |11><00| coherence is identically zero here.
    excess = abs(c23) ** 2 - p22 * p33
    if excess > atol:
        raise ValueError(
            f"|c23|^2 must not exceed p22*p33 within {atol:g}: "
            f"|c23|^2 = {abs(c23)**2!r}, p22*p33 = {p22 * p33!r}"
        )
    return XState(p11, p22, p33, p44, c23)


def werner_state(r: float) -> XState:
    """Werner mixture of the |psi+> Bell state with the maximally mixed state.

    ``r = 0`` gives the maximally mixed state, ``r = 1`` the Bell state.
    The elements are computed in affine form so that
    ``werner_state(r) == r*werner_state(1) + (1-r)*werner_state(0)``
    holds exactly in floating point, element by element.
    """
    r = float(r)
    if not 0.0 <= r <= 1.0:
        raise ValueError(f"mixing parameter r must lie in [0, 1], got {r!r}")
    outer = (1.0 - r) * 0.25
    inner = r * 0.5 + (1.0 - r) * 0.25
    return make_xstate(outer, inner, inner, outer, r * 0.5)


def xstate_eigenvalues(state: XState) -> np.ndarray:
    """Eigenvalues of the X-form matrix, in closed form.

    Returns ``[l0, l1, l2, l3]`` where the first pair comes from the
    diagonal outer block and the second from the central 2x2 block, each
    ordered larger first.  Tiny negatives from round-off are clamped to 0.
    """
    p11, p22, p33, p44 = state.populations()
    outer_sum = p11 + p44
    outer_gap = abs(p11 - p44)
    inner_sum = p22 + p33
    inner_gap = math.sqrt((p22 - p33) ** 2 + 4.0 * abs(state.c23) ** 2)
    lams = np.array([
        0.5 * (outer_sum + outer_gap),
        0.5 * (outer_sum - outer_gap),
        0.5 * (inner_sum + inner_gap),
        0.5 * (inner_sum - inner_gap),
    ])
    return np.where((lams < 0.0) & (lams >= -ATOL), 0.0, lams)
