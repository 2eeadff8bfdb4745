"""Time series of correlation measures over Rabi-angle grids, plus
collapse-revival detection on their envelopes."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .evolution import EvolutionMode, EvolutionParams, evolve
from .measures import (
    closed_min_conditional_entropy,
    concurrence,
    discord_closed,
    entropy_a,
    entropy_b,
    entropy_joint,
    mutual_information,
    _min_conditional_entropy,
)
from .xstate import XState, werner_state


class DiscordMethod(Enum):
    CLOSED_FORM = "closed"
    BRUTE_FORCE = "brute"


@dataclass(frozen=True)
class CorrelationRecord:
    """All correlation measures of one state at one grid point."""

    gt: float
    state: XState
    concurrence: float
    discord: float
    classical_correlation: float
    mutual_information: float
    discord_method: DiscordMethod

    def __post_init__(self):
        vals = (self.concurrence, self.discord,
                self.classical_correlation, self.mutual_information)
        if any(not math.isfinite(v) for v in vals):
            raise ValueError(f"correlation values must be finite, got {vals}")
        if any(v < -1e-9 for v in vals):
            raise ValueError(f"correlation values must be >= -1e-9, got {vals}")
        if self.discord > self.mutual_information + 1e-9:
            raise ValueError(
                f"discord {self.discord!r} exceeds mutual information "
                f"{self.mutual_information!r} beyond 1e-9"
            )


@dataclass(frozen=True)
class SweepConfig:
    n: int
    r: float
    gt_max: float
    steps: int
    discord_method: DiscordMethod = DiscordMethod.CLOSED_FORM
    mode: EvolutionMode = EvolutionMode.CORRECTED
    grid_points: int = 128

    def __post_init__(self):
        if not isinstance(self.steps, (int, np.integer)) or self.steps < 1:
            raise ValueError(f"steps must be an integer >= 1, got {self.steps!r}")
        if not math.isfinite(self.gt_max) or self.gt_max <= 0.0:
            raise ValueError(f"gt_max must be finite and positive, got {self.gt_max!r}")
        if not isinstance(self.n, (int, np.integer)) or self.n < 0:
            raise ValueError(f"n must be a nonnegative integer, got {self.n!r}")
        if not 0.0 <= self.r <= 1.0:
            raise ValueError(f"r must lie in [0, 1], got {self.r!r}")


class EventKind(Enum):
    COLLAPSE = "collapse"
    REVIVAL = "revival"


@dataclass(frozen=True)
class RevivalEvent:
    kind: EventKind
    gt_start: float
    gt_end: float
    peak_value: float

    def __post_init__(self):
        if self.gt_start > self.gt_end:
            raise ValueError(f"event must have gt_start <= gt_end, got "
                             f"[{self.gt_start!r}, {self.gt_end!r}]")


def correlation_record(gt: float, state: XState,
                       method: DiscordMethod = DiscordMethod.CLOSED_FORM,
                       grid_points: int = 128) -> CorrelationRecord:
    """Evaluate every correlation measure of one state.

    Both routes derive discord and classical correlation from the same
    minimized conditional entropy, so their sum equals the mutual
    information identically.
    """
    if method is DiscordMethod.BRUTE_FORCE:
        m, _ = _min_conditional_entropy(state, grid_points)
        disc = entropy_b(state) - entropy_joint(state) + m
        if -1e-9 <= disc < 0.0:
            disc = 0.0
    else:
        m = closed_min_conditional_entropy(state)
        disc = discord_closed(state)
    return CorrelationRecord(
        gt=gt,
        state=state,
        concurrence=concurrence(state),
        discord=disc,
        classical_correlation=entropy_a(state) - m,
        mutual_information=mutual_information(state),
        discord_method=method,
    )


def time_series(cfg: SweepConfig) -> list[CorrelationRecord]:
    """One record per grid point gt_i = i*gt_max/steps, i = 0..steps."""
    initial = werner_state(cfg.r)
    records = []
    for i in range(cfg.steps + 1):
        gt = i * cfg.gt_max / cfg.steps
        state = evolve(initial, EvolutionParams(cfg.n, gt), cfg.mode)
        records.append(correlation_record(gt, state, cfg.discord_method,
                                          cfg.grid_points))
    return records


def envelope(series, window: float) -> list[tuple[float, float]]:
    """Sliding-window maximum centered at each grid point.

    ``series`` is a sorted sequence of (gt, value) pairs; windows are
    truncated at the ends of the series.
    """
    if len(series) == 0:
        raise ValueError("envelope of an empty series is undefined")
    gts = np.asarray([p[0] for p in series], dtype=float)
    vals = np.asarray([p[1] for p in series], dtype=float)
    if window <= 0.0:
        raise ValueError(f"window must be positive, got {window!r}")
    if window >= gts[-1] - gts[0]:
        raise ValueError(f"window {window!r} must be smaller than the gt span")
    half = window / 2.0
    lo = np.searchsorted(gts, gts - half, side="left")
    hi = np.searchsorted(gts, gts + half, side="right")
    out = [float(vals[a:b].max()) for a, b in zip(lo, hi)]
    return list(zip(gts.tolist(), out))


def detect_collapse_revival(env, collapse_threshold: float,
                            min_duration: float) -> list[RevivalEvent]:
    """Alternating collapse/revival events of an envelope series.

    A collapse is a maximal run of points below the threshold whose gt
    span is at least ``min_duration``.  Shorter dips do not count and are
    absorbed into the surrounding activity.  Every maximal stretch between
    qualifying collapses (including one before the first and one after the
    last) is a revival; a series with no qualifying collapse yields no
    events at all.
    """
    if collapse_threshold <= 0.0 or min_duration <= 0.0:
        raise ValueError("collapse_threshold and min_duration must be positive")
    gts = np.asarray([p[0] for p in env], dtype=float)
    vals = np.asarray([p[1] for p in env], dtype=float)
    below = vals < collapse_threshold

    collapses = []
    i = 0
    npts = len(vals)
    while i < npts:
        if below[i]:
            j = i
            while j + 1 < npts and below[j + 1]:
                j += 1
            if gts[j] - gts[i] >= min_duration:
                collapses.append((i, j))
            i = j + 1
        else:
            i += 1
    if not collapses:
        return []

    events = []
    prev_end = -1
    for k, (i, j) in enumerate(collapses):
        if i > prev_end + 1:
            a, b = prev_end + 1, i - 1
            events.append(RevivalEvent(EventKind.REVIVAL, float(gts[a]),
                                       float(gts[b]), float(vals[a:b + 1].max())))
        events.append(RevivalEvent(EventKind.COLLAPSE, float(gts[i]),
                                   float(gts[j]), float(vals[i:j + 1].max())))
        prev_end = j
    if prev_end + 1 < npts:
        a = prev_end + 1
        events.append(RevivalEvent(EventKind.REVIVAL, float(gts[a]),
                                   float(gts[-1]), float(vals[a:].max())))
    return events


def first_onset(series, eps: float = 1e-3):
    """Smallest grid gt whose value exceeds eps, or None."""
    if eps <= 0.0:
        raise ValueError(f"eps must be positive, got {eps!r}")
    for gt, value in series:
        if value > eps:
            return float(gt)
    return None
