"""Correlation dynamics of two atoms sequentially crossing a lossless
Fock-state cavity: closed-form X-state evolution with an exact oracle,
concurrence, quantum discord, and collapse-revival analysis."""

from .evolution import (
    EvolutionMode,
    EvolutionParams,
    PublishedFormReport,
    evolve,
    published_form_report,
    trig_coeffs,
)
from .fock import (
    JointFieldState,
    PassOrder,
    embed,
    jc_unitary,
    jc_unitary_apply,
    sequential_pass,
    trace_out_field,
)
from .measures import (
    MeasurementBasis,
    binary_entropy,
    classical_correlation_bruteforce,
    closed_min_conditional_entropy,
    concurrence,
    conditional_entropy_measured,
    discord_bruteforce,
    discord_closed,
    entropy_a,
    entropy_b,
    entropy_joint,
    mutual_information,
)
from .sweep import (
    CorrelationRecord,
    DiscordMethod,
    EventKind,
    RevivalEvent,
    SweepConfig,
    correlation_record,
    detect_collapse_revival,
    envelope,
    first_onset,
    time_series,
)
from .verify import VerificationReport, run_verification, sample_xstate
from .xstate import XState, make_xstate, werner_state, xstate_eigenvalues

__version__ = "0.1.0"

__all__ = [
    "EvolutionMode", "EvolutionParams", "PublishedFormReport", "evolve",
    "published_form_report", "trig_coeffs",
    "JointFieldState", "PassOrder", "embed", "jc_unitary", "jc_unitary_apply",
    "sequential_pass", "trace_out_field",
    "MeasurementBasis", "binary_entropy", "classical_correlation_bruteforce",
    "closed_min_conditional_entropy", "concurrence",
    "conditional_entropy_measured", "discord_bruteforce", "discord_closed",
    "entropy_a", "entropy_b", "entropy_joint", "mutual_information",
    "CorrelationRecord", "DiscordMethod", "EventKind", "RevivalEvent",
    "SweepConfig", "correlation_record", "detect_collapse_revival", "envelope",
    "first_onset", "time_series",
    "VerificationReport", "run_verification", "sample_xstate",
    "XState", "make_xstate", "werner_state", "xstate_eigenvalues",
]
