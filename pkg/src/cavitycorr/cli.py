"""Command line interface: evolution sweeps, verification, envelope analysis.

Exit codes: 0 success, 1 usage or configuration error, 2 verification
failure, 3 I/O failure.
"""
from __future__ import annotations

import argparse
import sys

from .evolution import EvolutionMode
from .sweep import (
    CorrelationRecord,
    DiscordMethod,
    SweepConfig,
    detect_collapse_revival,
    envelope,
    time_series,
)
from .verify import run_verification
from .xstate import make_xstate

CSV_HEADER = ("gt,n,r,p11,p22,p33,p44,re_c23,im_c23,"
              "concurrence,discord,classical_corr,mutual_info")
EVENT_HEADER = "kind,gt_start,gt_end,peak_value"

_MODES = {"corrected": EvolutionMode.CORRECTED, "paper": EvolutionMode.PUBLISHED}
_METHODS = {"closed": DiscordMethod.CLOSED_FORM, "brute": DiscordMethod.BRUTE_FORCE}


def _fmt(v: float) -> str:
    # 12 significant digits; normalize -0.0 so output is byte-stable
    return f"{v + 0.0 if v != 0.0 else 0.0:.12g}"


def format_record(record: CorrelationRecord, n: int, r: float) -> str:
    s = record.state
    fields = [_fmt(record.gt), str(int(n)), _fmt(r),
              _fmt(s.p11), _fmt(s.p22), _fmt(s.p33), _fmt(s.p44),
              _fmt(s.c23.real), _fmt(s.c23.imag),
              _fmt(record.concurrence), _fmt(record.discord),
              _fmt(record.classical_correlation), _fmt(record.mutual_information)]
    return ",".join(fields)


def parse_record(line: str, method: DiscordMethod = DiscordMethod.CLOSED_FORM
                 ) -> tuple[CorrelationRecord, int, float]:
    """Parse one CSV data row back into a record.

    The 12-digit CSV quantization can push the trace a shade past the
    construction tolerance, so parsed states are validated at 1e-9.
    """
    parts = line.strip().split(",")
    if len(parts) != 13:
        raise ValueError(f"expected 13 CSV fields, got {len(parts)}")
    vals = [float(p) for p in parts]
    state = make_xstate(vals[3], vals[4], vals[5], vals[6],
                        complex(vals[7], vals[8]), atol=1e-9)
    record = CorrelationRecord(gt=vals[0], state=state, concurrence=vals[9],
                               discord=vals[10], classical_correlation=vals[11],
                               mutual_information=vals[12], discord_method=method)
    return record, int(vals[1]), vals[2]


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; the CLI contract wants 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="cavitycorr",
                     description="Correlation dynamics of two atoms crossing "
                                 "a lossless Fock-state cavity")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("evolve", help="CSV time series of one sweep")
    ev.add_argument("--n", type=int, required=True, help="initial photon number")
    ev.add_argument("--r", type=float, required=True, help="Werner mixing parameter")
    ev.add_argument("--gt-max", type=float, required=True, help="largest Rabi angle")
    ev.add_argument("--steps", type=int, required=True, help="number of grid steps")
    ev.add_argument("--discord", choices=sorted(_METHODS), default="closed",
                    help="discord evaluation route (default: closed)")
    ev.add_argument("--mode", choices=sorted(_MODES), default="corrected",
                    help="evolution coefficient set; 'paper' selects the legacy "
                         "published set (known inconsistent, diagnostics only)")
    ev.add_argument("--out", help="output path (default: stdout)")

    vf = sub.add_parser("verify", help="cross-check closed forms against oracles")
    vf.add_argument("--samples", type=int, required=True)
    vf.add_argument("--seed", type=int, required=True)
    vf.add_argument("--n-max", type=int, default=12)
    vf.add_argument("--gt-max", type=float, default=20.0)
    vf.add_argument("--tol-evolve", type=float, default=1e-10)
    vf.add_argument("--tol-discord", type=float, default=0.0026)

    en = sub.add_parser("envelope", help="CSV of collapse/revival events")
    en.add_argument("--n", type=int, required=True)
    en.add_argument("--r", type=float, required=True)
    en.add_argument("--gt-max", type=float, required=True)
    en.add_argument("--steps", type=int, required=True)
    en.add_argument("--measure", choices=["discord", "concurrence"], required=True)
    en.add_argument("--window", type=float, default=2.0)
    en.add_argument("--threshold", type=float, default=0.02)
    en.add_argument("--min-duration", type=float, default=1.0)
    en.add_argument("--out", help="output path (default: stdout)")
    return parser


def _write_lines(lines, out_path):
    text = "\n".join(lines) + "\n"
    if out_path is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"cavitycorr: cannot write {out_path}: {exc}", file=sys.stderr)
        return 3
    return 0


def cmd_evolve(args) -> int:
    cfg = SweepConfig(n=args.n, r=args.r, gt_max=args.gt_max, steps=args.steps,
                      discord_method=_METHODS[args.discord], mode=_MODES[args.mode])
    records = time_series(cfg)
    lines = [CSV_HEADER] + [format_record(rec, cfg.n, cfg.r) for rec in records]
    return _write_lines(lines, args.out)


def cmd_verify(args) -> int:
    report = run_verification(samples=args.samples, seed=args.seed,
                              n_max=args.n_max, gt_max=args.gt_max,
                              tol_evolve=args.tol_evolve,
                              tol_discord=args.tol_discord)
    sys.stdout.write(report.render())
    return 0 if report.passed else 2


def cmd_envelope(args) -> int:
    cfg = SweepConfig(n=args.n, r=args.r, gt_max=args.gt_max, steps=args.steps)
    records = time_series(cfg)
    series = [(rec.gt, getattr(rec, args.measure)) for rec in records]
    env = envelope(series, args.window)
    events = detect_collapse_revival(env, args.threshold, args.min_duration)
    lines = [EVENT_HEADER]
    for e in events:
        lines.append(",".join([e.kind.value, _fmt(e.gt_start), _fmt(e.gt_end),
                               _fmt(e.peak_value)]))
    return _write_lines(lines, args.out)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "evolve":
            return cmd_evolve(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_envelope(args)
    except ValueError as exc:
        print(f"cavitycorr: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"cavitycorr: I/O error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
