"""Command-line interface.

Exit codes: 0 success, 1 input channel fails the CPTP check, 2 usage error,
3 numerical failure (defective peripheral cluster, unmatched spectrum, ...).
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .channel import ChannelError, KrausChannel, load_channel, to_superoperator, validate_cptp
from .classify import classify
from .hamiltonian import random_hamiltonian
from .harness import FIGURE_IDS, SweepConfig, reproduce, resolve_channel, sweep, write_records_csv
from .linalg import LinalgError
from .spectral import SpectralError, analyze_peripheral
from .zeno import dd_check, suppression_check, zeno_hamiltonian
from .zoo import builtin, names

EXIT_OK = 0
EXIT_NOT_CPTP = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


def _load(spec: str) -> KrausChannel:
    try:
        return resolve_channel(spec)
    except (FileNotFoundError, json.JSONDecodeError, KeyError, ChannelError) as exc:
        raise UsageError(f"cannot load channel {spec!r}: {exc}") from exc


class UsageError(Exception):
    pass


def _require_cptp(ch: KrausChannel) -> None:
    report = validate_cptp(ch)
    if not report.passed:
        print(
            f"channel is not CPTP: trace residual {report.trace_residual:.3e}, "
            f"positivity residual {report.positivity_residual:.3e}",
            file=sys.stderr,
        )
        raise SystemExit(EXIT_NOT_CPTP)


def _load_hamiltonian(spec: str, dim: int) -> np.ndarray:
    if spec.startswith("random:"):
        try:
            seed = int(spec.split(":", 1)[1])
        except ValueError as exc:
            raise UsageError(f"bad random Hamiltonian seed in {spec!r}") from exc
        return random_hamiltonian(dim, seed)
    try:
        data = json.loads(open(spec).read())
        h = np.array(
            [[complex(re, im) for re, im in row] for row in data["matrix"]],
            dtype=complex,
        )
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot load Hamiltonian {spec!r}: {exc}") from exc
    if h.shape != (dim, dim):
        raise UsageError(f"Hamiltonian shape {h.shape} does not match dim {dim}")
    return h


def _cmd_classify(args) -> int:
    ch = _load(args.channel)
    _require_cptp(ch)
    c = classify(to_superoperator(ch), name=ch.name or args.channel, tol=args.tol)
    print(json.dumps(c.to_record(), indent=1))
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    ch = _load(args.channel)
    _require_cptp(ch)
    dec = analyze_peripheral(to_superoperator(ch), tol=args.tol)
    out = {
        "dim": dec.dim,
        "dim_fixed": dec.dim_fixed,
        "dim_recurrent": dec.dim_recurrent,
        "peripheral_values": [[float(v.real), float(v.imag)] for v in dec.peripheral_values],
        "multiplicities": [int(m) for m in dec.multiplicities],
    }
    print(json.dumps(out, indent=1))
    return EXIT_OK


def _cmd_dd_check(args) -> int:
    ch = _load(args.channel)
    _require_cptp(ch)
    s2 = to_superoperator(ch)
    h = _load_hamiltonian(args.hamiltonian, args.d1 * ch.dim)
    verdict = dd_check(s2, h, args.d1, tol=args.tol)
    out = {
        "works": verdict.works,
        "residual": verdict.residual,
        "kick_ergodic": verdict.kick_ergodic,
        "coefficients": list(verdict.coefficients) if verdict.coefficients is not None else None,
    }
    print(json.dumps(out, indent=1))
    return EXIT_OK


def _cmd_zeno_check(args) -> int:
    ch = _load(args.channel)
    _require_cptp(ch)
    s = to_superoperator(ch)
    h = _load_hamiltonian(args.hamiltonian, ch.dim)
    dec = analyze_peripheral(s)
    h_z = zeno_hamiltonian(dec, h)
    norm = float(np.linalg.norm(h_z.matrix))
    out = {
        "suppressed": suppression_check(s, h, tol=args.tol),
        "zeno_hamiltonian_norm": norm,
    }
    print(json.dumps(out, indent=1))
    return EXIT_OK


def _cmd_sweep(args) -> int:
    try:
        cfg = SweepConfig.from_dict(json.loads(open(args.config).read()))
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"bad sweep config {args.config!r}: {exc}") from exc
    ch = _load(cfg.channel)
    _require_cptp(ch)
    records = sweep(cfg)
    from pathlib import Path

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    out_path = out_dir / "sweep.csv"
    write_records_csv(records, out_path)
    print(out_path)
    return EXIT_OK


def _cmd_reproduce(args) -> int:
    for path in reproduce(args.figure, args.out):
        print(path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bathdd",
        description="Spectral analysis of quantum channels: classification, "
        "bath dynamical decoupling, and Zeno Hamiltonian suppression.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_channel(p):
        p.add_argument(
            "channel",
            help=f"channel JSON file or zoo:NAME (available: {', '.join(names())})",
        )

    p = sub.add_parser("classify", help="ergodic/mixing/irreducible/DFS-free profile")
    add_channel(p)
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("spectrum", help="peripheral eigenvalues and multiplicities")
    add_channel(p)
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("dd-check", help="does bath dynamical decoupling work?")
    add_channel(p)
    p.add_argument("--hamiltonian", required=True, help="JSON file or random:SEED")
    p.add_argument("--d1", type=int, default=2, help="system dimension")
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=_cmd_dd_check)

    p = sub.add_parser("zeno-check", help="is the Zeno Hamiltonian suppressed?")
    add_channel(p)
    p.add_argument("--hamiltonian", required=True, help="JSON file or random:SEED")
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=_cmd_zeno_check)

    p = sub.add_parser("sweep", help="run a sweep from a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("reproduce", help="recompute a reference figure's data")
    p.add_argument("figure", choices=FIGURE_IDS)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses exit code 2 for usage errors already
        raise SystemExit(EXIT_USAGE if exc.code else EXIT_OK)
    try:
        return args.func(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except (SpectralError, LinalgError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    raise SystemExit(main())
