"""Command-line front end: error sweeps, Lebesgue sweeps, pyramid files and
basis samples as deterministic CSV/JSON artifacts.

Exit codes: 0 on success, 2 on argument/domain errors, 3 on inconsistent
pyramid data.
"""

import argparse
import json
import sys

import numpy as np

from . import __version__, bases
from .bases import ortho_to_values
from .chebyshev import cheb_nodes, eval_series, probe_grid
from .filters import VPLevel
from .functions import get_function
from .mra import (
    PyramidError,
    decompose_multi,
    pyramid_from_json,
    pyramid_to_json,
    reconstruct_multi,
    redecompose,
)
from .operators import LebesgueKind, OperatorKind, error_curve, lebesgue_const

_BASIS_FAMILIES = ("phi", "phi-ortho", "psi", "psi-ortho", "q", "q-tilde")


def _fmt(x: float) -> str:
    return repr(float(x))


def _parse_int_list(text: str) -> list[int]:
    """Either a single integer or an inclusive range start:step:stop."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"bad range {text!r}, expected start:step:stop")
        start, step, stop = (int(p) for p in parts)
        if step <= 0 or stop < start:
            raise ValueError(f"bad range {text!r}")
        return list(range(start, stop + 1, step))
    return [int(text)]


def _parse_theta_list(text: str) -> list[float]:
    thetas = [float(p) for p in text.split(",") if p]
    if not thetas:
        raise ValueError("empty theta list")
    for t in thetas:
        if not 0.0 < t < 1.0:
            raise ValueError(f"theta must lie in (0, 1), got {t}")
    return thetas


def _write_text(path: str, text: str) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(text)


def cmd_error(args) -> int:
    f = get_function(args.f)
    kind = OperatorKind(args.op)
    thetas = _parse_theta_list(args.theta)
    n_list = _parse_int_list(args.n)
    lines = ["theta,n,m,error"]
    for theta in thetas:
        for point in error_curve(f, kind, theta, n_list, grid_size=args.grid):
            lines.append(f"{_fmt(theta)},{point.n},{point.m},{_fmt(point.error)}")
    _write_text(args.out, "\n".join(lines) + "\n")
    meta = {
        "function": args.f,
        "operator": kind.value,
        "grid_size": args.grid,
        "probe_grid": "cos(j*pi/M), j = 0..M",
    }
    _write_text(args.out + ".meta.json", json.dumps(meta, indent=1) + "\n")
    return 0


def cmd_lebesgue(args) -> int:
    kind = LebesgueKind(args.kind)
    thetas = _parse_theta_list(args.theta)
    n_list = _parse_int_list(args.n)
    lines = ["theta,n,m,value"]
    meta_rows = []
    for theta in thetas:
        for n in n_list:
            level = VPLevel.from_theta(n, theta)
            report = lebesgue_const(level, kind, grid_size=args.grid)
            lines.append(f"{_fmt(theta)},{n},{level.m},{_fmt(report.value)}")
            meta_rows.append({"theta": theta, "n": n, "m": level.m,
                              "quad_spec": report.quad_spec})
    _write_text(args.out, "\n".join(lines) + "\n")
    meta = {
        "kind": kind.value,
        "grid_size": args.grid,
        "probe_grid": "cos(j*pi/M), j = 0..M",
        "rows": meta_rows,
    }
    _write_text(args.out + ".meta.json", json.dumps(meta, indent=1) + "\n")
    return 0


def _read_samples(path: str) -> np.ndarray:
    try:
        with open(path) as fh:
            values = [float(line.strip()) for line in fh if line.strip()]
    except OSError as exc:
        raise ValueError(f"cannot read sample file {path!r}: {exc}") from exc
    except ValueError as exc:
        raise ValueError(f"malformed sample file {path!r}: {exc}") from exc
    if not values:
        raise ValueError(f"sample file {path!r} is empty")
    return np.asarray(values, dtype=float)


def cmd_decompose(args) -> int:
    n_top = args.n0 * 3 ** args.levels
    if args.f is not None:
        samples = get_function(args.f)(cheb_nodes(n_top).nodes)
    else:
        samples = _read_samples(args.samples)
        if samples.size != n_top:
            raise ValueError(f"sample file holds {samples.size} values, "
                             f"need n0 * 3^L = {n_top}")
    decomp = decompose_multi(samples, args.n0, args.levels, args.theta)
    _write_text(args.out, pyramid_to_json(decomp) + "\n")
    return 0


def cmd_reconstruct(args) -> int:
    try:
        with open(args.pyramid) as fh:
            decomp = pyramid_from_json(fh.read())
    except OSError as exc:
        raise PyramidError(f"cannot read pyramid file {args.pyramid!r}: {exc}") from exc
    top = reconstruct_multi(decomp)
    again = redecompose(top, decomp)
    deviation = float(np.max(np.abs(decomp.base.a - again.base.a)))
    for d, e in zip(decomp.details, again.details):
        deviation = max(deviation, float(np.max(np.abs(d.b - e.b))))
    samples = ortho_to_values(top)
    _write_text(args.out, "\n".join(_fmt(v) for v in samples) + "\n")
    print(f"round-trip deviation: {_fmt(deviation)}")
    return 0


def cmd_basis(args) -> int:
    level = VPLevel(args.n, args.m)
    index_kind = "r" if args.family in ("q", "q-tilde") else "k"
    idx = getattr(args, index_kind)
    if idx is None:
        raise ValueError(f"family {args.family!r} needs --{index_kind}")
    builders = {
        "phi": bases.scaling_interp,
        "phi-ortho": bases.scaling_ortho,
        "psi": bases.wavelet_interp,
        "psi-ortho": bases.wavelet_ortho,
        "q": bases.approx_basis,
        "q-tilde": bases.detail_basis,
    }
    exp = builders[args.family](level, idx)
    xs = probe_grid(args.grid)
    vals = eval_series(exp.coeffs, xs)
    lines = ["x,value"]
    lines.extend(f"{_fmt(x)},{_fmt(v)}" for x, v in zip(xs, vals))
    _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vpwave",
        description="Experiments with de la Vallee Poussin scaling/wavelet bases",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("error", help="sup-norm error sweep of an approximant")
    p.add_argument("--f", required=True, help="registry function name")
    p.add_argument("--op", required=True, choices=[k.value for k in OperatorKind])
    p.add_argument("--theta", required=True, help="comma-separated list in (0, 1)")
    p.add_argument("--n", required=True, help="single value or start:step:stop")
    p.add_argument("--grid", type=int, default=10000, help="probe grid size M")
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(func=cmd_error)

    p = sub.add_parser("lebesgue", help="Lebesgue constant sweep")
    p.add_argument("--kind", required=True, choices=[k.value for k in LebesgueKind])
    p.add_argument("--theta", required=True)
    p.add_argument("--n", required=True)
    p.add_argument("--grid", type=int, default=10000)
    p.add_argument("--out", required=True,
                   help="output CSV path (settings go to <out>.meta.json)")
    p.set_defaults(func=cmd_lebesgue)

    p = sub.add_parser("decompose", help="build a pyramid JSON file")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--f", help="registry function name")
    src.add_argument("--samples", help="one-column CSV of samples in node order")
    p.add_argument("--n0", type=int, required=True, help="base resolution")
    p.add_argument("--levels", type=int, required=True, help="number of splits L")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--out", required=True, help="output JSON path")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("reconstruct", help="rebuild samples from a pyramid file")
    p.add_argument("--pyramid", required=True, help="pyramid JSON path")
    p.add_argument("--out", required=True, help="output one-column CSV path")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("basis", help="sample one basis function on the probe grid")
    p.add_argument("--family", required=True, choices=_BASIS_FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, help="node index (phi/psi families)")
    p.add_argument("--r", type=int, help="degree (q families)")
    p.add_argument("--grid", type=int, default=10000)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_basis)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PyramidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
