"""Command-line interface.

Subcommands: distance, validate, kernel, diagnose, net.  All results go to
stdout as JSON with insertion-ordered keys and computed values rounded to 12
significant digits, so identical inputs produce byte-identical output.
Exit codes: 0 success (and passing verdicts), 1 failing verdicts, 2 parse or
configuration errors (reported on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .diagnostics import greedy_epsilon_net, precompactness_report
from .fuzzy import LABEL_NEITHER, alpha_cut, classify
from .geometry import Interval, polygon_kernel
from .metric import dp_distance
from .serialize import parse_config, parse_fuzzy


def _display(x):
    """Round display values to 12 significant digits for stable output."""
    if isinstance(x, float):
        return float(f"{x:.12g}")
    if isinstance(x, list):
        return [_display(v) for v in x]
    if isinstance(x, dict):
        return {k: _display(v) for k, v in x.items()}
    return x


def _emit(obj) -> None:
    print(json.dumps(_display(obj), indent=2))


def _load_fuzzy(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ValueError(f"{path}: {exc}") from None
    try:
        return parse_fuzzy(text)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from None


def _load_family(directory: str):
    root = Path(directory)
    if not root.is_dir():
        raise ValueError(f"{directory}: not a directory")
    files = sorted(root.glob("*.json"))
    if not files:
        raise ValueError(f"{directory}: no *.json family members found")
    return [f.name for f in files], [_load_fuzzy(str(f)) for f in files]


def _cmd_distance(args) -> int:
    u = _load_fuzzy(args.file_a)
    v = _load_fuzzy(args.file_b)
    value, error_bound = dp_distance(u, v, args.p, args.spacing)
    _emit({"value": value, "error_bound": error_bound})
    return 0


def _cmd_validate(args) -> int:
    u = _load_fuzzy(args.file)
    report = classify(u, args.p)
    _emit(report.as_dict())
    return 0 if report.label != LABEL_NEITHER else 1


def _cmd_kernel(args) -> int:
    u = _load_fuzzy(args.file)
    cut = alpha_cut(u, args.alpha)
    if isinstance(cut, Interval):
        # an interval is convex, hence its own kernel
        _emit({"type": "interval", "a": cut.a, "b": cut.b})
        return 0
    result = polygon_kernel(cut)
    if result.empty:
        _emit({"empty": True})
        return 0
    _emit(
        {
            "type": "polygon",
            "vertices": [[x, y] for x, y in result.vertices],
            "degenerate": result.degenerate,
        }
    )
    return 0


def _cmd_diagnose(args) -> int:
    try:
        config = parse_config(Path(args.config).read_text())
    except OSError as exc:
        raise ValueError(f"{args.config}: {exc}") from None
    except ValueError as exc:
        raise ValueError(f"{args.config}: {exc}") from None
    names, family = _load_family(args.directory)
    report = precompactness_report(
        family,
        config.p,
        config.h_grid,
        config.bound_threshold,
        config.eps,
        config.spacing,
    )
    payload = report.as_dict()
    payload["members"] = names
    _emit(payload)
    return 0 if report.consistent else 1


def _cmd_net(args) -> int:
    names, family = _load_family(args.directory)
    net = greedy_epsilon_net(family, args.eps, args.p, args.spacing)
    _emit(
        {
            "eps": net.eps,
            "p": args.p,
            "representatives": [names[i] for i in net.representatives],
            "assignment": [
                {"member": names[i], "representative": names[rep], "distance": d}
                for i, (rep, d) in enumerate(net.assignment)
            ],
        }
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzystar",
        description="Fuzzy star-shaped numbers under the level-set L_p metric.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("distance", help="L_p distance between two elements")
    d.add_argument("--p", type=float, required=True)
    d.add_argument("--spacing", type=float, default=1e-3, help="polygon boundary sampling pitch")
    d.add_argument("file_a")
    d.add_argument("file_b")
    d.set_defaults(func=_cmd_distance)

    v = sub.add_parser("validate", help="classify an element (exit 1 when Neither)")
    v.add_argument("--p", type=float, required=True)
    v.add_argument("file")
    v.set_defaults(func=_cmd_validate)

    k = sub.add_parser("kernel", help="kernel of the cut at a given alpha")
    k.add_argument("--alpha", type=float, required=True)
    k.add_argument("file")
    k.set_defaults(func=_cmd_kernel)

    g = sub.add_parser("diagnose", help="precompactness evidence for a family directory")
    g.add_argument("--config", required=True, help="JSON file with p, h_grid, bound_threshold, eps, spacing")
    g.add_argument("directory")
    g.set_defaults(func=_cmd_diagnose)

    n = sub.add_parser("net", help="greedy epsilon-net over a family directory")
    n.add_argument("--eps", type=float, required=True)
    n.add_argument("--p", type=float, required=True)
    n.add_argument("--spacing", type=float, default=1e-3)
    n.add_argument("directory")
    n.set_defaults(func=_cmd_net)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
