"""Command-line interface.

Exit codes: 0 success, 1 a verification or convergence suite failed,
2 bad usage or an unsupported configuration, 3 an internal arithmetic guard
tripped.  Output is deterministic byte for byte for identical invocations;
files always end with a newline.  GINLAB_THREADS caps the worker threads
used to precompute staircases for multi-multiplicity commands.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import exporters, shape, staircase, verify
from .errors import ComputationGuardError, VerificationFailure
from .hilbert import hilbert_fn
from .lattice import PointConfig, canonical_class, exceptional_classes, intersect

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_GUARD = 3


def _thread_count() -> int:
    raw = os.environ.get("GINLAB_THREADS", "1")
    try:
        count = int(raw)
    except ValueError:
        raise ValueError(f"GINLAB_THREADS must be an integer, got {raw!r}") from None
    if count < 1:
        raise ValueError("GINLAB_THREADS must be at least 1")
    return count


def _map_over_m(fn, ms: list[int]) -> list:
    workers = min(_thread_count(), max(len(ms), 1))
    if workers <= 1:
        return [fn(m) for m in ms]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, ms))


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")


def _parse_m_list(args) -> list[int]:
    if args.m_list:
        try:
            ms = [int(chunk) for chunk in args.m_list.split(",") if chunk.strip()]
        except ValueError:
            raise ValueError(f"bad multiplicity list {args.m_list!r}")
    elif args.m is not None:
        ms = [args.m]
    else:
        raise ValueError("need --m or --m-list")
    if not ms or min(ms) < 1:
        raise ValueError("multiplicities must be positive")
    return sorted(set(ms))


def _parse_t_range(args) -> list[int]:
    if args.t_range:
        lo, sep, hi = args.t_range.partition("..")
        if not sep or not lo.strip().lstrip("-").isdigit() or not hi.strip().lstrip("-").isdigit():
            raise ValueError(f"bad degree range {args.t_range!r}; expected A..B")
        start, stop = int(lo), int(hi)
        if stop < start:
            raise ValueError("degree range must be increasing")
        return list(range(start, stop + 1))
    if args.t is not None:
        return [args.t]
    raise ValueError("need --t or --t-range")


def cmd_classes(args) -> int:
    config = PointConfig.parse(args.config)
    classes = exceptional_classes(config)
    k = canonical_class(config.r)
    if args.format == "json":
        payload = {
            "config": str(config),
            "provenance": config.provenance,
            "count": len(classes),
            "classes": [
                {
                    "d": c.d,
                    "mults": list(c.mults),
                    "self_intersection": intersect(c, c),
                    "canonical_pairing": intersect(c, k),
                }
                for c in classes
            ],
        }
        _write(json.dumps(payload, indent=2), args.out)
    else:
        lines = [f"# {config} ({config.provenance}): {len(classes)} negative curve classes"]
        for c in classes:
            lines.append(f"{c}  C.C={intersect(c, c)}  C.K={intersect(c, k)}")
        _write("\n".join(lines), args.out)
    return EXIT_OK


def cmd_hilbert(args) -> int:
    config = PointConfig.parse(args.config)
    if args.m is None:
        raise ValueError("need --m")
    ts = _parse_t_range(args)
    rows = [(t, hilbert_fn(config, args.m, t)) for t in ts]
    if args.format == "json":
        payload = {
            "config": str(config),
            "m": args.m,
            "conjectural": config.conjectural,
            "values": [[t, v] for t, v in rows],
        }
        _write(json.dumps(payload, indent=2), args.out)
    elif args.format == "csv":
        _write(exporters.hilbert_csv(rows), args.out)
    else:
        lines = [f"# {config}, m={args.m}" + (" (conjectural)" if config.conjectural else "")]
        lines += [f"t={t}  H={v}" for t, v in rows]
        _write("\n".join(lines), args.out)
    return EXIT_OK


def cmd_gin(args) -> int:
    config = PointConfig.parse(args.config)
    if args.m is None:
        raise ValueError("need --m")
    s = staircase.gin_staircase(config, args.m)
    if args.format == "text":
        gens = " ".join(_monomial(x, y) for x, y in s.generators)
        lines = [
            f"# {config}, m={s.m}" + (" (conjectural)" if s.conjectural else ""),
            f"alpha={s.alpha} zeta={s.zeta} colength={staircase.colength(s)}",
            f"generators: {gens}",
        ]
        _write("\n".join(lines), args.out)
    else:
        _write(exporters.staircase_json(s), args.out)
    return EXIT_OK


def _monomial(x: int, y: int) -> str:
    if x == 0 and y == 0:
        return "1"
    parts = []
    if x:
        parts.append(f"x^{x}" if x > 1 else "x")
    if y:
        parts.append(f"y^{y}" if y > 1 else "y")
    return "".join(parts)


def cmd_shape(args) -> int:
    config = PointConfig.parse(args.config)
    ms = _parse_m_list(args)
    _map_over_m(lambda m: staircase.gin_staircase(config, m), ms)
    report = shape.shape_report(config, ms)
    if args.format == "csv":
        _write(exporters.shape_csv(report), args.out)
    elif args.format == "svg":
        _write(exporters.shape_svg(report), args.out)
    elif args.format == "json":
        _write(exporters.shape_json(report), args.out)
    else:
        lines = [f"# {config} ({config.provenance})"]
        if report.predicted is not None:
            g1, g2 = report.predicted
            lines.append(f"predicted intercepts: {exporters.intercept_str(g1)}, "
                         f"{exporters.intercept_str(g2)}")
        else:
            lines.append("predicted intercepts: none (non-linear limit)")
        for e in report.entries:
            lines.append(f"m={e.m}  alpha={e.alpha}  zeta={e.zeta}  "
                         f"x={exporters.rational_str(e.x_intercept)}  "
                         f"y={exporters.rational_str(e.y_intercept)}  "
                         f"colength={e.colength}")
        lines.append(f"seshadri estimate: {exporters.rational_str(report.seshadri_estimate)}")
        _write("\n".join(lines), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    config = PointConfig.parse(args.config)
    report = verify.run_verification(config, args.max_m)
    if args.format == "json":
        payload = {
            "config": str(config),
            "max_m": report.max_m,
            "passed": report.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in report.checks
            ],
        }
        _write(json.dumps(payload, indent=2), args.out)
    else:
        lines = [f"# verify {config} --max-m {report.max_m}"]
        for c in report.checks:
            lines.append(f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}")
        lines.append("all checks passed" if report.passed
                     else f"{len(report.failures)} check(s) failed")
        _write("\n".join(lines), args.out)
    return EXIT_OK if report.passed else EXIT_VERIFY


def _apply_config_file(args: argparse.Namespace) -> None:
    """Fill unset flags from a JSON file; explicit flags win."""
    if not getattr(args, "config_file", None):
        return
    with open(args.config_file, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    if not isinstance(data, dict):
        raise ValueError("config file must hold a JSON object")
    mapping = {"config": "config", "m": "m", "m_list": "m_list", "t": "t",
               "t_range": "t_range", "format": "format", "out": "out", "max_m": "max_m"}
    for key, attr in mapping.items():
        if key in data and getattr(args, attr, None) in (None, getattr(args, f"_default_{attr}", None)):
            setattr(args, attr, data[key])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ginlab",
        description="Exact staircase computations for uniform fat-point ideals in the plane.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
        p.add_argument("config", nargs="?", default=None,
                       help="point configuration: general:R, shgh:R or collinear:L")
        p.add_argument("--config-file", default=None,
                       help="JSON file supplying any of the flags below")
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", default=None, help="write output to this file")

    p_classes = sub.add_parser("classes", help="list the negative curve classes")
    common(p_classes, ("text", "json"))
    p_classes.set_defaults(func=cmd_classes)

    p_hilbert = sub.add_parser("hilbert", help="Hilbert function values")
    common(p_hilbert, ("text", "csv", "json"))
    p_hilbert.add_argument("--m", type=int, default=None, help="multiplicity")
    p_hilbert.add_argument("--t", type=int, default=None, help="single degree")
    p_hilbert.add_argument("--t-range", default=None, help="degree range A..B")
    p_hilbert.set_defaults(func=cmd_hilbert)

    p_gin = sub.add_parser("gin", help="initial-ideal staircase")
    common(p_gin, ("json", "text"))
    p_gin.add_argument("--m", type=int, default=None, help="multiplicity")
    p_gin.set_defaults(func=cmd_gin)

    p_shape = sub.add_parser("shape", help="scaled staircase report")
    common(p_shape, ("text", "csv", "json", "svg"))
    p_shape.add_argument("--m", type=int, default=None, help="single multiplicity")
    p_shape.add_argument("--m-list", default=None, help="comma-separated multiplicities")
    p_shape.set_defaults(func=cmd_shape)

    p_verify = sub.add_parser("verify", help="run the cross-validation suite")
    common(p_verify, ("text", "json"))
    p_verify.add_argument("--max-m", type=int, default=50, dest="max_m",
                          help="largest multiplicity the suite touches")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        _apply_config_file(args)
        if args.config is None:
            raise ValueError("missing point configuration (positional argument or config file)")
        return args.func(args)
    except VerificationFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ComputationGuardError as exc:
        print(f"arithmetic guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
