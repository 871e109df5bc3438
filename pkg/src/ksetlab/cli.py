"""
Command line interface for ksetlab - k-sets, k-levels and concave chains in exact arithmetic
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, List, Optional

from zencfg import load_config_from_file

from .arrangement import build_arrangement, level_profile
from .errors import BadKError, InstanceError, KSetLabError, RetriesExhaustedError
from .instances import generate_instance, parse_instance, write_instance
from .ksets import Instance, Side, count_at_most_k, count_directed_ksets
from .models import SHAPES, VIEWS, GenSpec, RenderConfig, SweepConfig
from .render import render_svg
from .verifier import Report, sweep, verify_all_k, verify_instance

EXIT_OK = 0
EXIT_VERDICT_FAILED = 1
EXIT_INPUT_ERROR = 2

SWEEP_FIELDS = ("n", "n_max", "k", "trials", "seed", "shape", "coord_range")


def _status(message: str) -> None:
    print(message, file=sys.stderr)


def _emit(text: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    output.write_text(text, encoding="utf-8")
    _status(f"✅ Wrote {output}")


def _dump(data: Any) -> str:
    return json.dumps(data, indent=2) + "\n"


def _read_instance(source: Optional[str]) -> Instance:
    if source is None:
        raise InstanceError("this command needs an instance file (use '-' for stdin)")
    if source == "-":
        return parse_instance(sys.stdin.read())
    return parse_instance(Path(source).read_text(encoding="utf-8"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ksetlab",
        description="ksetlab - k-sets, dual arrangements and concave chains, verified in exact arithmetic"
    )
    parser.add_argument(
        'command',
        choices=['gen', 'analyze', 'verify', 'sweep', 'plot'],
        help="'gen' writes a random instance, 'analyze' prints per-k counts, 'verify' checks every "
             "inequality of the bound, 'sweep' verifies many random instances, 'plot' draws an SVG"
    )
    parser.add_argument(
        'instance',
        nargs='?',
        default=None,
        help="Instance file ('-' reads stdin); needed by analyze, verify and plot"
    )
    k_group = parser.add_mutually_exclusive_group()
    k_group.add_argument('--k', type=int, default=None, help="Single k to verify, sweep or plot")
    k_group.add_argument('--all-k', action='store_true', help="Verify every k in [1, n-1] (the default)")
    parser.add_argument('--json', action='store_true', help="Machine-readable JSON output")
    parser.add_argument('--seed', type=int, default=None, help="Random seed (default: 0)")
    parser.add_argument('--n', type=int, default=None, help="Number of points (default: 10)")
    parser.add_argument('--n-max', type=int, default=None, help="Sweep: draw n uniformly from [n, n-max]")
    parser.add_argument('--trials', type=int, default=None, help="Sweep trials (default: 100)")
    parser.add_argument('--shape', choices=SHAPES, default=None, help="Generator shape (default: uniform)")
    parser.add_argument('--range', dest='coord_range', type=int, default=None,
                        help="Coordinates are drawn from [-R, R] (default: 100)")
    parser.add_argument('--view', choices=VIEWS, default='dual', help="Plot view (default: dual)")
    parser.add_argument('-o', '--output', type=Path, default=None, help="Write to a file instead of stdout")
    parser.add_argument('--config', type=Path, default=None,
                        help="Python file defining `config = SweepConfig(...)`; flags override it")
    parser.add_argument('--debug', action='store_true', help="Print extra detail and tracebacks")
    return parser


def _gen_spec(args) -> GenSpec:
    overrides = {
        name: getattr(args, name)
        for name in ("n", "seed", "shape", "coord_range")
        if getattr(args, name) is not None
    }
    return GenSpec(**overrides)


def _sweep_config(args) -> SweepConfig:
    values = {}
    if args.config is not None:
        config_path = Path(args.config).resolve()
        loaded = load_config_from_file(config_path.parent, config_path.name, "config")
        values = {name: getattr(loaded, name) for name in SWEEP_FIELDS if hasattr(loaded, name)}
    for name in SWEEP_FIELDS:
        flag = getattr(args, name)
        if flag is not None:
            values[name] = flag
    config = SweepConfig(**values)
    if config.n_max is not None and config.n_max < config.n:
        raise ValueError(f"--n-max {config.n_max} is smaller than --n {config.n}")
    return config


def _analyze_rows(inst: Instance) -> List[dict]:
    arr = build_arrangement(inst)
    rows = []
    for k in range(1, inst.n):
        profile = level_profile(arr, k)
        rows.append({
            "k": k,
            "v_k_minus_1": len(arr.vertex_class(k - 1)),
            "ksets_above": count_directed_ksets(inst, k, Side.ABOVE),
            "ksets_below": count_directed_ksets(inst, k, Side.BELOW),
            "at_most_k_above": count_at_most_k(inst, k, Side.ABOVE),
            "below_level": profile.below_level,
            "nk": profile.nk,
        })
    return rows


def _format_table(rows: List[dict]) -> str:
    header = list(rows[0].keys())
    widths = [max(len(h), *(len(str(r[h])) for r in rows)) for h in header]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    for row in rows:
        lines.append("  ".join(str(row[h]).rjust(w) for h, w in zip(header, widths)))
    return "\n".join(lines) + "\n"


def _format_report(report: Report) -> str:
    mark = "✅" if report.all_hold else "❌"
    line = (f"{mark} k={report.k}: t={report.t} X={report.x} tangents={report.tangents} "
            f"chain_crossings={report.chain_crossings} below_level={report.below_level}<=nk={report.nk} "
            f"ksets above/below={report.ksets_above}/{report.ksets_below} "
            f"bound_ok={report.bound_ok} easy_case={report.easy_case}")
    if not report.all_hold:
        line += f" failed: {', '.join(report.failed())}"
    return line + "\n"


def _run(args) -> int:
    if args.command == 'gen':
        spec = _gen_spec(args)
        _status(f"🎲 Generating {spec.shape} instance, n={spec.n}, seed={spec.seed}")
        _emit(write_instance(generate_instance(spec)), args.output)
        return EXIT_OK

    if args.command == 'sweep':
        config = _sweep_config(args)
        scope = "all k" if config.k is None else f"k={config.k}"
        _status(f"🔍 Sweeping {config.trials} {config.shape} instances, n={config.n}, {scope}, seed={config.seed}")
        summary = sweep(config, debug=args.debug)
        _emit(_dump(summary.to_dict()), args.output)
        if summary.failures:
            _status(f"⚠️  {len(summary.failures)} failures recorded")
            return EXIT_VERDICT_FAILED
        _status(f"✅ {len(summary.records)} reports, no failures")
        return EXIT_OK

    inst = _read_instance(args.instance)

    if args.command == 'analyze':
        rows = _analyze_rows(inst)
        _emit(_dump(rows) if args.json else _format_table(rows), args.output)
        return EXIT_OK

    if args.command == 'verify':
        if args.k is not None:
            reports = [verify_instance(inst, args.k)]
        else:
            reports = verify_all_k(inst)
        if args.json:
            data = reports[0].to_dict() if args.k is not None else [r.to_dict() for r in reports]
            _emit(_dump(data), args.output)
        else:
            _emit("".join(_format_report(r) for r in reports), args.output)
        if all(r.all_hold for r in reports):
            return EXIT_OK
        _status("❌ Some verdicts failed")
        return EXIT_VERDICT_FAILED

    # plot
    if args.k is None:
        raise ValueError(f"plot needs --k in [1, {inst.n - 1}]")
    _emit(render_svg(inst, args.k, args.view, RenderConfig(), debug=args.debug), args.output)
    return EXIT_OK


def run_cli(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one command and return its exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INPUT_ERROR

    try:
        return _run(args)
    except (InstanceError, BadKError) as e:
        _status(f"❌ Invalid input: {e}")
        _status("💡 Instances need n >= 2 points, distinct x-coordinates and no three collinear points; k must lie in [1, n-1]")
        return EXIT_INPUT_ERROR
    except RetriesExhaustedError as e:
        _status(f"❌ Generation failed: {e}")
        _status("💡 Use a larger --range or a smaller --n")
        return EXIT_INPUT_ERROR
    except (FileNotFoundError, IsADirectoryError, PermissionError) as e:
        _status(f"❌ Cannot read or write file: {e}")
        return EXIT_INPUT_ERROR
    except ValueError as e:
        _status(f"❌ Invalid option: {e}")
        return EXIT_INPUT_ERROR
    except KSetLabError as e:
        _status(f"❌ Pipeline integrity check failed: {e}")
        if args.debug:
            import traceback
            traceback.print_exc()
        return EXIT_VERDICT_FAILED
    except Exception as e:
        _status(f"❌ Unexpected error: {e}")
        if args.debug:
            import traceback
            traceback.print_exc()
        _status("💡 Run with --debug for more details")
        return EXIT_VERDICT_FAILED


def cli():
    """Console script entry point"""
    sys.exit(run_cli())


if __name__ == "__main__":
    cli()
