"""Command-line front end: bound tables, pipeline runs, exports and re-verification."""
from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import bounds
from .errors import ParameterError
from .pipeline import EXIT_OK, EXIT_PARAM, PipelineConfig, canonical_json, run_pipeline, save_run, verify_saved
from .simplex import format_complex, skeleton
from .subdivision import build_D, ladder_subdivide, to_off

WORKERS_ENV = "HEAWOOD_WORKERS"


def parse_range(text: str) -> list[int]:
    """'3', '0..3' (inclusive) or '1,4,9'."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
            if hi < lo:
                raise ParameterError(f"empty range {text!r}")
            return list(range(lo, hi + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise ParameterError(f"bad integer range {text!r}") from None


# -- bounds ------------------------------------------------------------------------------

BOUND_TABLES = {
    # flag: (column names, function)
    "heawood": (("b1",), lambda b1: bounds.heawood_max_n(b1)),
    "generalized": (("n", "k", "bk"), lambda n, k, bk: bounds.generalized_heawood_check(n, k, bk)),
    "thm2": (("k", "bk"), lambda k, bk: bounds.thm2_bound(k, bk)),
    "thm3": (("q", "k", "bk"), lambda q, k, bk: bounds.thm3_bound(q, k, bk)),
    "n0_weak": (("k", "b", "s", "p"), lambda k, b, s, p: bounds.n0_weak(k, b, s, p)),
    "n0_strong": (("k", "b", "s"), lambda k, b, s: bounds.n0_strong(k, b, s)),
    "n0_informational": (("k", "b", "s"), lambda k, b, s: bounds.n0_improved_informational(k, b, s)),
}


def cmd_bounds(args) -> int:
    chosen = [name for name in BOUND_TABLES if getattr(args, name)]
    if not chosen:
        raise ParameterError("pick at least one table, e.g. --heawood")
    tables = []
    for name in chosen:
        cols, fn = BOUND_TABLES[name]
        ranges = []
        for c in cols:
            val = getattr(args, c)
            if val is None:
                raise ParameterError(f"--{name.replace('_', '-')} needs --{c}")
            ranges.append(parse_range(val))
        rows = [(*combo, fn(*combo)) for combo in itertools.product(*ranges)]
        tables.append((name, cols, rows))
    if args.json:
        out = {name: [dict(zip((*cols, "value"), (r[:-1] + (r[-1] if isinstance(r[-1], bool) else str(r[-1]),)))) for r in rows] for name, cols, rows in tables}
        print(json.dumps(out, indent=2))
    else:
        for name, cols, rows in tables:
            print(f"# {name}")
            print("\t".join((*cols, "value")))
            for r in rows:
                print("\t".join(map(str, r)))
    return EXIT_OK


# -- pipeline ----------------------------------------------------------------------------

def _config(args, seed: int) -> PipelineConfig:
    probe = PipelineConfig(k=args.k, s=args.s, n=args.s + 1, b=args.b, p=args.p, path=args.path, q=args.q)
    n = args.n if args.n is not None else probe.n0
    return PipelineConfig(
        k=args.k, s=args.s, n=n, b=args.b, p=args.p, path=args.path, seed=seed, q=args.q,
        best_effort=args.best_effort, check_subdivision=not args.skip_subdivision_check,
    )


def _run_one(cfg: PipelineConfig) -> tuple[int, int, dict]:
    result = run_pipeline(cfg)
    return cfg.seed, result.exit_code, result.verdicts


def cmd_pipeline(args) -> int:
    seeds = parse_range(args.seeds) if args.seeds else [args.seed]
    if len(seeds) == 1:
        cfg = _config(args, seeds[0])
        result = run_pipeline(cfg)
        if args.out:
            save_run(result, args.out, timings=args.timings)
        print(json.dumps(result.report(timings=args.timings), indent=2, sort_keys=True))
        return result.exit_code
    cfgs = [_config(args, s) for s in seeds]
    for cfg in cfgs:
        cfg.validate()
    workers = int(os.environ.get(WORKERS_ENV, "1"))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            outcomes = list(pool.map(_run_one, cfgs))
    else:
        outcomes = [_run_one(cfg) for cfg in cfgs]
    worst = EXIT_OK
    for seed, code, verdicts in outcomes:
        failed = [v for v, ok in verdicts.items() if not ok]
        print(f"seed {seed}: {'PASS' if code == EXIT_OK else 'FAIL ' + ','.join(failed)}")
        worst = max(worst, code)
    print(f"{sum(c == EXIT_OK for _, c, _ in outcomes)}/{len(outcomes)} seeds passed")
    return worst


# -- export ------------------------------------------------------------------------------

def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_export(args) -> int:
    fmt = args.format
    if args.what == "complex":
        if args.n is None:
            raise ParameterError("complex export needs --n")
        c = skeleton(args.n, args.k)
        faces = list(c.faces(args.k))
        if fmt == "text":
            _emit(format_complex(faces, f"{args.k}-skeleton of the {args.n}-simplex"), args.out)
        elif fmt == "json":
            _emit(canonical_json({"faces": [list(f) for f in faces]}) + "\n", args.out)
        else:
            raise ParameterError(f"complex export supports text and json, not {fmt}")
        return EXIT_OK
    if args.what in ("subdivision", "ladder"):
        S = build_D(args.s, args.k, args.ell) if args.what == "subdivision" else ladder_subdivide(args.k, args.ell)
        if fmt == "text":
            _emit(format_complex(S.maximal, f"{args.what} k={args.k} ell={args.ell}"), args.out)
        elif fmt == "json":
            _emit(canonical_json(S.to_json()) + "\n", args.out)
        elif fmt == "off":
            _emit(to_off(S), args.out)
        else:
            raise ParameterError(f"unknown format {fmt!r}")
        return EXIT_OK
    if args.what == "map":
        if fmt != "json":
            raise ParameterError("maps export only as json")
        result = run_pipeline(_config(args, args.seed))
        if result.g is None:
            raise ParameterError("routing failed; no map to export")
        _emit(canonical_json(result.g.to_json()) + "\n", args.out)
        return EXIT_OK
    raise ParameterError(f"unknown export target {args.what!r}")


def cmd_verify(args) -> int:
    verdicts, report = verify_saved(args.dir)
    print(json.dumps({"verdicts": verdicts, "params": report["params"]}, indent=2, sort_keys=True))
    if all(verdicts.values()):
        return EXIT_OK
    return 2 if report.get("guaranteed") else 1


# -- parser ------------------------------------------------------------------------------

def _pipeline_args(p: argparse.ArgumentParser):
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--s", type=int, default=4)
    p.add_argument("--n", type=int, default=None, help="vertex parameter; defaults to the threshold n0")
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--path", choices=("weak", "strong"), default="strong")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--best-effort", action="store_true", help="allow n below the threshold")
    p.add_argument("--skip-subdivision-check", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="heawood", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bounds", help="evaluate bound formulas over parameter ranges")
    for name in BOUND_TABLES:
        b.add_argument(f"--{name.replace('_', '-')}", dest=name, action="store_true")
    for col in ("b1", "n", "k", "bk", "q", "b", "s", "p"):
        b.add_argument(f"--{col}", default=None, help="integer, a..b, or a,b,c")
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bounds)

    pl = sub.add_parser("pipeline", help="build phi, D and g_simp and verify them")
    _pipeline_args(pl)
    pl.add_argument("--seeds", default=None, help=f"seed range; runs in parallel with ${WORKERS_ENV} workers")
    pl.add_argument("--out", default=None, help="directory for report and artifacts")
    pl.add_argument("--timings", action="store_true", help="include wall-clock timings in the report")
    pl.set_defaults(func=cmd_pipeline)

    ex = sub.add_parser("export", help="write complexes, subdivisions or maps")
    ex.add_argument("what", choices=("complex", "subdivision", "ladder", "map"))
    ex.add_argument("--format", default="text")
    ex.add_argument("--ell", type=int, default=1)
    ex.add_argument("--out", default=None)
    _pipeline_args(ex)
    ex.set_defaults(func=cmd_export)

    v = sub.add_parser("verify", help="re-run the checks on a saved pipeline directory")
    v.add_argument("dir")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAM


if __name__ == "__main__":
    sys.exit(main())
