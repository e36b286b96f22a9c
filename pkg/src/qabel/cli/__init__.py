"""``qabel`` command line: list, verify, numeric, manifest."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .. import catalog as C
from ..numeric import Diverged, MaxTermsExceeded, NumericPolicy, infinite_residual
from . import config as cfg
from .campaign import MAX_RESAMPLES, Settings, run_entry

REPORT_VERSION = 1
EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def resolve(name: str) -> str:
    """Exact id, else a unique id prefix."""
    ids = sorted(C.REGISTRY)
    if name in C.REGISTRY:
        return name
    hits = [i for i in ids if i.startswith(name)]
    if len(hits) == 1:
        return hits[0]
    if hits:
        raise UsageError(f"ambiguous identity {name!r}: {', '.join(hits)}")
    raise UsageError(f"unknown identity {name!r}")


def _default_jobs() -> int:
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


def _default_seed() -> int:
    raw = os.environ.get("QABEL_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"QABEL_SEED must be an integer, got {raw!r}") from None


def _base_settings(kind: str) -> Settings:
    # infinite sums cost far more per point than exact finite checks
    return Settings(trials=3) if kind == "infinite" else Settings()


def build_report(ids, seed: int, flags: dict, config: dict | None = None, jobs: int = 1,
                 timings: bool = False) -> dict:
    jobs_args = []
    for id in sorted(set(ids)):
        kind = C.get(id).kind
        jobs_args.append((id, cfg.settings_for(id, _base_settings(kind), config, flags), seed, timings))
    if jobs > 1 and len(jobs_args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(_run, jobs_args))
    else:
        entries = [_run(a) for a in jobs_args]
    entries.sort(key=lambda e: e["id"])
    return {"report_version": REPORT_VERSION, "seed": seed, "entries": entries}


def _run(args):
    return run_entry(*args)


def report_exit(report: dict) -> int:
    verdicts = {e["verdict"] for e in report["entries"]}
    if "fail" in verdicts:
        return EXIT_FAIL
    if "inconclusive" in verdicts:
        return EXIT_INCONCLUSIVE
    return EXIT_PASS


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _human_line(e: dict) -> str:
    trials = f"{e['trials_admissible']}/{e['trials_requested']}"
    return f"{e['id']:<34} {e['kind']:<10} {trials:>7}  {e['verdict']:<12} {e['max_residual']:.3g}"


def cmd_list(args) -> int:
    try:
        rows = C.list_identities(args.kind)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        print(json.dumps([{"id": i, "kind": k, "anchor": a, "free_symbols": list(f)}
                          for i, k, a, f in rows], indent=2))
    else:
        for i, k, a, f in rows:
            print(f"{i:<34} {k:<10} {a:<28} {' '.join(f)}")
    return EXIT_PASS


def cmd_verify(args) -> int:
    ids = sorted(C.REGISTRY) if args.ids == ["all"] else [resolve(i) for i in args.ids]
    config = None
    if args.config:
        try:
            config = cfg.load(args.config)
        except (OSError, cfg.ConfigError) as exc:
            raise UsageError(str(exc)) from None
        for id in config.get("identities", {}):
            resolve(id)
    seed = args.seed if args.seed is not None else _default_seed()
    flags = {"trials": args.trials, "n_max": args.n_max, "den_bound": args.den_bound}
    if args.den_bound is not None and args.den_bound < 2:
        raise UsageError("--den-bound must be at least 2")
    if args.trials is not None and args.trials < 1:
        raise UsageError("--trials must be positive")
    report = build_report(ids, seed, flags, config, args.jobs or _default_jobs(), args.timings)
    if args.json == "-":
        sys.stdout.write(dumps(report))
    else:
        for e in report["entries"]:
            print(_human_line(e))
        if args.json:
            with open(args.json, "w") as fh:
                fh.write(dumps(report))
    return report_exit(report)


def cmd_numeric(args) -> int:
    id = resolve(args.id)
    entry = C.get(id)
    if entry.kind != "infinite":
        print(f"{id}: not an infinite identity", file=sys.stderr)
        return EXIT_USAGE
    try:
        policy = NumericPolicy(target_eps=args.eps, precision_bits=args.prec_bits)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    seed = args.seed if args.seed is not None else _default_seed()
    ok, found, attempt = True, 0, 0
    while found < args.trials:
        def probe(pt):
            try:
                probe.result = infinite_residual(id, pt, policy)
            except (Diverged, MaxTermsExceeded) as exc:
                raise C.ConstraintViolation(str(exc)) from None

        try:
            pt, attempt, _ = C.admissible_point(entry, seed, probe=probe, start=attempt)
        except (C.ConstraintViolation, C.PoleSignal) as exc:
            print(f"{id}: no admissible point after {MAX_RESAMPLES} resamples ({exc})", file=sys.stderr)
            return EXIT_INCONCLUSIVE
        r = probe.result
        good = r.passed
        ok = ok and good
        print(f"{id} attempt={attempt} residual={r.residual:.3e} tolerance={r.tolerance:.1e} "
              f"tail_bound={r.tail_total:.3e} tail_sound={r.tail_sound} terms={r.series_terms} "
              f"{'pass' if good else 'fail'}")
        found += 1
        attempt += 1
    print(f"{id}: {'pass' if ok else 'fail'}")
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_manifest(args) -> int:
    text = C.manifest_json() + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS


def _positive_float(text: str) -> float:
    v = float(Fraction(text)) if "/" in text else float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qabel", description="Randomized exact checks of q-series identities.")
    sub = p.add_subparsers(dest="command", required=True)

    ls = sub.add_parser("list", help="list catalog identities")
    ls.add_argument("--kind", help="finite, infinite or recurrence")
    ls.add_argument("--json", action="store_true", help="emit a JSON array")
    ls.set_defaults(func=cmd_list)

    v = sub.add_parser("verify", help="run residual campaigns")
    v.add_argument("ids", nargs="+", help="identity ids or unique prefixes, or 'all'")
    v.add_argument("--n-max", type=int)
    v.add_argument("--trials", type=int)
    v.add_argument("--seed", type=int, help="default: $QABEL_SEED or 0")
    v.add_argument("--den-bound", type=int)
    v.add_argument("--jobs", type=int, help="worker processes (default: available CPUs)")
    v.add_argument("--json", metavar="PATH", help="write the JSON report here ('-' for stdout)")
    v.add_argument("--config", metavar="FILE", help="TOML or JSON per-identity overrides")
    v.add_argument("--timings", action="store_true", help="include elapsed_ms (breaks byte-identical reports)")
    v.set_defaults(func=cmd_verify)

    nm = sub.add_parser("numeric", help="evaluate an infinite identity")
    nm.add_argument("id")
    nm.add_argument("--eps", type=_positive_float, default=1e-12)
    nm.add_argument("--prec-bits", type=int, default=128)
    nm.add_argument("--trials", type=int, default=3)
    nm.add_argument("--seed", type=int)
    nm.set_defaults(func=cmd_numeric)

    mf = sub.add_parser("manifest", help="emit the catalog JSON")
    mf.add_argument("--out", metavar="PATH")
    mf.set_defaults(func=cmd_manifest)
    return p


def main(argv=None) -> int:
    args = parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qabel: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
