"""Command-line harness: verification suites and single computations.

Exit codes: 0 all checks pass, 1 a check failed, 2 bad input, 3 resource cap hit.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import chainalg as ca
from . import derops as do
from . import fincat as fc
from . import kan
from . import suites as S
from .diagram import DiagramError, diagram_from_json
from .linalg import is_prime

SCHEMA = "derivators.report/1"
EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3
INPUT_ERRORS = (DiagramError, fc.CategoryError, ca.ComplexError, json.JSONDecodeError, OSError, KeyError, ValueError)


# ---------------------------------------------------------------- reports

def _cap(max_total_dim):
    return kan.resource_cap(max_total_dim) if max_total_dim is not None else contextlib.nullcontext()


def _trial_job(args):
    suite, p, seed, i, budget, cap = args
    with _cap(cap):
        return S.run_trial(suite, p, seed, i, budget)


def run(suite: str, seed: int = 0, trials: int | None = None, primes=(2, 3, 7), budget: int | None = None,
        max_total_dim: int | None = None, jobs: int = 1) -> dict:
    """Run a suite and return its report; identical arguments give identical reports."""
    if suite not in S.SUITES:
        raise KeyError(f"unknown suite {suite!r}; expected one of {sorted(S.SUITES)}")
    entry = S.SUITES[suite]
    n = entry.trials if trials is None else trials
    b = entry.budget if budget is None else budget
    checks: dict[tuple[str, int], dict] = {}
    info = []

    def record(p, c: S.Check, trial):
        entry = checks.setdefault((c.name, p), {"name": c.name, "prime": p, "passed": 0, "total": 0, "failures": []})
        entry["total"] += 1
        entry["passed"] += int(c.passed)
        if not c.passed:
            fail = {"trial": trial, "seed": seed}
            if trial is not None:
                fail["trial_seed"] = S.trial_seed(seed, p, trial)
            if c.witness is not None:
                fail["witness"] = c.witness
            if c.info is not None:
                fail["info"] = c.info
            entry["failures"].append(fail)
        elif c.info is not None and trial is None:
            info.append({"check": c.name, "prime": p, **c.info})

    for p in primes:
        with _cap(max_total_dim):
            for c in S.run_once(suite, p, b):
                record(p, c, None)
        args = [(suite, p, seed, i, b, max_total_dim) for i in range(n)]
        if jobs > 1:
            with ProcessPoolExecutor(jobs) as ex:
                results = list(ex.map(_trial_job, args))
        else:
            results = [_trial_job(a) for a in args]
        for i, cs in enumerate(results):
            for c in cs:
                record(p, c, i)
    rows = list(checks.values())
    for r in rows:
        r["ok"] = r["passed"] == r["total"]
    return {
        "schema": SCHEMA,
        "suite": suite,
        "criterion": entry.criterion,
        "primes": list(primes),
        "seed": seed,
        "trials": n,
        "budget": b,
        "checks": rows,
        "witnesses": info,
        "ok": all(r["ok"] for r in rows),
    }


def to_markdown(report: dict) -> str:
    lines = [
        f"# Suite `{report['suite']}` (criterion {report['criterion']})",
        "",
        f"primes {report['primes']}, seed {report['seed']}, trials {report['trials']}, budget {report['budget']}: "
        + ("**PASS**" if report["ok"] else "**FAIL**"),
        "",
        "| check | p | passed | total |",
        "|---|---|---|---|",
    ]
    for r in report["checks"]:
        lines.append(f"| {r['name']} | {r['prime']} | {r['passed']} | {r['total']} |")
    if report["witnesses"]:
        lines += ["", "## Witnesses", ""]
        for w in report["witnesses"]:
            lines.append("- " + json.dumps(w, sort_keys=True))
    fails = [f for r in report["checks"] for f in r["failures"]]
    if fails:
        lines += ["", "## Failures", ""]
        for r in report["checks"]:
            for f in r["failures"]:
                lines.append(f"- {r['name']} (p={r['prime']}): trial {f['trial']}, seed {f.get('trial_seed', f['seed'])}")
    return "\n".join(lines) + "\n"


def write_witnesses(report: dict, directory: Path) -> list[Path]:
    directory.mkdir(parents=True, exist_ok=True)
    out = []
    for r in report["checks"]:
        for k, f in enumerate(r["failures"]):
            if "witness" not in f:
                continue
            slug = "".join(ch if ch.isalnum() else "-" for ch in r["name"]).strip("-")
            path = directory / f"{report['suite']}-p{r['prime']}-{slug}-{k}.json"
            path.write_text(json.dumps(f["witness"], sort_keys=True, indent=1))
            out.append(path)
    return out


# ---------------------------------------------------------------- compute

def _complex_out(x: ca.ChainComplex) -> dict:
    return {"complex": ca.complex_to_json(x), "homology": {str(k): v for k, v in sorted(ca.homology_dims(x).items())}}


def _dims(x: ca.ChainComplex) -> dict:
    return {str(k): v for k, v in sorted(ca.homology_dims(x).items())}


def _load_diagram(obj: dict):
    return diagram_from_json(obj["input"] if "input" in obj else obj)


def compute(op: str, obj: dict) -> dict:
    """Evaluate one operation on a JSON input; the result has an ``ok`` field when it is a check."""
    if op == "nerve":
        cat = fc.standard_shape(obj) if isinstance(obj, str) else fc.category_from_json(obj.get("category", obj))
        return {"counts": fc.nerve_counts(cat)}
    x = _load_diagram(obj)
    if op == "hocolim":
        return _complex_out(kan.hocolim(x))
    if op == "holim":
        return _complex_out(kan.holim(x))
    if op in ("cone", "fiber", "oracles", "sigma-f", "barratt-puppe"):
        f = do.as_arrow(x)
        if op == "cone":
            return _complex_out(do.cone_d(f))
        if op == "fiber":
            return _complex_out(do.fiber_d(f))
        if op == "oracles":
            res = {c.name: c.passed for c in S.oracle_checks(f)}
            return {"checks": res, "ok": all(res.values())}
        if op == "sigma-f":
            g = do.sigma_f_grid(f)
            res = {"Sigma F -> C": ca.is_quasi_iso(g.sigma_f_to_c), "F -> Omega C": ca.is_quasi_iso(g.f_to_omega_c)}
            return {"checks": res, "ok": all(res.values())}
        bp = do.barratt_puppe(f, 3)
        res = {"bicartesian": bp.bicartesian(), "boundary acyclic": bp.boundary_acyclic(), "periodic": bp.periodic()}
        return {"checks": res, "entries": {str(k): _dims(v) for k, v in bp.entries.items()}, "ok": all(res.values())}
    if op == "tcof":
        return _complex_out(do.total_cofiber(x))
    if op == "tfib":
        return _complex_out(do.total_fiber(x))
    if op in ("is-cocartesian", "detect"):
        a, b = kan.is_cocartesian(x), kan.is_cartesian(x)
        return {"cocartesian": a, "cartesian": b, "ok": a if op == "is-cocartesian" else a == b}
    if op == "tcof-acyclic":
        t = do.total_cofiber(x)
        return {"tcof": _dims(t), "ok": ca.is_acyclic(t)}
    if op == "seven-conditions":
        sc = do.seven_conditions(x)
        return {"conditions": sc, "ok": len(set(sc.values())) == 1}
    if op == "tcof-equivalence":
        t, c1, c2 = do.total_cofiber(x), do.iterated_cone(x, 1), do.iterated_cone(x, 2)
        return {"tcof": _dims(t), "C(C1 X)": _dims(c1), "C(C2 X)": _dims(c2), "ok": _dims(t) == _dims(c1) == _dims(c2)}
    if op == "c-of-f2":
        a, b = _dims(do.c_of_f2(x)), _dims(do.f_of_c1(x))
        return {"C(F2 X)": a, "F(C1 X)": b, "ok": a == b}
    if op == "figure1":
        w = do.figure1_witness(x, strict=False)
        qis = {f"{n} ({k})": ca.is_quasi_iso(m) for k, (n, m) in enumerate(w.to_tcof + w.to_iterated)}
        return {"flags": w.flags, "quasi_isos": qis, "c": _dims(w.c), "ok": w.ok and all(qis.values()) and w.iterated_dims_match}
    if op in ("commute-dims", "mate"):
        pairs = {name: (u, v) for name, u, v in S.mate_catalogue()}
        name = obj.get("pair", "pushout/pullback")
        if name not in pairs:
            raise KeyError(f"unknown pair {name!r}")
        u, v = pairs[name]
        if op == "mate":
            m = kan.canonical_mate(u, v, x)
            return {"natural": m.mate.is_natural(), "quasi_iso": m.mate.is_pointwise_quasi_iso(),
                    "ok": m.mate.is_natural() and m.mate.is_pointwise_quasi_iso()}
        lr, rl = kan.commute_dims(u, v, x)
        enc = lambda t: {json.dumps(k): {str(q): d for q, d in sorted(v.items())} for k, v in t.items()}
        return {"lr": enc(lr), "rl": enc(rl), "ok": lr == rl}
    raise KeyError(f"unknown op {op!r}")


COMPUTE_OPS = [
    "hocolim", "holim", "cone", "fiber", "tcof", "tfib", "tcof-acyclic", "is-cocartesian", "detect", "seven-conditions",
    "tcof-equivalence", "c-of-f2", "figure1", "sigma-f", "barratt-puppe", "oracles", "commute-dims", "mate", "nerve",
]


# ---------------------------------------------------------------- entry point

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="derivators", description="Verification suites for stable and represented models.")
    sub = ap.add_subparsers(dest="command", required=True)
    r = sub.add_parser("run", help="run a verification suite")
    r.add_argument("--suite", required=True, choices=sorted(S.SUITES) + ["all"])
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--trials", type=int, default=None)
    r.add_argument("--prime", type=int, action="append", dest="primes")
    r.add_argument("--budget", type=int, default=None, help="random input dimension budget")
    r.add_argument("--max-total-dim", type=int, default=None, help="resource cap on bar/cobar dimension")
    r.add_argument("--out", choices=["json", "markdown"], default="json")
    r.add_argument("--witness-dir", type=Path, default=None)
    r.add_argument("--jobs", type=int, default=1)
    c = sub.add_parser("compute", help="evaluate one operation on a JSON input")
    c.add_argument("op", choices=COMPUTE_OPS)
    c.add_argument("input", type=Path)
    c.add_argument("-o", "--output", type=Path, default=None)
    c.add_argument("--max-total-dim", type=int, default=None)
    sub.add_parser("list", help="list suites")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "list":
        for name, s in S.SUITES.items():
            print(f"{name}\tcriterion {s.criterion}\t{s.trials} trials")
        return EXIT_OK
    if args.command == "compute":
        try:
            obj = json.loads(args.input.read_text())
            with _cap(args.max_total_dim):
                res = compute(args.op, obj)
        except kan.ResourceError as e:
            print(f"resource cap: {e}", file=sys.stderr)
            return EXIT_RESOURCE
        except INPUT_ERRORS as e:
            print(f"input error: {e}", file=sys.stderr)
            return EXIT_INPUT
        text = json.dumps(res, sort_keys=True, indent=1) + "\n"
        if args.output:
            args.output.write_text(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK if res.get("ok", True) else EXIT_FAIL
    primes = args.primes or [2, 3, 7]
    bad = [p for p in primes if not is_prime(p)]
    if bad:
        print(f"input error: not prime: {bad}", file=sys.stderr)
        return EXIT_INPUT
    names = list(S.SUITES) if args.suite == "all" else [args.suite]
    reports = []
    t0 = time.perf_counter()
    try:
        for name in names:
            reports.append(run(name, args.seed, args.trials, tuple(primes), args.budget, args.max_total_dim, args.jobs))
    except kan.ResourceError as e:
        print(f"resource cap: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    print(f"wall time {time.perf_counter() - t0:.2f}s", file=sys.stderr)
    if args.witness_dir:
        for rep in reports:
            write_witnesses(rep, args.witness_dir)
    if args.out == "json":
        payload = reports[0] if len(reports) == 1 else {"schema": SCHEMA, "reports": reports}
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=1) + "\n")
    else:
        sys.stdout.write("\n".join(to_markdown(r) for r in reports))
    return EXIT_OK if all(r["ok"] for r in reports) else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
