"""Command-line driver.

Exit codes: 0 ok, 1 a bound violation was found (counterexample written),
2 usage or input error, 3 node budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from .bounds import Formula, check_bound, g_t, report_dict
from .constructions import (
    ConstructionReport,
    amplify_copies,
    coherent_lower_bound,
    digit_reversal_family,
    grouped_family,
    planar_coherent_family,
    trivial_family,
)
from .directions import DirectionVector, is_2_coherent
from .errors import BudgetExceeded, DirectionParseError, PreconditionError
from .family import BoxFamily
from .hypergraph import DEFAULT_NODE_BUDGET, count_hyperedges, find_biclique
from .oracle import zarankiewicz_bruteforce
from .reductions import slice_general, slice_restricted
from .serialization import dump_instance, family_to_dict, load, save

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

CSV_COLUMNS = ["construction", "params", "n_total", "edges", "g_t", "ratio", "free_t", "certified"]


class UsageError(Exception):
    pass


def decimal6(x: Fraction) -> str:
    """Exact rational rounded half-up to 6 decimals."""
    scaled = x * 10**6
    q = (scaled.numerator * 2 + scaled.denominator) // (2 * scaled.denominator)
    sign = "-" if q < 0 else ""
    q = abs(q)
    return f"{sign}{q // 10**6}.{q % 10**6:06d}"


def _direction(text: str | None, what: str = "--F") -> DirectionVector:
    if text is None:
        raise UsageError(f"{what} is required")
    return DirectionVector.parse(text)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(args, payload: dict) -> None:
    text = json.dumps(payload, indent=1)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)


def _load_file(args):
    if not args.file:
        raise UsageError("--file is required")
    try:
        return load(args.file)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {args.file}: {exc}")


def cmd_classify(args) -> int:
    F = DirectionVector.parse(args.vector)
    v = is_2_coherent(F)
    if args.format == "json":
        print(json.dumps({
            "direction_vector": str(F),
            "coherent": v.coherent,
            "witness_k": v.witness_k,
            "witness_directions": list(v.witness_directions) if v.witness_directions else None,
            "branch": v.branch,
        }))
    else:
        if v.coherent:
            a, b = v.witness_directions
            print(f"{F}: 2-coherent (all parts but {v.witness_k} share coordinates {a},{b})")
        else:
            print(f"{F}: non-2-coherent")
        print(f"branch: {v.branch}")
    return EXIT_OK


def _build(args) -> ConstructionReport:
    c = args.construction
    t = args.t
    if c == "trivial":
        if args.n is None:
            raise UsageError("--n is required")
        return trivial_family(_direction(args.F), args.n, t or 2)
    if c == "grouped":
        if args.n_vec is None:
            raise UsageError("--n-vec is required")
        return grouped_family(_direction(args.F), args.n_vec, t or 2)
    if args.b is None or args.k is None:
        raise UsageError("--b and --k are required")
    if c == "digit-reversal":
        rep = digit_reversal_family(args.b, args.k)
        return amplify_copies(rep, t) if t and t > 2 else rep
    if c == "planar":
        base = amplify_copies(digit_reversal_family(args.b, args.k), t or 2)
        return planar_coherent_family(_direction(args.F), base)
    if c == "lift":
        return coherent_lower_bound(_direction(args.F), args.b, args.k, t or 2)
    raise UsageError(f"unknown construction {c}")


def cmd_build(args) -> int:
    rep = _build(args)
    if args.certify:
        ok = rep.validate(args.budget_nodes)
        print(f"certified: {ok}", file=sys.stderr)
    if args.out:
        save(rep.family, args.out)
        print(
            f"wrote {args.out}: {rep.name}, sizes {list(rep.family.sizes)}, "
            f"{rep.claimed_edges} edges, claimed K_{rep.claimed_free_t}-free",
            file=sys.stderr,
        )
    else:
        print(json.dumps(family_to_dict(rep.family)))
    return EXIT_OK


def cmd_count(args) -> int:
    inst = _load_file(args)
    rep = count_hyperedges(inst, list_edges=args.list_edges)
    if args.format == "json" or args.list_edges:
        payload = {"edges": rep.edge_count, "sizes": list(inst.sizes)}
        if args.list_edges:
            payload["edge_list"] = [list(e) for e in rep.edges]
        print(json.dumps(payload))
    else:
        print(rep.edge_count)
    return EXIT_OK


def cmd_check(args) -> int:
    if args.t is None:
        raise UsageError("--t is required")
    inst = _load_file(args)
    rep = check_bound(args.formula, inst, args.t, s=args.s, budget_nodes=args.budget_nodes)
    out = report_dict(rep)
    print(json.dumps(out))
    if rep.satisfied is None:
        return EXIT_BUDGET
    if rep.satisfied is False:
        path = Path(args.out or "counterexample.json")
        path.write_text(json.dumps({"report": out, "instance": dump_instance(inst)}, indent=1) + "\n")
        print(f"violation written to {path}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_sweep(args) -> int:
    from .sweeps import run_default_sweep

    summary = run_default_sweep(
        args.formula, samples=args.samples, seed=args.seed,
        counterexample_dir=args.out, budget_nodes=args.budget_nodes,
    )
    print(json.dumps({
        "formula": summary.formula.value,
        "checked": len(summary.reports),
        "rejected": summary.rejected,
        "inconclusive": summary.inconclusive,
        "violations": len(summary.violations),
        "max_ratio": decimal6(summary.max_ratio),
        "counterexamples": [str(p) for p in summary.counterexamples],
    }))
    if summary.violations:
        return EXIT_VIOLATION
    return EXIT_BUDGET if summary.inconclusive else EXIT_OK


def cmd_slice(args) -> int:
    fam = _load_file(args)
    if not isinstance(fam, BoxFamily):
        raise UsageError("slice needs a box family file")
    if args.axis is None:
        dec = slice_restricted(fam)
        rows = [
            {"anchor": list(sl.anchor), "S": len(sl.horizontals), "T": len(sl.verticals), "edges": sl.edge_count()}
            for sl in dec.slices
        ]
        payload = {"anchors": len(dec.anchors), "checks": dec.checks, "slices": rows}
        if args.t is not None:
            payload["slices_with_biclique"] = [
                k for k, sl in enumerate(dec.slices)
                if find_biclique(sl.instance, args.t, budget_nodes=args.budget_nodes) is not None
            ]
    else:
        if args.parts is None or len(args.parts) != 2:
            raise UsageError("--parts j1,j2 is required with --axis")
        slices = slice_general(fam, args.axis, tuple(args.parts))
        payload = {
            "axis": args.axis,
            "direction_vector": str(slices[0].family.direction_vector) if slices else None,
            "coherent": is_2_coherent(slices[0].family.direction_vector).coherent if slices else None,
            "slices": [
                {"value": str(sl.value), "sizes": list(sl.family.sizes),
                 "edges": count_hyperedges(sl.family).edge_count}
                for sl in slices
            ],
        }
    _emit(args, payload)
    return EXIT_OK


def cmd_oracle(args) -> int:
    F = _direction(args.F)
    if args.n_vec is None:
        raise UsageError("--n-vec is required")
    res = zarankiewicz_bruteforce(
        F, args.n_vec, args.t or 2, grid_points=args.grid_points, budget=args.budget,
    )
    if args.out and res.witness_family is not None:
        save(res.witness_family, args.out)
    print(json.dumps({
        "direction_vector": str(F),
        "n_vec": args.n_vec,
        "t": args.t or 2,
        "z": res.z_value,
        "exhausted": res.exhausted,
        "search_space": res.search_space_size,
        "evaluated": res.evaluated,
    }))
    return EXIT_OK if res.exhausted else EXIT_BUDGET


def _certify(rep: ConstructionReport, budget: int) -> str:
    try:
        ok = find_biclique(rep.family, rep.claimed_free_t, budget_nodes=budget) is None
    except BudgetExceeded:
        return "budget"
    return "yes" if ok and rep.recount() == rep.claimed_edges else "no"


def _row(rep: ConstructionReport, ratio: Fraction, gt: int, certified: str) -> dict:
    params = ";".join(
        f"{k}={'x'.join(map(str, v)) if isinstance(v, (tuple, list)) else v}" for k, v in rep.params.items()
    )
    return {
        "construction": rep.name,
        "params": params,
        "n_total": sum(rep.family.sizes),
        "edges": rep.claimed_edges,
        "g_t": gt,
        "ratio": decimal6(ratio),
        "free_t": rep.claimed_free_t,
        "certified": certified,
    }


def _experiment_reports(args):
    """Yield (report, ratio, g_t) for the chosen experiment."""
    if args.name == "growth":
        k_min = 2 if args.b_equals_k else 1
        for k in range(k_min, args.k_max + 1):
            b = k if args.b_equals_k else (args.b or 2)
            rep = digit_reversal_family(b, k)
            if args.t and args.t > 2:
                rep = amplify_copies(rep, args.t)
            # Incidences per point; equals k for the plain construction.
            yield rep, Fraction(rep.claimed_edges, rep.family.sizes[0]), g_t(rep.family.sizes, rep.claimed_free_t)
    elif args.name == "trivial":
        F = _direction(args.F or "2: {1} {2}")
        t = args.t or 2
        for n in range(t, args.n_max + 1):
            rep = trivial_family(F, n, t)
            gt = g_t(rep.family.sizes, t)
            yield rep, Fraction(rep.claimed_edges, gt), gt
    elif args.name == "grouped":
        F = _direction(args.F or "2: {1} {2}")
        t = args.t or 2
        r = F.r
        for m in range(t * r, args.n_max + 1, r):
            rep = grouped_family(F, [m] * r, t)
            gt = g_t(rep.family.sizes, t)
            yield rep, Fraction(rep.claimed_edges, gt), gt
    else:
        raise UsageError(f"unknown experiment {args.name}")


def cmd_experiment(args) -> int:
    fmt = args.format or "csv"
    rows = []
    code = EXIT_OK
    try:
        for rep, ratio, gt in _experiment_reports(args):
            cert = _certify(rep, args.budget_nodes) if args.certify else "skipped"
            rows.append(_row(rep, ratio, gt, cert))
            if cert == "budget":
                code = EXIT_BUDGET
                break
    finally:
        buf = io.StringIO()
        if fmt == "csv":
            w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
        else:
            buf.write(json.dumps(rows, indent=1) + "\n")
        if args.out:
            Path(args.out).write_text(buf.getvalue())
        else:
            sys.stdout.write(buf.getvalue())
    return code


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--file", help="input family file (JSON)")
    shared.add_argument("--out", help="output path")
    shared.add_argument("--t", type=int, help="forbidden pattern size")
    shared.add_argument("--seed", type=int, default=0, help="seed for random sweeps")
    shared.add_argument("--budget-nodes", type=int, default=DEFAULT_NODE_BUDGET,
                        help="search-node budget for biclique searches")
    shared.add_argument("--format", choices=["json", "csv"], default=None)

    p = argparse.ArgumentParser(prog="boxzar", description="Zarankiewicz problems for box families")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[shared], help="decide 2-coherence of a direction vector")
    c.add_argument("vector", help='direction vector literal, e.g. "2: {} {1,2}"')
    c.set_defaults(func=cmd_classify)

    b = sub.add_parser("build", parents=[shared], help="build a lower-bound construction")
    b.add_argument("--construction", required=True,
                   choices=["trivial", "grouped", "digit-reversal", "planar", "lift"])
    b.add_argument("--F", help="direction vector literal")
    b.add_argument("--n", type=int)
    b.add_argument("--n-vec", type=_int_list)
    b.add_argument("--b", type=int)
    b.add_argument("--k", type=int)
    b.add_argument("--certify", action="store_true", help="recount and rerun the biclique search")
    b.set_defaults(func=cmd_build)

    n = sub.add_parser("count", parents=[shared], help="count hyperedges of a family file")
    n.add_argument("--list-edges", action="store_true")
    n.set_defaults(func=cmd_count)

    k = sub.add_parser("check", parents=[shared], help="check one bound on a family file")
    k.add_argument("--formula", required=True, choices=[f.value for f in Formula])
    k.add_argument("--s", type=int, help="first-side pattern size for K_{s,t} bounds")
    k.set_defaults(func=cmd_check)

    w = sub.add_parser("sweep", parents=[shared], help="random bound sweep with the default generators")
    w.add_argument("--formula", required=True, choices=[f.value for f in Formula])
    w.add_argument("--samples", type=int, default=1600)
    w.set_defaults(func=cmd_sweep)

    s = sub.add_parser("slice", parents=[shared], help="slice a family into lower-dimensional pieces")
    s.add_argument("--axis", type=int, help="slice along x_axis = const (default: diagonal slicing)")
    s.add_argument("--parts", type=_int_list, help="the two parts collapsed along --axis")
    s.set_defaults(func=cmd_slice)

    o = sub.add_parser("oracle", parents=[shared], help="exhaustive maximum over grid families")
    o.add_argument("--F", required=True, help="direction vector literal")
    o.add_argument("--n-vec", type=_int_list, required=True)
    o.add_argument("--grid-points", type=int)
    o.add_argument("--budget", type=int, default=2 * 10**6, help="families to visit")
    o.set_defaults(func=cmd_oracle)

    e = sub.add_parser("experiment", parents=[shared], help="CSV sweeps over constructions")
    e.add_argument("name", choices=["growth", "trivial", "grouped"])
    e.add_argument("--b", type=int)
    e.add_argument("--b-equals-k", action="store_true")
    e.add_argument("--k-max", type=int, default=4)
    e.add_argument("--n-max", type=int, default=12)
    e.add_argument("--F", help="direction vector literal")
    e.add_argument("--no-certify", dest="certify", action="store_false")
    e.set_defaults(func=cmd_experiment)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DirectionParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(f"  {exc.text}\n  {' ' * exc.position}^", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"error: node budget exceeded ({exc})", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
