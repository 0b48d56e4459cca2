"""Command-line front end.

Exit status: 0 on success (including infeasible inputs, which give the
zero polynomial with a warning), 1 when a verification fails, 2 on
invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import csp as csp_mod
from . import geometry as geo
from . import hessenberg as hes
from .colourings import enumerate_colourings
from .partitions import kostka_table


def _dump(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _parse_r(args) -> hes.ReverseHessenberg:
    if args.r is None:
        raise ValueError("--r is required for this command")
    return hes.parse(args.r)


def _warn_infeasible(r, m):
    print(f"warning: no proper colourings for r={r.to_text()!r} with m={m}; "
          "result is the zero polynomial", file=sys.stderr)


def _full_report(r: hes.ReverseHessenberg, m: int, parallel: bool) -> dict:
    c = csp_mod.compute_csp(r, m, parallel=parallel)
    e = csp_mod.schur_expand(c)
    v = csp_mod.verify_expansion(e)
    feasible = r.is_feasible(m)
    return {
        "n": r.n,
        "m": m,
        "r": r.to_json(),
        "E_r": r.edge_count(),
        "d_r": geo.dimension(r, m) if feasible else None,
        "monomial": csp_mod.csp_to_json(c),
        "schur": csp_mod.schur_to_json(e),
        "verification": csp_mod.verification_to_json(v),
    }


def cmd_info(args) -> int:
    r = _parse_r(args)
    m = args.m
    feasible = r.is_feasible(m)
    graph = r.edges()
    data = {
        "n": r.n,
        "r": r.to_json(),
        "E_r": r.edge_count(),
        "edges": sorted([j, i] for j, i in graph.edges),
        "m": m,
        "feasible": feasible,
        "d_r": geo.dimension(r, m) if feasible else None,
        "fibre_dims": [geo.fibre_dimension(r, m, i) for i in range(1, r.n + 1)]
        if feasible else None,
    }
    if args.format == "json":
        print(_dump(data))
    else:
        print(f"n = {data['n']}")
        print(f"r = {r.to_text()}")
        print(f"E_r = {data['E_r']}")
        print(f"edges = {data['edges']}")
        print(f"feasible for m={m}: {feasible}")
        if feasible:
            print(f"d_r = {data['d_r']}")
            print(f"fibre dimensions = {data['fibre_dims']}")
    return 0


def cmd_csp(args) -> int:
    r = _parse_r(args)
    if not r.is_feasible(args.m):
        _warn_infeasible(r, args.m)
    report = _full_report(r, args.m, args.parallel)
    if args.format == "json":
        print(_dump({k: report[k] for k in ("n", "m", "r", "E_r", "d_r", "monomial")}))
    else:
        print(f"CSP for r = {r.to_text()}, m = {args.m} (E_r = {report['E_r']})")
        for entry in report["monomial"]:
            from .qpoly import QPoly
            print(f"  x^{tuple(entry['weight'])}: {QPoly.from_json(entry['poly'])}")
    return 0


def cmd_schur(args) -> int:
    r = _parse_r(args)
    if not r.is_feasible(args.m):
        _warn_infeasible(r, args.m)
    report = _full_report(r, args.m, args.parallel)
    if args.format == "json":
        print(_dump({k: report[k] for k in ("n", "m", "r", "E_r", "d_r", "schur")}))
    else:
        print(f"Schur coefficients (center2 = E_r = {report['E_r']})")
        from .qpoly import QPoly
        for entry in report["schur"]:
            print(f"  s_{tuple(entry['partition'])}: {QPoly.from_json(entry['poly'])}")
    return 0


def cmd_verify(args) -> int:
    r = _parse_r(args)
    if not r.is_feasible(args.m):
        _warn_infeasible(r, args.m)
    report = _full_report(r, args.m, args.parallel)
    ver = report["verification"]
    if args.format == "json":
        print(_dump(report))
    else:
        print(f"verification for r = {r.to_text()}, m = {args.m}: "
              f"{'PASS' if ver['pass'] else 'FAIL'}")
        for entry in ver["per_lambda"]:
            flags = ", ".join(
                f"{k}={entry[k]}" for k in ("nonnegative", "palindromic", "support_ok")
            )
            print(f"  lambda = {tuple(entry['partition'])}: {flags}")
        print(f"  reconstruction = {ver['reconstruction']}")
    return 0 if ver["pass"] else 1


def cmd_poincare(args) -> int:
    r = _parse_r(args)
    if not r.is_feasible(args.m):
        print(f"error: infeasible (r={r.to_text()!r}, m={args.m}); "
              "the variety is empty", file=sys.stderr)
        return 2
    rep = geo.geometry_report(r, args.m, parallel=args.parallel)
    if args.format == "json":
        print(_dump(rep.to_json()))
    else:
        print(f"poincare product = {rep.poincare_product}")
        print(f"poincare paving  = {rep.poincare_bb}")
        print(f"d_r = {rep.d_r}")
        print(f"equal = {rep.poincare_product == rep.poincare_bb}")
    return 0 if rep.identities_pass else 1


def cmd_colourings(args) -> int:
    r = _parse_r(args)
    if not r.is_feasible(args.m):
        _warn_infeasible(r, args.m)
    rows = []
    for idx, (kappa, st) in enumerate(enumerate_colourings(r, args.m)):
        if args.limit is not None and idx >= args.limit:
            break
        if args.format == "json":
            rows.append({
                "kappa": list(kappa),
                "asc": st.ascents,
                "wt": list(st.weight),
                "d": st.cell_dim,
            })
        else:
            body = " ".join(str(c) for c in kappa)
            wt = ",".join(str(w) for w in st.weight)
            print(f"{body} | asc={st.ascents} wt={wt} d={st.cell_dim}")
    if args.format == "json":
        print(_dump(rows))
    return 0


def cmd_kostka(args) -> int:
    if args.n is None:
        raise ValueError("--n is required for kostka")
    table = kostka_table(args.n, args.m)
    if args.format == "json":
        print(_dump(table.to_json()))
    else:
        print("partitions: " + " ".join(str(p) for p in table.index))
        for lam, row in zip(table.index, table.matrix):
            print(f"{str(lam):>16}: " + " ".join(str(v) for v in row))
    return 0


def cmd_sweep(args) -> int:
    if args.n is None:
        raise ValueError("--n is required for sweep")
    cap = args.m_max if args.m_max is not None else args.m
    if cap is None:
        raise ValueError("sweep needs --m or --m-max as the colour cap")
    checked = 0
    failures = []
    for r in hes.all_reverse_hessenberg(args.n):
        checked += 1
        for m in range(r.min_feasible_m(), cap + 1):
            c = csp_mod.compute_csp(r, m, parallel=args.parallel)
            v = csp_mod.verify_expansion(csp_mod.schur_expand(c))
            g = geo.geometry_report(r, m, parallel=args.parallel)
            if not v.passed:
                failures.append((r, m, "schur verification"))
            if not g.identities_pass:
                failures.append((r, m, "poincare consistency"))
    for r, m, what in failures:
        print(f"FAIL r={r.to_text()} m={m}: {what}")
    print(f"{checked} functions checked, {len(failures)} failures")
    return 0 if not failures else 1


_COMMANDS = {
    "info": cmd_info,
    "csp": cmd_csp,
    "schur": cmd_schur,
    "verify": cmd_verify,
    "poincare": cmd_poincare,
    "colourings": cmd_colourings,
    "kostka": cmd_kostka,
    "sweep": cmd_sweep,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromaq",
        description="Exact chromatic quasisymmetric polynomials of unit "
                    "interval graphs and their Schur/geometry checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--r", help="reverse Hessenberg function, e.g. 0,1,1,3")
        p.add_argument("--n", type=int, help="vertex count (kostka, sweep)")
        p.add_argument("--m", type=int, help="number of colours")
        p.add_argument("--m-max", type=int, dest="m_max",
                       help="colour cap for sweep")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--parallel", action="store_true")
        p.add_argument("--limit", type=int, default=None,
                       help="truncate streamed colouring output")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    needs_m = args.command in (
        "info", "csp", "schur", "verify", "poincare", "colourings", "kostka")
    try:
        if needs_m and args.m is None:
            raise ValueError(f"--m is required for {args.command}")
        if args.m is not None and args.m < 1:
            raise ValueError("m must be >= 1")
        if args.n is not None and args.n < 0:
            raise ValueError("n must be >= 0")
        return _COMMANDS[args.command](args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
