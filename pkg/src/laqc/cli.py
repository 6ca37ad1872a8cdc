"""Command-line front end: ``laqc compute | sweep | validate | oracle-compare``.

Exit status: 0 success, 1 physicality or tolerance failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from pathlib import Path

import numpy as np

from laqc import __version__
from laqc.quantifiers import (
    GridSpec,
    classical_correlations_bd,
    classical_correlations_numeric,
    laqc_bd,
    laqc_numeric,
)
from laqc.states import (
    EIGENVALUE_LABELS,
    BDTriple,
    bd_eigenvalues,
    random_physical_states,
    tetrahedron_violations,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SWEEP_AXES = ("c1", "c2", "c3", "werner_z")


class UsageError(Exception):
    pass


# -- output ----------------------------------------------------------------


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".12g")
    return str(value)


def _json_value(value):
    if isinstance(value, np.generic):
        return value.item()
    return value


def render(rows: list[dict], meta: dict, fmt: str) -> str:
    if fmt == "json":
        doc = {"meta": meta, "rows": [{k: _json_value(v) for k, v in r.items()} for r in rows]}
        return json.dumps(doc, indent=2) + "\n"
    columns: list[str] = []
    for row in rows:
        columns.extend(k for k in row if k not in columns)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_cell(row.get(k)) for k in columns])
    return buf.getvalue()


def emit(text: str, output: str | None) -> None:
    if output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


# -- shared row building ---------------------------------------------------


def _violation_text(violations) -> str:
    return "; ".join(f"eigenvalue {label} = {value:.12g} < 0" for label, value in violations)


def quantifier_fields(state: BDTriple, grid: GridSpec | None) -> dict:
    """Analytic quantifiers, plus numeric ones and deltas when ``grid`` is given."""
    c = classical_correlations_bd(state)
    l = laqc_bd(state)
    row = {
        "c_min": c.extremal_coefficient,
        "c_max": l.extremal_coefficient,
        "C": c.value,
        "C_case": c.case_name,
        "L": l.value,
        "L_case": l.case_name,
    }
    if grid is not None:
        cn = classical_correlations_numeric(state, grid, general=False)
        ln = laqc_numeric(state, grid, classical=cn)
        row.update(
            {
                "C_numeric": cn.value,
                "C_delta": abs(cn.value - c.value),
                "C_theta": cn.arg_angles["theta"],
                "C_phi": cn.arg_angles["phi"],
                "L_numeric": ln.value,
                "L_delta": abs(ln.value - l.value),
                "L_basis": ln.case_name,
                "L_theta": ln.arg_angles["theta"],
                "L_phi": ln.arg_angles["phi"],
                "L_Phi1": ln.arg_angles["Phi1"],
                "L_Phi2": ln.arg_angles["Phi2"],
            }
        )
    return row


def _grid_meta(grid: GridSpec) -> dict:
    return {
        "theta_steps": grid.theta_steps,
        "phi_steps": grid.phi_steps,
        "refine_rounds": grid.refine_rounds,
        "refine_shrink": grid.refine_shrink,
        "phase_steps": grid.phase_steps,
    }


def _meta(args, grid: GridSpec, **extra) -> dict:
    return {"version": __version__, "command": args.command, "grid": _grid_meta(grid),
            "seed": getattr(args, "seed", None), **extra}


# -- commands --------------------------------------------------------------


def cmd_compute(args, grid: GridSpec) -> int:
    try:
        state = BDTriple(args.c1, args.c2, args.c3)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    violations = tetrahedron_violations(state)
    if violations:
        print(f"error: unphysical state {state.as_tuple()}: {_violation_text(violations)}",
              file=sys.stderr)
        return EXIT_FAIL
    row = {"c1": state.c1, "c2": state.c2, "c3": state.c3, "physical": True}
    for k, value in enumerate(bd_eigenvalues(state), start=1):
        row[f"eig{k}"] = float(value)
    row.update(quantifier_fields(state, grid if args.numeric else None))
    emit(render([row], _meta(args, grid, eigenvalue_order=list(EIGENVALUE_LABELS)), args.format),
         args.output)
    if args.numeric and max(row["C_delta"], row["L_delta"]) > args.tol:
        print(f"error: analytic and numeric paths differ by more than {args.tol:g}",
              file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def sweep_states(axis: str, start: float, stop: float, steps: int, fixed: dict) -> list:
    """Sample points of a sweep as ``(value, state_or_None, reason)``."""
    if axis not in SWEEP_AXES:
        raise UsageError(f"axis must be one of {', '.join(SWEEP_AXES)}")
    if steps < 2:
        raise UsageError("steps must be at least 2")
    if start > stop:
        raise UsageError("start must not exceed stop")
    bound = (0.0, 1.0) if axis == "werner_z" else (-1.0, 1.0)
    if start < bound[0] or stop > bound[1]:
        raise UsageError(f"{axis} range must lie within [{bound[0]:g}, {bound[1]:g}]")
    for name, value in fixed.items():
        if abs(value) > 1.0:
            raise UsageError(f"fixed {name} must lie in [-1, 1]")
    out = []
    for value in np.linspace(start, stop, steps):
        value = float(value)
        if axis == "werner_z":
            coeffs = (-value, -value, -value)
        else:
            coeffs = tuple(value if name == axis else fixed[name] for name in ("c1", "c2", "c3"))
        state = BDTriple(*coeffs)
        out.append((value, state, _violation_text(tetrahedron_violations(state))))
    return out


def cmd_sweep(args, grid: GridSpec) -> int:
    fixed = {"c1": args.fix_c1, "c2": args.fix_c2, "c3": args.fix_c3}
    samples = sweep_states(args.axis, args.start, args.stop, args.steps, fixed)
    rows = []
    for value, state, reason in samples:
        row = {"axis": args.axis, "value": value, "c1": state.c1, "c2": state.c2,
               "c3": state.c3, "physical": not reason, "reason": reason}
        if reason:
            keys = ["c_min", "c_max", "C", "C_case", "L", "L_case"]
            if args.numeric:
                keys += ["C_numeric", "C_delta", "C_theta", "C_phi", "L_numeric", "L_delta",
                         "L_basis", "L_theta", "L_phi", "L_Phi1", "L_Phi2"]
            row.update(dict.fromkeys(keys))
        else:
            row.update(quantifier_fields(state, grid if args.numeric else None))
        rows.append(row)
    emit(render(rows, _meta(args, grid, axis=args.axis, fixed=fixed), args.format), args.output)
    return EXIT_OK


_SPLIT = re.compile(r"[,\s]+")


def read_triples(path: str) -> tuple[list[tuple[int, tuple[float, ...]]], list[str]]:
    """Parse one triple per line; ``#`` starts a comment. Returns (rows, errors)."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc
    rows, errors = [], []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        fields = [f for f in _SPLIT.split(body) if f]
        try:
            values = tuple(float(f) for f in fields)
        except ValueError:
            errors.append(f"{path}:{lineno}: not a number in {body!r}")
            continue
        if len(values) != 3 or not all(np.isfinite(values)):
            errors.append(f"{path}:{lineno}: expected 3 finite numbers, got {len(values)} fields")
            continue
        rows.append((lineno, values))
    return rows, errors


def cmd_validate(args, grid: GridSpec) -> int:
    triples, errors = read_triples(args.path)
    for message in errors:
        print(f"error: {message}", file=sys.stderr)
    rows = []
    for lineno, (c1, c2, c3) in triples:
        try:
            reason = _violation_text(tetrahedron_violations(BDTriple(c1, c2, c3)))
        except ValueError as exc:
            reason = str(exc)
        rows.append({"line": lineno, "c1": c1, "c2": c2, "c3": c3,
                     "physical": not reason, "reason": reason})
    n_phys = sum(r["physical"] for r in rows)
    summary = {"rows": len(rows), "physical": n_phys, "unphysical": len(rows) - n_phys,
               "malformed": len(errors)}
    emit(render(rows, _meta(args, grid, summary=summary), args.format), args.output)
    print(f"{summary['rows']} rows: {n_phys} physical, {summary['unphysical']} unphysical, "
          f"{summary['malformed']} malformed", file=sys.stderr)
    if errors:
        return EXIT_USAGE
    return EXIT_OK if n_phys == len(rows) else EXIT_FAIL


def oracle_compare(states: list[BDTriple], grid: GridSpec) -> list[dict]:
    rows = []
    for index, state in enumerate(states):
        fields = quantifier_fields(state, grid)
        rows.append({"index": index, "c1": state.c1, "c2": state.c2, "c3": state.c3,
                     "C": fields["C"], "C_numeric": fields["C_numeric"],
                     "C_delta": fields["C_delta"], "L": fields["L"],
                     "L_numeric": fields["L_numeric"], "L_delta": fields["L_delta"]})
    return rows


def summarize(rows: list[dict], tol: float) -> dict:
    worst_c = max(rows, key=lambda r: r["C_delta"])
    worst_l = max(rows, key=lambda r: r["L_delta"])
    n_fail = sum(max(r["C_delta"], r["L_delta"]) > tol for r in rows)
    return {
        "count": len(rows),
        "tol": tol,
        "max_delta_C": worst_c["C_delta"],
        "worst_C_c1": worst_c["c1"], "worst_C_c2": worst_c["c2"], "worst_C_c3": worst_c["c3"],
        "max_delta_L": worst_l["L_delta"],
        "worst_L_c1": worst_l["c1"], "worst_L_c2": worst_l["c2"], "worst_L_c3": worst_l["c3"],
        "failures": n_fail,
        "passed": n_fail == 0,
    }


def cmd_oracle_compare(args, grid: GridSpec) -> int:
    if args.count < 1:
        raise UsageError("count must be at least 1")
    injected = [BDTriple.physical(*_parse_triple(t)) for t in args.inject]
    states = (injected + random_physical_states(args.count, args.seed))[: args.count]
    rows = oracle_compare(states, grid)
    summary = summarize(rows, args.tol)
    out_rows = rows if args.details else [summary]
    emit(render(out_rows, _meta(args, grid, summary=summary),
                args.format), args.output)
    return EXIT_OK if summary["passed"] else EXIT_FAIL


# -- argument parsing ------------------------------------------------------


def _parse_triple(text: str) -> tuple[float, float, float]:
    fields = [f for f in _SPLIT.split(text.strip()) if f]
    if len(fields) != 3:
        raise UsageError(f"expected three comma-separated numbers, got {text!r}")
    try:
        return tuple(float(f) for f in fields)
    except ValueError as exc:
        raise UsageError(f"not a number in {text!r}") from exc


def _parse_grid(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected T,P,R")
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError("grid entries must be integers") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", default=None, help="output file (default: stdout)")
    common.add_argument("--grid", type=_parse_grid, default=(256, 256, 3),
                        help="theta steps, phi steps, refinement rounds (default 256,256,3)")
    common.add_argument("--phi-steps", type=int, default=512,
                        help="grid points per complementary-basis phase (default 512)")
    common.add_argument("--tol", type=float, default=1e-6,
                        help="allowed |analytic - numeric| (default 1e-6)")
    common.add_argument("--numeric", action="store_true", help="also run the brute-force path")

    parser = argparse.ArgumentParser(prog="laqc", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="quantifiers of one state")
    for name in ("c1", "c2", "c3"):
        p.add_argument(name, type=float)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("sweep", parents=[common], help="quantifiers along one axis")
    p.add_argument("axis", choices=SWEEP_AXES)
    p.add_argument("start", type=float)
    p.add_argument("stop", type=float)
    p.add_argument("steps", type=int)
    p.add_argument("--c1", dest="fix_c1", type=float, default=0.0)
    p.add_argument("--c2", dest="fix_c2", type=float, default=0.0)
    p.add_argument("--c3", dest="fix_c3", type=float, default=0.0)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("validate", parents=[common], help="physicality of triples in a file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("oracle-compare", parents=[common],
                       help="analytic vs brute force on random physical states")
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inject", action="append", default=[], metavar="C1,C2,C3",
                   help="state to place before the random samples (repeatable)")
    p.add_argument("--details", action="store_true", help="emit one row per sample")
    p.set_defaults(func=cmd_oracle_compare)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        t, p, r = args.grid
        grid = GridSpec(theta_steps=t, phi_steps=p, refine_rounds=r, phase_steps=args.phi_steps)
        return args.func(args, grid)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
