"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Sequence

from .errors import LieDataError
from .grading import Grading, MODEL_G2_DIAGRAM, dims_report, grading_from_diagram
from .levi_decomp import binomial_size, g2_closed_form_sk, levi_constituents, sym_power_multiset
from .orbit_mult import multiplicity, verify_model
from .rootsys import Root, RootSystem, build_root_system, is_dominant, parse_type

CARTAN_CONVENTION = "cartan[i][j] = alpha_i(h_alpha_j)"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _resolve_type(args: argparse.Namespace) -> RootSystem:
    label = args.type.upper()
    if len(label) > 1:
        letter, rank = parse_type(label)
        if args.rank is not None and args.rank != rank:
            raise UsageError(f"--rank {args.rank} contradicts --type {args.type}")
    else:
        if args.rank is None:
            raise UsageError(f"--rank is required with --type {label}")
        letter, rank = label, args.rank
    return build_root_system(letter, rank)


def _grading(args: argparse.Namespace, rs: RootSystem) -> Grading:
    if args.diagram is None:
        if rs.name != "G2":
            raise UsageError("--diagram is required")
        return grading_from_diagram(rs, MODEL_G2_DIAGRAM)
    labels = _int_list(args.diagram)
    if len(labels) != rs.rank:
        raise UsageError(f"diagram has {len(labels)} labels, {rs.name} has rank {rs.rank}")
    return grading_from_diagram(rs, labels)


def _root_label(rs: RootSystem, root: Root) -> str:
    names = ["α", "β"] if rs.name == "G2" else [f"α{i + 1}" for i in range(rs.rank)]
    parts = []
    for c, name in zip(root.simple_coords, names):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        parts.append(("-" if c < 0 else "+") + mag + name)
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text


def _header(rs: RootSystem, g: Grading) -> dict[str, Any]:
    return {"type": rs.name, "cartan_convention": CARTAN_CONVENTION,
            "cartan": [list(r) for r in rs.cartan], "diagram": list(g.diagram)}


def _dump_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _dump_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def cmd_grading(args: argparse.Namespace) -> tuple[str, int]:
    rs = _resolve_type(args)
    g = _grading(args, rs)
    dims = dims_report(g)
    names = "αβ" if rs.name == "G2" else [str(i + 1) for i in range(rs.rank)]
    h_text = " + ".join(f"{c} h_{n}" for c, n in zip(g.h.coroot_coords, names) if c) or "0"
    data = {
        **_header(rs, g),
        "h": list(g.h.coroot_coords),
        "pieces": {str(m): [list(r.simple_coords) for r in roots] for m, roots in g.pieces.items()},
        "levi_nodes": list(g.levi_nodes),
        "levi_roots": [list(r.simple_coords) for r in g.levi_roots],
        "o_weights": [{"h_value": w.h_value, "levi_coords": list(w.levi_coords),
                       "full": list(w.full)} for w in g.o_weights],
        "dims": dims.as_dict(),
    }
    if args.format == "json":
        return _dump_json(data), EXIT_OK
    if args.format == "csv":
        rows = [(m, _root_label(rs, r), " ".join(map(str, r.simple_coords)))
                for m, roots in g.pieces.items() for r in roots]
        return _dump_csv(["degree", "root", "simple_coords"], rows), EXIT_OK
    lines = [f"type {rs.name}  diagram {','.join(map(str, g.diagram))}  ({CARTAN_CONVENTION})",
             f"h = {h_text}   coroot coordinates {list(g.h.coroot_coords)}", "pieces:"]
    for m, roots in g.pieces.items():
        lines.append(f"  g({m:+d}): " + ", ".join(_root_label(rs, r) for r in roots))
    lines.append("levi roots: " + (", ".join(_root_label(rs, r) for r in g.levi_roots) or "none"))
    lines.append("o weights (h_value, levi coords, full): " + (", ".join(
        f"({w.h_value}, {list(w.levi_coords)}, {list(w.full)})" for w in g.o_weights) or "none"))
    lines.append("dims: " + "  ".join(f"{k}={v}" for k, v in dims.as_dict().items()))
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_compute(args: argparse.Namespace) -> tuple[str, int]:
    rs = _resolve_type(args)
    g = _grading(args, rs)
    if args.lam is None:
        raise UsageError("--lambda is required")
    lam = _int_list(args.lam)
    if len(lam) != rs.rank:
        raise UsageError(f"lambda has {len(lam)} coordinates, {rs.name} has rank {rs.rank}")
    if not is_dominant(rs, lam):
        raise UsageError(f"lambda not dominant: {list(lam)}")
    report = multiplicity(rs, g, lam)
    terms = [{"w_length": t.w.length, "sign": t.w.sign, "mu_fund": list(t.mu.full),
              "k": t.k, "q": t.q} for t in report.terms]
    data = {**_header(rs, g), "lambda": list(report.lam), "lambda_dual": list(report.lam_dual),
            "k_bound": report.k_bound, "total": report.total, "terms": terms}
    if args.format == "json":
        return _dump_json(data), EXIT_OK
    if args.format == "csv":
        rows = [(t["w_length"], t["sign"], " ".join(map(str, t["mu_fund"])), t["k"], t["q"])
                for t in terms]
        return _dump_csv(["w_length", "sign", "mu_fund", "k", "q"], rows), EXIT_OK
    lines = [f"type {rs.name}  diagram {','.join(map(str, g.diagram))}  ({CARTAN_CONVENTION})",
             f"lambda {list(report.lam)}  dual {list(report.lam_dual)}  k_bound {report.k_bound}",
             f"multiplicity {report.total}"]
    for t in terms:
        lines.append(f"  w_length={t['w_length']} sign={t['sign']:+d} mu={t['mu_fund']} "
                     f"k={t['k']} q={t['q']}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_verify_model(args: argparse.Namespace) -> tuple[str, int]:
    rs = _resolve_type(args)
    g = _grading(args, rs)
    if args.bound is None or args.bound < 1:
        raise UsageError("--bound must be a positive integer")
    result = verify_model(rs, g, args.bound, workers=args.jobs)
    code = EXIT_OK if result.passed else EXIT_FAIL
    lam_cols = [f"lambda{i + 1}" for i in range(rs.rank)]
    if args.format == "json":
        rows = [{"lambda": list(r.lam), "multiplicity": r.multiplicity,
                 "bruteforce": r.bruteforce, "agree": r.agree} for r in result.rows]
        data = {**_header(rs, g), "bound": args.bound, "checked": len(rows),
                "passed": result.passed, "rows": rows}
        return _dump_json(data), code
    rows = [(*r.lam, r.multiplicity, "" if r.bruteforce is None else r.bruteforce,
             str(r.agree).lower()) for r in result.rows]
    header = lam_cols + ["multiplicity", "bruteforce", "agree"]
    if args.format == "csv":
        return _dump_csv(header, rows), code
    lines = [f"type {rs.name}  diagram {','.join(map(str, g.diagram))}  bound {args.bound}",
             "  ".join(header)]
    lines += ["  ".join(str(x) for x in row) for row in rows]
    lines.append(f"{len(rows)} weights checked: {'PASS' if result.passed else 'FAIL'}")
    if not result.passed:
        lines.append("failing lambda: " + " ".join(str(list(lam)) for lam in result.failures))
    return "\n".join(lines) + "\n", code


def cmd_sk_table(args: argparse.Namespace) -> tuple[str, int]:
    rs = _resolve_type(args)
    g = _grading(args, rs)
    if args.k_max is None or args.k_max < 0:
        raise UsageError("--k-max must be a non-negative integer")
    is_model = rs.name == "G2" and g.diagram == MODEL_G2_DIAGRAM
    zero = g.levi_weight((0,) * rs.rank)
    dim_o = len(g.o_weights)
    rows = []
    for k in range(args.k_max + 1):
        size = sym_power_multiset(g.o_weights, k, zero).total
        generic = levi_constituents(g, k)
        equal = None
        tags: dict = {}
        if is_model:
            closed = g2_closed_form_sk(k)
            tags = {c.mu: c.tag for c in closed}
            equal = sorted((c.mu, c.multiplicity) for c in generic) == \
                sorted((c.mu, c.multiplicity) for c in closed)
        rows.append({
            "k": k, "size": size, "binomial": binomial_size(dim_o, k),
            "constituents": [{"mu_fund": list(c.mu.full), "h_value": c.mu.h_value,
                              "multiplicity": c.multiplicity,
                              "tag": list(tags[c.mu]) if c.mu in tags else None}
                             for c in generic],
            "equal": equal,
        })
    ok = all(r["equal"] is not False and r["size"] == r["binomial"] for r in rows)
    code = EXIT_OK if ok else EXIT_FAIL
    if args.format == "json":
        return _dump_json({**_header(rs, g), "k_max": args.k_max, "passed": ok, "rows": rows}), code

    def fmt(c: dict) -> str:
        tag = "" if c["tag"] is None else f"(k,q)={tuple(c['tag'])}"
        return f"{c['mu_fund']}x{c['multiplicity']}{tag}"

    def flag(r: dict) -> str:
        return "n/a" if r["equal"] is None else str(r["equal"]).lower()

    if args.format == "csv":
        table = [(r["k"], r["size"], r["binomial"], " ".join(fmt(c) for c in r["constituents"]),
                  flag(r)) for r in rows]
        return _dump_csv(["k", "size", "binomial", "constituents", "equal"], table), code
    lines = [f"type {rs.name}  diagram {','.join(map(str, g.diagram))}  dim o = {dim_o}"]
    for r in rows:
        lines.append(f"k={r['k']:<3d} size={r['size']:<5d} binomial={r['binomial']:<5d} "
                     f"equal={flag(r):<5s} " + " ".join(fmt(c) for c in r["constituents"]))
    lines.append("PASS" if ok else "FAIL")
    return "\n".join(lines) + "\n", code


COMMANDS = {"grading": cmd_grading, "compute": cmd_compute,
            "verify-model": cmd_verify_model, "sk-table": cmd_sk_table}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modelorbit",
        description="Multiplicities in rings of functions on nilpotent orbits.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", required=False, default="G2",
                        help="type letter A..G, or a full label such as G2 (default G2)")
    common.add_argument("--rank", type=int, help="rank, when --type is a bare letter")
    common.add_argument("--diagram", help="weighted Dynkin diagram, e.g. 1,0 (G2 default 1,0)")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", help="write the report to this path")

    sub.add_parser("grading", parents=[common], help="show the grading of a weighted diagram")
    p = sub.add_parser("compute", parents=[common], help="multiplicity of one irreducible")
    p.add_argument("--lambda", dest="lam", help="dominant weight in fundamental coordinates")
    p = sub.add_parser("verify-model", parents=[common],
                       help="check multiplicity one over all dominant weights up to a bound")
    p.add_argument("--bound", type=int, default=12)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p = sub.add_parser("sk-table", parents=[common],
                       help="Levi decomposition of S^k(o) against the G2 closed form")
    p.add_argument("--k-max", type=int, default=12)
    return parser


def _join_values(argv: Sequence[str]) -> list[str]:
    # keep values such as "-1,2" from being parsed as options
    out: list[str] = []
    it = iter(argv)
    for a in it:
        if a in ("--lambda", "--diagram"):
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_join_values(sys.argv[1:] if argv is None else argv))
    try:
        text, code = COMMANDS[args.command](args)
    except (UsageError, LieDataError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
