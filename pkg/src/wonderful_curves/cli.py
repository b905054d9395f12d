"""Command-line entry point.

Examples::

    wonderful-curves roots G2
    wonderful-curves curve --type A3 --mult 1,0,1 --weight 1,0,0
    wonderful-curves curve --type G2 --additive theta-short --weight 2,-1
    wonderful-curves vmrt A2xG2 --weight '1,1;1,1'
    wonderful-curves orbits B3 --contains 1 --in 1,3
    wonderful-curves table remark-lines --max-rank 8
    wonderful-curves verify --all --max-rank 8 --format tsv

Exit status: 0 on success, 1 when a verified identity fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import curves, verification
from .errors import WonderfulError
from .reference import SCHEMA_VERSION
from .root_system import Cocharacter, SimpleType, Weight, all_types, build, root_to_weight
from .weyl import longest_word, minus_w0_permutation, oracle_cap_from_env, weyl_group_order
from .wonderful import (
    contraction_table,
    factor_degrees,
    minimal_family_product,
    orbit_closure_contains,
    vmrt_report,
)

EXAMPLES = {
    "roots": "roots E6",
    "curve": "curve --type A3 --mult 1,0,1 --weight 1,0,0",
    "vmrt": "vmrt A2xG2 --weight '1,1;1,1'",
    "orbits": "orbits B3 --contains 1 --in 1,3",
    "table": "table remark-short --max-rank 8",
    "verify": "verify --all --max-rank 8",
}


class UsageError(Exception):
    def __init__(self, message: str, command: str | None = None):
        example = EXAMPLES.get(command or "", "verify --all")
        super().__init__(f"{message}\nexample: wonderful-curves {example}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        command = self.prog.split()[-1] if " " in self.prog else None
        raise UsageError(f"{self.prog}: {message}", command)


# ---------------------------------------------------------------------------
# argument parsing helpers


def parse_ints(text: str, flag: str, command: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"{flag} expects comma-separated integers, got {text!r}", command) from None


def parse_types(text: str, command: str) -> list[SimpleType]:
    try:
        return [SimpleType.parse(atom) for atom in text.split("x")]
    except WonderfulError as exc:
        raise UsageError(f"bad type {text!r}: {exc}", command) from None


def parse_single_type(text: str, command: str) -> SimpleType:
    types = parse_types(text, command)
    if len(types) != 1:
        raise UsageError(f"{command} takes a simple type, not a product ({text!r})", command)
    return types[0]


def _coords(values: tuple[int, ...], rank: int, flag: str, command: str):
    if len(values) != rank:
        raise UsageError(f"{flag} needs {rank} coordinates, got {len(values)}", command)
    return values


# ---------------------------------------------------------------------------
# commands; each returns (results, ok)


def cmd_roots(args) -> tuple[list[dict], bool]:
    out = []
    for t in parse_types(args.type, "roots"):
        d = build(t)
        roots = []
        for a in d.positive_roots:
            roots.append({
                "root": list(a),
                "height": a.height,
                "weight": list(root_to_weight(d, a)),
                "coroot": list(d.coroots[a]),
                "long": d.is_long(a),
            })
        out.append({
            "type": str(t),
            "cartan": [list(r) for r in d.cartan],
            "positive_roots": roots,
            "theta": list(d.theta),
            "theta_coroot": list(d.theta_coroot),
            "theta_short": None if d.theta_short is None else list(d.theta_short),
            "theta_short_coroot": None if d.theta_short is None else list(d.theta_short_coroot),
            "rho": list(d.rho),
            "kappa": list(d.kappa),
            "minus_w0_permutation": list(minus_w0_permutation(d)),
            "w0_length": len(longest_word(d)),
            "weyl_order": weyl_group_order(d),
            "provenance": verification.DERIVED,
        })
    return out, True


def _report_record(d, report: curves.CurveReport, extra_weight) -> dict:
    rec = {
        "type": str(d.type),
        "degrees": {",".join(map(str, w)): v for w, v in report.degrees.items()},
        "divisor_degrees": list(report.divisor_degrees),
        "orbit_at_zero": list(report.orbit_at_zero.subset),
        "orbit_at_infinity": list(report.orbit_at_infinity.subset),
        "smooth": report.smooth,
        "indivisible": report.indivisible,
        "anticanonical_degree": report.anticanonical_degree,
        "provenance": verification.DERIVED,
    }
    if extra_weight is not None:
        rec["weight"] = list(extra_weight)
        rec["degree"] = report.degrees[extra_weight]
    return rec


def cmd_curve(args) -> tuple[list[dict], bool]:
    t = parse_single_type(args.type, "curve")
    d = build(t)
    weight = None
    weights = None
    if args.weight is not None:
        weight = Weight(_coords(parse_ints(args.weight, "--weight", "curve"), d.rank, "--weight", "curve"))
        weights = [d.fundamental_weight(i) for i in range(1, d.rank + 1)]
        if weight not in weights:
            weights.append(weight)
    if args.mult is not None:
        eta = Cocharacter(_coords(parse_ints(args.mult, "--mult", "curve"), d.rank, "--mult", "curve"))
        curve = curves.MultCurve(eta)
        rec = _report_record(d, curves.curve_report(d, curve, weights), weight)
        rec.update({"curve": "multiplicative", "cocharacter": list(eta)})
    else:
        which = args.additive.replace("-", "_")
        curve = curves.AddCurve(which)
        rec = _report_record(d, curves.curve_report(d, curve, weights), weight)
        rec.update({
            "curve": "additive",
            "root": which,
            "root_coords": list(curve.root(d)),
            "coroot": list(curves.distinguished_coroot(d, which)),
        })
        if which == "theta_short" and t.family in "BC" and t.rank == 2:
            rec["note"] = "rank 2 lies outside the range covered by the reference short-root table"
    return [rec], True


def cmd_vmrt(args) -> tuple[list[dict], bool]:
    types = parse_types(args.type, "vmrt")
    out = []
    for k, t in enumerate(types):
        v = vmrt_report(build(t))
        out.append({
            "factor": k,
            "type": str(t),
            "kappa_theta": v.kappa_theta,
            "dim_Kx": v.dim_Kx,
            "dim_P_Omin": v.dim_P_Omin,
            "offset": v.offset,
            "i0": v.i0,
            "family_description": v.family_description,
            "provenance": verification.DERIVED,
        })
    if len(types) > 1 or args.weight is not None:
        if args.weight is None:
            pol = [build(t).rho for t in types]
        else:
            parts = args.weight.split(";")
            if len(parts) != len(types):
                raise UsageError(f"--weight needs {len(types)} ';'-separated weights", "vmrt")
            pol = [Weight(_coords(parse_ints(p, "--weight", "vmrt"), t.rank, "--weight", "vmrt"))
                   for p, t in zip(parts, types)]
        out.append({
            "minimal_family_factors": minimal_family_product(types, pol),
            "factor_degrees": factor_degrees(types, pol),
            "polarization": [list(w) for w in pol],
            "provenance": verification.DERIVED,
        })
    return out, True


def cmd_orbits(args) -> tuple[list[dict], bool]:
    t = parse_single_type(args.type, "orbits")
    a = curves.OrbitLabel(t.rank, parse_ints(args.contains, "--contains", "orbits"))
    b = curves.OrbitLabel(t.rank, parse_ints(args.inside, "--in", "orbits"))
    return [{
        "type": str(t),
        "closure_of": list(a.subset),
        "orbit": list(b.subset),
        "contains": orbit_closure_contains(a, b),
        "codimensions": [a.codimension, b.codimension],
        "provenance": verification.DERIVED,
    }], True


def cmd_table(args) -> tuple[list[dict], bool]:
    rows, diff = verification.emit_table(args.name, args.max_rank)
    if diff:
        rows.append({"diff": diff, "provenance": verification.REFERENCE})
    return rows, not diff


def cmd_verify(args) -> tuple[list[dict], bool]:
    cap = args.oracle_cap if args.oracle_cap is not None else oracle_cap_from_env()
    if args.type:
        types = parse_types(args.type, "verify")
    else:
        types = all_types(args.max_rank)
    checks = verification.run_all(types=types, oracle_cap=cap)
    records = [c.record() for c in checks]
    ok = all(c.passed is not False for c in checks)
    records.append({"summary": verification.summarize(checks), "oracle_cap": cap, "provenance": verification.DERIVED})
    return records, ok


COMMANDS = {
    "roots": cmd_roots,
    "curve": cmd_curve,
    "vmrt": cmd_vmrt,
    "orbits": cmd_orbits,
    "table": cmd_table,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default="json")

    p = _Parser(prog="wonderful-curves", description="Curve invariants of wonderful compactifications.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("roots", parents=[common], help="root datum of a type or product")
    s.add_argument("type")

    s = sub.add_parser("curve", parents=[common], help="degrees and limit orbits of one curve")
    s.add_argument("--type", required=True)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--mult", metavar="C1,..,CL")
    g.add_argument("--additive", choices=("theta", "theta-short"))
    s.add_argument("--weight", metavar="A1,..,AL")

    s = sub.add_parser("vmrt", parents=[common], help="dimensions of the minimal family")
    s.add_argument("type")
    s.add_argument("--weight", metavar="A1,..;B1,..")

    s = sub.add_parser("orbits", parents=[common], help="closure order of boundary orbits")
    s.add_argument("type")
    s.add_argument("--contains", required=True, metavar="I")
    s.add_argument("--in", dest="inside", required=True, metavar="J")

    s = sub.add_parser("table", parents=[common], help="emit a reference table")
    s.add_argument("name", choices=sorted(verification.TABLES))
    s.add_argument("--max-rank", type=int, default=8)

    s = sub.add_parser("verify", parents=[common], help="check every identity")
    s.add_argument("--all", action="store_true", help="all admissible types up to --max-rank (the default)")
    s.add_argument("--type", help="restrict to one type or product")
    s.add_argument("--max-rank", type=int, default=8)
    s.add_argument("--oracle-cap", type=int)
    return p


def _query(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k != "format"}


def to_tsv(records: list[dict]) -> str:
    keys = sorted({k for r in records for k in r})
    lines = ["\t".join(keys)]
    for r in records:
        cells = []
        for k in keys:
            v = r.get(k, "")
            cells.append(v if isinstance(v, str) else json.dumps(v, sort_keys=True, separators=(",", ":")))
        lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"


def render(doc: dict, fmt: str) -> str:
    if fmt == "tsv":
        return to_tsv(doc["results"])
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        results, ok = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except WonderfulError as exc:
        print(f"error: {exc}\nexample: wonderful-curves {EXAMPLES.get(getattr(args, 'command', ''), 'verify --all')}",
              file=stderr)
        return 2
    except AssertionError as exc:
        print(f"verification failure: {exc}", file=stderr)
        return 1
    doc = {
        "schema_version": SCHEMA_VERSION,
        "query": _query(args),
        "results": results,
        "provenance": sorted({r.get("provenance", verification.DERIVED) for r in results}),
        "ok": ok,
    }
    stdout.write(render(doc, args.format))
    return 0 if ok else 1


def main():
    sys.exit(run())
