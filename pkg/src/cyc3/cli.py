"""Command-line surface.

Subcommands: field-info, coset, minpoly, code, verify, family, mindist,
factor, identities, search.  Output formats: text (default, includes wall
time), json (byte-deterministic, no timing), and csv-row for verify and
family.  Exit codes: 0 all checks pass, 1 a verification came back
fail/not_optimal where the command asserts optimality, 2 usage error.

JSON determinism is a hard requirement (two identical invocations must be
byte-identical), which is why wall time appears only in text output and
every collection is emitted in a fixed order.  The verify subcommand emits
the bare report schema; every other command wraps its payload with the
command name and artifact version.

CYC3_WORKERS sets the worker count for family sweeps (default: available
parallelism; 1 disables the process pool).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time

from . import __version__
from .codes import (
    ConjugateExponentError,
    build_code,
    hamming_ball,
    min_weight_leq3_search,
    sphere_packing_max_d,
)
from .conditions import (
    ConditionReport,
    FamilyInstance,
    verify_family,
    verify_optimal,
)
from .cosets import coset, minimal_polynomial
from .field import LOG_TABLE_MAX_DEGREE, MAX_DEGREE, build_field
from .gf3poly import Poly, PolyParseError, factor, parse_poly

VERIFY_CSV_COLUMNS = [
    "m", "e", "h", "c1", "cosetOk", "gcd", "c2Solutions", "c3Solutions",
    "verdict", "n", "k", "d", "modulus",
]


def _workers() -> int:
    raw = os.environ.get("CYC3_WORKERS", "")
    if raw.strip():
        try:
            w = int(raw)
        except ValueError:
            raise ValueError(f"CYC3_WORKERS must be an integer, got {raw!r}")
        if w < 1:
            raise ValueError(f"CYC3_WORKERS must be >= 1, got {w}")
        return w
    return os.cpu_count() or 1


def _bool_text(b: bool) -> str:
    return "true" if b else "false"


def _report_csv_cells(report: ConditionReport, field) -> dict[str, str]:
    n, k, d = report.parameters if report.parameters else ("", "", "")
    return {
        "m": str(report.m),
        "e": str(report.e),
        "h": "" if report.h is None else str(report.h),
        "c1": _bool_text(report.c1),
        "cosetOk": _bool_text(report.coset_ok),
        "gcd": str(report.gcd_value),
        "c2Solutions": "|".join(field.format_element(x) for x in report.c2_solutions),
        "c3Solutions": "|".join(field.format_element(x) for x in report.c3_solutions),
        "verdict": report.verdict,
        "n": str(n),
        "k": str(k),
        "d": str(d),
        "modulus": report.modulus,
    }


def _report_text_lines(report: ConditionReport, field) -> list[str]:
    lines = [
        f"m = {report.m}, e = {report.e}"
        + (f", h = {report.h}" if report.h is not None else ""),
        f"modulus: {report.modulus}",
        f"condition 1 (e even): {'pass' if report.c1 else 'FAIL'}",
        f"coset facts (e not conjugate to 1, full coset size): "
        f"{'pass' if report.coset_ok else 'FAIL'} (gcd(e, 3^m-1) = {report.gcd_value})",
        f"condition 2 solutions ({len(report.c2_solutions)}): "
        + ", ".join(field.format_element(x) for x in report.c2_solutions[:8])
        + (" ..." if len(report.c2_solutions) > 8 else ""),
        f"condition 3 solutions ({len(report.c3_solutions)}): "
        + ", ".join(field.format_element(x) for x in report.c3_solutions[:8])
        + (" ..." if len(report.c3_solutions) > 8 else ""),
        f"verdict: {report.verdict}",
    ]
    if report.parameters:
        n, k, d = report.parameters
        lines.append(f"parameters: [{n}, {k}, {d}]")
    return lines


def _wrap(command: str, body: dict) -> dict:
    return {"command": command, "artifactVersion": __version__, **body}


# each handler returns (exit_code, json_payload, text_lines, csv_rows)
# csv_rows is None unless the subcommand supports csv-row output


def _cmd_field_info(args):
    field = build_field(args.m)
    from .gf3poly import prime_factors

    primes = prime_factors(field.order) if field.order > 1 else ()
    payload = _wrap(
        "field-info",
        {
            "m": field.m,
            "order": field.order,
            "modulus": field.modulus.format(),
            "generator": field.format_element(field.gen),
            "orderPrimeFactors": list(primes),
            "logTables": field.m <= LOG_TABLE_MAX_DEGREE,
        },
    )
    text = [
        f"GF(3^{field.m}): order of multiplicative group = {field.order}",
        f"modulus: {field.modulus.format()}",
        f"generator: {field.format_element(field.gen)}",
        f"prime factors of the order: {', '.join(map(str, primes)) or 'none'}",
        f"log/Zech tables available: {_bool_text(field.m <= LOG_TABLE_MAX_DEGREE)}",
    ]
    return 0, payload, text, None


def _cmd_coset(args):
    c = coset(args.j, args.p, args.m)
    payload = _wrap(
        "coset",
        {
            "p": c.p,
            "m": c.m,
            "j": args.j,
            "leader": c.leader,
            "size": c.size,
            "members": list(c.members),
        },
    )
    text = [
        f"coset of {args.j} under multiplication by {args.p} mod {args.p}^{args.m}-1:",
        f"leader = {c.leader}, size = {c.size}",
        f"members: {', '.join(map(str, c.members))}",
    ]
    return 0, payload, text, None


def _cmd_minpoly(args):
    field = build_field(args.m)
    c = coset(args.i, 3, args.m)
    poly = minimal_polynomial(field, args.i)
    payload = _wrap(
        "minpoly",
        {
            "m": args.m,
            "i": args.i,
            "cosetLeader": c.leader,
            "degree": poly.degree,
            "poly": poly.format(),
            "modulus": field.modulus.format(),
        },
    )
    text = [
        f"minimal polynomial of generator^{args.i} over GF(3), m = {args.m}:",
        f"{poly.format()}",
        f"degree {poly.degree} = coset size of leader {c.leader}",
        f"modulus: {field.modulus.format()}",
    ]
    return 0, payload, text, None


def _cmd_code(args):
    field = build_field(args.m)
    spec = build_code(field, args.e)
    payload = _wrap(
        "code",
        {
            "m": spec.m,
            "e": spec.e,
            "n": spec.n,
            "k": spec.k,
            "generatorDegree": spec.generator.degree,
            "generator": spec.generator.format(),
            "modulus": field.modulus.format(),
        },
    )
    text = [
        f"code with nonzeros alpha, alpha^{spec.e} over GF(3^{spec.m}):",
        f"length n = {spec.n}, dimension k = {spec.k}",
        f"generator polynomial (degree {spec.generator.degree}): {spec.generator.format()}",
        f"modulus: {field.modulus.format()}",
    ]
    return 0, payload, text, None


def _cmd_verify(args):
    field = build_field(args.m)
    report = verify_optimal(field, args.e)
    payload = report.to_json_dict(field)  # bare schema, no wrapper
    text = _report_text_lines(report, field)
    rows = [_report_csv_cells(report, field)]
    code = 0 if report.verdict == "optimal" else 1
    return code, payload, text, (VERIFY_CSV_COLUMNS, rows)


def _family_reading_summary(rows):
    # group concl-C rows by (m, reading); a reading is fully optimal at m
    # when every instance there came back optimal
    by_m: dict[int, dict[str, list[str]]] = {}
    for inst, rep in rows:
        by_m.setdefault(inst.m, {}).setdefault(inst.reading, []).append(rep.verdict)
    summary = []
    for m in sorted(by_m):
        readings = [
            {"reading": r, "allOptimal": all(v == "optimal" for v in verdicts)}
            for r, verdicts in by_m[m].items()
        ]
        summary.append(
            {
                "m": m,
                "readings": readings,
                "anyConsistent": any(r["allOptimal"] for r in readings),
            }
        )
    return summary


def _family_discrepancies(rows, summary) -> list[str]:
    out = []
    for entry in summary:
        m = entry["m"]
        for r in entry["readings"]:
            verdicts = [
                rep.verdict
                for inst, rep in rows
                if inst.m == m and inst.reading == r["reading"]
            ]
            failed = sum(v != "optimal" for v in verdicts)
            if failed == len(verdicts):
                out.append(
                    f"reading {r['reading']} at m={m}: no instance optimal"
                )
            elif failed:
                out.append(
                    f"reading {r['reading']} at m={m}: {failed} of "
                    f"{len(verdicts)} instances not optimal"
                )
        if not entry["anyConsistent"]:
            out.append(
                f"m={m}: no reading of the constant term is optimal for "
                f"every qualifying h"
            )
    return out


def _cmd_family(args):
    ms = args.m_list
    rows = verify_family(args.name, ms, workers=args_workers(args))
    instances_json = []
    csv_rows = []
    for inst, rep in rows:
        field = build_field(inst.m)
        instances_json.append(
            {
                "family": inst.family,
                "reading": inst.reading,
                "report": rep.to_json_dict(field),
            }
        )
        cells = {"family": inst.family, "reading": inst.reading or ""}
        cells.update(_report_csv_cells(rep, field))
        csv_rows.append(cells)
    n_opt = sum(rep.verdict == "optimal" for _, rep in rows)
    body = {
        "name": args.name,
        "mList": list(ms),
        "instances": instances_json,
        "summary": {"total": len(rows), "optimal": n_opt},
    }
    text = [f"family {args.name} over m in {{{', '.join(map(str, ms))}}}:"]
    for inst, rep in rows:
        tag = f" [{inst.reading}]" if inst.reading else ""
        params = (
            f" {list(rep.parameters)}" if rep.parameters else ""
        )
        text.append(
            f"  m={inst.m} h={inst.h} e={inst.e}{tag}: {rep.verdict}{params}"
        )
    if args.name == "concl-C":
        summary = _family_reading_summary(rows)
        discrepancies = _family_discrepancies(rows, summary)
        body["readingSummary"] = summary
        body["discrepancies"] = discrepancies
        for line in discrepancies:
            text.append(f"  FLAG: {line}")
        code = 0 if all(s["anyConsistent"] for s in summary) else 1
    else:
        code = 0 if n_opt == len(rows) else 1
    text.append(f"optimal: {n_opt} of {len(rows)}")
    payload = _wrap("family", body)
    columns = ["family", "reading"] + VERIFY_CSV_COLUMNS
    return code, payload, text, (columns, csv_rows)


def _cmd_mindist(args):
    field = build_field(args.m)
    spec = build_code(field, args.e)
    try:
        witness = min_weight_leq3_search(field, args.e, allow_long=args.allow_long)
    except ValueError as exc:
        raise ValueError(str(exc).replace("pass allow_long=True", "pass --allow-long"))
    budget = 3 ** (spec.n - spec.k)
    ball1 = hamming_ball(spec.n, 1, 3)
    ball2 = hamming_ball(spec.n, 2, 3)
    max_d = sphere_packing_max_d(spec.n, spec.k, 3)
    body = {
        "m": args.m,
        "e": args.e,
        "n": spec.n,
        "k": spec.k,
        "verdict": witness.verdict,
        "witness": None
        if witness.positions is None
        else {
            "positions": list(witness.positions),
            "values": list(witness.values),
            "weight": witness.weight,
        },
        "spherePacking": {
            "budget": budget,
            "ballRadius1": ball1,
            "ballRadius2": ball2,
            "maxDistance": max_d,
        },
        "modulus": field.modulus.format(),
    }
    text = [
        f"weight search for m={args.m}, e={args.e} (n={spec.n}, k={spec.k}):",
        f"verdict: {witness.verdict}",
    ]
    if witness.positions is not None:
        text.append(
            f"witness: positions {list(witness.positions)}, "
            f"values {list(witness.values)} (weight {witness.weight})"
        )
    text += [
        f"sphere packing: ball(1) = {ball1} vs budget 3^(n-k) = {budget} "
        f"-> {'fits' if ball1 <= budget else 'exceeds'}",
        f"                ball(2) = {ball2} -> "
        f"{'fits' if ball2 <= budget else 'exceeds'}",
        f"largest distance the bound allows: {max_d}",
    ]
    if witness.verdict == "no_word_below_4" and max_d == 4:
        text.append("distance is exactly 4: no word below 4, and the bound caps d at 4")
    payload = _wrap("mindist", body)
    return 0, payload, text, None


def _cmd_factor(args):
    poly = parse_poly(args.poly)
    fac = factor(poly)
    payload = _wrap(
        "factor",
        {
            "input": poly.format(),
            "degree": poly.degree,
            "unit": fac.unit,
            "factors": [
                {"poly": p.format(), "degree": p.degree, "multiplicity": mult}
                for p, mult in fac.factors
            ],
            "irreducible": len(fac.factors) == 1
            and fac.factors[0][1] == 1
            and fac.factors[0][0].degree == poly.degree,
        },
    )
    text = [f"{poly.format()} ="]
    parts = [] if fac.unit == 1 else [str(fac.unit)]
    for p, mult in fac.factors:
        parts.append(f"({p.format()})" + (f"^{mult}" if mult > 1 else ""))
    text.append("  " + (" * ".join(parts) if parts else "1"))
    return 0, payload, text, None


def _cmd_identities(args):
    from .identities import run_all

    checks = run_all()
    payload = _wrap(
        "identities",
        {
            "checks": [
                {
                    "id": c.check_id,
                    "status": c.status,
                    "lhsDegree": c.lhs.degree,
                    "unit": c.unit,
                    "detail": c.detail,
                }
                for c in checks
            ],
            "allPass": all(c.passed for c in checks),
        },
    )
    width = max(len(c.check_id) for c in checks)
    text = [f"{'check':{width}}  status  deg  unit"]
    for c in checks:
        unit = "-" if c.unit is None else str(c.unit)
        line = f"{c.check_id:{width}}  {c.status:6}  {c.lhs.degree:3}  {unit}"
        if c.detail:
            line += f"  {c.detail}"
        text.append(line)
    n_pass = sum(c.passed for c in checks)
    text.append(f"{n_pass} of {len(checks)} checks pass")
    return (0 if n_pass == len(checks) else 1), payload, text, None


def _cmd_search(args):
    field = build_field(args.m)
    n = field.order
    lo, hi = args.e_range if args.e_range else (2, n - 1)
    if not 1 <= lo <= hi <= n - 1:
        raise ValueError(f"e-range must lie within [1, {n - 1}]")
    c1_members = set(coset(1, 3, args.m).members)
    seen: set[int] = set()
    optimal = []
    evaluated = 0
    for e in range(lo + (lo % 2), hi + 1, 2):
        leader = coset(e, 3, args.m).leader
        if leader in seen:
            continue
        seen.add(leader)
        if leader in c1_members:
            continue
        evaluated += 1
        report = verify_optimal(field, leader)
        if report.verdict == "optimal":
            optimal.append(report)
    optimal.sort(key=lambda r: r.e)
    payload = _wrap(
        "search",
        {
            "m": args.m,
            "eRange": [lo, hi],
            "evaluatedCosetLeaders": evaluated,
            "optimal": [
                {
                    "e": r.e,
                    "h": r.h,
                    "parameters": {
                        "n": r.parameters[0],
                        "k": r.parameters[1],
                        "d": r.parameters[2],
                    },
                }
                for r in optimal
            ],
            "modulus": field.modulus.format(),
        },
    )
    text = [
        f"search over even e in [{lo}, {hi}] at m={args.m} "
        f"({evaluated} coset leaders evaluated):"
    ]
    for r in optimal:
        h = f" (e = 3^{r.h}+5)" if r.h is not None else ""
        text.append(f"  e = {r.e}{h}: optimal {list(r.parameters)}")
    text.append(f"{len(optimal)} optimal coset leaders")
    return 0, payload, text, None


def args_workers(args) -> int:
    if getattr(args, "workers", None):
        return args.workers
    return _workers()


def _parse_m_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad m-list {text!r}")


def _parse_e_range(text: str) -> tuple[int, int]:
    parts = text.split("..")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(
            f"e-range must look like A..B, got {text!r}"
        )
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad e-range {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyc3",
        description="Construct ternary two-nonzero cyclic codes and certify "
        "their optimality by exact computation.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, formats=("text", "json")):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument(
            "--format", choices=formats, default="text", help="output format"
        )
        p.add_argument("--out", metavar="FILE", help="write output to FILE")
        return p

    p = add("field-info", _cmd_field_info, "describe GF(3^m) and its modulus")
    p.add_argument("--m", type=int, required=True)

    p = add("coset", _cmd_coset, "cyclotomic coset of j mod p^m-1")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--j", type=int, required=True)

    p = add("minpoly", _cmd_minpoly, "minimal polynomial of generator^i")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--i", type=int, required=True)

    p = add("code", _cmd_code, "build the code and report its parameters")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--e", type=int, required=True)

    p = add(
        "verify",
        _cmd_verify,
        "certify optimality of one (m, e)",
        formats=("text", "json", "csv-row"),
    )
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--e", type=int, required=True)

    p = add(
        "family",
        _cmd_family,
        "verify a whole exponent family",
        formats=("text", "json", "csv-row"),
    )
    p.add_argument(
        "--name",
        required=True,
        choices=["open-problem", "concl-A", "concl-B", "concl-C"],
    )
    p.add_argument("--m-list", type=_parse_m_list, required=True)
    p.add_argument(
        "--workers", type=int, help="override CYC3_WORKERS for this run"
    )

    p = add("mindist", _cmd_mindist, "brute-force search for weight <= 3")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument(
        "--allow-long",
        action="store_true",
        help="permit the long pair scan at m = 9 or 10",
    )

    p = add("factor", _cmd_factor, "factor a polynomial over GF(3)")
    p.add_argument(
        "--poly",
        required=True,
        help="polynomial, e.g. 'x^6-x^5+x^3+1' or '1,0,0,1,0,2,1'",
    )

    add("identities", _cmd_identities, "run the symbolic identity suite")

    p = add("search", _cmd_search, "scan even exponents for optimal codes")
    p.add_argument("--m", type=int, required=True)
    p.add_argument(
        "--e-range",
        type=_parse_e_range,
        metavar="A..B",
        help="inclusive exponent range (default: the whole group)",
    )

    return parser


def _emit(args, payload, text_lines, csv_data, elapsed: float) -> None:
    fmt = getattr(args, "format", "text")
    if fmt == "json":
        out = json.dumps(payload, indent=2) + "\n"
    elif fmt == "csv-row":
        columns, rows = csv_data
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        out = buf.getvalue()
    else:
        out = "\n".join(text_lines + [f"elapsed: {elapsed:.2f}s"]) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        code, payload, text_lines, csv_data = args.func(args)
    except (PolyParseError,) as exc:
        print(f"error: bad polynomial: {exc}", file=sys.stderr)
        return 2
    except ConjugateExponentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(args, payload, text_lines, csv_data, time.perf_counter() - t0)
    return code
