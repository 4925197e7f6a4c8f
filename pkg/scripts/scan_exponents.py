#!/usr/bin/env python3
"""Survey every even exponent class of GF(3^m)* and tabulate which of the
optimality conditions each one satisfies.

The verify subcommand answers the question for a single exponent; this
script walks all full-size classes at once, which is how the failing
patterns (extra solutions of either condition equation) were found in
the first place.
"""

import argparse
import json
import sys

sys.path.insert(0, "src")

from cyc3.conditions import verify_optimal
from cyc3.cosets import coset
from cyc3.field import build_field


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--m", type=int, required=True, help="extension degree")
    parser.add_argument(
        "--e-range", metavar="A..B", help="inclusive exponent range to scan"
    )
    parser.add_argument(
        "--only-optimal", action="store_true", help="print optimal classes only"
    )
    parser.add_argument("--json", action="store_true", help="emit JSON")
    args = parser.parse_args()

    field = build_field(args.m)
    n = field.order
    if args.e_range:
        lo, hi = (int(tok) for tok in args.e_range.split(".."))
    else:
        lo, hi = 2, n - 1
    if not 1 <= lo <= hi <= n - 1:
        parser.error(f"range must lie within [1, {n - 1}]")

    c1_members = set(coset(1, 3, args.m).members)
    rows = []
    seen = set()
    for e in range(lo + (lo % 2), hi + 1, 2):
        leader = coset(e, 3, args.m).leader
        if leader in seen or leader in c1_members:
            continue
        seen.add(leader)
        r = verify_optimal(field, leader)
        rows.append(r)
    rows.sort(key=lambda r: r.e)

    if args.only_optimal:
        rows = [r for r in rows if r.verdict == "optimal"]

    if args.json:
        payload = {
            "m": args.m,
            "eRange": [lo, hi],
            "classes": [r.to_json_dict(field) for r in rows],
        }
        print(json.dumps(payload, indent=2))
        return 0

    print(f"even exponent classes at m={args.m} (n={n}), e in [{lo}, {hi}]")
    print(f"{'leader':>7} {'size':>4} {'c1':>3} {'coset':>5} "
          f"{'|c2|':>5} {'|c3|':>5}  verdict")
    for r in rows:
        size = coset(r.e, 3, args.m).size
        print(
            f"{r.e:>7} {size:>4} {str(r.c1):>3} {str(r.coset_ok):>5} "
            f"{len(r.c2_solutions):>5} {len(r.c3_solutions):>5}  {r.verdict}"
        )
    n_opt = sum(r.verdict == "optimal" for r in rows)
    print(f"{len(rows)} classes, {n_opt} optimal")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
