"""Command-line front end.

Subcommands: classify, table, lattice, mukai, verify.  Exit codes: 0 on
success, 1 when `verify` finds failures, 2 on usage errors.  Output is
deterministic: identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import conditions as cond
from . import mukai as mk
from . import standard as st
from . import verify as vf
from .errors import CubicK3Error
from .lattice import disc_group, signature


@dataclass(frozen=True)
class Report:
    """Everything the classifier knows about one discriminant."""

    d: int
    flags: cond.ConditionFlags
    nl: st.NLVectorReport | None
    boundary: int
    pell: cond.PellSolution | None
    notes: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "flags": self.flags.to_json(),
            "nl": self.nl.to_json() if self.nl else None,
            "boundary_components": self.boundary,
            "pell": self.pell.to_json() if self.pell else None,
            "notes": list(self.notes),
        }


def build_report(d: int) -> Report:
    flags = cond.condition_flags(d)
    nl = st.hassett_triple(d) if flags.star else None
    pell = cond.pell_brakkee(d) if d % 6 == 0 else None
    notes = []
    if d in (2, 6):
        notes.append("d excluded from smooth-cubic image")
    return Report(d, flags, nl, cond.boundary_count(d), pell, tuple(notes))


def _tf(b: bool) -> str:
    return "T" if b else "F"


def _render_report_text(r: Report) -> str:
    lines = [f"d = {r.d}"]
    f = r.flags
    lines.append(
        f"conditions: (*)={_tf(f.star)} (**')={_tf(f.starstar_prime)}"
        f" (**)={_tf(f.starstar)} (***)={_tf(f.starstarstar)}"
    )
    if r.nl is not None:
        lines.append(f"case: {r.nl.case.value}")
        lines.append(f"v = {list(r.nl.v)}  with square {r.nl.v_square}")
        lines.append(f"K gram: {r.nl.gram_K.to_lists()}")
        lines.append(f"L gram: {r.nl.gram_L.to_lists()}")
        lines.append(f"disc(K) = {list(r.nl.disc_K.invariant_factors)}")
        lines.append(f"disc(Gamma_d) = {list(r.nl.disc_Gamma_d.invariant_factors)}")
    else:
        lines.append("case: not special (no associated lattices)")
    if f.ss_witness:
        n, a = f.ss_witness
        lines.append(f"witness (**): n={n} a={a}")
    if f.sss_witness:
        n, a = f.sss_witness
        lines.append(f"witness (***): n={n} a={a}")
    lines.append(f"boundary components: {r.boundary}")
    if r.pell is not None:
        if r.pell.solution:
            p, q = r.pell.solution
            lines.append(f"pell {r.pell.equation}: p={p} q={q}")
        else:
            lines.append(f"pell {r.pell.equation}: no solution")
    for note in r.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def cmd_classify(args) -> int:
    d = args.d
    if d < 2 or d % 2:
        print(f"error: d must be even and at least 2, got {d}", file=sys.stderr)
        return 2
    if d >= cond.CLI_INPUT_CAP:
        print("error: d must be below 2^63 (the library accepts larger values)",
              file=sys.stderr)
        return 2
    report = build_report(d)
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(_render_report_text(report))
    return 0


def _markdown_table(rows: list[cond.ConditionFlags]) -> str:
    # the classical presentation: one row per condition, one column per
    # special discriminant, a cell filled when the condition holds
    ds = [f.d for f in rows]
    header = "| |" + "|".join(str(d) for d in ds) + "|"
    sep = "|---|" + "|".join("---" for _ in ds) + "|"
    out = [header, sep]
    for label, attr in (
        ("(***)", "starstarstar"),
        ("(**)", "starstar"),
        ("(**')", "starstar_prime"),
        ("(*)", "star"),
    ):
        cells = [str(f.d) if getattr(f, attr) else "" for f in rows]
        out.append(f"|{label}|" + "|".join(cells) + "|")
    return "\n".join(out)


def cmd_table(args) -> int:
    if args.max_d < 8 or args.max_d % 2:
        print(f"error: max_d must be even and at least 8, got {args.max_d}", file=sys.stderr)
        return 2
    if args.max_d >= cond.CLI_INPUT_CAP:
        print("error: max_d must be below 2^63", file=sys.stderr)
        return 2
    start = args.start
    if start < 2 or start % 2:
        print(f"error: --from must be even and at least 2, got {start}", file=sys.stderr)
        return 2
    rows = cond.table(args.max_d, start=start)
    if args.format == "json":
        print(json.dumps([f.to_json() for f in rows], indent=2))
    elif args.format == "markdown":
        print(_markdown_table(rows))
    else:
        print(",".join(cond.CSV_COLUMNS))
        for f in rows:
            print(",".join(cond.csv_row(f)))
    return 0


def cmd_lattice(args) -> int:
    try:
        L = st.standard_lattice(args.name)
    except CubicK3Error as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.disc:
        if args.format == "json":
            print(json.dumps({"det": L.det, "abs_det": L.abs_det}, indent=2))
        else:
            print(f"det = {L.det}, |det| = {L.abs_det}")
    elif args.signature:
        pos, neg, null = signature(L)
        if args.format == "json":
            print(json.dumps({"signature": [pos, neg, null]}, indent=2))
        else:
            print(f"signature = ({pos}, {neg}, {null})")
    elif args.disc_group:
        dg = disc_group(L)
        obj = {
            "invariant_factors": list(dg.invariant_factors),
            "q_values": [str(q) for q in dg.q_values] if dg.q_values is not None else None,
        }
        if args.format == "json":
            print(json.dumps(obj, indent=2))
        else:
            print(f"invariant factors: {obj['invariant_factors']}")
            if obj["q_values"] is None:
                print("q values: (odd lattice)")
            else:
                print(f"q values: {obj['q_values']}")
    else:
        if args.format == "json":
            print(json.dumps(L.to_json(), indent=2))
        else:
            print(f"{L.label or 'lattice'}: rank {L.rank}, even={L.is_even}")
            for row in L.gram.to_lists():
                print(" ".join(f"{e:3d}" for e in row))
    return 0


def cmd_mukai(args) -> int:
    if args.gram:
        g = mk.a2_mukai_gram()
        if args.format == "json":
            print(json.dumps({"a2_gram": g.to_json()}, indent=2))
        else:
            print(f"A2 gram under the Mukai pairing: {g.to_lists()}")
        return 0
    ms = mk.mukai_set()
    if args.format == "json":
        print(json.dumps(ms.to_json(), indent=2))
    else:
        for key, val in ms.to_json().items():
            print(f"{key}: ({', '.join(val)})")
    return 0


def cmd_verify(args) -> int:
    summary = vf.run_all(
        genus_max=args.genus_max,
        hyperbolic_bound=args.bound,
        disc_cap=args.disc_cap,
    )
    if args.json:
        print(json.dumps(summary.to_json(), indent=2))
    else:
        for c in summary.checks:
            if c.ok:
                print(f"ok   {c.check_id}")
            else:
                print(f"FAIL {c.check_id}: expected {c.expected}, got {c.actual}")
        print(f"{summary.checks_run} checks, {len(summary.failures)} failures")
    return 0 if summary.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cubick3",
        description="Exact lattice arithmetic for cubic fourfolds and K3 surfaces.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="full report for one discriminant")
    c.add_argument("d", type=int)
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.set_defaults(func=cmd_classify)

    t = sub.add_parser("table", help="condition table for special discriminants")
    t.add_argument("max_d", type=int)
    t.add_argument("--format", choices=("csv", "json", "markdown"), default="csv")
    t.add_argument("--from", dest="start", type=int, default=8,
                   help="lowest discriminant (default 8)")
    t.set_defaults(func=cmd_table)

    l = sub.add_parser("lattice", help="standard lattice data")
    l.add_argument("name", help='e.g. Gamma, Gammabar, LambdaTilde, "LambdaD(14)"')
    g = l.add_mutually_exclusive_group()
    g.add_argument("--disc", action="store_true", help="determinant")
    g.add_argument("--signature", action="store_true")
    g.add_argument("--disc-group", action="store_true", dest="disc_group")
    l.add_argument("--format", choices=("text", "json"), default="text")
    l.set_defaults(func=cmd_lattice)

    m = sub.add_parser("mukai", help="distinguished Mukai vectors")
    g = m.add_mutually_exclusive_group()
    g.add_argument("--vectors", action="store_true", help="the seven classes (default)")
    g.add_argument("--gram", action="store_true", help="A2 Gram of the projected basis")
    m.add_argument("--format", choices=("text", "json"), default="text")
    m.set_defaults(func=cmd_mukai)

    v = sub.add_parser("verify", help="run the complete identity suite")
    v.add_argument("--json", action="store_true")
    v.add_argument("--genus-max", type=int, default=200,
                   help="genus comparison sweep bound (default 200)")
    v.add_argument("--bound", type=int, default=4,
                   help="hyperbolic search coordinate bound (default 4)")
    v.add_argument("--disc-cap", type=int, default=10_000,
                   help="discriminant-group search cap (default 10000)")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CubicK3Error as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
