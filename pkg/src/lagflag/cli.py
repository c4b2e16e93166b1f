"""Command-line frontend: enumeration, classification, scheme inspection,
basis generation and the exact verification suites.

Every command writes deterministic output; identical invocations produce
byte-identical text.  Exit codes: 0 success, 1 verification failure, 2 usage
error.  The environment variable ``LAGFLAG_MAX_N`` overrides the frame-size
bounds (default 16 for enumeration-style commands, 10 for ``verify``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from collections import Counter
from math import comb

from . import basis as basis_mod
from . import diagrams as diag_mod
from . import flags as flags_mod
from . import marking as marking_mod
from . import picard as pic_mod
from .errors import DomainError, LagflagError

ENUMERATE_BOUND = 16
VERIFY_BOUND = 10


def _bound(default: int) -> int:
    raw = os.environ.get("LAGFLAG_MAX_N")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"LAGFLAG_MAX_N must be an integer, got {raw!r}") from None


def _emit_json(payload, out) -> None:
    print(json.dumps(payload, indent=2), file=out)


def _parse_int_tuple(raw: str | None) -> tuple[int, ...]:
    if raw is None or raw == "":
        return ()
    try:
        return tuple(int(chunk) for chunk in raw.split(","))
    except ValueError:
        raise DomainError(f"expected comma-separated integers, got {raw!r}") from None


def _parse_diagram(steps: str, bound: int) -> diag_mod.ShiftedDiagram:
    if len(steps) > bound:
        raise DomainError(f"diagram has {len(steps)} steps, above the bound {bound}")
    return diag_mod.ShiftedDiagram(len(steps), steps.upper())


# ---------------------------------------------------------------------------
# commands


def _cmd_enumerate(args, out) -> int:
    bound = _bound(ENUMERATE_BOUND)
    diagrams = diag_mod.enumerate_diagrams(args.n, max_n=bound)
    if args.format == "json":
        _emit_json([d.to_json() for d in diagrams], out)
    elif args.format == "csv":
        writer, buffer = _csv_writer()
        writer.writerow(["n", "steps", "parts", "weight"])
        for d in diagrams:
            writer.writerow([d.n, d.steps, " ".join(map(str, d.parts)), d.weight])
        out.write(buffer.getvalue())
    else:
        for d in diagrams:
            parts = ",".join(map(str, d.parts))
            print(f"{d.steps or '-':<{max(args.n, 1)}}  parts=[{parts}]  weight={d.weight}", file=out)
    return 0


def _cmd_classify(args, out) -> int:
    diagram = _parse_diagram(args.diagram, _bound(ENUMERATE_BOUND))
    b = diag_mod.boundary(diagram)
    cls = diag_mod.classify(diagram)
    if args.format == "json":
        payload = diagram.to_json()
        payload["boundary"] = b.to_json()
        payload.update(cls.to_json())
        _emit_json(payload, out)
    else:
        print(f"steps        {diagram.steps}", file=out)
        print(f"n            {diagram.n}", file=out)
        print(f"parts        {list(diagram.parts)}", file=out)
        print(f"weight       {diagram.weight}", file=out)
        segs = " ".join(f"{o.value}:{ln}" for o, ln in b.segments)
        print(f"boundary     {segs}", file=out)
        print(f"index        {cls.index_w}", file=out)
        print(f"almost_even  {str(cls.is_almost_even).lower()}", file=out)
        print(f"k_even       {str(cls.is_k_even).lower()}", file=out)
        print(f"row_type     {cls.row_type.value}", file=out)
    return 0


def _scheme_from_args(args) -> flags_mod.FlagDescriptor:
    if args.name is not None:
        if args.n is None:
            raise DomainError("--name needs -n (the half rank)")
        return flags_mod.named_scheme(args.name, args.n)
    if args.diagram is not None:
        diagram = _parse_diagram(args.diagram, _bound(ENUMERATE_BOUND))
        if args.construction == "ktheory":
            return marking_mod.lf_ktheory(diagram)
        w = args.w
        if w is None:
            w = diag_mod.boundary(diagram).segment_count
        if args.construction == "a":
            return marking_mod.lf_a(diagram, w)
        return marking_mod.lf_b(diagram, w)
    if args.d is None or args.half_rank is None:
        raise DomainError("scheme needs --name, --diagram, or --d with --half-rank")
    return flags_mod.FlagDescriptor(
        int(args.half_rank),
        _parse_int_tuple(args.d),
        _parse_int_tuple(args.e),
        _parse_int_tuple(args.t),
    )


def _cmd_scheme(args, out) -> int:
    desc = _scheme_from_args(args)
    violations = flags_mod.validate(desc)
    errors = [v for v in violations if v.severity == "error"]
    if errors:
        payload = {
            "descriptor": desc.to_json(),
            "valid": False,
            "violations": [v.to_json() for v in violations],
        }
        if args.format == "json":
            _emit_json(payload, out)
        else:
            print(f"descriptor  {desc}", file=out)
            print("valid       false", file=out)
            for v in violations:
                print(f"{v.severity:<7}     {v.message}", file=out)
        return 1
    report = flags_mod.scheme_report(desc)
    if args.format == "json":
        payload = {
            "descriptor": desc.to_json(),
            "valid": True,
            "warnings": [v.to_json() for v in violations],
            "report": report.to_json(),
        }
        _emit_json(payload, out)
    else:
        print(f"descriptor           {desc}", file=out)
        print(f"regular              {str(report.regular).lower()}", file=out)
        print(f"gorenstein           {str(report.gorenstein).lower()}", file=out)
        print(f"relative_dimension   {report.relative_dimension}", file=out)
        print(f"component_count      {report.component_count}", file=out)
        print(
            f"trivial_pushforward  {str(report.reduced_with_trivial_pushforward).lower()}",
            file=out,
        )
        for v in violations:
            print(f"warning              {v.message}", file=out)
    return 0


def _cmd_canonical(args, out) -> int:
    d = _parse_int_tuple(args.d)
    e = _parse_int_tuple(args.e)
    t = _parse_int_tuple(args.t)
    if args.half_rank.upper() == "N":
        elt = pic_mod.canonical_sheaf_in_n(d, e, t)
        half_rank: str | int = "N"
    else:
        desc = flags_mod.FlagDescriptor(int(args.half_rank), d, e, t)
        elt = pic_mod.canonical_sheaf(desc)
        half_rank = desc.half_rank
    if args.format == "json":
        _emit_json({"half_rank": half_rank, "canonical_sheaf": elt.to_json()}, out)
    else:
        if elt.is_zero:
            print("trivial", file=out)
        for gen, exp in elt.items():
            print(f"{str(gen):<14} {exp}", file=out)
    return 0


def _alignment_flag(summand, n: int) -> str:
    if summand.map_label not in (basis_mod.MapLabel.XI0, basis_mod.MapLabel.XI1):
        return ""
    variant = (
        pic_mod.TwistVariant.XI1
        if summand.map_label is basis_mod.MapLabel.XI1
        else pic_mod.TwistVariant.XI0
    )
    result = pic_mod.twist_alignment(summand.source_diagram, variant, n)
    return str(result.ok).lower()


def _csv_writer():
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    return writer, buffer


def _decomposition_csv(decomp: basis_mod.Decomposition) -> str:
    writer, buffer = _csv_writer()
    writer.writerow(
        ["diagram", "kind", "shift", "map", "scheme", "dim", "components", "parity_ok"]
    )
    for s in decomp.summands:
        writer.writerow(
            [
                s.source_diagram.steps,
                s.kind.value,
                "" if s.shift is None else s.shift,
                s.map_label.value,
                str(s.scheme),
                flags_mod.relative_dimension(s.scheme),
                flags_mod.component_count(s.scheme),
                _alignment_flag(s, decomp.n),
            ]
        )
    return buffer.getvalue()


def _cmd_basis(args, out) -> int:
    twist = pic_mod.Twist(args.twist)
    if args.theory == "k":
        decomp = basis_mod.k_basis(args.n)
    else:
        decomp = basis_mod.gw_basis(args.n, twist)
    if args.format == "json":
        _emit_json(decomp.to_json(), out)
    elif args.format == "csv":
        out.write(_decomposition_csv(decomp))
    else:
        print(
            f"{args.theory.upper()}-basis n={decomp.n} twist={decomp.twist.value} "
            f"summands={len(decomp.summands)}",
            file=out,
        )
        for s in decomp.summands:
            shift = "" if s.shift is None else f" shift={s.shift}"
            twist_note = "" if s.base_twist is None else f" base_twist=V{s.base_twist}"
            print(
                f"  {s.source_diagram.steps or '-':<{max(decomp.n, 1)}} "
                f"{s.kind.value:<2} {s.map_label.value:<4}{shift}{twist_note}  {s.scheme}",
                file=out,
            )
    return 0


def _cmd_recursion(args, out) -> int:
    report = basis_mod.verify_recursions(args.n)
    if args.format == "json":
        _emit_json(report.to_json(), out)
    else:
        for case in report.cases:
            status = "PASS" if case.passed else f"FAIL at {case.first_mismatch}"
            print(f"case ({case.label}): {status}  [{case.description}]", file=out)
        for note in report.notes:
            print(f"note: {note}", file=out)
    return 0 if report.passed else 1


def _cmd_witt(args, out) -> int:
    table = basis_mod.witt_table(args.n, pic_mod.Twist(args.twist))
    if args.format == "json":
        _emit_json(table.to_json(), out)
    else:
        print(f"witt table n={table.n} twist={table.twist.value}", file=out)
        for degree, count in table.degrees:
            print(f"  degree {degree}: {count}", file=out)
        print(f"  K atoms: {table.k_count}", file=out)
    return 0


def _cmd_classify_connecting(args, out) -> int:
    lam = _parse_int_tuple(args.lam)
    if len(lam) != 2:
        raise DomainError(f"--lam needs two comma-separated parities, got {args.lam!r}")
    case = pic_mod.classify_connecting(args.c1, args.c2, lam[0], lam[1])
    print(case.value, file=out)
    return 0


# ---------------------------------------------------------------------------
# verification suites


def _genfunc_coefficients(n: int) -> list[int]:
    poly = [1]
    for i in range(1, n + 1):
        new = poly + [0] * i
        for j, c in enumerate(poly):
            new[j + i] += c
        poly = new
    return poly


def _suite_counting(max_n: int):
    for n in range(0, min(max_n, 16) + 1):
        diagrams = diag_mod.enumerate_diagrams(n)
        if len(diagrams) != 2**n:
            return False, f"frame {n}: {len(diagrams)} diagrams, expected {2 ** n}"
        if len(set(d.steps for d in diagrams)) != len(diagrams):
            return False, f"frame {n}: duplicate diagrams"
        expected = _genfunc_coefficients(n)
        counts = Counter(d.weight for d in diagrams)
        actual = [counts.get(w, 0) for w in range(len(expected))]
        if actual != expected:
            return False, f"frame {n}: weight generating function mismatch"
    return True, ""


def _suite_boundary(max_n: int):
    for n in range(0, min(max_n, 12) + 1):
        for d in diag_mod.enumerate_diagrams(n):
            b = diag_mod.boundary(d)
            if sum(b.lengths) != n:
                return False, f"{d.steps}: segment lengths sum to {sum(b.lengths)}"
            for idx, (orient, length) in enumerate(b.segments, start=1):
                vertical = orient is diag_mod.Orientation.VERTICAL
                if vertical != (idx % 2 == 1):
                    return False, f"{d.steps}: segment {idx} has wrong orientation"
                if idx >= 2 and length < 1:
                    return False, f"{d.steps}: segment {idx} has length {length}"
            # round trip: concatenating the runs recovers the walk
            rebuilt = "".join(
                ("V" if o is diag_mod.Orientation.VERTICAL else "H") * ln
                for o, ln in b.segments
            )
            if rebuilt != d.steps:
                return False, f"{d.steps}: boundary does not reconcatenate"
    return True, ""


def _suite_class_partitions(max_n: int):
    for n in range(3, min(max_n, 11) + 1, 2):
        sets = diag_mod.class_sets(n)
        a = set(sets.refine("A"))
        if a != set(sets.refine("A", "rr")) | set(sets.refine("A", "cc")):
            return False, f"frame {n}: A is not A^rr + A^cc"
        e = set(sets.refine("E"))
        split = (
            set(sets.refine("E", "rr"))
            | set(sets.refine("E", "cr"))
            | set(sets.refine("E", "cc"))
        )
        if e != split:
            return False, f"frame {n}: E is not E^rr + E^cr + E^cc"
    return True, ""


def _check_bijection(source, target, op):
    image = [op(d) for d in source]
    return len(set(image)) == len(image) and set(image) == set(target)


def _suite_bijections(max_n: int):
    top = diag_mod.delete_top_row
    col = diag_mod.delete_right_column
    for n in range(1, min(max_n, 12) + 1):
        sets = diag_mod.class_sets(n)
        prev = diag_mod.class_sets(n - 1)
        if not _check_bijection(sets.refine("U", "r"), prev.all_diagrams, top):
            return False, f"frame {n}: row deletion is not a bijection onto frame {n - 1}"
        if not _check_bijection(sets.refine("U", "c"), prev.all_diagrams, col):
            return False, f"frame {n}: column deletion is not a bijection"
        for d in sets.refine("U", "r"):
            if d.weight != top(d).weight + n:
                return False, f"{d.steps}: weight does not drop by {n} under row deletion"
        for d in sets.refine("U", "c"):
            if d.weight != col(d).weight:
                return False, f"{d.steps}: weight changes under column deletion"
    for n in range(3, min(max_n, 11) + 1, 2):
        sets = diag_mod.class_sets(n)
        prev2 = diag_mod.class_sets(n - 2)
        pairs = [
            ("E", "rr", prev2.refine("E"), lambda d: top(top(d))),
            ("E", "cr", prev2.all_diagrams, lambda d: top(col(d))),
            ("E", "cc", prev2.refine("E"), lambda d: col(col(d))),
            ("A", "rr", prev2.refine("A"), lambda d: top(top(d))),
            ("A", "cc", prev2.refine("A"), lambda d: col(col(d))),
        ]
        for family, letters, target, op in pairs:
            if not _check_bijection(sets.refine(family, letters), target, op):
                return False, f"frame {n}: {family}^{letters} deletion is not a bijection"
    return True, ""


def _basis_selections(diagram, n):
    """Selections used by the basis engine for one diagram."""
    cls = diag_mod.classify(diagram)
    l = diag_mod.boundary(diagram).segment_count
    out = [marking_mod.selection_S(diagram, l), marking_mod.selection_S(diagram, cls.index_w)]
    if diagram.steps[0] == "H":
        out.append(marking_mod.selection_S_tilde(diagram, l))
        out.append(marking_mod.selection_S_tilde(diagram, cls.index_w))
    rules = {
        t: marking_mod.SelectionRule.ALL_POINTS
        for t in diag_mod.boundary(diagram).horizontal_indices()
    }
    out.append(marking_mod.marked_points(diagram, rules))
    return out


def _suite_marking(max_n: int):
    for n in range(1, min(max_n, 10) + 1):
        for diagram in diag_mod.enumerate_diagrams(n):
            for sel in _basis_selections(diagram, n):
                data = marking_mod.tuples(diagram, sel)
                if any(ti not in (1, 2) for ti in data.t):
                    return False, f"{diagram.steps}: t entries outside {{1,2}}"
                for j in range(data.k):
                    if data.d[j + 1] - data.d[j] < data.t[j]:
                        return False, f"{diagram.steps}: d gaps do not dominate t"
            # unpadded distance tuples transform correctly under deletions
            d_all = marking_mod.lf_ktheory(diagram).d
            if diagram.steps[0] == "H" and n >= 2:
                smaller = marking_mod.lf_ktheory(diag_mod.delete_right_column(diagram)).d
                if d_all[0] != 0 or tuple(x - 1 for x in d_all[1:]) != smaller:
                    return False, f"{diagram.steps}: column deletion breaks distances"
            if diagram.steps[0] == "V" and n >= 2:
                smaller = marking_mod.lf_ktheory(diag_mod.delete_top_row(diagram)).d
                if tuple(x - 1 for x in d_all) != smaller:
                    return False, f"{diagram.steps}: row deletion breaks distances"
    return True, ""


def _suite_descriptor_dimensions(max_n: int):
    for n in range(1, min(max_n, 8) + 1):
        ambient = comb(n + 1, 2)
        for diagram in diag_mod.enumerate_diagrams(n):
            desc = marking_mod.lf_ktheory(diagram)
            if flags_mod.relative_dimension(desc) != ambient - diagram.weight:
                return False, f"{diagram.steps}: K-theory scheme dimension is off"
            if flags_mod.component_count(desc) != 1:
                return False, f"{diagram.steps}: K-theory scheme is not irreducible"
    return True, ""


def _gorenstein_descriptors(max_half_rank: int):
    for n in range(1, max_half_rank + 1):
        for k in range(0, 3):
            for d in _tuples_nondecreasing(n, k + 1):
                for t in _tuples_any(2, k, lo=1):
                    for gaps in _tuples_any(1, k, lo=0):
                        e = tuple(d[i] - gaps[i] for i in range(k))
                        desc = flags_mod.FlagDescriptor(n, d, e, t)
                        if flags_mod.is_valid(desc):
                            yield desc


def _tuples_nondecreasing(bound, length, start=0):
    if length == 0:
        yield ()
        return
    for first in range(start, bound + 1):
        for rest in _tuples_nondecreasing(bound, length - 1, first):
            yield (first,) + rest


def _tuples_any(bound, length, lo):
    if length == 0:
        yield ()
        return
    for first in range(lo, bound + 1):
        for rest in _tuples_any(bound, length - 1, lo):
            yield (first,) + rest


def _suite_dimension_e_independence(max_n: int):
    cap = min(max_n, 6)
    for desc in _gorenstein_descriptors(cap):
        if desc.k >= 1 and desc.d[0] - desc.e[0] == 1:
            raised = flags_mod.FlagDescriptor(
                desc.half_rank, desc.d, (desc.d[0],) + desc.e[1:], desc.t
            )
            if not flags_mod.is_valid(raised):
                continue
            if flags_mod.relative_dimension(desc) != flags_mod.relative_dimension(raised):
                return False, f"{desc}: dimension changed when raising e_0"
    return True, ""


def _suite_canonical_goldens(max_n: int):
    n = pic_mod.SYMBOLIC_N
    cases = [
        (
            (1, 2),
            (0,),
            (1,),
            {
                pic_mod.delta(0): 1,
                pic_mod.nabla(0): n - 1,
                pic_mod.det_v(2): 1 - n,
                pic_mod.det_v(1): -1,
            },
        ),
        (
            (1, 3),
            (0,),
            (2,),
            {
                pic_mod.delta(0): 2,
                pic_mod.nabla(0): n - 2,
                pic_mod.det_v(3): 2 - n,
                pic_mod.det_v(1): -2,
            },
        ),
        (
            (0, 2),
            (0,),
            (2,),
            {
                pic_mod.delta(0): 3,
                pic_mod.delta(1): 1,
                pic_mod.nabla(0): n - 3,
                pic_mod.det_v(2): 1 - n,
                pic_mod.det_v(0): -2,
            },
        ),
    ]
    for d, e, t, expected in cases:
        actual = pic_mod.canonical_sheaf_in_n(d, e, t)
        if actual != pic_mod.PicElement(expected):
            return False, f"canonical sheaf of d={d}, e={e}, t={t} is {actual}"
    return True, ""


def _suite_twist_alignment(max_n: int):
    for n in range(1, min(max_n, 8) + 1):
        sets = diag_mod.class_sets(n)
        for diagram in sets.almost_even:
            if n % 2 == 0 and diagram.steps[0] == "V":
                variant = pic_mod.TwistVariant.XI1
            else:
                variant = pic_mod.TwistVariant.XI0
            result = pic_mod.twist_alignment(diagram, variant, n)
            if not result.ok:
                return False, (
                    f"{diagram.steps}: parity {result.parity}, required {result.required}"
                )
    return True, ""


def _suite_recursions(max_n: int):
    for n in range(2, min(max_n, 10) + 1):
        report = basis_mod.verify_recursions(n)
        if not report.passed:
            bad = next(c for c in report.cases if not c.passed)
            return False, f"frame {n} case ({bad.label}) mismatch at {bad.first_mismatch}"
    return True, ""


def _suite_geometry(max_n: int):
    for n in range(1, min(max_n, 8) + 1):
        report = basis_mod.verify_geometry(n)
        if not report.passed:
            return False, f"frame {n}: {report.failures[0]}"
    return True, ""


def _suite_connecting(max_n: int):
    expected = {
        (0, pic_mod.Twist.DELTA): pic_mod.ConnectingCase.SPLIT_CASE_I,
        (0, pic_mod.Twist.TRIVIAL): pic_mod.ConnectingCase.NEEDS_PADDING,
        (1, pic_mod.Twist.TRIVIAL): pic_mod.ConnectingCase.ETA_CASE_II,
        (1, pic_mod.Twist.DELTA): pic_mod.ConnectingCase.ETA_CASE_III,
    }
    for n in range(2, min(max_n, 10) + 1):
        for twist in (pic_mod.Twist.TRIVIAL, pic_mod.Twist.DELTA):
            lam1, lam2 = pic_mod.lambda_pair(twist)
            case = pic_mod.classify_connecting(n, 2, lam1, lam2)
            if case is not expected[(n % 2, twist)]:
                return False, f"n={n} twist={twist.value}: got {case.value}"
    return True, ""


SUITES = (
    ("counting", _suite_counting),
    ("boundary-structure", _suite_boundary),
    ("class-partitions", _suite_class_partitions),
    ("deletion-bijections", _suite_bijections),
    ("marking-tuples", _suite_marking),
    ("descriptor-dimensions", _suite_descriptor_dimensions),
    ("dimension-e-independence", _suite_dimension_e_independence),
    ("canonical-goldens", _suite_canonical_goldens),
    ("twist-alignment", _suite_twist_alignment),
    ("recursions", _suite_recursions),
    ("geometry", _suite_geometry),
    ("connecting-case-table", _suite_connecting),
)


def _cmd_verify(args, out) -> int:
    bound = _bound(VERIFY_BOUND)
    max_n = args.max_n if args.max_n is not None else bound
    if max_n > bound:
        raise DomainError(f"--max-n {max_n} is above the configured bound {bound}")
    all_ok = True
    for name, suite in SUITES:
        ok, detail = suite(max_n)
        all_ok = all_ok and ok
        status = "ok  " if ok else "FAIL"
        suffix = f": {detail}" if detail else ""
        print(f"{status} {name}{suffix}", file=out)
    print("verify: all suites passed" if all_ok else "verify: FAILURES", file=out)
    return 0 if all_ok else 1


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lagflag",
        description="Shifted-diagram and flag-scheme calculator for Lagrangian "
        "Grassmannian K-theory bases.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, choices=("text", "json")):
        p.add_argument("--format", choices=choices, default="text")

    p = sub.add_parser("enumerate", help="list all diagrams of a frame")
    p.add_argument("-n", type=int, required=True)
    add_format(p, ("text", "json", "csv"))
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("classify", help="boundary and class data of one diagram")
    p.add_argument("diagram", help="step string over V/H, e.g. VVH")
    add_format(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("scheme", help="validate and report on a flag-scheme descriptor")
    p.add_argument("--name", help="named scheme: B2, E2, F2 or LF_<i>")
    p.add_argument("-n", type=int, help="half rank for --name")
    p.add_argument("--diagram", help="build the scheme attached to a diagram")
    p.add_argument(
        "--construction",
        choices=("ktheory", "a", "b"),
        default="ktheory",
        help="which construction to apply to --diagram",
    )
    p.add_argument("--w", type=int, help="selection cutoff for constructions a/b")
    p.add_argument("--d", help="comma-separated d tuple")
    p.add_argument("--e", help="comma-separated e tuple")
    p.add_argument("--t", help="comma-separated t tuple")
    p.add_argument("--half-rank", help="half rank of the ambient bundle")
    add_format(p)
    p.set_defaults(func=_cmd_scheme)

    p = sub.add_parser("canonical", help="canonical-sheaf exponent table")
    p.add_argument("--d", required=True)
    p.add_argument("--e", default="")
    p.add_argument("--t", default="")
    p.add_argument("--half-rank", required=True, help="an integer, or N for symbolic")
    add_format(p)
    p.set_defaults(func=_cmd_canonical)

    p = sub.add_parser("basis", help="additive basis decomposition of a frame")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--twist", choices=("O", "Delta"), default="O")
    p.add_argument("--theory", choices=("k", "gw"), default="gw")
    add_format(p, ("text", "json", "csv"))
    p.set_defaults(func=_cmd_basis)

    p = sub.add_parser("recursion", help="check the decomposition recursions of a frame")
    p.add_argument("-n", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_recursion)

    p = sub.add_parser("verify", help="run every verification suite")
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("witt", help="GW-atom counts folded mod 4")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--twist", choices=("O", "Delta"), default="O")
    add_format(p)
    p.set_defaults(func=_cmd_witt)

    p = sub.add_parser(
        "classify-connecting", help="two-step blow-up connecting-homomorphism case"
    )
    p.add_argument("--c1", type=int, required=True)
    p.add_argument("--c2", type=int, required=True)
    p.add_argument("--lam", required=True, help="two parities, e.g. 0,0")
    p.set_defaults(func=_cmd_classify_connecting)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except LagflagError as exc:
        print(f"lagflag: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
