"""Command-line interface: model loading, dispatch, tables and JSON output."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bbsmooth import LinearProjectiveAction, bb_cells, verify_class_formula, verify_duality
from .crystal import build_atom_poset, enumerate_crystals
from .errors import DTLocError, UsageError
from .halflaurent import HalfLaurent
from .localize import (
    euler_specialization,
    localization_series,
    compare_chambers,
    wall_report,
)
from .quiver import builtin_quiver, parse_quiver, slope_from_values, validate_slope
from .tangent import tangent_complex_weights


def _load_quiver(args):
    if getattr(args, "model", None) and getattr(args, "quiver", None):
        raise UsageError("give either --model or --quiver, not both")
    if getattr(args, "model", None):
        return builtin_quiver(args.model)
    if getattr(args, "quiver", None):
        try:
            with open(args.quiver, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise DTLocError(f"cannot read quiver file: {exc}") from exc
        return parse_quiver(text, name=os.path.basename(args.quiver))
    raise UsageError("a model is required: --model c3|conifold or --quiver <path>")


def _parse_slope(q, text):
    try:
        values = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise UsageError(f"slope must be a comma-separated integer list, got {text!r}")
    if len(values) != len(q.arrows):
        raise UsageError(
            f"slope arity {len(values)} does not match the model's arrow count "
            f"{len(q.arrows)} ({', '.join(a.name for a in q.arrows)})"
        )
    return slope_from_values(q, values)


def _threads(args) -> int:
    if getattr(args, "threads", None):
        return max(1, args.threads)
    env = os.environ.get("DTLOC_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"DTLOC_THREADS must be an integer, got {env!r}")
    return 1


def _emit_json(payload) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=False, separators=(",", ":")))
    sys.stdout.write("\n")


def _apply_sign_convention(series, convention):
    if convention == "qneg":
        flipped = [
            c if n % 2 == 0 else c * HalfLaurent.monomial(0, -1)
            for n, c in enumerate(series.coeffs)
        ]
        return type(series)(series.order, flipped)
    return series


def cmd_validate(args) -> int:
    q = _load_quiver(args)
    print(f"model: {q.name}")
    print(f"vertices: {len(q.vertices)}")
    print(f"arrows: {len(q.arrows)}")
    print(f"potential terms: {len(q.potential)}")
    print(f"framing: {', '.join(q.framings)}")
    for w in q.warnings:
        print(f"warning: {w}")
    if args.slope:
        s = _parse_slope(q, args.slope)
        violations = validate_slope(q, s)
        if violations:
            for t in violations:
                print(f"violated potential term: {t.render()}")
            return 1
        print("slope: potential-invariant")
    return 0


def cmd_fixedpoints(args) -> int:
    q = _load_quiver(args)
    poset = build_atom_poset(q, args.max_boxes)
    crystals = enumerate_crystals(poset, args.max_boxes)
    counts = [0] * (args.max_boxes + 1)
    for c in crystals:
        counts[c.size] += 1
    if args.json:
        payload = {
            "model": q.name,
            "max_boxes": args.max_boxes,
            "counts": counts,
            "crystals": [
                {
                    "size": c.size,
                    "atoms": [
                        {
                            "vertex": poset.atoms[i].vertex,
                            "weight": list(poset.atoms[i].weight),
                            "depth": poset.atoms[i].depth,
                        }
                        for i in c.atom_indices
                    ],
                }
                for c in crystals
            ],
        }
        _emit_json(payload)
    else:
        print(f"model: {q.name}")
        for n, cnt in enumerate(counts):
            print(f"size {n}: {cnt}")
    return 0


def cmd_index(args) -> int:
    q = _load_quiver(args)
    s = _parse_slope(q, args.slope)
    violations = validate_slope(q, s)
    if violations:
        raise DTLocError(
            "slope does not leave the potential invariant: "
            + "; ".join(t.render() for t in violations)
        )
    poset = build_atom_poset(q, args.max_boxes)
    crystals = enumerate_crystals(poset, args.max_boxes)
    rows = []
    ids: dict[int, int] = {}
    for c in crystals:
        ids[c.size] = ids.get(c.size, -1) + 1
        report = tangent_complex_weights(poset, c, s)
        rows.append((c.size, ids[c.size], report))
    if args.json:
        payload = {
            "model": q.name,
            "slope": [s.weight(a.name) for a in q.arrows],
            "max_boxes": args.max_boxes,
            "points": [
                {
                    "size": size,
                    "id": cid,
                    "ind": r.ind,
                    "d_plus": r.d_plus,
                    "d_zero": r.d_zero,
                    "d_minus": r.d_minus,
                    "deg_weights": [list(d) for d in r.deg_weights],
                }
                for size, cid, r in rows
            ],
        }
        _emit_json(payload)
    else:
        print(f"model: {q.name}")
        print("size id ind")
        for size, cid, r in rows:
            print(f"{size} {cid} {r.ind}")
    return 0


def cmd_series(args) -> int:
    q = _load_quiver(args)
    s = _parse_slope(q, args.slope)
    ls = localization_series(q, s, args.order, threads=_threads(args))
    series = _apply_sign_convention(ls.series, args.sign_convention)
    if args.json:
        payload = {
            "model": q.name,
            "slope": [s.weight(a.name) for a in q.arrows],
            "order": args.order,
            "coefficients": [c.pairs() for c in series.coeffs],
        }
        print(f"note: {ls.attracting_note}", file=sys.stderr)
        _emit_json(payload)
    else:
        print(f"model: {q.name}")
        print(f"slope: {','.join(str(s.weight(a.name)) for a in q.arrows)}")
        print(f"note: {ls.attracting_note}")
        for n, c in enumerate(series.coeffs):
            print(f"q^{n}: {c.render()}")
    return 0


def cmd_walls(args) -> int:
    q = _load_quiver(args)
    s = _parse_slope(q, args.slope)
    report = wall_report(q, s, args.max_cycle_len)
    if args.json:
        payload = {
            "model": q.name,
            "slope": [s.weight(a.name) for a in q.arrows],
            "max_cycle_len": args.max_cycle_len,
            "cycles": [
                {"cycle": list(c.word), "weight": w} for c, w in report.cycles
            ],
            "walls_hit": [list(c.word) for c in report.walls_hit],
            "chamber_signature": list(report.chamber_signature),
        }
        _emit_json(payload)
    else:
        print(f"model: {q.name}")
        for c, w in report.cycles:
            print(f"cycle {c.render()}: weight {w}")
        sig = ",".join({1: "+", 0: "0", -1: "-"}[x] for x in report.chamber_signature)
        print(f"signature: ({sig})")
        if report.walls_hit:
            print(f"walls: {'; '.join(c.render() for c in report.walls_hit)}")
        else:
            print("walls: none")
    return 0


def cmd_compare(args) -> int:
    q = _load_quiver(args)
    sa = _parse_slope(q, args.slope_a)
    sb = _parse_slope(q, args.slope_b)
    equal, degree = compare_chambers(q, sa, sb, args.order)
    if equal:
        print("equal: true")
    else:
        print(f"equal: false, first differing degree: {degree}")
    return 0


def cmd_bbcheck(args) -> int:
    try:
        factors = tuple(
            tuple(int(tok) for tok in chunk.split(","))
            for chunk in args.factors.split(";")
            if chunk.strip() != ""
        )
    except ValueError:
        raise UsageError(f"--factors must look like '0,1,2;0,1', got {args.factors!r}")
    action = LinearProjectiveAction(factors)
    print("fixed point  d_plus  d_minus")
    for label, dp, dm in bb_cells(action):
        print(f"{label}  {dp}  {dm}")
    lhs, rhs, equal = verify_class_formula(action)
    print(f"cell sum: {lhs.render()}")
    print(f"product class: {rhs.render()}")
    print(f"identity: {'equal' if equal else 'NOT EQUAL'}")
    print(f"duality: {'ok' if verify_duality(action) else 'BROKEN'}")
    return 0 if equal else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dtloc",
        description=(
            "Refined Donaldson-Thomas series of framed toric quivers by exact "
            "torus localization over molten crystals."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_model_flags(p):
        p.add_argument("--model", choices=["c3", "conifold", "loop1"])
        p.add_argument("--quiver", help="path to a quiver description document")

    p = sub.add_parser("validate", help="parse and validate a model")
    add_model_flags(p)
    p.add_argument("--slope", help="comma-separated integer weights, one per arrow")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("fixedpoints", help="enumerate molten crystals by size")
    add_model_flags(p)
    p.add_argument("--max-boxes", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_fixedpoints)

    p = sub.add_parser("index", help="signed contracting-weight index per fixed point")
    add_model_flags(p)
    p.add_argument("--slope", required=True)
    p.add_argument("--max-boxes", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_index)

    p = sub.add_parser("series", help="localization generating series for a slope")
    add_model_flags(p)
    p.add_argument("--slope", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--threads", type=int)
    p.add_argument(
        "--sign-convention",
        choices=["none", "qneg"],
        default="none",
        help="presentation only: qneg substitutes q -> -q",
    )
    p.set_defaults(fn=cmd_series)

    p = sub.add_parser("walls", help="slope signs on elementary cycles")
    add_model_flags(p)
    p.add_argument("--slope", required=True)
    p.add_argument("--max-cycle-len", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_walls)

    p = sub.add_parser("compare", help="compare the series of two slopes")
    add_model_flags(p)
    p.add_argument("--slope-a", required=True)
    p.add_argument("--slope-b", required=True)
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(fn=cmd_compare)

    p = sub.add_parser("bbcheck", help="projective-space cell decomposition identity")
    p.add_argument(
        "--factors",
        required=True,
        help="weights per factor, e.g. '0,1,2;0,1' for P2 x P1",
    )
    p.set_defaults(fn=cmd_bbcheck)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DTLocError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
