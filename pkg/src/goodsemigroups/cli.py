"""Command-line front end.

Exit codes: 0 success, 1 semantic failure (axiom violations, failed
checks, elements outside the semigroup), 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .duality import check_duality, is_symmetric_complement
from .fileio import FormatError, emit_semigroup, load_semigroup
from .ideal import apery_set, principal_ideal
from .levels import apery_levels, partition
from .planecurve import (
    blowup_numerical,
    plane_branch_profile,
    reconstruct_from_blowup,
    verify_apery_shift,
)
from .plotting import render_ascii, render_svg
from .semigroup import (
    GoodSemigroup,
    direct_product,
    numerical_from_good,
    validate,
)
from .wellbehaved import d2_equivalences, is_well_behaved


def _parse_point(text: str, dim: int | None = None) -> tuple[int, ...]:
    try:
        p = tuple(int(x) for x in text.split(","))
    except ValueError:
        print(f"error: not a comma-separated integer point: {text}", file=sys.stderr)
        raise SystemExit(2)
    if dim is not None and len(p) != dim:
        print(f"error: expected {dim} coordinates, got {text}", file=sys.stderr)
        raise SystemExit(2)
    return p


def _load(path: str) -> GoodSemigroup:
    try:
        return load_semigroup(path)
    except FileNotFoundError:
        print(f"error: no such file: {path}", file=sys.stderr)
        raise SystemExit(2)
    except json.JSONDecodeError as exc:
        print(f"error: {path}:{exc.lineno}:{exc.colno}: {exc.msg}", file=sys.stderr)
        raise SystemExit(2)
    except (FormatError, ValueError) as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        raise SystemExit(2)


def cmd_validate(args) -> int:
    S = _load(args.file)
    report = validate(S)
    print("\n".join(report.lines()))
    return 0 if report.ok else 1


def cmd_apery(args) -> int:
    S = _load(args.file)
    w = _parse_point(args.omega, S.dim)
    if not S.contains(w):
        print(f"error: {w} is not an element of the semigroup", file=sys.stderr)
        return 1
    part = apery_levels(S, w)
    print(part.listing())
    return 0


def cmd_duality(args) -> int:
    S = _load(args.file)
    w = _parse_point(args.omega, S.dim) if args.omega else S.multiplicity()
    if not S.contains(w):
        print(f"error: {w} is not an element of the semigroup", file=sys.stderr)
        return 1
    E = principal_ideal(S, w)
    A = apery_set(S, w)
    part = partition(A)
    symmetric = is_symmetric_complement(S, E, part)
    print(f"symmetric complement: {'yes' if symmetric else 'no'}")
    report = check_duality(S, part)
    print("\n".join(report.lines()))
    return 0 if report.ok else 1


def cmd_product(args) -> int:
    S = direct_product(_load(args.left), _load(args.right))
    text = emit_semigroup(S)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_wellbehaved(args) -> int:
    S = _load(args.file)
    w = _parse_point(args.omega, S.dim) if args.omega else S.multiplicity()
    if not S.contains(w):
        print(f"error: {w} is not an element of the semigroup", file=sys.stderr)
        return 1
    E = principal_ideal(S, w)
    A = apery_set(S, w)
    verdict = is_well_behaved(S, E, A)
    print(f"well-behaved: {'yes' if verdict else 'no'}")
    if S.dim == 2:
        one, two, three = d2_equivalences(S, E, A)
        print(f"same-level meets in ideal: {'yes' if two else 'no'}")
        print(f"next-level domination: {'yes' if three else 'no'}")
    return 0 if verdict else 1


def cmd_blowup(args) -> int:
    S = _load(args.file)
    if S.dim != 1:
        print("error: blowup works on numerical (d = 1) input files", file=sys.stderr)
        return 1
    N = numerical_from_good(S)
    try:
        profile = plane_branch_profile(N.generators)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    blown = blowup_numerical(profile)
    print(f"generators: {','.join(map(str, blown.generators))}")
    print(f"apery({profile.multiplicity}): {','.join(map(str, blown.apery(profile.multiplicity)))}")
    return 0


def cmd_reconstruct(args) -> int:
    g1 = _parse_point(args.gens1)
    g2 = _parse_point(args.gens2)
    try:
        p1 = plane_branch_profile(g1)
        p2 = plane_branch_profile(g2)
        S = reconstruct_from_blowup(p1, p2)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = emit_semigroup(S)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    report = verify_apery_shift(S)
    print("\n".join(report.lines()), file=sys.stderr)
    return 0 if report.ok else 1


def cmd_plot(args) -> int:
    S = _load(args.file)
    if S.dim != 2:
        print("error: plots are only available for d = 2", file=sys.stderr)
        return 1
    w = _parse_point(args.omega, S.dim) if args.omega else S.multiplicity()
    if not S.contains(w):
        print(f"error: {w} is not an element of the semigroup", file=sys.stderr)
        return 1
    part = apery_levels(S, w)
    if args.ascii:
        sys.stdout.write(render_ascii(part))
        return 0
    svg = render_svg(part)
    if args.out:
        Path(args.out).write_text(svg)
    else:
        sys.stdout.write(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="goodsg", description="good semigroups of N^d from small-elements files"
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the good-semigroup axioms")
    p.add_argument("file")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("apery", help="print the Apery levels")
    p.add_argument("file")
    p.add_argument("--omega", required=True, help="comma-separated element, e.g. 4,3")
    p.set_defaults(fn=cmd_apery)

    p = sub.add_parser("duality", help="symmetric-complement and level duality check")
    p.add_argument("file")
    p.add_argument("--omega", help="defaults to the multiplicity")
    p.set_defaults(fn=cmd_duality)

    p = sub.add_parser("product", help="direct product of two semigroup files")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_product)

    p = sub.add_parser("wellbehaved", help="well-behaved complement check")
    p.add_argument("file")
    p.add_argument("--omega", help="defaults to the multiplicity")
    p.set_defaults(fn=cmd_wellbehaved)

    p = sub.add_parser("blowup", help="blow up a plane-branch numerical semigroup")
    p.add_argument("file")
    p.set_defaults(fn=cmd_blowup)

    p = sub.add_parser("reconstruct", help="rebuild a plane semigroup from two branches")
    p.add_argument("gens1", help="comma-separated generators, e.g. 2,3")
    p.add_argument("gens2")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_reconstruct)

    p = sub.add_parser("plot", help="render the Apery levels (SVG or ASCII)")
    p.add_argument("file")
    p.add_argument("--omega", help="defaults to the multiplicity")
    p.add_argument("--out")
    p.add_argument("--ascii", action="store_true")
    p.set_defaults(fn=cmd_plot)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
