"""Command-line interface.

Exit status is 0 on success, 1 for domain errors (invalid root sets,
infinite groupoids, non-automorphisms, ...) and 2 for unreadable input.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import catalog
from .complex import build_complex, complex_dot, decorate, decorated_json
from .errors import WeylGroupoidError
from .groupoid import DEFAULT_MAX_OBJECTS, enumerate_objects, object_change_dot, verify_axioms
from .nichols import BraidingMatrix, hilbert_full, hilbert_restricted, roots_of_braiding
from .restriction import restrict_folding, restrict_parabolic, restrict_permutation
from .rootsys import RootSet, cartan_from_roots


class InputError(Exception):
    """Input that cannot be read as the expected JSON document."""


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path}: {exc}") from exc


def _parse(builder, data, what: str):
    try:
        return builder(data)
    except WeylGroupoidError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError, IndexError) as exc:
        raise InputError(f"malformed {what} JSON: {exc!r}") from exc


def _root_set(args) -> RootSet:
    if args.seed_catalog:
        return catalog.named_root_set(args.seed_catalog)
    if not args.input:
        raise InputError("a root set is required: pass --input FILE or --seed-catalog NAME")
    return _parse(RootSet.from_json, _read_json(args.input), "root set")


def _braiding(value: str) -> BraidingMatrix:
    if os.path.exists(value) or value == "-":
        return _parse(BraidingMatrix.from_json, _read_json(value), "braiding")
    return catalog.example_braiding(value)


def _indices(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError as exc:
        raise InputError(f"bad index list {text!r}") from exc


def _emit(args, payload) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _write_dot(path: str, text: str) -> None:
    with open(path, "w") as fh:
        fh.write(text)


def cmd_cartan(args):
    R = _root_set(args)
    return {"rank": R.rank, "cartan": [list(row) for row in cartan_from_roots(R)]}


def cmd_enumerate(args):
    G = enumerate_objects(_root_set(args), args.max_objects)
    if args.dot:
        _write_dot(args.dot, object_change_dot(G))
    return G.to_json()


def cmd_restrict(args):
    R = _root_set(args)
    if args.parabolic is not None:
        rep = restrict_parabolic(R, _indices(args.parabolic))
    elif args.permute is not None:
        rep = restrict_permutation(R, _indices(args.permute))
    else:
        try:
            g = json.loads(args.fold)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad matrix {args.fold!r}") from exc
        rep = restrict_folding(R, g)
    return rep.to_json()


def cmd_hilbert(args):
    source = args.braiding or args.seed_catalog or args.input
    if not source:
        raise InputError("a braiding is required: pass --braiding, --seed-catalog or --input")
    Q = _braiding(source)
    if args.roots:
        R = _parse(RootSet.from_json, _read_json(args.roots), "root set")
    else:
        R = roots_of_braiding(Q, args.max_objects)
    full = hilbert_full(Q, R)
    out = {"braiding": Q.to_json(), "positive_roots": [list(v) for v in R.sorted()],
           "full": full.to_json(), "dimension": str(full.dimension)}
    if args.restrict is not None:
        loc, res = hilbert_restricted(Q, R, _indices(args.restrict))
        out["localized"] = loc.to_json()
        out["restricted"] = res.to_json()
    return out


def cmd_complex(args):
    G = enumerate_objects(_root_set(args), args.max_objects)
    Q = _braiding(args.braiding) if args.braiding else None
    cx = build_complex(G, include_minus_one=args.minus_one)
    if args.dot:
        decos = {c.representative: decorate(G, c, Q) for c in cx.all_cells()}
        _write_dot(args.dot, complex_dot(cx, decos))
    return decorated_json(G, cx, Q)


def cmd_survey(args):
    R = _root_set(args)
    only = True if args.standard_chamber else (False if args.all_chambers else None)
    return catalog.survey_restrictions(R, args.target_rank, args.max_objects, only, args.jobs).to_json()


def cmd_verify(args):
    return verify_axioms(enumerate_objects(_root_set(args), args.max_objects)).to_json()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", help="input JSON file ('-' for stdin)")
    common.add_argument("--seed-catalog", help="catalog entry, e.g. B3, E7, cycle_rank3")
    common.add_argument("--output", "-o", help="write the JSON result here instead of stdout")
    common.add_argument("--max-objects", type=int, default=DEFAULT_MAX_OBJECTS)
    common.add_argument("--verbose", "-v", action="store_true")

    p = argparse.ArgumentParser(prog="weylgroupoid",
                                description="Weyl groupoids, restrictions and Nichols-algebra Hilbert series")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("cartan", parents=[common], help="Cartan matrix of a root set")

    s = sub.add_parser("enumerate", parents=[common], help="enumerate the Cartan graph")
    s.add_argument("--dot", help="also write a DOT graph of root-set classes")

    s = sub.add_parser("restrict", parents=[common], help="restrict a root set")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--parabolic", metavar="J", help="simple indices, e.g. '1,2'")
    g.add_argument("--permute", metavar="SIGMA", help="images of 1..rank, e.g. '3,2,1'")
    g.add_argument("--fold", metavar="MATRIX", help="JSON integer matrix of an involution")

    s = sub.add_parser("hilbert", parents=[common], help="Hilbert series of a diagonal Nichols algebra")
    s.add_argument("--braiding", help="braiding JSON file or catalog name")
    s.add_argument("--roots", help="root set JSON; computed from the braiding if omitted")
    s.add_argument("--restrict", metavar="J", help="also give the series localized and restricted at J")

    s = sub.add_parser("complex", parents=[common], help="decorated simplicial complex")
    s.add_argument("--braiding", help="braiding at the seed: JSON file or catalog name")
    s.add_argument("--minus-one", action="store_true", help="include the (-1)-cell")
    s.add_argument("--dot", help="also write a DOT graph of face incidences")

    s = sub.add_parser("survey", parents=[common], help="survey parabolic restrictions")
    s.add_argument("--target-rank", type=int, required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(max_objects=2_000)
    grp = s.add_mutually_exclusive_group()
    grp.add_argument("--standard-chamber", action="store_true", help="only restrict at the seed")
    grp.add_argument("--all-chambers", action="store_true", help="restrict at every object")

    sub.add_parser("verify", parents=[common], help="check the Cartan-graph axioms")
    return p


COMMANDS = {
    "cartan": cmd_cartan,
    "enumerate": cmd_enumerate,
    "restrict": cmd_restrict,
    "hilbert": cmd_hilbert,
    "complex": cmd_complex,
    "survey": cmd_survey,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        _emit(args, COMMANDS[args.command](args))
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except WeylGroupoidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
