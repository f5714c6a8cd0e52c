"""Command-line front end.

Exit codes: 0 success/true, 1 checked-false, 2 input error, 3 internal
consistency violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import caps
from .bits import iter_bits
from .connections import (
    Witness,
    is_qoset_galois,
    left_adjoint,
    right_adjoint,
    verify_theorem,
)
from .documents import (
    SpaceDocument,
    dump_map,
    dump_space,
    format_set,
    map_document,
    parse_map,
    parse_space,
)
from .enumeration import enumerate_galois_connections, enumerate_moore_families, enumerate_qosets
from .errors import CapExceededError, GaloisError, InvalidFamilyError
from .spaces import closed_set_lattice, closure_table, specialization_order

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    """Raised inside commands for anything that maps to exit code 2."""


class CheckedFalse(Exception):
    """Raised when a well-formed input fails a check (exit code 1)."""


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_space(path: str) -> SpaceDocument:
    return parse_space(_read(path), what=path)


def _space(doc: SpaceDocument, path: str, strict: bool):
    if not strict and not doc.has_universe():
        print(f"notice: {path}: universe inserted into closed sets", file=sys.stderr)
    v = doc.violation(strict=strict)
    if v is not None:
        raise CheckedFalse(f"{path}: not a Moore family: {_violation_text(doc, v)}")
    try:
        return doc.to_space(strict=strict)
    except CapExceededError as exc:
        raise InputError(str(exc)) from None


def _violation_text(doc: SpaceDocument, v) -> str:
    if v.kind == "universe":
        return f"universe {doc.format_set(v.a)} is not closed"
    return (
        f"intersection of {doc.format_set(v.a)} and {doc.format_set(v.b)} "
        f"is {doc.format_set(v.missing)} which is not closed"
    )


def _witness_detail(doc: SpaceDocument, v) -> str:
    return doc.format_set(v.a if v.kind == "universe" else v.missing)


def _emit(obj) -> None:
    print(json.dumps(obj, ensure_ascii=False, sort_keys=True))


# --------------------------------------------------------------------------
# validate


def cmd_validate(args) -> int:
    doc = _load_space(args.space)
    if not args.strict and not doc.has_universe():
        print(f"notice: {args.space}: universe inserted into closed sets", file=sys.stderr)
    v = doc.violation(strict=args.strict)
    if args.json:
        out = {"valid": v is None}
        if v is not None:
            out["violation"] = {"kind": v.kind, "text": _violation_text(doc, v),
                                "witness": _witness_detail(doc, v)}
        _emit(out)
    elif v is None:
        count = len(set(doc.masks()) | ({(1 << doc.n) - 1} if not args.strict else set()))
        print(f"valid: {count} closed set(s) over {doc.n} element(s)")
    else:
        print(f"invalid: {_violation_text(doc, v)}")
        print(f"witness: {_witness_detail(doc, v)}")
    return EXIT_OK if v is None else EXIT_FALSE


# --------------------------------------------------------------------------
# derive


def cmd_derive(args) -> int:
    doc = _load_space(args.space)
    space = _space(doc, args.space, args.strict)
    names = doc.universe
    if args.what == "specialization":
        q = specialization_order(space)
        for x, y in q.pairs():
            print(f"{names[x]} <= {names[y]}")
    elif args.what == "lattice":
        sys.stdout.write(closed_set_lattice(space).to_dot(names))
    elif args.what == "table":
        if space.n > caps.table_cap():
            raise InputError(f"table needs 2**{space.n} rows; cap is n <= {caps.table_cap()}")
        table = closure_table(space)
        for a, c in enumerate(table.entries):
            print(f"{format_set(names, a)} -> {format_set(names, c)}")
    else:
        sys.stdout.write(dump_space(doc, insert_universe=not args.strict))
    return EXIT_OK


# --------------------------------------------------------------------------
# check


def _format_witness(w: Witness, e: SpaceDocument, ep: SpaceDocument) -> str:
    if w.kind == "continuity":
        name, bad = w.detail
        target = ep if name == "phi" else e
        return f"{name} is not continuous: preimage of closed set {target.format_set(bad)} is not closed"
    if w.kind == "subset":
        return f"A'={ep.format_set(w.detail[0])}"
    if w.kind == "pair":
        x, xp = w.detail
        return f"x={e.universe[x]} x'={ep.universe[xp]}"
    if w.kind == "closed_pair":
        f, fp = w.detail
        return f"F={e.format_set(f)} F'={ep.format_set(fp)}"
    return repr(w)


def _load_pair(args):
    e_doc, ep_doc = _load_space(args.space), _load_space(args.space_prime)
    e = _space(e_doc, args.space, args.strict)
    ep = _space(ep_doc, args.space_prime, args.strict)
    return e_doc, ep_doc, e, ep


def cmd_check(args) -> int:
    e_doc, ep_doc, e, ep = _load_pair(args)
    phi = parse_map(_read(args.phi), what=args.phi).to_point_map(e_doc, ep_doc)
    psi = parse_map(_read(args.psi), what=args.psi).to_point_map(ep_doc, e_doc)
    methods = ["direct", "qoset", "induced"] if args.method == "all" else [args.method]
    if args.method == "direct" and ep.n > caps.direct_cap():
        raise InputError(
            f"direct check sweeps 2**{ep.n} subsets; cap is n' <= {caps.direct_cap()}; use --method qoset"
        )
    verdict = verify_theorem(phi, psi, e, ep)
    flags = verdict.flags()
    result = {}
    lines = []
    for m in methods:
        value = flags[m]
        result[m] = value
        if value is None:
            lines.append(f"{m}: skipped (n' > {caps.direct_cap()})")
            continue
        lines.append(f"{m}: {'true' if value else 'false'}")
        if not value:
            lines.append(f"  witness: {_format_witness(verdict.witnesses[m], e_doc, ep_doc)}")
    evaluated = [v for v in result.values() if v is not None]
    disagree = args.method == "all" and len(set(evaluated)) > 1
    if args.json:
        out = {"flags": result, "witnesses": {
            m: _format_witness(verdict.witnesses[m], e_doc, ep_doc)
            for m in methods if result.get(m) is False
        }}
        if args.method == "all":
            out["agree"] = not disagree
        _emit(out)
    else:
        print("\n".join(lines))
        if disagree:
            print("error: the three conditions disagree")
    if disagree:
        return EXIT_INTERNAL
    return EXIT_OK if evaluated and all(evaluated) else EXIT_FALSE


# --------------------------------------------------------------------------
# adjoint


def cmd_adjoint(args) -> int:
    e_doc, ep_doc, e, ep = _load_pair(args)
    mdoc = parse_map(_read(args.map), what=args.map)
    p, pp = specialization_order(e), specialization_order(ep)
    if args.side == "right":
        phi = mdoc.to_point_map(e_doc, ep_doc)
        psi = right_adjoint(phi, p, pp)
        if psi is None:
            print("none")
            return EXIT_FALSE
        if not is_qoset_galois(phi, psi, p, pp):
            print("error: synthesized right adjoint failed re-verification", file=sys.stderr)
            return EXIT_INTERNAL
        out = map_document(mdoc.target, mdoc.source, psi, ep_doc, e_doc)
        sys.stdout.write(dump_map(out, ep_doc))
    else:
        psi = mdoc.to_point_map(ep_doc, e_doc)
        phi = left_adjoint(psi, p, pp)
        if phi is None:
            print("none")
            return EXIT_FALSE
        if not is_qoset_galois(phi, psi, p, pp):
            print("error: synthesized left adjoint failed re-verification", file=sys.stderr)
            return EXIT_INTERNAL
        out = map_document(mdoc.target, mdoc.source, phi, e_doc, ep_doc)
        sys.stdout.write(dump_map(out, e_doc))
    return EXIT_OK


# --------------------------------------------------------------------------
# enumerate


def cmd_enumerate(args) -> int:
    if args.kind in ("families", "qosets"):
        if args.n is None:
            raise InputError(f"--kind {args.kind} needs --n")
        try:
            items = (
                enumerate_moore_families(args.n) if args.kind == "families" else enumerate_qosets(args.n)
            )
            if args.count_only:
                print(sum(1 for _ in items))
                return EXIT_OK
            for item in items:
                if args.kind == "families":
                    print(json.dumps([list(iter_bits(m)) for m in item.closed]))
                else:
                    print(json.dumps([[x, y] for x, y in item.pairs() if x != y]))
        except (CapExceededError, ValueError) as exc:
            raise InputError(str(exc)) from None
        return EXIT_OK
    if args.space is None or args.space_prime is None:
        raise InputError("--kind connections needs --space and --space-prime")
    e_doc, ep_doc, e, ep = _load_pair(args)
    try:
        pairs = enumerate_galois_connections(e, ep)
        if args.count_only:
            print(sum(1 for _ in pairs))
            return EXIT_OK
        for phi, psi in pairs:
            print(json.dumps({
                "phi": {e_doc.universe[x]: ep_doc.universe[y] for x, y in enumerate(phi.image)},
                "psi": {ep_doc.universe[x]: e_doc.universe[y] for x, y in enumerate(psi.image)},
            }, ensure_ascii=False))
    except CapExceededError as exc:
        raise InputError(str(exc)) from None
    return EXIT_OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="galois-closure",
        description="Closure spaces, specialization orders and Galois connections.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def space_opts(p):
        p.add_argument("--strict", action="store_true",
                       help="do not insert the universe into the closed sets")

    p = sub.add_parser("validate", help="check that a space document is a Moore family")
    p.add_argument("space")
    space_opts(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("derive", help="print the specialization order, lattice or closure table")
    p.add_argument("space")
    p.add_argument("--what", choices=["specialization", "lattice", "table", "canonical"],
                   default="specialization")
    space_opts(p)
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("check", help="decide whether (phi, psi) is a Galois connection")
    p.add_argument("space")
    p.add_argument("space_prime")
    p.add_argument("phi")
    p.add_argument("psi")
    p.add_argument("--method", choices=["direct", "qoset", "induced", "all"], default="qoset")
    p.add_argument("--json", action="store_true")
    space_opts(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("adjoint", help="synthesize the other half of a Galois connection")
    p.add_argument("space")
    p.add_argument("space_prime")
    p.add_argument("map")
    p.add_argument("--side", choices=["right", "left"], default="right")
    space_opts(p)
    p.set_defaults(func=cmd_adjoint)

    p = sub.add_parser("enumerate", help="list or count families, quasiorders or connections")
    p.add_argument("--kind", choices=["families", "qosets", "connections"], required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--space")
    p.add_argument("--space-prime", dest="space_prime")
    p.add_argument("--count-only", action="store_true")
    space_opts(p)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CheckedFalse as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_FALSE
    except (InputError, ValueError, CapExceededError) as exc:
        if isinstance(exc, InvalidFamilyError):
            print(f"invalid: {exc}", file=sys.stderr)
            return EXIT_FALSE
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except GaloisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
