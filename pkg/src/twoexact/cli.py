"""Command-line front-end.

One subcommand per verifier, search, or construction; inputs are
interchange files, outputs are a deterministic certificate stream (one
JSON document per line) or, for the constructive subcommands, an
interchange document.  Exit codes: 0 all checks pass, 1 a check failed,
2 input or schema error, 3 inconclusive (search cap exceeded).  The
configured cap is printed in every certificate stream's header document.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from typing import Any, Sequence

from .closure import is_closed_ideal
from .core import (CapExceeded, Certificate, InputError, TwoCategory,
                   validate_two_category)
from .exact import (check_grandis_i, check_grandis_ii, check_puppe,
                    fs_from_ideal, ideal_from_fs, three_pieces)
from .factor import (FactorizationSystem, check_weak_two_fibration,
                     validate_fs, validate_rofs)
from .formats import (Document, document_to_finite_category,
                      document_to_fs, document_to_one_ideal,
                      document_to_pseudofunctor, document_to_pseudonatural,
                      document_to_two_category, document_to_two_ideal,
                      document_to_witness_bundle, finite_category_to_document,
                      fs_to_document, parse, pseudofunctor_to_document,
                      pseudonatural_to_document, serialize,
                      two_category_to_document, two_ideal_to_document,
                      witness_bundle_to_document)
from .gen import (MUTATION_OPERATORS, chaotic_enrichment, cyclic_tower,
                  locally_discrete, mutate, partial_bijections, pointed_sets,
                  terminal_category)
from .ideal import TwoIdeal, canonical_zero_ideal, validate_two_ideal
from .idealeq import ideals_equivalent
from .limits import biisoinserter, two_cokernels, two_kernels
from .onecat import (FiniteCategory, grandis_exact_1cat, puppe_exact_1cat,
                     validate_category, validate_one_ideal, zero_ideal_1cat)
from .pseudo import validate_pseudofunctor, validate_pseudonatural

PASS, FAIL, INPUT_ERROR, INCONCLUSIVE = 0, 1, 2, 3


def _emit(obj: Any) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ": ")))


def _header(command: str, cap: int | None, inputs: Sequence[str]) -> None:
    _emit({"command": command, "cap": cap, "inputs": list(inputs)})


def _status_exit(status: str) -> int:
    return {"pass": PASS, "fail": FAIL, "inconclusive": INCONCLUSIVE}[status]


def _worst(codes: Sequence[int]) -> int:
    for code in (INPUT_ERROR, FAIL, INCONCLUSIVE):
        if code in codes:
            return code
    return PASS


def _load(path: str) -> Document:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return parse(text)


def _write_product(doc: Document, out: str | None) -> None:
    text = serialize(doc)
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _base_and_ideal(args) -> tuple[TwoCategory, TwoIdeal]:
    """The working 2-category and ideal: from the main file when it is a
    two_ideal document, from --ideal when given (its base tables must match
    the main file's), and the canonical bizero ideal otherwise."""
    doc = _load(args.file)
    if doc.kind == "two_ideal" and args.ideal is None:
        return document_to_two_ideal(doc)
    t = document_to_two_category(doc)
    if args.ideal is not None:
        t2, n = document_to_two_ideal(_load(args.ideal))
        if t2 != t:
            raise InputError("the ideal document's base tables do not "
                             "match the main input")
        return t, n
    return t, canonical_zero_ideal(t)


def _fs_of(args, t: TwoCategory) -> FactorizationSystem:
    if args.fs is None:
        raise InputError("this subcommand needs --fs")
    doc = _load(args.fs)
    if doc.kind == "witness-bundle":
        t2, fs = document_to_witness_bundle(doc)[:2]
    else:
        t2, fs = document_to_fs(doc)
    if t2 != t:
        raise InputError("the factorization-system document's base tables "
                         "do not match the main input")
    return fs


def _presentation_dict(pres) -> dict[str, str]:
    return dataclasses.asdict(pres)


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_validate(args) -> int:
    doc = _load(args.file)
    certs: list[Certificate] = []
    if doc.kind == "two_category":
        certs.append(validate_two_category(document_to_two_category(doc)))
    elif doc.kind == "two_ideal":
        t, n = document_to_two_ideal(doc)
        certs.append(validate_two_category(t))
        certs.append(validate_two_ideal(t, n))
    elif doc.kind == "factorization_system":
        t, fs = document_to_fs(doc)
        certs.append(validate_two_category(t))
        certs.append(validate_fs(t, fs, args.cap))
    elif doc.kind == "pseudofunctor":
        certs.append(validate_pseudofunctor(document_to_pseudofunctor(doc)))
    elif doc.kind == "pseudonatural":
        certs.append(
            validate_pseudonatural(document_to_pseudonatural(doc)))
    elif doc.kind == "witness-bundle":
        t, fs, k, c, eta, epsilon = document_to_witness_bundle(doc)
        certs.append(validate_two_category(t))
        certs.append(validate_fs(t, fs, args.cap))
        certs.append(validate_pseudofunctor(k))
        certs.append(validate_pseudofunctor(c))
        certs.append(validate_pseudonatural(eta))
        certs.append(validate_pseudonatural(epsilon))
    elif doc.kind == "finite_category":
        certs.append(validate_category(document_to_finite_category(doc)))
    elif doc.kind == "one_ideal":
        c1, ideal = document_to_one_ideal(doc)
        certs.append(validate_category(c1))
        certs.append(validate_one_ideal(c1, ideal))
    _header("validate", args.cap, [args.file])
    for cert in certs:
        _emit(cert.to_json_dict())
    return _worst([_status_exit(c.status) for c in certs])


_GENERATORS = {
    "terminal": (0, terminal_category),
    "partial-bijections": (1, partial_bijections),
    "cyclic-tower": (2, cyclic_tower),
    "pointed-sets": (1, pointed_sets),
}

_WRAPPERS = {
    "locally-discrete": locally_discrete,
    "chaotic": chaotic_enrichment,
}


def _gen_entity(tokens: list[str]):
    if not tokens:
        raise InputError("empty generator recipe")
    head = tokens.pop(0)
    if head in _WRAPPERS:
        inner = _gen_entity(tokens)
        if not isinstance(inner, FiniteCategory):
            raise InputError(f"{head} wraps a 1-category generator")
        return _WRAPPERS[head](inner)
    if head not in _GENERATORS:
        known = ", ".join(sorted(_GENERATORS) + sorted(_WRAPPERS))
        raise InputError(f"unknown generator {head!r} (known: {known})")
    arity, fn = _GENERATORS[head]
    if len(tokens) < arity:
        raise InputError(f"{head} needs {arity} integer argument(s)")
    nums = []
    for _ in range(arity):
        tok = tokens.pop(0)
        try:
            nums.append(int(tok))
        except ValueError:
            raise InputError(f"{head}: not an integer: {tok!r}") from None
    return fn(*nums)


def _cmd_gen(args) -> int:
    tokens = list(args.recipe)
    entity = _gen_entity(tokens)
    if tokens:
        raise InputError(f"trailing generator arguments: {' '.join(tokens)}")
    if isinstance(entity, FiniteCategory):
        doc = finite_category_to_document(entity)
    else:
        doc = two_category_to_document(entity)
    _write_product(doc, args.out)
    return PASS


def _cmd_kernel(args) -> int:
    t, n = _base_and_ideal(args)
    _header("kernel", args.cap, [args.file])
    presentations = two_kernels(t, n, args.arrow, cap=args.cap)
    _emit({"arrow": args.arrow,
           "kernels": [_presentation_dict(p) for p in presentations]})
    return PASS if presentations else FAIL


def _cmd_cokernel(args) -> int:
    t, n = _base_and_ideal(args)
    _header("cokernel", args.cap, [args.file])
    presentations = two_cokernels(t, n, args.arrow, cap=args.cap)
    _emit({"arrow": args.arrow,
           "cokernels": [_presentation_dict(p) for p in presentations]})
    return PASS if presentations else FAIL


def _cmd_biisoinserter(args) -> int:
    doc = _load(args.file)
    t = document_to_two_category(doc)
    _header("biisoinserter", args.cap, [args.file])
    presentations = biisoinserter(t, args.left, args.right, cap=args.cap)
    _emit({"left": args.left, "right": args.right,
           "inserters": [_presentation_dict(p) for p in presentations]})
    return PASS if presentations else FAIL


def _cmd_check_ideal(args) -> int:
    t, n = _base_and_ideal(args)
    _header("check-ideal", args.cap, [args.file])
    cert = validate_two_ideal(t, n)
    _emit(cert.to_json_dict())
    return _status_exit(cert.status)


def _cmd_check_closed(args) -> int:
    t, n = _base_and_ideal(args)
    _header("check-closed", args.cap, [args.file])
    cert = is_closed_ideal(t, n, args.cap)
    _emit(cert.to_json_dict())
    return _status_exit(cert.status)


def _cmd_equiv_ideals(args) -> int:
    t, n = document_to_two_ideal(_load(args.file))
    t2, n2 = document_to_two_ideal(_load(args.file2))
    if t2 != t:
        raise InputError("the two ideal documents have different base "
                         "tables")
    _header("equiv-ideals", args.cap, [args.file, args.file2])
    cert = ideals_equivalent(t, n, n2, args.cap)
    _emit(cert.to_json_dict())
    return _status_exit(cert.status)


def _cmd_check_fs(args) -> int:
    doc = _load(args.file)
    if doc.kind == "witness-bundle":
        t, fs, k, c, eta, epsilon = document_to_witness_bundle(doc)
        _header("check-fs", args.cap, [args.file])
        cert = check_grandis_i(t, fs, k, c, eta, epsilon, cap=args.cap)
        _emit(cert.to_json_dict())
        return _status_exit(cert.status)
    if doc.kind == "factorization_system" and args.fs is None:
        t, fs = document_to_fs(doc)
    else:
        t = document_to_two_category(doc)
        fs = _fs_of(args, t)
    _header("check-fs", args.cap, [args.file])
    cert = validate_fs(t, fs, args.cap)
    _emit(cert.to_json_dict())
    return _status_exit(cert.status)


def _cmd_check_fibration(args) -> int:
    doc = _load(args.file)
    if doc.kind == "factorization_system" and args.fs is None:
        t, fs = document_to_fs(doc)
    else:
        t = document_to_two_category(doc)
        fs = _fs_of(args, t)
    _header("check-fibration", args.cap, [args.file])
    cert = check_weak_two_fibration(t, fs, args.direction, args.cap)
    _emit(cert.to_json_dict())
    return _status_exit(cert.status)


def _cmd_check_rofs(args) -> int:
    t, n = _base_and_ideal(args)
    fs = _fs_of(args, t)
    _header("check-rofs", args.cap, [args.file])
    cert = validate_rofs(t, n, fs.left_class, fs.right_class, args.cap)
    _emit(cert.to_json_dict())
    return _status_exit(cert.status)


def _cmd_check_exact(args) -> int:
    weak = args.mode.startswith("weak-")
    _header("check-exact", args.cap, [args.file])
    if args.mode.endswith("puppe"):
        doc = _load(args.file)
        t = document_to_two_category(doc)
        report = check_puppe(t, weak=weak, cap=args.cap)
    else:
        t, n = _base_and_ideal(args)
        report = check_grandis_ii(t, n, weak=weak, cap=args.cap)
    for _, cert in report.checks:
        _emit(cert.to_json_dict())
    _emit({"mode": report.mode, "status": report.status})
    return _status_exit(report.status)


def _cmd_fs_from_ideal(args) -> int:
    t, n = _base_and_ideal(args)
    fs, k, c, eta, epsilon = fs_from_ideal(t, n, cap=args.cap)
    _write_product(witness_bundle_to_document(t, fs, k, c, eta, epsilon),
                   args.out)
    return PASS


def _cmd_ideal_from_fs(args) -> int:
    t, fs, k, _, _, _ = document_to_witness_bundle(_load(args.file))
    n = ideal_from_fs(t, fs, k)
    _write_product(two_ideal_to_document(t, n), args.out)
    return PASS


def _cmd_three_pieces(args) -> int:
    t, n = _base_and_ideal(args)
    _header("three-pieces", args.cap, [args.file])
    pieces = three_pieces(t, n, args.arrow, cap=args.cap)
    _emit(dataclasses.asdict(pieces))
    return PASS


def _cmd_oracle_1cat(args) -> int:
    doc = _load(args.file)
    _header("oracle-1cat", args.cap, [args.file])
    if args.mode.endswith("puppe"):
        cert = puppe_exact_1cat(document_to_finite_category(doc))
    elif doc.kind == "one_ideal":
        c1, ideal = document_to_one_ideal(doc)
        cert = grandis_exact_1cat(c1, ideal)
    else:
        c1 = document_to_finite_category(doc)
        cert = grandis_exact_1cat(c1, zero_ideal_1cat(c1))
    _emit(cert.to_json_dict())
    return _status_exit(cert.status)


def _cmd_mutate(args) -> int:
    doc = _load(args.file)
    base: TwoCategory | None = None
    if doc.kind == "two_category":
        entity: Any = document_to_two_category(doc)
    elif doc.kind == "two_ideal":
        base, n = document_to_two_ideal(doc)
        entity = (base, n)
    elif doc.kind == "factorization_system":
        base, fs = document_to_fs(doc)
        entity = (base, fs)
    elif doc.kind == "pseudofunctor":
        entity = document_to_pseudofunctor(doc)
    elif doc.kind == "pseudonatural":
        entity = document_to_pseudonatural(doc)
    else:
        raise InputError(f"cannot mutate documents of kind {doc.kind}")
    mutated = mutate(entity, args.operator, args.seed)
    if doc.kind == "two_category":
        out = two_category_to_document(mutated)
    elif doc.kind == "two_ideal":
        out = two_ideal_to_document(base, mutated)
    elif doc.kind == "factorization_system":
        out = fs_to_document(base, mutated)
    elif doc.kind == "pseudofunctor":
        out = pseudofunctor_to_document(mutated)
    else:
        out = pseudonatural_to_document(mutated)
    _write_product(out, args.out)
    return PASS


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twoexact",
        description="Verify and compute two-dimensional exactness "
                    "structure on finite strict 2-categories.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, *, file: bool = True, arrow: bool = False,
            pair: bool = False, second_file: bool = False,
            operator: bool = False, recipe: bool = False,
            direction: bool = False, mode: tuple[str, ...] | None = None,
            out: bool = False) -> argparse.ArgumentParser:
        p = sub.add_parser(name)
        p.set_defaults(handler=handler)
        if recipe:
            p.add_argument("recipe", nargs="+",
                           help="generator name and integer arguments, "
                                "wrappers first (e.g. locally-discrete "
                                "partial-bijections 2)")
        if file:
            p.add_argument("file", help="input document path")
        if second_file:
            p.add_argument("file2", help="second input document path")
        if arrow:
            p.add_argument("arrow", help="1-cell identifier")
        if pair:
            p.add_argument("left", help="left 1-cell of the parallel pair")
            p.add_argument("right",
                           help="right 1-cell of the parallel pair")
        if operator:
            p.add_argument("operator", choices=MUTATION_OPERATORS)
            p.add_argument("--seed", type=int, default=0)
        p.add_argument("--ideal", default=None,
                       help="two_ideal document path")
        p.add_argument("--fs", default=None,
                       help="factorization_system document path")
        p.add_argument("--cap", type=int, default=None,
                       help="search budget; omitted means unbounded")
        if mode:
            p.add_argument("--mode", choices=mode, default=mode[0])
        if direction:
            p.add_argument("--direction", choices=("dom", "cod"),
                           required=True)
        if out:
            p.add_argument("--out", default=None,
                           help="write the produced document here instead "
                                "of stdout")
        return p

    add("validate", _cmd_validate)
    add("gen", _cmd_gen, file=False, recipe=True, out=True)
    add("kernel", _cmd_kernel, arrow=True)
    add("cokernel", _cmd_cokernel, arrow=True)
    add("biisoinserter", _cmd_biisoinserter, pair=True)
    add("check-ideal", _cmd_check_ideal)
    add("check-closed", _cmd_check_closed)
    add("equiv-ideals", _cmd_equiv_ideals, second_file=True)
    add("check-fs", _cmd_check_fs)
    add("check-fibration", _cmd_check_fibration, direction=True)
    add("check-rofs", _cmd_check_rofs)
    add("check-exact", _cmd_check_exact,
        mode=("grandis", "puppe", "weak-grandis", "weak-puppe"))
    add("fs-from-ideal", _cmd_fs_from_ideal, out=True)
    add("ideal-from-fs", _cmd_ideal_from_fs, out=True)
    add("three-pieces", _cmd_three_pieces, arrow=True)
    add("oracle-1cat", _cmd_oracle_1cat, mode=("grandis", "puppe"))
    add("mutate", _cmd_mutate, operator=True, out=True)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except CapExceeded as exc:
        _emit({"status": "inconclusive", "detail": str(exc)})
        return INCONCLUSIVE


if __name__ == "__main__":
    raise SystemExit(main())
