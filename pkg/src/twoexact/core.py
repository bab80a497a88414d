"""Finite strict 2-categories presented as explicit total tables.

A two-category here is a finite collection of objects, 1-cells and 2-cells,
together with total lookup tables for 1-cell composition, vertical composition
of 2-cells and whiskering of 2-cells by 1-cells on either side.  Horizontal
composition of 2-cells is not stored; it is derived from whiskering and
vertical composition.  Equality of cells is equality of identifiers, and every
search in the package iterates cells in the order the tables list them, so all
results are deterministic for a given presentation.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterator, Mapping


class InputError(Exception):
    """Raised when input data is malformed: dangling identifiers, missing or
    extra table entries, or records that do not describe cells at all.

    Distinct from a failing :class:`Certificate`: a certificate reports that a
    well-formed structure violates a law, while this exception reports that the
    data does not present a structure in the first place.
    """


class CapExceeded(Exception):
    """Raised internally when a configured search cap is hit before the search
    concluded; callers that emit certificates convert it to an inconclusive
    certificate rather than letting it escape."""

    def __init__(self, context: str, cap: int):
        super().__init__(f"search cap {cap} exceeded during {context}")
        self.context = context
        self.cap = cap


class Budget:
    """Counts quantifier instances consumed by a search against an optional cap."""

    def __init__(self, cap: int | None, context: str):
        self.cap = cap
        self.context = context
        self.spent = 0

    def tick(self, n: int = 1) -> None:
        self.spent += n
        if self.cap is not None and self.spent > self.cap:
            raise CapExceeded(self.context, self.cap)


@dataclass(frozen=True)
class Certificate:
    """Machine-checkable outcome of one check.

    ``status`` is ``"pass"``, ``"fail"`` or ``"inconclusive"`` (a search cap
    was exhausted).  On pass, ``witness`` carries the cells realizing the
    property; on fail, ``counterexample`` carries the violating cell tuple and
    the tag of the violated clause so the violation can be replayed.
    """

    check: str
    status: str
    witness: Any = None
    counterexample: Any = None
    detail: Any = None

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"check": self.check, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.detail is not None:
            out["detail"] = self.detail
        return out


def _fail(check: str, clause: str, **cells: Any) -> Certificate:
    return Certificate(check, "fail", counterexample={"clause": clause, "cells": cells})


def _inconclusive(check: str, exc: CapExceeded) -> Certificate:
    return Certificate(
        check, "inconclusive",
        detail={"reason": "cap exceeded", "context": exc.context, "cap": exc.cap},
    )


@dataclass(frozen=True)
class TwoCategory:
    """A strict 2-category as total tables over finite cell inventories.

    ``one_cells`` and ``two_cells`` are ``(id, src, tgt)`` triples; ``comp1``
    maps each composable pair ``(g, f)`` to ``g∘f``; ``vcomp`` maps each
    vertically composable pair ``(b, a)`` to ``b·a`` (``b`` after ``a``);
    ``lwhisker`` maps ``(h, a)`` to ``h⋆a`` and ``rwhisker`` maps ``(a, e)``
    to ``a⋆e``.
    """

    objects: tuple[str, ...]
    one_cells: tuple[tuple[str, str, str], ...]
    comp1: Mapping[tuple[str, str], str]
    id1: Mapping[str, str]
    two_cells: tuple[tuple[str, str, str], ...]
    vcomp: Mapping[tuple[str, str], str]
    id2: Mapping[str, str]
    lwhisker: Mapping[tuple[str, str], str]
    rwhisker: Mapping[tuple[str, str], str]

    # -- inventories -------------------------------------------------------

    @cached_property
    def one_ids(self) -> tuple[str, ...]:
        return tuple(i for i, _, _ in self.one_cells)

    @cached_property
    def two_ids(self) -> tuple[str, ...]:
        return tuple(i for i, _, _ in self.two_cells)

    @cached_property
    def src1(self) -> dict[str, str]:
        return {i: s for i, s, _ in self.one_cells}

    @cached_property
    def tgt1(self) -> dict[str, str]:
        return {i: t for i, _, t in self.one_cells}

    @cached_property
    def src2(self) -> dict[str, str]:
        return {i: s for i, s, _ in self.two_cells}

    @cached_property
    def tgt2(self) -> dict[str, str]:
        return {i: t for i, _, t in self.two_cells}

    @cached_property
    def _hom1(self) -> dict[tuple[str, str], tuple[str, ...]]:
        out: dict[tuple[str, str], list[str]] = {}
        for i, s, t in self.one_cells:
            out.setdefault((s, t), []).append(i)
        return {k: tuple(v) for k, v in out.items()}

    @cached_property
    def _hom2(self) -> dict[tuple[str, str], tuple[str, ...]]:
        out: dict[tuple[str, str], list[str]] = {}
        for i, s, t in self.two_cells:
            out.setdefault((s, t), []).append(i)
        return {k: tuple(v) for k, v in out.items()}

    def hom1(self, a: str, b: str) -> tuple[str, ...]:
        """All 1-cells from object ``a`` to object ``b``, in table order."""
        return self._hom1.get((a, b), ())

    def hom2(self, f: str, g: str) -> tuple[str, ...]:
        """All 2-cells from 1-cell ``f`` to 1-cell ``g``, in table order."""
        return self._hom2.get((f, g), ())

    def endo2(self, f: str) -> tuple[str, ...]:
        return self.hom2(f, f)

    # -- operations --------------------------------------------------------

    def cmp1(self, g: str, f: str) -> str:
        """The composite ``g∘f`` (``f`` then ``g``)."""
        try:
            return self.comp1[(g, f)]
        except KeyError:
            raise InputError(f"1-cells not composable: ({g}, {f})") from None

    def vc(self, b: str, a: str) -> str:
        """The vertical composite ``b·a`` (``a`` then ``b``)."""
        try:
            return self.vcomp[(b, a)]
        except KeyError:
            raise InputError(f"2-cells not vertically composable: ({b}, {a})") from None

    def lw(self, h: str, a: str) -> str:
        """The left whiskering ``h⋆a`` of 2-cell ``a`` by 1-cell ``h``."""
        try:
            return self.lwhisker[(h, a)]
        except KeyError:
            raise InputError(f"left whiskering undefined: ({h}, {a})") from None

    def rw(self, a: str, e: str) -> str:
        """The right whiskering ``a⋆e`` of 2-cell ``a`` by 1-cell ``e``."""
        try:
            return self.rwhisker[(a, e)]
        except KeyError:
            raise InputError(f"right whiskering undefined: ({a}, {e})") from None

    def id1_of(self, obj: str) -> str:
        try:
            return self.id1[obj]
        except KeyError:
            raise InputError(f"no identity 1-cell recorded for object {obj}") from None

    def id2_of(self, f: str) -> str:
        try:
            return self.id2[f]
        except KeyError:
            raise InputError(f"no identity 2-cell recorded for 1-cell {f}") from None

    def hc(self, b: str, a: str) -> str:
        """Horizontal composite ``b∘a`` of 2-cells, derived as ``(b⋆f')·(g⋆a)``
        where ``a: f ⇒ f'`` and ``b: g ⇒ g'``."""
        f2 = self.tgt2[a]
        g = self.src2[b]
        return self.vc(self.rw(b, f2), self.lw(g, a))

    def vc_chain(self, *cells: str) -> str:
        """Vertical composite of a chain listed target-to-source,
        ``vc_chain(c, b, a) = c·b·a``."""
        if not cells:
            raise InputError("empty vertical chain")
        out = cells[-1]
        for c in reversed(cells[:-1]):
            out = self.vc(c, out)
        return out

    def cmp1_chain(self, *cells: str) -> str:
        """Composite of a 1-cell chain listed target-to-source."""
        if not cells:
            raise InputError("empty 1-cell chain")
        out = cells[-1]
        for c in reversed(cells[:-1]):
            out = self.cmp1(c, out)
        return out

    # -- invertibility -----------------------------------------------------

    @cached_property
    def inverse2(self) -> dict[str, str]:
        """Maps each invertible 2-cell to its (unique) inverse."""
        out: dict[str, str] = {}
        for a, f, g in self.two_cells:
            if a in out:
                continue
            for b in self.hom2(g, f):
                if (self.vcomp.get((b, a)) == self.id2.get(f)
                        and self.vcomp.get((a, b)) == self.id2.get(g)):
                    out[a] = b
                    out[b] = a
                    break
        return out

    def is_invertible2(self, a: str) -> bool:
        return a in self.inverse2

    def inv(self, a: str) -> str:
        try:
            return self.inverse2[a]
        except KeyError:
            raise InputError(f"2-cell {a} is not invertible") from None

    def iso2(self, f: str, g: str) -> tuple[str, ...]:
        """All invertible 2-cells from ``f`` to ``g``, in table order."""
        return tuple(a for a in self.hom2(f, g) if a in self.inverse2)

    def parallel_pairs(self) -> Iterator[tuple[str, str]]:
        """Ordered pairs of parallel 1-cells (same source and target objects),
        in table order."""
        for fs in self._hom1.values():
            for f in fs:
                for g in fs:
                    yield f, g


# ---------------------------------------------------------------------------
# structural shape checking (raises InputError; not a certificate concern)
# ---------------------------------------------------------------------------

def check_shape(t: TwoCategory) -> None:
    """Verify referential integrity and table totality, raising
    :class:`InputError` on the first defect found.

    Covers: duplicate identifiers; 1-cell/2-cell records referring to unknown
    objects/1-cells; non-parallel 2-cell boundaries; missing, extra or
    dangling entries in the composition, identity and whiskering tables.
    Boundary correctness of table *values* is a law matter left to
    :func:`validate_two_category`.
    """
    obs = set(t.objects)
    if len(obs) != len(t.objects):
        raise InputError("duplicate object identifiers")
    if len(set(t.one_ids)) != len(t.one_ids):
        raise InputError("duplicate 1-cell identifiers")
    if len(set(t.two_ids)) != len(t.two_ids):
        raise InputError("duplicate 2-cell identifiers")
    ones = set(t.one_ids)
    twos = set(t.two_ids)

    for i, s, tt in t.one_cells:
        if s not in obs or tt not in obs:
            raise InputError(f"1-cell {i} has unknown boundary object ({s}, {tt})")
    for i, s, tt in t.two_cells:
        if s not in ones or tt not in ones:
            raise InputError(f"2-cell {i} has unknown boundary 1-cell ({s}, {tt})")
        if (t.src1[s], t.tgt1[s]) != (t.src1[tt], t.tgt1[tt]):
            raise InputError(f"2-cell {i} has non-parallel boundary ({s}, {tt})")

    if set(t.id1) != obs:
        raise InputError("id1 table is not indexed by exactly the objects")
    for obj, f in t.id1.items():
        if f not in ones:
            raise InputError(f"id1[{obj}] = {f} is not a 1-cell")
    if set(t.id2) != ones:
        raise InputError("id2 table is not indexed by exactly the 1-cells")
    for f, a in t.id2.items():
        if a not in twos:
            raise InputError(f"id2[{f}] = {a} is not a 2-cell")

    comp_keys = {(g, f) for g, f in itertools.product(t.one_ids, t.one_ids)
                 if t.src1[g] == t.tgt1[f]}
    if set(t.comp1) != comp_keys:
        missing = comp_keys - set(t.comp1)
        extra = set(t.comp1) - comp_keys
        raise InputError(
            f"comp1 keys do not match the composable pairs "
            f"(missing {sorted(missing)[:3]}..., extra {sorted(extra)[:3]}...)"
            if missing or extra else "comp1 keys malformed")
    for k, v in t.comp1.items():
        if v not in ones:
            raise InputError(f"comp1[{k}] = {v} is not a 1-cell")

    vkeys = set()
    for b, sb, tb in t.two_cells:
        for a, sa, ta in t.two_cells:
            if sb == ta:
                vkeys.add((b, a))
    if set(t.vcomp) != vkeys:
        missing = vkeys - set(t.vcomp)
        extra = set(t.vcomp) - vkeys
        raise InputError(
            f"vcomp keys do not match the vertically composable pairs "
            f"(missing {len(missing)}, extra {len(extra)})")
    for k, v in t.vcomp.items():
        if v not in twos:
            raise InputError(f"vcomp[{k}] = {v} is not a 2-cell")

    lkeys = {(h, a) for h in t.one_ids for a in t.two_ids
             if t.src1[h] == t.tgt1[t.src2[a]]}
    if set(t.lwhisker) != lkeys:
        raise InputError("lwhisker keys do not match the composable (1-cell, 2-cell) pairs")
    for k, v in t.lwhisker.items():
        if v not in twos:
            raise InputError(f"lwhisker[{k}] = {v} is not a 2-cell")

    rkeys = {(a, e) for a in t.two_ids for e in t.one_ids
             if t.tgt1[e] == t.src1[t.src2[a]]}
    if set(t.rwhisker) != rkeys:
        raise InputError("rwhisker keys do not match the composable (2-cell, 1-cell) pairs")
    for k, v in t.rwhisker.items():
        if v not in twos:
            raise InputError(f"rwhisker[{k}] = {v} is not a 2-cell")


# ---------------------------------------------------------------------------
# law validation
# ---------------------------------------------------------------------------

def validate_two_category(t: TwoCategory) -> Certificate:
    """Check every strict 2-category law over the given tables.

    Returns a pass certificate, or a fail certificate citing the first
    violated clause (in a fixed deterministic clause order) with the cells
    that violate it.  Raises :class:`InputError` for shape defects.
    """
    check_shape(t)
    name = "validate_two_category"

    # identity 1-cells: boundaries and unit laws
    for obj in t.objects:
        e = t.id1[obj]
        if not (t.src1[e] == obj and t.tgt1[e] == obj):
            return _fail(name, "id1-boundary", object=obj, id1=e)
    for f in t.one_ids:
        if t.comp1[(f, t.id1[t.src1[f]])] != f:
            return _fail(name, "comp1-unit", one_cell=f, side="right")
        if t.comp1[(t.id1[t.tgt1[f]], f)] != f:
            return _fail(name, "comp1-unit", one_cell=f, side="left")

    # composite boundaries
    for (g, f), gf in t.comp1.items():
        if not (t.src1[gf] == t.src1[f] and t.tgt1[gf] == t.tgt1[g]):
            return _fail(name, "comp1-boundary", g=g, f=f, composite=gf)

    # associativity of 1-cell composition
    for h in t.one_ids:
        for g in t.one_ids:
            if t.src1[h] != t.tgt1[g]:
                continue
            hg = t.comp1[(h, g)]
            for f in t.one_ids:
                if t.src1[g] != t.tgt1[f]:
                    continue
                if t.comp1[(hg, f)] != t.comp1[(h, t.comp1[(g, f)])]:
                    return _fail(name, "comp1-assoc", h=h, g=g, f=f)

    # identity 2-cells: boundaries and vertical unit laws
    for f in t.one_ids:
        i = t.id2[f]
        if not (t.src2[i] == f and t.tgt2[i] == f):
            return _fail(name, "id2-boundary", one_cell=f, id2=i)
    for a, sa, ta in t.two_cells:
        if t.vcomp[(a, t.id2[sa])] != a:
            return _fail(name, "vcomp-unit", two_cell=a, side="right")
        if t.vcomp[(t.id2[ta], a)] != a:
            return _fail(name, "vcomp-unit", two_cell=a, side="left")

    # vertical composite boundaries
    for (b, a), ba in t.vcomp.items():
        if not (t.src2[ba] == t.src2[a] and t.tgt2[ba] == t.tgt2[b]):
            return _fail(name, "vcomp-boundary", b=b, a=a, composite=ba)

    # associativity of vertical composition (within each hom-category)
    by_tgt: dict[str, list[str]] = {}
    for a, _, ta in t.two_cells:
        by_tgt.setdefault(ta, []).append(a)
    for c in t.two_ids:
        for b in by_tgt.get(t.src2[c], ()):
            cb = t.vcomp[(c, b)]
            for a in by_tgt.get(t.src2[b], ()):
                if t.vcomp[(cb, a)] != t.vcomp[(c, t.vcomp[(b, a)])]:
                    return _fail(name, "vcomp-assoc", c=c, b=b, a=a)

    # whisker boundaries
    for (h, a), ha in t.lwhisker.items():
        want_s = t.comp1[(h, t.src2[a])]
        want_t = t.comp1[(h, t.tgt2[a])]
        if not (t.src2[ha] == want_s and t.tgt2[ha] == want_t):
            return _fail(name, "lwhisker-boundary", h=h, a=a, result=ha)
    for (a, e), ae in t.rwhisker.items():
        want_s = t.comp1[(t.src2[a], e)]
        want_t = t.comp1[(t.tgt2[a], e)]
        if not (t.src2[ae] == want_s and t.tgt2[ae] == want_t):
            return _fail(name, "rwhisker-boundary", a=a, e=e, result=ae)

    # whiskering is functorial in the 2-cell
    for (h, a) in t.lwhisker:
        if a == t.id2[t.src2[a]] and t.lwhisker[(h, a)] != t.id2[t.comp1[(h, t.src2[a])]]:
            return _fail(name, "lwhisker-id2", h=h, a=a)
    for (a, e) in t.rwhisker:
        if a == t.id2[t.src2[a]] and t.rwhisker[(a, e)] != t.id2[t.comp1[(t.src2[a], e)]]:
            return _fail(name, "rwhisker-id2", a=a, e=e)
    for (b, a), ba in t.vcomp.items():
        tb_tgt = t.tgt1[t.src2[a]]
        for h in t.one_ids:
            if t.src1[h] != tb_tgt:
                continue
            if t.lwhisker[(h, ba)] != t.vcomp[(t.lwhisker[(h, b)], t.lwhisker[(h, a)])]:
                return _fail(name, "lwhisker-vcomp", h=h, b=b, a=a)
        sb_src = t.src1[t.src2[a]]
        for e in t.one_ids:
            if t.tgt1[e] != sb_src:
                continue
            if t.rwhisker[(ba, e)] != t.vcomp[(t.rwhisker[(b, e)], t.rwhisker[(a, e)])]:
                return _fail(name, "rwhisker-vcomp", b=b, a=a, e=e)

    # whiskering is compatible with 1-cell composition and identities
    for a in t.two_ids:
        fa = t.src2[a]
        if t.lwhisker[(t.id1[t.tgt1[fa]], a)] != a:
            return _fail(name, "lwhisker-id1", a=a)
        if t.rwhisker[(a, t.id1[t.src1[fa]])] != a:
            return _fail(name, "rwhisker-id1", a=a)
    for (h, a) in t.lwhisker:
        for h2 in t.one_ids:
            if t.src1[h2] != t.tgt1[h]:
                continue
            if t.lwhisker[(t.comp1[(h2, h)], a)] != t.lwhisker[(h2, t.lwhisker[(h, a)])]:
                return _fail(name, "lwhisker-comp1", h2=h2, h=h, a=a)
    for (a, e) in t.rwhisker:
        for e2 in t.one_ids:
            if t.tgt1[e2] != t.src1[e]:
                continue
            if t.rwhisker[(a, t.comp1[(e, e2)])] != t.rwhisker[(t.rwhisker[(a, e)], e2)]:
                return _fail(name, "rwhisker-comp1", a=a, e=e, e2=e2)

    # middle-four interchange, in the derived-horizontal-composition form
    for b in t.two_ids:
        g, g2 = t.src2[b], t.tgt2[b]
        mid = t.src1[g]
        for a in t.two_ids:
            fa, fa2 = t.src2[a], t.tgt2[a]
            if t.tgt1[fa] != mid:
                continue
            lhs = t.vcomp[(t.rwhisker[(b, fa2)], t.lwhisker[(g, a)])]
            rhs = t.vcomp[(t.lwhisker[(g2, a)], t.rwhisker[(b, fa)])]
            if lhs != rhs:
                return _fail(name, "interchange", b=b, a=a)

    return Certificate(name, "pass", witness={
        "objects": len(t.objects), "one_cells": len(t.one_cells),
        "two_cells": len(t.two_cells)})


# ---------------------------------------------------------------------------
# pasting expressions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Gen:
    """A named 2-cell."""
    cell: str


@dataclass(frozen=True)
class Id2:
    """The identity 2-cell on a 1-cell."""
    one_cell: str


@dataclass(frozen=True)
class VComp:
    """Vertical composite ``after · before``."""
    after: "PastingExpr"
    before: "PastingExpr"


@dataclass(frozen=True)
class LWhisker:
    """Left whiskering ``post ⋆ expr`` by a 1-cell."""
    post: str
    expr: "PastingExpr"


@dataclass(frozen=True)
class RWhisker:
    """Right whiskering ``expr ⋆ pre`` by a 1-cell."""
    expr: "PastingExpr"
    pre: str


@dataclass(frozen=True)
class Inverse:
    """Vertical inverse of an invertible pasting."""
    expr: "PastingExpr"


PastingExpr = Gen | Id2 | VComp | LWhisker | RWhisker | Inverse


def paste(t: TwoCategory, expr: PastingExpr) -> str:
    """Evaluate a pasting expression to the 2-cell it denotes.

    Boundary mismatches and inversion of a non-invertible cell raise
    :class:`InputError`.
    """
    if isinstance(expr, Gen):
        if expr.cell not in t.src2:
            raise InputError(f"unknown 2-cell {expr.cell}")
        return expr.cell
    if isinstance(expr, Id2):
        return t.id2_of(expr.one_cell)
    if isinstance(expr, VComp):
        a = paste(t, expr.before)
        b = paste(t, expr.after)
        if t.src2[b] != t.tgt2[a]:
            raise InputError(
                f"vertical composite boundary mismatch: {b} after {a}")
        return t.vc(b, a)
    if isinstance(expr, LWhisker):
        a = paste(t, expr.expr)
        return t.lw(expr.post, a)
    if isinstance(expr, RWhisker):
        a = paste(t, expr.expr)
        return t.rw(a, expr.pre)
    if isinstance(expr, Inverse):
        return t.inv(paste(t, expr.expr))
    raise InputError(f"not a pasting expression: {expr!r}")


# ---------------------------------------------------------------------------
# dualization
# ---------------------------------------------------------------------------

_DUAL_CACHE: dict[int, tuple["TwoCategory", "TwoCategory"]] = {}


def dualize(t: TwoCategory) -> TwoCategory:
    """The 1-cell dual: reverse 1-cells, keep 2-cell directions.

    Composition reverses (``g∘f`` becomes ``f∘g``), left and right whiskering
    trade places, and null/kernel notions turn into their co-versions.
    Applying it twice gives back the original presentation (the same object,
    via a cache, so the involution is an identity rather than merely an
    isomorphism).
    """
    hit = _DUAL_CACHE.get(id(t))
    if hit is not None and hit[0] is t:
        return hit[1]
    d = TwoCategory(
        objects=t.objects,
        one_cells=tuple((i, tt, s) for i, s, tt in t.one_cells),
        comp1={(f, g): v for (g, f), v in t.comp1.items()},
        id1=dict(t.id1),
        two_cells=t.two_cells,
        vcomp=dict(t.vcomp),
        id2=dict(t.id2),
        lwhisker={(e, a): v for (a, e), v in t.rwhisker.items()},
        rwhisker={(a, h): v for (h, a), v in t.lwhisker.items()},
    )
    _DUAL_CACHE[id(t)] = (t, d)
    _DUAL_CACHE[id(d)] = (d, t)
    return d


# ---------------------------------------------------------------------------
# elementary predicates
# ---------------------------------------------------------------------------

def is_faithful(t: TwoCategory, f: str) -> Certificate:
    """Whether left whiskering by ``f`` is injective on every hom-set of
    2-cells landing in the source of ``f``."""
    if f not in t.src1:
        raise InputError(f"unknown 1-cell {f}")
    name = "is_faithful"
    a_obj = t.src1[f]
    seen: dict[tuple[str, str, str], str] = {}
    for a, sa, ta in t.two_cells:
        if t.tgt1[sa] != a_obj:
            continue
        key = (sa, ta, t.lwhisker[(f, a)])
        if key in seen and seen[key] != a:
            return _fail(name, "whisker-collision", one_cell=f,
                         first=seen[key], second=a, whiskered=key[2])
        seen.setdefault(key, a)
    return Certificate(name, "pass", witness={"one_cell": f})


def is_cofaithful(t: TwoCategory, f: str) -> Certificate:
    """Whether right whiskering by ``f`` is injective; the dual of
    :func:`is_faithful`."""
    cert = is_faithful(dualize(t), f)
    return Certificate("is_cofaithful", cert.status, cert.witness, cert.counterexample)


def is_equivalence(t: TwoCategory, f: str) -> Certificate:
    """Search for a pseudo-inverse: ``g`` with invertible 2-cells
    ``id ⇒ g∘f`` and ``f∘g ⇒ id``."""
    if f not in t.src1:
        raise InputError(f"unknown 1-cell {f}")
    name = "is_equivalence"
    a_obj, b_obj = t.src1[f], t.tgt1[f]
    for g in t.hom1(b_obj, a_obj):
        units = t.iso2(t.id1[a_obj], t.comp1[(g, f)])
        if not units:
            continue
        counits = t.iso2(t.comp1[(f, g)], t.id1[b_obj])
        if counits:
            return Certificate(name, "pass", witness={
                "one_cell": f, "inverse": g,
                "unit": units[0], "counit": counits[0]})
    return Certificate(name, "fail", counterexample={
        "clause": "no-pseudo-inverse", "cells": {"one_cell": f}})


def equivalences(t: TwoCategory) -> tuple[str, ...]:
    """All 1-cells that pass :func:`is_equivalence`, in table order."""
    return tuple(f for f in t.one_ids if is_equivalence(t, f).ok)


def iso_two_cells(t: TwoCategory, f: str, g: str) -> tuple[str, ...]:
    """All invertible 2-cells ``f ⇒ g``, in table order."""
    for c in (f, g):
        if c not in t.src1:
            raise InputError(f"unknown 1-cell {c}")
    return t.iso2(f, g)


def solve_lwhisker(t: TwoCategory, leg: str, src: str, tgt: str,
                   whiskered: str) -> str:
    """The unique 2-cell ``μ: src ⇒ tgt`` with ``leg ⋆ μ = whiskered``.

    This is how a faithful leg induces 2-cells: existence is the caller's
    universal-property argument, uniqueness is faithfulness.  Raises
    :class:`InputError` when the count is not exactly one.
    """
    found = [mu for mu in t.hom2(src, tgt) if t.lw(leg, mu) == whiskered]
    if len(found) != 1:
        raise InputError(
            f"expected exactly one 2-cell {src} ⇒ {tgt} whiskering to "
            f"{whiskered} under {leg}; found {len(found)}")
    return found[0]


def solve_rwhisker(t: TwoCategory, leg: str, src: str, tgt: str,
                   whiskered: str) -> str:
    """The unique 2-cell ``μ: src ⇒ tgt`` with ``μ ⋆ leg = whiskered``;
    the cofaithful-leg dual of :func:`solve_lwhisker`."""
    found = [mu for mu in t.hom2(src, tgt) if t.rw(mu, leg) == whiskered]
    if len(found) != 1:
        raise InputError(
            f"expected exactly one 2-cell {src} ⇒ {tgt} whiskering to "
            f"{whiskered} under {leg}; found {len(found)}")
    return found[0]


# ---------------------------------------------------------------------------
# identifier ordering
# ---------------------------------------------------------------------------

def natural_key(s: str) -> tuple:
    """Sort key comparing digit runs numerically, so ``f2`` sorts before
    ``f10``.  The canonical ordering for identifier lists everywhere cell
    names are emitted or classes are enumerated."""
    parts: list[tuple[int, object]] = []
    for is_digit, run in itertools.groupby(s, str.isdigit):
        text = "".join(run)
        parts.append((0, int(text)) if is_digit else (1, text))
    return tuple(parts)


# ---------------------------------------------------------------------------
# counterexample replay
# ---------------------------------------------------------------------------

def replay_two_category_counterexample(t: TwoCategory, cert: Certificate) -> bool:
    """Re-run the clause cited by a fail certificate of
    :func:`validate_two_category` on the cited cells; True iff the violation
    reproduces."""
    if cert.status != "fail" or cert.check != "validate_two_category":
        raise InputError("not a validate_two_category fail certificate")
    clause = cert.counterexample["clause"]
    c = cert.counterexample["cells"]
    if clause == "id1-boundary":
        e = c["id1"]
        return not (t.src1[e] == c["object"] == t.tgt1[e])
    if clause == "comp1-unit":
        f = c["one_cell"]
        if c["side"] == "right":
            return t.comp1[(f, t.id1[t.src1[f]])] != f
        return t.comp1[(t.id1[t.tgt1[f]], f)] != f
    if clause == "comp1-boundary":
        gf = c["composite"]
        return not (t.src1[gf] == t.src1[c["f"]] and t.tgt1[gf] == t.tgt1[c["g"]])
    if clause == "comp1-assoc":
        h, g, f = c["h"], c["g"], c["f"]
        return t.comp1[(t.comp1[(h, g)], f)] != t.comp1[(h, t.comp1[(g, f)])]
    if clause == "id2-boundary":
        i = c["id2"]
        return not (t.src2[i] == c["one_cell"] == t.tgt2[i])
    if clause == "vcomp-unit":
        a = c["two_cell"]
        if c["side"] == "right":
            return t.vcomp[(a, t.id2[t.src2[a]])] != a
        return t.vcomp[(t.id2[t.tgt2[a]], a)] != a
    if clause == "vcomp-boundary":
        ba = c["composite"]
        return not (t.src2[ba] == t.src2[c["a"]] and t.tgt2[ba] == t.tgt2[c["b"]])
    if clause == "vcomp-assoc":
        cc, b, a = c["c"], c["b"], c["a"]
        return t.vcomp[(t.vcomp[(cc, b)], a)] != t.vcomp[(cc, t.vcomp[(b, a)])]
    if clause == "lwhisker-boundary":
        ha = c["result"]
        h, a = c["h"], c["a"]
        return not (t.src2[ha] == t.comp1[(h, t.src2[a])]
                    and t.tgt2[ha] == t.comp1[(h, t.tgt2[a])])
    if clause == "rwhisker-boundary":
        ae = c["result"]
        a, e = c["a"], c["e"]
        return not (t.src2[ae] == t.comp1[(t.src2[a], e)]
                    and t.tgt2[ae] == t.comp1[(t.tgt2[a], e)])
    if clause == "lwhisker-id2":
        h, a = c["h"], c["a"]
        return t.lwhisker[(h, a)] != t.id2[t.comp1[(h, t.src2[a])]]
    if clause == "rwhisker-id2":
        a, e = c["a"], c["e"]
        return t.rwhisker[(a, e)] != t.id2[t.comp1[(t.src2[a], e)]]
    if clause == "lwhisker-vcomp":
        h, b, a = c["h"], c["b"], c["a"]
        return (t.lwhisker[(h, t.vcomp[(b, a)])]
                != t.vcomp[(t.lwhisker[(h, b)], t.lwhisker[(h, a)])])
    if clause == "rwhisker-vcomp":
        b, a, e = c["b"], c["a"], c["e"]
        return (t.rwhisker[(t.vcomp[(b, a)], e)]
                != t.vcomp[(t.rwhisker[(b, e)], t.rwhisker[(a, e)])])
    if clause == "lwhisker-id1":
        a = c["a"]
        return t.lwhisker[(t.id1[t.tgt1[t.src2[a]]], a)] != a
    if clause == "rwhisker-id1":
        a = c["a"]
        return t.rwhisker[(a, t.id1[t.src1[t.src2[a]]])] != a
    if clause == "lwhisker-comp1":
        h2, h, a = c["h2"], c["h"], c["a"]
        return (t.lwhisker[(t.comp1[(h2, h)], a)]
                != t.lwhisker[(h2, t.lwhisker[(h, a)])])
    if clause == "rwhisker-comp1":
        a, e, e2 = c["a"], c["e"], c["e2"]
        return (t.rwhisker[(a, t.comp1[(e, e2)])]
                != t.rwhisker[(t.rwhisker[(a, e)], e2)])
    if clause == "interchange":
        b, a = c["b"], c["a"]
        g, g2 = t.src2[b], t.tgt2[b]
        fa, fa2 = t.src2[a], t.tgt2[a]
        lhs = t.vcomp[(t.rwhisker[(b, fa2)], t.lwhisker[(g, a)])]
        rhs = t.vcomp[(t.lwhisker[(g2, a)], t.rwhisker[(b, fa)])]
        return lhs != rhs
    raise InputError(f"unknown clause tag {clause}")
