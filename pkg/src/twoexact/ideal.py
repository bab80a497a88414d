"""Two-dimensional ideals of null cells, presented in characterization form.

An ideal consists of a class of null 1-cells, a class of null 2-cells, and a
total *replacement* table assigning to every composite ``b∘n∘a`` around a null
``n`` a null 1-cell ``ñ`` with an invertible comparison 2-cell
``ν: b∘n∘a ⇒ ñ``.  The axioms checked here say the replacements are normalized
on identities, conjugation by the comparisons preserves nullity of 2-cells,
and iterated replacement agrees with direct replacement up to an invertible
null comparison.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from .core import (
    Certificate, Gen, InputError, Inverse, LWhisker, PastingExpr, RWhisker,
    TwoCategory, VComp, _fail, paste,
)


@dataclass(frozen=True)
class TwoIdeal:
    """Null 1-cells, null 2-cells, and the replacement table
    ``(a, n, b) ↦ (ñ, ν)`` for pre-composition by ``a`` and post-composition
    by ``b`` around the null 1-cell ``n``."""

    null_one_cells: tuple[str, ...]
    null_two_cells: tuple[str, ...]
    replacement: Mapping[tuple[str, str, str], tuple[str, str]]

    @cached_property
    def null1(self) -> frozenset[str]:
        return frozenset(self.null_one_cells)

    @cached_property
    def null2(self) -> frozenset[str]:
        return frozenset(self.null_two_cells)

    def is_null1(self, f: str) -> bool:
        return f in self.null1

    def is_null2(self, a: str) -> bool:
        return a in self.null2

    def repl(self, a: str, n: str, b: str) -> tuple[str, str]:
        """The pair ``(ñ, ν)`` replacing ``b∘n∘a``."""
        try:
            return self.replacement[(a, n, b)]
        except KeyError:
            raise InputError(f"no replacement entry for ({a}, {n}, {b})") from None

    def is_invertible_null2(self, t: TwoCategory, cell: str) -> bool:
        return cell in self.null2 and t.is_invertible2(cell)


def dual_ideal(n: TwoIdeal) -> TwoIdeal:
    """The same ideal read in the 1-cell dual: pre- and post-composition
    trade places, so replacement keys flip ``(a, n, b) ↦ (b, n, a)``."""
    return TwoIdeal(
        null_one_cells=n.null_one_cells,
        null_two_cells=n.null_two_cells,
        replacement={(b, x, a): v for (a, x, b), v in n.replacement.items()},
    )


def check_ideal_shape(t: TwoCategory, n: TwoIdeal) -> None:
    """Referential integrity and replacement-table totality."""
    ones = set(t.one_ids)
    twos = set(t.two_ids)
    for f in n.null_one_cells:
        if f not in ones:
            raise InputError(f"null 1-cell {f} is not a 1-cell of the 2-category")
    if len(n.null1) != len(n.null_one_cells):
        raise InputError("duplicate null 1-cell identifiers")
    for a in n.null_two_cells:
        if a not in twos:
            raise InputError(f"null 2-cell {a} is not a 2-cell of the 2-category")
    if len(n.null2) != len(n.null_two_cells):
        raise InputError("duplicate null 2-cell identifiers")
    keys = {
        (a, x, b)
        for x in n.null_one_cells
        for a in t.one_ids if t.tgt1[a] == t.src1[x]
        for b in t.one_ids if t.src1[b] == t.tgt1[x]
    }
    if set(n.replacement) != keys:
        missing = keys - set(n.replacement)
        extra = set(n.replacement) - keys
        raise InputError(
            f"replacement table does not cover exactly the composable triples "
            f"around null 1-cells (missing {len(missing)}, extra {len(extra)})")
    for k, (tilde, nu) in n.replacement.items():
        if tilde not in ones:
            raise InputError(f"replacement[{k}] names unknown 1-cell {tilde}")
        if nu not in twos:
            raise InputError(f"replacement[{k}] names unknown 2-cell {nu}")


def _sandwich(t: TwoCategory, b: str, mid: PastingExpr, a: str) -> PastingExpr:
    """Pasting expression for ``b ⋆ mid ⋆ a`` (whisker on both sides)."""
    return LWhisker(b, RWhisker(mid, a))


def validate_two_ideal(t: TwoCategory, n: TwoIdeal) -> Certificate:
    """Check the ideal axioms, citing the first violated clause.

    Clause order: null 2-cell boundaries, identity closure, vertical-composite
    closure, replacement boundaries/invertibility/nullity, identity
    normalization (ax1), conjugation-nullity for null 2-cells (ax2) and for
    whiskering 2-cells (ax3), and coherence of iterated replacement (ax4).
    """
    check_ideal_shape(t, n)
    name = "validate_two_ideal"

    for mu in n.null_two_cells:
        if t.src2[mu] not in n.null1 or t.tgt2[mu] not in n.null1:
            return _fail(name, "null2-boundary", two_cell=mu,
                         src=t.src2[mu], tgt=t.tgt2[mu])

    for x in n.null_one_cells:
        if t.id2[x] not in n.null2:
            return _fail(name, "closure-id2", null_one_cell=x, id2=t.id2[x])

    for mu in n.null_two_cells:
        src = t.src2[mu]
        for prev in n.null_two_cells:
            if t.tgt2[prev] != src:
                continue
            if t.vcomp[(mu, prev)] not in n.null2:
                return _fail(name, "closure-vcomp", after=mu, before=prev,
                             composite=t.vcomp[(mu, prev)])

    for (a, x, b), (tilde, nu) in n.replacement.items():
        if tilde not in n.null1:
            return _fail(name, "repl-null", a=a, n=x, b=b, tilde=tilde)
        composite = t.cmp1(b, t.cmp1(x, a))
        if not (t.src2[nu] == composite and t.tgt2[nu] == tilde):
            return _fail(name, "repl-boundary", a=a, n=x, b=b, nu=nu)
        if not t.is_invertible2(nu):
            return _fail(name, "repl-invertible", a=a, n=x, b=b, nu=nu)

    # ax1: replacement along identities is the identity comparison
    for x in n.null_one_cells:
        ia = t.id1[t.src1[x]]
        ib = t.id1[t.tgt1[x]]
        tilde, nu = n.replacement[(ia, x, ib)]
        if tilde != x or nu != t.id2[x]:
            return _fail(name, "ax1", n=x, tilde=tilde, nu=nu)

    into: dict[str, list[str]] = {o: [] for o in t.objects}
    outof: dict[str, list[str]] = {o: [] for o in t.objects}
    for f in t.one_ids:
        into[t.tgt1[f]].append(f)
        outof[t.src1[f]].append(f)

    # ax2: conjugating a null 2-cell by the comparisons stays null
    for mu in n.null_two_cells:
        x, x2 = t.src2[mu], t.tgt2[mu]
        for a in into[t.src1[x]]:
            mu_a = t.rwhisker[(mu, a)]
            for b in outof[t.tgt1[x]]:
                _, nu1 = n.replacement[(a, x, b)]
                _, nu2 = n.replacement[(a, x2, b)]
                cell = t.vcomp[(nu2, t.vcomp[
                    (t.lwhisker[(b, mu_a)], t.inv(nu1))])]
                if cell not in n.null2:
                    return _fail(name, "ax2", mu=mu, a=a, b=b, conjugate=cell)

    # ax3: conjugated whiskerings of the null 1-cell by arbitrary 2-cells are null
    for x in n.null_one_cells:
        asrc, atgt = t.src1[x], t.tgt1[x]
        for alpha in t.two_ids:
            a, a2 = t.src2[alpha], t.tgt2[alpha]
            if t.tgt1[a] != asrc:
                continue
            for beta in t.two_ids:
                b, b2 = t.src2[beta], t.tgt2[beta]
                if t.src1[b] != atgt:
                    continue
                _, nu1 = n.replacement[(a, x, b)]
                _, nu2 = n.replacement[(a2, x, b2)]
                mid = t.hc(beta, t.hc(t.id2[x], alpha))
                cell = t.vc(nu2, t.vc(mid, t.inv(nu1)))
                if cell not in n.null2:
                    return _fail(name, "ax3", n=x, alpha=alpha, beta=beta,
                                 conjugate=cell)

    # ax4: iterated replacement agrees with direct replacement
    vcomp, lwhisker, rwhisker, comp1 = (t.vcomp, t.lwhisker, t.rwhisker,
                                        t.comp1)
    repl, null2s, inv2 = n.replacement, n.null2, t.inverse2
    post = {b: [(b2, comp1[(b2, b)]) for b2 in outof[t.tgt1[b]]]
            for b in t.one_ids}
    for (a, x, b), (m, nu1) in repl.items():
        inv_nu1 = inv2[nu1]
        pre = into[t.src1[a]]
        row = post[b]
        for a2 in pre:
            aa = comp1[(a, a2)]
            inner_a = rwhisker[(inv_nu1, a2)]
            for b2, bb in row:
                cell = vcomp[(repl[(aa, x, bb)][1], vcomp[
                    (lwhisker[(b2, inner_a)], inv2[repl[(a2, m, b2)][1]])])]
                if cell not in null2s or cell not in inv2:
                    return _fail(name, "ax4", a=a, n=x, b=b, a2=a2, b2=b2,
                                 comparison=cell)

    return Certificate(name, "pass", witness={
        "null_one_cells": len(n.null_one_cells),
        "null_two_cells": len(n.null_two_cells),
        "replacement_entries": len(n.replacement)})


def replay_two_ideal_counterexample(t: TwoCategory, n: TwoIdeal,
                                    cert: Certificate) -> bool:
    """Re-run the clause cited by a fail certificate of
    :func:`validate_two_ideal` on the cited cells."""
    if cert.status != "fail" or cert.check != "validate_two_ideal":
        raise InputError("not a validate_two_ideal fail certificate")
    clause = cert.counterexample["clause"]
    c = cert.counterexample["cells"]
    if clause == "null2-boundary":
        mu = c["two_cell"]
        return not (t.src2[mu] in n.null1 and t.tgt2[mu] in n.null1)
    if clause == "closure-id2":
        return t.id2[c["null_one_cell"]] not in n.null2
    if clause == "closure-vcomp":
        return t.vcomp[(c["after"], c["before"])] not in n.null2
    if clause == "repl-null":
        return n.replacement[(c["a"], c["n"], c["b"])][0] not in n.null1
    if clause == "repl-boundary":
        a, x, b = c["a"], c["n"], c["b"]
        tilde, nu = n.replacement[(a, x, b)]
        composite = t.cmp1(b, t.cmp1(x, a))
        return not (t.src2[nu] == composite and t.tgt2[nu] == tilde)
    if clause == "repl-invertible":
        return not t.is_invertible2(n.replacement[(c["a"], c["n"], c["b"])][1])
    if clause == "ax1":
        x = c["n"]
        tilde, nu = n.replacement[(t.id1[t.src1[x]], x, t.id1[t.tgt1[x]])]
        return tilde != x or nu != t.id2[x]
    if clause == "ax2":
        mu, a, b = c["mu"], c["a"], c["b"]
        _, nu1 = n.replacement[(a, t.src2[mu], b)]
        _, nu2 = n.replacement[(a, t.tgt2[mu], b)]
        cell = t.vc(nu2, t.vc(t.lw(b, t.rw(mu, a)), t.inv(nu1)))
        return cell not in n.null2
    if clause == "ax3":
        x, alpha, beta = c["n"], c["alpha"], c["beta"]
        _, nu1 = n.replacement[(t.src2[alpha], x, t.src2[beta])]
        _, nu2 = n.replacement[(t.tgt2[alpha], x, t.tgt2[beta])]
        mid = t.hc(beta, t.hc(t.id2[x], alpha))
        return t.vc(nu2, t.vc(mid, t.inv(nu1))) not in n.null2
    if clause == "ax4":
        a, x, b, a2, b2 = c["a"], c["n"], c["b"], c["a2"], c["b2"]
        m, nu1 = n.replacement[(a, x, b)]
        _, nu_direct = n.replacement[(t.cmp1(a, a2), x, t.cmp1(b2, b))]
        _, nu_outer = n.replacement[(a2, m, b2)]
        cell = t.vc(nu_direct,
                    t.vc(t.lw(b2, t.rw(t.inv(nu1), a2)), t.inv(nu_outer)))
        return cell not in n.null2 or not t.is_invertible2(cell)
    raise InputError(f"unknown clause tag {clause}")


# ---------------------------------------------------------------------------
# distinguished ideals
# ---------------------------------------------------------------------------

def maximal_two_ideal(t: TwoCategory) -> TwoIdeal:
    """Everything is null; replacements are identities on the composites."""
    repl = {
        (a, x, b): (t.cmp1(b, t.cmp1(x, a)), t.id2[t.cmp1(b, t.cmp1(x, a))])
        for x in t.one_ids
        for a in t.one_ids if t.tgt1[a] == t.src1[x]
        for b in t.one_ids if t.src1[b] == t.tgt1[x]
    }
    return TwoIdeal(t.one_ids, t.two_ids, repl)


def bizero_objects(t: TwoCategory) -> tuple[str, ...]:
    """Objects whose hom-categories to and from every object are equivalent to
    the terminal category: nonempty, with exactly one (invertible) 2-cell
    between any ordered pair of 1-cells."""
    out = []
    for z in t.objects:
        if all(_hom_terminal(t, a, z) and _hom_terminal(t, z, a)
               for a in t.objects):
            out.append(z)
    return tuple(out)


def _hom_terminal(t: TwoCategory, a: str, b: str) -> bool:
    fs = t.hom1(a, b)
    if not fs:
        return False
    for f in fs:
        for g in fs:
            cells = t.hom2(f, g)
            if len(cells) != 1 or not t.is_invertible2(cells[0]):
                return False
    return True


def is_strong_bizero(t: TwoCategory, zero: str) -> Certificate:
    """A bizero object through which null composites are unique up to a
    *unique* 2-cell: for any parallel pair of composites ``i∘t`` via the
    bizero object there is exactly one 2-cell between them, and it is
    invertible."""
    name = "is_strong_bizero"
    if zero not in t.objects:
        raise InputError(f"unknown object {zero}")
    if zero not in bizero_objects(t):
        return _fail(name, "not-bizero", object=zero)
    for a in t.objects:
        for b in t.objects:
            comps: list[str] = []
            for tt in t.hom1(a, zero):
                for i in t.hom1(zero, b):
                    f = t.cmp1(i, tt)
                    if f not in comps:
                        comps.append(f)
            for f in comps:
                for g in comps:
                    cells = t.hom2(f, g)
                    if len(cells) != 1 or not t.is_invertible2(cells[0]):
                        return _fail(name, "null-composite-cells", object=zero,
                                     f=f, g=g, count=len(cells))
    return Certificate(name, "pass", witness={"object": zero})


def canonical_zero_ideal(t: TwoCategory, zero: str | None = None) -> TwoIdeal:
    """The ideal of 1-cells factoring on the nose through a bizero object.

    Null 2-cells are generated by horizontally pasting the unique comparison
    2-cells between factorization legs, then closing under vertical
    composition.  Replacements are identity comparisons: ``b∘(i∘t)∘a`` factors
    through the bizero object again by strictness.
    """
    zs = bizero_objects(t)
    if zero is None:
        if not zs:
            raise InputError("no bizero object")
        zero = zs[0]
    elif zero not in zs:
        raise InputError(f"{zero} is not a bizero object")

    nulls = []
    for f in t.one_ids:
        a, b = t.src1[f], t.tgt1[f]
        if any(t.cmp1(i, tt) == f
               for tt in t.hom1(a, zero) for i in t.hom1(zero, b)):
            nulls.append(f)

    gens: list[str] = []
    for a in t.objects:
        ts = t.hom1(a, zero)
        for b in t.objects:
            is_ = t.hom1(zero, b)
            for t1 in ts:
                for t2 in ts:
                    u = t.hom2(t1, t2)[0]
                    for i1 in is_:
                        for i2 in is_:
                            v = t.hom2(i1, i2)[0]
                            cell = t.hc(v, u)
                            if cell not in gens:
                                gens.append(cell)
    # close under vertical composition
    null2 = list(gens)
    added = True
    while added:
        added = False
        for b in list(null2):
            for a in list(null2):
                if t.src2[b] != t.tgt2[a]:
                    continue
                c = t.vcomp[(b, a)]
                if c not in null2:
                    null2.append(c)
                    added = True

    nullset = set(nulls)
    repl = {}
    for x in nulls:
        for a in t.one_ids:
            if t.tgt1[a] != t.src1[x]:
                continue
            for b in t.one_ids:
                if t.src1[b] != t.tgt1[x]:
                    continue
                comp = t.cmp1(b, t.cmp1(x, a))
                if comp not in nullset:
                    raise InputError(
                        f"composite {comp} around null {x} does not factor "
                        f"through {zero}; {zero} is not bizero")
                repl[(a, x, b)] = (comp, t.id2[comp])
    return TwoIdeal(tuple(nulls), tuple(null2), repl)


def null_objects(t: TwoCategory, n: TwoIdeal) -> tuple[tuple[str, str, str], ...]:
    """Triples ``(Z, ξ̂, ξ)``: an object whose identity is invertibly null,
    witnessed by a null endo-1-cell ``ξ̂`` and an invertible ``ξ: id_Z ⇒ ξ̂``."""
    out = []
    for z in t.objects:
        idz = t.id1[z]
        for xhat in t.one_ids:
            if xhat not in n.null1 or t.src1[xhat] != z or t.tgt1[xhat] != z:
                continue
            for xi in t.iso2(idz, xhat):
                out.append((z, xhat, xi))
    return tuple(out)
