"""Deterministic generators for test-scale categories and their enrichments,
plus single-fault mutation operators.

Each generator enumerates its cells in a fixed order and names them with
zero-padded indices, so generated presentations are stable across runs and
their serialized form is byte-stable.  ``mutate`` produces well-formed
structures that fail exactly one targeted validator, searching candidate
single-entry faults deterministically from the seed until the target
validator rejects.
"""
from __future__ import annotations

import itertools
from typing import Any

from .core import InputError, TwoCategory
from .onecat import FiniteCategory


def _width(count: int) -> int:
    return max(1, len(str(max(count - 1, 0))))


# ---------------------------------------------------------------------------
# finite category builders
# ---------------------------------------------------------------------------

def terminal_category() -> FiniteCategory:
    """One object, its identity, nothing else."""
    return FiniteCategory(
        objects=("o0",),
        morphisms=(("m0_id", "o0", "o0"),),
        comp={("m0_id", "m0_id"): "m0_id"},
        ident={"o0": "m0_id"},
    )


def partial_bijections(n: int) -> FiniteCategory:
    """The category of cardinalities ``0..n`` with partial injections.

    A morphism ``a ⇀ b`` is an injective partial map ``{1..a} ⇀ {1..b}``,
    encoded by its graph; composition is relational.
    """
    if n < 0:
        raise InputError("size must be nonnegative")
    objects = tuple(f"o{a}" for a in range(n + 1))
    raw: list[tuple[int, int, tuple[tuple[int, int], ...]]] = []
    for a in range(n + 1):
        for b in range(n + 1):
            elems = list(range(1, a + 1))
            for mask in range(1 << a):
                dom = [elems[i] for i in range(a) if mask >> i & 1]
                for img in itertools.permutations(range(1, b + 1), len(dom)):
                    raw.append((a, b, tuple(zip(dom, img))))
    w = _width(len(raw))
    ids: dict[tuple[int, int, tuple[tuple[int, int], ...]], str] = {}
    morphisms = []
    for idx, (a, b, graph) in enumerate(raw):
        desc = "".join(f"{i}{j}" for i, j in graph) or "e"
        mid = f"m{idx:0{w}d}_{a}to{b}_{desc}"
        ids[(a, b, graph)] = mid
        morphisms.append((mid, f"o{a}", f"o{b}"))
    comp = {}
    for (b1, c1, g_graph) in raw:
        g_map = dict(g_graph)
        for (a2, b2, f_graph) in raw:
            if b2 != b1:
                continue
            gf = tuple(sorted((i, g_map[j]) for i, j in f_graph if j in g_map))
            comp[(ids[(b1, c1, g_graph)], ids[(a2, b2, f_graph)])] = \
                ids[(a2, c1, gf)]
    ident = {
        f"o{a}": ids[(a, a, tuple((i, i) for i in range(1, a + 1)))]
        for a in range(n + 1)
    }
    return FiniteCategory(objects, tuple(morphisms), comp, ident)


def cyclic_tower(p: int, k: int) -> FiniteCategory:
    """Cyclic groups of orders ``p^0, …, p^k`` with all group homomorphisms.

    A homomorphism ``Z/p^i → Z/p^j`` is multiplication by ``t`` where
    ``t·p^i ≡ 0 (mod p^j)``; composition multiplies the parameters.
    """
    if p < 2 or k < 0:
        raise InputError("need a base ≥ 2 and a nonnegative height")
    mods = [p ** i for i in range(k + 1)]
    objects = tuple(f"o{i}" for i in range(k + 1))
    raw: list[tuple[int, int, int]] = []
    for i in range(k + 1):
        for j in range(k + 1):
            step = p ** max(0, j - i)
            raw.extend((i, j, t) for t in range(0, mods[j], step))
    w = _width(len(raw))
    ids = {}
    morphisms = []
    for idx, (i, j, t) in enumerate(raw):
        mid = f"m{idx:0{w}d}_{i}to{j}x{t}"
        ids[(i, j, t)] = mid
        morphisms.append((mid, f"o{i}", f"o{j}"))
    comp = {}
    for (j1, l1, s) in raw:
        for (i2, j2, t) in raw:
            if j2 != j1:
                continue
            comp[(ids[(j1, l1, s)], ids[(i2, j2, t)])] = \
                ids[(i2, l1, (s * t) % mods[l1])]
    ident = {f"o{i}": ids[(i, i, 1 % mods[i])] for i in range(k + 1)}
    return FiniteCategory(objects, tuple(morphisms), comp, ident)


def pointed_sets(n: int) -> FiniteCategory:
    """Skeletal pointed sets with up to ``n`` non-base points and all
    base-point-preserving maps."""
    if n < 0:
        raise InputError("size must be nonnegative")
    objects = tuple(f"o{a}" for a in range(n + 1))
    raw: list[tuple[int, int, tuple[int, ...]]] = []
    for a in range(n + 1):
        for b in range(n + 1):
            raw.extend((a, b, phi)
                       for phi in itertools.product(range(b + 1), repeat=a))
    w = _width(len(raw))
    ids = {}
    morphisms = []
    for idx, (a, b, phi) in enumerate(raw):
        desc = "".join(str(v) for v in phi) or "e"
        mid = f"m{idx:0{w}d}_{a}to{b}_{desc}"
        ids[(a, b, phi)] = mid
        morphisms.append((mid, f"o{a}", f"o{b}"))
    comp = {}
    for (b1, c1, g) in raw:
        for (a2, b2, f) in raw:
            if b2 != b1:
                continue
            gf = tuple(0 if v == 0 else g[v - 1] for v in f)
            comp[(ids[(b1, c1, g)], ids[(a2, b2, f)])] = ids[(a2, c1, gf)]
    ident = {f"o{a}": ids[(a, a, tuple(range(1, a + 1)))] for a in range(n + 1)}
    return FiniteCategory(objects, tuple(morphisms), comp, ident)


# ---------------------------------------------------------------------------
# enrichments
# ---------------------------------------------------------------------------

def locally_discrete(c: FiniteCategory) -> TwoCategory:
    """The 2-category with the same 1-dimensional data and only identity
    2-cells."""
    id2 = {f: f"id_{f}" for f in c.mor_ids}
    two_cells = tuple((id2[f], f, f) for f in c.mor_ids)
    vcomp = {(id2[f], id2[f]): id2[f] for f in c.mor_ids}
    lwhisker = {}
    rwhisker = {}
    for h in c.mor_ids:
        for f in c.mor_ids:
            if c.src[h] == c.tgt[f]:
                lwhisker[(h, id2[f])] = id2[c.comp[(h, f)]]
            if c.tgt[h] == c.src[f]:
                rwhisker[(id2[f], h)] = id2[c.comp[(f, h)]]
    return TwoCategory(
        objects=c.objects,
        one_cells=c.morphisms,
        comp1=dict(c.comp),
        id1=dict(c.ident),
        two_cells=two_cells,
        vcomp=vcomp,
        id2=id2,
        lwhisker=lwhisker,
        rwhisker=rwhisker,
    )


def chaotic_enrichment(c: FiniteCategory) -> TwoCategory:
    """The 2-category with exactly one 2-cell between every ordered pair of
    parallel 1-cells (necessarily invertible); every 2-dimensional law holds
    by uniqueness."""
    w = _width(len(c.mor_ids))
    index = {f: i for i, f in enumerate(c.mor_ids)}
    cell: dict[tuple[str, str], str] = {}
    two_cells = []
    for f in c.mor_ids:
        for g in c.mor_ids:
            if c.src[f] == c.src[g] and c.tgt[f] == c.tgt[g]:
                cid = f"c{index[f]:0{w}d}x{index[g]:0{w}d}"
                cell[(f, g)] = cid
                two_cells.append((cid, f, g))
    vcomp = {}
    for (f, g), a in cell.items():
        for (g2, h), b in cell.items():
            if g2 == g:
                vcomp[(b, a)] = cell[(f, h)]
    lwhisker = {}
    rwhisker = {}
    for (f, g), a in cell.items():
        for h in c.mor_ids:
            if c.src[h] == c.tgt[f]:
                lwhisker[(h, a)] = cell[(c.comp[(h, f)], c.comp[(h, g)])]
            if c.tgt[h] == c.src[f]:
                rwhisker[(a, h)] = cell[(c.comp[(f, h)], c.comp[(g, h)])]
    return TwoCategory(
        objects=c.objects,
        one_cells=c.morphisms,
        comp1=dict(c.comp),
        id1=dict(c.ident),
        two_cells=tuple(two_cells),
        vcomp=vcomp,
        id2={f: cell[(f, f)] for f in c.mor_ids},
        lwhisker=lwhisker,
        rwhisker=rwhisker,
    )


# ---------------------------------------------------------------------------
# mutation operators
# ---------------------------------------------------------------------------

MUTATION_OPERATORS = (
    "retarget-vcomp",
    "drop-null-2cell",
    "break-compositor",
    "drop-M-translate",
    "swap-structure-cell",
    "remove-eta-inverse",
)


def _alternatives(t: TwoCategory, val: str) -> list[str]:
    """Candidate replacement 2-cells for ``val``: parallel ones first, then
    the rest, in table order."""
    parallel = [c for c in t.hom2(t.src2[val], t.tgt2[val]) if c != val]
    rest = [c for c in t.two_ids if c != val and c not in parallel]
    return parallel + rest


def mutate(entity: Any, operator: str, seed: int) -> Any:
    """Apply a deterministic single-fault mutation.

    The candidate fault site starts at ``seed`` (modulo the site count) and
    advances until the mutated structure is rejected by the operator's target
    validator, so the result is guaranteed to be well-formed and to fail that
    validator.  Raises :class:`InputError` when no eligible site exists.

    Expected entity per operator: ``retarget-vcomp`` a two-category;
    ``drop-null-2cell`` a ``(two-category, ideal)`` pair; ``break-compositor``
    a pseudofunctor; ``drop-M-translate`` a ``(two-category, factorization
    system)`` pair; ``swap-structure-cell`` and ``remove-eta-inverse`` a
    pseudonatural transformation.
    """
    if operator not in MUTATION_OPERATORS:
        raise InputError(f"unknown mutation operator {operator}")
    if seed < 0:
        raise InputError("seed must be nonnegative")

    from .core import TwoCategory as _TC
    from .factor import FactorizationSystem as _FS
    from .ideal import TwoIdeal as _TI
    from .pseudo import PseudoFunctor as _PF, PseudoNatural as _PN
    expected: dict[str, tuple] = {
        "retarget-vcomp": (_TC,),
        "drop-null-2cell": (_TC, _TI),
        "break-compositor": (_PF,),
        "drop-M-translate": (_TC, _FS),
        "swap-structure-cell": (_PN,),
        "remove-eta-inverse": (_PN,),
    }
    shape = expected[operator]
    given = entity if len(shape) > 1 else (entity,)
    if (not isinstance(given, tuple) or len(given) != len(shape)
            or any(not isinstance(part, want)
                   for part, want in zip(given, shape))):
        wanted = " + ".join(w.__name__ for w in shape)
        raise InputError(f"{operator} mutates a {wanted}, "
                         f"got {type(entity).__name__}")

    if operator == "retarget-vcomp":
        from dataclasses import replace
        from .core import validate_two_category
        t: TwoCategory = entity
        sites = list(t.vcomp.items())
        if not sites or len(t.two_cells) < 2:
            raise InputError("no eligible site for retarget-vcomp")
        for off in range(len(sites)):
            key, val = sites[(seed + off) % len(sites)]
            for alt in _alternatives(t, val):
                mutant = replace(t, vcomp={**t.vcomp, key: alt})
                if not validate_two_category(mutant).ok:
                    return mutant
        raise InputError("no eligible site for retarget-vcomp")

    if operator == "drop-null-2cell":
        from dataclasses import replace
        from .ideal import TwoIdeal, validate_two_ideal
        t, ideal = entity
        sites = list(ideal.null_two_cells)
        if not sites:
            raise InputError("no eligible site for drop-null-2cell")
        for off in range(len(sites)):
            drop = sites[(seed + off) % len(sites)]
            mutant = replace(ideal, null_two_cells=tuple(
                a for a in ideal.null_two_cells if a != drop))
            if not validate_two_ideal(t, mutant).ok:
                return mutant
        raise InputError("no eligible site for drop-null-2cell")

    if operator == "break-compositor":
        from dataclasses import replace
        from .pseudo import validate_pseudofunctor
        func = entity
        sites = list(func.compositor.items())
        if not sites:
            raise InputError("no eligible site for break-compositor")
        for off in range(len(sites)):
            key, val = sites[(seed + off) % len(sites)]
            for alt in _alternatives(func.target, val):
                mutant = replace(func, compositor={**func.compositor, key: alt})
                if not validate_pseudofunctor(mutant).ok:
                    return mutant
        raise InputError("no eligible site for break-compositor")

    if operator == "drop-M-translate":
        from dataclasses import replace
        from .factor import validate_fs
        t, fs = entity
        sites = [m for m in fs.right_class
                 if any(m == v[1] for v in fs.factorization.values())]
        if not sites:
            raise InputError("no eligible site for drop-M-translate")
        for off in range(len(sites)):
            drop = sites[(seed + off) % len(sites)]
            mutant = replace(fs, right_class=tuple(
                m for m in fs.right_class if m != drop))
            if not validate_fs(t, mutant).ok:
                return mutant
        raise InputError("no eligible site for drop-M-translate")

    if operator == "swap-structure-cell":
        from dataclasses import replace
        from .pseudo import validate_pseudonatural
        nat = entity
        sites = list(nat.structure.items())
        if not sites:
            raise InputError("no eligible site for swap-structure-cell")
        target = nat.source_functor.target
        for off in range(len(sites)):
            key, val = sites[(seed + off) % len(sites)]
            for alt in _alternatives(target, val):
                mutant = replace(nat, structure={**nat.structure, key: alt})
                if not validate_pseudonatural(mutant).ok:
                    return mutant
        raise InputError("no eligible site for swap-structure-cell")

    # remove-eta-inverse: replace a component 1-cell by a parallel
    # non-equivalence, so the equivalence-components requirement fails
    from dataclasses import replace
    from .core import is_equivalence
    from .pseudo import validate_pseudonatural
    nat = entity
    target = nat.source_functor.target
    sites = list(nat.component.items())
    if not sites:
        raise InputError("no eligible site for remove-eta-inverse")
    for off in range(len(sites)):
        key, val = sites[(seed + off) % len(sites)]
        alts = [f for f in target.hom1(target.src1[val], target.tgt1[val])
                if f != val and not is_equivalence(target, f).ok]
        for alt in alts:
            mutant = replace(nat, component={**nat.component, key: alt})
            if not validate_pseudonatural(mutant, require_equivalences=True).ok:
                return mutant
    raise InputError("no eligible site for remove-eta-inverse")
