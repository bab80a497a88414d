"""Shared fixture family for the test suite.

Everything is built once at import time from the deterministic generators,
so frozen literals in the tests refer to stable cell names.  The family
deliberately spans the interesting regimes: a one-object chaotic-free
terminal case, locally discrete enrichments of four 1-categories with
different exactness behavior, and one chaotic enrichment where hom-sets
are genuinely 2-dimensional.
"""

from twoexact import (
    FiniteCategory,
    TwoCategory,
    TwoIdeal,
    canonical_zero_ideal,
    chaotic_enrichment,
    cyclic_tower,
    locally_discrete,
    partial_bijections,
    pointed_sets,
    terminal_category,
)

TERM = terminal_category()
PB1 = partial_bijections(1)
PB2 = partial_bijections(2)
PB3 = partial_bijections(3)
CT22 = cyclic_tower(2, 2)
PS2 = pointed_sets(2)

LD_TERM = locally_discrete(TERM)
LD_PB1 = locally_discrete(PB1)
LD_PB2 = locally_discrete(PB2)
LD_PB3 = locally_discrete(PB3)
LD_CT22 = locally_discrete(CT22)
LD_PS2 = locally_discrete(PS2)
CH_PB1 = chaotic_enrichment(PB1)

#: The six fixtures every semantic check runs over (pb3 is reserved for
#: structural validation and format tests, where its size stays cheap).
CORE: dict[str, TwoCategory] = {
    "ld_term": LD_TERM,
    "ld_pb1": LD_PB1,
    "ld_pb2": LD_PB2,
    "ld_ct22": LD_CT22,
    "ld_ps2": LD_PS2,
    "ch_pb1": CH_PB1,
}

CORE_NAMES = tuple(CORE)

#: Underlying 1-categories of the locally discrete members, for oracle
#: cross-validation.
UNDERLYING: dict[str, FiniteCategory] = {
    "ld_term": TERM,
    "ld_pb1": PB1,
    "ld_pb2": PB2,
    "ld_ct22": CT22,
    "ld_ps2": PS2,
    "ch_pb1": PB1,
}

ZERO_IDEALS: dict[str, TwoIdeal] = {
    name: canonical_zero_ideal(t) for name, t in CORE.items()
}


def full_sub(t: TwoCategory, objects: frozenset[str]) -> TwoCategory:
    """Full sub-2-category on a subset of objects: keep exactly the cells
    whose 0-cell boundaries lie in the subset and restrict every table."""
    ones = tuple(c for c in t.one_cells if c[1] in objects and c[2] in objects)
    one_ids = {c[0] for c in ones}
    twos = tuple(c for c in t.two_cells
                 if t.src1[c[1]] in objects and t.tgt1[c[1]] in objects)
    two_ids = {c[0] for c in twos}
    return TwoCategory(
        objects=tuple(o for o in t.objects if o in objects),
        one_cells=ones,
        comp1={k: v for k, v in t.comp1.items() if k[0] in one_ids and k[1] in one_ids},
        id1={o: f for o, f in t.id1.items() if o in objects},
        two_cells=twos,
        vcomp={k: v for k, v in t.vcomp.items() if k[0] in two_ids and k[1] in two_ids},
        id2={f: a for f, a in t.id2.items() if f in one_ids},
        lwhisker={k: v for k, v in t.lwhisker.items()
                  if k[0] in one_ids and k[1] in two_ids},
        rwhisker={k: v for k, v in t.rwhisker.items()
                  if k[0] in two_ids and k[1] in one_ids},
    )


#: ld(pb2) without its zero object: still a strict 2-category, but with no
#: bizero object and (for the nowhere-defined-map ideal) missing kernels.
NO_ZERO = full_sub(LD_PB2, frozenset({"o1", "o2"}))

#: The nowhere-defined partial bijections of NO_ZERO still absorb
#: composition, so they form a 2-ideal even though no null object remains.
_PB2_ZERO = ZERO_IDEALS["ld_pb2"]
NO_ZERO_IDEAL = TwoIdeal(
    null_one_cells=tuple(f for f in NO_ZERO.one_ids if f in _PB2_ZERO.null1),
    null_two_cells=tuple(a for a in NO_ZERO.two_ids if a in _PB2_ZERO.null2),
    replacement={k: v for k, v in _PB2_ZERO.replacement.items()
                 if k[0] in NO_ZERO.src1 and k[1] in NO_ZERO.src1
                 and k[2] in NO_ZERO.src1},
)


def epi_mono_fs():
    """The image factorization system on the cyclic tower: surjective
    homomorphisms followed by injective ones."""
    from twoexact import FactorizationSystem, natural_key

    c, t = CT22, LD_CT22

    def cancels_left(m):
        return all(c.comp[(m, a)] != c.comp[(m, b)]
                   for a in c.mor_ids for b in c.mor_ids
                   if a != b and (m, a) in c.comp and (m, b) in c.comp)

    def cancels_right(m):
        return all(c.comp[(a, m)] != c.comp[(b, m)]
                   for a in c.mor_ids for b in c.mor_ids
                   if a != b and (a, m) in c.comp and (b, m) in c.comp)

    epis = tuple(sorted((m for m in c.mor_ids if cancels_right(m)),
                        key=natural_key))
    monos = tuple(sorted((m for m in c.mor_ids if cancels_left(m)),
                         key=natural_key))
    fact = {}
    for f, s, tgt in c.morphisms:
        for e, es, et in c.morphisms:
            if e not in epis or es != s:
                continue
            for m, ms, mt in c.morphisms:
                if m in monos and ms == et and mt == tgt \
                        and c.comp[(m, e)] == f:
                    fact[f] = (e, m, t.id2[f])
                    break
            if f in fact:
                break
    return t, FactorizationSystem(epis, monos, fact)
