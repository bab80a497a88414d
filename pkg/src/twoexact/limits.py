"""Two-dimensional kernels, cokernels and iso-inserters by exhaustive
universal-property search.

A kernel presentation of ``f: A → B`` relative to an ideal is an apex with a
leg ``k: K → A``, a null 1-cell ``n: K → B`` and an invertible structure cell
``α: f∘k ⇒ n``.  The checker verifies the one-dimensional factorization
property (every nullifying cone factors through the leg, with the comparison
pasting an invertible null 2-cell) and the two-dimensional property (cells
between whiskered cones with null comparison descend uniquely).  Cokernels
are kernels in the dual; iso-inserters are checked directly and agree with
kernels against a chosen null in the pointed case.

Searches iterate cells in table order, so the first witness found is
deterministic for a given presentation.  A ``cap`` bounds the number of
quantifier instances examined; exceeding it raises
:class:`~twoexact.core.CapExceeded` from enumeration functions and produces
an inconclusive certificate from certificate-returning checkers.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Budget, CapExceeded, Certificate, InputError, TwoCategory, _fail,
    _inconclusive, dualize,
)
from .ideal import TwoIdeal, dual_ideal


@dataclass(frozen=True)
class KernelPresentation:
    """Candidate kernel data for ``arrow: A → B``: ``leg: apex → A``,
    ``null_cell: apex → B`` null, ``structure: arrow∘leg ⇒ null_cell``
    invertible."""

    arrow: str
    apex: str
    leg: str
    null_cell: str
    structure: str


@dataclass(frozen=True)
class CokernelPresentation:
    """Candidate cokernel data for ``arrow: A → B``: ``leg: B → coapex``,
    ``null_cell: A → coapex`` null, ``structure: leg∘arrow ⇒ null_cell``
    invertible."""

    arrow: str
    coapex: str
    leg: str
    null_cell: str
    structure: str


def _check_kernel_candidate(t: TwoCategory, n: TwoIdeal,
                            pres: KernelPresentation) -> None:
    f = pres.arrow
    if f not in t.src1:
        raise InputError(f"unknown 1-cell {f}")
    a, b = t.src1[f], t.tgt1[f]
    if pres.apex not in t.objects:
        raise InputError(f"unknown object {pres.apex}")
    if pres.leg not in t.src1 or (t.src1[pres.leg], t.tgt1[pres.leg]) != (pres.apex, a):
        raise InputError(f"kernel leg {pres.leg} is not a 1-cell {pres.apex} → {a}")
    if pres.null_cell not in n.null1:
        raise InputError(f"{pres.null_cell} is not a null 1-cell")
    if (t.src1[pres.null_cell], t.tgt1[pres.null_cell]) != (pres.apex, b):
        raise InputError(
            f"null cell {pres.null_cell} is not a 1-cell {pres.apex} → {b}")
    fk = t.cmp1(f, pres.leg)
    alpha = pres.structure
    if alpha not in t.src2 or (t.src2[alpha], t.tgt2[alpha]) != (fk, pres.null_cell):
        raise InputError(
            f"structure cell {alpha} is not a 2-cell {fk} ⇒ {pres.null_cell}")
    if not t.is_invertible2(alpha):
        raise InputError(f"structure cell {alpha} is not invertible")


def _cone_comparison(t: TwoCategory, n: TwoIdeal, pres: KernelPresentation,
                     u: str, gamma: str, beta: str) -> str:
    """The clause-(1) comparison pasting
    ``β · (f⋆γ⁻¹) · (α⁻¹⋆u) · ν⁻¹``: replacement of ``null∘u`` ⇒ cone null."""
    f, alpha = pres.arrow, pres.structure
    _, nu = n.repl(u, pres.null_cell, t.id1[t.tgt1[f]])
    return t.vc_chain(
        beta,
        t.lw(f, t.inv(gamma)),
        t.rw(t.inv(alpha), u),
        t.inv(nu),
    )


def _descent_comparison(t: TwoCategory, n: TwoIdeal, pres: KernelPresentation,
                        u: str, v: str, lam: str) -> str:
    """The clause-(2) comparison pasting
    ``ν_v · (α⋆v) · (f⋆λ) · (α⁻¹⋆u) · ν_u⁻¹`` between replacements."""
    f, alpha = pres.arrow, pres.structure
    idb = t.id1[t.tgt1[f]]
    _, nu_u = n.repl(u, pres.null_cell, idb)
    _, nu_v = n.repl(v, pres.null_cell, idb)
    return t.vc_chain(
        nu_v,
        t.rw(alpha, v),
        t.lw(f, lam),
        t.rw(t.inv(alpha), u),
        t.inv(nu_u),
    )


def is_two_kernel(t: TwoCategory, n: TwoIdeal, pres: KernelPresentation,
                  cap: int | None = None, _budget: Budget | None = None) -> Certificate:
    """Verify a candidate kernel presentation against both universal-property
    clauses.

    Clause 1: every ``z`` with an invertible ``β: arrow∘z ⇒ null`` factors as
    ``γ: z ⇒ leg∘u`` with the comparison pasting an invertible null 2-cell.
    Clause 2: every ``λ: leg∘u ⇒ leg∘v`` whose comparison pasting is null is
    ``leg ⋆ μ`` for exactly one ``μ: u ⇒ v``.
    """
    name = "is_two_kernel"
    _check_kernel_candidate(t, n, pres)
    budget = _budget if _budget is not None else Budget(cap, name)
    f, k = pres.arrow, pres.leg
    a = t.src1[f]
    try:
        for z_obj in t.objects:
            for z in t.hom1(z_obj, a):
                fz = t.cmp1(f, z)
                for nz in t.hom1(z_obj, t.tgt1[f]):
                    if nz not in n.null1:
                        continue
                    for beta in t.iso2(fz, nz):
                        budget.tick()
                        if not _cone_factors(t, n, pres, z_obj, z, beta):
                            return _fail(
                                name, "cone-factorization",
                                arrow=f, leg=k, cone=z, cone_null=nz, beta=beta)
        for z_obj in t.objects:
            us = t.hom1(z_obj, pres.apex)
            for u in us:
                ku = t.cmp1(k, u)
                for v in us:
                    kv = t.cmp1(k, v)
                    for lam in t.hom2(ku, kv):
                        budget.tick()
                        if _descent_comparison(t, n, pres, u, v, lam) not in n.null2:
                            continue
                        mus = [mu for mu in t.hom2(u, v) if t.lw(k, mu) == lam]
                        if len(mus) == 0:
                            return _fail(name, "descent-existence",
                                         arrow=f, leg=k, u=u, v=v, lam=lam)
                        if len(mus) > 1:
                            return _fail(name, "descent-uniqueness",
                                         arrow=f, leg=k, u=u, v=v, lam=lam,
                                         mus=mus[:2])
    except CapExceeded as exc:
        if _budget is not None:
            raise
        return _inconclusive(name, exc)
    return Certificate(name, "pass", witness={
        "arrow": f, "apex": pres.apex, "leg": k,
        "null_cell": pres.null_cell, "structure": pres.structure})


def _cone_factors(t: TwoCategory, n: TwoIdeal, pres: KernelPresentation,
                  z_obj: str, z: str, beta: str) -> bool:
    k = pres.leg
    for u in t.hom1(z_obj, pres.apex):
        ku = t.cmp1(k, u)
        for gamma in t.iso2(z, ku):
            chi = _cone_comparison(t, n, pres, u, gamma, beta)
            if chi in n.null2 and t.is_invertible2(chi):
                return True
    return False


def kernel_factor(t: TwoCategory, n: TwoIdeal, pres: KernelPresentation,
                  z: str, beta: str) -> tuple[str, str]:
    """Apply clause 1 of a verified kernel to the cone ``(z, β)``: the first
    ``(u, γ: z ⇒ leg∘u)`` whose comparison is an invertible null 2-cell."""
    if z not in t.src1:
        raise InputError(f"unknown 1-cell {z}")
    z_obj = t.src1[z]
    k = pres.leg
    for u in t.hom1(z_obj, pres.apex):
        ku = t.cmp1(k, u)
        for gamma in t.iso2(z, ku):
            chi = _cone_comparison(t, n, pres, u, gamma, beta)
            if chi in n.null2 and t.is_invertible2(chi):
                return u, gamma
    raise InputError(
        f"cone {z} with {beta} does not factor through kernel leg {k}")

def kernel_descend(t: TwoCategory, n: TwoIdeal, pres: KernelPresentation,
                   u: str, v: str, lam: str) -> str:
    """Apply clause 2 of a verified kernel: the unique ``μ: u ⇒ v`` with
    ``leg ⋆ μ = λ`` (the comparison of ``λ`` must be null)."""
    if _descent_comparison(t, n, pres, u, v, lam) not in n.null2:
        raise InputError(f"comparison of {lam} is not null; nothing descends")
    mus = [mu for mu in t.hom2(u, v) if t.lw(pres.leg, mu) == lam]
    if len(mus) != 1:
        raise InputError(
            f"expected exactly one descent of {lam} along {pres.leg}; "
            f"found {len(mus)}")
    return mus[0]


def two_kernels(t: TwoCategory, n: TwoIdeal, f: str, cap: int | None = None,
                _budget: Budget | None = None) -> tuple[KernelPresentation, ...]:
    """All verified kernel presentations of ``f``, in candidate table order.
    Raises :class:`CapExceeded` when the cap runs out mid-search."""
    if f not in t.src1:
        raise InputError(f"unknown 1-cell {f}")
    budget = _budget if _budget is not None else Budget(cap, "two_kernels")
    a, b = t.src1[f], t.tgt1[f]
    out = []
    for apex in t.objects:
        for k in t.hom1(apex, a):
            fk = t.cmp1(f, k)
            for nc in t.hom1(apex, b):
                if nc not in n.null1:
                    continue
                for alpha in t.iso2(fk, nc):
                    budget.tick()
                    pres = KernelPresentation(f, apex, k, nc, alpha)
                    if is_two_kernel(t, n, pres, _budget=budget).ok:
                        out.append(pres)
    return tuple(out)


def _to_dual_kernel(pres: CokernelPresentation) -> KernelPresentation:
    return KernelPresentation(pres.arrow, pres.coapex, pres.leg,
                              pres.null_cell, pres.structure)


def is_two_cokernel(t: TwoCategory, n: TwoIdeal, pres: CokernelPresentation,
                    cap: int | None = None) -> Certificate:
    """A cokernel is a kernel in the dual 2-category with the dual ideal."""
    cert = is_two_kernel(dualize(t), dual_ideal(n), _to_dual_kernel(pres), cap)
    return Certificate("is_two_cokernel", cert.status, cert.witness,
                       cert.counterexample, cert.detail)


def two_cokernels(t: TwoCategory, n: TwoIdeal, f: str, cap: int | None = None,
                  _budget: Budget | None = None) -> tuple[CokernelPresentation, ...]:
    """All verified cokernel presentations of ``f``, via the dual search."""
    duals = two_kernels(dualize(t), dual_ideal(n), f, cap, _budget=_budget)
    return tuple(
        CokernelPresentation(p.arrow, p.apex, p.leg, p.null_cell, p.structure)
        for p in duals)


def kernel_presentations_by_arrow(
        t: TwoCategory, n: TwoIdeal, cap: int | None = None,
        _budget: Budget | None = None) -> dict[str, tuple[KernelPresentation, ...]]:
    """Verified kernel presentations for every 1-cell, sharing one search
    budget across the whole sweep."""
    budget = _budget if _budget is not None else Budget(cap, "kernel_presentations_by_arrow")
    return {f: two_kernels(t, n, f, _budget=budget) for f in t.one_ids}


def cokernel_presentations_by_arrow(
        t: TwoCategory, n: TwoIdeal, cap: int | None = None,
        _budget: Budget | None = None) -> dict[str, tuple[CokernelPresentation, ...]]:
    """Verified cokernel presentations for every 1-cell, sharing one budget."""
    budget = _budget if _budget is not None else Budget(cap, "cokernel_presentations_by_arrow")
    return {f: two_cokernels(t, n, f, _budget=budget) for f in t.one_ids}


def cokernel_factor(t: TwoCategory, n: TwoIdeal, pres: CokernelPresentation,
                    z: str, beta: str) -> tuple[str, str]:
    """Dual of :func:`kernel_factor`: first ``(u, γ: z ⇒ u∘leg)`` in the dual
    sense for a cone ``z`` out of the arrow's target."""
    return kernel_factor(dualize(t), dual_ideal(n), _to_dual_kernel(pres), z, beta)


def cokernel_descend(t: TwoCategory, n: TwoIdeal, pres: CokernelPresentation,
                     u: str, v: str, lam: str) -> str:
    """Dual of :func:`kernel_descend`: unique ``μ: u ⇒ v`` with
    ``μ ⋆ leg = λ``."""
    return kernel_descend(dualize(t), dual_ideal(n), _to_dual_kernel(pres), u, v, lam)


# ---------------------------------------------------------------------------
# iso-inserters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InserterPresentation:
    """Candidate iso-inserter data for a parallel pair ``(left, right)``:
    ``leg: apex → A`` with invertible ``structure: left∘leg ⇒ right∘leg``."""

    left: str
    right: str
    apex: str
    leg: str
    structure: str


def _check_inserter_candidate(t: TwoCategory, pres: InserterPresentation) -> None:
    f, g = pres.left, pres.right
    for c in (f, g):
        if c not in t.src1:
            raise InputError(f"unknown 1-cell {c}")
    if (t.src1[f], t.tgt1[f]) != (t.src1[g], t.tgt1[g]):
        raise InputError(f"1-cells {f} and {g} are not parallel")
    if pres.apex not in t.objects:
        raise InputError(f"unknown object {pres.apex}")
    a = t.src1[f]
    if pres.leg not in t.src1 or (t.src1[pres.leg], t.tgt1[pres.leg]) != (pres.apex, a):
        raise InputError(f"leg {pres.leg} is not a 1-cell {pres.apex} → {a}")
    fl = t.cmp1(f, pres.leg)
    gl = t.cmp1(g, pres.leg)
    lam = pres.structure
    if lam not in t.src2 or (t.src2[lam], t.tgt2[lam]) != (fl, gl):
        raise InputError(f"structure cell {lam} is not a 2-cell {fl} ⇒ {gl}")
    if not t.is_invertible2(lam):
        raise InputError(f"structure cell {lam} is not invertible")


def is_biisoinserter(t: TwoCategory, pres: InserterPresentation,
                     cap: int | None = None,
                     _budget: Budget | None = None) -> Certificate:
    """Verify an iso-inserter presentation: every 1-cell with an invertible
    comparison between the two composites factors through the leg with the
    comparison reconstructed on the nose, and cells between whiskered factors
    satisfying the evident compatibility descend uniquely."""
    name = "is_biisoinserter"
    _check_inserter_candidate(t, pres)
    budget = _budget if _budget is not None else Budget(cap, name)
    f, g, ell, lam = pres.left, pres.right, pres.leg, pres.structure
    a = t.src1[f]
    try:
        for m_obj in t.objects:
            for m in t.hom1(m_obj, a):
                fm = t.cmp1(f, m)
                gm = t.cmp1(g, m)
                for mu in t.iso2(fm, gm):
                    budget.tick()
                    if not _inserter_factors(t, pres, m_obj, m, mu):
                        return _fail(name, "cone-factorization",
                                     left=f, right=g, leg=ell, cone=m, mu=mu)
        for z_obj in t.objects:
            vs = t.hom1(z_obj, pres.apex)
            for v in vs:
                lv = t.cmp1(ell, v)
                for w in vs:
                    lw_ = t.cmp1(ell, w)
                    for tau in t.hom2(lv, lw_):
                        budget.tick()
                        lhs = t.vc(t.rw(lam, w), t.lw(f, tau))
                        rhs = t.vc(t.lw(g, tau), t.rw(lam, v))
                        if lhs != rhs:
                            continue
                        sigmas = [s for s in t.hom2(v, w) if t.lw(ell, s) == tau]
                        if len(sigmas) == 0:
                            return _fail(name, "descent-existence",
                                         leg=ell, v=v, w=w, tau=tau)
                        if len(sigmas) > 1:
                            return _fail(name, "descent-uniqueness",
                                         leg=ell, v=v, w=w, tau=tau,
                                         sigmas=sigmas[:2])
    except CapExceeded as exc:
        if _budget is not None:
            raise
        return _inconclusive(name, exc)
    return Certificate(name, "pass", witness={
        "left": f, "right": g, "apex": pres.apex, "leg": ell,
        "structure": lam})


def _inserter_factors(t: TwoCategory, pres: InserterPresentation,
                      m_obj: str, m: str, mu: str) -> bool:
    f, g, ell, lam = pres.left, pres.right, pres.leg, pres.structure
    for v in t.hom1(m_obj, pres.apex):
        lv = t.cmp1(ell, v)
        for delta in t.iso2(m, lv):
            built = t.vc_chain(t.lw(g, t.inv(delta)), t.rw(lam, v),
                               t.lw(f, delta))
            if built == mu:
                return True
    return False


def biisoinserter(t: TwoCategory, f: str, g: str, cap: int | None = None,
                  _budget: Budget | None = None) -> tuple[InserterPresentation, ...]:
    """All verified iso-inserter presentations of the parallel pair
    ``(f, g)``, in candidate table order."""
    for c in (f, g):
        if c not in t.src1:
            raise InputError(f"unknown 1-cell {c}")
    if (t.src1[f], t.tgt1[f]) != (t.src1[g], t.tgt1[g]):
        raise InputError(f"1-cells {f} and {g} are not parallel")
    budget = _budget if _budget is not None else Budget(cap, "biisoinserter")
    a = t.src1[f]
    out = []
    for apex in t.objects:
        for ell in t.hom1(apex, a):
            fl = t.cmp1(f, ell)
            gl = t.cmp1(g, ell)
            for lam in t.iso2(fl, gl):
                budget.tick()
                pres = InserterPresentation(f, g, apex, ell, lam)
                if is_biisoinserter(t, pres, _budget=budget).ok:
                    out.append(pres)
    return tuple(out)


# ---------------------------------------------------------------------------
# presentation comparison (used by invariants and tests)
# ---------------------------------------------------------------------------

def kernel_presentations_equivalent(t: TwoCategory, p: KernelPresentation,
                                    q: KernelPresentation) -> bool:
    """Whether two kernel presentations of the same arrow are connected by an
    equivalence of apexes commuting with the legs up to an invertible 2-cell."""
    from .core import is_equivalence
    if p.arrow != q.arrow:
        raise InputError("presentations are for different arrows")
    for j in t.hom1(p.apex, q.apex):
        if not t.iso2(t.cmp1(q.leg, j), p.leg):
            continue
        if is_equivalence(t, j).ok:
            return True
    return False
