"""Exactness checkers and both constructive directions of the equivalence
between closed-ideal exactness data and proper factorization systems.

``check_grandis_ii`` verifies the ideal-side conditions (kernels and
cokernels everywhere, closedness, each kernel being a kernel of its
cokernel and dually, cokernel-then-kernel factorization) and
``check_grandis_i`` the factorization-system side (validity, properness,
both weak 2-(op)fibration directions, and the kernel/cokernel functors
forming a biequivalence over the base).  ``fs_from_ideal`` and
``ideal_from_fs`` realize the two directions constructively, and
``three_pieces`` computes the cokernel--middle--kernel factorization of a
single 1-cell together with its dual route and the connecting 2-cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .closure import _reflection_conclusion, is_closed_ideal, is_weakly_closed
from .core import (Budget, CapExceeded, Certificate, InputError, TwoCategory,
                   _fail, dualize, natural_key, solve_lwhisker,
                   solve_rwhisker)
from .factor import (ArrowTwoCategory, FactorizationSystem, arrow_subcat,
                     check_fs_shape, check_weak_two_fibration, is_proper_11,
                     validate_fs)
from .ideal import (TwoIdeal, bizero_objects, canonical_zero_ideal,
                    check_ideal_shape, dual_ideal)
from .limits import (CokernelPresentation, KernelPresentation,
                     cokernel_factor, cokernel_presentations_by_arrow,
                     is_two_kernel, kernel_factor,
                     kernel_presentations_by_arrow, two_cokernels, two_kernels)
from .pseudo import (PseudoFunctor, PseudoNatural, compose_pseudofunctors,
                     identity_pseudofunctor, is_biequivalence_over_base,
                     strict_two_functor)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExactnessReport:
    """An ordered bundle of named sub-certificates for one exactness mode.

    ``status`` is ``"fail"`` when any sub-certificate fails,
    ``"inconclusive"`` when none fail but some ran out of search budget, and
    ``"pass"`` otherwise.
    """

    mode: str
    checks: tuple[tuple[str, Certificate], ...]

    @property
    def status(self) -> str:
        statuses = [cert.status for _, cert in self.checks]
        if "fail" in statuses:
            return "fail"
        if "inconclusive" in statuses:
            return "inconclusive"
        return "pass"

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def certificate(self, name: str) -> Certificate:
        for check_name, cert in self.checks:
            if check_name == name:
                return cert
        raise InputError(f"no sub-certificate named {name}")

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "mode": self.mode,
            "status": self.status,
            "checks": {name: cert.to_json_dict()
                       for name, cert in self.checks},
        }


def _inconclusive_at(name: str, exc: CapExceeded, at: str) -> Certificate:
    return Certificate(name, "inconclusive",
                       detail=f"{exc} while processing 1-cell {at}")


# ---------------------------------------------------------------------------
# the ideal-side conditions
# ---------------------------------------------------------------------------

def check_grandis_ii(t: TwoCategory, n: TwoIdeal, weak: bool = False,
                     cap: int | None = None) -> ExactnessReport:
    """Check the ideal-side exactness conditions, one certificate each:
    every 1-cell has a kernel and a cokernel, the ideal is (weakly) closed,
    every kernel leg is a kernel of its own cokernel with structure cell
    agreeing up to an invertible null 2-cell, dually for cokernel legs, and
    every 1-cell factors up to invertible 2-cell as a cokernel leg followed
    by a kernel leg."""
    check_ideal_shape(t, n)
    mode = "weak-grandis" if weak else "grandis"
    budget = Budget(cap, "check_grandis_ii")
    checks: list[tuple[str, Certificate]] = []

    try:
        kernels = kernel_presentations_by_arrow(t, n, _budget=budget)
        cokernels = cokernel_presentations_by_arrow(t, n, _budget=budget)
    except CapExceeded as exc:
        checks.append(("all-kernels-exist",
                       _inconclusive_at("all-kernels-exist", exc, "(sweep)")))
        return ExactnessReport(mode, tuple(checks))

    missing = [f for f in t.one_ids if not kernels[f]]
    if missing:
        checks.append(("all-kernels-exist",
                       _fail("all-kernels-exist", "missing-kernel",
                             one_cell=missing[0])))
    else:
        checks.append(("all-kernels-exist",
                       Certificate("all-kernels-exist", "pass",
                                   {"arrows": len(t.one_ids)})))
    missing = [f for f in t.one_ids if not cokernels[f]]
    if missing:
        checks.append(("all-cokernels-exist",
                       _fail("all-cokernels-exist", "missing-cokernel",
                             one_cell=missing[0])))
    else:
        checks.append(("all-cokernels-exist",
                       Certificate("all-cokernels-exist", "pass",
                                   {"arrows": len(t.one_ids)})))

    if weak:
        checks.append(("weak-closedness", is_weakly_closed(t, n, cap)))
    else:
        checks.append(("closedness", is_closed_ideal(t, n, cap)))

    kernel_legs = tuple(dict.fromkeys(
        p.leg for f in t.one_ids for p in kernels[f]))
    cokernel_legs = tuple(dict.fromkeys(
        p.leg for f in t.one_ids for p in cokernels[f]))

    checks.append(_kernel_of_its_cokernel(
        t, n, kernel_legs, cokernels, budget))
    checks.append(_cokernel_of_its_kernel(
        t, n, cokernel_legs, kernels, budget))

    name = "factorization"
    cert = None
    chosen: dict[str, list[str]] = {}
    for f in t.one_ids:
        found = None
        for e in cokernel_legs:
            if t.src1[e] != t.src1[f]:
                continue
            for m in kernel_legs:
                if t.src1[m] != t.tgt1[e] or t.tgt1[m] != t.tgt1[f]:
                    continue
                isos = t.iso2(f, t.cmp1(m, e))
                if isos:
                    found = [e, m, isos[0]]
                    break
            if found:
                break
        if found is None:
            cert = _fail(name, "no-cokernel-kernel-factorization", one_cell=f)
            break
        chosen[f] = found
    if cert is None:
        cert = Certificate(name, "pass", {"chosen": chosen})
    checks.append((name, cert))

    return ExactnessReport(mode, tuple(checks))


def _null_iso_adjustments(t: TwoCategory, n: TwoIdeal,
                          start: str) -> list[str]:
    """All invertible null 2-cells out of the null 1-cell ``start`` —
    the allowed adjustments between two structure cells."""
    return [z for z in t.two_ids
            if t.src2[z] == start and z in n.null2 and t.is_invertible2(z)]


def _kernel_of_its_cokernel(
        t: TwoCategory, n: TwoIdeal, kernel_legs: tuple[str, ...],
        cokernels: dict[str, tuple[CokernelPresentation, ...]],
        budget: Budget) -> tuple[str, Certificate]:
    """Each kernel leg must be a kernel of its own cokernel, with structure
    cell obtained from the cokernel's structure cell by pasting an
    invertible null 2-cell."""
    name = "kernel-of-its-cokernel"
    for m in kernel_legs:
        try:
            found = False
            for pres_c in cokernels[m]:
                for zeta in _null_iso_adjustments(t, n, pres_c.null_cell):
                    budget.tick()
                    candidate = KernelPresentation(
                        arrow=pres_c.leg, apex=t.src1[m], leg=m,
                        null_cell=t.tgt2[zeta],
                        structure=t.vc(zeta, pres_c.structure))
                    if is_two_kernel(t, n, candidate, _budget=budget).ok:
                        found = True
                        break
                if found:
                    break
            if not found:
                return name, _fail(name, "not-kernel-of-its-cokernel",
                                   member=m)
        except CapExceeded as exc:
            return name, _inconclusive_at(name, exc, m)
    return name, Certificate(name, "pass", {"legs": len(kernel_legs)})


def _cokernel_of_its_kernel(
        t: TwoCategory, n: TwoIdeal, cokernel_legs: tuple[str, ...],
        kernels: dict[str, tuple[KernelPresentation, ...]],
        budget: Budget) -> tuple[str, Certificate]:
    """Dual sub-check: each cokernel leg is a cokernel of its own kernel."""
    name = "cokernel-of-its-kernel"
    td, nd = dualize(t), dual_ideal(n)
    for e in cokernel_legs:
        try:
            found = False
            for pres_k in kernels[e]:
                for zeta in _null_iso_adjustments(t, n, pres_k.null_cell):
                    budget.tick()
                    candidate = KernelPresentation(
                        arrow=pres_k.leg, apex=t.tgt1[e], leg=e,
                        null_cell=t.tgt2[zeta],
                        structure=t.vc(zeta, pres_k.structure))
                    if is_two_kernel(td, nd, candidate, _budget=budget).ok:
                        found = True
                        break
                if found:
                    break
            if not found:
                return name, _fail(name, "not-cokernel-of-its-kernel",
                                   member=e)
        except CapExceeded as exc:
            return name, _inconclusive_at(name, exc, e)
    return name, Certificate(name, "pass", {"legs": len(cokernel_legs)})


def check_puppe(t: TwoCategory, weak: bool = False,
                cap: int | None = None) -> ExactnessReport:
    """Locate a bizero object, build the canonical ideal of 1-cells
    factoring through it, and run the ideal-side conditions against it."""
    mode = "weak-puppe" if weak else "puppe"
    zeros = bizero_objects(t)
    if not zeros:
        return ExactnessReport(mode, (
            ("two-pointed", _fail("two-pointed", "not-2-pointed")),))
    zero = zeros[0]
    pointed = Certificate("two-pointed", "pass", {"bizero": zero})
    inner = check_grandis_ii(t, canonical_zero_ideal(t, zero), weak=weak,
                             cap=cap)
    return ExactnessReport(mode, (("two-pointed", pointed),) + inner.checks)


# ---------------------------------------------------------------------------
# the factorization-system side
# ---------------------------------------------------------------------------

def _dom_projection(arrow: ArrowTwoCategory) -> PseudoFunctor:
    base, cat = arrow.base, arrow.cat
    return strict_two_functor(
        cat, base,
        ob={e: base.src1[e] for e in arrow.members},
        one={sid: arrow.square(sid)[0] for sid in cat.one_ids},
        two={tid: arrow.pair(tid)[0] for tid in cat.two_ids})


def _cod_projection(arrow: ArrowTwoCategory) -> PseudoFunctor:
    base, cat = arrow.base, arrow.cat
    return strict_two_functor(
        cat, base,
        ob={e: base.tgt1[e] for e in arrow.members},
        one={sid: arrow.square(sid)[1] for sid in cat.one_ids},
        two={tid: arrow.pair(tid)[1] for tid in cat.two_ids})


def check_grandis_i(t: TwoCategory, fs: FactorizationSystem,
                    k: PseudoFunctor, c: PseudoFunctor,
                    eta: PseudoNatural, epsilon: PseudoNatural,
                    cap: int | None = None) -> Certificate:
    """Check the factorization-system side on a full bundle: the system is
    valid and proper, both projections carry their weak 2-(op)fibration
    structure, and ``k``/``c`` with unit ``eta`` and counit ``epsilon`` form
    a biequivalence between the two pseudo-arrow 2-categories strictly over
    the base."""
    name = "check_grandis_i"
    check_fs_shape(t, fs)
    e_arrow = arrow_subcat(t, fs.left_class)
    m_arrow = arrow_subcat(t, fs.right_class)
    subchecks = (
        ("factorization-system", lambda: validate_fs(t, fs, cap)),
        ("properness", lambda: is_proper_11(t, fs)),
        ("fibration-cod", lambda: check_weak_two_fibration(t, fs, "cod", cap)),
        ("fibration-dom", lambda: check_weak_two_fibration(t, fs, "dom", cap)),
        ("biequivalence", lambda: is_biequivalence_over_base(
            _dom_projection(e_arrow), _cod_projection(m_arrow),
            k, c, eta, epsilon)),
    )
    statuses = {}
    inconclusive = None
    for tag, run in subchecks:
        cert = run()
        statuses[tag] = cert.status
        if cert.status == "fail":
            return Certificate(name, "fail", None,
                               {"clause": tag,
                                "cells": {"inner": cert.counterexample}},
                               detail=cert.detail)
        if cert.status == "inconclusive" and inconclusive is None:
            inconclusive = Certificate(name, "inconclusive",
                                       detail=f"{tag}: {cert.detail}")
    if inconclusive is not None:
        return inconclusive
    return Certificate(name, "pass", {"checks": statuses})


# ---------------------------------------------------------------------------
# construction: from a closed ideal to a factorization system
# ---------------------------------------------------------------------------

def _first_with_leg(presentations, leg: str):
    for p in presentations:
        if p.leg == leg:
            return p
    return None


class _KernelFunctorBuilder:
    """Builds the kernel functor from the left pseudo-arrow 2-category to
    the right one: objects go to chosen kernel legs, squares to the induced
    comparison squares, 2-cells and compositors to the unique cells solving
    the faithfulness equations."""

    def __init__(self, t: TwoCategory, n: TwoIdeal,
                 e_arrow: ArrowTwoCategory, m_arrow: ArrowTwoCategory,
                 chosen_kernel: dict[str, KernelPresentation]):
        self.t = t
        self.n = n
        self.e_arrow = e_arrow
        self.m_arrow = m_arrow
        self.chosen = chosen_kernel

    def build(self) -> PseudoFunctor:
        t = self.t
        cat = self.e_arrow.cat
        ob = {e: self.chosen[e].leg for e in self.e_arrow.members}
        identity_squares = set(cat.id1.values())
        one: dict[str, str] = {}
        for sid in cat.one_ids:
            e, e2 = cat.src1[sid], cat.tgt1[sid]
            if sid in identity_squares:
                one[sid] = self.m_arrow.cat.id1[ob[e]]
                continue
            a, b, phi = self.e_arrow.square(sid)
            pres, pres2 = self.chosen[e], self.chosen[e2]
            k_e = pres.leg
            z = t.cmp1(a, k_e)
            _, nu = self.n.repl(t.id1[t.src1[pres.null_cell]],
                                pres.null_cell, b)
            beta = t.vc_chain(nu, t.lw(b, pres.structure), t.rw(phi, k_e))
            w_hat, gamma = kernel_factor(t, self.n, pres2, z, beta)
            one[sid] = ArrowTwoCategory.square_id(
                ob[e], ob[e2], w_hat, a, t.inv(gamma))

        two: dict[str, str] = {}
        for tid in cat.two_ids:
            sid, sid2 = cat.src2[tid], cat.tgt2[tid]
            sigma, _ = self.e_arrow.pair(tid)
            img, img2 = one[sid], one[sid2]
            w_hat, _, psi = self.m_arrow.square(img)
            w_hat2, _, psi2 = self.m_arrow.square(img2)
            leg2 = self.chosen[cat.tgt1[sid]].leg
            k_e = self.chosen[cat.src1[sid]].leg
            needed = t.vc_chain(t.inv(psi2), t.rw(sigma, k_e), psi)
            mu = solve_lwhisker(t, leg2, w_hat, w_hat2, needed)
            two[tid] = ArrowTwoCategory.pair_id(img, img2, mu, sigma)

        compositor: dict[tuple[str, str], str] = {}
        for (sid2, sid1), sid12 in cat.comp1.items():
            img_comp = self.m_arrow.cat.comp1[(one[sid2], one[sid1])]
            img_tgt = one[sid12]
            u_comp, v_comp, psi_comp = self.m_arrow.square(img_comp)
            u_tgt, _, psi_tgt = self.m_arrow.square(img_tgt)
            leg2 = self.chosen[cat.tgt1[sid2]].leg
            kappa = solve_lwhisker(t, leg2, u_comp, u_tgt,
                                   t.vc(t.inv(psi_tgt), psi_comp))
            compositor[(sid2, sid1)] = ArrowTwoCategory.pair_id(
                img_comp, img_tgt, kappa, t.id2[v_comp])

        return PseudoFunctor(source=cat, target=self.m_arrow.cat,
                             ob=ob, one=one, two=two, compositor=compositor)


class _CokernelFunctorBuilder:
    """Mirror of :class:`_KernelFunctorBuilder`: objects go to chosen
    cokernel legs, with the unique cells solved along cofaithful legs."""

    def __init__(self, t: TwoCategory, n: TwoIdeal,
                 m_arrow: ArrowTwoCategory, e_arrow: ArrowTwoCategory,
                 chosen_cokernel: dict[str, CokernelPresentation]):
        self.t = t
        self.n = n
        self.m_arrow = m_arrow
        self.e_arrow = e_arrow
        self.chosen = chosen_cokernel

    def build(self) -> PseudoFunctor:
        t = self.t
        cat = self.m_arrow.cat
        ob = {m: self.chosen[m].leg for m in self.m_arrow.members}
        identity_squares = set(cat.id1.values())
        one: dict[str, str] = {}
        for sid in cat.one_ids:
            m, m2 = cat.src1[sid], cat.tgt1[sid]
            if sid in identity_squares:
                one[sid] = self.e_arrow.cat.id1[ob[m]]
                continue
            u, v, psi = self.m_arrow.square(sid)
            pres, pres2 = self.chosen[m], self.chosen[m2]
            c_m2 = pres2.leg
            z = t.cmp1(c_m2, v)
            _, nu = self.n.repl(u, pres2.null_cell,
                                t.id1[t.tgt1[pres2.null_cell]])
            beta = t.vc_chain(nu, t.rw(pres2.structure, u),
                              t.lw(c_m2, t.inv(psi)))
            b_hat, gamma = cokernel_factor(t, self.n, pres, z, beta)
            one[sid] = ArrowTwoCategory.square_id(
                ob[m], ob[m2], v, b_hat, gamma)

        two: dict[str, str] = {}
        for tid in cat.two_ids:
            sid, sid2 = cat.src2[tid], cat.tgt2[tid]
            _, mu_v = self.m_arrow.pair(tid)
            img, img2 = one[sid], one[sid2]
            _, b_hat, chi = self.e_arrow.square(img)
            _, b_hat2, chi2 = self.e_arrow.square(img2)
            c_m = self.chosen[cat.src1[sid]].leg
            c_m2 = self.chosen[cat.tgt1[sid]].leg
            needed = t.vc_chain(chi2, t.lw(c_m2, mu_v), t.inv(chi))
            kappa = solve_rwhisker(t, c_m, b_hat, b_hat2, needed)
            two[tid] = ArrowTwoCategory.pair_id(img, img2, mu_v, kappa)

        compositor: dict[tuple[str, str], str] = {}
        for (sid2, sid1), sid12 in cat.comp1.items():
            img_comp = self.e_arrow.cat.comp1[(one[sid2], one[sid1])]
            img_tgt = one[sid12]
            v_comp, b_comp, chi_comp = self.e_arrow.square(img_comp)
            _, b_tgt, chi_tgt = self.e_arrow.square(img_tgt)
            c_m = self.chosen[cat.src1[sid1]].leg
            kappa = solve_rwhisker(t, c_m, b_comp, b_tgt,
                                   t.vc(chi_tgt, t.inv(chi_comp)))
            compositor[(sid2, sid1)] = ArrowTwoCategory.pair_id(
                img_comp, img_tgt, t.id2[v_comp], kappa)

        return PseudoFunctor(source=cat, target=self.e_arrow.cat,
                             ob=ob, one=one, two=two, compositor=compositor)


def fs_from_ideal(t: TwoCategory, n: TwoIdeal, cap: int | None = None
                  ) -> tuple[FactorizationSystem, PseudoFunctor,
                             PseudoFunctor, PseudoNatural, PseudoNatural]:
    """Build the factorization-system bundle out of ideal-side exactness
    data: left class all verified cokernel legs, right class all verified
    kernel legs, chosen factorizations by first search hit, the kernel and
    cokernel functors between the two pseudo-arrow 2-categories, and the
    unit and counit exhibiting them as a biequivalence over the base.

    Requires the ideal-side conditions to hold; a missing kernel, cokernel
    or factorization raises :class:`InputError` naming the gap.
    """
    check_ideal_shape(t, n)
    budget = Budget(cap, "fs_from_ideal")
    kernels = kernel_presentations_by_arrow(t, n, _budget=budget)
    cokernels = cokernel_presentations_by_arrow(t, n, _budget=budget)
    for f in t.one_ids:
        if not kernels[f]:
            raise InputError(f"precondition failure: no verified kernel "
                             f"for {f}")
        if not cokernels[f]:
            raise InputError(f"precondition failure: no verified cokernel "
                             f"for {f}")
    chosen_kernel = {f: kernels[f][0] for f in t.one_ids}
    chosen_cokernel = {f: cokernels[f][0] for f in t.one_ids}
    kernel_legs = tuple(sorted(
        {p.leg for f in t.one_ids for p in kernels[f]}, key=natural_key))
    cokernel_legs = tuple(sorted(
        {p.leg for f in t.one_ids for p in cokernels[f]}, key=natural_key))

    factorization: dict[str, tuple[str, str, str]] = {}
    for f in t.one_ids:
        entry = None
        for e in cokernel_legs:
            if t.src1[e] != t.src1[f]:
                continue
            for m in kernel_legs:
                if t.src1[m] != t.tgt1[e] or t.tgt1[m] != t.tgt1[f]:
                    continue
                isos = t.iso2(f, t.cmp1(m, e))
                if isos:
                    entry = (e, m, isos[0])
                    break
            if entry:
                break
        if entry is None:
            raise InputError(f"precondition failure: {f} does not factor "
                             f"as a cokernel leg followed by a kernel leg")
        factorization[f] = entry
    fs = FactorizationSystem(left_class=cokernel_legs,
                             right_class=kernel_legs,
                             factorization=factorization)

    e_arrow = arrow_subcat(t, cokernel_legs)
    m_arrow = arrow_subcat(t, kernel_legs)
    k = _KernelFunctorBuilder(t, n, e_arrow, m_arrow, chosen_kernel).build()
    c = _CokernelFunctorBuilder(t, n, m_arrow, e_arrow,
                                chosen_cokernel).build()
    eta = _unit(t, n, e_arrow, k, c, chosen_kernel, chosen_cokernel,
                kernels, cokernels)
    epsilon = _counit(t, n, m_arrow, k, c, chosen_kernel, chosen_cokernel,
                      kernels, cokernels)
    return fs, k, c, eta, epsilon


def _unit(t: TwoCategory, n: TwoIdeal, e_arrow: ArrowTwoCategory,
          k: PseudoFunctor, c: PseudoFunctor,
          chosen_kernel: dict[str, KernelPresentation],
          chosen_cokernel: dict[str, CokernelPresentation],
          kernels, cokernels) -> PseudoNatural:
    """The unit: at each left-class member ``e``, the comparison square from
    ``e`` to the chosen cokernel of its chosen kernel, induced by ``e``'s
    own presentation as a cokernel of its kernel."""
    cat = e_arrow.cat
    ck = compose_pseudofunctors(c, k)
    component: dict[str, str] = {}
    for e in e_arrow.members:
        k_e = chosen_kernel[e].leg
        own = _first_with_leg(cokernels[k_e], e)
        if own is None:
            raise InputError(f"precondition failure: {e} is not exhibited "
                             f"as a cokernel of its kernel {k_e}")
        target_pres = chosen_cokernel[k_e]
        u_prime, gamma = cokernel_factor(t, n, own, target_pres.leg,
                                         target_pres.structure)
        component[e] = ArrowTwoCategory.square_id(
            e, target_pres.leg, t.id1[t.src1[e]], u_prime, gamma)
        assert ck.ob[e] == target_pres.leg

    structure: dict[str, str] = {}
    identity_squares = set(cat.id1.values())
    for sid in cat.one_ids:
        e, e2 = cat.src1[sid], cat.tgt1[sid]
        if sid in identity_squares:
            structure[sid] = cat.id2[component[e]]
            continue
        lhs = cat.comp1[(ck.one[sid], component[e])]
        rhs = cat.comp1[(component[e2], sid)]
        a_l, b_l, phi_l = e_arrow.square(lhs)
        _, b_r, phi_r = e_arrow.square(rhs)
        tau = solve_rwhisker(t, e, b_l, b_r, t.vc(phi_r, t.inv(phi_l)))
        structure[sid] = ArrowTwoCategory.pair_id(lhs, rhs, t.id2[a_l], tau)

    return PseudoNatural(source_functor=identity_pseudofunctor(cat),
                         target_functor=ck, component=component,
                         structure=structure, claims_equivalences=True)


def _counit(t: TwoCategory, n: TwoIdeal, m_arrow: ArrowTwoCategory,
            k: PseudoFunctor, c: PseudoFunctor,
            chosen_kernel: dict[str, KernelPresentation],
            chosen_cokernel: dict[str, CokernelPresentation],
            kernels, cokernels) -> PseudoNatural:
    """The counit: at each right-class member ``m``, the comparison square
    from the chosen kernel of its chosen cokernel down to ``m``, induced by
    ``m``'s own presentation as a kernel of its cokernel."""
    cat = m_arrow.cat
    kc = compose_pseudofunctors(k, c)
    component: dict[str, str] = {}
    for m in m_arrow.members:
        c_m = chosen_cokernel[m].leg
        own = _first_with_leg(kernels[c_m], m)
        if own is None:
            raise InputError(f"precondition failure: {m} is not exhibited "
                             f"as a kernel of its cokernel {c_m}")
        source_pres = chosen_kernel[c_m]
        u_hat, gamma = kernel_factor(t, n, own, source_pres.leg,
                                     source_pres.structure)
        component[m] = ArrowTwoCategory.square_id(
            source_pres.leg, m, u_hat, t.id1[t.tgt1[m]], t.inv(gamma))
        assert kc.ob[m] == source_pres.leg

    structure: dict[str, str] = {}
    identity_squares = set(cat.id1.values())
    for sid in cat.one_ids:
        m, m2 = cat.src1[sid], cat.tgt1[sid]
        if sid in identity_squares:
            structure[sid] = cat.id2[component[m]]
            continue
        lhs = cat.comp1[(sid, component[m])]
        rhs = cat.comp1[(component[m2], kc.one[sid])]
        u_l, v_l, phi_l = m_arrow.square(lhs)
        u_r, _, phi_r = m_arrow.square(rhs)
        sigma = solve_lwhisker(t, m2, u_l, u_r, t.vc(t.inv(phi_r), phi_l))
        structure[sid] = ArrowTwoCategory.pair_id(lhs, rhs, sigma,
                                                  t.id2[v_l])

    return PseudoNatural(source_functor=kc,
                         target_functor=identity_pseudofunctor(cat),
                         component=component, structure=structure,
                         claims_equivalences=True)


# ---------------------------------------------------------------------------
# construction: from a factorization system to an ideal
# ---------------------------------------------------------------------------

def ideal_from_fs(t: TwoCategory, fs: FactorizationSystem,
                  k: PseudoFunctor) -> TwoIdeal:
    """Rebuild the ideal out of a factorization-system bundle: null 1-cells
    are those factoring on the nose through the kernel of the identity at
    their target, null 2-cells those that whisker-factor through the same
    leg, and replacement pastes the kernel functor's image of the
    conjugation square at the identity."""
    check_fs_shape(t, fs)
    e_arrow = arrow_subcat(t, fs.left_class)
    m_arrow = arrow_subcat(t, fs.right_class)
    if k.source != e_arrow.cat or k.target != m_arrow.cat:
        raise InputError("the kernel functor is not indexed by the "
                         "pseudo-arrow 2-categories of the two classes")
    members = set(e_arrow.members)
    for x in t.objects:
        if t.id1[x] not in members:
            raise InputError(f"identity of {x} is not in the left class; "
                             f"its kernel object is unavailable")
    k_id = {x: k.ob[t.id1[x]] for x in t.objects}

    factors: dict[str, list[str]] = {}
    null1: list[str] = []
    for f in t.one_ids:
        kb = k_id[t.tgt1[f]]
        found = [nbar for nbar in t.hom1(t.src1[f], t.src1[kb])
                 if t.cmp1(kb, nbar) == f]
        if found:
            null1.append(f)
            factors[f] = found
    null1_set = set(null1)

    null2: list[str] = []
    for mu in t.two_ids:
        lo, hi = t.src2[mu], t.tgt2[mu]
        if lo not in null1_set or hi not in null1_set:
            continue
        kb = k_id[t.tgt1[lo]]
        if any(t.lw(kb, mubar) == mu
               for nbar in factors[lo]
               for nbar2 in factors[hi]
               for mubar in t.hom2(nbar, nbar2)):
            null2.append(mu)

    replacement: dict[tuple[str, str, str], tuple[str, str]] = {}
    for nl in null1:
        x, y = t.src1[nl], t.tgt1[nl]
        nbar = factors[nl][0]
        for a in t.one_ids:
            if t.tgt1[a] != x:
                continue
            na = t.cmp1(nbar, a)
            for b in t.one_ids:
                if t.src1[b] != y:
                    continue
                sq = ArrowTwoCategory.square_id(
                    t.id1[y], t.id1[t.tgt1[b]], b, b, t.id2[b])
                w_hat, _, psi = m_arrow.square(k.one[sq])
                kb2 = k_id[t.tgt1[b]]
                replacement[(a, nl, b)] = (
                    t.cmp1_chain(kb2, w_hat, na),
                    t.rw(t.inv(psi), na))
    return TwoIdeal(null_one_cells=tuple(null1),
                    null_two_cells=tuple(null2),
                    replacement=replacement)


# ---------------------------------------------------------------------------
# three-pieces factorization of one 1-cell
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ThreePieces:
    """The cokernel--middle--kernel factorization of one 1-cell, with both
    construction routes and the connecting 2-cell between the two middles.

    ``composite_iso: arrow ⇒ last.leg ∘ middle ∘ first.leg`` is the
    factorization itself; ``mu``, ``xi`` are the route that applies the
    cokernel's universal property first, ``lam``, ``xi_prime`` the dual
    route, and ``connecting: middle_dual ⇒ middle`` reconciles them.
    """

    arrow: str
    kernel: KernelPresentation
    cokernel: CokernelPresentation
    first: CokernelPresentation
    last: KernelPresentation
    u: str
    mu: str
    middle: str
    xi: str
    composite_iso: str
    v: str
    lam: str
    middle_dual: str
    xi_prime: str
    connecting: str


def three_pieces(t: TwoCategory, n: TwoIdeal, f: str,
                 closedness: str = "closed",
                 cap: int | None = None) -> ThreePieces:
    """Factor ``f`` as (cokernel of its kernel) then a middle piece then
    (kernel of its cokernel).

    The middle piece exists because the cokernel of the kernel coreflects
    null morphisms — full closedness of the ideal.  Weak coreflection is
    not enough for this construction, so ``closedness="weak"`` refuses
    explicitly rather than attempt it.
    """
    if closedness == "weak":
        raise InputError(
            "the middle piece needs the cokernel of the kernel to coreflect "
            "null morphisms; weak coreflection does not suffice, so the "
            "construction refuses closedness='weak'")
    if closedness != "closed":
        raise InputError(f"unknown closedness grade {closedness!r}")
    if f not in t.src1:
        raise InputError(f"unknown 1-cell {f}")
    budget = Budget(cap, "three_pieces")

    kf_all = two_kernels(t, n, f, _budget=budget)
    if not kf_all:
        raise InputError(f"no verified kernel for {f}")
    pres_kf = kf_all[0]
    first_all = two_cokernels(t, n, pres_kf.leg, _budget=budget)
    if not first_all:
        raise InputError(f"no verified cokernel for the kernel leg "
                         f"{pres_kf.leg}")
    first = first_all[0]
    cf_all = two_cokernels(t, n, f, _budget=budget)
    if not cf_all:
        raise InputError(f"no verified cokernel for {f}")
    pres_cf = cf_all[0]
    last_all = two_kernels(t, n, pres_cf.leg, _budget=budget)
    if not last_all:
        raise InputError(f"no verified kernel for the cokernel leg "
                         f"{pres_cf.leg}")
    last = last_all[0]

    c, kk = first.leg, last.leg

    # route one: cokernel universal property first, then coreflect, then
    # the kernel universal property
    u, mu = cokernel_factor(t, n, first, f, pres_kf.structure)
    chi = t.vc(pres_cf.structure, t.lw(pres_cf.leg, t.inv(mu)))
    concl = _reflection_conclusion(dualize(t), dual_ideal(n), c,
                                   t.cmp1(pres_cf.leg, u), chi)
    if concl is None:
        raise InputError(
            f"the cokernel {c} of the kernel of {f} does not coreflect the "
            f"comparison to a null morphism; the ideal is not closed enough "
            f"for the middle piece")
    _, psi = concl
    z, xi = kernel_factor(t, n, last, u, psi)
    composite = t.vc(t.rw(xi, c), mu)

    # route two: kernel universal property first, then reflect, then the
    # cokernel universal property
    v, lam = kernel_factor(t, n, last, f, pres_cf.structure)
    delta = t.vc(pres_kf.structure, t.rw(t.inv(lam), pres_kf.leg))
    concl2 = _reflection_conclusion(t, n, kk, t.cmp1(v, pres_kf.leg), delta)
    if concl2 is None:
        raise InputError(
            f"the kernel {kk} of the cokernel of {f} does not reflect the "
            f"comparison to a null morphism; the ideal is not closed enough "
            f"for the dual middle piece")
    _, sigma = concl2
    z2, xi2 = cokernel_factor(t, n, first, v, sigma)

    # the two middles agree up to a unique invertible 2-cell
    needed = t.vc_chain(t.rw(xi, c), mu, t.inv(lam),
                        t.inv(t.lw(kk, xi2)))
    whiskered = solve_rwhisker(t, c, t.cmp1(kk, z2), t.cmp1(kk, z), needed)
    eta = solve_lwhisker(t, kk, z2, z, whiskered)

    return ThreePieces(arrow=f, kernel=pres_kf, cokernel=pres_cf,
                       first=first, last=last, u=u, mu=mu, middle=z, xi=xi,
                       composite_iso=composite, v=v, lam=lam,
                       middle_dual=z2, xi_prime=xi2, connecting=eta)
