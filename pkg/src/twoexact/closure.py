"""Reflection and coreflection of null cells along (co)kernel legs, their
weak variants, and closedness of an ideal.

A 1-cell ``k: K → A`` *reflects null 1-cells* when every ``s: D → K`` whose
composite ``k∘s`` is invertibly null is itself invertibly null, coherently:
the comparison ``ν∘(k⋆ψ)∘δ⁻¹`` must land in the null 2-cell class.  It
*reflects null 2-cells* when 2-cells between null 1-cells whose conjugated
whiskering is null are null.  The weak variant restricts the 1-cell
quantifier to cones compatible with a given kernel presentation's structure
cell.  An ideal is closed when every verified kernel leg reflects (both
flavours) and every cokernel leg coreflects; weakly closed replaces strong
reflection with the presentation-relative weak one.

``weak_closure_triple`` evaluates the three equivalent readings of weak
closedness (kernels weakly reflect / null-isomorphic 1-cells factor through a
null object / cokernels weakly coreflect) separately, so tests can assert
the equivalence rather than assume it.
"""
from __future__ import annotations

from .core import (
    Budget, CapExceeded, Certificate, InputError, TwoCategory, _fail,
    _inconclusive, dualize,
)
from .ideal import TwoIdeal, dual_ideal, null_objects
from .limits import (
    CokernelPresentation, KernelPresentation, _to_dual_kernel,
    cokernel_presentations_by_arrow, is_two_kernel,
    kernel_presentations_by_arrow,
)


def _reflection_conclusion(t: TwoCategory, n: TwoIdeal, k: str, s: str,
                           delta: str) -> tuple[str, str] | None:
    """Search a null ``ψ̂`` parallel to ``s`` and invertible ``ψ: s ⇒ ψ̂``
    making ``ν∘(k⋆ψ)∘δ⁻¹`` an invertible null 2-cell; ``δ: k∘s ⇒ null``."""
    d_obj, k_obj = t.src1[s], t.tgt1[s]
    idd = t.id1[d_obj]
    for psi_hat in t.hom1(d_obj, k_obj):
        if psi_hat not in n.null1:
            continue
        for psi in t.iso2(s, psi_hat):
            _, nu = n.repl(idd, psi_hat, k)
            chi = t.vc_chain(nu, t.lw(k, psi), t.inv(delta))
            if n.is_invertible_null2(t, chi):
                return psi_hat, psi
    return None


def reflects_null_morphisms(t: TwoCategory, n: TwoIdeal, k: str,
                            cap: int | None = None,
                            _budget: Budget | None = None) -> Certificate:
    """Whether ``k`` reflects null 1-cells: every ``s`` with an invertible
    ``δ: k∘s ⇒ null`` is invertibly null, with a coherent comparison."""
    name = "reflects_null_morphisms"
    if k not in t.src1:
        raise InputError(f"unknown 1-cell {k}")
    budget = _budget if _budget is not None else Budget(cap, name)
    k_src, k_tgt = t.src1[k], t.tgt1[k]
    try:
        for d_obj in t.objects:
            for s in t.hom1(d_obj, k_src):
                ks = t.cmp1(k, s)
                for nc in t.hom1(d_obj, k_tgt):
                    if nc not in n.null1:
                        continue
                    for delta in t.iso2(ks, nc):
                        budget.tick()
                        if _reflection_conclusion(t, n, k, s, delta) is None:
                            return _fail(name, "reflect-1cell",
                                         leg=k, cone=s, null=nc, delta=delta)
    except CapExceeded as exc:
        if _budget is not None:
            raise
        return _inconclusive(name, exc)
    return Certificate(name, "pass", witness={"leg": k})


def reflects_null_2cells(t: TwoCategory, n: TwoIdeal, k: str,
                         cap: int | None = None,
                         _budget: Budget | None = None) -> Certificate:
    """Whether ``k`` reflects null 2-cells: for ``μ`` between null 1-cells
    into the source of ``k``, if the ν-conjugate of ``k⋆μ`` is null then
    ``μ`` is null."""
    name = "reflects_null_2cells"
    if k not in t.src1:
        raise InputError(f"unknown 1-cell {k}")
    budget = _budget if _budget is not None else Budget(cap, name)
    k_src = t.src1[k]
    try:
        for mu, s, s_prime in t.two_cells:
            if s not in n.null1 or s_prime not in n.null1:
                continue
            if t.tgt1[s] != k_src:
                continue
            budget.tick()
            idd = t.id1[t.src1[s]]
            _, nu_s = n.repl(idd, s, k)
            _, nu_sp = n.repl(idd, s_prime, k)
            conj = t.vc_chain(nu_sp, t.lw(k, mu), t.inv(nu_s))
            if conj in n.null2 and mu not in n.null2:
                return _fail(name, "reflect-2cell", leg=k, two_cell=mu,
                             src=s, tgt=s_prime)
    except CapExceeded as exc:
        if _budget is not None:
            raise
        return _inconclusive(name, exc)
    return Certificate(name, "pass", witness={"leg": k})


def _weak_hypothesis(t: TwoCategory, n: TwoIdeal, pres: KernelPresentation,
                     s: str, nc: str, delta: str) -> str:
    """The compatibility pasting restricting the weak-reflection quantifier:
    ``ν∘(α⋆s)∘(f⋆δ⁻¹)∘ν⁻¹`` between replacements of ``f∘nc`` and
    ``n_f∘s``."""
    f, alpha = pres.arrow, pres.structure
    idb = t.id1[t.tgt1[f]]
    idd = t.id1[t.src1[s]]
    _, nu_side = n.repl(s, pres.null_cell, idb)
    _, nu_cone = n.repl(idd, nc, f)
    return t.vc_chain(
        nu_side,
        t.rw(alpha, s),
        t.lw(f, t.inv(delta)),
        t.inv(nu_cone),
    )


def weakly_reflects(t: TwoCategory, n: TwoIdeal, pres: KernelPresentation,
                    cap: int | None = None, _budget: Budget | None = None,
                    _verified: bool = False) -> Certificate:
    """As :func:`reflects_null_morphisms` for the presentation's leg, but
    quantifying only over ``(s, null, δ)`` whose compatibility pasting with
    the presentation's structure cell is an invertible null 2-cell."""
    name = "weakly_reflects"
    if not _verified and not is_two_kernel(t, n, pres, cap).ok:
        raise InputError("presentation is not a verified kernel")
    budget = _budget if _budget is not None else Budget(cap, name)
    k = pres.leg
    k_src, k_tgt = t.src1[k], t.tgt1[k]
    try:
        for d_obj in t.objects:
            for s in t.hom1(d_obj, k_src):
                ks = t.cmp1(k, s)
                for nc in t.hom1(d_obj, k_tgt):
                    if nc not in n.null1:
                        continue
                    for delta in t.iso2(ks, nc):
                        budget.tick()
                        hyp = _weak_hypothesis(t, n, pres, s, nc, delta)
                        if not n.is_invertible_null2(t, hyp):
                            continue
                        if _reflection_conclusion(t, n, k, s, delta) is None:
                            return _fail(name, "weak-reflect-1cell",
                                         leg=k, cone=s, null=nc, delta=delta)
    except CapExceeded as exc:
        if _budget is not None:
            raise
        return _inconclusive(name, exc)
    return Certificate(name, "pass", witness={
        "leg": k, "arrow": pres.arrow, "structure": pres.structure})


def _rename(cert: Certificate, name: str) -> Certificate:
    return Certificate(name, cert.status, cert.witness, cert.counterexample,
                       cert.detail)


def coreflects_null_morphisms(t: TwoCategory, n: TwoIdeal, e: str,
                              cap: int | None = None) -> Certificate:
    """Dual of :func:`reflects_null_morphisms` for a 1-cell out of an
    object."""
    return _rename(reflects_null_morphisms(dualize(t), dual_ideal(n), e, cap),
                   "coreflects_null_morphisms")


def coreflects_null_2cells(t: TwoCategory, n: TwoIdeal, e: str,
                           cap: int | None = None) -> Certificate:
    """Dual of :func:`reflects_null_2cells`."""
    return _rename(reflects_null_2cells(dualize(t), dual_ideal(n), e, cap),
                   "coreflects_null_2cells")


def weakly_coreflects(t: TwoCategory, n: TwoIdeal, pres: CokernelPresentation,
                      cap: int | None = None,
                      _verified: bool = False) -> Certificate:
    """Dual of :func:`weakly_reflects` for a cokernel presentation."""
    cert = weakly_reflects(dualize(t), dual_ideal(n), _to_dual_kernel(pres),
                           cap, _verified=_verified)
    return _rename(cert, "weakly_coreflects")


def _leg_order(by_arrow: dict) -> tuple[str, ...]:
    """Presentation legs deduplicated, first appearance first."""
    seen: list[str] = []
    for presentations in by_arrow.values():
        for p in presentations:
            if p.leg not in seen:
                seen.append(p.leg)
    return tuple(seen)


def _missing(by_arrow: dict, name: str, clause: str) -> Certificate | None:
    for f, presentations in by_arrow.items():
        if not presentations:
            return _fail(name, clause, arrow=f)
    return None


def is_closed_ideal(t: TwoCategory, n: TwoIdeal,
                    cap: int | None = None) -> Certificate:
    """Every verified kernel leg reflects null 1-cells and null 2-cells, and
    every verified cokernel leg coreflects both; fails early when some
    1-cell has no kernel or no cokernel."""
    name = "is_closed_ideal"
    budget = Budget(cap, name)
    dual_t, dual_n = dualize(t), dual_ideal(n)
    try:
        kernels = kernel_presentations_by_arrow(t, n, _budget=budget)
        bad = _missing(kernels, name, "missing-kernel")
        if bad is not None:
            return bad
        cokernels = cokernel_presentations_by_arrow(t, n, _budget=budget)
        bad = _missing(cokernels, name, "missing-cokernel")
        if bad is not None:
            return bad
        for k in _leg_order(kernels):
            for check in (reflects_null_morphisms, reflects_null_2cells):
                cert = check(t, n, k, _budget=budget)
                if not cert.ok:
                    return _fail(name, "kernel-leg-" + cert.counterexample["clause"],
                                 **cert.counterexample["cells"])
        for e in _leg_order(cokernels):
            for check in (reflects_null_morphisms, reflects_null_2cells):
                cert = check(dual_t, dual_n, e, _budget=budget)
                if not cert.ok:
                    return _fail(name, "cokernel-leg-" + cert.counterexample["clause"],
                                 **cert.counterexample["cells"])
    except CapExceeded as exc:
        return _inconclusive(name, exc)
    return Certificate(name, "pass", witness={
        "kernel_legs": list(_leg_order(kernels)),
        "cokernel_legs": list(_leg_order(cokernels))})


def is_weakly_closed(t: TwoCategory, n: TwoIdeal,
                     cap: int | None = None) -> Certificate:
    """Every verified kernel presentation weakly reflects and its leg
    reflects null 2-cells; dually for cokernel presentations."""
    name = "is_weakly_closed"
    budget = Budget(cap, name)
    dual_t, dual_n = dualize(t), dual_ideal(n)
    try:
        kernels = kernel_presentations_by_arrow(t, n, _budget=budget)
        bad = _missing(kernels, name, "missing-kernel")
        if bad is not None:
            return bad
        cokernels = cokernel_presentations_by_arrow(t, n, _budget=budget)
        bad = _missing(cokernels, name, "missing-cokernel")
        if bad is not None:
            return bad
        for presentations in kernels.values():
            for p in presentations:
                cert = weakly_reflects(t, n, p, _budget=budget, _verified=True)
                if not cert.ok:
                    return _fail(name, "kernel-" + cert.counterexample["clause"],
                                 **cert.counterexample["cells"])
        for k in _leg_order(kernels):
            cert = reflects_null_2cells(t, n, k, _budget=budget)
            if not cert.ok:
                return _fail(name, "kernel-leg-" + cert.counterexample["clause"],
                             **cert.counterexample["cells"])
        for presentations in cokernels.values():
            for p in presentations:
                cert = weakly_reflects(dual_t, dual_n, _to_dual_kernel(p),
                                       _budget=budget, _verified=True)
                if not cert.ok:
                    return _fail(name, "cokernel-" + cert.counterexample["clause"],
                                 **cert.counterexample["cells"])
        for e in _leg_order(cokernels):
            cert = reflects_null_2cells(dual_t, dual_n, e, _budget=budget)
            if not cert.ok:
                return _fail(name, "cokernel-leg-" + cert.counterexample["clause"],
                             **cert.counterexample["cells"])
    except CapExceeded as exc:
        return _inconclusive(name, exc)
    return Certificate(name, "pass", witness={
        "kernel_legs": list(_leg_order(kernels)),
        "cokernel_legs": list(_leg_order(cokernels))})


def _factors_through_null_object(t: TwoCategory, n: TwoIdeal, h: str,
                                 null_m: str, rho: str,
                                 budget: Budget) -> bool:
    """Search a null object ``(Z, ξ̂, ξ)`` and ``(x, y, γ: h ⇒ y∘x)`` whose
    comparison ``ν∘(y⋆ξ⋆x)∘γ∘ρ⁻¹``, running from the null 1-cell all the
    way to the null replacement, is an invertible null 2-cell."""
    a_obj, b_obj = t.src1[h], t.tgt1[h]
    for z, xhat, xi in null_objects(t, n):
        for x in t.hom1(a_obj, z):
            for y in t.hom1(z, b_obj):
                yx = t.cmp1(y, x)
                for gamma in t.iso2(h, yx):
                    budget.tick()
                    _, nu = n.repl(x, xhat, y)
                    chi = t.vc_chain(nu, t.lw(y, t.rw(xi, x)), gamma,
                                     t.inv(rho))
                    if n.is_invertible_null2(t, chi):
                        return True
    return False


def weak_closure_triple(t: TwoCategory, n: TwoIdeal,
                        cap: int | None = None) -> tuple[bool, bool, bool]:
    """The three equivalent readings of weak closedness, evaluated
    independently: (kernel presentations weakly reflect, 1-cells isomorphic
    to a null one factor through a null object, cokernel presentations
    weakly coreflect).  Raises :class:`CapExceeded` on budget overflow and
    :class:`InputError` when some 1-cell lacks a kernel or cokernel."""
    budget = Budget(cap, "weak_closure_triple")
    dual_t, dual_n = dualize(t), dual_ideal(n)
    kernels = kernel_presentations_by_arrow(t, n, _budget=budget)
    cokernels = cokernel_presentations_by_arrow(t, n, _budget=budget)
    for f in t.one_ids:
        if not kernels[f]:
            raise InputError(f"no kernel found for {f}")
        if not cokernels[f]:
            raise InputError(f"no cokernel found for {f}")

    b1 = all(
        weakly_reflects(t, n, p, _budget=budget, _verified=True).ok
        for presentations in kernels.values() for p in presentations)

    b2 = True
    for h in t.one_ids:
        for null_m in t.hom1(t.src1[h], t.tgt1[h]):
            if null_m not in n.null1:
                continue
            for rho in t.iso2(h, null_m):
                if not _factors_through_null_object(t, n, h, null_m, rho,
                                                    budget):
                    b2 = False
                    break
            else:
                continue
            break
        else:
            continue
        break

    b3 = all(
        weakly_reflects(dual_t, dual_n, _to_dual_kernel(p), _budget=budget,
                        _verified=True).ok
        for presentations in cokernels.values() for p in presentations)
    return b1, b2, b3
