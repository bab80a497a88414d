"""Verifier and calculator for kernel-cokernel exactness structure on
finite strict 2-categories.

Everything operates on explicit finite presentations: 2-categories as
total composition tables, null structures as listed cell classes, and
universal properties checked by exhaustive search.  Every check returns
a :class:`Certificate` carrying either a witness or a replayable
counterexample.
"""

from .closure import (
    coreflects_null_2cells,
    coreflects_null_morphisms,
    is_closed_ideal,
    is_weakly_closed,
    reflects_null_2cells,
    reflects_null_morphisms,
    weak_closure_triple,
    weakly_coreflects,
    weakly_reflects,
)
from .core import (
    Budget,
    CapExceeded,
    Certificate,
    InputError,
    TwoCategory,
    check_shape,
    dualize,
    equivalences,
    is_cofaithful,
    is_equivalence,
    is_faithful,
    iso_two_cells,
    natural_key,
    paste,
    replay_two_category_counterexample,
    solve_lwhisker,
    solve_rwhisker,
    validate_two_category,
)
from .exact import (
    ExactnessReport,
    ThreePieces,
    check_grandis_i,
    check_grandis_ii,
    check_puppe,
    fs_from_ideal,
    ideal_from_fs,
    three_pieces,
)
from .factor import (
    ArrowTwoCategory,
    FactorizationSystem,
    arrow_subcat,
    check_fs_shape,
    check_weak_two_fibration,
    fill_ins,
    is_proper_11,
    square_two_cells,
    squares_between,
    validate_fs,
    validate_rofs,
)
from .formats import (
    Document,
    canonicalize,
    document_to_finite_category,
    document_to_fs,
    document_to_one_ideal,
    document_to_pseudofunctor,
    document_to_pseudonatural,
    document_to_two_category,
    document_to_two_ideal,
    document_to_witness_bundle,
    finite_category_to_document,
    fs_to_document,
    one_ideal_to_document,
    parse,
    pseudofunctor_to_document,
    pseudonatural_to_document,
    serialize,
    two_category_to_document,
    two_ideal_to_document,
    witness_bundle_to_document,
)
from .gen import (
    MUTATION_OPERATORS,
    chaotic_enrichment,
    cyclic_tower,
    locally_discrete,
    mutate,
    partial_bijections,
    pointed_sets,
    terminal_category,
)
from .ideal import (
    TwoIdeal,
    bizero_objects,
    canonical_zero_ideal,
    check_ideal_shape,
    dual_ideal,
    is_strong_bizero,
    maximal_two_ideal,
    null_objects,
    replay_two_ideal_counterexample,
    validate_two_ideal,
)
from .idealeq import (
    IdealEquivalenceWitness,
    check_witness,
    find_equivalence_witness,
    ideals_equivalent,
    transfer_cokernel,
    transfer_kernel,
)
from .limits import (
    CokernelPresentation,
    InserterPresentation,
    KernelPresentation,
    biisoinserter,
    cokernel_descend,
    cokernel_factor,
    cokernel_presentations_by_arrow,
    is_biisoinserter,
    is_two_cokernel,
    is_two_kernel,
    kernel_descend,
    kernel_factor,
    kernel_presentations_by_arrow,
    kernel_presentations_equivalent,
    two_cokernels,
    two_kernels,
)
from .onecat import (
    FiniteCategory,
    OneIdeal,
    closedness_triple_1cat,
    cokernel_legs_1cat,
    cokernels_1cat,
    grandis_exact_1cat,
    kernel_legs_1cat,
    kernels_1cat,
    null_objects_1cat,
    puppe_exact_1cat,
    validate_category,
    validate_one_ideal,
    zero_ideal_1cat,
    zero_objects_1cat,
)
from .pseudo import (
    Modification,
    PseudoFunctor,
    PseudoNatural,
    compose_pseudofunctors,
    identity_pseudofunctor,
    is_biequivalence_over_base,
    pseudofunctors_equal,
    strict_two_functor,
    validate_modification,
    validate_pseudofunctor,
    validate_pseudonatural,
)

__version__ = "0.1.0"

__all__ = [
    "ArrowTwoCategory",
    "Budget",
    "CapExceeded",
    "Certificate",
    "CokernelPresentation",
    "Document",
    "ExactnessReport",
    "FactorizationSystem",
    "FiniteCategory",
    "IdealEquivalenceWitness",
    "InputError",
    "InserterPresentation",
    "KernelPresentation",
    "MUTATION_OPERATORS",
    "Modification",
    "OneIdeal",
    "PseudoFunctor",
    "PseudoNatural",
    "ThreePieces",
    "TwoCategory",
    "TwoIdeal",
    "arrow_subcat",
    "biisoinserter",
    "bizero_objects",
    "canonical_zero_ideal",
    "canonicalize",
    "chaotic_enrichment",
    "check_fs_shape",
    "check_grandis_i",
    "check_grandis_ii",
    "check_ideal_shape",
    "check_puppe",
    "check_shape",
    "check_weak_two_fibration",
    "check_witness",
    "closedness_triple_1cat",
    "cokernel_descend",
    "cokernel_factor",
    "cokernel_legs_1cat",
    "cokernel_presentations_by_arrow",
    "cokernels_1cat",
    "compose_pseudofunctors",
    "coreflects_null_2cells",
    "coreflects_null_morphisms",
    "cyclic_tower",
    "document_to_finite_category",
    "document_to_fs",
    "document_to_one_ideal",
    "document_to_pseudofunctor",
    "document_to_pseudonatural",
    "document_to_two_category",
    "document_to_two_ideal",
    "document_to_witness_bundle",
    "dual_ideal",
    "dualize",
    "equivalences",
    "fill_ins",
    "find_equivalence_witness",
    "finite_category_to_document",
    "fs_from_ideal",
    "fs_to_document",
    "grandis_exact_1cat",
    "ideal_from_fs",
    "ideals_equivalent",
    "identity_pseudofunctor",
    "is_biequivalence_over_base",
    "is_biisoinserter",
    "is_closed_ideal",
    "is_cofaithful",
    "is_equivalence",
    "is_faithful",
    "is_proper_11",
    "is_strong_bizero",
    "is_two_cokernel",
    "is_two_kernel",
    "is_weakly_closed",
    "iso_two_cells",
    "kernel_descend",
    "kernel_factor",
    "kernel_legs_1cat",
    "kernel_presentations_by_arrow",
    "kernel_presentations_equivalent",
    "kernels_1cat",
    "locally_discrete",
    "maximal_two_ideal",
    "mutate",
    "natural_key",
    "null_objects",
    "null_objects_1cat",
    "one_ideal_to_document",
    "parse",
    "partial_bijections",
    "paste",
    "pointed_sets",
    "pseudofunctor_to_document",
    "pseudofunctors_equal",
    "pseudonatural_to_document",
    "puppe_exact_1cat",
    "reflects_null_2cells",
    "reflects_null_morphisms",
    "replay_two_category_counterexample",
    "replay_two_ideal_counterexample",
    "serialize",
    "solve_lwhisker",
    "solve_rwhisker",
    "square_two_cells",
    "squares_between",
    "strict_two_functor",
    "terminal_category",
    "three_pieces",
    "transfer_cokernel",
    "transfer_kernel",
    "two_category_to_document",
    "two_cokernels",
    "two_ideal_to_document",
    "two_kernels",
    "validate_category",
    "validate_fs",
    "validate_modification",
    "validate_one_ideal",
    "validate_pseudofunctor",
    "validate_pseudonatural",
    "validate_rofs",
    "validate_two_category",
    "validate_two_ideal",
    "weak_closure_triple",
    "weakly_coreflects",
    "weakly_reflects",
    "witness_bundle_to_document",
    "zero_ideal_1cat",
    "zero_objects_1cat",
]
