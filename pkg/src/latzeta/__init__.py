"""Exact arithmetic for Dirichlet series counting sublattices of positive
definite binary quadratic lattices up to proper or full isometry."""

from .classgroup import ClassGroup, ClassSubgroups, principal_form, reduced_primitive_forms, subgroups
from .formulas import (
    EulerReport,
    ResidueReport,
    ZetaBundle,
    class_sets,
    euler_product_holds,
    gl_zeta,
    local_factor,
    psi_equation_check,
    psi_series,
    refl_term,
    residue_diagnostic,
    rot_term,
    sl_zeta,
)
from .qform import (
    Form,
    canonical_gl,
    canonical_sl,
    content,
    discriminant,
    is_positive_definite,
    is_primitive,
    is_reduced,
    is_unimodular,
    reduce_form,
    transform,
)
from .quadfield import (
    FieldData,
    PrimeSplitInfo,
    field_data,
    is_fundamental_discriminant,
    prime_form,
    ramified_factor_form,
    ramified_primes,
    split_type,
)
from .series import Series, delta, indicator, one, prime_product, zeta, zeta_F, zeta_double, zeta_shift
from .sublattice import (
    CoefficientTable,
    brute_coefficients,
    counts_for_index,
    enumerate_hnf,
    partial_sums,
    ring_stable_counts,
    tau_closure,
)

__all__ = [
    "ClassGroup",
    "ClassSubgroups",
    "CoefficientTable",
    "EulerReport",
    "FieldData",
    "Form",
    "PrimeSplitInfo",
    "ResidueReport",
    "Series",
    "ZetaBundle",
    "brute_coefficients",
    "canonical_gl",
    "canonical_sl",
    "class_sets",
    "content",
    "counts_for_index",
    "delta",
    "discriminant",
    "enumerate_hnf",
    "euler_product_holds",
    "field_data",
    "gl_zeta",
    "indicator",
    "is_fundamental_discriminant",
    "is_positive_definite",
    "is_primitive",
    "is_reduced",
    "is_unimodular",
    "local_factor",
    "one",
    "partial_sums",
    "prime_form",
    "prime_product",
    "principal_form",
    "psi_equation_check",
    "psi_series",
    "ramified_factor_form",
    "ramified_primes",
    "reduce_form",
    "reduced_primitive_forms",
    "refl_term",
    "residue_diagnostic",
    "ring_stable_counts",
    "rot_term",
    "sl_zeta",
    "split_type",
    "subgroups",
    "tau_closure",
    "transform",
    "zeta",
    "zeta_F",
    "zeta_double",
    "zeta_shift",
]

__version__ = "0.1.0"
