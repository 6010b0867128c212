"""Rational maps between products of generalized Severi-Brauer varieties."""

from ._core import (
    AlgebraSpec,
    BrauerClass,
    BrauerGroupModel,
    Error,
    GSBFactor,
    GSBProduct,
    Instance,
    InvariantError,
    ModelMismatch,
    ParseError,
    PreconditionError,
    UnsupportedModel,
    class_exponent,
    classical_criterion,
    classify_single,
    combine,
    compare_families,
    dimension,
    equivalent,
    exists_rational_map,
    generic_index,
    has_rational_point_over,
    lemma_witness,
    motives_isomorphic,
    mu,
    prodexp_criterion,
    reduced_index,
    subgroup_generated,
    subgroups_equal,
    upper_motive,
    verify_examples,
    vp,
)

__all__ = [name for name in dir() if not name.startswith("_")]
