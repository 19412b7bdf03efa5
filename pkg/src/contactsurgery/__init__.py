"""Exact-arithmetic toolkit for contact surgery diagrams on Seifert fibered spaces.

Everything is computed over the rationals with fractions.Fraction; no
floating point is used anywhere.
"""

from .contfrac import (
    NegContinuedFraction,
    neg_cf_expand,
    neg_cf_value,
    stabilization_counts,
)
from .legendrian import (
    LegendrianComponent,
    PlusMinusDiagram,
    StabilizationChoice,
    convert,
    enumerate_choices,
    one_over_k_to_plus_ones,
    reduce_positive,
    smooth_coefficient,
)
from .seifert import (
    OrbifoldLineBundle,
    SeifertInvariants,
    canonical_bundle,
    coefficients_from_seifert,
    d_range,
    degree,
    normalize,
    rolfsen_twist,
    seifert_from_coefficients,
)
from .intmat import SmithForm, determinant, smith_normal_form
from .homology import (
    FirstHomology,
    IntegralPresentation,
    SpinCClass,
    Witness,
    c1_class,
    check_admissible,
    distinct_witness,
    homology,
    mu_order,
    presentation,
    spinc_offset,
)
from .gauge import (
    D3Invariant,
    DedekindContext,
    MoyVerdict,
    d3_canonical,
    d3_contact,
    dedekind_context,
    degree_representative,
    fillability_verdict,
    moy_check,
    omega_red_closed,
    omega_red_long,
)
from .lattice import (
    DiagonalEmbedding,
    Lattice,
    embeds_in_diagonal,
    is_negative_definite,
    lambda_q,
    nonfillability_obstruction,
)

__version__ = "0.1.0"

__all__ = [
    "NegContinuedFraction",
    "neg_cf_expand",
    "neg_cf_value",
    "stabilization_counts",
    "LegendrianComponent",
    "PlusMinusDiagram",
    "StabilizationChoice",
    "convert",
    "enumerate_choices",
    "one_over_k_to_plus_ones",
    "reduce_positive",
    "smooth_coefficient",
    "OrbifoldLineBundle",
    "SeifertInvariants",
    "canonical_bundle",
    "coefficients_from_seifert",
    "d_range",
    "degree",
    "normalize",
    "rolfsen_twist",
    "seifert_from_coefficients",
    "SmithForm",
    "determinant",
    "smith_normal_form",
    "FirstHomology",
    "IntegralPresentation",
    "SpinCClass",
    "Witness",
    "c1_class",
    "check_admissible",
    "distinct_witness",
    "homology",
    "mu_order",
    "presentation",
    "spinc_offset",
    "D3Invariant",
    "DedekindContext",
    "MoyVerdict",
    "d3_canonical",
    "d3_contact",
    "dedekind_context",
    "degree_representative",
    "fillability_verdict",
    "moy_check",
    "omega_red_closed",
    "omega_red_long",
    "DiagonalEmbedding",
    "Lattice",
    "embeds_in_diagonal",
    "is_negative_definite",
    "lambda_q",
    "nonfillability_obstruction",
    "__version__",
]
