"""Exact growth computations for Laurent polynomial rings and the Ore extensions K_n[x, delta]."""

from .errors import (
    AmbientMismatch,
    DegreeUnstable,
    DerivationMismatch,
    ExpressionSyntaxError,
    FieldMismatch,
    GkdimError,
    IndexOutOfRange,
    InsufficientData,
    InvalidDerivation,
    NegativeOrePower,
    ResourceLimit,
    UnstableInput,
)
from .growth import UNSTABLE, DimensionSequence, GrowthReport, HilbertPolynomial, finite_difference_degree, fit_hilbert_polynomial, gk_estimate
from .laurent import DerivationSpec, LaurentPoly, LaurentRing, apply_derivation, filtration_dim_K, filtration_level, partial_derivative
from .modpres import InducedModule, ModulePresentation, induce, induced_filtration_dims, module_filtration_dims
from .ore import OreElement, OreRing, ore_dim_closed_form, ore_dim_oracle, ore_mul
from .parser import parse_expression
from .scalars import QQ, Field, RationalFunction
from .simplicity import AuditVerdict, SimplicityStatus, check_simplicity, dichotomy_audit
from .torsion import LaurentIdealPresentation, brookes_groves_t, criticality_witness, eliminate

__version__ = "0.1.0"

__all__ = [
    "AmbientMismatch",
    "AuditVerdict",
    "DegreeUnstable",
    "DerivationMismatch",
    "DerivationSpec",
    "DimensionSequence",
    "ExpressionSyntaxError",
    "Field",
    "FieldMismatch",
    "GkdimError",
    "GrowthReport",
    "HilbertPolynomial",
    "IndexOutOfRange",
    "InducedModule",
    "InsufficientData",
    "InvalidDerivation",
    "LaurentIdealPresentation",
    "LaurentPoly",
    "LaurentRing",
    "ModulePresentation",
    "NegativeOrePower",
    "OreElement",
    "OreRing",
    "QQ",
    "RationalFunction",
    "ResourceLimit",
    "SimplicityStatus",
    "UNSTABLE",
    "UnstableInput",
    "apply_derivation",
    "brookes_groves_t",
    "check_simplicity",
    "criticality_witness",
    "dichotomy_audit",
    "eliminate",
    "filtration_dim_K",
    "filtration_level",
    "finite_difference_degree",
    "fit_hilbert_polynomial",
    "gk_estimate",
    "induce",
    "induced_filtration_dims",
    "module_filtration_dims",
    "ore_dim_closed_form",
    "ore_dim_oracle",
    "ore_mul",
    "parse_expression",
    "partial_derivative",
]
