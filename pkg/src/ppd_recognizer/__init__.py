"""Primitive prime divisor elements and Monte Carlo recognition of classical groups."""

from .classical_groups import (
    Family,
    FormData,
    FormKind,
    GroupCase,
    GroupInput,
    Level,
    classical_group_order,
    group_order_gl,
    similitude_scalar,
    standard_generators,
    standard_group,
)
from .config import RecognizerConfig
from .element_classify import PpdWitness, allowed_e, classify_element
from .errors import PpdError
from .estimation import estimate_proportions
from .finite_field import FieldParams, field_from_order, field_make
from .matrices import MatrixQ, matrix_from_rows
from .oracle import enumerate_group, exact_ppd_proportion, exact_ppd_profile
from .ppd_arithmetic import PhiTriple, has_ppd, phi_triple, ppd_list
from .recognition import Outcome, RecognitionVerdict, plan, proportion_bounds, recognize
from .stats import ProportionStats

__all__ = [
    "Family",
    "FieldParams",
    "FormData",
    "FormKind",
    "GroupCase",
    "GroupInput",
    "Level",
    "MatrixQ",
    "Outcome",
    "PhiTriple",
    "PpdError",
    "PpdWitness",
    "ProportionStats",
    "RecognitionVerdict",
    "RecognizerConfig",
    "allowed_e",
    "classical_group_order",
    "classify_element",
    "enumerate_group",
    "estimate_proportions",
    "exact_ppd_profile",
    "exact_ppd_proportion",
    "field_from_order",
    "field_make",
    "group_order_gl",
    "has_ppd",
    "matrix_from_rows",
    "phi_triple",
    "plan",
    "ppd_list",
    "proportion_bounds",
    "recognize",
    "similitude_scalar",
    "standard_generators",
    "standard_group",
]
