"""Locally recoverable codes from curves with separated variables."""

from .brute import brute_min_distance, brute_weight_hierarchy
from .curve import Axis, SepCurve, make_curve, one_addition_applicable, power_sums
from .funcspace import VSpec, completion, dim_V, m_of_V, make_vspec, riemann_gap
from .galois import FieldSpec, make_field
from .lrc_code import (
    GonalityPolicy,
    LrcCode,
    build_code,
    encode,
    erasure_decode,
    ghw_bounds,
    params,
    rank_indices,
)
from .repair import RepairRequest, recover_lagrange, recover_one_addition, recovery_set, repair
from .semigroup import NumericalSemigroup
from .storesim import simulate

__all__ = [
    "Axis", "FieldSpec", "GonalityPolicy", "LrcCode", "NumericalSemigroup", "RepairRequest",
    "SepCurve", "VSpec", "brute_min_distance", "brute_weight_hierarchy", "build_code",
    "completion", "dim_V", "encode", "erasure_decode", "ghw_bounds", "m_of_V", "make_curve",
    "make_field", "make_vspec", "one_addition_applicable", "params", "power_sums",
    "rank_indices", "recover_lagrange", "recover_one_addition", "recovery_set", "repair",
    "riemann_gap", "simulate",
]
