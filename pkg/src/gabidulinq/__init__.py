"""Gabidulin codes over prime cyclotomic number fields, with exact
skew-polynomial arithmetic and a quadratic key-equation decoder."""

from .field import (FieldTower, FieldElement, TowerConstructionError,
                    rank_over_K, rank_over_L, rational_rank)
from .skew import SkewPoly, right_divide, left_divide, mod_right, congruent
from .construct import (SubspaceBasis, DependentBasisError, annihilator,
                        span_poly, interpolate)
from .rankmetric import RankProfile, rank_weights, rank_distance
from .code import (GabidulinCode, make_code, encode, random_message,
                   random_rank_error, channel)
from .decoder import (SrpInstance, SrpSolution, DecodeResult,
                      SrpNoSolutionError, error_span, check_key_equation,
                      solve_srp_popov, solve_srp_eea, decode, proportional,
                      normalized)
from .counters import OpCounter, count_ops
from .campaign import (CampaignConfig, run_campaign, run_decode_bench,
                       run_annihilator_bench)

__all__ = [
    "FieldTower", "FieldElement", "TowerConstructionError",
    "rank_over_K", "rank_over_L", "rational_rank",
    "SkewPoly", "right_divide", "left_divide", "mod_right", "congruent",
    "SubspaceBasis", "DependentBasisError", "annihilator", "span_poly",
    "interpolate",
    "RankProfile", "rank_weights", "rank_distance",
    "GabidulinCode", "make_code", "encode", "random_message",
    "random_rank_error", "channel",
    "SrpInstance", "SrpSolution", "DecodeResult", "SrpNoSolutionError",
    "error_span", "check_key_equation", "solve_srp_popov", "solve_srp_eea",
    "decode", "proportional", "normalized",
    "OpCounter", "count_ops",
    "CampaignConfig", "run_campaign", "run_decode_bench",
    "run_annihilator_bench",
]

__version__ = "0.1.0"
