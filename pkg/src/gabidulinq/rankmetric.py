"""Rank weights and rank distances for vectors over the extension field.

Four weights are computed for each vector: the degree of its span
annihilator, the rank over L of the automorphism-orbit matrix (rows are
theta^j applied to the entries), and the ranks over Q of that same matrix
and of the plain coordinate matrix.  Over characteristic zero these
coincide pairwise, with a possible gap in the middle: w1 = w2 <= w3 = w4.
"""

from __future__ import annotations

from dataclasses import dataclass

from .construct import span_poly
from .field import FieldElement, FieldTower, blow_up, rank_over_L, rational_rank


@dataclass(frozen=True)
class RankProfile:
    w1: int
    w2: int
    w3: int
    w4: int


def theta_orbit_matrix(tower: FieldTower, v) -> list[list[FieldElement]]:
    """m x n matrix with rows theta^j(v_1), ..., theta^j(v_n), j = 0..m-1."""
    return [[tower.apply_theta(vi, j) for vi in v] for j in range(tower.m)]


def rank_weights(tower: FieldTower, v) -> RankProfile:
    v = list(v)
    w1 = span_poly(tower, v).degree
    w1 = int(w1) if v else 0
    xt = theta_orbit_matrix(tower, v) if v else []
    w2 = rank_over_L(xt)
    w3 = rational_rank(blow_up(xt)) if xt else 0
    w4 = rational_rank(blow_up([v])) if v else 0
    return RankProfile(w1, w2, w3, w4)


def rank_distance(tower: FieldTower, x, y, i: int = 1) -> int:
    """d_i(x, y) = w_i(x - y) for the chosen weight index (1..4)."""
    x, y = list(x), list(y)
    if len(x) != len(y):
        raise ValueError("length mismatch")
    if i not in (1, 2, 3, 4):
        raise ValueError("weight index must be 1..4")
    diff = [a - b for a, b in zip(x, y)]
    prof = rank_weights(tower, diff)
    return getattr(prof, f"w{i}")
