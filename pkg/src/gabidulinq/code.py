"""Gabidulin codes over the cyclotomic tower: construction, encoding, and a
seeded rank-error channel for simulation campaigns."""

from __future__ import annotations

import random

from gmpy2 import mpq

from .construct import SubspaceBasis, annihilator, span_poly
from .field import FieldElement, FieldTower, rank_over_K, rational_rank
from .skew import SkewPoly


class GabidulinCode:
    """Evaluation code of twisted polynomials of degree < k at n independent
    points; minimum rank distance d = n - k + 1.

    The annihilator of the span of the evaluation points is precomputed at
    construction (it is the modulus of the decoder's key equation).
    """

    def __init__(self, tower: FieldTower, n: int, k: int, g=None):
        if not 1 <= k <= n:
            raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
        if n > tower.m:
            raise ValueError(f"n={n} exceeds extension degree m={tower.m}")
        if g is None:
            g = [tower.zeta(i) for i in range(n)]
        g = tuple(g)
        if len(g) != n:
            raise ValueError("wrong number of evaluation points")
        basis = SubspaceBasis(tower, g)  # certifies K-independence
        self.tower = tower
        self.n = n
        self.k = k
        self.g = g
        self.Mg = annihilator(basis)
        self.d = n - k + 1

    def __repr__(self):
        return f"GabidulinCode(p={self.tower.p}, n={self.n}, k={self.k})"


def make_code(tower: FieldTower, n: int, k: int, g=None) -> GabidulinCode:
    return GabidulinCode(tower, n, k, g)


def encode(code: GabidulinCode, f: SkewPoly) -> list[FieldElement]:
    """Evaluate the message polynomial at the code's points."""
    if f.degree >= code.k:
        raise ValueError(f"message degree {f.degree} exceeds k-1 = {code.k - 1}")
    return [f.evaluate(gi) for gi in code.g]


def random_message(code: GabidulinCode, rng: random.Random,
                   bound: int = 9) -> SkewPoly:
    """Random message polynomial of degree < k with small integer coordinates."""
    coeffs = [code.tower.random_element(rng, bound) for _ in range(code.k)]
    return SkewPoly(code.tower, coeffs)


def random_rank_error(tower: FieldTower, n: int, tau: int,
                      rng: random.Random, bound: int = 9) -> list[FieldElement]:
    """Random error vector of exact rank weight tau.

    Built as e = a * B with a K-independent tau-tuple a over L and a rational
    tau x n matrix B of rank tau, both with entries from a small integer box;
    the rank-weight postcondition is verified and the draw repeated until it
    holds.
    """
    if not 0 <= tau <= min(n, tower.m):
        raise ValueError(f"tau={tau} out of range [0, {min(n, tower.m)}]")
    if tau == 0:
        return [tower.zero() for _ in range(n)]
    while True:
        a = [tower.random_element(rng, bound) for _ in range(tau)]
        if rank_over_K([a]) != tau:
            continue
        B = [[mpq(rng.randint(-bound, bound)) for _ in range(n)]
             for _ in range(tau)]
        if rational_rank(B) != tau:
            continue
        e = []
        for j in range(n):
            ej = tower.zero()
            for t in range(tau):
                ej = ej + a[t].scale(B[t][j])
            e.append(ej)
        if span_poly(tower, e).degree == tau:
            return e


def channel(code: GabidulinCode, f: SkewPoly, tau: int, seed: int,
            bound: int = 9):
    """Encode, add a seeded rank-tau error; returns (received, codeword, error)."""
    rng = random.Random(seed)
    c = encode(code, f)
    e = random_rank_error(code.tower, code.n, tau, rng, bound)
    r = [ci + ei for ci, ei in zip(c, e)]
    return r, c, e
