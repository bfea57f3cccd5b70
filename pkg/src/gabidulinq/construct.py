"""Polynomial constructions over subspaces: annihilators and interpolation.

The annihilator of a K-subspace U of L is the unique monic twisted
polynomial of minimal degree whose evaluation kernel contains U; under the
square-free certification of the tower its degree equals dim U and its
kernel is exactly U.  Interpolation through K-linearly independent points
is built incrementally on top of partial annihilators (Newton style), so
both primitives cost a quadratic number of field operations.
"""

from __future__ import annotations

from .field import FieldElement, FieldTower, rank_over_K
from .skew import SkewPoly


class DependentBasisError(ValueError):
    """Input vectors that were claimed independent are not."""


class SubspaceBasis:
    """A list of field elements certified K-linearly independent."""

    def __init__(self, tower: FieldTower, vectors):
        vectors = tuple(vectors)
        for v in vectors:
            tower._check(v)
        if vectors and rank_over_K([list(vectors)]) != len(vectors):
            raise DependentBasisError("vectors are K-linearly dependent")
        self.tower = tower
        self.vectors = vectors

    def __len__(self):
        return len(self.vectors)


def annihilator(basis: SubspaceBasis) -> SkewPoly:
    """Monic annihilator of the span of the basis; degree = len(basis).

    Iteratively multiplies in one linear factor per basis vector.  A zero
    evaluation of the partial annihilator at the next vector would mean the
    vector already lies in the span handled so far, contradicting the
    independence certificate, so it is rejected loudly.
    """
    tw = basis.tower
    A = SkewPoly.one(tw)
    x = SkewPoly.x(tw)
    for u in basis.vectors:
        val = A.evaluate(u)
        if val.is_zero():
            raise DependentBasisError(
                "basis vector annihilated early; input was not independent")
        c = tw.apply_theta(val) * val.inv()
        A = (x - SkewPoly.constant(c)) * A
    return A


def extract_basis(tower: FieldTower, vectors) -> list[FieldElement]:
    """Greedy K-basis of the span of an arbitrary vector list.

    Keeps a vector iff its coordinate vector is independent of those kept
    before, tracked with an incremental row-echelon form over Q.
    """
    echelon: list[list] = []  # reduced rows, each with its pivot index
    pivots: list[int] = []
    kept: list[FieldElement] = []
    for v in vectors:
        tower._check(v)
        row = list(v.coords)
        for piv, erow in zip(pivots, echelon):
            if row[piv] != 0:
                f = row[piv] / erow[piv]
                for i in range(tower.m):
                    row[i] -= f * erow[i]
        piv = next((i for i, c in enumerate(row) if c != 0), None)
        if piv is None:
            continue
        echelon.append(row)
        pivots.append(piv)
        kept.append(v)
    return kept


def span_poly(tower: FieldTower, vectors) -> SkewPoly:
    """Annihilator of the span of an arbitrary (possibly dependent) list.

    The zero vector or an empty list yields the constant polynomial 1.
    The degree of the result is the rank weight of the vector.
    """
    basis = extract_basis(tower, vectors)
    return annihilator(SubspaceBasis(tower, basis))


def interpolate(tower: FieldTower, points) -> SkewPoly:
    """Unique twisted polynomial of degree < n through the given points.

    ``points`` is a sequence of (g_i, r_i) pairs with K-linearly independent
    g_i.  Maintains the annihilator A_i of span(g_1..g_i) alongside the
    partial interpolant; each new point adds a multiple of A_{i-1}, which
    vanishes on all earlier points.
    """
    A = SkewPoly.one(tower)
    x = SkewPoly.x(tower)
    rhat = SkewPoly.zero(tower)
    for gi, ri in points:
        Agi = A.evaluate(gi)
        if Agi.is_zero():
            raise DependentBasisError(
                "interpolation points are K-linearly dependent")
        c = (ri - rhat.evaluate(gi)) * Agi.inv()
        rhat = rhat + A.lscale(c)
        A = (x - SkewPoly.constant(tower.apply_theta(Agi) * Agi.inv())) * A
    return rhat
