import random

import pytest
from gmpy2 import mpq

from gabidulinq import (DependentBasisError, FieldTower, OpCounter, SkewPoly,
                        SubspaceBasis, annihilator, count_ops, interpolate,
                        rank_over_K, span_poly)
from gabidulinq.campaign import random_subspace_basis


@pytest.fixture(scope="module")
def t3():
    return FieldTower(3, 2)


def test_annihilator_examples(t3):
    x = SkewPoly.x(t3)
    one = SkewPoly.one(t3)
    assert annihilator(SubspaceBasis(t3, [])) == one
    assert annihilator(SubspaceBasis(t3, [t3.one()])) == x - one
    assert annihilator(SubspaceBasis(t3, [t3.one(), t3.zeta()])) == x * x - one


def test_subspace_basis_rejects_dependent(t3):
    with pytest.raises(DependentBasisError):
        SubspaceBasis(t3, [t3.one(), t3.from_rational(2)])


def test_annihilator_random_bases():
    tw = FieldTower(13, 2)
    rng = random.Random(0)
    for _ in range(10):
        s = rng.randint(1, tw.m)
        basis = random_subspace_basis(tw, s, rng)
        A = annihilator(basis)
        assert A.degree == s
        assert A.is_monic()
        for u in basis.vectors:
            assert A.evaluate(u).is_zero()
        # random K-linear combinations stay in the kernel
        for _ in range(20):
            comb = tw.zero()
            for u in basis.vectors:
                comb = comb + u.scale(mpq(rng.randint(-9, 9), rng.randint(1, 5)))
            assert A.evaluate(comb).is_zero()
        # vectors outside the span are not annihilated
        if s < tw.m:
            tried = 0
            while tried < 20:
                alpha = tw.random_element(rng)
                if rank_over_K([list(basis.vectors) + [alpha]]) != s + 1:
                    continue
                tried += 1
                assert not A.evaluate(alpha).is_zero()


def test_kernel_dimension_bound():
    # dim over K of the kernel of the evaluation map is at most the degree
    tw = FieldTower(7, 3)
    rng = random.Random(1)
    for _ in range(10):
        d = rng.randint(1, tw.m)
        a = SkewPoly(tw, [tw.random_element(rng, 4) for _ in range(d + 1)])
        if a.is_zero():
            continue
        cols = [a.evaluate(tw.zeta(j)) for j in range(tw.m)]
        ker_dim = tw.m - rank_over_K([cols])
        assert ker_dim <= max(a.degree, 0)


def test_span_poly_examples(t3):
    x = SkewPoly.x(t3)
    one = SkewPoly.one(t3)
    assert span_poly(t3, [t3.zero(), t3.zero(), t3.zero()]) == one
    assert span_poly(t3, []) == one
    assert span_poly(t3, [t3.one(), t3.from_rational(2)]) == x - one
    assert span_poly(t3, [t3.one(), t3.zeta()]) == x * x - one


def test_interpolate_examples(t3):
    c = t3.element([4, -1])
    p = interpolate(t3, [(t3.one(), c)])
    assert p == SkewPoly.constant(c)
    # identity data gives the polynomial 1
    pts = [(t3.one(), t3.one()), (t3.zeta(), t3.zeta())]
    assert interpolate(t3, pts) == SkewPoly.one(t3)
    # the example matching ev_x
    pts = [(t3.one(), t3.one()), (t3.zeta(), t3.zeta(2))]
    assert interpolate(t3, pts) == SkewPoly.x(t3)


def test_interpolate_rejects_dependent_points(t3):
    pts = [(t3.one(), t3.one()), (t3.from_rational(2), t3.zeta())]
    with pytest.raises(DependentBasisError):
        interpolate(t3, pts)


def test_interpolate_round_trip():
    tw = FieldTower(13, 2)
    rng = random.Random(2)
    n = 8
    g = [tw.zeta(i) for i in range(n)]
    for _ in range(10):
        f = SkewPoly(tw, [tw.random_element(rng) for _ in range(rng.randint(1, n))])
        pts = [(gi, f.evaluate(gi)) for gi in g]
        assert interpolate(tw, pts) == f


def test_annihilator_op_count_quadratic():
    tw = FieldTower(37, 2)
    rng = random.Random(3)
    counts = {}
    for s in (8, 16, 32):
        basis = random_subspace_basis(tw, s, rng)
        counter = OpCounter()
        with count_ops(counter):
            annihilator(basis)
        counts[s] = counter.total
    assert counts[16] / counts[8] <= 4.6
    assert counts[32] / counts[16] <= 4.6
