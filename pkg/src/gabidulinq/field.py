"""Exact arithmetic in prime cyclotomic extensions L = Q(zeta_p) over K = Q.

Elements are coordinate vectors over the power basis 1, zeta, ..., zeta^(m-1)
with m = p - 1, stored as an integer vector with a single positive common
denominator in canonical form (content coprime to the denominator).  All
arithmetic is exact.  The distinguished automorphism is theta: zeta ->
zeta^g for a primitive root g modulo p, which generates the cyclic Galois
group of L/Q.  Construction verifies that the characteristic polynomial of
theta (as a Q-linear map on L) is square-free and rejects the tower
otherwise; every algorithm downstream relies on that property.
"""

from __future__ import annotations

import random

from gmpy2 import gcd as _gcd, mpq, mpz

from .counters import tally

Q0 = mpq(0)
Q1 = mpq(1)
Z0 = mpz(0)
Z1 = mpz(1)


class TowerConstructionError(ValueError):
    """Raised when (p, g) do not define an admissible tower."""


# ----------------------------------------------------------------------
# Small number-theory helpers
# ----------------------------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_primitive_root(g: int, p: int) -> bool:
    if g % p == 0:
        return False
    for q in _prime_factors(p - 1):
        if pow(g, (p - 1) // q, p) == 1:
            return False
    return True


# ----------------------------------------------------------------------
# Dense polynomials over Q (coefficient lists, ascending powers)
# ----------------------------------------------------------------------

def poly_trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_deriv(a: list) -> list:
    return [mpq(i) * a[i] for i in range(1, len(a))]


def poly_divmod(a: list, b: list) -> tuple[list, list]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [Q0] * max(0, len(a) - len(b) + 1)
    db = len(b) - 1
    lead = b[-1]
    while len(r) - 1 >= db and r:
        c = r[-1] / lead
        d = len(r) - 1 - db
        q[d] = c
        for i in range(len(b)):
            r[d + i] -= c * b[i]
        poly_trim(r)
    return q, r


def poly_gcd(a: list, b: list) -> list:
    a, b = list(a), list(b)
    poly_trim(a)
    poly_trim(b)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def char_poly(mat: list[list]) -> list:
    """Characteristic polynomial of a square rational matrix.

    Faddeev-LeVerrier recursion: M_1 = A, c_{m-1} = -tr(M_1),
    M_k = A (M_{k-1} + c_{m-k+1} I), c_{m-k} = -tr(M_k)/k.
    Exact, run once per tower.  Returned ascending, monic.
    """
    m = len(mat)
    coeffs = [Q0] * (m + 1)
    coeffs[m] = Q1
    M = [row[:] for row in mat]
    coeffs[m - 1] = -sum((M[i][i] for i in range(m)), Q0)
    for k in range(2, m + 1):
        c = coeffs[m - k + 1]
        for i in range(m):
            M[i][i] += c
        M = [[sum((mat[i][t] * M[t][j] for t in range(m)), Q0) for j in range(m)]
             for i in range(m)]
        coeffs[m - k] = -sum((M[i][i] for i in range(m)), Q0) / k
    return coeffs


# ----------------------------------------------------------------------
# The tower and its elements
# ----------------------------------------------------------------------

class FieldTower:
    """The extension Q(zeta_p)/Q with automorphism theta: zeta -> zeta^g.

    Immutable after construction; safe to share between threads.
    """

    def __init__(self, p: int, g: int):
        if not is_prime(p) or p < 3:
            raise TowerConstructionError(f"p={p} is not an odd prime")
        if not 1 < g < p:
            raise TowerConstructionError(f"g={g} out of range (1, {p})")
        if not is_primitive_root(g, p):
            raise TowerConstructionError(f"g={g} is not a primitive root mod {p}")
        self.p = p
        self.g = g
        self.m = p - 1
        # g^i mod p, i = 0..m-1; theta^i sends zeta^j to zeta^(g^i * j mod p)
        self._gpow = [pow(g, i, p) for i in range(self.m)]
        self.theta_images = self._theta_matrix()
        self.char_theta = char_poly(self.theta_images)
        gcd = poly_gcd(self.char_theta, poly_deriv(self.char_theta))
        self.squarefree_certified = len(gcd) == 1
        if not self.squarefree_certified:
            raise TowerConstructionError(
                "characteristic polynomial of theta is not square-free")

    def _theta_matrix(self) -> list[list]:
        m = self.m
        mat = [[Q0] * m for _ in range(m)]
        for j in range(m):
            e = (self.g * j) % self.p
            if e < m:
                mat[e][j] += Q1
            else:  # zeta^(p-1) = -(1 + zeta + ... + zeta^(m-1))
                for i in range(m):
                    mat[i][j] -= Q1
        return mat

    # -- element constructors ------------------------------------------

    def element(self, coords) -> "FieldElement":
        coords = [mpq(c) for c in coords]
        if len(coords) != self.m:
            raise ValueError(f"expected {self.m} coordinates, got {len(coords)}")
        den = Z1
        for c in coords:
            d = c.denominator
            den = den * d // _gcd(den, d)
        num = [mpz(c.numerator * (den // c.denominator)) for c in coords]
        return _make(self, num, den)

    def zero(self) -> "FieldElement":
        return FieldElement(self, (Z0,) * self.m, Z1)

    def one(self) -> "FieldElement":
        return self.from_rational(1)

    def from_rational(self, q) -> "FieldElement":
        q = mpq(q)
        num = [Z0] * self.m
        num[0] = mpz(q.numerator)
        return _make(self, num, mpz(q.denominator))

    def zeta(self, power: int = 1) -> "FieldElement":
        """zeta^power as an element (any integer power)."""
        num = [Z0] * self.m
        e = power % self.p
        if e < self.m:
            num[e] = Z1
        else:
            num = [mpz(-1)] * self.m
        return FieldElement(self, tuple(num), Z1)

    def random_element(self, rng: random.Random, bound: int = 9) -> "FieldElement":
        return _make(self, [mpz(rng.randint(-bound, bound))
                            for _ in range(self.m)], Z1)

    # -- the automorphism ----------------------------------------------

    def apply_theta(self, a: "FieldElement", i: int = 1) -> "FieldElement":
        """theta^i(a), i >= 0.  One counted automorphism application.

        Implemented as an exponent permutation plus one basis reduction,
        so the cost is O(m) base-field operations, independent of i and
        of the code length.
        """
        if i < 0:
            raise ValueError("exponent must be nonnegative")
        self._check(a)
        i %= self.m
        if i == 0:
            return a
        out = _make(self, self._theta_num(a.num, i), a.den)
        tally("theta", out.num, out.den)
        return out

    def _theta_num(self, num, i: int) -> list:
        gi = self._gpow[i]
        out = [Z0] * self.m
        for j, c in enumerate(num):
            if not c:
                continue
            e = (gi * j) % self.p
            if e < self.m:
                out[e] += c
            else:
                for t in range(self.m):
                    out[t] -= c
        return out

    def apply_theta_inv(self, a: "FieldElement", i: int = 1) -> "FieldElement":
        """theta^(-i)(a); the group is cyclic so this is theta^(m-i)."""
        return self.apply_theta(a, (-i) % self.m)

    def _raw_mul(self, x, y) -> list:
        """Integer-vector product with cyclotomic reduction (uncounted)."""
        m = self.m
        p = self.p
        tmp = [Z0] * (2 * m - 1)
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if b:
                    tmp[i + j] += a * b
        # reduce exponents >= m: zeta^p = 1 and zeta^(p-1) = -(sum of basis)
        for e in range(2 * m - 2, m - 1, -1):
            c = tmp[e]
            if not c:
                continue
            if e >= p:
                tmp[e - p] += c
            else:  # e == p - 1
                for t in range(m):
                    tmp[t] -= c
        return tmp[:m]

    def _check(self, a: "FieldElement") -> None:
        if a.tower is not self:
            raise ValueError("mixed towers")

    def __repr__(self):
        return f"FieldTower(p={self.p}, g={self.g})"


def _make(tower: FieldTower, num, den) -> "FieldElement":
    """Canonicalize: positive denominator, content coprime to it."""
    g = den
    for c in num:
        if c:
            g = _gcd(g, c)
            if g == 1:
                break
    if g != 1 and g != 0:
        num = [c // g for c in num]
        den = den // g
    if den < 0:
        num = [-c for c in num]
        den = -den
    return FieldElement(tower, tuple(num), den)


class FieldElement:
    """An element of Q(zeta_p): integer power-basis coordinates over a
    common positive denominator, kept in canonical reduced form."""

    __slots__ = ("tower", "num", "den")

    def __init__(self, tower: FieldTower, num: tuple, den):
        self.tower = tower
        self.num = num
        self.den = den

    @property
    def coords(self) -> tuple:
        """Coordinates as exact rationals over the power basis."""
        d = self.den
        return tuple(mpq(n, d) for n in self.num)

    def is_zero(self) -> bool:
        return all(not c for c in self.num)

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldElement)
                and self.tower is other.tower
                and self.den == other.den
                and self.num == other.num)

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self.tower._check(other)
        g = _gcd(self.den, other.den)
        fa, fb = other.den // g, self.den // g
        out = _make(self.tower,
                    [a * fa + b * fb for a, b in zip(self.num, other.num)],
                    self.den * fa)
        tally("add", out.num, out.den)
        return out

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self.tower._check(other)
        g = _gcd(self.den, other.den)
        fa, fb = other.den // g, self.den // g
        out = _make(self.tower,
                    [a * fa - b * fb for a, b in zip(self.num, other.num)],
                    self.den * fa)
        tally("add", out.num, out.den)
        return out

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.tower, tuple(-c for c in self.num), self.den)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        tw = self.tower
        tw._check(other)
        out = _make(tw, tw._raw_mul(self.num, other.num), self.den * other.den)
        tally("mul", out.num, out.den)
        return out

    def scale(self, q) -> "FieldElement":
        """Multiplication by a base-field scalar (a K-linear operation)."""
        q = mpq(q)
        return _make(self.tower, [c * q.numerator for c in self.num],
                     self.den * q.denominator)

    def inv(self) -> "FieldElement":
        """Exact inverse via the product of Galois conjugates.

        The product of theta^i(a) over i = 1..m-1 times a itself is the
        field norm, a rational; dividing the conjugate product by it gives
        the inverse.  Counted as a single field operation.
        """
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero field element")
        tw = self.tower
        conj = tw._theta_num(self.num, 1)
        for i in range(2, tw.m):
            conj = tw._raw_mul(conj, tw._theta_num(self.num, i))
        norm_vec = tw._raw_mul(self.num, conj)
        norm = norm_vec[0]
        # sanity: a * conj is Galois-invariant, hence rational
        assert all(not c for c in norm_vec[1:])
        out = _make(tw, [c * self.den for c in conj], norm)
        tally("inv", out.num, out.den)
        return out

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inv()

    def max_coeff_bits(self) -> int:
        bits = int(self.den.bit_length())
        for n in self.num:
            bits = max(bits, n.bit_length())
        return bits

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                terms.append(f"{c}*z^{i}" if i > 1 else f"{c}*z")
        return " + ".join(terms) if terms else "0"


# ----------------------------------------------------------------------
# Exact rank computations
# ----------------------------------------------------------------------

def rational_rank(rows: list[list]) -> int:
    """Rank of a matrix with rational entries, by exact Gaussian elimination."""
    if not rows or not rows[0]:
        return 0
    mat = [[mpq(c) for c in row] for row in rows]
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(mat)):
            if mat[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pv = mat[rank][col]
        for r in range(rank + 1, len(mat)):
            f = mat[r][col]
            if f == 0:
                continue
            f = f / pv
            for c in range(col, ncols):
                mat[r][c] -= f * mat[rank][c]
        rank += 1
        if rank == len(mat):
            break
    return rank


def blow_up(rows: list[list[FieldElement]]) -> list[list]:
    """Replace each field entry by its coordinate column, stacking rows.

    An r x c matrix over L becomes an (r*m) x c rational matrix whose
    K-column-span matches that of the original columns viewed over K.
    """
    out = []
    for row in rows:
        m = row[0].tower.m
        coords = [e.coords for e in row]
        for t in range(m):
            out.append([c[t] for c in coords])
    return out


def rank_over_K(rows: list[list]) -> int:
    """Rank over Q; field-element matrices are blown up coordinate-wise."""
    if not rows or not rows[0]:
        return 0
    if isinstance(rows[0][0], FieldElement):
        return rational_rank(blow_up(rows))
    return rational_rank(rows)


def rank_over_L(rows: list[list[FieldElement]]) -> int:
    """Rank of a matrix over L itself, by elimination with field arithmetic."""
    if not rows or not rows[0]:
        return 0
    mat = [list(row) for row in rows]
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(mat)):
            if not mat[r][col].is_zero():
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pv_inv = mat[rank][col].inv()
        for r in range(rank + 1, len(mat)):
            if mat[r][col].is_zero():
                continue
            f = mat[r][col] * pv_inv
            for c in range(col, ncols):
                mat[r][c] = mat[r][c] - f * mat[rank][c]
        rank += 1
        if rank == len(mat):
            break
    return rank
