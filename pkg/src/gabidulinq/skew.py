"""The twisted polynomial ring L[x; theta].

Coefficients live in a cyclotomic tower (see ``field``), multiplication
follows the commutation rule x * a = theta(a) * x extended inductively, and
both one-sided Euclidean divisions are available.  Multiplication and
division are schoolbook (quadratic); fast variants are deliberately not
implemented.
"""

from __future__ import annotations

from .field import FieldElement, FieldTower

NEG_INF = float("-inf")


class SkewPoly:
    """Immutable twisted polynomial; coeffs ascending, no trailing zeros."""

    __slots__ = ("tower", "coeffs")

    def __init__(self, tower: FieldTower, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.tower = tower
        self.coeffs = tuple(coeffs)

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, tower: FieldTower) -> "SkewPoly":
        return cls(tower, ())

    @classmethod
    def one(cls, tower: FieldTower) -> "SkewPoly":
        return cls(tower, (tower.one(),))

    @classmethod
    def constant(cls, c: FieldElement) -> "SkewPoly":
        return cls(c.tower, (c,))

    @classmethod
    def x(cls, tower: FieldTower) -> "SkewPoly":
        return cls(tower, (tower.zero(), tower.one()))

    @classmethod
    def monomial(cls, c: FieldElement, d: int) -> "SkewPoly":
        return cls(c.tower, (c.tower.zero(),) * d + (c,))

    # -- basic queries --------------------------------------------------

    @property
    def degree(self):
        """Degree, with the zero polynomial at -inf (so deg(ab)=deg a+deg b)."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> FieldElement:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.lead == self.tower.one()

    def coeff(self, i: int) -> FieldElement:
        return self.coeffs[i] if i < len(self.coeffs) else self.tower.zero()

    def __eq__(self, other) -> bool:
        return (isinstance(other, SkewPoly)
                and self.tower is other.tower
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "SkewPoly(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if i == 0:
                parts.append(f"({c})")
            else:
                parts.append(f"({c})*x^{i}" if i > 1 else f"({c})*x")
        return "SkewPoly(" + " + ".join(parts) + ")"

    # -- ring operations -------------------------------------------------

    def _check(self, other: "SkewPoly") -> None:
        if self.tower is not other.tower:
            raise ValueError("mixed towers")

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.tower,
                        [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.tower,
                        [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self) -> "SkewPoly":
        return SkewPoly(self.tower, [-c for c in self.coeffs])

    def lscale(self, c: FieldElement) -> "SkewPoly":
        """Left multiplication by a field constant (scales every coefficient)."""
        return SkewPoly(self.tower, [c * a for a in self.coeffs])

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return SkewPoly.zero(self.tower)
        tw = self.tower
        out = [tw.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * tw.apply_theta(b, i)
        return SkewPoly(tw, out)

    # -- evaluation ------------------------------------------------------

    def evaluate(self, alpha: FieldElement) -> FieldElement:
        """The K-linear evaluation alpha -> sum_i a_i theta^i(alpha)."""
        tw = self.tower
        tw._check(alpha)
        acc = tw.zero()
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            acc = acc + a * tw.apply_theta(alpha, i)
        return acc


# ----------------------------------------------------------------------
# Euclidean divisions and modular congruence
# ----------------------------------------------------------------------

def right_divide(a: SkewPoly, b: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Unique (q, r) with a = q*b + r and deg r < deg b."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    tw = a.tower
    a._check(b)
    q = SkewPoly.zero(tw)
    r = a
    db = b.degree
    b_lead = b.lead
    while not r.is_zero() and r.degree >= db:
        d = r.degree - db
        # (c x^d) * b has leading coefficient c * theta^d(lead b)
        c = r.lead * tw.apply_theta(b_lead, d).inv()
        t = SkewPoly.monomial(c, d)
        q = q + t
        r = r - t * b
    return q, r


def left_divide(a: SkewPoly, b: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Unique (q, r) with a = b*q + r and deg r < deg b."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    tw = a.tower
    a._check(b)
    q = SkewPoly.zero(tw)
    r = a
    db = b.degree
    b_lead_inv = b.lead.inv()
    while not r.is_zero() and r.degree >= db:
        d = r.degree - db
        # b * (c x^d) has leading coefficient lead(b) * theta^db(c)
        c = tw.apply_theta_inv(r.lead * b_lead_inv, db)
        t = SkewPoly.monomial(c, d)
        q = q + t
        r = r - b * t
    return q, r


def mod_right(a: SkewPoly, c: SkewPoly) -> SkewPoly:
    """Remainder of a under right division by c."""
    _, r = right_divide(a, c)
    return r


def congruent(a: SkewPoly, b: SkewPoly, c: SkewPoly) -> bool:
    """Whether a = b + d*c for some twisted polynomial d."""
    return mod_right(a - b, c).is_zero()
