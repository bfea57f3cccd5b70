"""Key-equation decoding of Gabidulin codes via shift-register synthesis.

The received word is interpolated into a single twisted polynomial; the
error span polynomial then links it to the message through the congruence

    lambda * rhat = omega  (mod annihilator of the evaluation points)

with deg omega < deg lambda + k and deg lambda minimal.  Two interchangeable
solvers for that shift-register problem are provided: a module-minimization
(weak Popov) reduction and a Gao-style extended Euclidean algorithm.  Both
cost a quadratic number of field operations, as does the full decode.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .code import GabidulinCode
from .construct import span_poly, interpolate
from .counters import OpCounter, count_ops
from .field import FieldTower
from .skew import SkewPoly, congruent, left_divide, right_divide

NEG_INF = float("-inf")

FAIL_REMAINDER = "remainder-nonzero"
FAIL_DEGREE = "degree-too-large"
FAIL_NO_SOLUTION = "srp-no-solution"


class SrpNoSolutionError(Exception):
    """No row of the reduced basis satisfies the degree condition."""


@dataclass
class SrpInstance:
    rhat: SkewPoly
    Mg: SkewPoly
    k: int

    def __post_init__(self):
        if self.rhat.degree >= self.Mg.degree:
            raise ValueError("interpolant degree must be below the modulus degree")


@dataclass
class SrpSolution:
    lam: SkewPoly
    omega: SkewPoly


@dataclass
class DecodeResult:
    message: SkewPoly | None = None
    failure: str | None = None
    trace: dict | None = None

    @property
    def ok(self) -> bool:
        return self.message is not None


# ----------------------------------------------------------------------
# Error span polynomial and key-equation oracle
# ----------------------------------------------------------------------

def error_span(tower: FieldTower, e) -> SkewPoly:
    """Annihilator of the K-span of the error coordinates; degree = rank weight."""
    return span_poly(tower, e)


def check_key_equation(lam: SkewPoly, rhat: SkewPoly, f: SkewPoly,
                       Mg: SkewPoly) -> bool:
    """Verification oracle: lambda*rhat congruent to lambda*f modulo Mg."""
    return congruent(lam * rhat, lam * f, Mg)


# ----------------------------------------------------------------------
# Solver 1: module minimization (weak Popov form)
# ----------------------------------------------------------------------

def solve_srp_popov(inst: SrpInstance) -> SrpSolution:
    """Reduce the module basis [(1, rhat), (0, Mg)] to weak Popov form.

    Every congruence solution (lambda, omega) is a left combination of the
    two rows.  Column degrees are compared with the omega column shifted
    down by k-1, so a row whose pivot lands in the lambda column satisfies
    deg omega < deg lambda + k automatically; among qualifying rows the one
    with minimal lambda degree is returned.
    """
    tw = inst.rhat.tower
    k = inst.k
    if inst.rhat.is_zero():
        return SrpSolution(SkewPoly.one(tw), SkewPoly.zero(tw))

    rows = [[SkewPoly.one(tw), inst.rhat],
            [SkewPoly.zero(tw), inst.Mg]]
    shift = (0, -(k - 1))

    def pivot(row) -> int:
        d0 = row[0].degree + shift[0] if not row[0].is_zero() else NEG_INF
        d1 = row[1].degree + shift[1] if not row[1].is_zero() else NEG_INF
        return 0 if d0 >= d1 else 1

    while True:
        p0, p1 = pivot(rows[0]), pivot(rows[1])
        if p0 != p1:
            break
        col = p0
        hi, lo = (0, 1) if rows[0][col].degree >= rows[1][col].degree else (1, 0)
        delta = int(rows[hi][col].degree - rows[lo][col].degree)
        c = rows[hi][col].lead * tw.apply_theta(rows[lo][col].lead, delta).inv()
        t = SkewPoly.monomial(c, delta)
        rows[hi] = [rows[hi][0] - t * rows[lo][0],
                    rows[hi][1] - t * rows[lo][1]]

    best = None
    for lam, omega in rows:
        if lam.is_zero():
            continue
        if omega.degree < lam.degree + k:
            if best is None or lam.degree < best[0].degree:
                best = (lam, omega)
    if best is None:
        raise SrpNoSolutionError("no reduced row meets the degree condition")
    return SrpSolution(*best)


# ----------------------------------------------------------------------
# Solver 2: extended Euclidean algorithm, Gao-style stopping rule
# ----------------------------------------------------------------------

def solve_srp_eea(inst: SrpInstance) -> SrpSolution:
    """Right-division remainder chain on (Mg, rhat) with cofactor tracking.

    Invariant: r_i = u_i*Mg + v_i*rhat (cofactors multiplied from the left),
    so each (v_i, r_i) satisfies the congruence.  Stops at the first
    remainder of degree below (n+k)/2.
    """
    tw = inst.rhat.tower
    k = inst.k
    n = int(inst.Mg.degree)
    if inst.rhat.is_zero():
        return SrpSolution(SkewPoly.one(tw), SkewPoly.zero(tw))

    prev_r, prev_v = inst.Mg, SkewPoly.zero(tw)
    cur_r, cur_v = inst.rhat, SkewPoly.one(tw)
    while not cur_r.is_zero() and 2 * cur_r.degree >= n + k:
        q, rem = right_divide(prev_r, cur_r)
        new_v = prev_v - q * cur_v
        prev_r, prev_v = cur_r, cur_v
        cur_r, cur_v = rem, new_v

    lam, omega = cur_v, cur_r
    if lam.is_zero() or not omega.degree < lam.degree + k:
        raise SrpNoSolutionError("stopping row violates the degree condition")
    return SrpSolution(lam, omega)


_SOLVERS = {"popov": solve_srp_popov, "eea": solve_srp_eea}


# ----------------------------------------------------------------------
# Full decoding pipeline
# ----------------------------------------------------------------------

def decode(code: GabidulinCode, r, solver: str = "popov",
           trace: bool = False) -> DecodeResult:
    """Recover the message polynomial from a received word, if possible.

    Interpolates the received word, solves the shift-register problem,
    normalizes the solution monic, and divides out the error span
    polynomial.  A nonzero remainder or a quotient of degree >= k is
    reported as a typed decoding failure.
    """
    if solver not in _SOLVERS:
        raise ValueError(f"unknown solver {solver!r}")
    tw = code.tower
    stages = {name: OpCounter() for name in ("interpolate", "srp", "divide")}

    with count_ops(stages["interpolate"]):
        rhat = interpolate(tw, zip(code.g, r))

    inst = SrpInstance(rhat, code.Mg, code.k)
    try:
        with count_ops(stages["srp"]):
            sol = _SOLVERS[solver](inst)
    except SrpNoSolutionError:
        return DecodeResult(failure=FAIL_NO_SOLUTION,
                            trace=_trace(stages, rhat) if trace else None)

    with count_ops(stages["divide"]):
        alpha_inv = sol.lam.lead.inv()
        Lam = sol.lam.lscale(alpha_inv)
        Omega = sol.omega.lscale(alpha_inv)
        # Omega = Lam * f, so f is the quotient with Lam as left factor
        chi, rho = left_divide(Omega, Lam)

    tr = _trace(stages, rhat, Lam) if trace else None
    if not rho.is_zero():
        return DecodeResult(failure=FAIL_REMAINDER, trace=tr)
    if chi.degree >= code.k:
        return DecodeResult(failure=FAIL_DEGREE, trace=tr)
    return DecodeResult(message=chi, trace=tr)


def _trace(stages: dict, rhat: SkewPoly, Lam: SkewPoly | None = None) -> dict:
    out = {name: c.as_dict() for name, c in stages.items()}
    out["degrees"] = {
        "rhat": None if rhat.is_zero() else int(rhat.degree),
        "lambda": None if Lam is None else int(Lam.degree),
    }
    out["total_ops"] = sum(c.total for c in stages.values())
    out["max_coeff_bits"] = max(c.max_coeff_bits for c in stages.values())
    return out


def normalized(sol: SrpSolution) -> tuple[SkewPoly, SkewPoly]:
    """Scale a solution so the locator is monic."""
    a = sol.lam.lead.inv()
    return sol.lam.lscale(a), sol.omega.lscale(a)


def proportional(s1: SrpSolution, s2: SrpSolution) -> bool:
    """Whether two solutions agree up to a left scalar factor."""
    if s1.lam.is_zero() or s2.lam.is_zero():
        return False
    return normalized(s1) == normalized(s2)
