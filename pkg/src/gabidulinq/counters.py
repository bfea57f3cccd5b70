"""Operation counting for complexity regressions.

The cost unit is operations in the extension field L (multiplication,
addition/subtraction, inversion) plus applications of the automorphism,
which matches the accounting used for the quadratic complexity targets.
Wall-clock time is deliberately not the unit: exact rational coefficients
grow during a decode, which would make timings superquadratic even for a
quadratic operation count.

Counters are enabled by pushing an ``OpCounter`` onto a module-level stack
via the ``count_ops`` context manager; every active counter sees every
field operation, so nested counters (per-stage plus total) work.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass


@dataclass
class OpCounter:
    mul: int = 0
    add: int = 0
    inv: int = 0
    theta: int = 0
    max_coeff_bits: int = 0

    @property
    def total(self) -> int:
        return self.mul + self.add + self.inv + self.theta

    def as_dict(self) -> dict:
        return {
            "mul": self.mul,
            "add": self.add,
            "inv": self.inv,
            "theta": self.theta,
            "total": self.total,
            "max_coeff_bits": self.max_coeff_bits,
        }


_stack: list[OpCounter] = []


@contextmanager
def count_ops(counter: OpCounter):
    _stack.append(counter)
    try:
        yield counter
    finally:
        _stack.pop()


def counting_active() -> bool:
    return bool(_stack)


def tally(kind: str, num=None, den=None) -> None:
    """Record one field operation of the given kind on all active counters.

    ``num``/``den`` are the integer numerator vector and common denominator
    of the result; their bit sizes feed the coefficient-growth
    instrumentation.
    """
    if not _stack:
        return
    bits = den.bit_length() if den is not None else 0
    if num is not None:
        for n in num:
            b = n.bit_length()
            if b > bits:
                bits = b
    for c in _stack:
        setattr(c, kind, getattr(c, kind) + 1)
        if bits > c.max_coeff_bits:
            c.max_coeff_bits = bits
