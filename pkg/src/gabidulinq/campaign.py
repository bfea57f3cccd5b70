"""Reproducible Monte-Carlo decoding campaigns and operation-count benches.

Everything here is deterministic given the configured seed: per-trial seeds
are derived arithmetically from (seed, tau, trial index), so reports are
byte-identical across runs and trials are independent of execution order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .code import make_code, random_message, channel
from .construct import SubspaceBasis, annihilator
from .counters import OpCounter, count_ops
from .decoder import SrpInstance, decode, proportional, solve_srp_eea, solve_srp_popov
from .construct import interpolate
from .field import FieldTower, rank_over_K


@dataclass
class CampaignConfig:
    p: int
    g: int
    n: int
    k: int
    taus: list[int] = dc_field(default_factory=lambda: [0])
    trials: int = 100
    seed: int = 0
    solver: str = "popov"
    bound: int = 9

    def __post_init__(self):
        if self.solver not in ("popov", "eea", "both"):
            raise ValueError(f"unknown solver {self.solver!r}")
        if self.trials < 1:
            raise ValueError("trials must be positive")

    def as_dict(self) -> dict:
        return {"p": self.p, "g": self.g, "n": self.n, "k": self.k,
                "taus": list(self.taus), "trials": self.trials,
                "seed": self.seed, "solver": self.solver}


def trial_seed(base: int, tau: int, t: int) -> int:
    return base * 1_000_003 + tau * 10_007 + t


def run_campaign(config: CampaignConfig) -> dict:
    """Run the simulation and return the (JSON-ready) report dictionary."""
    tower = FieldTower(config.p, config.g)
    code = make_code(tower, config.n, config.k)
    primary = "popov" if config.solver == "both" else config.solver

    per_tau = []
    agree = 0
    compared = 0
    for tau in config.taus:
        successes = 0
        total_ops = 0
        max_bits = 0
        for t in range(config.trials):
            ts = trial_seed(config.seed, tau, t)
            f = random_message(code, random.Random(2 * ts + 1), config.bound)
            r, _, _ = channel(code, f, tau, 2 * ts, config.bound)
            counter = OpCounter()
            with count_ops(counter):
                result = decode(code, r, solver=primary)
            if result.ok and result.message == f:
                successes += 1
            total_ops += counter.total
            max_bits = max(max_bits, counter.max_coeff_bits)
            if config.solver == "both":
                rhat = interpolate(tower, zip(code.g, r))
                inst = SrpInstance(rhat, code.Mg, code.k)
                try:
                    if proportional(solve_srp_popov(inst), solve_srp_eea(inst)):
                        agree += 1
                except Exception:
                    pass
                compared += 1
        per_tau.append({
            "tau": tau,
            "successes": successes,
            "trials": config.trials,
            "mean_ops": total_ops / config.trials,
            "max_coeff_bits": max_bits,
        })

    return {
        "config": config.as_dict(),
        "per_tau": per_tau,
        "solver_agreement": (agree / compared) if compared else 1.0,
    }


def run_decode_bench(p: int, g: int, sizes, trials: int = 20, seed: int = 0,
                     solver: str = "popov") -> dict:
    """Mean decode operation counts over a range of code lengths.

    For each n the bench uses k = max(1, n // 3) and the maximal uniquely
    decodable tau.  A doubling ratio above 5.0 contradicts the quadratic
    complexity target (a cubic decoder would sit near 8) and is flagged.
    """
    tower = FieldTower(p, g)
    rows = []
    prev_ops = None
    for n in sizes:
        k = max(1, n // 3)
        tau = (n - k) // 2
        code = make_code(tower, n, k)
        total = 0
        for t in range(trials):
            ts = trial_seed(seed, tau, t) + n
            f = random_message(code, random.Random(2 * ts + 1))
            r, _, _ = channel(code, f, tau, 2 * ts)
            counter = OpCounter()
            with count_ops(counter):
                decode(code, r, solver=solver)
            total += counter.total
        mean_ops = total / trials
        ratio = (mean_ops / prev_ops) if prev_ops else None
        rows.append({"n": n, "k": k, "tau": tau, "mean_ops": mean_ops,
                     "ratio": ratio})
        prev_ops = mean_ops
    violation = any(r["ratio"] is not None and r["ratio"] > 5.0 for r in rows)
    return {"kind": "decode", "p": p, "g": g, "trials": trials, "seed": seed,
            "solver": solver, "rows": rows, "violation": violation}


def random_subspace_basis(tower: FieldTower, s: int, rng: random.Random,
                          bound: int = 9) -> SubspaceBasis:
    while True:
        vs = [tower.random_element(rng, bound) for _ in range(s)]
        if rank_over_K([vs]) == s:
            return SubspaceBasis(tower, vs)


def run_annihilator_bench(p: int, g: int, sizes, seed: int = 0) -> dict:
    """Operation counts of the annihilator construction per subspace size."""
    tower = FieldTower(p, g)
    rng = random.Random(seed)
    rows = []
    prev_ops = None
    for s in sizes:
        if s > tower.m:
            raise ValueError(f"subspace size {s} exceeds extension degree {tower.m}")
        basis = random_subspace_basis(tower, s, rng)
        counter = OpCounter()
        with count_ops(counter):
            annihilator(basis)
        ratio = (counter.total / prev_ops) if prev_ops else None
        rows.append({"s": s, "ops": counter.total, "ratio": ratio,
                     "max_coeff_bits": counter.max_coeff_bits})
        prev_ops = counter.total
    violation = any(r["ratio"] is not None and r["ratio"] > 5.0 for r in rows)
    return {"kind": "annihilator", "p": p, "g": g, "seed": seed,
            "rows": rows, "violation": violation}
