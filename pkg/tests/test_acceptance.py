"""Acceptance suite: one test per criterion, each printing a pass/fail line.

The unique-decoding campaign (criteria 1-3) runs the full parameter grid:
p=5 with n in {3, 4} and p=13 with n in {6, 9, 12}, every dimension
1 <= k <= n-2, every error rank tau <= floor((n-k)/2), 200 seeded trials
per configuration.  Run with ``pytest -s tests/test_acceptance.py`` to see
the per-criterion lines; the whole suite takes several minutes.
"""

import random

import pytest

from gabidulinq import (CampaignConfig, FieldTower, SrpInstance, annihilator,
                        channel, check_key_equation, decode, encode,
                        error_span, interpolate, make_code, normalized,
                        proportional, random_message, rank_over_K,
                        run_annihilator_bench, run_campaign, run_decode_bench,
                        solve_srp_eea, solve_srp_popov)
from gabidulinq.campaign import random_subspace_basis, trial_seed
from gabidulinq import jsonio

TRIALS = 200

GRID = [(5, 2, n) for n in (3, 4)] + [(13, 2, n) for n in (6, 9, 12)]

_towers = {}
_codes = {}


def tower(p, g):
    if (p, g) not in _towers:
        _towers[(p, g)] = FieldTower(p, g)
    return _towers[(p, g)]


def code_for(p, g, n, k):
    key = (p, g, n, k)
    if key not in _codes:
        _codes[key] = make_code(tower(p, g), n, k)
    return _codes[key]


def grid_configs():
    for p, g, n in GRID:
        for k in range(1, n - 1):
            for tau in range((n - k) // 2 + 1):
                yield p, g, n, k, tau


def report(num, name, violations, total):
    status = "PASS" if violations == 0 else "FAIL"
    print(f"[{status}] criterion {num} ({name}): "
          f"{violations} violations / {total} checks")
    assert violations == 0


@pytest.fixture(scope="module")
def campaign_stats():
    """Shared sweep for criteria 1-3; every trial checks all three."""
    stats = {"trials": 0, "decode_fail": 0, "keyeq_fail": 0, "shape_fail": 0}
    for p, g, n, k, tau in grid_configs():
        code = code_for(p, g, n, k)
        tw = code.tower
        for t in range(TRIALS):
            ts = trial_seed(hash((p, n, k, tau)) % (1 << 30), tau, t)
            f = random_message(code, random.Random(2 * ts + 1))
            r, _, e = channel(code, f, tau, 2 * ts)
            stats["trials"] += 1

            # criterion 1: the real decode path returns the injected message
            res = decode(code, r, solver="popov")
            if not (res.ok and res.message == f):
                stats["decode_fail"] += 1

            # criterion 2: key equation with the true error span polynomial
            lam = error_span(tw, e)
            rhat = interpolate(tw, zip(code.g, r))
            if not check_key_equation(lam, rhat, f, code.Mg):
                stats["keyeq_fail"] += 1

            # criterion 3: normalized SRP solution shape
            sol = solve_srp_popov(SrpInstance(rhat, code.Mg, code.k))
            L, O = normalized(sol)
            ok = (L.is_monic() and L.degree == tau
                  and O == L * f
                  and all(L.evaluate(ei).is_zero() for ei in e))
            if not ok:
                stats["shape_fail"] += 1
    return stats


def test_criterion_1_unique_decoding(campaign_stats):
    report(1, "unique-decoding campaign",
           campaign_stats["decode_fail"], campaign_stats["trials"])


def test_criterion_2_key_equation(campaign_stats):
    report(2, "key-equation identity",
           campaign_stats["keyeq_fail"], campaign_stats["trials"])


def test_criterion_3_solution_shape(campaign_stats):
    report(3, "SRP solution shape",
           campaign_stats["shape_fail"], campaign_stats["trials"])


def test_criterion_4_solver_cross_validation():
    configs = list(grid_configs())
    violations = 0
    total = 0
    i = 0
    while total < 500:
        p, g, n, k, tau = configs[i % len(configs)]
        i += 1
        code = code_for(p, g, n, k)
        f = random_message(code, random.Random(7000 + total))
        r, _, _ = channel(code, f, tau, 9000 + total)
        rhat = interpolate(code.tower, zip(code.g, r))
        inst = SrpInstance(rhat, code.Mg, code.k)
        if not proportional(solve_srp_popov(inst), solve_srp_eea(inst)):
            violations += 1
        total += 1
    report(4, "solver cross-validation", violations, total)


def test_criterion_5_annihilator_contract():
    from gmpy2 import mpq
    violations = 0
    total = 0
    for p, g in ((5, 2), (13, 2)):
        tw = tower(p, g)
        rng = random.Random(31 * p)
        for _ in range(500):
            s = rng.randint(1, tw.m)
            basis = random_subspace_basis(tw, s, rng, bound=5)
            A = annihilator(basis)
            total += 1
            ok = A.degree == s and A.is_monic()
            for u in basis.vectors:
                ok = ok and A.evaluate(u).is_zero()
            for _ in range(20):
                comb = tw.zero()
                for u in basis.vectors:
                    comb = comb + u.scale(mpq(rng.randint(-9, 9)))
                ok = ok and A.evaluate(comb).is_zero()
            outside = 0
            while outside < 20 and s < tw.m:
                alpha = tw.random_element(rng, 5)
                if rank_over_K([list(basis.vectors) + [alpha]]) != s + 1:
                    continue
                outside += 1
                ok = ok and not A.evaluate(alpha).is_zero()
            if not ok:
                violations += 1
    report(5, "annihilator contract", violations, total)


def test_criterion_6_rank_weight_chain():
    from gabidulinq import random_rank_error, rank_weights
    violations = 0
    total = 0
    for p, g, n in ((5, 2, 4), (13, 2, 6), (13, 2, 12)):
        tw = tower(p, g)
        rng = random.Random(41 * p + n)
        for _ in range(200):
            if rng.random() < 0.5:
                v = [tw.random_element(rng, 4) for _ in range(n)]
            else:
                v = random_rank_error(tw, n, rng.randint(0, min(n, tw.m)),
                                      rng, 4)
            prof = rank_weights(tw, v)
            total += 1
            if not (prof.w1 == prof.w2 <= prof.w3 == prof.w4):
                violations += 1
    report(6, "rank-weight chain", violations, total)


def test_criterion_7_complexity_regressions():
    violations = 0
    table = run_decode_bench(13, 2, [6, 12], trials=20, seed=0)
    decode_ratio = table["rows"][1]["ratio"]
    if not decode_ratio <= 5.0:
        violations += 1
    ann = run_annihilator_bench(37, 2, [8, 16, 32], seed=0)
    ann_ratios = [r["ratio"] for r in ann["rows"][1:]]
    for ratio in ann_ratios:
        if not 3.0 <= ratio <= 5.0:
            violations += 1
    print(f"    decode ops ratio n 6->12: {decode_ratio:.2f}; "
          f"annihilator ratios s 8->16->32: "
          f"{', '.join(f'{r:.2f}' for r in ann_ratios)}")
    report(7, "complexity regressions", violations, 3)


def test_criterion_8_interpolation_round_trip():
    violations = 0
    total = 0
    for p, g, n, k, count in ((5, 2, 4, 2, 250), (13, 2, 12, 6, 250)):
        code = code_for(p, g, n, k)
        tw = code.tower
        rng = random.Random(53 * p)
        for _ in range(count):
            f = random_message(code, rng)
            pts = zip(code.g, encode(code, f))
            total += 1
            if interpolate(tw, pts) != f:
                violations += 1
    report(8, "interpolation round-trip", violations, total)


def test_criterion_9_simulation_determinism():
    config = CampaignConfig(p=5, g=2, n=4, k=2, taus=[0, 1], trials=10,
                            seed=1234, solver="both")
    b1 = jsonio.dumps(run_campaign(config)).encode()
    b2 = jsonio.dumps(run_campaign(config)).encode()
    report(9, "simulation determinism", int(b1 != b2), 1)
