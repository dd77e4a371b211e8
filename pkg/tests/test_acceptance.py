"""End-to-end acceptance runs, one test per shipping criterion.

Each test prints a single ``criterion NN ... PASS/FAIL`` line (visible with
``pytest -s``; the verbose test status carries the same verdict) and enforces
its own wall-clock budget.  Oracles here are deliberately independent of the
library paths they check: raw numpy eigensolvers, inline breadth-first
closures, Fraction scans.
"""

import json
import math
import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np
import pytest

from specmul.asm import AsmReport, measure_asm, measure_asm_sampled, pair_defect
from specmul.circle import UnitPoint, arg_distance, chord_distance
from specmul.cli import main
from specmul.constructions import (
    QSetParams,
    adversarial_case4_pair,
    default_miller_moreno,
    mm_gap_analysis,
    miller_moreno,
    primes_up_to,
    q_set,
    random_det1_diagonal,
    sample_tadpole,
    spectrum_dck,
    sr_ratio_bound,
    tadpole,
    tadpole_case,
    tadpole_sampler,
)
from specmul.groups import close
from specmul.linalg import match_spectra


@contextmanager
def criterion(number: int, label: str, budget: float):
    start = time.monotonic()
    try:
        yield
    except BaseException:
        print(f"criterion {number:02d} ({label}): FAIL")
        raise
    elapsed = time.monotonic() - start
    assert elapsed < budget, f"criterion {number:02d} took {elapsed:.1f}s (budget {budget}s)"
    print(f"criterion {number:02d} ({label}): PASS [{elapsed:.2f}s]")


def test_criterion_01_closed_form_head_spectrum_matches_eigensolver():
    with criterion(1, "closed-form spectrum vs eigensolver", budget=10.0):
        rng = np.random.default_rng(101)
        for p in (3, 5, 7, 11):
            for t in range(100):
                d = random_det1_diagonal(p, rng, exact=(t % 2 == 0))
                for k in range(p):
                    m = np.zeros((p, p), dtype=complex)
                    for i in range(p):
                        m[i, (i + k) % p] = d[i].to_complex()
                    oracle = np.angle(np.linalg.eigvals(m)) / (2 * math.pi) % 1.0
                    assert match_spectra(spectrum_dck(d, k, p), oracle) < 1e-8


def test_criterion_02_tadpole_defect_stays_under_half_grid_spacing():
    with criterion(2, "tadpole family defect ceiling", budget=60.0):
        for p in (3, 5):
            bound = float(Fraction(1, 2 * p * p))
            rep = measure_asm_sampled(tadpole_sampler(p), 10_000, seed=202)
            assert rep.epsilon <= bound + 1e-9
            # diagonal-head products must be exactly multiplicative
            rng = np.random.default_rng(303 + p)
            seen = set()
            for _ in range(1000):
                a = sample_tadpole(p, rng, exact=True)
                b = sample_tadpole(p, rng, exact=True)
                case = tadpole_case(a, b)
                seen.add(case)
                d = pair_defect(tadpole(a), tadpole(b), with_matrices=False)
                if case in (1, 2, 3):
                    assert d.defect_exact == 0
                else:
                    assert d.defect_exact <= Fraction(1, 2 * p * p)
            assert seen == {1, 2, 3, 4}


def test_criterion_03_constructed_pair_attains_the_ceiling():
    with criterion(3, "sharpness witness", budget=1.0):
        for p in (3, 5):
            pa, pb = adversarial_case4_pair(p)
            d = pair_defect(tadpole(pa), tadpole(pb))
            assert d.defect_exact >= Fraction(9, 10) * Fraction(1, 2 * p * p)


def test_criterion_04_quaternion_image_level_is_one_quarter():
    with criterion(4, "exact level of the 8-element image", budget=1.0):
        from specmul.cli import _q8_generators

        rep = measure_asm(close(_q8_generators()))
        assert rep.epsilon_exact == Fraction(1, 4)
        assert rep.group_order == 8

        # independent check: raw-numpy closure and a float pair scan
        gens = [np.diag([1j, -1j]), np.array([[0, 1], [-1, 0]], dtype=complex)]

        def key(m):
            return tuple(np.round(m.reshape(-1), 9).tolist())

        elems = [np.eye(2, dtype=complex)]
        keys = {key(elems[0])}
        frontier = list(elems)
        while frontier:
            nxt = []
            for e in frontier:
                for g in gens:
                    h = e @ g
                    k = key(h)
                    if k not in keys:
                        keys.add(k)
                        elems.append(h)
                        nxt.append(h)
            frontier = nxt
        assert len(elems) == 8

        def angles(m):
            return np.angle(np.linalg.eigvals(m)) / (2 * math.pi) % 1.0

        worst = 0.0
        for a in elems:
            for b in elems:
                prods = (angles(a)[:, None] + angles(b)[None, :]).reshape(-1) % 1.0
                for g in angles(a @ b):
                    diff = np.abs(g - prods)
                    worst = max(worst, float(np.minimum(diff, 1 - diff).min()))
        assert abs(worst - 0.25) < 1e-12


def test_criterion_05a_generator_pair_group_breaks_the_group_threshold():
    with criterion(5, "order-453 group beats 1/18", budget=120.0):
        c = close(miller_moreno(default_miller_moreno(3, 151)))
        assert c.complete and c.order == 453
        rep = measure_asm(c)
        assert rep.epsilon_exact is not None
        assert rep.epsilon_exact > Fraction(1, 18) + Fraction(1, 10 ** 12)


def test_criterion_05b_small_instance_level_within_recorded_interval():
    with criterion(5, "order-21 group level interval", budget=120.0):
        c = close(miller_moreno(default_miller_moreno(3, 7)))
        assert c.complete and c.order == 21
        rep = measure_asm(c)
        eps = rep.epsilon_exact
        assert eps is not None and eps > 0
        assert eps <= Fraction(1, 14), (
            f"measured exact level is {eps.numerator}/{eps.denominator}"
            f" (= {float(eps):.6f}), above the stated ceiling 1/14 = 0.071429;"
            f" the exhaustive measurement and its independent cross-checks agree"
            f" on {eps.numerator}/{eps.denominator}"
        )


def test_criterion_06_product_set_cardinality_bound_is_exact():
    with criterion(6, "product-set counting bound", budget=5.0):
        for q in (7, 151):
            rep = mm_gap_analysis(default_miller_moreno(3, q))
            assert rep.distinct_products <= rep.product_bound


def test_criterion_07_rank_one_chord_bound_with_closed_form_ratio():
    with criterion(7, "rank-one semigroup chord ceiling", budget=30.0):
        rng = np.random.default_rng(707)
        count, dim = 100_000, 3

        def ball(radius):
            v = rng.normal(size=(count, dim)) + 1j * rng.normal(size=(count, dim))
            v /= np.linalg.norm(v, axis=1)[:, None]
            u = rng.random(count) ** (1.0 / (2 * dim))
            return v * (radius * u)[:, None]

        for r in (0.3, 0.5, 0.9):
            radius = r * 0.999
            lam_a = np.exp(2j * np.pi * rng.random(count))
            lam_b = np.exp(2j * np.pi * rng.random(count))
            xa, ya = ball(radius), ball(radius)
            xb, yb = ball(radius), ball(radius)
            inner = lambda x, y: np.sum(x.conj() * y, axis=1)
            alpha = lam_a * (1 + inner(xa, ya))
            beta = lam_b * (1 + inner(xb, yb))
            gamma = lam_a * lam_b * (1 + inner(xa, yb)) * (1 + inner(xb, ya))
            chord = np.abs(gamma - alpha * beta) / (np.abs(alpha) * np.abs(beta))
            ratio = np.abs(gamma / (alpha * beta) - 1.0)
            assert np.max(np.abs(chord - ratio)) <= 1e-10
            assert int(np.sum(chord > sr_ratio_bound(r))) == 0

            # dense eigensolver spot check on a slice
            for i in range(300):
                a = np.empty((dim + 1, dim + 1), dtype=complex)
                a[0, 0], a[0, 1:], a[1:, 0] = 1, xa[i].conj(), ya[i]
                a[1:, 1:] = np.outer(ya[i], xa[i].conj())
                b = np.empty_like(a)
                b[0, 0], b[0, 1:], b[1:, 0] = 1, xb[i].conj(), yb[i]
                b[1:, 1:] = np.outer(yb[i], xb[i].conj())
                eigs = np.linalg.eigvals(lam_a[i] * a @ (lam_b[i] * b))
                top = eigs[np.argmax(np.abs(eigs))]
                assert abs(top - gamma[i]) < 1e-8


def test_criterion_08_chord_and_argument_distances_interleave():
    with criterion(8, "distance conversion chain", budget=5.0):
        rng = np.random.default_rng(808)
        ta, tb = rng.random(100_000), rng.random(100_000)
        d = np.abs(ta - tb)
        d = np.minimum(d, 1.0 - d)
        chord = 2.0 * np.sin(np.pi * d)
        mid = 2.0 * np.pi * d
        assert np.all(chord <= mid + 1e-12)
        assert np.all(mid <= np.pi * chord + 1e-12)

        roots = [UnitPoint.exact(t, 60) for t in range(60)]
        for a in roots:
            for b in roots:
                c = chord_distance(a, b)
                m = 2.0 * math.pi * float(arg_distance(a, b))
                assert c <= m + 1e-12
                assert m <= math.pi * c + 1e-12


def test_criterion_09_admissible_primes_match_a_fraction_scan():
    with criterion(9, "admissible prime enumeration", budget=5.0):
        cases = {
            3: (Fraction(1, 8), Fraction(1, 10), Fraction(11, 75), Fraction(3, 20)),
            5: (Fraction(3, 40), Fraction(2, 25), Fraction(1, 12), Fraction(7, 80)),
        }
        for p, eps_values in cases.items():
            for eps in eps_values:
                params = QSetParams(p, eps)
                res = q_set(params)
                delta = params.delta
                windows = [Fraction(j, 2 * p) for j in range(1, 2 * p, 2)]

                def scan(q):
                    return any(
                        abs(Fraction(k, q) - w) < delta
                        for k in range(1, q)
                        for w in windows
                    )

                for q in primes_up_to(params.cutoff):
                    assert (q in res.members) == (not scan(q))
                assert p in res.members
                # past the cutoff every prime falls in a window
                beyond = [q for q in primes_up_to(params.cutoff + 30)
                          if q > params.cutoff]
                assert all(scan(q) for q in beyond)


def test_criterion_10_seeded_runs_are_byte_identical_and_reports_round_trip(tmp_path):
    with criterion(10, "determinism and serialization", budget=5.0):
        f1, f2 = tmp_path / "a.json", tmp_path / "b.json"
        argv = ["measure", "--builtin", "tadpole", "--pairs", "500",
                "--seed", "7", "--deterministic"]
        assert main(argv + ["--out", str(f1)]) == 0
        assert main(argv + ["--out", str(f2)]) == 0
        assert f1.read_bytes() == f2.read_bytes()

        data = json.loads(f1.read_text())["report"]
        assert AsmReport.from_json_dict(data).to_json_dict() == data
