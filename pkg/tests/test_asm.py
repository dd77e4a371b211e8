"""Defect measurement: single pairs, exhaustive closures, sampled families."""

import json
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specmul.asm import (
    AsmReport,
    Histogram,
    PairDefect,
    conversion_check,
    measure_asm,
    measure_asm_sampled,
    measure_sub,
    pair_defect,
    pair_sub_defect,
)
from specmul.circle import ONE, UnitPoint, arg_distance
from specmul.cli import _q8_generators
from specmul.constructions import (
    SrElement,
    SrParams,
    default_miller_moreno,
    miller_moreno,
    sample_tadpole,
    sr_pair_gamma,
    sr_ratio_bound,
    sr_sample,
    sr_sampler,
    tadpole,
    tadpole_sampler,
)
from specmul.errors import IncompleteClosureError, ZeroSpectralRadiusError
from specmul.groups import close
from specmul.linalg import Dense, Diagonal, matmul

RNG = np.random.default_rng(20240911)


def oracle_defect(a, b):
    """Triple loop over exact spectra with Fraction arithmetic throughout."""

    def fr(spectrum):
        return [p.angle.as_fraction() for p in spectrum.points]

    def circ(f):
        f %= 1
        return min(f, 1 - f)

    sa, sb = fr(a.spectrum()), fr(b.spectrum())
    sab = fr(matmul(a, b).spectrum())
    return max(min(circ(g - x - y) for x in sa for y in sb) for g in sab)


class TestPairDefect:
    def test_quaternion_generators(self):
        i, j = _q8_generators()
        d = pair_defect(i, j)
        # spectra are {i, -i} so products are {1, -1}; gamma = i sits a
        # quarter turn away
        assert d.defect_exact == Fraction(1, 4)
        assert d.defect == 0.25

    def test_commuting_diagonals_have_zero_defect(self):
        a = Diagonal((UnitPoint.exact(1, 5), UnitPoint.exact(2, 5)))
        b = Diagonal((UnitPoint.exact(1, 3), UnitPoint.exact(2, 3)))
        assert pair_defect(a, b).defect_exact == 0

    @given(st.integers(min_value=0, max_value=10 ** 6))
    @settings(max_examples=60, deadline=None)
    def test_exact_path_matches_fraction_oracle(self, seed):
        rng = np.random.default_rng(seed)
        p = int(rng.choice([3, 5]))
        a = tadpole(sample_tadpole(p, rng, exact=True))
        b = tadpole(sample_tadpole(p, rng, exact=True))
        d = pair_defect(a, b)
        assert d.defect_exact is not None
        assert d.defect_exact == oracle_defect(a, b)

    def test_float_path_agrees_with_exact(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            a = tadpole(sample_tadpole(3, rng, exact=True))
            b = tadpole(sample_tadpole(3, rng, exact=True))
            exact = pair_defect(a, b)
            loose = pair_defect(Dense(a.to_dense()), Dense(b.to_dense()))
            assert loose.defect_exact is None
            assert loose.defect == pytest.approx(exact.defect, abs=1e-9)

    def test_witness_is_consistent(self):
        rng = np.random.default_rng(5)
        for _ in range(25):
            a = tadpole(sample_tadpole(3, rng, exact=True))
            b = tadpole(sample_tadpole(3, rng, exact=True))
            d = pair_defect(a, b)
            gammas = {p.angle.as_fraction() for p in d.spectrum_ab}
            assert d.witness_gamma.angle.as_fraction() % 1 in {g % 1 for g in gammas}
            prod = d.witness_alpha * d.witness_beta
            assert arg_distance(d.witness_gamma, prod) == d.defect_exact

    def test_defect_range(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            a = tadpole(sample_tadpole(3, rng))
            b = tadpole(sample_tadpole(3, rng))
            assert 0.0 <= pair_defect(a, b).defect <= 0.5

    def test_matrices_optional(self):
        i, j = _q8_generators()
        assert pair_defect(i, j, with_matrices=False).matrix_a is None
        assert pair_defect(i, j).matrix_a is not None


class TestMeasureAsm:
    def test_cyclic_group_is_perfectly_multiplicative(self):
        c = close([Diagonal(tuple(UnitPoint.exact(t, 7) for t in range(7)))])
        r = measure_asm(c)
        assert r.epsilon_exact == 0
        assert r.epsilon == 0.0
        assert r.group_order == 7 and r.pair_total == 49

    def test_quaternion_level(self):
        r = measure_asm(close(_q8_generators()))
        assert r.epsilon_exact == Fraction(1, 4)
        assert r.exact and r.mode == "exhaustive" and r.bound == "attained"
        assert r.worst.defect_exact == Fraction(1, 4)

    def test_mm_small_exact_value_regression(self):
        c = close(miller_moreno(default_miller_moreno(3, 7)))
        r = measure_asm(c)
        assert r.epsilon_exact == Fraction(1, 7)
        assert sum(r.histogram.counts) == r.pair_total == 21 * 21

    def test_matches_pair_loop(self):
        c = close(miller_moreno(default_miller_moreno(3, 7)))
        r = measure_asm(c, collect_pairs=True)
        grid = {(i, j): v for i, j, v in r.pair_rows}
        for i in (0, 1, 5, 11, 20):
            for j in (0, 2, 7, 13, 19):
                want = pair_defect(c.elements[i], c.elements[j]).defect
                assert grid[(i, j)] == pytest.approx(want, abs=1e-15)

    def test_worst_indices_point_at_maximum(self):
        c = close(miller_moreno(default_miller_moreno(3, 7)))
        r = measure_asm(c)
        _, i, j = r.worst.pair
        redo = pair_defect(c.elements[i], c.elements[j])
        assert redo.defect_exact == r.epsilon_exact

    def test_conjugation_invariance_float_path(self):
        z = RNG.normal(size=(2, 2)) + 1j * RNG.normal(size=(2, 2))
        q, rr = np.linalg.qr(z)
        u = q * (np.diag(rr) / np.abs(np.diag(rr)))
        gens = [Dense(u @ g.to_dense() @ u.conj().T) for g in _q8_generators()]
        r = measure_asm(close(gens))
        assert not r.exact and r.epsilon_exact is None
        assert r.epsilon == pytest.approx(0.25, abs=1e-8)

    def test_incomplete_closure_refused(self):
        c = close(_q8_generators(), max_elements=5)
        with pytest.raises(IncompleteClosureError):
            measure_asm(c)

    def test_worker_count_is_irrelevant(self):
        c = close(miller_moreno(default_miller_moreno(3, 7)))
        r1 = measure_asm(c, workers=1)
        r2 = measure_asm(c, workers=3)
        assert r1.epsilon_exact == r2.epsilon_exact
        assert r1.histogram == r2.histogram


class TestMeasureAsmSampled:
    def test_same_seed_reproduces_exactly(self):
        s = tadpole_sampler(3)
        r1 = measure_asm_sampled(s, 400, seed=99)
        r2 = measure_asm_sampled(s, 400, seed=99)
        assert r1.epsilon == r2.epsilon
        assert r1.histogram == r2.histogram
        assert r1.worst.pair == r2.worst.pair
        assert r1.worst.defect == r2.worst.defect

    def test_different_seeds_differ(self):
        s = tadpole_sampler(3)
        assert (measure_asm_sampled(s, 200, seed=1).epsilon
                != measure_asm_sampled(s, 200, seed=2).epsilon)

    def test_worker_split_does_not_change_results(self):
        s = tadpole_sampler(3)
        r1 = measure_asm_sampled(s, 2048, seed=5, workers=1)
        r2 = measure_asm_sampled(s, 2048, seed=5, workers=2)
        assert r1.epsilon == r2.epsilon
        assert r1.histogram == r2.histogram
        assert r1.worst.defect == r2.worst.defect

    def test_exact_sampler_reports_exact_worst(self):
        s = tadpole_sampler(3, exact=True)
        r = measure_asm_sampled(s, 300, seed=17)
        assert r.exact
        assert r.epsilon_exact is not None
        assert float(r.epsilon_exact) == r.epsilon
        assert r.mode == "sampled" and r.bound == "lower"
        assert r.sample_count == 300 and r.seed == 17

    def test_needs_at_least_one_pair(self):
        with pytest.raises(ValueError):
            measure_asm_sampled(tadpole_sampler(3), 0, seed=1)


class TestMeasureSub:
    def test_exhaustive_list(self):
        rng = np.random.default_rng(23)
        params = SrParams(0.5)
        elems = [sr_sample(params, rng) for _ in range(8)]
        r = measure_sub(elems)
        assert r.kind == "sub" and r.gamma_convention == "nonzero"
        assert r.pair_total == 64
        assert r.epsilon <= sr_ratio_bound(0.5)
        want = max(pair_sub_defect(a, b).defect for a in elems for b in elems)
        assert r.epsilon == pytest.approx(want)

    def test_sampled_mode(self):
        r = measure_sub(sr_sampler(SrParams(0.5)), pair_count=500, seed=4)
        r2 = measure_sub(sr_sampler(SrParams(0.5)), pair_count=500, seed=4)
        assert r.epsilon == r2.epsilon
        assert 0.0 < r.epsilon <= sr_ratio_bound(0.5)
        assert r.mode == "sampled" and r.seed == 4

    def test_sampled_mode_needs_seed(self):
        with pytest.raises(ValueError):
            measure_sub(sr_sampler(SrParams(0.5)), pair_count=10)

    def test_empty_list(self):
        with pytest.raises(ValueError):
            measure_sub([])

    def test_closed_form_matches_dense_eigenvalues(self):
        rng = np.random.default_rng(29)
        params = SrParams(0.6, n=4)
        for _ in range(30):
            a, b = sr_sample(params, rng), sr_sample(params, rng)
            closed = pair_sub_defect(a, b).defect
            loose = pair_sub_defect(a.matrix(), b.matrix()).defect
            assert closed == pytest.approx(loose, abs=1e-8)

    def test_zero_spectral_radius(self):
        dead = SrElement(1.0, (1.0,), (-1.0,))  # 1 + <x, y> = 0
        with pytest.raises(ZeroSpectralRadiusError):
            pair_sub_defect(dead, dead)
        nil = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
        with pytest.raises(ZeroSpectralRadiusError):
            pair_sub_defect(nil, nil)

    def test_pair_gamma_used_for_rank_one_pairs(self):
        rng = np.random.default_rng(31)
        params = SrParams(0.4)
        a, b = sr_sample(params, rng), sr_sample(params, rng)
        d = pair_sub_defect(a, b)
        assert d.spectrum_ab == (sr_pair_gamma(a, b),)


class TestConversions:
    def test_fraction_input(self):
        sub, asm = conversion_check(Fraction(1, 4))
        assert sub == pytest.approx(math.pi / 2)
        assert asm == Fraction(1, 8) and isinstance(asm, Fraction)

    def test_float_input(self):
        sub, asm = conversion_check(0.1)
        assert sub == pytest.approx(0.2 * math.pi)
        assert asm == pytest.approx(0.05)


class TestReportSerialization:
    def test_round_trip_through_json(self):
        r = measure_asm(close(_q8_generators()), collect_pairs=True)
        blob = json.dumps(r.to_json_dict())
        back = AsmReport.from_json_dict(json.loads(blob))
        assert back.epsilon == r.epsilon
        assert back.epsilon_exact == r.epsilon_exact
        assert back.histogram == r.histogram
        assert back.worst.defect_exact == r.worst.defect_exact
        assert back.worst.witness_gamma == r.worst.witness_gamma
        assert back.pair_rows == r.pair_rows
        assert back.group_order == r.group_order

    def test_sub_report_round_trip(self):
        r = measure_sub(sr_sampler(SrParams(0.5)), pair_count=50, seed=8)
        back = AsmReport.from_json_dict(json.loads(json.dumps(r.to_json_dict())))
        assert back.kind == "sub" and back.gamma_convention == "nonzero"
        assert back.epsilon == r.epsilon
        assert back.worst.witness_gamma == pytest.approx(r.worst.witness_gamma)

    def test_pair_defect_round_trip(self):
        i, j = _q8_generators()
        d = pair_defect(i, j)
        back = PairDefect.from_json_dict(json.loads(json.dumps(d.to_json_dict())))
        assert back.defect_exact == d.defect_exact
        assert back.spectrum_ab == d.spectrum_ab
        assert back.matrix_a == d.matrix_a

    def test_histogram_shape(self):
        r = measure_asm(close(_q8_generators()), bins=10)
        h = r.histogram
        assert len(h.edges) == 11 and len(h.counts) == 10
        assert h.edges[0] == 0.0 and h.edges[-1] == 0.5
        assert sum(h.counts) == r.pair_total
        back = Histogram.from_json_dict(h.to_json_dict())
        assert back == h
