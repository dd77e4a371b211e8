"""Group closures: enumeration, Cayley tables, centres, irreducibility."""

import numpy as np
import pytest

from specmul.circle import ONE, UnitPoint
from specmul.cli import (
    _param_closure_count,
    _q8_generators,
    _restricted_tadpole_generators,
)
from specmul.constructions import (
    MillerMorenoParams,
    RationalAngle,
    default_miller_moreno,
    miller_moreno,
    tadpole,
)
from specmul.errors import ClosureRefusedError, IncompleteClosureError
from specmul.groups import (
    GroupClosure,
    centre,
    close,
    closure_from_json,
    closure_to_json,
    is_irreducible,
    quotient_order_mod_centre,
)
from specmul.linalg import Dense, Diagonal, MonomialCycle, matmul


def cyclic_generator(p):
    return Diagonal(tuple(UnitPoint.exact(j, p) for j in range(p)))


class TestClose:
    def test_cyclic_group(self):
        c = close([cyclic_generator(5)])
        assert c.complete and c.order == 5
        assert centre(c) == list(range(5))
        assert quotient_order_mod_centre(c) == 1

    def test_quaternion_group(self):
        c = close(_q8_generators())
        assert c.complete and c.order == 8
        assert len(centre(c)) == 2
        assert quotient_order_mod_centre(c) == 4

    def test_identity_is_element_zero(self):
        c = close(_q8_generators())
        assert np.allclose(c.elements[0].to_dense(), np.eye(2))
        assert c.index_of(c.generators[0]) == c.gen_indices[0]

    def test_budget_stops_cleanly(self):
        c = close(_q8_generators(), max_elements=5)
        assert not c.complete
        assert c.order <= 5
        with pytest.raises(IncompleteClosureError):
            c.cayley_table()

    def test_refuses_approx_structured(self):
        g = Diagonal((UnitPoint.approx(0.123), ONE))
        with pytest.raises(ClosureRefusedError):
            close([g])

    def test_no_generators(self):
        with pytest.raises(ValueError):
            close([])

    def test_duplicate_generators_collapse(self):
        g = cyclic_generator(3)
        c = close([g, g])
        assert c.order == 3
        assert len(c.generators) == 1

    def test_mixed_families_densify(self):
        # same group given as (diagonal, monomial) and as dense matrices
        structured = close(_q8_generators())
        mixed = close([_q8_generators()[0], Dense(_q8_generators()[1].to_dense())])
        assert all(isinstance(e, Dense) for e in mixed.elements)
        assert mixed.complete and mixed.order == structured.order

    def test_dense_unitary_closure(self):
        dense_gens = [Dense(g.to_dense()) for g in _q8_generators()]
        c = close(dense_gens)
        assert c.complete and c.order == 8


@pytest.fixture(scope="module")
def q8():
    return close(_q8_generators())


class TestCayleyTable:
    def test_against_brute_force(self, q8):
        cay = q8.cayley_table()
        for i in range(q8.order):
            for j in range(q8.order):
                prod = matmul(q8.elements[i], q8.elements[j])
                assert q8.index_of(prod) == cay[i, j]

    def test_is_a_latin_square(self, q8):
        cay = q8.cayley_table()
        want = np.arange(q8.order)
        for i in range(q8.order):
            assert np.array_equal(np.sort(cay[i]), want)
            assert np.array_equal(np.sort(cay[:, i]), want)

    def test_inverse_index(self, q8):
        for i in range(q8.order):
            j = q8.inverse_index(i)
            assert np.allclose(
                matmul(q8.elements[i], q8.elements[j]).to_dense(), np.eye(2),
                atol=1e-12)


class TestMillerMorenoClosures:
    def test_order_21_with_trivial_scalar(self):
        c = close(miller_moreno(default_miller_moreno(3, 7)))
        assert c.complete and c.order == 21
        assert len(centre(c)) == 1

    def test_order_63_with_ninth_root_scalar(self):
        params = MillerMorenoParams(
            3, 7, ((1, 2, 4),), (RationalAngle(1, 9),))
        c = close(miller_moreno(params))
        assert c.complete and c.order == 63
        assert len(centre(c)) == 3
        assert quotient_order_mod_centre(c) == 21

    def test_order_453_large_prime(self):
        c = close(miller_moreno(default_miller_moreno(3, 151)))
        assert c.complete and c.order == 453

    def test_inverses_present(self):
        c = close(miller_moreno(default_miller_moreno(3, 7)))
        for i in range(c.order):
            c.inverse_index(i)  # raises if missing


class TestRestrictedTadpole:
    def test_order_matches_parameter_space_oracle(self):
        p = 3
        gens = _restricted_tadpole_generators(p)
        want = _param_closure_count(gens, budget=10000)
        c = close([tadpole(g) for g in gens], max_elements=10000)
        assert c.complete
        assert c.order == want == p ** (3 * p - 2)


class TestIsIrreducible:
    def test_cyclic_is_reducible(self):
        assert not is_irreducible(close([cyclic_generator(4)]))

    def test_q8_representation_is_irreducible(self):
        assert is_irreducible(close(_q8_generators()))

    def test_accepts_plain_arrays(self):
        x = np.array([[0, 1], [1, 0]], dtype=complex)
        z = np.diag([1.0, -1.0]).astype(complex)
        assert is_irreducible([x, z])
        assert not is_irreducible([z, np.eye(2, dtype=complex)])

    def test_block_structure_is_reducible(self):
        gens = [tadpole(g) for g in _restricted_tadpole_generators(3)]
        assert not is_irreducible(gens)

    def test_empty(self):
        assert not is_irreducible([])

    def test_dimension_check(self):
        from specmul.errors import DimensionMismatchError
        with pytest.raises(DimensionMismatchError):
            is_irreducible([np.eye(2, dtype=complex)], dim=3)


class TestJsonRoundTrip:
    def test_round_trip(self):
        c = close(_q8_generators())
        back = closure_from_json(closure_to_json(c, include_cayley=True))
        assert isinstance(back, GroupClosure)
        assert back.order == 8 and back.complete
        assert np.array_equal(back.cayley_table(), c.cayley_table())

    def test_tampered_order_rejected(self):
        d = closure_to_json(close(_q8_generators()))
        d["order"] = 9
        with pytest.raises(ValueError):
            closure_from_json(d)
