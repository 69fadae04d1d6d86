from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import core_params
from veronese_type.core import MonomialIdeal
from veronese_type.errors import PreconditionError, UndefinedInputError
from veronese_type.oracle import minimal_vertex_covers
from veronese_type.stable import (
    MBInvariants,
    SquarefreeIdeal,
    alexander_dual,
    borel_generators,
    codepth,
    codim,
    facets,
    has_equal_facets,
    is_cm_sqfree_stable,
    is_squarefree_strongly_stable,
    mb,
    strongly_stable_closure,
)
from veronese_type.veronese import radical_ideal
from veronese_type.polymatroid import VeroneseParams

R7 = SquarefreeIdeal(5, ((1, 2), (1, 3, 4), (1, 3, 5), (2, 3, 4, 5)))
R11 = radical_ideal(VeroneseParams(11, (7, 4, 3, 2, 2, 1)))
R9 = radical_ideal(VeroneseParams(9, (7, 3, 3, 2, 1)))
R8 = radical_ideal(VeroneseParams(8, (5, 5, 4, 3, 1, 1)))


def brute_facets(J):
    faces = [
        set(F) for k in range(J.n + 1) for F in combinations(range(1, J.n + 1), k)
        if not J.contains_set(F)
    ]
    return sorted(tuple(sorted(F)) for F in faces if not any(F < G for G in faces))


@st.composite
def stable_ideals(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    seeds = draw(st.lists(
        st.lists(st.integers(1, n), min_size=1, max_size=n, unique=True), min_size=1, max_size=4
    ))
    return strongly_stable_closure(seeds, n)


@st.composite
def squarefree_ideals(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    gens = draw(st.lists(
        st.lists(st.integers(1, n), min_size=1, max_size=n, unique=True), min_size=1, max_size=5
    ))
    return SquarefreeIdeal(n, tuple(tuple(g) for g in gens))


class TestSquarefreeIdeal:
    def test_minimalized(self):
        J = SquarefreeIdeal(3, ((1, 2, 3), (2, 1), (3,)))
        assert J.gens == ((1, 2), (3,))

    def test_roundtrip(self):
        assert SquarefreeIdeal.from_ideal(R7.to_ideal()) == R7

    def test_from_non_squarefree(self):
        with pytest.raises(PreconditionError):
            SquarefreeIdeal.from_ideal(MonomialIdeal.from_exponents([(2, 0)]))

    def test_zero_unit(self):
        assert SquarefreeIdeal(2, ()).is_zero()
        assert SquarefreeIdeal(2, ((), (1,))).is_unit()

    def test_str(self):
        assert str(R7) == "(x1x2, x1x3x4, x1x3x5, x2x3x4x5)"


class TestStability:
    def test_examples(self):
        assert is_squarefree_strongly_stable(R7)
        assert not is_squarefree_strongly_stable(SquarefreeIdeal(3, ((2, 3),)))
        assert is_squarefree_strongly_stable(SquarefreeIdeal(3, ((1,),)))

    def test_zero_rejected(self):
        with pytest.raises(UndefinedInputError):
            is_squarefree_strongly_stable(SquarefreeIdeal(2, ()))

    @given(stable_ideals())
    def test_closure_is_stable(self, J):
        assert is_squarefree_strongly_stable(J)


class TestBorel:
    def test_examples(self):
        assert borel_generators(R7) == ((1, 2), (1, 3, 5), (2, 3, 4, 5))
        assert set(borel_generators(R11)) == {(1, 2), (1, 3, 6), (1, 4, 5), (2, 3, 4, 5)}
        assert borel_generators(R9) == ((1, 4), (2, 3, 4, 5))

    def test_requires_stable(self):
        with pytest.raises(PreconditionError):
            borel_generators(SquarefreeIdeal(3, ((2, 3),)))

    @given(stable_ideals())
    def test_regenerates_and_is_minimal(self, J):
        bor = borel_generators(J)
        assert strongly_stable_closure(bor, J.n) == J
        for i in range(len(bor)):
            rest = bor[:i] + bor[i + 1:]
            if rest:
                assert strongly_stable_closure(rest, J.n) != J

    @given(stable_ideals())
    def test_mb_over_borel(self, J):
        bor = borel_generators(J)
        assert mb(J) == MBInvariants(max(A[-1] for A in bor), max(len(A) for A in bor))


class TestMB:
    def test_examples(self):
        assert mb(R7) == MBInvariants(5, 4)
        assert mb(R11) == MBInvariants(6, 4)
        assert mb(R8) == MBInvariants(6, 3)

    def test_unit_rejected(self):
        with pytest.raises(UndefinedInputError):
            mb(SquarefreeIdeal(2, ((),)))


class TestDuality:
    def test_examples(self):
        assert alexander_dual(SquarefreeIdeal(2, ((1, 2),))).gens == ((1,), (2,))
        pairs = SquarefreeIdeal(3, ((1, 2), (1, 3), (2, 3)))
        assert alexander_dual(pairs) == pairs

    def test_facets_examples(self):
        pairs = SquarefreeIdeal(3, ((1, 2), (1, 3), (2, 3)))
        assert facets(pairs) == ((1,), (2,), (3,))
        assert facets(SquarefreeIdeal(2, ((1,),))) == ((2,),)

    def test_unit_rejected(self):
        with pytest.raises(UndefinedInputError):
            alexander_dual(SquarefreeIdeal(2, ((),)))
        with pytest.raises(UndefinedInputError):
            facets(SquarefreeIdeal(2, ((),)))

    @given(squarefree_ideals())
    def test_facets_match_brute_force(self, J):
        assert list(facets(J)) == brute_facets(J)

    @given(squarefree_ideals())
    def test_dual_generators_are_minimal_covers(self, J):
        assert alexander_dual(J).gens == minimal_vertex_covers(J.to_ideal())

    @given(squarefree_ideals())
    def test_double_dual(self, J):
        assert alexander_dual(alexander_dual(J)) == J

    @given(stable_ideals())
    def test_dual_of_stable_is_stable(self, J):
        assert is_squarefree_strongly_stable(alexander_dual(J))

    @given(squarefree_ideals())
    def test_equal_facets_iff_dual_equigenerated(self, J):
        dual = alexander_dual(J)
        assert has_equal_facets(J) == (len({len(A) for A in dual.gens}) == 1)

    def test_equidimensional_facets_size(self):
        # (x1x2x3) is the radical of an equidimensional Veronese-type ideal; b = 3
        J = SquarefreeIdeal(3, ((1, 2, 3),))
        assert {len(F) for F in facets(J)} == {2}


class TestCM:
    def test_examples(self):
        assert (codim(R7), codepth(R7)) == (2, 3) and not is_cm_sqfree_stable(R7)
        J = SquarefreeIdeal(3, ((1, 2),))
        assert (codim(J), codepth(J)) == (1, 1) and is_cm_sqfree_stable(J)
        assert not is_cm_sqfree_stable(R9)

    def test_requires_stable(self):
        with pytest.raises(PreconditionError):
            codim(SquarefreeIdeal(3, ((2, 3),)))

    @given(stable_ideals())
    def test_codim_is_min_cover_size(self, J):
        covers = minimal_vertex_covers(J.to_ideal())
        assert codim(J) == min(len(W) for W in covers)

    @given(core_params(max_n=6, max_d=12))
    def test_cm_iff_equal_covers_on_radicals(self, p):
        J = radical_ideal(p)
        covers = minimal_vertex_covers(J.to_ideal())
        assert is_cm_sqfree_stable(J) == (len({len(W) for W in covers}) == 1)
