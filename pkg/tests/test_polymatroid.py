from itertools import product

import numpy as np
import pytest
from hypothesis import given

from conftest import raw_params, sorted_params
from veronese_type.core import MonomialIdeal, radical
from veronese_type.errors import (
    InvalidBaseSetError,
    NotAPolymatroidError,
    NotStrongExchangeError,
    ZeroIdealError,
)
from veronese_type.polymatroid import (
    BaseSet,
    VeroneseParams,
    all_subsets,
    as_veronese_params,
    bounded_compositions,
    check_exchange,
    check_strong_exchange,
    polymatroidal_ideal,
    radical_via_rank,
    rank,
    rank_table,
    rank_veronese,
    translation_normalize,
    veronese_bases,
)

B_STRONG = BaseSet(((2, 1, 1), (1, 2, 1), (1, 1, 2)))
B_WEAK = BaseSet(((1, 0, 1, 0), (0, 1, 1, 0), (0, 1, 0, 1), (1, 0, 0, 1)))


class TestParams:
    def test_validation(self):
        with pytest.raises(ValueError):
            VeroneseParams(-1, (1,))
        with pytest.raises(ValueError):
            VeroneseParams(3, (10**6 + 1,))

    def test_str_and_feasible(self):
        p = VeroneseParams(5, (3, 2, 1))
        assert str(p) == "5;3,2,1" and p.n == 3 and p.is_feasible()
        assert not VeroneseParams(3, (1, 1)).is_feasible()


class TestBaseSet:
    def test_validation(self):
        with pytest.raises(InvalidBaseSetError):
            BaseSet(())
        with pytest.raises(InvalidBaseSetError):
            BaseSet(((1, 0), (1, 1)))
        with pytest.raises(InvalidBaseSetError):
            BaseSet(((1, 0), (1,)))
        with pytest.raises(InvalidBaseSetError):
            BaseSet(((2, -1), (1, 0)))

    def test_dedup_and_order(self):
        B = BaseSet(((0, 1), (1, 0), (0, 1)))
        assert B.vectors == ((1, 0), (0, 1)) and B.rank == 1 and len(B) == 2
        assert (0, 1) in B


class TestExchange:
    def test_examples(self):
        assert check_exchange(B_WEAK)
        assert not check_exchange(BaseSet(((2, 0), (0, 2))))
        assert check_exchange(BaseSet(((1, 1),)))

    def test_strong_examples(self):
        assert check_strong_exchange(B_STRONG)
        assert not check_strong_exchange(B_WEAK)

    @given(sorted_params(max_n=4, max_d=5))
    def test_veronese_bases_pass_both(self, p):
        B = veronese_bases(p)
        assert check_exchange(B) and check_strong_exchange(B)


class TestVeroneseBases:
    def test_example(self):
        assert veronese_bases(VeroneseParams(5, (3, 2, 1))).vectors == ((3, 2, 0), (3, 1, 1), (2, 2, 1))

    def test_infeasible(self):
        with pytest.raises(ZeroIdealError):
            veronese_bases(VeroneseParams(3, (1, 1)))

    @given(raw_params(max_n=4, max_d=6))
    def test_matches_product_enumeration(self, p):
        brute = sorted(
            (v for v in product(*(range(c + 1) for c in p.a)) if sum(v) == p.d), reverse=True
        )
        assert list(veronese_bases(p).vectors) == brute

    def test_bounded_compositions_edges(self):
        assert bounded_compositions(0, ()).shape == (1, 0)
        assert bounded_compositions(1, ()).shape[0] == 0
        assert bounded_compositions(2, (1, 1)).tolist() == [[1, 1]]


class TestRank:
    def test_strong_example(self):
        assert [rank(B_STRONG, [i]) for i in (1, 2, 3)] == [2, 2, 2]
        assert rank(B_STRONG, [1, 2]) == 3
        assert rank(B_STRONG, [1, 2, 3]) == 4

    def test_weak_example(self):
        assert rank(B_WEAK, [1, 2]) == 1
        assert rank(B_WEAK, [3, 4]) == 1
        assert rank(B_WEAK, [1, 3]) == 2

    def test_formula(self):
        assert rank_veronese(VeroneseParams(5, (3, 2, 1)), [2, 3]) == 3
        assert rank(B_STRONG, []) == 0

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            rank(B_STRONG, [4])
        with pytest.raises(IndexError):
            rank_veronese(VeroneseParams(5, (3, 2, 1)), [0])

    @given(sorted_params(max_n=5, max_d=7))
    def test_formula_agrees_exhaustively(self, p):
        B = veronese_bases(p)
        table = rank_table(B)
        for A in all_subsets(p.n):
            r = rank_veronese(p, A)
            assert rank(B, A) == r
            assert table[sum(1 << (i - 1) for i in A)] == r

    def test_rank_table_dtype(self):
        assert rank_table(B_STRONG).dtype == np.int64


class TestTranslation:
    def test_strong_example(self):
        u0, shifted = translation_normalize(B_STRONG)
        assert u0 == (1, 1, 1)
        assert set(shifted.vectors) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}

    def test_two_variable_example(self):
        u0, shifted = translation_normalize(BaseSet(((3, 1), (2, 2))))
        assert u0 == (2, 1)
        assert set(shifted.vectors) == {(1, 0), (0, 1)}

    def test_not_strong(self):
        with pytest.raises(NotStrongExchangeError):
            translation_normalize(B_WEAK)

    @given(raw_params(max_n=4, max_d=6))
    def test_veronese_forced_part(self, p):
        # u0 is the part of each coordinate the other caps cannot absorb
        B = veronese_bases(p)
        caps = [min(x, p.d) for x in p.a]
        u0, shifted = translation_normalize(B)
        assert u0 == tuple(max(0, p.d - (sum(caps) - c)) for c in caps)
        if not any(u0):
            assert shifted == B
        assert as_veronese_params(shifted) is not None

    def test_unforced_veronese_is_fixed(self):
        B = veronese_bases(VeroneseParams(7, (4, 3, 2, 1, 1)))
        assert translation_normalize(B) == ((0, 0, 0, 0, 0), B)

    @given(raw_params(max_n=4, max_d=5))
    def test_shifted_bases_translate_back(self, p):
        # a translated Veronese base set normalizes to u0 = shift and is idempotent
        shift = tuple(range(1, p.n + 1))
        B = BaseSet(tuple(tuple(x + s for x, s in zip(v, shift)) for v in veronese_bases(p).vectors))
        u0, shifted = translation_normalize(B)
        params = as_veronese_params(shifted)
        assert params is not None
        assert veronese_bases(params) == shifted
        u1, again = translation_normalize(shifted)
        assert not any(u1) and again == shifted

    def test_as_veronese_params(self):
        assert as_veronese_params(B_STRONG) is None
        p = VeroneseParams(5, (3, 2, 1))
        assert as_veronese_params(veronese_bases(p)) == p


class TestIdeals:
    def test_polymatroidal_ideal(self):
        I = polymatroidal_ideal(veronese_bases(VeroneseParams(5, (3, 2, 1))))
        assert I == MonomialIdeal.from_exponents([(3, 2, 0), (3, 1, 1), (2, 2, 1)])
        assert len(polymatroidal_ideal(BaseSet(((2, 3),)))) == 1
        assert polymatroidal_ideal(B_STRONG).exponents == ((2, 1, 1), (1, 2, 1), (1, 1, 2))

    def test_not_polymatroid(self):
        with pytest.raises(NotAPolymatroidError):
            polymatroidal_ideal(BaseSet(((2, 0), (0, 2))))
        with pytest.raises(NotAPolymatroidError):
            radical_via_rank(BaseSet(((2, 0), (0, 2))))

    def test_radical_via_rank_examples(self):
        r7 = radical_via_rank(veronese_bases(VeroneseParams(7, (4, 3, 2, 1, 1))))
        assert set(r7.supports) == {(1, 2), (1, 3, 4), (1, 3, 5), (2, 3, 4, 5)}
        assert radical_via_rank(veronese_bases(VeroneseParams(5, (3, 2, 1)))).supports == ((1, 2),)
        assert radical_via_rank(B_STRONG).supports == ((1, 2, 3),)

    @given(raw_params(max_n=5, max_d=7))
    def test_radical_via_rank_matches_explicit(self, p):
        B = veronese_bases(p)
        assert radical_via_rank(B) == radical(polymatroidal_ideal(B))

    def test_radical_via_rank_weak_example(self):
        assert radical_via_rank(B_WEAK) == radical(polymatroidal_ideal(B_WEAK))
