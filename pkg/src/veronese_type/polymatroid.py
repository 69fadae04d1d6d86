"""Base sets of discrete polymatroids.

Exchange-axiom checks, ground set rank functions, the Veronese-type base
sets ``{u : |u| = d, 0 <= u_i <= a_i}`` and the translation that carries a
strong-exchange base set onto a Veronese-type one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .core import MAX_EXPONENT, IndexSet, MonomialIdeal, index_set
from .errors import (
    ConsistencyError,
    InvalidBaseSetError,
    NotAPolymatroidError,
    NotStrongExchangeError,
    ZeroIdealError,
)

Vector = tuple[int, ...]


@dataclass(frozen=True)
class VeroneseParams:
    """The data ``(d; a_1, ..., a_n)`` of the ideal ``I_{d;a_1,...,a_n}``."""

    d: int
    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if self.d < 0 or any(x < 0 for x in self.a):
            raise ValueError("degree and caps must be nonnegative")
        if self.d > MAX_EXPONENT or any(x > MAX_EXPONENT for x in self.a):
            raise ValueError(f"degree and caps are limited to {MAX_EXPONENT}")

    @property
    def n(self) -> int:
        return len(self.a)

    def is_feasible(self) -> bool:
        return sum(self.a) >= self.d

    def __str__(self) -> str:
        return f"{self.d};" + ",".join(str(x) for x in self.a)


@dataclass(frozen=True)
class BaseSet:
    """Nonempty set of nonnegative integer vectors of one common modulus."""

    vectors: tuple[Vector, ...]

    def __post_init__(self):
        vecs = {tuple(int(x) for x in v) for v in self.vectors}
        if not vecs:
            raise InvalidBaseSetError("base set is empty")
        if len({len(v) for v in vecs}) != 1:
            raise InvalidBaseSetError("vectors have different lengths")
        if any(x < 0 for v in vecs for x in v):
            raise InvalidBaseSetError("vectors must be nonnegative")
        if len({sum(v) for v in vecs}) != 1:
            raise InvalidBaseSetError("vectors have different moduli")
        object.__setattr__(self, "vectors", tuple(sorted(vecs, reverse=True)))

    @classmethod
    def _trusted(cls, vectors: tuple[Vector, ...], array: np.ndarray | None = None) -> BaseSet:
        """Wrap vectors already known to be distinct, valid and in canonical order."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "vectors", vectors)
        if array is not None:
            object.__setattr__(obj, "_array", array)
        return obj

    def as_array(self) -> np.ndarray:
        arr = self.__dict__.get("_array")
        if arr is None:
            arr = np.asarray(self.vectors, dtype=np.int64).reshape(len(self.vectors), -1)
            object.__setattr__(self, "_array", arr)
        return arr

    @property
    def n(self) -> int:
        return len(self.vectors[0])

    @property
    def rank(self) -> int:
        return sum(self.vectors[0])

    def __contains__(self, v) -> bool:
        return tuple(v) in set(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)


def _exchange(B: BaseSet, strong: bool) -> bool:
    members = set(B.vectors)
    n = B.n
    for u in B.vectors:
        for v in B.vectors:
            if u == v:
                continue
            ups = [j for j in range(n) if u[j] < v[j]]
            for i in range(n):
                if u[i] <= v[i]:
                    continue
                swapped = []
                for j in ups:
                    w = list(u)
                    w[i] -= 1
                    w[j] += 1
                    swapped.append(tuple(w) in members)
                if strong and not all(swapped):
                    return False
                if not strong and not any(swapped):
                    return False
    return True


def check_exchange(B: BaseSet) -> bool:
    """Exchange property: ``u_i > v_i`` admits some ``j`` with ``u_j < v_j``
    and ``u - e_i + e_j`` in ``B``."""
    return _exchange(B, strong=False)


def check_strong_exchange(B: BaseSet) -> bool:
    """Like :func:`check_exchange`, but every such ``j`` must work."""
    return _exchange(B, strong=True)


def bounded_compositions(d: int, caps: Sequence[int]) -> np.ndarray:
    """Rows ``u`` with ``|u| = d`` and ``0 <= u_i <= caps[i]``, lexicographically descending."""
    n = len(caps)
    room = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        room[i] = room[i + 1] + caps[i]
    rows = np.zeros((1, 0), dtype=np.int64)
    sums = np.zeros(1, dtype=np.int64)
    for i, cap in enumerate(caps):
        values = np.arange(cap, -1, -1, dtype=np.int64)
        new_sums = sums[:, None] + values[None, :]
        # keep prefixes that neither overshoot d nor leave too little room
        ok = (new_sums <= d) & (new_sums + room[i + 1] >= d)
        parent, choice = np.nonzero(ok)
        rows = np.column_stack([rows[parent], values[choice]])
        sums = new_sums[parent, choice]
    if n == 0:
        return rows if d == 0 else rows[:0]
    return rows


def veronese_bases(p: VeroneseParams) -> BaseSet:
    if not p.is_feasible():
        raise ZeroIdealError(
            f"sum of caps {sum(p.a)} < d = {p.d}: the polymatroid of Veronese type is empty"
        )
    rows = bounded_compositions(p.d, p.a)
    return BaseSet._trusted(tuple(map(tuple, rows.tolist())), rows)


def _check_subset(A: Iterable[int], n: int) -> IndexSet:
    return index_set(A, n)


def rank(B: BaseSet, A: Iterable[int]) -> int:
    """Ground set rank ``max{v(A) : v in B}``."""
    idx = [i - 1 for i in _check_subset(A, B.n)]
    if not idx:
        return 0
    return max(sum(v[i] for i in idx) for v in B.vectors)


def rank_veronese(p: VeroneseParams, A: Iterable[int]) -> int:
    idx = _check_subset(A, p.n)
    return min(sum(p.a[i - 1] for i in idx), p.d)


def rank_table(B: BaseSet) -> np.ndarray:
    """Rank of every subset, indexed by bitmask (bit ``i-1`` for index ``i``)."""
    n = B.n
    vecs = B.as_array()
    masks = np.arange(1 << n, dtype=np.int64)
    incidence = ((masks[:, None] >> np.arange(n)) & 1).astype(np.int64)
    table = np.zeros(1 << n, dtype=np.int64)
    chunk = max(1, (1 << 22) // max(1, 1 << n))
    for start in range(0, len(vecs), chunk):
        block = vecs[start:start + chunk] @ incidence.T
        np.maximum(table, block.max(axis=0), out=table)
    return table


def _mask_to_set(mask: int, n: int) -> IndexSet:
    return tuple(i + 1 for i in range(n) if mask >> i & 1)


def translation_normalize(B: BaseSet) -> tuple[Vector, BaseSet]:
    """Split ``B`` as ``u0 + B'`` with ``B'`` of Veronese type.

    ``u0_i = rank([n]) - rank([n] minus {i})``.  Variables are not renumbered.
    """
    if not check_strong_exchange(B):
        raise NotStrongExchangeError("base set does not satisfy the strong exchange property")
    n = B.n
    full = rank(B, range(1, n + 1))
    u0 = tuple(full - rank(B, [k for k in range(1, n + 1) if k != i]) for i in range(1, n + 1))
    shifted = []
    for v in B.vectors:
        w = tuple(x - y for x, y in zip(v, u0))
        if min(w) < 0:
            raise ConsistencyError(f"translation of {v} by {u0} has a negative entry")
        shifted.append(w)
    return u0, BaseSet(tuple(shifted))


def as_veronese_params(B: BaseSet) -> VeroneseParams | None:
    """Parameters ``(rank; max coordinates)`` if ``B`` is exactly of Veronese type."""
    caps = tuple(max(v[i] for v in B.vectors) for i in range(B.n))
    p = VeroneseParams(B.rank, caps)
    total = 1
    for c in caps:
        total *= c + 1
    # cheap count bound before enumerating
    if len(B) > total:
        return None
    return p if veronese_bases(p).vectors == B.vectors else None


def polymatroidal_ideal(B: BaseSet) -> MonomialIdeal:
    if not check_exchange(B):
        raise NotAPolymatroidError("base set does not satisfy the exchange property")
    return polymatroidal_ideal_unchecked(B)


def polymatroidal_ideal_unchecked(B: BaseSet) -> MonomialIdeal:
    """``(x^v : v in B)`` without the quadratic exchange check."""
    # distinct vectors of one modulus are already the minimal generators
    return MonomialIdeal._trusted(B.n, B.vectors)


def radical_via_rank(B: BaseSet, *, checked: bool = True) -> MonomialIdeal:
    """Squarefree ideal of the inclusion-minimal ``A`` with ``rank(A) = rank(B)``."""
    if checked and not check_exchange(B):
        raise NotAPolymatroidError("base set does not satisfy the exchange property")
    n = B.n
    table = rank_table(B)
    full = int(table[-1])
    # rank is nondecreasing, so dropping single elements decides minimality
    minimal = [
        m for m in range(1 << n)
        if table[m] == full and all(table[m & ~(1 << i)] < full for i in range(n) if m >> i & 1)
    ]
    return MonomialIdeal.from_supports((_mask_to_set(m, n) for m in minimal), n)


def all_subsets(n: int) -> Iterator[IndexSet]:
    for k in range(n + 1):
        yield from combinations(range(1, n + 1), k)
