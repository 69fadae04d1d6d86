"""Exact monomial and monomial-ideal arithmetic.

Variables are 1-indexed in every public surface: ``x1..xn``.  A monomial is
stored as its exponent vector, an index set as a strictly increasing tuple of
1-based indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DimensionError, UndefinedInputError

IndexSet = tuple[int, ...]

MAX_EXPONENT = 10**6


def index_set(members: Iterable[int], n: int | None = None) -> IndexSet:
    """Canonical index set: sorted, duplicate free, each member in ``1..n``."""
    items = tuple(sorted(set(int(i) for i in members)))
    if items and items[0] < 1:
        raise IndexError(f"index {items[0]} is below 1")
    if n is not None and items and items[-1] > n:
        raise IndexError(f"index {items[-1]} exceeds n={n}")
    return items


def complement(A: Iterable[int], n: int) -> IndexSet:
    a = set(A)
    return tuple(i for i in range(1, n + 1) if i not in a)


def sort_index_sets(sets: Iterable[Iterable[int]]) -> tuple[IndexSet, ...]:
    return tuple(sorted({tuple(sorted(s)) for s in sets}))


@dataclass(frozen=True, slots=True)
class Monomial:
    exps: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exps)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exps", exps)

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def variable(cls, i: int, n: int) -> Monomial:
        """The unit vector ``eps_i`` as the monomial ``x_i``."""
        if not 1 <= i <= n:
            raise IndexError(f"variable index {i} outside 1..{n}")
        return cls(tuple(1 if k == i else 0 for k in range(1, n + 1)))

    @classmethod
    def from_support(cls, A: Iterable[int], n: int) -> Monomial:
        """The squarefree monomial ``x_A``."""
        a = set(index_set(A, n))
        return cls(tuple(1 if k in a else 0 for k in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def support(self) -> IndexSet:
        return tuple(i + 1 for i, e in enumerate(self.exps) if e)

    @property
    def max_index(self) -> int:
        s = self.support
        if not s:
            raise UndefinedInputError("max() of the unit monomial is undefined")
        return s[-1]

    @property
    def min_index(self) -> int:
        s = self.support
        if not s:
            raise UndefinedInputError("min() of the unit monomial is undefined")
        return s[0]

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def squarefree_part(self) -> Monomial:
        return Monomial(tuple(1 if e else 0 for e in self.exps))

    def divides(self, other: Monomial) -> bool:
        return divides(self, other)

    def __mul__(self, other: Monomial) -> Monomial:
        _check_same_n(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def gcd(self, other: Monomial) -> Monomial:
        _check_same_n(self, other)
        return Monomial(tuple(min(a, b) for a, b in zip(self.exps, other.exps)))

    def lcm(self, other: Monomial) -> Monomial:
        _check_same_n(self, other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def quotient(self, other: Monomial) -> Monomial:
        """``self / gcd(self, other)``."""
        _check_same_n(self, other)
        return Monomial(tuple(a - b if a > b else 0 for a, b in zip(self.exps, other.exps)))

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self.exps, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "·".join(parts) if parts else "1"


def _monomial(exps: tuple[int, ...]) -> Monomial:
    # skips validation; callers pass checked nonnegative int tuples
    m = object.__new__(Monomial)
    object.__setattr__(m, "exps", exps)
    return m


def _check_same_n(u: Monomial, v: Monomial) -> None:
    if len(u.exps) != len(v.exps):
        raise DimensionError(f"monomials in {len(u.exps)} and {len(v.exps)} variables")


def divides(u: Monomial, v: Monomial) -> bool:
    _check_same_n(u, v)
    return all(a <= b for a, b in zip(u.exps, v.exps))


def _minimal_exponents(vectors: Iterable[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    # Distinct vectors of equal degree never divide each other, so each
    # candidate only needs checking against kept vectors of smaller degree.
    by_degree: dict[int, list[tuple[int, ...]]] = {}
    for v in set(vectors):
        by_degree.setdefault(sum(v), []).append(v)
    kept: list[tuple[int, ...]] = []
    for deg in sorted(by_degree):
        lower = list(kept)
        for v in by_degree[deg]:
            if not any(all(a <= b for a, b in zip(g, v)) for g in lower):
                kept.append(v)
    return tuple(sorted(kept, reverse=True))


@dataclass(frozen=True, slots=True)
class MonomialIdeal:
    """Monomial ideal stored as its minimal generating set ``G(I)``.

    Construction minimalizes and canonically orders the generators
    (lexicographic, ``x1 > x2 > ...``).  No generators is the zero ideal; the
    degree-zero monomial alone is the unit ideal.
    """

    n: int
    gens: tuple[Monomial, ...] = field(default=())

    def __post_init__(self):
        vecs = []
        for g in self.gens:
            exps = g.exps if isinstance(g, Monomial) else tuple(g)
            if len(exps) != self.n:
                raise DimensionError(f"generator {exps} is not in {self.n} variables")
            vecs.append(exps)
        if any(e < 0 for v in vecs for e in v):
            raise ValueError("negative exponent in generator")
        object.__setattr__(self, "gens", tuple(_monomial(v) for v in _minimal_exponents(vecs)))

    @classmethod
    def _trusted(cls, n: int, vectors: tuple[tuple[int, ...], ...]) -> MonomialIdeal:
        """Wrap vectors known to be distinct, pairwise incomparable and canonically ordered."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "gens", tuple(map(_monomial, vectors)))
        return obj

    @classmethod
    def from_exponents(cls, vectors: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
        vecs = [tuple(v) for v in vectors]
        if n is None:
            if not vecs:
                raise DimensionError("cannot infer n from an empty generator list")
            n = len(vecs[0])
        return cls(n, tuple(Monomial(v) for v in vecs))

    @classmethod
    def from_supports(cls, sets: Iterable[Iterable[int]], n: int) -> MonomialIdeal:
        return cls(n, tuple(Monomial.from_support(A, n) for A in sets))

    @property
    def exponents(self) -> tuple[tuple[int, ...], ...]:
        return tuple(g.exps for g in self.gens)

    @property
    def supports(self) -> tuple[IndexSet, ...]:
        return tuple(g.support for g in self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].degree == 0

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    def __contains__(self, z: Monomial) -> bool:
        return contains(self, z)

    def __len__(self) -> int:
        return len(self.gens)

    def __str__(self) -> str:
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def minimalize(ms: Iterable[Monomial], n: int | None = None) -> MonomialIdeal:
    """The ideal generated by ``ms``, i.e. the divisibility-minimal elements."""
    ms = list(ms)
    if n is None:
        if not ms:
            raise DimensionError("n is required for an empty generator set")
        n = ms[0].n
    return MonomialIdeal(n, tuple(ms))


def contains(I: MonomialIdeal, z: Monomial) -> bool:
    if z.n != I.n:
        raise DimensionError(f"monomial in {z.n} variables, ideal in {I.n}")
    ze = z.exps
    return any(all(a <= b for a, b in zip(g.exps, ze)) for g in I.gens)


def colon(I: MonomialIdeal, z: Monomial) -> MonomialIdeal:
    """``I : z``, generated by ``u / gcd(u, z)`` over ``u`` in ``G(I)``."""
    if z.n != I.n:
        raise DimensionError(f"monomial in {z.n} variables, ideal in {I.n}")
    ze = z.exps
    quotients = [tuple(a - b if a > b else 0 for a, b in zip(g.exps, ze)) for g in I.gens]
    return MonomialIdeal(I.n, tuple(quotients))


def radical(I: MonomialIdeal) -> MonomialIdeal:
    if I.is_zero():
        raise UndefinedInputError("radical of the zero ideal is not handled")
    return MonomialIdeal(I.n, tuple({tuple(1 if e else 0 for e in g.exps) for g in I.gens}))


def is_principal(I: MonomialIdeal) -> bool:
    if I.is_zero():
        raise UndefinedInputError("zero ideal")
    return len(I.gens) == 1


def is_equigenerated(I: MonomialIdeal) -> bool:
    if I.is_zero():
        raise UndefinedInputError("zero ideal")
    return len({g.degree for g in I.gens}) == 1


def prime_ideal(A: Iterable[int], n: int) -> MonomialIdeal:
    """The monomial prime ``P_A = (x_i : i in A)``."""
    return MonomialIdeal(n, tuple(Monomial.variable(i, n) for i in index_set(A, n)))


def prime_indices(I: MonomialIdeal) -> IndexSet | None:
    """``A`` if ``I == P_A`` for some nonempty ``A``, else ``None``."""
    if I.is_zero() or any(g.degree != 1 for g in I.gens):
        return None
    return tuple(sorted(g.support[0] for g in I.gens))
