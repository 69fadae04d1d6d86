"""Squarefree strongly stable ideals.

A squarefree ideal is kept as the supports of its minimal generators.  The
simplicial complex ``Gamma`` with ``J = I_Gamma`` is never listed face by face;
only its facets are computed, by a pruned search of the subset lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import IndexSet, MonomialIdeal, complement, index_set
from .errors import ConsistencyError, PreconditionError, UndefinedInputError


def _mask(A: Iterable[int]) -> int:
    m = 0
    for i in A:
        m |= 1 << (i - 1)
    return m


def _unmask(m: int) -> IndexSet:
    out = []
    i = 1
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return tuple(out)


def _minimal_masks(masks: Iterable[int]) -> list[int]:
    ordered = sorted(set(masks), key=lambda m: bin(m).count("1"))
    kept: list[int] = []
    for m in ordered:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


@dataclass(frozen=True)
class SquarefreeIdeal:
    """Squarefree monomial ideal in ``n`` variables, generators stored as supports.

    ``gens == ()`` is the zero ideal, ``gens == ((),)`` the unit ideal.
    """

    n: int
    gens: tuple[IndexSet, ...]

    def __post_init__(self):
        sets = [index_set(A, self.n) for A in self.gens]
        minimal = _minimal_masks(_mask(A) for A in sets)
        object.__setattr__(self, "gens", tuple(sorted(_unmask(m) for m in minimal)))

    @classmethod
    def from_ideal(cls, I: MonomialIdeal) -> SquarefreeIdeal:
        if not I.is_squarefree():
            raise PreconditionError(f"{I} is not squarefree")
        return cls(I.n, I.supports)

    def to_ideal(self) -> MonomialIdeal:
        return MonomialIdeal.from_supports(self.gens, self.n)

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(_mask(A) for A in self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gens == ((),)

    def contains_set(self, F: Iterable[int]) -> bool:
        """Whether ``x_F`` lies in the ideal."""
        f = _mask(F)
        return any(g & f == g for g in self.masks)

    def __str__(self) -> str:
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join("".join(f"x{i}" for i in A) or "1" for A in self.gens) + ")"


@dataclass(frozen=True)
class MBInvariants:
    m: int
    b: int


def _require_nonzero(J: SquarefreeIdeal) -> None:
    if J.is_zero():
        raise UndefinedInputError("zero ideal")


def _left_moves(mask: int, n: int) -> Iterable[int]:
    """All ``x_A * x_l / x_j`` with ``j`` in ``A``, ``l < j``, ``l`` not in ``A``."""
    for j in range(n):
        if not mask >> j & 1:
            continue
        for l in range(j):
            if not mask >> l & 1:
                yield (mask & ~(1 << j)) | (1 << l)


def _right_moves(mask: int, n: int) -> Iterable[int]:
    for l in range(n):
        if not mask >> l & 1:
            continue
        for j in range(l + 1, n):
            if not mask >> j & 1:
                yield (mask & ~(1 << l)) | (1 << j)


def is_squarefree_strongly_stable(J: SquarefreeIdeal) -> bool:
    _require_nonzero(J)
    gens = J.masks
    for g in gens:
        for w in _left_moves(g, J.n):
            if not any(h & w == h for h in gens):
                return False
    return True


def _require_stable(J: SquarefreeIdeal) -> None:
    if not is_squarefree_strongly_stable(J):
        raise PreconditionError(f"{J} is not squarefree strongly stable")


def strongly_stable_closure(gens: Iterable[Iterable[int]], n: int) -> SquarefreeIdeal:
    """Smallest squarefree strongly stable ideal containing the given ``x_A``."""
    seen = {_mask(index_set(A, n)) for A in gens}
    frontier = list(seen)
    while frontier:
        nxt = []
        for m in frontier:
            for w in _left_moves(m, n):
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return SquarefreeIdeal(n, tuple(_unmask(m) for m in seen))


def borel_generators(J: SquarefreeIdeal) -> tuple[IndexSet, ...]:
    """Minimal Borel generators ``Bor(J)``.

    A minimal generator is dropped when one of its single right shifts is again
    a minimal generator; the survivors must regenerate ``G(J)``.
    """
    _require_stable(J)
    gens = set(J.masks)
    borel = [g for g in gens if not any(w in gens for w in _right_moves(g, J.n))]
    result = tuple(sorted(_unmask(g) for g in borel))
    if strongly_stable_closure(result, J.n).gens != J.gens:
        raise ConsistencyError(f"Borel generators {result} do not regenerate {J}")
    return result


def mb(J: SquarefreeIdeal) -> MBInvariants:
    """``m(J)`` = largest variable index in a generator, ``b(J)`` = largest degree."""
    _require_nonzero(J)
    if J.is_unit():
        raise UndefinedInputError("m and b are undefined for the unit ideal")
    return MBInvariants(m=max(A[-1] for A in J.gens), b=max(len(A) for A in J.gens))


def facets(J: SquarefreeIdeal) -> tuple[IndexSet, ...]:
    """Facets of the complex ``Gamma`` with ``J = I_Gamma``."""
    if J.is_unit():
        raise UndefinedInputError("the unit ideal has the void complex")
    n = J.n
    gens = J.masks
    found: list[int] = []

    def blocked(face: int, i: int) -> bool:
        grown = face | (1 << i)
        return any(g & grown == g for g in gens)

    def search(i: int, face: int) -> None:
        if i == n:
            if all(face >> k & 1 or blocked(face, k) for k in range(n)):
                found.append(face)
            return
        if not blocked(face, i):
            search(i + 1, face | (1 << i))
            # leaving i out only pays off if some generator through i can still close
            if not any(g >> i & 1 and (g & ~(1 << i)) & ~face & ((1 << i) - 1) == 0 for g in gens):
                return
        search(i + 1, face)

    search(0, 0)
    return tuple(sorted(_unmask(f) for f in found))


def alexander_dual(J: SquarefreeIdeal) -> SquarefreeIdeal:
    """``J^vee``: generated by ``x_{[n] minus F}`` over the facets ``F`` of ``Gamma``."""
    _require_nonzero(J)
    if J.is_unit():
        raise UndefinedInputError("Alexander dual of the unit ideal")
    return SquarefreeIdeal(J.n, tuple(complement(F, J.n) for F in facets(J)))


def codim(J: SquarefreeIdeal) -> int:
    _require_stable(J)
    return max(A[0] for A in J.gens)


def codepth(J: SquarefreeIdeal) -> int:
    _require_stable(J)
    return max(A[-1] - len(A) for A in J.gens) + 1


def is_cm_sqfree_stable(J: SquarefreeIdeal) -> bool:
    """Cohen-Macaulay test for squarefree strongly stable ``J``: codim == codepth."""
    return codim(J) == codepth(J)


def has_equal_facets(J: SquarefreeIdeal) -> bool:
    return len({len(F) for F in facets(J)}) == 1

