"""Brute-force ground truth.

Nothing here knows about Veronese-type ideals: vertex covers are found by
walking subsets, associated primes by trying every candidate colon.  Budgets
are hard limits; an oracle that silently truncates would be worse than none.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import prod

import numpy as np

from .core import IndexSet, Monomial, MonomialIdeal, colon, contains, prime_indices
from .errors import BudgetError, UndefinedInputError


@dataclass(frozen=True)
class OracleBudget:
    max_subsets: int = 2**20
    max_divisors: int = 10**6

    def __post_init__(self):
        if self.max_subsets <= 0 or self.max_divisors <= 0:
            raise ValueError("budgets must be positive")


DEFAULT_BUDGET = OracleBudget()


def _require_proper(I: MonomialIdeal) -> None:
    if I.is_zero():
        raise UndefinedInputError("zero ideal")
    if I.is_unit():
        raise UndefinedInputError("unit ideal")


def minimal_vertex_covers(I: MonomialIdeal, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[IndexSet, ...]:
    """All inclusion-minimal ``W`` meeting the support of every generator."""
    _require_proper(I)
    n = I.n
    if 2**n > budget.max_subsets:
        raise BudgetError(f"2^{n} subsets exceed max_subsets={budget.max_subsets}")
    supports = [set(s) for s in I.supports]
    covers: list[set[int]] = []
    for k in range(1, n + 1):
        for W in combinations(range(1, n + 1), k):
            w = set(W)
            if any(c <= w for c in covers):
                continue
            if all(s & w for s in supports):
                covers.append(w)
    return tuple(sorted(tuple(sorted(c)) for c in covers))


def is_equidimensional_bruteforce(I: MonomialIdeal, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    return len({len(W) for W in minimal_vertex_covers(I, budget)}) == 1


def _divisor_box(I: MonomialIdeal, budget: OracleBudget) -> list[int]:
    _require_proper(I)
    top = [max(g.exps[i] for g in I.gens) for i in range(I.n)]
    count = prod(t + 1 for t in top)
    if count > budget.max_divisors:
        raise BudgetError(f"{count} candidate monomials exceed max_divisors={budget.max_divisors}")
    return top


def associated_primes_by_colon(
    I: MonomialIdeal, budget: OracleBudget = DEFAULT_BUDGET
) -> tuple[tuple[IndexSet, Monomial], ...]:
    """Every ``(A, z)`` with ``z`` outside ``I`` and ``I : z = P_A``, one explicit colon per ``z``.

    Only ``z`` dividing the lcm of ``G(I)`` are tried: membership tests against
    the generators see ``min(z_i, max exponent)`` only, so larger exponents
    produce nothing new.  Candidates are scanned in the canonical
    lexicographic order (``x1 > x2 > ...``, largest first) and the first ``z``
    found for each prime is kept.
    """
    top = _divisor_box(I, budget)
    found: dict[IndexSet, Monomial] = {}
    for exps in product(*(range(t, -1, -1) for t in top)):
        z = Monomial(exps)
        if contains(I, z):
            continue
        A = prime_indices(colon(I, z))
        if A is not None and A not in found:
            found[A] = z
    return tuple(sorted(found.items(), key=lambda item: (len(item[0]), item[0])))


def membership_table(I: MonomialIdeal, top: list[int]) -> np.ndarray:
    """Boolean array over the box ``0 <= z <= top``: entry ``z`` is ``z in I``."""
    box = np.zeros([t + 1 for t in top], dtype=bool)
    for g in I.gens:
        box[g.exps] = True
    # membership is upward closed: a running OR along every axis
    for axis in range(I.n):
        np.logical_or.accumulate(box, axis=axis, out=box)
    return box


def associated_primes_bruteforce(
    I: MonomialIdeal, budget: OracleBudget = DEFAULT_BUDGET
) -> tuple[tuple[IndexSet, Monomial], ...]:
    """Same result as :func:`associated_primes_by_colon`, decided on a membership table.

    For ``z`` outside ``I`` let ``A = {i : z x_i in I}``, so ``P_A`` lies in
    ``I : z``.  Equality holds iff no monomial supported off ``A`` multiplies
    ``z`` into ``I``, i.e. iff ``z`` with its coordinates off ``A`` raised to the
    top of the box is still outside ``I``.
    """
    top = _divisor_box(I, budget)
    n = I.n
    inside = membership_table(I, top)
    amask = np.zeros(inside.shape, dtype=np.int64)
    for i in range(n):
        # z + e_i, clamped at the top (exponents past the lcm change nothing)
        up = np.concatenate([inside.take(range(1, top[i] + 1), axis=i),
                             inside.take([top[i]], axis=i)], axis=i)
        amask |= up.astype(np.int64) << i
    outside = ~inside
    found: dict[IndexSet, Monomial] = {}
    for m in np.unique(amask[outside]).tolist():
        if m == 0:
            continue
        raised = inside
        for i in range(n):
            if not m >> i & 1:
                raised = raised.take([top[i]], axis=i)
        valid = outside & (amask == m) & ~raised
        if valid.any():
            # largest flat index = first candidate in the descending scan
            flat = int(np.flatnonzero(valid.ravel())[-1])
            z = tuple(int(x) for x in np.unravel_index(flat, inside.shape))
            found[tuple(i + 1 for i in range(n) if m >> i & 1)] = Monomial(z)
    return tuple(sorted(found.items(), key=lambda item: (len(item[0]), item[0])))


def is_unmixed_bruteforce(I: MonomialIdeal, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    ass = {A for A, _ in associated_primes_bruteforce(I, budget)}
    return ass == set(minimal_vertex_covers(I, budget))
