"""Closed-form criteria for ideals of Veronese type ``I_{d;a_1,...,a_n}``.

Two normal forms are in play.  The *sorted* form reorders the caps
non-increasingly, clamps them at ``d`` and drops zero caps; associated primes,
unmixedness and the Cohen-Macaulay class are computed there.  The *core*
additionally peels the caps equal to ``d`` (each such ``x_i`` is itself a
generator of the radical), leaving ``d > a_1 >= ... >= a_k >= 1``; the radical,
Borel generators and the equidimensionality tests live on the core.  Index
sets returned by a function are in the coordinates of the form it works on;
:class:`NormalForm` maps them back to the caller's variables.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .core import IndexSet, Monomial, MonomialIdeal, colon, contains, is_principal, prime_ideal, radical
from .errors import (
    ConsistencyError,
    NotStrongExchangeError,
    PreconditionError,
    UnitIdealError,
    ZeroIdealError,
)
from .polymatroid import (
    BaseSet,
    VeroneseParams,
    as_veronese_params,
    check_strong_exchange,
    polymatroidal_ideal_unchecked,
    translation_normalize,
    veronese_bases,
)
from .stable import MBInvariants, SquarefreeIdeal, borel_generators, mb


@dataclass(frozen=True)
class NormalForm:
    original: VeroneseParams
    # permutation[k-1] is the original index of sorted position k
    permutation: tuple[int, ...]
    trimmed_zero_indices: IndexSet
    peeled_full_indices: IndexSet
    sorted: VeroneseParams
    core: VeroneseParams | None
    pure_veronese: bool

    @property
    def n_peeled(self) -> int:
        return len(self.peeled_full_indices)

    def sorted_to_original(self, A: IndexSet) -> IndexSet:
        return tuple(sorted(self.permutation[i - 1] for i in A))

    def core_to_sorted(self, A: IndexSet) -> IndexSet:
        return tuple(i + self.n_peeled for i in A)

    def core_to_original(self, A: IndexSet) -> IndexSet:
        return self.sorted_to_original(self.core_to_sorted(A))

    def reassemble(self) -> VeroneseParams:
        """The original parameters with caps clamped at ``d``."""
        caps = [0] * self.original.n
        for pos, orig in enumerate(self.permutation):
            caps[orig - 1] = self.sorted.a[pos]
        return VeroneseParams(self.original.d, tuple(caps))


def normalize(p: VeroneseParams) -> NormalForm:
    if p.d == 0:
        raise UnitIdealError("d = 0 gives the unit ideal")
    if not p.is_feasible():
        raise ZeroIdealError(f"sum of caps {sum(p.a)} < d = {p.d}: the ideal is zero")
    d = p.d
    clamped = [min(x, d) for x in p.a]
    trimmed = tuple(i + 1 for i, x in enumerate(clamped) if x == 0)
    order = sorted((i for i, x in enumerate(clamped) if x > 0), key=lambda i: (-clamped[i], i))
    permutation = tuple(i + 1 for i in order)
    caps = tuple(clamped[i] for i in order)
    n_full = sum(1 for x in caps if x == d)
    peeled = tuple(sorted(permutation[:n_full]))
    rest = caps[n_full:]
    core = VeroneseParams(d, rest) if rest and sum(rest) >= d else None
    return NormalForm(
        original=p,
        permutation=permutation,
        trimmed_zero_indices=trimmed,
        peeled_full_indices=peeled,
        sorted=VeroneseParams(d, caps),
        core=core,
        pure_veronese=n_full == len(caps),
    )


def is_core_form(p: VeroneseParams) -> bool:
    a = p.a
    return (
        len(a) >= 1
        and p.d > a[0]
        and a[-1] >= 1
        and all(a[i] >= a[i + 1] for i in range(len(a) - 1))
        and sum(a) >= p.d
    )


def is_sorted_form(p: VeroneseParams) -> bool:
    a = p.a
    return (
        len(a) >= 1
        and p.d >= 1
        and p.d >= a[0]
        and a[-1] >= 1
        and all(a[i] >= a[i + 1] for i in range(len(a) - 1))
        and sum(a) >= p.d
    )


def _require_core(p: VeroneseParams) -> None:
    if not is_core_form(p):
        raise PreconditionError(f"({p}) is not in core form d > a_1 >= ... >= a_n >= 1")


def _spanning_chains(d: int, a: tuple[int, ...]) -> Iterator[IndexSet]:
    """Increasing sequences whose cap sum first reaches ``d`` at the last index."""
    n = len(a)

    def rec(start: int, chosen: tuple[int, ...], total: int) -> Iterator[IndexSet]:
        for i in range(start, n):
            s = total + a[i]
            if s >= d:
                yield chosen + (i + 1,)
            else:
                yield from rec(i + 1, chosen + (i + 1,), s)

    yield from rec(0, (), 0)


def radical_generators(p: VeroneseParams) -> tuple[IndexSet, ...]:
    """Supports of ``G(sqrt(I))`` for core-form ``p``."""
    _require_core(p)
    return tuple(sorted(_spanning_chains(p.d, p.a)))


def radical_ideal(p: VeroneseParams) -> SquarefreeIdeal:
    return SquarefreeIdeal(p.n, radical_generators(p))


@dataclass(frozen=True)
class EquidimReport:
    verdict: bool
    normal_form: NormalForm
    mb: MBInvariants | None = None
    borel: tuple[IndexSet, ...] = ()
    unique_top_borel: IndexSet | None = None
    failing_generator: IndexSet | None = None
    cover_cardinality: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.verdict


def _fmt(A: IndexSet) -> str:
    return "".join(f"x{i}" for i in A)


def is_equidimensional(p: VeroneseParams) -> EquidimReport:
    """Unique top Borel generator test on the core of ``p``.

    Index sets in the report are core coordinates; ``cover_cardinality`` counts
    variables of the whole ideal, peeled ones included.
    """
    nf = normalize(p)
    peeled = nf.n_peeled
    if nf.core is None:
        why = "Veronese ideal" if nf.pure_veronese else "radical is generated by the peeled variables"
        return EquidimReport(True, nf, cover_cardinality=peeled, reason=why)

    J = radical_ideal(nf.core)
    bor = borel_generators(J)
    inv = mb(J)
    m, b = inv.m, inv.b
    expected = tuple(range(m - b + 1, m + 1))
    top = [u for u in bor if len(u) == b]
    unique = top[0] if len(top) == 1 else None

    wrong_top = [u for u in top if u != expected]
    if wrong_top:
        return EquidimReport(
            False, nf, inv, bor, unique, wrong_top[0],
            reason=f"Borel generator of degree {b} is {_fmt(wrong_top[0])}, not {_fmt(expected)}",
        )
    failing = [u for u in bor if u[-1] - len(u) > m - b]
    if failing:
        u = failing[0]
        return EquidimReport(
            False, nf, inv, bor, unique, u,
            reason=f"max - deg of {_fmt(u)} is {u[-1] - len(u)} > m - b = {m - b}",
        )
    return EquidimReport(
        True, nf, inv, bor, unique,
        cover_cardinality=m - b + 1 + peeled,
        reason=f"unique top Borel generator {_fmt(expected)}; every max - deg <= {m - b}",
    )


@dataclass(frozen=True)
class PairReport:
    pair: tuple[int, int] | None
    condition_ii: bool
    violating: tuple[IndexSet, ...] = ()

    @property
    def equidimensional(self) -> bool:
        return self.pair is not None and self.condition_ii


def _window_pairs(p: VeroneseParams) -> list[tuple[int, int]]:
    a, d, n = p.a, p.d, p.n
    out = []
    for end in range(1, n + 1):
        for length in range(1, end + 1):
            window = a[end - length:end]
            if sum(window) >= d and sum(window[:-1]) < d:
                out.append((end, length))
    return out


def maximal_pair(p: VeroneseParams) -> PairReport:
    """Largest ``(p, l)`` whose window ``a_{p-l+1..p}`` first reaches ``d`` at ``p``,
    and whether every radical generator has ``max - deg <= p - l``."""
    _require_core(p)
    pairs = _window_pairs(p)
    for x, y in combinations(pairs, 2):
        if not ((x[0] <= y[0] and x[1] <= y[1]) or (y[0] <= x[0] and y[1] <= x[1])):
            raise ConsistencyError(f"incomparable window pairs {x} and {y}")
    if not pairs:
        return PairReport(None, False)
    top = max(pairs)
    slack = top[0] - top[1]
    violating = tuple(u for u in radical_generators(p) if u[-1] - len(u) > slack)
    return PairReport(top, not violating, violating)


@dataclass(frozen=True)
class WitnessedPrime:
    """Associated prime ``P_A`` together with ``z`` such that ``I : z = P_A``."""

    A: IndexSet
    witness: tuple[int, ...]

    @property
    def monomial(self) -> Monomial:
        return Monomial(self.witness)


def prime_order(A: IndexSet) -> tuple[int, IndexSet]:
    return (len(A), A)


def _require_sorted(p: VeroneseParams) -> None:
    if not is_sorted_form(p):
        raise PreconditionError(
            f"({p}) is not in sorted form d >= a_1 >= ... >= a_n >= 1; normalize first"
        )


def greedy_witness(p: VeroneseParams, A: IndexSet) -> tuple[int, ...]:
    """Exponents ``b_i < a_i`` on ``A`` (filled left to right) and ``a_i`` off ``A``,
    of total degree ``d - 1``."""
    inside = set(A)
    deficit = p.d - 1 - sum(x for i, x in enumerate(p.a, 1) if i not in inside)
    z = []
    for i, x in enumerate(p.a, 1):
        if i in inside:
            take = min(x - 1, deficit)
            z.append(take)
            deficit -= take
        else:
            z.append(x)
    if deficit != 0:
        raise ConsistencyError(f"no witness of degree d - 1 for P_{A} in ({p})")
    return tuple(z)


def associated_primes(p: VeroneseParams, *, verify: bool = True) -> tuple[WitnessedPrime, ...]:
    """``Ass(S/I)`` for sorted-form ``p`` with witness monomials.

    ``P_A`` is associated iff ``sum(a) >= d - 1 + |A|`` and the caps off ``A``
    sum to at most ``d - 1``.  With ``verify`` each witness is checked by an
    explicit colon computation.
    """
    _require_sorted(p)
    n, d = p.n, p.d
    total = sum(p.a)
    if d == 1:
        found = [WitnessedPrime(tuple(range(1, n + 1)), (0,) * n)]
    else:
        found = []
        for k in range(1, n + 1):
            if total < d - 1 + k:
                break
            for A in combinations(range(1, n + 1), k):
                outside = total - sum(p.a[i - 1] for i in A)
                if outside <= d - 1:
                    found.append(WitnessedPrime(A, greedy_witness(p, A)))
    if verify:
        I = polymatroidal_ideal_unchecked(veronese_bases(p))
        for wp in found:
            z = wp.monomial
            if contains(I, z) or colon(I, z) != prime_ideal(wp.A, n):
                raise ConsistencyError(f"witness {z} does not give I : z = P_{wp.A}")
    return tuple(sorted(found, key=lambda wp: prime_order(wp.A)))


def embedded_pairs(primes) -> list[tuple[IndexSet, IndexSet]]:
    """Pairs ``(A, B)`` of associated primes with ``P_A`` strictly inside ``P_B``."""
    sets = [wp.A if isinstance(wp, WitnessedPrime) else tuple(wp) for wp in primes]
    return [(A, B) for A in sets for B in sets if len(A) < len(B) and set(A) <= set(B)]


def is_unmixed(p: VeroneseParams) -> bool:
    nf = normalize(p)
    return not embedded_pairs(associated_primes(nf.sorted, verify=False))


class CMClass(str, enum.Enum):
    PRINCIPAL = "Principal"
    VERONESE = "Veronese"
    SQUAREFREE_VERONESE = "SquarefreeVeronese"
    NOT_COHEN_MACAULAY = "NotCohenMacaulay"

    def __str__(self) -> str:
        return self.value


def classify(p: VeroneseParams) -> CMClass:
    """Cohen-Macaulay class; precedence Principal > Veronese > SquarefreeVeronese."""
    s = normalize(p).sorted
    if sum(s.a) == s.d:
        return CMClass.PRINCIPAL
    if all(x == s.d for x in s.a):
        return CMClass.VERONESE
    if all(x == 1 for x in s.a) and s.d < s.n:
        return CMClass.SQUAREFREE_VERONESE
    return CMClass.NOT_COHEN_MACAULAY


def strong_polymatroidal_equidimensional(B: BaseSet) -> bool:
    """Equidimensionality of the polymatroidal ideal of a strong-exchange base set.

    A nonzero translation vector splits off a monomial factor, and then the
    ideal is equidimensional exactly when its radical is principal.
    """
    if not check_strong_exchange(B):
        raise NotStrongExchangeError("base set does not satisfy the strong exchange property")
    u0, shifted = translation_normalize(B)
    if not any(u0):
        params = as_veronese_params(shifted)
        if params is None:
            raise ConsistencyError("translated base set is not of Veronese type")
        return is_equidimensional(params).verdict
    return is_principal(radical(polymatroidal_ideal_unchecked(B)))
