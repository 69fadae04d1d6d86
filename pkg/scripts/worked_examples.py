"""Print the standard worked examples next to brute-force confirmation.

    python scripts/worked_examples.py
"""

from veronese_type.core import colon, radical
from veronese_type.oracle import associated_primes_bruteforce, minimal_vertex_covers
from veronese_type.polymatroid import (
    BaseSet,
    VeroneseParams,
    polymatroidal_ideal_unchecked,
    rank,
    translation_normalize,
    veronese_bases,
)
from veronese_type.stable import SquarefreeIdeal, borel_generators, mb
from veronese_type.veronese import associated_primes, is_equidimensional, maximal_pair, radical_generators


def mono(A):
    return "".join(f"x{i}" for i in A)


def ideal(p):
    return polymatroidal_ideal_unchecked(veronese_bases(p))


def main():
    for text in ("7;4,3,2,1,1", "11;7,4,3,2,2,1", "9;7,3,3,2,1", "8;5,5,4,3,1,1"):
        d, caps = text.split(";")
        p = VeroneseParams(int(d), tuple(int(c) for c in caps.split(",")))
        J = SquarefreeIdeal(p.n, radical_generators(p))
        inv = mb(J)
        rep = is_equidimensional(p)
        covers = minimal_vertex_covers(radical(ideal(p)))
        print(f"I_{{{text}}}")
        print(f"  radical  {', '.join(mono(A) for A in J.gens)}")
        print(f"  Borel    {', '.join(mono(A) for A in borel_generators(J))}   m={inv.m} b={inv.b}")
        print(f"  equidim  {rep.verdict}: {rep.reason}")
        print(f"  oracle   cover sizes {sorted({len(W) for W in covers})}")

    pr = maximal_pair(VeroneseParams(15, (9, 6, 4, 3, 2, 2, 1, 1)))
    print(f"I_{{15;9,6,4,3,2,2,1,1}} maximal pair {pr.pair}, violators {[mono(A) for A in pr.violating]}")

    p = VeroneseParams(5, (3, 2, 1))
    I = ideal(p)
    print("I_{5;3,2,1} associated primes (closed form | oracle)")
    brute = dict(associated_primes_bruteforce(I))
    for wp in associated_primes(p):
        z = wp.monomial
        print(f"  P_{list(wp.A)} = I : {z}   colon check {colon(I, z)}   oracle witness {brute[wp.A]}")

    B = BaseSet(((2, 1, 1), (1, 2, 1), (1, 1, 2)))
    u0, shifted = translation_normalize(B)
    ranks = {A: rank(B, A) for A in [(1,), (2,), (3,), (1, 2), (1, 2, 3)]}
    print(f"strong-exchange example: ranks {ranks}, u0 {u0}, translated {shifted.vectors}")


if __name__ == "__main__":
    main()
