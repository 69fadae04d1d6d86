"""Randomized sweep comparing closed forms with the brute-force oracle.

    python scripts/random_sweep.py --count 1000 --max-n 7 --max-d 20 --seed 1

Prints disagreement counts and timings; exits 1 on any disagreement.
"""

import argparse
import logging
import random
import sys
import time
from dataclasses import dataclass
from math import prod

from veronese_type.core import radical
from veronese_type.oracle import associated_primes_bruteforce, minimal_vertex_covers
from veronese_type.polymatroid import VeroneseParams, polymatroidal_ideal_unchecked, veronese_bases
from veronese_type.veronese import CMClass, associated_primes, classify, is_equidimensional, is_unmixed, normalize

log = logging.getLogger("sweep")


@dataclass
class SweepConfig:
    count: int = 500
    max_n: int = 7
    max_d: int = 20
    max_divisors: int = 10**5
    seed: int = 0


@dataclass
class Tally:
    instances: int = 0
    equidim_checked: int = 0
    equidim_true: int = 0
    assoc_checked: int = 0
    unmixed_true: int = 0
    disagreements: int = 0


def draw(rng: random.Random, cfg: SweepConfig) -> VeroneseParams:
    while True:
        n = rng.randint(1, cfg.max_n)
        d = rng.randint(1, cfg.max_d)
        caps = tuple(rng.randint(0, d + 1) for _ in range(n))
        if sum(caps) >= d:
            return VeroneseParams(d, caps)


def sweep(cfg: SweepConfig) -> Tally:
    rng = random.Random(cfg.seed)
    tally = Tally()
    for _ in range(cfg.count):
        p = draw(rng, cfg)
        tally.instances += 1
        I = polymatroidal_ideal_unchecked(veronese_bases(p))
        sizes = {len(W) for W in minimal_vertex_covers(radical(I))}
        verdict = is_equidimensional(p).verdict
        tally.equidim_checked += 1
        tally.equidim_true += verdict
        if verdict != (len(sizes) == 1):
            tally.disagreements += 1
            log.error("equidimensionality disagrees on %s", p)
        sp = normalize(p).sorted
        if prod(c + 1 for c in sp.a) > cfg.max_divisors:
            continue
        tally.assoc_checked += 1
        Is = polymatroidal_ideal_unchecked(veronese_bases(sp))
        brute = [A for A, _ in associated_primes_bruteforce(Is)]
        if [wp.A for wp in associated_primes(sp)] != brute:
            tally.disagreements += 1
            log.error("associated primes disagree on %s", p)
        unmixed = is_unmixed(p)
        tally.unmixed_true += unmixed
        if unmixed != (classify(p) is not CMClass.NOT_COHEN_MACAULAY):
            tally.disagreements += 1
            log.error("unmixedness and class disagree on %s", p)
    return tally


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=SweepConfig.count)
    ap.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    ap.add_argument("--max-d", type=int, default=SweepConfig.max_d)
    ap.add_argument("--max-divisors", type=int, default=SweepConfig.max_divisors)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    cfg = SweepConfig(args.count, args.max_n, args.max_d, args.max_divisors, args.seed)
    start = time.perf_counter()
    tally = sweep(cfg)
    log.info("%s", tally)
    log.info("%.2fs", time.perf_counter() - start)
    return 1 if tally.disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
