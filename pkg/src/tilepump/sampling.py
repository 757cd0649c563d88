"""Random instance generators for fuzzing the geometric results.

Every generator takes an explicit ``random.Random`` so trials are
reproducible from a seed.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Optional, Tuple

from .curves import (
    CurveSystem,
    PolyChain,
    RPoint,
    RVector,
    chain_intersection,
    lattice_chain,
    translate_chain,
)

Lattice = Tuple[int, int]
_STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1))


def loop_erased_path(rng: random.Random, start: Lattice, end: Lattice,
                     greed: float = 0.55) -> List[Lattice]:
    """Self-avoiding lattice path from ``start`` to ``end``.

    Runs a random walk that steps toward ``end`` with probability ``greed``
    and uniformly otherwise, erasing loops as they close.
    """
    path = [tuple(start)]
    index = {path[0]: 0}
    end = tuple(end)
    while path[-1] != end:
        x, y = path[-1]
        if rng.random() < greed:
            options = []
            if end[0] != x:
                options.append((1 if end[0] > x else -1, 0))
            if end[1] != y:
                options.append((0, 1 if end[1] > y else -1))
            dx, dy = rng.choice(options)
        else:
            dx, dy = rng.choice(_STEPS)
        nxt = (x + dx, y + dy)
        if nxt in index:
            cut = index[nxt]
            for p in path[cut + 1:]:
                del index[p]
            del path[cut + 1:]
        else:
            index[nxt] = len(path)
            path.append(nxt)
    return path


def random_vector(rng: random.Random, reach: int) -> Lattice:
    while True:
        v = (rng.randint(-reach, reach), rng.randint(-reach, reach))
        if v != (0, 0):
            return v


def random_multiple_path(rng: random.Random, max_n: int = 5, reach: int = 5
                         ) -> Tuple[PolyChain, Lattice, int]:
    """A lattice chain from ``p`` to ``p + n v`` with its ``v`` and ``n``."""
    v = random_vector(rng, reach)
    n = rng.randint(1, max_n)
    p = (rng.randint(-5, 5), rng.randint(-5, 5))
    q = (p[0] + n * v[0], p[1] + n * v[1])
    return lattice_chain(loop_erased_path(rng, p, q)), v, n


def random_shift_free_path(rng: random.Random, reach: int = 5, span: int = 6,
                           max_tries: int = 1000) -> Tuple[PolyChain, Lattice]:
    """A lattice chain and vector ``v`` with the chain missing its shift by ``v``."""
    for _ in range(max_tries):
        p = (rng.randint(-span, span), rng.randint(-span, span))
        q = (rng.randint(-span, span), rng.randint(-span, span))
        if p == q:
            continue
        chain = lattice_chain(loop_erased_path(rng, p, q))
        v = random_vector(rng, reach)
        if chain_intersection(chain, translate_chain(chain, v)) is None:
            return chain, v
    raise RuntimeError("rejection sampling gave up")


def _random_linear_map(rng: random.Random):
    while True:
        a, b, c, d = (Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4))
        if a * d - b * c != 0:
            return a, b, c, d


def random_curve_system(rng: random.Random, max_k: int = 4, reach: int = 3,
                        max_n: int = 3, span: int = 6,
                        distort: Optional[bool] = None) -> CurveSystem:
    """Integer-multiplier system whose curves satisfy condition 1 by construction.

    Curves are loop-erased lattice walks.  With ``distort`` (random by
    default) the whole picture is pushed through a random invertible
    rational linear map, which preserves every incidence.
    """
    k = rng.randint(1, max_k)
    v = random_vector(rng, reach)
    bases = [(rng.randint(-span, span), rng.randint(-span, span)) for _ in range(k)]
    mults = [rng.randint(1, max_n) for _ in range(k)]
    paths = []
    for i in range(k):
        nxt = (i + 1) % k
        target = (bases[nxt][0] + mults[nxt] * v[0], bases[nxt][1] + mults[nxt] * v[1])
        if target == bases[i]:
            target_path = [bases[i]]
        else:
            target_path = loop_erased_path(rng, bases[i], target)
        paths.append(target_path)
    if any(len(p) < 2 for p in paths):
        return random_curve_system(rng, max_k, reach, max_n, span, distort)
    chains = [lattice_chain(p) for p in paths]
    if distort is None:
        distort = rng.random() < 0.5
    if distort:
        a, b, c, d = _random_linear_map(rng)
        off = (Fraction(rng.randint(-9, 9), 7), Fraction(rng.randint(-9, 9), 5))

        def f(p):
            return RPoint.of(a * p[0] + b * p[1] + off[0], c * p[0] + d * p[1] + off[1])

        chains = [PolyChain(f(p) for p in chain.vertices) for chain in chains]
        bases = [f(p) for p in bases]
        v = RVector.of(a * v[0] + b * v[1], c * v[0] + d * v[1])
    return CurveSystem(tuple(chains), tuple(RPoint.of(*p) for p in bases), tuple(mults), v)
