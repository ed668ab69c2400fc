"""Random convex combinations of extreme ranks."""
from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Sequence

from ..rank_functions.ranks import Convex, RankFunction


def random_weights(rng: random.Random, n: int, denominator: int = 12) -> List[Fraction]:
    """n positive rationals summing to 1."""
    cuts = sorted(rng.randint(1, denominator * n - 1) for _ in range(n - 1))
    if len(set(cuts)) < len(cuts):
        return random_weights(rng, n, denominator)
    edges = [0] + cuts + [denominator * n]
    return [Fraction(edges[i + 1] - edges[i], denominator * n) for i in range(n)]


def random_convex(extremes: Sequence[RankFunction], rng: random.Random,
                  max_terms: int = 3) -> RankFunction:
    """A convex combination of 1..max_terms distinct extremes with random weights."""
    k = rng.randint(1, min(max_terms, len(extremes)))
    picks = rng.sample(list(extremes), k)
    if k == 1:
        return picks[0]
    return Convex(tuple(zip(random_weights(rng, k), picks)))


def random_convex_family(extremes: Sequence[RankFunction], count: int, seed: int = 0,
                         max_terms: int = 3) -> List[RankFunction]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        r = random_convex(extremes, rng, max(2, max_terms))
        if isinstance(r, Convex):
            out.append(r)
    return out
