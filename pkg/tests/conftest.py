"""Shared helpers for the test suite."""

import itertools
import random

from optreal import DegreeSequence, is_graphic


def all_positive_sequences(n: int):
    """Every non-increasing sequence of n degrees from [1, max(n-1, 1)]."""
    top = max(n - 1, 1)
    for vals in itertools.combinations_with_replacement(range(top, 0, -1), n):
        yield DegreeSequence(tuple(vals))


def graphic_sequences_upto(n_max: int):
    for n in range(1, n_max + 1):
        for d in all_positive_sequences(n):
            if is_graphic(d):
                yield d


def random_graphic_sequence(rng: random.Random, n: int, dmax: int | None = None) -> DegreeSequence:
    """Sample a graphic sequence of length n with degrees in [1, dmax].

    For n < 2 no positive degree is realizable, so the result is all zeros.
    """
    if n < 2:
        return DegreeSequence((), zero_count=n)
    dmax = max(min(dmax if dmax is not None else n - 1, n - 1), 1)
    if dmax == 1 and n % 2 != 0:
        dmax = 2  # an odd all-ones vector is never graphic
    while True:
        vals = sorted((rng.randint(1, dmax) for _ in range(n)), reverse=True)
        if sum(vals) % 2 != 0:
            lowered = False
            for i in range(n - 1, -1, -1):
                if vals[i] > 1:
                    vals[i] -= 1
                    lowered = True
                    break
            if not lowered:
                continue
            vals.sort(reverse=True)
        d = DegreeSequence(tuple(vals))
        if is_graphic(d):
            return d
