"""Exhaustive generation of permutations, pattern avoiders and Dyck paths."""

from __future__ import annotations

import os
from bisect import bisect_left
from itertools import permutations
from math import comb
from typing import Iterator

from .dyckpath import DyckPath
from .permutation import Permutation

DEFAULT_MAX_N = 10
MAX_N_ENV = "DYCKPAIRS_MAX_N"

PATTERN_LENGTHS = {"123": 3, "1234": 4}


class SizeCapError(ValueError):
    pass


def max_n() -> int:
    return int(os.environ.get(MAX_N_ENV, DEFAULT_MAX_N))


def _check(n: int, cap: int | None) -> None:
    cap = max_n() if cap is None else cap
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > cap:
        raise SizeCapError(f"n = {n} exceeds the size cap {cap} (set {MAX_N_ENV} to raise it)")


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def gen_permutations(n: int, cap: int | None = None) -> Iterator[Permutation]:
    _check(n, cap)
    for p in permutations(range(1, n + 1)):
        yield Permutation(p)


def gen_avoiding(n: int, pattern: str = "1234", cap: int | None = None) -> Iterator[Permutation]:
    """Lexicographic stream of the permutations of length n avoiding 12...k.

    Backtracks over prefixes, extending only while the patience piles of the
    prefix stay shorter than k.
    """
    _check(n, cap)
    try:
        k = PATTERN_LENGTHS[str(pattern)]
    except KeyError:
        raise ValueError(f"unsupported pattern {pattern!r}; choose 123 or 1234") from None

    prefix: list[int] = []
    used = [False] * (n + 1)
    tails: list[int] = []

    def extend() -> Iterator[Permutation]:
        if len(prefix) == n:
            yield Permutation(prefix)
            return
        for x in range(1, n + 1):
            if used[x]:
                continue
            pos = bisect_left(tails, x)
            if pos + 1 >= k:
                continue
            grew = pos == len(tails)
            old = None if grew else tails[pos]
            if grew:
                tails.append(x)
            else:
                tails[pos] = x
            used[x] = True
            prefix.append(x)
            yield from extend()
            prefix.pop()
            used[x] = False
            if grew:
                tails.pop()
            else:
                tails[pos] = old

    return extend()


def gen_dyck(n: int, cap: int | None = None) -> Iterator[DyckPath]:
    """All Dyck paths of semilength n, lexicographic with U before D."""
    _check(n, cap)
    steps: list[str] = []

    def rec(up: int, down: int) -> Iterator[DyckPath]:
        if down == n:
            yield DyckPath("".join(steps))
            return
        if up < n:
            steps.append("U")
            yield from rec(up + 1, down)
            steps.pop()
        if down < up:
            steps.append("D")
            yield from rec(up, down + 1)
            steps.pop()

    return rec(0, 0)


def count_avoiding(n: int, pattern: str = "1234", cap: int | None = None) -> int:
    return sum(1 for _ in gen_avoiding(n, pattern, cap))
