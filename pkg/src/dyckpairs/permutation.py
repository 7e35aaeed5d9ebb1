"""Permutations in one-line notation and their extremal-entry profiles.

All positions and values are 1-indexed.  A permutation of length ``n`` is
stored as a tuple holding ``sigma(1), ..., sigma(n)``.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence


class InvalidPermutation(ValueError):
    pass


@dataclass(frozen=True)
class Permutation:
    values: tuple[int, ...]

    def __init__(self, values: Iterable[int] = ()):
        vals = tuple(int(v) for v in values)
        if sorted(vals) != list(range(1, len(vals) + 1)):
            raise InvalidPermutation(f"not a permutation of 1..{len(vals)}: {vals}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse whitespace-separated one-line notation, e.g. ``"5 3 4 8"``."""
        try:
            vals = [int(tok) for tok in text.replace(",", " ").split()]
        except ValueError as exc:
            raise InvalidPermutation(f"malformed permutation: {text!r}") from exc
        return cls(vals)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __call__(self, i: int) -> int:
        """Value at 1-indexed position ``i``."""
        if not 1 <= i <= len(self.values):
            raise IndexError(i)
        return self.values[i - 1]

    def __str__(self) -> str:
        return " ".join(map(str, self.values))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


class MinProfile(NamedTuple):
    """Left-to-right minima: values decreasing, positions increasing, paired."""

    values: tuple[int, ...]
    positions: tuple[int, ...]


class MaxProfile(NamedTuple):
    """Right-to-left maxima: values increasing, positions decreasing, paired."""

    values: tuple[int, ...]
    positions: tuple[int, ...]


def _perm(sigma) -> Permutation:
    return sigma if isinstance(sigma, Permutation) else Permutation(sigma)


def ltr_minima(sigma) -> MinProfile:
    vals, pos = [], []
    current = None
    for i, x in enumerate(_perm(sigma).values, start=1):
        if current is None or x < current:
            current = x
            vals.append(x)
            pos.append(i)
    return MinProfile(tuple(vals), tuple(pos))


def rtl_maxima(sigma) -> MaxProfile:
    values = _perm(sigma).values
    vals, pos = [], []
    current = 0
    for i in range(len(values), 0, -1):
        x = values[i - 1]
        if x > current:
            current = x
            vals.append(x)
            pos.append(i)
    return MaxProfile(tuple(vals), tuple(pos))


def reverse_complement(sigma) -> Permutation:
    values = _perm(sigma).values
    n = len(values)
    return Permutation(n + 1 - x for x in reversed(values))


def inverse(sigma) -> Permutation:
    values = _perm(sigma).values
    inv = [0] * len(values)
    for i, x in enumerate(values, start=1):
        inv[x - 1] = i
    return Permutation(inv)


def lis_length(seq: Sequence[int]) -> int:
    """Length of the longest strictly increasing subsequence (patience sorting)."""
    tails: list[int] = []
    for x in seq:
        k = bisect_left(tails, x)
        if k == len(tails):
            tails.append(x)
        else:
            tails[k] = x
    return len(tails)


def _argsort(seq: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(range(len(seq)), key=seq.__getitem__))


def contains_pattern(sigma, pattern) -> bool:
    """Brute-force pattern containment over all subsequences of pattern length.

    Exponential in ``len(pattern)``; meant for small inputs and as an oracle
    for the LIS-based fast paths.
    """
    pattern = _perm(pattern)
    if len(pattern) == 0:
        raise InvalidPermutation("pattern must be non-empty")
    values = _perm(sigma).values
    shape = _argsort(pattern.values)
    k = len(shape)
    for idx in combinations(range(len(values)), k):
        sub = [values[i] for i in idx]
        if _argsort(sub) == shape:
            return True
    return False


def avoids_123(sigma) -> bool:
    return lis_length(_perm(sigma).values) < 3


def avoids_1234(sigma) -> bool:
    return lis_length(_perm(sigma).values) < 4


def right_connected_components(sigma) -> list[Permutation]:
    """Split at every proper suffix that is a permutation of ``{1, ..., t}``.

    Components come back left to right, each standardized by subtracting the
    values of the blocks to its right.
    """
    values = _perm(sigma).values
    n = len(values)
    cuts = [n]
    running_max = 0
    for i in range(n - 1, 0, -1):
        running_max = max(running_max, values[i])
        if running_max == n - i:
            cuts.append(i)
    cuts.append(0)
    cuts.reverse()
    comps = []
    for start, stop in zip(cuts, cuts[1:]):
        if start == stop:
            continue
        offset = n - stop
        comps.append(Permutation(x - offset for x in values[start:stop]))
    return comps


def is_right_connected(sigma) -> bool:
    return len(right_connected_components(sigma)) <= 1


def equivalent(sigma, other) -> bool:
    """Same values and positions of LTR minima and RTL maxima."""
    sigma, other = _perm(sigma), _perm(other)
    if len(sigma) != len(other):
        raise ValueError("permutations of different lengths")
    return ltr_minima(sigma) == ltr_minima(other) and rtl_maxima(sigma) == rtl_maxima(other)


def fill_from_profiles(n: int, minima: MinProfile | None, maxima: MaxProfile | None) -> Permutation:
    """Place the given minima and maxima, then the rest in decreasing order.

    Raises ``InvalidPermutation`` if the two profiles claim the same position
    for different values or the same value for different positions.
    """
    slots = [0] * n
    placed: dict[int, int] = {}
    for prof in (minima, maxima):
        if prof is None:
            continue
        for v, p in zip(prof.values, prof.positions):
            if not (1 <= v <= n and 1 <= p <= n):
                raise InvalidPermutation(f"profile entry {v}@{p} out of range for n={n}")
            if slots[p - 1] not in (0, v) or placed.get(v, p) != p:
                raise InvalidPermutation(f"conflicting profiles at value {v}, position {p}")
            slots[p - 1] = v
            placed[v] = p
    rest = iter(sorted(set(range(1, n + 1)) - placed.keys(), reverse=True))
    return Permutation(x if x else next(rest) for x in slots)


def canonical_representative(sigma) -> Permutation:
    """The unique 1234-avoiding permutation sharing sigma's minima and maxima."""
    sigma = _perm(sigma)
    return fill_from_profiles(len(sigma), ltr_minima(sigma), rtl_maxima(sigma))


def _removal_indices_ok(kept_vals, all_vals, kept_pos, all_pos) -> bool:
    # all_vals / all_pos are in the order that defines the 1-based indices
    if not (set(kept_vals) <= set(all_vals) and set(kept_pos) <= set(all_pos)):
        return False
    kept_v, kept_p = set(kept_vals), set(kept_pos)
    val_idx = [i for i, v in enumerate(all_vals, start=1) if v not in kept_v]
    pos_idx = [j for j, p in enumerate(all_pos, start=1) if p not in kept_p]
    if len(val_idx) != len(pos_idx):
        return False
    return all(i < j for i, j in zip(val_idx, pos_idx))


def min_profile_leq(lower: MinProfile, upper: MinProfile) -> bool:
    return _removal_indices_ok(upper.values, lower.values, upper.positions, lower.positions)


def max_profile_leq(lower: MaxProfile, upper: MaxProfile) -> bool:
    return _removal_indices_ok(upper.values, lower.values, upper.positions, lower.positions)


def leq_lambda(sigma, tau) -> bool:
    """Intrinsic comparison through the minima profiles.

    True when tau's minima values and positions are subsets of sigma's and the
    k-th removed value (by decreasing value) has a strictly smaller index than
    the k-th removed position (by increasing position).
    """
    sigma, tau = _perm(sigma), _perm(tau)
    if len(sigma) != len(tau):
        raise ValueError("permutations of different lengths")
    return min_profile_leq(ltr_minima(sigma), ltr_minima(tau))


def leq_mu(sigma, tau) -> bool:
    """Mirror of :func:`leq_lambda` on the right-to-left maxima."""
    sigma, tau = _perm(sigma), _perm(tau)
    if len(sigma) != len(tau):
        raise ValueError("permutations of different lengths")
    return max_profile_leq(rtl_maxima(sigma), rtl_maxima(tau))
