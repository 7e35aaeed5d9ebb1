"""Dyck paths and their ascent-descent codes."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import groupby
from typing import Iterable


class InvalidPath(ValueError):
    pass


class InvalidCode(ValueError):
    """Base class for ascent-descent codes that describe no Dyck path."""


class CodeLengthError(InvalidCode):
    pass


class AscentOrderError(InvalidCode):
    pass


class DescentOrderError(InvalidCode):
    pass


class CodeRangeError(InvalidCode):
    pass


class CodeDominanceError(InvalidCode):
    pass


EMPTY_TOKENS = ("", "e", "ε", "eps")


@dataclass(frozen=True)
class DyckPath:
    steps: str

    def __post_init__(self):
        height = 0
        for s in self.steps:
            if s == "U":
                height += 1
            elif s == "D":
                height -= 1
            else:
                raise InvalidPath(f"unknown step {s!r} in {self.steps!r}")
            if height < 0:
                raise InvalidPath(f"path goes below the axis: {self.steps!r}")
        if height != 0:
            raise InvalidPath(f"path does not return to the axis: {self.steps!r}")

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def __len__(self) -> int:
        return len(self.steps)

    def __add__(self, other: "DyckPath") -> "DyckPath":
        return DyckPath(self.steps + other.steps)

    def __str__(self) -> str:
        return self.steps

    def heights(self) -> list[int]:
        """Heights at x = 0, 1, ..., 2n."""
        h = [0]
        for s in self.steps:
            h.append(h[-1] + (1 if s == "U" else -1))
        return h

    @classmethod
    def pyramid(cls, n: int) -> "DyckPath":
        return cls("U" * n + "D" * n)

    @classmethod
    def zigzag(cls, n: int) -> "DyckPath":
        return cls("UD" * n)


EMPTY = DyckPath("")


@dataclass(frozen=True)
class AscentDescentCode:
    n: int
    A: tuple[int, ...]
    D: tuple[int, ...]

    def __init__(self, n: int, A: Iterable[int] = (), D: Iterable[int] = ()):
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "A", tuple(int(a) for a in A))
        object.__setattr__(self, "D", tuple(int(d) for d in D))

    def validate(self) -> "AscentDescentCode":
        n, A, D = self.n, self.A, self.D
        if n < 0:
            raise CodeRangeError(f"negative semilength {n}")
        if len(A) != len(D):
            raise CodeLengthError(f"|A| = {len(A)} but |D| = {len(D)}")
        # k - 1 entries with 1 <= k <= n
        if len(A) > max(n - 1, 0):
            raise CodeLengthError(f"code of length {len(A)} too long for n = {n}")
        if any(a >= b for a, b in zip(A, A[1:])):
            raise AscentOrderError(f"A not strictly increasing: {A}")
        if any(a >= b for a, b in zip(D, D[1:])):
            raise DescentOrderError(f"D not strictly increasing: {D}")
        for x in A + D:
            if not 1 <= x <= n - 1:
                raise CodeRangeError(f"entry {x} outside 1..{n - 1}")
        for i, (a, d) in enumerate(zip(A, D), start=1):
            if a < d:
                raise CodeDominanceError(f"A_{i} = {a} < D_{i} = {d}")
        return self

    def literal(self) -> str:
        return f"n={self.n};A={','.join(map(str, self.A))};D={','.join(map(str, self.D))}"

    def __str__(self) -> str:
        return self.literal()

    @classmethod
    def parse(cls, text: str) -> "AscentDescentCode":
        m = re.fullmatch(r"\s*n\s*=\s*(\d+)\s*;\s*A\s*=([\d,\s]*);\s*D\s*=([\d,\s]*)", text)
        if not m:
            raise InvalidCode(f"malformed code literal: {text!r}")
        n, a, d = m.groups()
        split = lambda s: [int(t) for t in s.replace(",", " ").split()]
        return cls(int(n), split(a), split(d)).validate()


def _runs(steps: str) -> list[tuple[str, int]]:
    return [(k, len(list(g))) for k, g in groupby(steps)]


def to_code(path: DyckPath) -> AscentDescentCode:
    ups, downs = [], []
    for step, length in _runs(path.steps):
        (ups if step == "U" else downs).append(length)
    A, D, sa, sd = [], [], 0, 0
    for a, d in zip(ups[:-1], downs[:-1]):
        sa += a
        sd += d
        A.append(sa)
        D.append(sd)
    return AscentDescentCode(path.semilength, A, D)


def from_code(code: AscentDescentCode) -> DyckPath:
    code.validate()
    if code.n == 0:
        return EMPTY
    A = (0,) + code.A + (code.n,)
    D = (0,) + code.D + (code.n,)
    parts = []
    for i in range(1, len(A)):
        parts.append("U" * (A[i] - A[i - 1]))
        parts.append("D" * (D[i] - D[i - 1]))
    return DyckPath("".join(parts))


def parse_path(text: str) -> DyckPath:
    """Accept either a U/D step string or a code literal ``n=7;A=2,6;D=1,3``."""
    text = text.strip()
    if "=" in text:
        return from_code(AscentDescentCode.parse(text))
    if text in EMPTY_TOKENS:
        return EMPTY
    return DyckPath(text.upper().replace(" ", ""))


def returns(path: DyckPath) -> list[int]:
    """1-based indices of the down steps that end on the axis."""
    h = path.heights()
    return [i for i in range(1, len(h)) if h[i] == 0]


def is_irreducible(path: DyckPath) -> bool:
    return len(returns(path)) == 1


def irreducible_components(path: DyckPath) -> list[DyckPath]:
    comps, start = [], 0
    for r in returns(path):
        comps.append(DyckPath(path.steps[start:r]))
        start = r
    return comps


def reverse(path: DyckPath) -> DyckPath:
    swap = {"U": "D", "D": "U"}
    return DyckPath("".join(swap[s] for s in reversed(path.steps)))


def concat(*paths: DyckPath) -> DyckPath:
    return DyckPath("".join(p.steps for p in paths))


def render_ascii(path: DyckPath) -> str:
    """Draw the path with ``/`` and ``\\``, top row first."""
    if path.semilength == 0:
        return ""
    grid = [[" "] * len(path.steps) for _ in range(max(path.heights()))]
    h = 0
    for x, s in enumerate(path.steps):
        if s == "U":
            grid[h][x] = "/"
            h += 1
        else:
            h -= 1
            grid[h][x] = "\\"
    return "\n".join("".join(row).rstrip() for row in reversed(grid))
