"""The Kreweras-Lalanne involution L and its flipped, componentwise variant L'.

``lprime`` is computed from the ascent-descent code; ``kreweras`` is derived
from it.  The valley-marking construction lives in ``kreweras_geometric`` and
``lprime_geometric`` and only serves as an independent check.
"""

from __future__ import annotations

from functools import lru_cache

from .dyckpath import (
    EMPTY,
    AscentDescentCode,
    DyckPath,
    InvalidPath,
    concat,
    from_code,
    irreducible_components,
    reverse,
    to_code,
)


def lprime_code(code: AscentDescentCode) -> AscentDescentCode:
    """L' on the code of an irreducible path."""
    n = code.n
    if any(a <= d for a, d in zip(code.A, code.D)):
        raise InvalidPath(f"code {code} is not irreducible")
    shifted = {a - 1 for a in code.A}
    a_hat = sorted(set(range(1, n - 1)) - shifted, reverse=True)
    d_hat = sorted(set(range(1, n - 1)) - set(code.D), reverse=True)
    return AscentDescentCode(n, [n - a for a in a_hat], [n - 1 - d for d in d_hat])


@lru_cache(maxsize=None)
def _lprime_irreducible(path: DyckPath) -> DyckPath:
    return from_code(lprime_code(to_code(path)))


def lprime(path: DyckPath) -> DyckPath:
    # the vertical flip reverses the order of the irreducible components
    comps = irreducible_components(path)
    return concat(*(_lprime_irreducible(c) for c in reversed(comps)))


def _strip(path: DyckPath) -> DyckPath:
    return DyckPath(path.steps[1:-1])


def kreweras(path: DyckPath) -> DyckPath:
    if path.semilength == 0:
        return EMPTY
    return _strip(_lprime_irreducible(DyckPath("U" + reverse(path).steps + "D")))


def _double_step_midpoints(path: DyckPath, step: str) -> list[tuple[int, int]]:
    h = path.heights()
    s = path.steps
    return [(t + 1, h[t + 1]) for t in range(len(s) - 1) if s[t] == s[t + 1] == step]


def _path_through_valleys(n: int, valleys: list[tuple[int, int]]) -> DyckPath:
    points = [(0, 0)] + sorted(valleys) + [(2 * n, 0)]
    steps = []
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        dx, dy = x1 - x0, y1 - y0
        up, rem = divmod(dx + dy, 2)
        down = dx - up
        if rem or up < 1 or down < 1:
            raise InvalidPath(f"no Dyck path has valleys at {valleys}")
        steps.append("U" * up + "D" * down)
    return DyckPath("".join(steps))


def kreweras_geometric(path: DyckPath) -> DyckPath:
    """Valley-marking construction of L.

    Reflect the path in the x-axis.  From the i-th double ascent midpoint
    (left to right) draw a northeast line, from the i-th double descent
    midpoint a northwest line; their intersection is the i-th valley of the
    image.
    """
    n = path.semilength
    if n == 0:
        return EMPTY
    rises = _double_step_midpoints(path, "U")
    falls = _double_step_midpoints(path, "D")
    valleys = []
    for (x1, h1), (x2, h2) in zip(rises, falls):
        y1, y2 = -h1, -h2
        # y - y1 = x - x1 and y - y2 = x2 - x
        x = (x1 + x2 + y2 - y1) // 2
        valleys.append((x, x - x1 + y1))
    return _path_through_valleys(n, valleys)


def lprime_geometric(path: DyckPath) -> DyckPath:
    """L' straight from its definition, with L done by valley marking."""
    flipped = reverse(path)
    return concat(
        *(DyckPath("U" + kreweras_geometric(_strip(c)).steps + "D") for c in irreducible_components(flipped))
    )
