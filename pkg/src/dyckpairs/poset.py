"""Partial order on Dyck paths of a fixed semilength.

On irreducible paths, Q covers P when Q's code drops one ascent entry A_i and
one descent entry D_j of P's code with j >= i.  The order is the transitive
closure of that, extended to reducible paths component by component.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterable, Iterator

from .dyckpath import AscentDescentCode, DyckPath, concat, from_code, irreducible_components, is_irreducible, to_code


def _check_same_semilength(p: DyckPath, q: DyckPath) -> None:
    if p.semilength != q.semilength:
        raise ValueError(f"semilengths differ: {p.semilength} vs {q.semilength}")


def _removals(code: AscentDescentCode) -> Iterator[AscentDescentCode]:
    A, D = code.A, code.D
    for i in range(len(A)):
        for j in range(i, len(D)):
            yield AscentDescentCode(code.n, A[:i] + A[i + 1 :], D[:j] + D[j + 1 :])


def covers(q: DyckPath, p: DyckPath) -> bool:
    """True when irreducible ``q`` covers irreducible ``p``."""
    _check_same_semilength(p, q)
    if not (is_irreducible(p) and is_irreducible(q)):
        raise ValueError("covering is only defined between irreducible paths")
    target = to_code(q)
    return any(c == target for c in _removals(to_code(p)))


@lru_cache(maxsize=None)
def _irreducible_upper_covers(p: DyckPath) -> tuple[DyckPath, ...]:
    return tuple(dict.fromkeys(from_code(c) for c in _removals(to_code(p))))


def upper_covers(p: DyckPath) -> list[DyckPath]:
    """All paths covering ``p``: one component moved up by a single cover."""
    comps = irreducible_components(p)
    out = []
    for k, comp in enumerate(comps):
        for up in _irreducible_upper_covers(comp):
            out.append(concat(*comps[:k], up, *comps[k + 1 :]))
    return out


def _leq_codes(lower: AscentDescentCode, upper: AscentDescentCode) -> bool:
    if not (set(upper.A) <= set(lower.A) and set(upper.D) <= set(lower.D)):
        return False
    kept_a, kept_d = set(upper.A), set(upper.D)
    gone_a = [i for i, a in enumerate(lower.A) if a not in kept_a]
    gone_d = [j for j, d in enumerate(lower.D) if d not in kept_d]
    if len(gone_a) != len(gone_d):
        return False
    return all(i <= j for i, j in zip(gone_a, gone_d))


def leq(p: DyckPath, q: DyckPath) -> bool:
    """``p <= q``, decided by code inclusion plus index matching per component."""
    _check_same_semilength(p, q)
    pc, qc = irreducible_components(p), irreducible_components(q)
    if [c.semilength for c in pc] != [c.semilength for c in qc]:
        return False
    return all(_leq_codes(to_code(a), to_code(b)) for a, b in zip(pc, qc))


@lru_cache(maxsize=None)
def up_set(p: DyckPath) -> frozenset[DyckPath]:
    """Everything reachable from ``p`` by repeated covers (breadth first)."""
    seen = {p}
    queue = deque([p])
    while queue:
        for nxt in upper_covers(queue.popleft()):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


def leq_oracle(p: DyckPath, q: DyckPath) -> bool:
    _check_same_semilength(p, q)
    return q in up_set(p)


def hasse_dot(paths: Iterable[DyckPath], name: str = "dyck") -> str:
    """DOT text for the cover graph restricted to ``paths``."""
    paths = list(paths)
    members = set(paths)
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for p in paths:
        lines.append(f'  "{p.steps}";')
    for p in paths:
        for q in upper_covers(p):
            if q in members:
                lines.append(f'  "{p.steps}" -> "{q.steps}";')
    lines.append("}")
    return "\n".join(lines)
