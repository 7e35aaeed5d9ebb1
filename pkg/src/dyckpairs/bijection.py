"""The maps lambda, mu and nu from permutations to Dyck paths, and back."""

from __future__ import annotations

from dataclasses import dataclass

from .dyckpath import (
    AscentDescentCode,
    DyckPath,
    irreducible_components,
    reverse,
    to_code,
)
from .involution import lprime
from .permutation import (
    MaxProfile,
    MinProfile,
    InvalidPermutation,
    Permutation,
    avoids_1234,
    fill_from_profiles,
    inverse,
    ltr_minima,
    reverse_complement,
    rtl_maxima,
)
from .poset import leq


class NotAdmissible(ValueError):
    pass


class ConsistencyError(RuntimeError):
    """A postcondition of the inverse construction failed; always a bug."""


@dataclass(frozen=True)
class PathPair:
    first: DyckPath
    second: DyckPath

    def __post_init__(self):
        if self.first.semilength != self.second.semilength:
            raise ValueError("paths in a pair must have equal semilength")

    def __iter__(self):
        return iter((self.first, self.second))

    def swapped(self) -> "PathPair":
        return PathPair(self.second, self.first)


def _perm(sigma) -> Permutation:
    return sigma if isinstance(sigma, Permutation) else Permutation(sigma)


def lambda_map(sigma) -> DyckPath:
    """Each LTR minimum m emits U^(previous minimum - m) D, every other entry a D."""
    values = _perm(sigma).values
    steps = []
    current = len(values) + 1
    for x in values:
        if x < current:
            steps.append("U" * (current - x))
            current = x
        steps.append("D")
    return DyckPath("".join(steps))


def mu_map(sigma) -> DyckPath:
    """Read right to left: each RTL maximum M emits U^(M - previous maximum) D,
    every other entry a D."""
    values = _perm(sigma).values
    steps = []
    current = 0
    for x in reversed(values):
        if x > current:
            steps.append("U" * (x - current))
            current = x
        steps.append("D")
    return DyckPath("".join(steps))


def nu(sigma) -> PathPair:
    sigma = _perm(sigma)
    return PathPair(lambda_map(sigma), mu_map(sigma))


def lambda_code(sigma) -> AscentDescentCode:
    """Code of lambda(sigma) straight from the minima profile."""
    sigma = _perm(sigma)
    n = len(sigma)
    m, p = ltr_minima(sigma)
    return AscentDescentCode(n, [n + 1 - x for x in m[:-1]], [q - 1 for q in p[1:]])


def mu_code(sigma) -> AscentDescentCode:
    sigma = _perm(sigma)
    n = len(sigma)
    M, P = rtl_maxima(sigma)
    return AscentDescentCode(n, M[:-1], [n - q for q in P[1:]])


def min_profile_of_path(path: DyckPath) -> MinProfile:
    code = to_code(path)
    n = code.n
    if n == 0:
        return MinProfile((), ())
    return MinProfile(tuple(n + 1 - a for a in code.A) + (1,), (1,) + tuple(d + 1 for d in code.D))


def max_profile_of_path(path: DyckPath) -> MaxProfile:
    code = to_code(path)
    n = code.n
    if n == 0:
        return MaxProfile((), ())
    return MaxProfile(code.A + (n,), (n,) + tuple(n - d for d in code.D))


def lambda_inv_123(path: DyckPath) -> Permutation:
    """The 123-avoiding permutation whose lambda-path is ``path``."""
    return fill_from_profiles(path.semilength, min_profile_of_path(path), None)


def mu_inv_123(path: DyckPath) -> Permutation:
    return fill_from_profiles(path.semilength, None, max_profile_of_path(path))


def _as_pair(p, q=None) -> PathPair:
    if q is None:
        return p if isinstance(p, PathPair) else PathPair(*p)
    return PathPair(p, q)


def is_admissible(p, q=None) -> bool:
    """``p >= L'(q)`` and ``q >= L'(p)``.

    Since L' reverses component order, the k-th component of ``p`` is matched
    against the k-th component from the right of ``q``.
    """
    pair = _as_pair(p, q)
    return leq(lprime(pair.second), pair.first) and leq(lprime(pair.first), pair.second)


def _merge(p: DyckPath, q: DyckPath) -> Permutation:
    sigma = lambda_inv_123(p)
    tau = mu_inv_123(q)
    try:
        return fill_from_profiles(p.semilength, ltr_minima(sigma), rtl_maxima(tau))
    except InvalidPermutation as exc:
        raise ConsistencyError(f"minima of {sigma} and maxima of {tau} disagree") from exc


def _merge_componentwise(p: DyckPath, q: DyckPath) -> Permutation:
    pcs = irreducible_components(p)
    qcs = irreducible_components(q)[::-1]
    if [c.semilength for c in pcs] != [c.semilength for c in qcs]:
        raise ConsistencyError("component sizes of an admissible pair do not line up")
    out: list[int] = []
    remaining = p.semilength
    for pc, qc in zip(pcs, qcs):
        remaining -= pc.semilength
        out.extend(x + remaining for x in _merge(pc, qc).values)
    return Permutation(out)


def nu_inv(p, q=None, *, componentwise: bool = True) -> Permutation:
    """The 1234-avoiding permutation alpha with nu(alpha) equal to the pair.

    Minima come from the 123-avoider over the first path, maxima from the
    123-avoider under the second, and the leftover values fill the leftover
    positions in decreasing order.
    """
    pair = _as_pair(p, q)
    if not is_admissible(pair):
        raise NotAdmissible(f"not admissible: ({pair.first}, {pair.second})")
    if componentwise:
        alpha = _merge_componentwise(pair.first, pair.second)
    else:
        alpha = _merge(pair.first, pair.second)
    if not avoids_1234(alpha):
        raise ConsistencyError(f"{alpha} contains 1234")
    if ltr_minima(alpha) != min_profile_of_path(pair.first):
        raise ConsistencyError(f"{alpha} has the wrong minima")
    if rtl_maxima(alpha) != max_profile_of_path(pair.second):
        raise ConsistencyError(f"{alpha} has the wrong maxima")
    if nu(alpha) != pair:
        raise ConsistencyError(f"nu({alpha}) does not reproduce the pair")
    return alpha


def nu_rc_holds(sigma) -> bool:
    """nu(sigma^rc) is nu(sigma) with the two paths swapped."""
    return nu(reverse_complement(sigma)) == nu(sigma).swapped()


def nu_inverse_op_holds(sigma) -> bool:
    """nu(sigma^-1) is nu(sigma) with both paths reflected left to right."""
    first, second = nu(sigma)
    return nu(inverse(sigma)) == PathPair(reverse(first), reverse(second))


def is_symmetric(path: DyckPath) -> bool:
    return reverse(path) == path

