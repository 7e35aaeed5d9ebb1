"""Exhaustive (or seeded-sampled) property checks behind ``dyckpairs verify``."""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Callable, Iterable

from . import bijection as bij
from .corpus import _check, catalan, count_avoiding, gen_avoiding, gen_dyck, gen_permutations
from .dyckpath import concat, from_code, irreducible_components, reverse, to_code
from .involution import kreweras, kreweras_geometric, lprime, lprime_geometric
from .permutation import (
    avoids_123,
    avoids_1234,
    canonical_representative,
    contains_pattern,
    equivalent,
    inverse,
    leq_lambda,
    leq_mu,
    ltr_minima,
    reverse_complement,
    right_connected_components,
    rtl_maxima,
)
from .poset import leq, leq_oracle

# Largest n at which pairwise suites run over all pairs; above it they sample.
PAIRWISE_LIMIT = {"image": 7, "poset-oracle": 6, "profile-order": 6}
DEFAULT_SAMPLES = 20000


@dataclass
class CheckResult:
    suite: str
    name: str
    n: int
    passed: bool
    checked: int = 0
    detail: str = ""
    counterexample: str | None = None
    extra: dict = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        msg = f"[{status}] {self.suite}:{self.name} n={self.n} checked={self.checked}"
        if self.detail:
            msg += f" {self.detail}"
        if self.counterexample:
            msg += f" counterexample={self.counterexample}"
        return msg


def _run(suite: str, name: str, n: int, items: Iterable, pred: Callable, show=str) -> CheckResult:
    count = 0
    for item in items:
        count += 1
        if not pred(item):
            return CheckResult(suite, name, n, False, count, counterexample=show(item))
    return CheckResult(suite, name, n, True, count)


def _pairs(suite: str, objects: list, n: int, seed: int, samples: int):
    if n <= PAIRWISE_LIMIT[suite]:
        return product(objects, repeat=2), "exhaustive"
    rng = random.Random(seed * 1000003 + n)
    return ((rng.choice(objects), rng.choice(objects)) for _ in range(samples)), f"sampled seed={seed}"


def suite_counts(n: int, **_) -> list[CheckResult]:
    out = []
    c123 = count_avoiding(n, "123")
    out.append(CheckResult("counts", "S_n(123)=catalan", n, c123 == catalan(n), 1, f"count={c123}"))
    ndyck = sum(1 for _ in gen_dyck(n))
    out.append(CheckResult("counts", "dyck=catalan", n, ndyck == catalan(n), 1, f"count={ndyck}"))
    fast = count_avoiding(n, "1234")
    slow = sum(1 for s in gen_permutations(n) if n < 4 or not contains_pattern(s, (1, 2, 3, 4)))
    out.append(CheckResult("counts", "S_n(1234) lis=brute", n, fast == slow, 1, f"lis={fast} brute={slow}"))
    return out


def suite_involutions(n: int, **_) -> list[CheckResult]:
    paths = list(gen_dyck(n))
    return [
        _run("involutions", "L∘L=id", n, paths, lambda p: kreweras(kreweras(p)) == p),
        _run("involutions", "L'∘L'=id", n, paths, lambda p: lprime(lprime(p)) == p),
        _run("involutions", "L code=geometric", n, paths, lambda p: kreweras(p) == kreweras_geometric(p)),
        _run("involutions", "L' code=geometric", n, paths, lambda p: lprime(p) == lprime_geometric(p)),
        _run(
            "involutions",
            "L' keeps components",
            n,
            paths,
            lambda p: len(irreducible_components(lprime(p))) == len(irreducible_components(p)),
        ),
    ]


def suite_codes(n: int, **_) -> list[CheckResult]:
    paths = list(gen_dyck(n))
    return [
        _run("codes", "from_code∘to_code=id", n, paths, lambda p: from_code(to_code(p)) == p),
        _run("codes", "reverse∘reverse=id", n, paths, lambda p: reverse(reverse(p)) == p),
    ]


def suite_bijection(n: int, **_) -> list[CheckResult]:
    av123 = list(gen_avoiding(n, "123"))
    av1234 = list(gen_avoiding(n, "1234"))
    lam = {bij.lambda_map(s) for s in av123}
    mu = {bij.mu_map(s) for s in av123}
    target = catalan(n)
    return [
        CheckResult("bijection", "λ on S_n(123) bijective", n, len(lam) == len(av123) == target, len(av123)),
        CheckResult("bijection", "μ on S_n(123) bijective", n, len(mu) == len(av123) == target, len(av123)),
        _run("bijection", "λ inverse round trip", n, av123, lambda s: bij.lambda_inv_123(bij.lambda_map(s)) == s),
        _run("bijection", "μ inverse round trip", n, av123, lambda s: bij.mu_inv_123(bij.mu_map(s)) == s),
        _run("bijection", "nu_inv∘nu=id", n, av1234, lambda a: bij.nu_inv(bij.nu(a)) == a),
        _run(
            "bijection",
            "componentwise=global merge",
            n,
            av1234,
            lambda a: bij.nu_inv(bij.nu(a)) == bij.nu_inv(bij.nu(a), componentwise=False),
        ),
        CheckResult("bijection", "ν injective on S_n(1234)", n, len({bij.nu(a) for a in av1234}) == len(av1234), len(av1234)),
    ]


def suite_mu_lprime(n: int, **_) -> list[CheckResult]:
    return [
        _run("mu-lprime", "μ=L'∘λ on S_n(123)", n, gen_avoiding(n, "123"), lambda s: bij.mu_map(s) == lprime(bij.lambda_map(s)))
    ]


def suite_image(n: int, seed: int = 0, samples: int = DEFAULT_SAMPLES, **_) -> list[CheckResult]:
    image = {bij.nu(a) for a in gen_avoiding(n, "1234")}
    paths = list(gen_dyck(n))
    pairs, mode = _pairs("image", paths, n, seed, samples)
    checked = admissible = 0
    for p, q in pairs:
        checked += 1
        adm = bij.is_admissible(p, q)
        admissible += adm
        if adm != (bij.PathPair(p, q) in image):
            return [CheckResult("image", "image=admissible", n, False, checked, mode, f"({p}, {q})")]
    forward = all(bij.is_admissible(pair) for pair in image)
    ok = forward and (mode != "exhaustive" or admissible == len(image))
    detail = f"{mode} image={len(image)} admissible={admissible}"
    return [CheckResult("image", "image=admissible", n, ok, checked, detail, extra={"image": len(image)})]


def suite_symmetry(n: int, **_) -> list[CheckResult]:
    perms = list(gen_permutations(n))
    avoiders = [s for s in perms if avoids_1234(s)]

    def rc_fixed(s):
        first, second = bij.nu(s)
        return reverse_complement(s) != s or first == second

    def rc_fixed_iff(s):
        first, second = bij.nu(s)
        return (reverse_complement(s) == s) == (first == second)

    def involution(s):
        first, second = bij.nu(s)
        return inverse(s) != s or (bij.is_symmetric(first) and bij.is_symmetric(second))

    def involution_iff(s):
        first, second = bij.nu(s)
        return (inverse(s) == s) == (bij.is_symmetric(first) and bij.is_symmetric(second))

    # the converses need injectivity of nu, so they only hold on S_n(1234)
    return [
        _run("symmetry", "rc swaps pair", n, perms, bij.nu_rc_holds),
        _run("symmetry", "inverse reverses paths", n, perms, bij.nu_inverse_op_holds),
        _run("symmetry", "rc-invariant => L=R", n, perms, rc_fixed),
        _run("symmetry", "involution => symmetric", n, perms, involution),
        _run("symmetry", "rc-invariant <=> L=R on S_n(1234)", n, avoiders, rc_fixed_iff),
        _run("symmetry", "involution <=> symmetric on S_n(1234)", n, avoiders, involution_iff),
    ]


def suite_blocks(n: int, **_) -> list[CheckResult]:
    perms = list(gen_permutations(n))

    def lam(s):
        comps = right_connected_components(s)
        return bij.lambda_map(s) == concat(*(bij.lambda_map(c) for c in comps))

    def mu(s):
        # mu reads right to left, so the blocks come out in reverse order
        comps = right_connected_components(s)
        return bij.mu_map(s) == concat(*(bij.mu_map(c) for c in reversed(comps)))

    return [
        _run("blocks", "λ multiplicative", n, perms, lam),
        _run("blocks", "μ multiplicative (blocks reversed)", n, perms, mu),
    ]


def _profile_shape(path):
    return [c.semilength for c in irreducible_components(path)]


def suite_profile_order(n: int, seed: int = 0, samples: int = DEFAULT_SAMPLES, **_) -> list[CheckResult]:
    perms = list(gen_permutations(n))
    lam = {s: bij.lambda_map(s) for s in perms}
    mu = {s: bij.mu_map(s) for s in perms}
    results = []
    for name, intrinsic, paths in (("λ", leq_lambda, lam), ("μ", leq_mu, mu)):
        pairs, mode = _pairs("profile-order", perms, n, seed, samples)
        checked = 0
        bad = None
        for s, t in pairs:
            checked += 1
            p, q = paths[s], paths[t]
            by_path = leq(p, q)
            by_profile = intrinsic(s, t)
            # path order implies the intrinsic criterion; the converse needs
            # matching component sizes
            if by_path and not by_profile:
                bad = (s, t)
                break
            if _profile_shape(p) == _profile_shape(q) and by_path != by_profile:
                bad = (s, t)
                break
        results.append(
            CheckResult("profile-order", f"≤_{name} intrinsic vs path", n, bad is None, checked, mode, bad and f"({bad[0]}; {bad[1]})")
        )
    return results


def suite_poset_oracle(n: int, seed: int = 0, samples: int = DEFAULT_SAMPLES, **_) -> list[CheckResult]:
    paths = list(gen_dyck(n))
    pairs, mode = _pairs("poset-oracle", paths, n, seed, samples)
    res = _run("poset-oracle", "leq=BFS closure", n, pairs, lambda pq: leq(*pq) == leq_oracle(*pq), lambda pq: f"({pq[0]}, {pq[1]})")
    res.detail = mode
    return [res]


def suite_poset(n: int, **_) -> list[CheckResult]:
    paths = list(gen_dyck(n))
    up = {p: {q for q in paths if leq(p, q)} for p in paths}
    antisym = all(not (q in up[p] and p in up[q]) or p == q for p in paths for q in up[p])
    trans = all(up[q] <= up[p] for p in paths for q in up[p])
    refl = all(p in up[p] for p in paths)
    return [CheckResult("poset", "partial order", n, refl and antisym and trans, len(paths) ** 2)]


def suite_classes(n: int, **_) -> list[CheckResult]:
    perms = list(gen_permutations(n))
    classes: dict = {}
    for s in perms:
        classes.setdefault((ltr_minima(s), rtl_maxima(s)), []).append(s)
    one_each = all(sum(avoids_1234(s) for s in members) == 1 for members in classes.values())
    return [
        CheckResult("classes", "one 1234-avoider per class", n, one_each and len(classes) == count_avoiding(n), len(classes)),
        _run(
            "classes",
            "canonical representative",
            n,
            perms,
            lambda s: equivalent(s, canonical_representative(s))
            and avoids_1234(canonical_representative(s))
            and canonical_representative(canonical_representative(s)) == canonical_representative(s),
        ),
        _run(
            "classes",
            "avoids 123 iff minima∪maxima=[n]",
            n,
            perms,
            lambda s: avoids_123(s) == (set(ltr_minima(s).values) | set(rtl_maxima(s).values) == set(range(1, n + 1))),
        ),
    ]


SUITES: dict[str, Callable[..., list[CheckResult]]] = {
    "counts": suite_counts,
    "codes": suite_codes,
    "involutions": suite_involutions,
    "bijection": suite_bijection,
    "mu-lprime": suite_mu_lprime,
    "image": suite_image,
    "symmetry": suite_symmetry,
    "blocks": suite_blocks,
    "profile-order": suite_profile_order,
    "poset": suite_poset,
    "poset-oracle": suite_poset_oracle,
    "classes": suite_classes,
}


def _task(args) -> list[CheckResult]:
    name, n, seed, samples = args
    return SUITES[name](n, seed=seed, samples=samples)


def verify(
    n_max: int,
    suite: str = "all",
    jobs: int | None = None,
    seed: int = 0,
    samples: int = DEFAULT_SAMPLES,
    cap: int | None = None,
) -> list[CheckResult]:
    if n_max < 1:
        raise ValueError("n must be at least 1")
    _check(n_max, cap)
    names = list(SUITES) if suite == "all" else [suite]
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(['all', *SUITES])}")
    tasks = [(name, n, seed, samples) for name in names for n in range(1, n_max + 1)]
    jobs = jobs or os.cpu_count() or 1
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_task, tasks))
    else:
        chunks = [_task(t) for t in tasks]
    return [r for chunk in chunks for r in chunk]


def as_dicts(results: list[CheckResult]) -> list[dict]:
    return [asdict(r) for r in results]
