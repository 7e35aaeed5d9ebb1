from itertools import permutations

import pytest
from hypothesis import given

from conftest import P, perms
from dyckpairs.corpus import gen_permutations
from dyckpairs.permutation import (
    InvalidPermutation,
    Permutation,
    avoids_123,
    avoids_1234,
    canonical_representative,
    contains_pattern,
    equivalent,
    inverse,
    is_right_connected,
    leq_lambda,
    leq_mu,
    lis_length,
    ltr_minima,
    reverse_complement,
    right_connected_components,
    rtl_maxima,
)


def brute_ltr_minima(values):
    return [(x, i + 1) for i, x in enumerate(values) if all(x < y for y in values[:i])]


def brute_rtl_maxima(values):
    return [(x, i + 1) for i, x in enumerate(values) if all(x > y for y in values[i + 1 :])]


class TestParsing:
    def test_round_trip(self):
        assert str(P("5 3 4 8 2 1 6 7")) == "5 3 4 8 2 1 6 7"

    @pytest.mark.parametrize("bad", ["1 1", "1 3", "0 1", "2", "a b"])
    def test_rejects(self, bad):
        with pytest.raises(InvalidPermutation):
            P(bad)

    def test_empty(self):
        assert len(P("")) == 0

    def test_call_is_one_indexed(self):
        s = P("3 1 2")
        assert (s(1), s(2), s(3)) == (3, 1, 2)
        with pytest.raises(IndexError):
            s(0)


class TestProfiles:
    def test_worked_example(self):
        s = P("5 3 4 8 2 1 6 7")
        assert ltr_minima(s) == ((5, 3, 2, 1), (1, 2, 5, 6))
        assert rtl_maxima(s) == ((7, 8), (8, 4))

    def test_identity(self):
        assert ltr_minima(P("1 2 3")) == ((1,), (1,))
        assert rtl_maxima(P("1 2 3")) == ((3,), (3,))

    def test_decreasing(self):
        assert rtl_maxima(P("5 4 3 2 1")) == ((1, 2, 3, 4, 5), (5, 4, 3, 2, 1))

    def test_final_example_profiles(self):
        assert ltr_minima(P("4 9 8 2 7 1 6 5 3")) == ((4, 2, 1), (1, 4, 6))
        assert rtl_maxima(P("7 5 9 4 3 2 8 1 6")) == ((6, 8, 9), (9, 7, 3))

    def test_empty(self):
        assert ltr_minima(P("")) == ((), ())
        assert rtl_maxima(P("")) == ((), ())

    @given(perms())
    def test_match_brute_force(self, s):
        m = ltr_minima(s)
        assert list(zip(*m)) == brute_ltr_minima(s.values)
        M = rtl_maxima(s)
        assert sorted(zip(*M)) == sorted(brute_rtl_maxima(s.values))

    @given(perms(min_n=1))
    def test_profile_invariants(self, s):
        n = len(s)
        m, p = ltr_minima(s)
        assert p[0] == 1 and m[-1] == 1
        assert all(mi <= n + 1 - pi for mi, pi in zip(m, p))
        M, Q = rtl_maxima(s)
        assert Q[0] == n and M[-1] == n

    @given(perms())
    def test_rc_swaps_minima_and_maxima(self, s):
        n = len(s)
        mins = set(zip(*ltr_minima(s)))
        maxs = set(zip(*rtl_maxima(reverse_complement(s))))
        assert {(n + 1 - x, n + 1 - i) for x, i in mins} == maxs


class TestSymmetries:
    def test_reverse_complement_example(self):
        assert reverse_complement(P("2 4 7 3 1 8 9 5 6")) == P("4 5 1 2 9 7 3 6 8")
        assert reverse_complement(P("6 2 3 1 7 5 4")) == P("4 3 1 7 5 6 2")
        assert reverse_complement(P("1")) == P("1")

    def test_inverse_example(self):
        assert inverse(P("6 2 3 1 7 5 4")) == P("4 2 3 7 6 1 5")
        assert inverse(P("1 2 3")) == P("1 2 3")

    @pytest.mark.parametrize("s", list(permutations(range(1, 5))))
    def test_involutions_s4(self, s):
        s = Permutation(s)
        assert inverse(inverse(s)) == s
        assert reverse_complement(reverse_complement(s)) == s


class TestPatterns:
    def test_examples(self):
        assert contains_pattern(P("1 3 2 4"), P("1 2 3"))
        assert not contains_pattern(P("1 3 2 4"), P("1 2 3 4"))
        assert not contains_pattern(P("3 2 1"), P("1 2"))
        assert contains_pattern(P("2 4 1 3"), P("2 1"))

    def test_rejects_empty_or_bad_pattern(self):
        with pytest.raises(InvalidPermutation):
            contains_pattern(P("1 2"), P(""))
        with pytest.raises(InvalidPermutation):
            contains_pattern(P("1 2"), (1, 1))

    def test_fast_paths_on_worked_examples(self):
        assert avoids_1234(P("4 7 9 2 5 1 8 3 6"))
        assert avoids_123(P("8 5 9 7 6 2 4 3 1"))
        assert not avoids_1234(P("1 2 3 4"))

    def test_lis(self):
        assert lis_length([]) == 0
        assert lis_length([3, 1, 2, 5, 4]) == 3

    @pytest.mark.parametrize("n", range(0, 8))
    def test_fast_paths_agree_with_brute_force(self, n):
        for s in gen_permutations(n):
            assert avoids_123(s) == (n < 3 or not contains_pattern(s, P("1 2 3")))
            assert avoids_1234(s) == (n < 4 or not contains_pattern(s, P("1 2 3 4")))

    @pytest.mark.parametrize("n", range(2, 8))
    def test_avoids_123_iff_extremes_cover(self, n):
        full = set(range(1, n + 1))
        for s in gen_permutations(n):
            union = set(ltr_minima(s).values) | set(rtl_maxima(s).values)
            assert avoids_123(s) == (union == full)
            if avoids_123(s) and is_right_connected(s):
                assert not set(ltr_minima(s).values) & set(rtl_maxima(s).values)


class TestComponents:
    def test_worked_split(self):
        # 6 4 5 7 2 1 3 is itself a permutation of 1..7, so there are three blocks
        assert right_connected_components(P("8 6 4 5 7 2 1 3")) == [P("1"), P("3 1 2 4"), P("2 1 3")]

    def test_right_connected(self):
        assert right_connected_components(P("6 1 2 7 5 3 4 8")) == [P("6 1 2 7 5 3 4 8")]
        assert right_connected_components(P("1")) == [P("1")]
        assert right_connected_components(P("")) == []

    def test_decreasing_splits_fully(self):
        assert right_connected_components(P("3 2 1")) == [P("1")] * 3

    @given(perms())
    def test_destandardized_concat_recovers(self, s):
        comps = right_connected_components(s)
        out, remaining = [], len(s)
        for c in comps:
            remaining -= len(c)
            out.extend(x + remaining for x in c.values)
        assert tuple(out) == s.values
        assert all(is_right_connected(c) for c in comps)


def brute_canonical(s):
    # independent oracle: search the whole symmetric group
    hits = [t for t in gen_permutations(len(s)) if avoids_1234(t) and equivalent(s, t)]
    assert len(hits) == 1
    return hits[0]


class TestEquivalence:
    def test_examples(self):
        assert equivalent(P("1 2 3 4"), P("1 3 2 4"))
        assert equivalent(P("6 2 3 1 7 5 4"), P("6 2 3 1 7 5 4"))
        assert not equivalent(P("1 2 3 4"), P("1 4 2 3"))
        assert rtl_maxima(P("1 4 2 3")).values == (3, 4)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            equivalent(P("1 2"), P("1"))

    def test_canonical_examples(self):
        assert canonical_representative(P("1 2 3 4")) == P("1 3 2 4")
        assert canonical_representative(P("5 3 4 8 2 1 6 7")) == P("5 3 6 8 2 1 4 7")
        assert brute_canonical(P("5 3 4 8 2 1 6 7")) == P("5 3 6 8 2 1 4 7")
        alpha = P("4 7 9 2 5 1 8 3 6")
        assert canonical_representative(alpha) == alpha

    @given(perms(max_n=6))
    def test_canonical_matches_brute_force(self, s):
        assert canonical_representative(s) == brute_canonical(s)

    @given(perms())
    def test_canonical_properties(self, s):
        c = canonical_representative(s)
        assert equivalent(s, c) and avoids_1234(c)
        assert canonical_representative(c) == c


class TestIntrinsicOrder:
    def test_worked_examples(self):
        s = P("6 8 7 3 2 5 9 1 4")
        assert ltr_minima(s) == ((6, 3, 2, 1), (1, 4, 5, 8))
        assert set(rtl_maxima(s).values) == {4, 9} and set(rtl_maxima(s).positions) == {9, 7}
        assert leq_lambda(s, P("3 4 9 2 6 8 7 1 5"))
        assert leq_mu(s, P("2 7 1 3 4 6 5 8 9"))

    @given(perms())
    def test_reflexive(self, s):
        assert leq_lambda(s, s) and leq_mu(s, s)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            leq_lambda(P("1 2"), P("1"))
        with pytest.raises(ValueError):
            leq_mu(P("1 2"), P("1"))

    def test_strictness(self):
        # removing the largest minimum (index 1) needs a removed position of index >= 2
        assert leq_lambda(P("2 3 1"), P("1 3 2"))
        assert not leq_lambda(P("1 2 3"), P("2 1 3"))
