"""Exit criteria.  Each test carries an ``acceptance`` marker; the terminal
summary prints one PASS/FAIL line per criterion (see conftest.py).

Run alone with ``pytest tests/test_acceptance.py`` or
``python tests/test_acceptance.py``.
"""
import itertools
import sys
import time

import pytest

from wordattractors.attractors import is_attractor_naive, minimal_unique_substrings, smallest_attractor_size
from wordattractors.enumeration import AttractorFamily, enumerate_attractors_of_size, enumerate_smallest_attractors
from wordattractors.fibonacci import (
    InvalidReason,
    fib_attractor_count,
    fib_attractor_count_closed,
    fib_attractors_closed_form,
    fib_invalid_pair_reason,
    lrl_sets,
    lrl_sets_from_parse,
    mus_ranges,
)
from wordattractors.period_doubling import pd_attractors_closed_form, pd_projection_check
from wordattractors.validation import crosscheck_fib, crosscheck_pd, verifier_fuzz, verifier_sweep
from wordattractors.words import fib_number, fib_word, pd_word, singular_word

from test_enumeration import ATT_F7, ATT_F8

acceptance = pytest.mark.acceptance

FIB_FAMILIES = {n: fib_word(n) for n in range(2, 13)}
PD_FAMILIES = {n: pd_word(n) for n in range(1, 9)}


@acceptance(1, "Att(F_7), Att(F_8) reproduced by closed form and brute force, < 1 s each")
@pytest.mark.parametrize("n, listed", [(7, ATT_F7), (8, ATT_F8)])
def test_criterion_1_explicit_lists(n, listed):
    t0 = time.perf_counter()
    closed = fib_attractors_closed_form(n)
    t_closed = time.perf_counter() - t0
    t0 = time.perf_counter()
    brute = enumerate_smallest_attractors(fib_word(n))
    t_brute = time.perf_counter() - t0
    assert list(closed.sets) == listed
    assert brute.k == 2 and list(brute.sets) == listed
    assert t_closed < 1.0 and t_brute < 1.0


@acceptance(2, "closed form == brute force for Att(F_n), 7 <= n <= 12, < 60 s total")
def test_criterion_2_fib_crosscheck():
    t0 = time.perf_counter()
    report = crosscheck_fib(7, 12, prune=False)
    elapsed = time.perf_counter() - t0
    assert [r.n for r in report.results] == list(range(7, 13))
    assert report.ok, report.to_text()
    assert elapsed < 60.0


@acceptance(3, "|Att(F_n)| = 2^(n-4) + 2^(ceil(n/2)-2) = parity-split formula, 7 <= n <= 20")
def test_criterion_3_counts():
    for n in range(7, 21):
        k = (n + 1) // 2 if n % 2 else n // 2
        split = (2 ** (k - 3) + 1) * 2 ** (k - 2) if n % 2 else (2 ** (k - 2) + 1) * 2 ** (k - 2)
        abstract = 2 ** (n - 4) + 2 ** (-(-n // 2) - 2)
        assert fib_attractor_count(n) == split == abstract == fib_attractor_count_closed(n)
        assert len(fib_attractors_closed_form(n)) == abstract


@acceptance(4, "Att(D_n) closed form == brute force, 2 <= n <= 8, < 120 s")
def test_criterion_4_pd_crosscheck():
    t0 = time.perf_counter()
    report = crosscheck_pd(2, 8, prune=False)
    elapsed = time.perf_counter() - t0
    assert [r.n for r in report.results] == list(range(2, 9))
    assert report.ok, report.to_text()
    assert elapsed < 120.0


@acceptance(5, "gamma(F_n) = 2 for 2 <= n <= 10 by exhaustive search")
@pytest.mark.parametrize("n", range(2, 11))
def test_criterion_5_gamma_two(n):
    w = fib_word(n)
    assert enumerate_attractors_of_size(w, 1) == []
    assert enumerate_attractors_of_size(w, 2) != []
    assert smallest_attractor_size(w) == 2


@acceptance(6, "MUSs of F_n are S_{n-3}, S_{n-2} at lmus_n, rmus_n, 5 <= n <= 15")
@pytest.mark.parametrize("n", range(5, 16))
def test_criterion_6_mus(n):
    report = minimal_unique_substrings(fib_word(n))
    expected = ((fib_number(n - 2), fib_number(n - 1) - 1), (fib_number(n - 1), fib_number(n) - 1))
    assert report.intervals == expected
    assert report.intervals == mus_ranges(n)
    assert report.substrings == (singular_word(n - 3).text, singular_word(n - 2).text)


@acceptance(7, "property suite: verifier agreement, reversal, MUS hitting, L/R/L' recursion, pruning")
def test_criterion_7_exhaustive_agreement():
    report = verifier_sweep(max_len=10, max_gamma=2)
    assert report.ok, report.disagreements[:5]


@acceptance(7, "property suite: verifier agreement, reversal, MUS hitting, L/R/L' recursion, pruning")
def test_criterion_7_random_agreement():
    report = verifier_fuzz(10_000, max_len=16, seed=2024)
    assert report.trials == 10_000
    assert report.ok, report.disagreements[:5]


def _all_families():
    for name, words in (("F", FIB_FAMILIES), ("D", PD_FAMILIES)):
        for n, w in words.items():
            yield f"{name}_{n}", w


@acceptance(7, "property suite: verifier agreement, reversal, MUS hitting, L/R/L' recursion, pruning")
@pytest.mark.parametrize("label, word", list(_all_families()), ids=[lbl for lbl, _ in _all_families()])
def test_criterion_7_family_properties(label, word):
    unpruned = enumerate_smallest_attractors(word)
    pruned = enumerate_smallest_attractors(word, prune=True)
    assert pruned == unpruned

    mirrored = AttractorFamily.of(unpruned.k, [[len(word) - p + 1 for p in s] for s in unpruned])
    assert mirrored == enumerate_smallest_attractors(word.reverse(), prune=True)

    intervals = minimal_unique_substrings(word).intervals
    for s in unpruned:
        assert all(any(lo <= p <= hi for p in s) for lo, hi in intervals)


@acceptance(7, "property suite: verifier agreement, reversal, MUS hitting, L/R/L' recursion, pruning")
@pytest.mark.parametrize("k", range(2, 13))
def test_criterion_7_lrl_recursion(k):
    assert lrl_sets_from_parse(k, k + 2) == lrl_sets(k)
    assert lrl_sets_from_parse(k, k + 3) == lrl_sets(k)


@acceptance(8, "invalidation completeness, 7 <= n <= 10")
@pytest.mark.parametrize("n", range(7, 11))
def test_criterion_8_invalidation(n):
    lmus, rmus = mus_ranges(n)
    family = set(fib_attractors_closed_form(n).sets)
    word = fib_word(n)
    outside = [p for p in itertools.product(lmus.positions(), rmus.positions()) if p not in family]
    assert len(outside) == len(lmus) * len(rmus) - len(family)
    for pair in outside:
        assert fib_invalid_pair_reason(n, pair) is not InvalidReason.NONE, pair
        assert not is_attractor_naive(word, pair).is_attractor, pair


@acceptance(9, "projection property for enumerated attractors of D_n, 4 <= n <= 8")
@pytest.mark.parametrize("n", range(4, 9))
def test_criterion_9_projection(n):
    word = pd_word(n)
    family = enumerate_smallest_attractors(word, prune=True)
    assert family == pd_attractors_closed_form(n)
    checked = 0
    for pair in family:
        if {word.at(pair[0]), word.at(pair[1])} == {"a", "b"}:
            assert pd_projection_check(n, pair)
            checked += 1
    assert checked == len(family)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
