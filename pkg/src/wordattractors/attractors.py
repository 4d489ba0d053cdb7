"""String attractor verification, minimal unique substrings, and the
exhaustive search for the smallest attractor size.

A position set ``gamma`` is an attractor of ``T`` when every non-empty
substring of ``T`` has an occurrence ``T[i..j]`` with ``i <= g <= j`` for
some ``g`` in ``gamma``.  Two verifiers are provided: a direct enumeration
(:func:`is_attractor_naive`) used as the oracle, and a suffix-automaton
based one (:func:`is_attractor`) that runs in linear time per set.
"""
from __future__ import annotations

import itertools
import json
import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .automaton import SuffixAutomaton
from .errors import BudgetExceededError
from .words import Word

DEFAULT_BUDGET = 10**7
BATCH_SIZE = 4096

PositionSet = tuple[int, ...]


class Interval(NamedTuple):
    lo: int
    hi: int

    def __contains__(self, p) -> bool:
        return self.lo <= p <= self.hi

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def positions(self) -> range:
        return range(self.lo, self.hi + 1)


def position_set(positions: Iterable[int]) -> PositionSet:
    """Canonical form of a position set: sorted, duplicates dropped."""
    return tuple(sorted({int(p) for p in positions}))


def _as_word(T) -> Word:
    return T if isinstance(T, Word) else Word(T)


def _check_gamma(n: int, gamma: Iterable[int]) -> PositionSet:
    if n < 1:
        raise ValueError("attractors are defined for non-empty words")
    gamma = position_set(gamma)
    if gamma and not (1 <= gamma[0] and gamma[-1] <= n):
        raise ValueError(f"positions {gamma} outside 1..{n}")
    return gamma


@dataclass(frozen=True)
class VerifyOutcome:
    is_attractor: bool
    witness: Interval | None = None

    def __bool__(self) -> bool:
        return self.is_attractor

    def to_dict(self) -> dict:
        return {"attractor": self.is_attractor, "witness": None if self.witness is None else list(self.witness)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> VerifyOutcome:
        w = data["witness"]
        return cls(bool(data["attractor"]), None if w is None else Interval(*w))


@dataclass(frozen=True)
class MusReport:
    intervals: tuple[Interval, ...]
    substrings: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.intervals)

    def to_dict(self) -> dict:
        return {
            "mus": [{"span": list(iv), "substring": s} for iv, s in zip(self.intervals, self.substrings)]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> MusReport:
        entries = data["mus"]
        return cls(
            tuple(Interval(*e["span"]) for e in entries),
            tuple(e["substring"] for e in entries),
        )


def crosses(lo: int, hi: int, gamma: Iterable[int]) -> bool:
    return any(lo <= g <= hi for g in gamma)


def is_attractor_naive(T, gamma: Iterable[int]) -> VerifyOutcome:
    """Check every distinct substring against every one of its occurrences.

    Cubic time; meant as the reference the fast verifier is tested against.
    The witness is the leftmost occurrence of the shortest uncovered
    substring, ties broken by that leftmost occurrence.
    """
    T = _as_word(T)
    text = T.text
    n = len(text)
    gamma = _check_gamma(n, gamma)
    for ell in range(1, n + 1):
        occurrences: dict[str, list[int]] = {}
        for i in range(n - ell + 1):
            occurrences.setdefault(text[i : i + ell], []).append(i + 1)
        # dicts keep insertion order, i.e. by first occurrence
        for starts in occurrences.values():
            if not any(crosses(i, i + ell - 1, gamma) for i in starts):
                return VerifyOutcome(False, Interval(starts[0], starts[0] + ell - 1))
    return VerifyOutcome(True)


class AttractorVerifier:
    """Fast attractor checks against one fixed word.

    For a state ``v`` of the suffix automaton, a substring of length ``l``
    ending at ``e`` crosses some position of gamma iff the distance from
    ``e`` back to the nearest position ``g <= e`` is below ``l``.  All
    substrings of ``v`` are covered iff the smallest such distance over
    ``endpos(v)`` is at most ``length[link[v]]``, the shortest member's
    length minus one.  The minimum is pushed up the suffix-link tree.
    """

    def __init__(self, T):
        self.word = _as_word(T)
        if len(self.word) == 0:
            raise ValueError("attractors are defined for non-empty words")
        self.sam = SuffixAutomaton(self.word.text)
        self._arrays = None

    def __len__(self) -> int:
        return len(self.word)

    def check(self, gamma: Iterable[int]) -> VerifyOutcome:
        n = len(self.word)
        gamma = _check_gamma(n, gamma)
        sam = self.sam
        length, link, firstpos = sam.length, sam.link, sam.firstpos

        mind = [n + 1] * len(length)
        marks = set(gamma)
        last = None
        for e, state in enumerate(sam.prefix_state, 1):
            if e in marks:
                last = e
            if last is not None:
                mind[state] = e - last

        best = None
        for v in sam.order:
            parent = link[v]
            shortest = length[parent] + 1
            if mind[v] >= shortest:
                start = firstpos[v] - shortest + 1
                if best is None or (shortest, start) < best:
                    best = (shortest, start)
            if mind[v] < mind[parent]:
                mind[parent] = mind[v]
        if best is None:
            return VerifyOutcome(True)
        ell, start = best
        return VerifyOutcome(False, Interval(start, start + ell - 1))

    def check_many(self, gammas: Sequence[Sequence[int]]) -> np.ndarray:
        """Vectorized flag-only check of many position sets at once."""
        n = len(self.word)
        batch = len(gammas)
        if batch == 0:
            return np.zeros(0, dtype=bool)
        rows, cols = [], []
        for c, gamma in enumerate(gammas):
            gamma = _check_gamma(n, gamma)
            rows.extend(gamma)
            cols.extend([c] * len(gamma))
        # nearest[e-1, c] = largest g <= e in column c's set, 0 if none
        nearest = np.zeros((n, batch), dtype=np.int64)
        if rows:
            r = np.asarray(rows, dtype=np.int64)
            nearest[r - 1, np.asarray(cols, dtype=np.int64)] = r
        np.maximum.accumulate(nearest, axis=0, out=nearest)
        ends = np.arange(1, n + 1, dtype=np.int64)[:, None]
        dist = np.where(nearest > 0, ends - nearest, n + 1)

        if self._arrays is None:
            sam = self.sam
            self._arrays = (
                np.asarray(sam.prefix_state, dtype=np.int64),
                np.asarray([sam.length[p] if p >= 0 else 0 for p in sam.link], dtype=np.int64),
            )
        prefix, shortest_minus_one = self._arrays
        mind = np.full((len(self.sam), batch), n + 1, dtype=np.int64)
        mind[prefix] = dist
        link = self.sam.link
        for v in self.sam.order:
            p = link[v]
            np.minimum(mind[p], mind[v], out=mind[p])
        ok = mind[1:] <= shortest_minus_one[1:, None]
        return ok.all(axis=0)


def is_attractor(T, gamma: Iterable[int]) -> VerifyOutcome:
    """Suffix-automaton verifier; agrees with :func:`is_attractor_naive`."""
    return AttractorVerifier(T).check(gamma)


def minimal_unique_substrings(T) -> MusReport:
    """All minimal unique substrings of ``T``, sorted by start.

    A single symbol that occurs once counts as a MUS; the empty string is
    treated as occurring at every boundary.
    """
    T = _as_word(T)
    if len(T) == 0:
        raise ValueError("MUS are defined for non-empty words")
    sam = SuffixAutomaton(T.text)
    count = sam.occurrence_counts()
    length, link = sam.length, sam.link

    # top[v]: the shortest-string state among unique ancestors of v (inclusive)
    top = [-1] * len(length)
    for v in reversed(sam.order):
        if count[v] == 1:
            p = link[v]
            top[v] = top[p] if p > 0 and count[p] == 1 else v

    # shortest[e]: length of the shortest unique substring ending at e
    shortest = [0] * (len(T) + 1)
    for e, state in enumerate(sam.prefix_state, 1):
        if count[state] == 1:
            shortest[e] = length[link[top[state]]] + 1

    intervals = []
    for e in range(1, len(T) + 1):
        m = shortest[e]
        if m == 0:
            continue
        # T[e-m+1..e-1] must repeat: no unique substring that short ends at e-1
        if e == 1 or shortest[e - 1] == 0 or shortest[e - 1] >= m:
            intervals.append(Interval(e - m + 1, e))
    intervals.sort()
    return MusReport(tuple(intervals), tuple(T.text[lo - 1 : hi] for lo, hi in intervals))


def hits_all(gamma: Iterable[int], intervals: Iterable[Interval]) -> bool:
    gamma = tuple(gamma)
    return all(crosses(lo, hi, gamma) for lo, hi in intervals)


def colex_combinations(n: int, k: int) -> Iterator[PositionSet]:
    """k-subsets of 1..n in colexicographic order of their sorted tuples."""
    if k == 0:
        yield ()
        return
    for last in range(k, n + 1):
        for head in colex_combinations(last - 1, k - 1):
            yield head + (last,)


def hitting_candidates(n: int, k: int, intervals: Sequence[Interval]) -> list[PositionSet]:
    """Every k-subset of 1..n meeting each interval, sorted lexicographically.

    Built as the product of one position per interval, completed with
    arbitrary extra positions up to size k.  Falls back to filtering all
    k-subsets when the product would be larger than that.
    """
    if not intervals:
        return list(itertools.combinations(range(1, n + 1), k))
    product_size = math.prod(len(iv) for iv in intervals)
    if product_size > math.comb(n, k):
        return [c for c in itertools.combinations(range(1, n + 1), k) if hits_all(c, intervals)]
    found: set[PositionSet] = set()
    everything = range(1, n + 1)
    for choice in itertools.product(*(iv.positions() for iv in intervals)):
        base = set(choice)
        if len(base) > k:
            continue
        rest = [p for p in everything if p not in base]
        for extra in itertools.combinations(rest, k - len(base)):
            found.add(tuple(sorted(base.union(extra))))
    return sorted(found)


def check_budget(n: int, k: int, budget: int) -> None:
    size = math.comb(n, k)
    if size > budget:
        raise BudgetExceededError(f"C({n}, {k}) = {size} candidate subsets exceeds the budget of {budget}")


def _batched(it: Iterable, size: int) -> Iterator[list]:
    it = iter(it)
    while chunk := list(itertools.islice(it, size)):
        yield chunk


def smallest_attractor_size(
    T, k_max: int | None = None, prune: bool = False, budget: int = DEFAULT_BUDGET
) -> int | None:
    """Smallest k <= k_max admitting a k-position attractor, else None.

    Exhaustive: candidates of each size are tried in colex order.  With
    ``prune`` only sets meeting every MUS interval are verified.
    """
    verifier = T if isinstance(T, AttractorVerifier) else AttractorVerifier(T)
    n = len(verifier)
    k_max = n if k_max is None else min(k_max, n)
    intervals = minimal_unique_substrings(verifier.word).intervals if prune else ()
    for k in range(1, k_max + 1):
        check_budget(n, k, budget)
        if prune:
            candidates: Iterable[PositionSet] = sorted(hitting_candidates(n, k, intervals), key=lambda c: c[::-1])
        else:
            candidates = colex_combinations(n, k)
        for chunk in _batched(candidates, BATCH_SIZE):
            if verifier.check_many(chunk).any():
                return k
    return None
