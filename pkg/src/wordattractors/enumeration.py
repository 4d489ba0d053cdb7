"""Exhaustive enumeration of smallest string attractors."""
from __future__ import annotations

import itertools
import json
from collections.abc import Iterable
from dataclasses import dataclass

from .attractors import (
    BATCH_SIZE,
    DEFAULT_BUDGET,
    AttractorVerifier,
    PositionSet,
    check_budget,
    hitting_candidates,
    minimal_unique_substrings,
    position_set,
    smallest_attractor_size,
)


@dataclass(frozen=True)
class AttractorFamily:
    """Position sets of a common size ``k``, sorted lexicographically."""

    k: int
    sets: tuple[PositionSet, ...]

    @classmethod
    def of(cls, k: int, sets: Iterable[Iterable[int]]) -> AttractorFamily:
        canon = sorted({position_set(s) for s in sets})
        for s in canon:
            if len(s) != k:
                raise ValueError(f"{s} does not have {k} positions")
        return cls(k, tuple(canon))

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, item) -> bool:
        return position_set(item) in set(self.sets)

    def positions(self) -> set[int]:
        return {p for s in self.sets for p in s}

    def to_dict(self) -> dict:
        return {"k": self.k, "attractors": [list(s) for s in self.sets]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def to_text(self) -> str:
        return "".join(",".join(map(str, s)) + "\n" for s in self.sets)

    @classmethod
    def from_dict(cls, data: dict) -> AttractorFamily:
        return cls.of(int(data["k"]), data["attractors"])

    @classmethod
    def from_json(cls, text: str) -> AttractorFamily:
        return cls.from_dict(json.loads(text))


def _enumerate(verifier: AttractorVerifier, k: int, prune: bool, budget: int) -> list[PositionSet]:
    n = len(verifier)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k > n:
        return []
    check_budget(n, k, budget)
    if prune:
        candidates = hitting_candidates(n, k, minimal_unique_substrings(verifier.word).intervals)
    else:
        candidates = itertools.combinations(range(1, n + 1), k)
    found: list[PositionSet] = []
    it = iter(candidates)
    while chunk := list(itertools.islice(it, BATCH_SIZE)):
        ok = verifier.check_many(chunk)
        found.extend(c for c, good in zip(chunk, ok) if good)
    found.sort()
    return found


def enumerate_attractors_of_size(T, k: int, prune: bool = False, budget: int = DEFAULT_BUDGET) -> list[PositionSet]:
    """All k-position attractors of ``T`` (not necessarily smallest)."""
    return _enumerate(AttractorVerifier(T), k, prune, budget)


def enumerate_smallest_attractors(T, prune: bool = False, budget: int = DEFAULT_BUDGET) -> AttractorFamily:
    verifier = AttractorVerifier(T)
    k = smallest_attractor_size(verifier, prune=prune, budget=budget)
    # the full position set is always an attractor, so k is found unless the budget trips
    assert k is not None
    return AttractorFamily(k, tuple(_enumerate(verifier, k, prune, budget)))
