"""Smallest attractors of period-doubling words D_n."""
from __future__ import annotations

from dataclasses import dataclass

from .attractors import PositionSet, is_attractor, position_set
from .enumeration import AttractorFamily, enumerate_smallest_attractors
from .words import pd_word


@dataclass(frozen=True)
class PdAttractorTriple:
    n: int
    p: int
    q: int
    r: int

    @classmethod
    def of(cls, n: int) -> PdAttractorTriple:
        if n < 3:
            raise ValueError(f"the triple is defined for n >= 3, got {n}")
        return cls(n, 3 * 2 ** (n - 3), 2 ** (n - 1), 3 * 2 ** (n - 2))


def pd_attractors_closed_form(n: int) -> AttractorFamily:
    """Att(D_n): {{2,3},{2,4}} for n = 2, else {{p, r}, {q, r}}."""
    if n < 2:
        raise ValueError(f"the closed form holds for n >= 2, got {n}; enumerate instead")
    if n == 2:
        return AttractorFamily(2, ((2, 3), (2, 4)))
    t = PdAttractorTriple.of(n)
    return AttractorFamily(2, ((t.p, t.r), (t.q, t.r)))


def pd_smallest_attractors(n: int, prune: bool = True) -> tuple[AttractorFamily, str]:
    if n >= 2:
        return pd_attractors_closed_form(n), "closed-form"
    return enumerate_smallest_attractors(pd_word(n), prune=prune), "enumeration"


def pd_projection_check(n: int, pair) -> bool:
    """For an attractor {p, q} of D_n with D_n[p] = a and D_n[q] = b, test
    that both positions are even and {p/2, q/2} is in Att(D_{n-1})."""
    if n < 4:
        raise ValueError(f"the projection property is stated for n >= 4, got {n}")
    pair: PositionSet = position_set(pair)
    if len(pair) != 2:
        raise ValueError(f"expected two distinct positions, got {pair}")
    word = pd_word(n)
    if not (1 <= pair[0] and pair[1] <= len(word)):
        raise ValueError(f"positions {pair} outside 1..{len(word)}")
    if {word.at(pair[0]), word.at(pair[1])} != {"a", "b"}:
        raise ValueError(f"{pair} does not pair an a with a b in D_{n}")
    if not is_attractor(word, pair):
        raise ValueError(f"{pair} is not an attractor of D_{n}")
    if any(p % 2 for p in pair):
        return False
    family, _ = pd_smallest_attractors(n - 1)
    return (pair[0] // 2, pair[1] // 2) in family
