"""Smallest attractors of Fibonacci words via singular-word parse trees.

F_n is derived by the grammar

    F_n -> S_0 S_1 ... S_{n-2} S_{(n-1) mod 2}
    S_i -> S_{i-2} S_{i-3} S_{i-2}   (i >= 2),  S_1 -> b,  S_0 -> a,  S_{-1} -> ''

and every occurrence of a singular word in F_n is the span of a node of
this tree.  Positions crossed by a *center* child (the S_{i-3} of a rule)
can never be attractor positions; the surviving positions inside the
first occurrence of S_k form the sets L_k, R_k and L'_k, from which the
full family of smallest attractors follows for n >= 7.
"""
from __future__ import annotations

import enum
import functools
import json
from collections.abc import Iterator
from dataclasses import dataclass

from .attractors import Interval, PositionSet, position_set
from .enumeration import AttractorFamily, enumerate_smallest_attractors
from .words import default_generator, fib_number, fib_word

ROOT_CHILD, LEFT, CENTER, RIGHT = "root-child", "left", "center", "right"


@dataclass(frozen=True, eq=False)
class ParseNode:
    """A node deriving F_n (``symbol == "F"``) or S_i (``symbol == "S"``).

    ``start``/``length`` locate the derived occurrence in F_n.  The empty
    word S_{-1} has length 0 and its span has ``hi == lo - 1``.
    """

    symbol: str
    order: int
    start: int
    length: int
    role: str | None
    children: tuple[ParseNode, ...] = ()

    @property
    def label(self) -> str:
        return f"{self.symbol}_{self.order}"

    @property
    def span(self) -> Interval:
        return Interval(self.start, self.start + self.length - 1)

    def positions(self) -> range:
        return range(self.start, self.start + self.length)

    def walk(self) -> Iterator[ParseNode]:
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def to_dict(self) -> dict:
        out = {"label": self.label, "span": list(self.span), "role": self.role}
        if self.children:
            out["children"] = [c.to_dict() for c in self.children]
        return out


@dataclass(frozen=True, eq=False)
class ParseTree:
    n: int
    root: ParseNode

    def walk(self) -> Iterator[ParseNode]:
        return self.root.walk()

    def occurrences(self, order: int) -> list[ParseNode]:
        """Nodes labelled S_order, left to right."""
        return sorted((v for v in self.walk() if v.symbol == "S" and v.order == order), key=lambda v: v.start)

    def first_occurrence(self, k: int) -> ParseNode:
        if not 0 <= k <= self.n - 2:
            raise ValueError(f"S_{k} is not a factor of the F_{self.n} derivation")
        return self.root.children[k]

    def to_dict(self) -> dict:
        return {"n": self.n, "tree": self.root.to_dict()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def _singular_node(order: int, start: int, role: str) -> ParseNode:
    if order < 2:
        return ParseNode("S", order, start, 0 if order < 0 else 1, role)
    side = fib_number(order - 2)
    mid = fib_number(order - 3) if order >= 3 else 0
    children = (
        _singular_node(order - 2, start, LEFT),
        _singular_node(order - 3, start + side, CENTER),
        _singular_node(order - 2, start + side + mid, RIGHT),
    )
    return ParseNode("S", order, start, 2 * side + mid, role, children)


@functools.lru_cache(maxsize=16)
def singular_parse_tree(n: int) -> ParseTree:
    """Parse tree of F_n under the singular-word grammar, spans left to right."""
    if n < 1:
        raise ValueError(f"the singular-word derivation needs n >= 1, got {n}")
    fact = default_generator.fib_singular_factorization(n)
    children = tuple(_singular_node(k, lo, ROOT_CHILD) for k, (lo, _) in zip(fact.factors, fact.spans))
    return ParseTree(n, ParseNode("F", n, 1, fib_number(n), None, children))


def _center_positions(node: ParseNode) -> set[int]:
    marked: set[int] = set()
    stack = [node]
    while stack:
        v = stack.pop()
        if v.role == CENTER:
            # descendants of a center child lie inside its span
            marked.update(v.positions())
        else:
            stack.extend(v.children)
    return marked


def center_child_positions(n: int) -> PositionSet:
    """Positions of F_n crossed by a center child anywhere in the parse tree."""
    if n < 5:
        raise ValueError(f"center-child positions are defined here for n >= 5, got {n}")
    return position_set(_center_positions(singular_parse_tree(n).root))


def mus_ranges(n: int) -> tuple[Interval, Interval]:
    """(lmus_n, rmus_n): the spans of the two MUS S_{n-3} and S_{n-2} of F_n."""
    if n < 5:
        raise ValueError(f"F_n has exactly two MUS only for n >= 5, got {n}")
    return (
        Interval(fib_number(n - 2), fib_number(n - 1) - 1),
        Interval(fib_number(n - 1), fib_number(n) - 1),
    )


@dataclass(frozen=True)
class LRLSets:
    k: int
    L: PositionSet
    R: PositionSet
    Lp: PositionSet

    def to_dict(self) -> dict:
        return {"k": self.k, "L": list(self.L), "R": list(self.R), "Lp": list(self.Lp)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> LRLSets:
        return cls(int(data["k"]), position_set(data["L"]), position_set(data["R"]), position_set(data["Lp"]))


def _shift(positions, by: int) -> PositionSet:
    return position_set(p + by for p in positions)


@functools.lru_cache(maxsize=None)
def lrl_sets(k: int) -> LRLSets:
    """L_k, R_k and L'_k by their recurrences.

    L_k = (L_{k-2} | R_{k-2}) + f_k,  R_k = L_k + f_{k-1},  L'_k = L'_{k-2} + f_k.
    """
    if k < 2:
        raise ValueError(f"L/R/L' sets are defined for k >= 2, got {k}")
    if k == 2:
        return LRLSets(2, (3,), (4,), (3, 4))
    if k == 3:
        return LRLSets(3, (5,), (7,), (5,))
    prev = lrl_sets(k - 2)
    L = _shift(prev.L + prev.R, fib_number(k))
    return LRLSets(k, L, _shift(L, fib_number(k - 1)), _shift(prev.Lp, fib_number(k)))


def lrl_sets_from_parse(k: int, n: int) -> LRLSets:
    """L_k, R_k, L'_k read directly off the parse tree of F_n.

    L_k (R_k) are the positions in the left (right) child of the first
    occurrence of S_k not crossed by a center child; L'_k is the span of
    S_{2 - (k mod 2)} on the leftmost path below that occurrence.
    """
    if not 2 <= k <= n - 2:
        raise ValueError(f"need 2 <= k <= n - 2, got k={k}, n={n}")
    u = singular_parse_tree(n).first_occurrence(k)
    left, _, right = u.children
    centers = _center_positions(u)
    node = u
    target = 2 - k % 2
    while node.order != target:
        node = node.children[0]
    return LRLSets(
        k,
        position_set(p for p in left.positions() if p not in centers),
        position_set(p for p in right.positions() if p not in centers),
        position_set(node.positions()),
    )


class InvalidReason(str, enum.Enum):
    OUTSIDE_MUS = "outside-mus"
    CENTER_CROSSED = "center-crossed"
    SECOND_HALF_RULE = "second-half-rule"
    NONE = "none"


def fib_invalid_pair_reason(n: int, pair) -> InvalidReason:
    """First structural reason why ``pair`` cannot be a smallest attractor of F_n.

    Checked in order: not one position in each MUS range; a position
    crossed by a center child; the left position is not one of the first
    two of lmus_n while the right one falls in the right child of the first
    S_{n-2}.  Returns ``InvalidReason.NONE`` when no rule applies.
    """
    if n < 7:
        raise ValueError(f"the invalidation rules are stated for n >= 7, got {n}")
    pair = position_set(pair)
    if len(pair) != 2:
        raise ValueError(f"expected two distinct positions, got {pair}")
    u, v = pair
    lmus, rmus = mus_ranges(n)
    if u not in lmus or v not in rmus:
        return InvalidReason.OUTSIDE_MUS
    centers = set(center_child_positions(n))
    if u in centers or v in centers:
        return InvalidReason.CENTER_CROSSED
    right_child = singular_parse_tree(n).first_occurrence(n - 2).children[2]
    if u not in (lmus.lo, lmus.lo + 1) and v in right_child.span:
        return InvalidReason.SECOND_HALF_RULE
    return InvalidReason.NONE


def pair_product(xs, ys) -> set[PositionSet]:
    """Unordered pairs {x, y} over X x Y."""
    out = set()
    for x in xs:
        for y in ys:
            if x == y:
                raise ValueError(f"degenerate pair at position {x}")
            out.add(position_set((x, y)))
    return out


def fib_attractors_closed_form(n: int) -> AttractorFamily:
    """((L_{n-3} | R_{n-3}) x L_{n-2})  |  (L'_{n-3} x R_{n-2}),  n >= 7."""
    if n < 7:
        raise ValueError(f"the closed form holds for n >= 7, got {n}; enumerate instead")
    a, b = lrl_sets(n - 3), lrl_sets(n - 2)
    pairs = pair_product(a.L + a.R, b.L) | pair_product(a.Lp, b.R)
    return AttractorFamily(2, tuple(sorted(pairs)))


def fib_attractor_count(n: int) -> int:
    """|Att(F_n)| for n >= 7, split by the parity of n."""
    if n < 7:
        raise ValueError(f"the count formula holds for n >= 7, got {n}")
    if n % 2:
        k = (n + 1) // 2
        return (2 ** (k - 3) + 1) * 2 ** (k - 2)
    k = n // 2
    return (2 ** (k - 2) + 1) * 2 ** (k - 2)


def fib_attractor_count_closed(n: int) -> int:
    """2^(n-4) + 2^(ceil(n/2) - 2)."""
    if n < 7:
        raise ValueError(f"the count formula holds for n >= 7, got {n}")
    return 2 ** (n - 4) + 2 ** ((n + 1) // 2 - 2)


def mantaci_gamma1(n: int) -> PositionSet:
    """The explicit attractor {f_{n-1} - 1, f_{n-1}} of F_n."""
    if n < 3:
        raise ValueError(f"defined for n >= 3, got {n}")
    f = fib_number(n - 1)
    return (f - 1, f)


def fib_smallest_attractors(n: int, prune: bool = True) -> tuple[AttractorFamily, str]:
    """Att(F_n) together with the method used: closed form for n >= 7,
    exhaustive enumeration below that."""
    if n >= 7:
        return fib_attractors_closed_form(n), "closed-form"
    return enumerate_smallest_attractors(fib_word(n), prune=prune), "enumeration"
