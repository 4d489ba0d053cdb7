"""Fibonacci, singular and period-doubling words.

All positions exposed by this module are 1-based.  Words are immutable
and generated words are memoized per :class:`WordGenerator`.
"""
from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass

from .errors import OrderCapError

ALPHABET = frozenset("ab")

DEFAULT_FIB_CAP = 30
DEFAULT_PD_CAP = 21
FIB_CAP_ENV = "WORDATTRACTORS_FIB_CAP"
PD_CAP_ENV = "WORDATTRACTORS_PD_CAP"

# fib_number rejects anything that would not fit a signed 64-bit integer
_INT64_MAX = 2**63 - 1

_PHI = str.maketrans({"a": "ab", "b": "aa"})


class Word:
    """Immutable string over {a, b} with 1-based accessors."""

    __slots__ = ("_text",)

    def __init__(self, text: str | Word = ""):
        if isinstance(text, Word):
            text = text._text
        if not ALPHABET.issuperset(text):
            bad = sorted(set(text) - ALPHABET)
            raise ValueError(f"symbols outside {{a, b}}: {bad!r}")
        self._text = text

    @classmethod
    def _trusted(cls, text: str) -> Word:
        w = object.__new__(cls)
        w._text = text
        return w

    @property
    def text(self) -> str:
        return self._text

    def __len__(self) -> int:
        return len(self._text)

    def __iter__(self):
        return iter(self._text)

    def __str__(self) -> str:
        return self._text

    def __repr__(self) -> str:
        if len(self._text) > 40:
            return f"Word({self._text[:37]!r}..., len={len(self._text)})"
        return f"Word({self._text!r})"

    def __eq__(self, other) -> bool:
        if isinstance(other, Word):
            return self._text == other._text
        if isinstance(other, str):
            return self._text == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._text)

    def __add__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        return Word._trusted(self._text + other._text)

    def __setattr__(self, name, value):
        if hasattr(self, "_text"):
            raise AttributeError("Word is immutable")
        object.__setattr__(self, name, value)

    def at(self, i: int) -> str:
        """Symbol at 1-based position ``i``."""
        if not 1 <= i <= len(self._text):
            raise IndexError(f"position {i} outside 1..{len(self._text)}")
        return self._text[i - 1]

    def sub(self, i: int, j: int) -> Word:
        """The substring ``T[i..j]`` (1-based, inclusive).  Empty when j = i - 1."""
        if not (1 <= i <= j + 1 and j <= len(self._text)):
            raise IndexError(f"[{i}..{j}] is not a range of a length-{len(self)} word")
        return Word._trusted(self._text[i - 1 : j])

    def reverse(self) -> Word:
        return Word._trusted(self._text[::-1])

    def is_palindrome(self) -> bool:
        return self._text == self._text[::-1]

    def to_text(self) -> str:
        return self._text

    @classmethod
    def from_text(cls, text: str) -> Word:
        return cls(text.strip())


EMPTY = Word._trusted("")


@dataclass(frozen=True)
class SingularFactorization:
    """F_n written as S_0 S_1 ... S_{n-2} S_{(n-1) mod 2}."""

    n: int
    factors: tuple[int, ...]
    spans: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {"n": self.n, "factors": list(self.factors), "spans": [list(s) for s in self.spans]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> SingularFactorization:
        return cls(
            n=int(data["n"]),
            factors=tuple(int(k) for k in data["factors"]),
            spans=tuple((int(lo), int(hi)) for lo, hi in data["spans"]),
        )

    @classmethod
    def from_json(cls, text: str) -> SingularFactorization:
        return cls.from_dict(json.loads(text))


def _env_cap(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


class WordGenerator:
    """Memoizing generator for the word families, with order caps.

    Caches are shared between threads and guarded by a lock; the cached
    values themselves are immutable.
    """

    def __init__(self, fib_cap: int | None = None, pd_cap: int | None = None):
        self.fib_cap = _env_cap(FIB_CAP_ENV, DEFAULT_FIB_CAP) if fib_cap is None else fib_cap
        self.pd_cap = _env_cap(PD_CAP_ENV, DEFAULT_PD_CAP) if pd_cap is None else pd_cap
        self._lock = threading.Lock()
        self._fib: list[str] = ["b", "a"]
        self._sing: dict[int, str] = {-1: "", 0: "a", 1: "b"}
        self._pd: list[str] = ["a"]

    def _check_fib_order(self, n: int, lowest: int = 0) -> None:
        if n < lowest:
            raise ValueError(f"order must be >= {lowest}, got {n}")
        if n > self.fib_cap:
            raise OrderCapError(f"order {n} exceeds the Fibonacci cap {self.fib_cap}")

    def fib_number(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"order must be >= 0, got {n}")
        a, b = 1, 1
        for _ in range(n):
            a, b = b, a + b
            if a > _INT64_MAX:
                raise OrderCapError(f"f_{n} does not fit in a signed 64-bit integer")
        return a

    def fib_word(self, n: int) -> Word:
        self._check_fib_order(n)
        with self._lock:
            cache = self._fib
            while len(cache) <= n:
                cache.append(cache[-1] + cache[-2])
            return Word._trusted(cache[n])

    def g_delta(self, n: int) -> tuple[Word, Word]:
        """Split F_n = G_n Delta_n.  For n in {0, 1}, G_n is taken to be empty."""
        self._check_fib_order(n)
        delta = Word._trusted("ab" if n % 2 == 0 else "ba")
        if n < 2:
            return EMPTY, delta
        text = self.fib_word(n).text
        return Word._trusted(text[:-2]), Word._trusted(text[-2:])

    def singular_word(self, n: int) -> Word:
        self._check_fib_order(n, lowest=-1)
        with self._lock:
            cache = self._sing
            k = max(cache)
            while k < n:
                k += 1
                cache[k] = cache[k - 2] + cache[k - 3] + cache[k - 2]
            return Word._trusted(cache[n])

    def fib_singular_factorization(self, n: int) -> SingularFactorization:
        self._check_fib_order(n, lowest=1)
        factors = tuple(range(n - 1)) + ((n - 1) % 2,)
        spans = [(self.fib_number(k + 1), self.fib_number(k + 2) - 1) for k in range(n - 1)]
        last = self.fib_number(n)
        spans.append((last, last))
        return SingularFactorization(n=n, factors=factors, spans=tuple(spans))

    def pd_word(self, n: int) -> Word:
        if n < 0:
            raise ValueError(f"order must be >= 0, got {n}")
        if n > self.pd_cap:
            raise OrderCapError(f"order {n} exceeds the period-doubling cap {self.pd_cap}")
        with self._lock:
            cache = self._pd
            while len(cache) <= n:
                cache.append(cache[-1].translate(_PHI))
            return Word._trusted(cache[n])


default_generator = WordGenerator()


def fib_number(n: int) -> int:
    """f_n with f_0 = f_1 = 1."""
    return default_generator.fib_number(n)


def fib_word(n: int) -> Word:
    """F_0 = b, F_1 = a, F_n = F_{n-1} F_{n-2}."""
    return default_generator.fib_word(n)


def g_delta(n: int) -> tuple[Word, Word]:
    return default_generator.g_delta(n)


def singular_word(n: int) -> Word:
    """S_{-1} = '', S_0 = a, S_1 = b, S_n = S_{n-2} S_{n-3} S_{n-2}."""
    return default_generator.singular_word(n)


def fib_singular_factorization(n: int) -> SingularFactorization:
    return default_generator.fib_singular_factorization(n)


def pd_word(n: int) -> Word:
    """D_0 = a, D_n = phi(D_{n-1}) with phi(a) = ab, phi(b) = aa."""
    return default_generator.pd_word(n)


def concatenate_factorization(fact: SingularFactorization, gen: WordGenerator | None = None) -> Word:
    gen = gen or default_generator
    return Word._trusted("".join(gen.singular_word(k).text for k in fact.factors))
