"""Cross-checks of the closed forms against exhaustive enumeration, and
fuzzing of the fast verifier against the naive one."""
from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field

from .attractors import AttractorVerifier, is_attractor_naive, position_set
from .enumeration import AttractorFamily, enumerate_smallest_attractors
from .errors import OrderCapError
from .fibonacci import fib_attractors_closed_form
from .period_doubling import pd_attractors_closed_form
from .words import Word, fib_word, pd_word

FIB_BRUTE_CAP = 12
FIB_NAIVE_CAP = 10
PD_BRUTE_CAP = 8
PD_LARGE_CAP = 9


@dataclass
class OrderResult:
    n: int
    match: bool
    closed_form: AttractorFamily
    brute_force: AttractorFamily
    seconds: float = 0.0

    @property
    def only_closed(self) -> list[tuple[int, ...]]:
        return sorted(set(self.closed_form.sets) - set(self.brute_force.sets))

    @property
    def only_brute(self) -> list[tuple[int, ...]]:
        return sorted(set(self.brute_force.sets) - set(self.closed_form.sets))

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {"n": self.n, "status": "match" if self.match else "mismatch", "size": len(self.brute_force)}
        if not self.match:
            out["diff"] = {
                "closed_form_only": [list(s) for s in self.only_closed],
                "brute_force_only": [list(s) for s in self.only_brute],
                "k_closed_form": self.closed_form.k,
                "k_brute_force": self.brute_force.k,
            }
        if include_timing:
            out["seconds"] = round(self.seconds, 6)
        return out


@dataclass
class CrosscheckReport:
    family: str
    orders: list[int]
    results: list[OrderResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.match for r in self.results)

    def to_dict(self, include_timing: bool = False) -> dict:
        return {
            "family": self.family,
            "orders": list(self.orders),
            "results": [r.to_dict(include_timing) for r in self.results],
            "ok": self.ok,
        }

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), separators=(",", ":"))

    def to_text(self, include_timing: bool = False) -> str:
        lines = [f"{'n':>4}  {'status':<8}  {'|Att|':>6}" + ("  seconds" if include_timing else "")]
        for r in self.results:
            line = f"{r.n:>4}  {'match' if r.match else 'MISMATCH':<8}  {len(r.brute_force):>6}"
            if include_timing:
                line += f"  {r.seconds:.3f}"
            lines.append(line)
            if not r.match:
                lines.append(f"      closed form only: {r.only_closed}")
                lines.append(f"      brute force only: {r.only_brute}")
        lines.append(f"{self.family}: {'all match' if self.ok else 'MISMATCH'}")
        return "\n".join(lines) + "\n"


def enumerate_smallest_attractors_naive(T) -> AttractorFamily:
    """Smallest attractors using only the naive verifier."""
    T = T if isinstance(T, Word) else Word(T)
    n = len(T)
    for k in range(1, n + 1):
        found = [c for c in itertools.combinations(range(1, n + 1), k) if is_attractor_naive(T, c)]
        if found:
            return AttractorFamily(k, tuple(found))
    raise AssertionError("the full position set is always an attractor")


def _crosscheck(family, orders, word_of, closed_form, prune, naive) -> CrosscheckReport:
    report = CrosscheckReport(family, list(orders))
    for n in orders:
        t0 = time.perf_counter()
        expected = closed_form(n)
        word = word_of(n)
        found = enumerate_smallest_attractors_naive(word) if naive else enumerate_smallest_attractors(word, prune=prune)
        report.results.append(OrderResult(n, expected == found, expected, found, time.perf_counter() - t0))
    return report


def crosscheck_fib(n_lo: int, n_hi: int, prune: bool = False, naive: bool = False) -> CrosscheckReport:
    """Compare the closed form for Att(F_n) with brute force, n_lo <= n <= n_hi."""
    cap = FIB_NAIVE_CAP if naive else FIB_BRUTE_CAP
    if not 7 <= n_lo <= n_hi:
        raise ValueError(f"need 7 <= n_lo <= n_hi, got {n_lo}, {n_hi}")
    if n_hi > cap:
        raise OrderCapError(f"brute force for Fibonacci words is capped at n = {cap}")
    return _crosscheck("fib", range(n_lo, n_hi + 1), fib_word, fib_attractors_closed_form, prune, naive)


def crosscheck_pd(
    n_lo: int, n_hi: int, prune: bool = False, naive: bool = False, allow_large: bool = False
) -> CrosscheckReport:
    """Compare the closed form for Att(D_n) with brute force, n_lo <= n <= n_hi."""
    cap = PD_LARGE_CAP if allow_large else PD_BRUTE_CAP
    if not 2 <= n_lo <= n_hi:
        raise ValueError(f"need 2 <= n_lo <= n_hi, got {n_lo}, {n_hi}")
    if n_hi > cap:
        raise OrderCapError(f"brute force for period-doubling words is capped at n = {cap}")
    return _crosscheck("pd", range(n_lo, n_hi + 1), pd_word, pd_attractors_closed_form, prune, naive)


@dataclass
class FuzzReport:
    trials: int
    seed: int | None
    disagreements: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def to_dict(self) -> dict:
        return {"trials": self.trials, "seed": self.seed, "disagreements": self.disagreements, "ok": self.ok}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def _compare(report: FuzzReport, word: str, gamma, verifier: AttractorVerifier | None = None) -> None:
    fast = (verifier or AttractorVerifier(word)).check(gamma)
    slow = is_attractor_naive(word, gamma)
    if fast.is_attractor != slow.is_attractor:
        report.disagreements.append({"word": word, "gamma": list(gamma), "fast": fast.is_attractor, "naive": slow.is_attractor})


def verifier_fuzz(trials: int, max_len: int = 16, seed: int = 0, max_gamma: int = 3) -> FuzzReport:
    """Random words and position sets; fast and naive verdicts must agree."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    rng = random.Random(seed)
    report = FuzzReport(trials, seed)
    for _ in range(trials):
        n = rng.randint(1, max_len)
        word = "".join(rng.choice("ab") for _ in range(n))
        size = rng.randint(0, min(max_gamma, n))
        gamma = position_set(rng.sample(range(1, n + 1), size))
        _compare(report, word, gamma)
    return report


def verifier_sweep(max_len: int = 10, max_gamma: int = 2) -> FuzzReport:
    """Every binary word up to ``max_len`` with every set of <= ``max_gamma`` positions."""
    report = FuzzReport(0, None)
    for n in range(1, max_len + 1):
        for letters in itertools.product("ab", repeat=n):
            word = "".join(letters)
            verifier = AttractorVerifier(word)
            for size in range(0, max_gamma + 1):
                for gamma in itertools.combinations(range(1, n + 1), size):
                    _compare(report, word, gamma, verifier)
                    report.trials += 1
    return report
