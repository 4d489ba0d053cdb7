"""Suffix automaton over a binary alphabet.

Each state groups the substrings sharing one end-position set.  A state
``v`` holds exactly the substrings of lengths ``length[link[v]] + 1 ..
length[v]``.  ``firstpos[v]`` is the end of the leftmost occurrence,
using 1-based positions.
"""
from __future__ import annotations


class SuffixAutomaton:
    __slots__ = ("text", "length", "link", "firstpos", "is_clone", "prefix_state", "order", "_count")

    def __init__(self, text: str):
        self.text = text
        length = [0]
        link = [-1]
        firstpos = [0]
        is_clone = [False]
        go_a = [-1]
        go_b = [-1]
        prefix_state = []
        last = 0

        for pos, ch in enumerate(text, 1):
            go = go_a if ch == "a" else go_b
            cur = len(length)
            length.append(length[last] + 1)
            link.append(-1)
            firstpos.append(pos)
            is_clone.append(False)
            go_a.append(-1)
            go_b.append(-1)

            p = last
            while p != -1 and go[p] == -1:
                go[p] = cur
                p = link[p]
            if p == -1:
                link[cur] = 0
            else:
                q = go[p]
                if length[p] + 1 == length[q]:
                    link[cur] = q
                else:
                    clone = len(length)
                    length.append(length[p] + 1)
                    link.append(link[q])
                    firstpos.append(firstpos[q])
                    is_clone.append(True)
                    go_a.append(go_a[q])
                    go_b.append(go_b[q])
                    while p != -1 and go[p] == q:
                        go[p] = clone
                        p = link[p]
                    link[q] = clone
                    link[cur] = clone
            last = cur
            prefix_state.append(cur)

        self.length = length
        self.link = link
        self.firstpos = firstpos
        self.is_clone = is_clone
        self.prefix_state = prefix_state
        # counting sort by length, longest first; children in the link tree
        # are always longer than their parent
        buckets: list[list[int]] = [[] for _ in range(len(text) + 1)]
        for v in range(1, len(length)):
            buckets[length[v]].append(v)
        self.order = [v for bucket in reversed(buckets) for v in bucket]
        self._count: list[int] | None = None

    def __len__(self) -> int:
        return len(self.length)

    def occurrence_counts(self) -> list[int]:
        """|endpos(v)| for every state."""
        if self._count is None:
            count = [0 if c else 1 for c in self.is_clone]
            count[0] = 0
            link = self.link
            for v in self.order:
                count[link[v]] += count[v]
            self._count = count
        return self._count
