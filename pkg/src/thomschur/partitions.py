"""Partitions in the French convention (parts weakly increasing).

``Partition((1, 2, 3))`` is written ``123``; zero parts are dropped.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator, Optional, Sequence


@dataclass(frozen=True)
class Partition:
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts if p != 0)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {self.parts}")
        if any(a > b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly increasing: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_any(cls, parts: Sequence[int]) -> "Partition":
        """Sort first; accepts parts in any order."""
        return cls(tuple(sorted(p for p in parts if p)))

    @classmethod
    def rectangle(cls, rows: int, cols: int) -> "Partition":
        """The rectangle ``(cols^rows)``: `rows` parts equal to `cols`."""
        return cls((cols,) * rows if cols > 0 else ())

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, k):
        return self.parts[k]

    @property
    def largest(self) -> int:
        return self.parts[-1] if self.parts else 0

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        cols = [sum(1 for p in self.parts if p >= c) for c in range(1, self.largest + 1)]
        return Partition(tuple(reversed(cols)))

    def contains(self, other: "Partition") -> bool:
        """True iff the diagram of `other` fits inside the diagram of self."""
        if len(other) > len(self):
            return False
        mine, theirs = self.parts[::-1], other.parts[::-1]
        return all(b <= a for a, b in zip(mine, theirs))

    def in_hook(self, m: int, n: int) -> bool:
        """Containment in the (m, n)-hook: s <= m, or the (m+1)-th largest
        part is at most n."""
        s = len(self.parts)
        return s <= m or self.parts[s - m - 1] <= n

    def padded(self, length: int) -> tuple:
        """Parts left-padded with zeros to `length` (still increasing)."""
        if len(self.parts) > length:
            raise ValueError(f"{self} has more than {length} parts")
        return (0,) * (length - len(self.parts)) + self.parts

    def __str__(self):
        if all(p <= 9 for p in self.parts):
            return "".join(map(str, self.parts))
        return ",".join(map(str, self.parts))

    def __repr__(self):
        return f"Partition({self.parts})"

    def to_json(self) -> list:
        return list(self.parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Inverse of ``str``: ``"123"`` or ``"1,1,10"``; empty text is the
        empty partition."""
        text = text.strip()
        if not text:
            return cls()
        if "," in text:
            parts = [int(t) for t in text.split(",")]
        elif re.fullmatch(r"\d+", text):
            parts = [int(ch) for ch in text]
        else:
            raise ValueError(f"cannot read partition from {text!r}")
        return cls(tuple(parts))


def partitions_in_rectangle(rows: int, cols: int) -> list:
    """All partitions with at most `rows` parts, each at most `cols`.

    Ordered by weight, then lexicographically on the zero-padded parts.
    """
    out = [Partition(p) for p in combinations_with_replacement(range(cols + 1), rows)]
    out.sort(key=lambda I: (I.weight, I.padded(rows)))
    return out


def partitions_of(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of weight `n`, largest part first descending."""
    if max_part is None:
        max_part = n

    def gen(n, cap):
        if n == 0:
            yield ()
            return
        for first in range(min(n, cap), 0, -1):
            for rest in gen(n - first, first):
                yield rest + (first,)

    for p in gen(n, max_part):
        yield Partition(p)


def partitions_up_to(max_weight: int) -> Iterator[Partition]:
    for n in range(max_weight + 1):
        yield from partitions_of(n)


def classify_h(I: Partition, r: int) -> Optional[int]:
    """The h with ((r+h-1)^h) inside I but not ((r+h)^(h+1)).

    None when I does not even contain the row (r).
    """
    if not I.contains(Partition((r,))):
        return None
    h = 1
    while I.contains(Partition.rectangle(h + 1, r + h)):
        h += 1
    return h
