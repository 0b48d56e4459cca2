"""Reverse Hessenberg functions and their unit interval graphs.

A reverse Hessenberg function on [n] is a weakly increasing sequence
r(1),...,r(n) with 0 <= r(i) <= i-1.  Vertices j < i of the associated
graph are adjacent exactly when r(i) < j, so the neighbours of i below
it form the contiguous window {r(i)+1, ..., i-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


class NotWeaklyIncreasing(ValueError):
    pass


class OutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]  # pairs (j, i) with j < i, 1-based


@dataclass(frozen=True)
class ReverseHessenberg:
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        vals = self.values
        for i in range(len(vals) - 1):
            if vals[i] > vals[i + 1]:
                raise NotWeaklyIncreasing(
                    f"r({i + 1}) = {vals[i]} > r({i + 2}) = {vals[i + 1]}"
                )
        for i, v in enumerate(vals, start=1):
            if not 0 <= v <= i - 1:
                raise OutOfRange(f"r({i}) = {v} violates 0 <= r(i) <= i-1")

    @property
    def n(self) -> int:
        return len(self.values)

    def r(self, i: int) -> int:
        """r(i), 1-based."""
        return self.values[i - 1]

    def edge_count(self) -> int:
        """E_r = sum_i (i - 1 - r(i)), the number of edges."""
        return sum(i - 1 - v for i, v in enumerate(self.values, start=1))

    def edges(self) -> Graph:
        es = frozenset(
            (j, i)
            for i, v in enumerate(self.values, start=1)
            for j in range(v + 1, i)
        )
        return Graph(self.n, es)

    def is_feasible(self, m: int) -> bool:
        """True iff proper colourings with m colours exist: i - r(i) <= m."""
        return all(i - v <= m for i, v in enumerate(self.values, start=1))

    def min_feasible_m(self) -> int:
        """Smallest m >= 1 for which colourings exist."""
        return max((i - v for i, v in enumerate(self.values, start=1)), default=1)

    def to_json(self) -> list[int]:
        return list(self.values)

    def to_text(self) -> str:
        return ",".join(str(v) for v in self.values)

    def __str__(self) -> str:
        return f"({self.to_text()})"


def validate(values) -> ReverseHessenberg:
    """Validate a raw integer sequence as a reverse Hessenberg function."""
    return ReverseHessenberg(tuple(values))


def parse(text: str) -> ReverseHessenberg:
    """Parse the comma-separated text form, e.g. "0,1,1,3"."""
    text = text.strip()
    if not text:
        return ReverseHessenberg(())
    return validate(int(part) for part in text.split(","))


def staircase(n: int) -> ReverseHessenberg:
    """r(i) = i - 1: the edgeless graph."""
    return ReverseHessenberg(tuple(i - 1 for i in range(1, n + 1)))


def complete(n: int) -> ReverseHessenberg:
    """r(i) = 0: the complete graph on [n]."""
    return ReverseHessenberg((0,) * n)


def all_reverse_hessenberg(n: int) -> Iterator[ReverseHessenberg]:
    """Yield every reverse Hessenberg function on [n], values in lex order."""
    prefix = [0] * n

    def rec(i: int) -> Iterator[ReverseHessenberg]:
        if i == n:
            yield ReverseHessenberg(tuple(prefix))
            return
        lo = prefix[i - 1] if i > 0 else 0
        for v in range(lo, i + 1):
            prefix[i] = v
            yield from rec(i + 1)

    yield from rec(0)
