"""Partitions with at most m parts, dominance order, and Kostka numbers.

Partitions are stored as trimmed tuples of positive parts and zero-padded
on comparison.  kostka counts semistandard Young tableaux of a given shape
and content by depth-first filling; this equals the GL_m weight
multiplicity dim V(lambda)_mu.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

Partition = tuple[int, ...]


class SizeMismatch(ValueError):
    pass


def partitions_of(n: int, m: int) -> list[Partition]:
    """All partitions of n into at most m parts, in descending lex order.

    Descending lex refines dominance: if lam dominates mu then lam comes
    first, which is what unitriangular back-substitution needs.
    """
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    out: list[Partition] = []
    prefix: list[int] = []

    def rec(remaining: int, max_part: int, slots: int):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if slots == 0:
            return
        for p in range(min(remaining, max_part), 0, -1):
            if p * slots < remaining:
                break
            prefix.append(p)
            rec(remaining - p, p, slots - 1)
            prefix.pop()

    rec(n, n, m)
    return out


def pad(mu, m: int) -> tuple[int, ...]:
    """Zero-pad a partition to a length-m weight vector."""
    mu = tuple(mu)
    if len(mu) > m:
        raise ValueError(f"{mu} has more than {m} parts")
    return mu + (0,) * (m - len(mu))


def dominant(weight) -> Partition:
    """Sorted-descending, zero-trimmed rearrangement of a weight vector."""
    return tuple(sorted((w for w in weight if w != 0), reverse=True))


def dominates(lam, mu) -> bool:
    """Dominance: every prefix sum of lam is >= the matching one of mu."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    total_l = total_m = 0
    for k in range(max(len(lam), len(mu))):
        total_l += lam[k] if k < len(lam) else 0
        total_m += mu[k] if k < len(mu) else 0
        if total_l < total_m:
            return False
    return True


def kostka(lam, mu) -> int:
    """Number of semistandard tableaux of shape lam and content mu.

    mu is any sequence of nonnegative integers (a weight vector); the
    result depends on mu only through its sorted rearrangement.
    """
    lam = tuple(lam)
    mu = tuple(mu)
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|shape {lam}| != |content {mu}|")
    if not lam:
        return 1
    nvals = len(mu)
    remaining = list(mu)
    # cells in row-major order: value >= left neighbour, > upper neighbour
    cells = [(row, col) for row, width in enumerate(lam) for col in range(width)]
    tableau = [[0] * width for width in lam]
    count = 0

    def fill(pos: int):
        nonlocal count
        if pos == len(cells):
            count += 1
            return
        row, col = cells[pos]
        lo = tableau[row][col - 1] if col > 0 else 1
        above = tableau[row - 1][col] if row > 0 else 0
        lo = max(lo, above + 1)
        for val in range(lo, nvals + 1):
            if remaining[val - 1] == 0:
                continue
            remaining[val - 1] -= 1
            tableau[row][col] = val
            fill(pos + 1)
            remaining[val - 1] += 1

    fill(0)
    return count


@dataclass(frozen=True)
class KostkaTable:
    """Kostka matrix over partitions_of(n, m) in descending lex order."""

    index: tuple[Partition, ...]
    matrix: tuple[tuple[int, ...], ...]  # matrix[i][j] = K[index[i]][index[j]]

    def entry(self, lam: Partition, mu: Partition) -> int:
        return self.matrix[self.index.index(lam)][self.index.index(mu)]

    def to_json(self) -> dict:
        return {
            "index": [list(p) for p in self.index],
            "matrix": [list(row) for row in self.matrix],
        }


def kostka_table(n: int, m: int) -> KostkaTable:
    parts = partitions_of(n, m)
    matrix = tuple(
        tuple(kostka(lam, pad(mu, m)) for mu in parts) for lam in parts
    )
    return KostkaTable(tuple(parts), matrix)


def rearrangement_count(mu, m: int) -> int:
    """Number of distinct length-m weight vectors with sorted form mu."""
    mu = pad(dominant(mu), m)
    denom = 1
    for v in set(mu):
        denom *= factorial(mu.count(v))
    return factorial(m) // denom
