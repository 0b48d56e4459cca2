"""Proper colourings of the unit interval graph with exact statistics.

enumerate_colourings walks the colour choices depth-first in lex order,
maintaining incremental weight/height/ascent counters, so each emitted
colouring costs O(window) work and memory stays O(n + m).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .hessenberg import ReverseHessenberg


class NotProper(ValueError):
    pass


@dataclass(frozen=True)
class ColouringStats:
    weight: tuple[int, ...]       # length m, counts of each colour
    ascents: int
    ascents_at: tuple[int, ...]   # ascents ending at each position
    height: int                   # sum of colours
    cell_dim: int                 # height - ascents - n


def is_proper(kappa, r: ReverseHessenberg) -> bool:
    """True iff kappa(j) != kappa(i) whenever r(i) < j < i."""
    kappa = tuple(kappa)
    for i in range(1, r.n + 1):
        ci = kappa[i - 1]
        for j in range(r.r(i) + 1, i):
            if kappa[j - 1] == ci:
                return False
    return True


def stats(kappa, r: ReverseHessenberg, m: int) -> ColouringStats:
    """Exact statistics of a proper colouring; raises NotProper otherwise."""
    kappa = tuple(kappa)
    if len(kappa) != r.n:
        raise NotProper(f"colouring length {len(kappa)} != n = {r.n}")
    if any(not 1 <= c <= m for c in kappa):
        raise NotProper(f"colours must lie in 1..{m}")
    if not is_proper(kappa, r):
        raise NotProper(f"{kappa} is not proper for r = {r}")
    weight = [0] * m
    ascents_at = []
    for i in range(1, r.n + 1):
        ci = kappa[i - 1]
        weight[ci - 1] += 1
        ascents_at.append(sum(1 for j in range(r.r(i) + 1, i) if kappa[j - 1] < ci))
    ascents = sum(ascents_at)
    height = sum(kappa)
    return ColouringStats(
        weight=tuple(weight),
        ascents=ascents,
        ascents_at=tuple(ascents_at),
        height=height,
        cell_dim=height - ascents - r.n,
    )


def count_colourings(r: ReverseHessenberg, m: int) -> int:
    """|C_r| by the product formula: prod_i (m - i + 1 + r(i))."""
    if not r.is_feasible(m):
        return 0
    total = 1
    for i, v in enumerate(r.values, start=1):
        total *= m - i + 1 + v
    return total


def enumerate_colourings(
    r: ReverseHessenberg, m: int
) -> Iterator[tuple[tuple[int, ...], ColouringStats]]:
    """Yield each proper colouring with its statistics, in lex order.

    Infeasible (r, m) yields nothing.
    """
    n = r.n
    kappa = [0] * n
    weight = [0] * m
    ascents_at = [0] * n

    def rec(i: int, height: int, ascents: int):
        if i == n:
            yield (
                tuple(kappa),
                ColouringStats(
                    weight=tuple(weight),
                    ascents=ascents,
                    ascents_at=tuple(ascents_at),
                    height=height,
                    cell_dim=height - ascents - n,
                ),
            )
            return
        window = kappa[r.values[i]: i]
        for c in range(1, m + 1):
            if c in window:
                continue
            asc_here = sum(1 for v in window if v < c)
            kappa[i] = c
            weight[c - 1] += 1
            ascents_at[i] = asc_here
            yield from rec(i + 1, height + c, ascents + asc_here)
            weight[c - 1] -= 1
        kappa[i] = 0

    yield from rec(0, 0, 0)


def fixed_point_chain(kappa, m: int) -> list[tuple[int, ...]]:
    """Prefix-weight chain mu(1),...,mu(n) of a colouring.

    Consecutive differences are the unit vectors picked out by the
    colours, and mu(n) is the total weight.
    """
    chain = []
    weight = [0] * m
    for c in kappa:
        weight[c - 1] += 1
        chain.append(tuple(weight))
    return chain
