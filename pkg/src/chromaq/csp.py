"""The chromatic quasisymmetric polynomial, its Schur expansion, and the
verification of the predicted positivity/palindromicity of the Schur
coefficients.

CSP data is stored only on dominant weights: monomial[mu] is the exact
coefficient of x^mu for the sorted weight vector mu, and symmetry_check
confirms that the remaining orbit entries agree instead of storing them.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .colourings import count_colourings, enumerate_colourings
from .hessenberg import ReverseHessenberg
from .partitions import (
    Partition,
    dominant,
    kostka_table,
    pad,
    partitions_of,
)
from .qpoly import QPoly


@dataclass(frozen=True)
class CSPoly:
    n: int
    m: int
    e_r: int
    monomial: dict[Partition, QPoly] = field(default_factory=dict)

    def coefficient(self, mu: Partition) -> QPoly:
        return self.monomial.get(tuple(mu), QPoly.zero())


@dataclass(frozen=True)
class SchurExpansion:
    n: int
    m: int
    e_r: int
    coefficients: dict[Partition, QPoly]   # only nonzero c_lambda
    monomial: dict[Partition, QPoly]       # kept for the reconstruction check

    def coefficient(self, lam: Partition) -> QPoly:
        return self.coefficients.get(tuple(lam), QPoly.zero())


@dataclass(frozen=True)
class LambdaCheck:
    partition: Partition
    nonnegative: bool
    palindromic: bool
    support_ok: bool

    @property
    def passed(self) -> bool:
        return self.nonnegative and self.palindromic and self.support_ok


@dataclass(frozen=True)
class VerificationReport:
    e_r: int
    per_lambda: tuple[LambdaCheck, ...]
    reconstruction_ok: bool

    @property
    def passed(self) -> bool:
        return self.reconstruction_ok and all(c.passed for c in self.per_lambda)


def _coefficient_at_weight(r: ReverseHessenberg, m: int, mu: Partition) -> QPoly:
    """Sum of q^asc over proper colourings whose weight is exactly mu."""
    n = r.n
    remaining = list(pad(mu, m))
    kappa = [0] * n
    counts: dict[int, int] = {}

    def rec(i: int, asc: int):
        if i == n:
            counts[asc] = counts.get(asc, 0) + 1
            return
        window = kappa[r.values[i]: i]
        for c in range(1, m + 1):
            if remaining[c - 1] == 0 or c in window:
                continue
            remaining[c - 1] -= 1
            kappa[i] = c
            rec(i + 1, asc + sum(1 for v in window if v < c))
            remaining[c - 1] += 1

    rec(0, 0)
    return QPoly.from_terms(counts)


def compute_csp(r: ReverseHessenberg, m: int, parallel: bool = False) -> CSPoly:
    """Compute CSP_r = sum_kappa q^asc(kappa) x^wt(kappa) on dominant weights.

    Infeasible (r, m) gives the zero polynomial (empty map).  The parallel
    flag distributes the dominant weights over a thread pool; results are
    exact either way and merged in canonical order.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    e_r = r.edge_count()
    if not r.is_feasible(m):
        return CSPoly(r.n, m, e_r, {})
    order = partitions_of(r.n, m)
    if parallel:
        with ThreadPoolExecutor() as pool:
            polys = list(pool.map(lambda mu: _coefficient_at_weight(r, m, mu), order))
    else:
        polys = [_coefficient_at_weight(r, m, mu) for mu in order]
    monomial = {mu: p for mu, p in zip(order, polys) if p}
    return CSPoly(r.n, m, e_r, monomial)


def schur_expand(c: CSPoly) -> SchurExpansion:
    """Expand in the Schur basis by unitriangular back-substitution.

    Solves a_mu = sum_lambda c_lambda * K[lambda][mu] over partitions in
    descending lex order; the Kostka matrix is unitriangular for that
    order, so the system has a unique exact solution.
    """
    order = partitions_of(c.n, c.m)
    table = kostka_table(c.n, c.m)
    solved: dict[Partition, QPoly] = {}
    for j, mu in enumerate(order):
        acc = c.coefficient(mu)
        for i in range(j):
            lam = order[i]
            k = table.matrix[i][j]
            if k and lam in solved:
                acc = acc - solved[lam].scale(k)
        if acc:
            solved[mu] = acc
    return SchurExpansion(c.n, c.m, c.e_r, solved, dict(c.monomial))


def verify_expansion(e: SchurExpansion) -> VerificationReport:
    """Check the predicted shape of every Schur coefficient.

    Each nonzero c_lambda must have nonnegative coefficients, be
    palindromic about center2 = E_r, and be supported in [0, E_r]; the
    monomial data must be reconstructed exactly by the Kostka matrix.
    Failures are recorded in the report, never raised.
    """
    checks = []
    for lam, poly in e.coefficients.items():
        lo = poly.low_degree()
        hi = poly.degree()
        support_ok = lo is None or (lo >= 0 and hi <= e.e_r)
        checks.append(
            LambdaCheck(
                partition=lam,
                nonnegative=poly.is_nonnegative(),
                palindromic=poly.is_palindromic(e.e_r),
                support_ok=support_ok,
            )
        )
    order = partitions_of(e.n, e.m)
    table = kostka_table(e.n, e.m)
    reconstruction_ok = True
    for j, mu in enumerate(order):
        acc = QPoly.zero()
        for i, lam in enumerate(order):
            k = table.matrix[i][j]
            if k and lam in e.coefficients:
                acc = acc + e.coefficients[lam].scale(k)
        if acc != e.monomial.get(mu, QPoly.zero()):
            reconstruction_ok = False
    return VerificationReport(e.e_r, tuple(checks), reconstruction_ok)


def symmetry_check(r: ReverseHessenberg, m: int, trials: int = 8, seed: int = 0) -> bool:
    """Confirm S_m symmetry of the raw weight-indexed accumulation.

    Recomputes coefficients on all weight vectors (no dominant sorting)
    and compares entries within `trials` randomly chosen orbits, or all
    orbits when there are fewer.
    """
    raw: dict[tuple[int, ...], QPoly] = {}
    for _, st in enumerate_colourings(r, m):
        raw[st.weight] = raw.get(st.weight, QPoly.zero()).add_term(st.ascents, 1)
    orbits: dict[Partition, set[tuple[int, ...]]] = {}
    for w in raw:
        orbits.setdefault(dominant(w), set()).add(w)
    keys = sorted(orbits)
    if len(keys) > trials:
        keys = random.Random(seed).sample(keys, trials)
    from itertools import permutations

    for key in keys:
        rep = next(iter(orbits[key]))
        expected = raw[rep]
        for w in set(permutations(rep)):
            if raw.get(w, QPoly.zero()) != expected:
                return False
    return True


def csp_to_json(c: CSPoly) -> list[dict]:
    return [
        {"weight": list(pad(mu, c.m)), "poly": c.monomial[mu].to_json()}
        for mu in partitions_of(c.n, c.m)
        if mu in c.monomial
    ]


def schur_to_json(e: SchurExpansion) -> list[dict]:
    return [
        {"partition": list(lam), "poly": e.coefficients[lam].to_json()}
        for lam in partitions_of(e.n, e.m)
        if lam in e.coefficients
    ]


def verification_to_json(v: VerificationReport) -> dict:
    return {
        "pass": v.passed,
        "reconstruction": v.reconstruction_ok,
        "per_lambda": [
            {
                "partition": list(c.partition),
                "nonnegative": c.nonnegative,
                "palindromic": c.palindromic,
                "support_ok": c.support_ok,
            }
            for c in v.per_lambda
        ],
    }


def q_one_count(c: CSPoly) -> int:
    """Specialize q = 1 and count colourings through orbit multiplicities."""
    from .partitions import rearrangement_count

    return sum(
        poly.eval_at_one() * rearrangement_count(mu, c.m)
        for mu, poly in c.monomial.items()
    )


__all__ = [
    "CSPoly",
    "SchurExpansion",
    "LambdaCheck",
    "VerificationReport",
    "compute_csp",
    "schur_expand",
    "verify_expansion",
    "symmetry_check",
    "csp_to_json",
    "schur_to_json",
    "verification_to_json",
    "q_one_count",
    "count_colourings",
]
