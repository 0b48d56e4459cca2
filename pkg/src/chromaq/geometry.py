"""Geometric consistency checks for the cell-paved variety attached to r.

Two independent routes to the Poincare polynomial are kept separate on
purpose: poincare_product multiplies the projective-space factors of the
iterated bundle, while poincare_bb sums q^(cell dimension) over proper
colourings.  Cohomological degrees are halved throughout, so projective
k-space contributes the q-integer [k+1]_q.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .colourings import enumerate_colourings
from .hessenberg import ReverseHessenberg
from .qpoly import QPoly, q_integer


class Infeasible(ValueError):
    pass


def _require_feasible(r: ReverseHessenberg, m: int):
    if m < 1 or not r.is_feasible(m):
        raise Infeasible(f"no proper colourings of r = {r} with m = {m}")


def dimension(r: ReverseHessenberg, m: int) -> int:
    """d_r = (m-1)n - E_r."""
    _require_feasible(r, m)
    return (m - 1) * r.n - r.edge_count()


def fibre_dimension(r: ReverseHessenberg, m: int, i: int) -> int:
    """Dimension m - i + r(i) of the projective fibre added at step i."""
    _require_feasible(r, m)
    if not 1 <= i <= r.n:
        raise ValueError(f"i = {i} out of range 1..{r.n}")
    return m - i + r.r(i)


def poincare_product(r: ReverseHessenberg, m: int) -> QPoly:
    """Product of [fibre dimension + 1]_q over the bundle steps."""
    _require_feasible(r, m)
    out = QPoly.one()
    for i in range(1, r.n + 1):
        out = out * q_integer(fibre_dimension(r, m, i) + 1)
    return out


def _bb_accumulate(r: ReverseHessenberg, m: int, start: int,
                   dp: dict[tuple[int, ...], dict[int, int]]) -> QPoly:
    """Run the window-state dynamic program from position `start` (0-based).

    A state is the tuple of colours still visible to future windows; since
    the visible positions form a clique, states are short injective
    sequences and their number stays small even when the colouring count
    is huge.
    """
    n = r.n
    for i in range(start, n):
        keep = n if i + 1 >= n else (i + 1) - r.values[i + 1]
        new_dp: dict[tuple[int, ...], dict[int, int]] = {}
        for state, exps in dp.items():
            for c in range(1, m + 1):
                if c in state:
                    continue
                inc = (c - 1) - sum(1 for v in state if v < c)
                t = (state + (c,))[-keep:] if keep else ()
                slot = new_dp.setdefault(t, {})
                for e, cnt in exps.items():
                    slot[e + inc] = slot.get(e + inc, 0) + cnt
        dp = new_dp
    total: dict[int, int] = {}
    for exps in dp.values():
        for e, cnt in exps.items():
            total[e] = total.get(e, 0) + cnt
    return QPoly.from_terms(total)


def poincare_bb(r: ReverseHessenberg, m: int, parallel: bool = False) -> QPoly:
    """Sum of q^(htt - asc - n) over all proper colourings.

    Parallel mode partitions on the first colour choice and adds the
    partial polynomials in colour order; the result is identical to the
    sequential one.
    """
    _require_feasible(r, m)
    n = r.n
    if n == 0:
        return QPoly.one()
    if not parallel:
        return _bb_accumulate(r, m, 0, {(): {0: 1}})

    def from_first(c: int) -> QPoly:
        keep = n if n == 1 else 1 - r.values[1]
        state = (c,)[-keep:] if keep else ()
        return _bb_accumulate(r, m, 1, {state: {c - 1: 1}})

    with ThreadPoolExecutor() as pool:
        parts = list(pool.map(from_first, range(1, m + 1)))
    out = QPoly.zero()
    for p in parts:
        out = out + p
    return out


def exponent_identity_check(r: ReverseHessenberg, m: int) -> bool:
    """Integer bookkeeping behind the Schur-side exponent shift.

    For every proper colouring with weight mu, checks
    2 rho(mu) = n(m+1) - 2 htt and the derived
    2(asc - htt + n) - 2 rho(mu) + d_r = 2 asc - E_r.
    """
    _require_feasible(r, m)
    n = r.n
    e_r = r.edge_count()
    d_r = (m - 1) * n - e_r
    for _, st in enumerate_colourings(r, m):
        two_rho = sum(w * (m - 2 * p - 1) for p, w in enumerate(st.weight))
        if two_rho != n * (m + 1) - 2 * st.height:
            return False
        lhs = 2 * (st.ascents - st.height + n) - two_rho + d_r
        if lhs != 2 * st.ascents - e_r:
            return False
    return True


@dataclass(frozen=True)
class GeometryReport:
    d_r: int
    fibre_dims: tuple[int, ...]
    poincare_product: QPoly
    poincare_bb: QPoly
    identities_pass: bool

    def to_json(self) -> dict:
        return {
            "d_r": self.d_r,
            "fibre_dims": list(self.fibre_dims),
            "poincare_product": self.poincare_product.to_json(),
            "poincare_bb": self.poincare_bb.to_json(),
            "identities_pass": self.identities_pass,
        }


def geometry_report(r: ReverseHessenberg, m: int, parallel: bool = False) -> GeometryReport:
    _require_feasible(r, m)
    d_r = dimension(r, m)
    product = poincare_product(r, m)
    bb = poincare_bb(r, m, parallel=parallel)
    ok = (
        product == bb
        and bb.degree() == d_r
        and bb.is_palindromic(d_r)
        and bb.coefficient(0) == 1
        and bb.coefficient(d_r) == 1
    )
    return GeometryReport(
        d_r=d_r,
        fibre_dims=tuple(fibre_dimension(r, m, i) for i in range(1, r.n + 1)),
        poincare_product=product,
        poincare_bb=bb,
        identities_pass=ok,
    )
