"""Monogamy inequalities for squared I-concurrence and disorder relations.

Both families are rearrangements of the even-N compatibility condition: the
monogamy sums range over subsets A of a chosen even-size index set, with each
concurrence cut against the full complement of A, and the disorder relation
compares even-subset against odd-subset mixedness sums.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import TOL_VERDICT
from .hilbert import Operator, PureState, SubsetMask, _check_mask, partial_trace, purity
from .measures import i_concurrence_sq


def _submasks(bits: int) -> list[int]:
    """All submasks of ``bits`` including 0, ascending."""
    out = []
    sub = 0
    while True:
        out.append(sub)
        if sub == bits:
            return out
        sub = (sub - bits) & bits


@dataclass(frozen=True)
class MonogamyReport:
    """One monogamy inequality over an even-size index set."""

    index_set: SubsetMask
    lhs: float
    rhs: float
    holds: bool

    @property
    def slack(self) -> float:
        return self.lhs - self.rhs


def corollary1_check(psi: PureState, index_set: SubsetMask) -> MonogamyReport:
    """Check sum of odd-|A| concurrences >= sum of even-|A| concurrences.

    A ranges over the subsets of ``index_set``; each squared concurrence cuts
    A against all remaining parties of the global state, and vanishes by
    convention for A empty or equal to the full party set.
    """
    _check_mask(psi.shape, index_set)
    if index_set.cardinality < 2 or index_set.is_odd:
        raise ValueError("index set must have even cardinality >= 2")
    n = psi.shape.n_parties
    lhs = rhs = 0.0
    for bits in _submasks(index_set.bits):
        sub = SubsetMask(bits, n)
        c2 = i_concurrence_sq(psi, sub)
        if sub.is_odd:
            lhs += c2
        else:
            rhs += c2
    return MonogamyReport(index_set, lhs, rhs, lhs >= rhs - TOL_VERDICT)


def corollary1_scan(psi: PureState) -> list[MonogamyReport]:
    """One report per even-cardinality index set with at least two parties."""
    n = psi.shape.n_parties
    return [
        corollary1_check(psi, SubsetMask(bits, n))
        for bits in range(1, 1 << n)
        if bits.bit_count() >= 2 and bits.bit_count() % 2 == 0
    ]


@dataclass(frozen=True)
class DisorderReport:
    """Even-subset versus odd-subset mixedness sums for an even party count."""

    lhs: float
    rhs: float
    holds: bool

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs


def disorder_check(rho: Operator) -> DisorderReport:
    """Check that global-plus-even-subset disorder is bounded by odd-subset disorder.

    lhs sums D(rho_A) = 1 - Tr rho_A^2 over nonempty even subsets including
    the full set; rhs sums it over odd subsets.
    """
    n = rho.shape.n_parties
    if n % 2 == 1:
        raise ValueError("disorder relation requires an even party count")
    lhs = rhs = 0.0
    for bits in range(1, 1 << n):
        sub = SubsetMask(bits, n)
        d = 1.0 - purity(partial_trace(rho, sub))
        if sub.is_odd:
            rhs += d
        else:
            lhs += d
    return DisorderReport(lhs, rhs, lhs <= rhs + TOL_VERDICT)
