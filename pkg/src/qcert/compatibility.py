"""Marginal-set compatibility certificates.

The certificates test a necessary condition only: a passing set of reduced
density matrices is reported as "consistent" with some global state, never
as compatible. A violation, in contrast, is a proof of incompatibility.

The tested inequality bounds the alternating purity sum
sum_{|A| odd} Tr rho_A^2 - sum_{|A| even} Tr rho_A^2 over nonempty subsets A
by 1, where the full-set term is Tr rho^2 of the global state: fixed at 1
when a pure global state is claimed, supplied by the caller for mixed global
states, and defaulted to the compatibility-friendliest value 1 when unknown.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .config import TOL_INPUT, TOL_VERDICT
from .hilbert import (
    Operator,
    SpaceShape,
    SubsetMask,
    partial_trace,
    purity,
    validate_density,
)

BEST_CASE = "best-case"

VERDICT_CONSISTENT = "consistent"
VERDICT_INCOMPATIBLE = "incompatible"
VERDICT_INCONCLUSIVE = "inconclusive"


def required_subsets(n: int) -> tuple[SubsetMask, ...]:
    """Every nonempty proper subset of n parties, ascending by mask."""
    full = (1 << n) - 1
    return tuple(SubsetMask(bits, n) for bits in range(1, full))


@dataclass(frozen=True, eq=False)
class MarginalSet:
    """Claimed reduced density matrices, keyed by the parties they live on."""

    shape: SpaceShape
    entries: Mapping[SubsetMask, Operator]

    def __post_init__(self) -> None:
        fixed: dict[SubsetMask, Operator] = {}
        for mask in sorted(self.entries, key=lambda m: m.bits):
            op = self.entries[mask]
            if mask.n_parties != self.shape.n_parties:
                raise ValueError("marginal key is over a different party count")
            if mask.is_empty:
                raise ValueError("marginal keys must be nonempty")
            sub = self.shape.subshape(mask)
            if op.shape.dims != sub.dims:
                raise ValueError(
                    f"marginal on parties {mask.parties} has dims {op.shape.dims}, "
                    f"expected {sub.dims}"
                )
            diag = validate_density(op, TOL_INPUT)
            if not diag.passes:
                raise ValueError(
                    f"marginal on parties {mask.parties} is not a density matrix: "
                    f"{diag.describe()}"
                )
            fixed[mask] = op
        object.__setattr__(self, "entries", fixed)

    @classmethod
    def from_global(cls, rho: Operator, masks=None) -> MarginalSet:
        """Marginal set computed from a global state (all proper subsets by default)."""
        if masks is None:
            masks = required_subsets(rho.shape.n_parties)
        return cls(rho.shape, {m: partial_trace(rho, m) for m in masks})


@dataclass(frozen=True)
class CompatReport:
    """Outcome of one compatibility certificate.

    ``lhs`` includes the full-set purity term (the value actually bounded by
    1); ``lhs_proper`` is the same alternating sum restricted to proper
    subsets. A "consistent" verdict only means the necessary condition holds.
    """

    theorem: str
    dims: tuple[int, ...]
    lhs: float | None
    lhs_proper: float | None
    bound: float
    slack: float | None
    verdict: str
    per_subset_purities: dict[SubsetMask, float]
    missing_subsets: tuple[SubsetMask, ...]
    assumed_global_purity: float | str
    tol_verdict: float = TOL_VERDICT


def _certificate(
    marginals: MarginalSet,
    theorem: str,
    global_purity: float,
    recorded_purity: float | str,
) -> CompatReport:
    n = marginals.shape.n_parties
    needed = required_subsets(n)
    purities = {
        mask: purity(op)
        for mask, op in marginals.entries.items()
        if not mask.is_full
    }
    missing = tuple(m for m in needed if m not in purities)
    if missing:
        return CompatReport(
            theorem,
            marginals.shape.dims,
            None,
            None,
            1.0,
            None,
            VERDICT_INCONCLUSIVE,
            purities,
            missing,
            recorded_purity,
        )
    lhs_proper = 0.0
    for mask in needed:
        lhs_proper += purities[mask] if mask.is_odd else -purities[mask]
    full_sign = 1.0 if n % 2 == 1 else -1.0
    lhs = lhs_proper + full_sign * global_purity
    slack = 1.0 - lhs
    verdict = VERDICT_INCOMPATIBLE if slack < -TOL_VERDICT else VERDICT_CONSISTENT
    return CompatReport(
        theorem,
        marginals.shape.dims,
        lhs,
        lhs_proper,
        1.0,
        slack,
        verdict,
        purities,
        (),
        recorded_purity,
    )


def theorem1_check(marginals: MarginalSet) -> CompatReport:
    """Certificate against a common global *pure* state (full-set purity fixed at 1)."""
    return _certificate(marginals, "theorem1", 1.0, 1.0)


def theorem2_check(
    marginals: MarginalSet, global_purity: float | None = None
) -> CompatReport:
    """Certificate against a common global state of an even party count.

    When ``global_purity`` is omitted, the compatibility-friendliest value 1
    is assumed and recorded as "best-case"; the verdict can then only be
    looser, never stricter.
    """
    n = marginals.shape.n_parties
    if n % 2 == 1:
        raise ValueError("this certificate requires an even party count")
    if global_purity is None:
        return _certificate(marginals, "theorem2", 1.0, BEST_CASE)
    g = float(global_purity)
    if not 0.0 < g <= 1.0 + TOL_INPUT:
        raise ValueError(f"global purity must lie in (0, 1], got {g}")
    return _certificate(marginals, "theorem2", g, g)


@dataclass(frozen=True)
class MarginalMismatch:
    """A pair of provided marginals that disagree under partial trace."""

    subset: SubsetMask
    superset: SubsetMask
    max_deviation: float


def consistency_precheck(
    marginals: MarginalSet, tol: float = TOL_INPUT
) -> list[MarginalMismatch]:
    """Cross-check every nested pair of provided marginals.

    For keys A strictly inside B, the B-marginal traced down to A must match
    the provided A-marginal entrywise within ``tol``. Redundant entries are
    legitimate inputs; this check is how they earn their keep.
    """
    keys = sorted(marginals.entries, key=lambda m: (m.cardinality, m.bits))
    out: list[MarginalMismatch] = []
    for small in keys:
        for big in keys:
            if small == big or small.bits & big.bits != small.bits:
                continue
            big_parties = big.parties
            rel = SubsetMask.from_parties(
                (big_parties.index(p) for p in small.parties), big.cardinality
            )
            reduced = partial_trace(marginals.entries[big], rel)
            dev = float(
                np.max(np.abs(reduced.entries - marginals.entries[small].entries))
            )
            if dev > tol:
                out.append(MarginalMismatch(small, big, dev))
    return out


def self_check(rho: Operator) -> CompatReport:
    """Certificate of a known global state against its own marginals.

    Runs the even-N certificate with the true global purity; any valid state
    must come out with nonnegative slack up to numerics.
    """
    if rho.shape.n_parties % 2 == 1:
        raise ValueError("this certificate requires an even party count")
    marginals = MarginalSet.from_global(rho)
    return theorem2_check(marginals, global_purity=purity(rho))
