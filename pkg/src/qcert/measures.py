"""Linear-entropy quantities and the multipartite measure E via three routes.

For an even number of parties the measure is the signed sum of bipartite
mutual informations over the two partition classes (both blocks odd minus
both blocks even). It equals 2^N times the all-antisymmetric two-copy
expectation, and also an alternating sum of subset purities. The three
routes are implemented independently and must agree within TOL_ROUTE.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import TOL_ROUTE
from .hilbert import (
    Operator,
    PureState,
    SubsetMask,
    _check_mask,
    partial_trace,
    purity,
)
from .observables import SignPattern, expectation_pure

ODD_N_ERROR = "partition classes undefined for odd N"


def _require_even(n: int) -> None:
    if n % 2 == 1:
        raise ValueError(ODD_N_ERROR)


def linear_entropy(rho: Operator) -> float:
    """1 - Tr rho^2."""
    return 1.0 - purity(rho)


def mixedness(rho: Operator) -> float:
    """Disorder of a state; identical to ``linear_entropy``, kept as a named alias."""
    return linear_entropy(rho)


def mutual_information(rho_ab: Operator, split: SubsetMask) -> float:
    """Linear-entropy mutual information S_A + S_B - S_AB for a bipartition."""
    _check_mask(rho_ab.shape, split)
    if split.is_empty or split.is_full:
        raise ValueError("split must be a nonempty proper subset")
    s_a = linear_entropy(partial_trace(rho_ab, split))
    s_b = linear_entropy(partial_trace(rho_ab, split.complement()))
    return s_a + s_b - linear_entropy(rho_ab)


@dataclass(frozen=True)
class Bipartition:
    """An unordered bipartition, canonically keyed by the block holding party 0."""

    a: SubsetMask

    def __post_init__(self) -> None:
        if self.a.is_empty or self.a.is_full:
            raise ValueError("a bipartition block must be a nonempty proper subset")
        if not self.a.contains(0):
            raise ValueError("canonical bipartition block must contain party 0")

    @classmethod
    def from_mask(cls, mask: SubsetMask) -> Bipartition:
        return cls(mask if mask.contains(0) else mask.complement())

    @property
    def b(self) -> SubsetMask:
        return self.a.complement()

    @property
    def partition_class(self) -> str:
        """'P_I' when both blocks are odd, 'P_II' when both are even."""
        _require_even(self.a.n_parties)
        return "P_I" if self.a.is_odd else "P_II"


def enumerate_partitions(n: int) -> list[Bipartition]:
    """All 2^(n-1) - 1 unordered bipartitions of an even party count, classified."""
    if n < 2:
        raise ValueError("need at least 2 parties")
    _require_even(n)
    full = (1 << n) - 1
    return [
        Bipartition(SubsetMask(bits, n))
        for bits in range(1, full)
        if bits & 1
    ]


def marginal_purity(psi: PureState, subset: SubsetMask) -> float:
    """Tr rho_A^2 for a marginal of a pure state, without forming the global density.

    Contracts the smaller side of the cut; for a pure state both sides share
    the same Schmidt spectrum so the value is identical.
    """
    _check_mask(psi.shape, subset)
    amp = psi.amplitudes
    if subset.is_empty or subset.is_full:
        nrm2 = float(np.vdot(amp, amp).real)
        return nrm2 * nrm2
    n = psi.shape.n_parties
    side = subset if 2 * subset.cardinality <= n else subset.complement()
    kept = side.parties
    rest = side.complement().parties
    t = amp.reshape(psi.shape.dims)
    m = np.transpose(t, kept + rest).reshape(
        int(np.prod([psi.shape.dims[p] for p in kept])), -1
    )
    g = m @ m.conj().T
    return float(np.einsum("ab,ba->", g, g).real)


def subset_purities(psi: PureState) -> dict[SubsetMask, float]:
    """Marginal purities of every nonempty proper subset, in ascending mask order."""
    n = psi.shape.n_parties
    full = (1 << n) - 1
    return {
        SubsetMask(bits, n): marginal_purity(psi, SubsetMask(bits, n))
        for bits in range(1, full)
    }


def entanglement_E_partitions(psi: PureState) -> float:
    """E as the signed sum of bipartite mutual informations over partition classes."""
    n = psi.shape.n_parties
    _require_even(n)
    s_global = 1.0 - marginal_purity(psi, psi.shape.full_mask())
    total = 0.0
    for part in enumerate_partitions(n):
        s = (
            (1.0 - marginal_purity(psi, part.a))
            + (1.0 - marginal_purity(psi, part.b))
            - s_global
        )
        total += s if part.partition_class == "P_I" else -s
    return total


def entanglement_E_projector(psi: PureState) -> float:
    """E as 2^N times the all-antisymmetric two-copy expectation.

    Evaluable for any party count; for odd N the value vanishes.
    """
    n = psi.shape.n_parties
    return float(2**n) * expectation_pure(psi, SignPattern.all_minus(n))


def entanglement_E_subset_sum(psi: PureState) -> float:
    """E as 2 - sum of odd-subset purities + sum of proper even-subset purities."""
    _require_even(psi.shape.n_parties)
    odd = even = 0.0
    for mask, p in subset_purities(psi).items():
        if mask.is_odd:
            odd += p
        else:
            even += p
    return 2.0 - odd + even


def i_concurrence_sq(psi: PureState, subset: SubsetMask) -> float:
    """Squared I-concurrence 2(1 - Tr rho_A^2) of the cut A | rest.

    Zero by convention when the subset is empty or the full party set.
    """
    _check_mask(psi.shape, subset)
    if subset.is_empty or subset.is_full:
        return 0.0
    return 2.0 * (1.0 - marginal_purity(psi, subset))


@dataclass(frozen=True)
class MeasureReport:
    """Values of E from every applicable route plus the purities they used."""

    dims: tuple[int, ...]
    value_projector: float
    value_partitions: float | None
    value_subset_sum: float | None
    per_subset_purities: dict[SubsetMask, float]
    tol_route: float = TOL_ROUTE

    def route_values(self) -> dict[str, float]:
        values = {"projector": self.value_projector}
        if self.value_partitions is not None:
            values["partitions"] = self.value_partitions
        if self.value_subset_sum is not None:
            values["subset_sum"] = self.value_subset_sum
        return values

    def max_route_delta(self) -> float | None:
        vals = list(self.route_values().values())
        if len(vals) < 2:
            return None
        return max(abs(x - y) for i, x in enumerate(vals) for y in vals[i + 1 :])


def measure_all(psi: PureState) -> MeasureReport:
    """Evaluate every applicable route; partition forms are omitted for odd N."""
    n = psi.shape.n_parties
    purities = subset_purities(psi)
    projector = entanglement_E_projector(psi)
    if n % 2 == 0:
        partitions = entanglement_E_partitions(psi)
        subset_sum = entanglement_E_subset_sum(psi)
    else:
        partitions = None
        subset_sum = None
    return MeasureReport(psi.shape.dims, projector, partitions, subset_sum, purities)
