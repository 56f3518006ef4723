"""Named multipartite states, seeded samplers, and purification.

Sampling is reproducible across platforms and languages: see
``normal_stream`` for the documented generator construction. Samplers take
explicit seeds, so concurrent sampling is race-free by construction.
"""

from __future__ import annotations

import math

import numpy as np

from .config import TOL_INPUT
from .hilbert import Operator, PureState, SpaceShape, validate_density


def _qubits(n: int) -> SpaceShape:
    return SpaceShape((2,) * n)


def w_state(n: int) -> PureState:
    """(|0...01> + |0...010> + ... + |10...0>)/sqrt(n) on n qubits."""
    if n < 2:
        raise ValueError("w_state needs at least 2 parties")
    amp = np.zeros(1 << n, dtype=complex)
    amp[[1 << k for k in range(n)]] = 1.0 / math.sqrt(n)
    return PureState(_qubits(n), amp)


def ghz_state(n: int) -> PureState:
    """(|0...0> + |1...1>)/sqrt(2) on n qubits."""
    if n < 2:
        raise ValueError("ghz_state needs at least 2 parties")
    amp = np.zeros(1 << n, dtype=complex)
    amp[0] = amp[-1] = 1.0 / math.sqrt(2.0)
    return PureState(_qubits(n), amp)


def product_state(factors) -> PureState:
    """Tensor product of pure states on the concatenated shape."""
    factors = list(factors)
    if not factors:
        raise ValueError("product_state needs at least one factor")
    dims: tuple[int, ...] = ()
    amp = np.ones(1, dtype=complex)
    for f in factors:
        dims = dims + f.shape.dims
        amp = np.kron(amp, f.amplitudes)
    return PureState(SpaceShape(dims), amp)


def normal_stream(seed: int, count: int) -> np.ndarray:
    """``count`` standard normals from a counter-based generator.

    Construction (reproducible in any language with a Philox implementation):
    the Philox4x64-10 generator is keyed directly with ``seed``; each raw
    64-bit word r becomes a uniform u = ((r >> 11) + 1) * 2**-53 in (0, 1];
    consecutive uniform pairs map through Box-Muller,
    z0 = sqrt(-2 ln u1) cos(2 pi u2) and z1 = sqrt(-2 ln u1) sin(2 pi u2).
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    pairs = (count + 1) // 2
    if pairs == 0:
        return np.empty(0)
    raw = np.random.Philox(key=seed).random_raw(2 * pairs)
    u = ((raw >> np.uint64(11)) + np.uint64(1)) * 2.0**-53
    radius = np.sqrt(-2.0 * np.log(u[0::2]))
    angle = 2.0 * np.pi * u[1::2]
    z = np.empty(2 * pairs)
    z[0::2] = radius * np.cos(angle)
    z[1::2] = radius * np.sin(angle)
    return z[:count]


def random_pure(shape: SpaceShape, seed: int) -> PureState:
    """Haar-distributed pure state: normalized i.i.d. complex Gaussians."""
    d = shape.total_dim
    z = normal_stream(seed, 2 * d)
    amp = z[0::2] + 1j * z[1::2]
    amp /= np.linalg.norm(amp)
    return PureState(shape, amp)


def random_mixed(shape: SpaceShape, rank: int, seed: int) -> Operator:
    """Density matrix from tracing a rank-dimensional ancilla off a random pure state."""
    d = shape.total_dim
    if not 1 <= rank <= d:
        raise ValueError(f"rank must be in 1..{d}, got {rank}")
    if rank == 1:
        return random_pure(shape, seed).density()
    ext = SpaceShape(shape.dims + (rank,))
    psi = random_pure(ext, seed)
    m = psi.amplitudes.reshape(d, rank)
    return Operator(shape, m @ m.conj().T)


def purify(rho: Operator) -> PureState:
    """Pure state on shape + ancilla(D) whose ancilla trace reproduces ``rho``.

    Built from the eigendecomposition rho = sum_k lam_k |k><k| as
    sum_k sqrt(lam_k) |k> |e_k>, with eigenvalues sorted descending, each
    eigenvector's first nonzero component made real positive, and zero
    eigenvalues kept so the ancilla dimension is always D.
    """
    diag = validate_density(rho, TOL_INPUT)
    if not diag.passes:
        raise ValueError(f"purify needs a valid density matrix: {diag.describe()}")
    m = rho.entries
    vals, vecs = np.linalg.eigh((m + m.conj().T) / 2.0)
    order = np.argsort(-vals, kind="stable")
    vals = np.clip(vals[order], 0.0, None)
    vecs = vecs[:, order]
    for k in range(vecs.shape[1]):
        col = vecs[:, k]
        nz = np.flatnonzero(np.abs(col) > 1e-12)
        if nz.size:
            col *= col[nz[0]].conj() / abs(col[nz[0]])
    d = rho.shape.total_dim
    # amp[a*D + k] = sqrt(lam_k) v_k[a]: ancilla appended as the last party.
    amp = (vecs * np.sqrt(vals)).reshape(-1)
    return PureState(SpaceShape(rho.shape.dims + (d,)), amp)
