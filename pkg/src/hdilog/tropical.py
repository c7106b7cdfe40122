"""Tropical data of a trajectory: C-matrices, tropical signs and G-matrices.

Matrices are numpy int64 arrays indexed so that ``cs[t - 1]`` is ``C[t]``
(the trajectory's seed ``t - 1``).  Columns are the c- and g-vectors.
"""

from __future__ import annotations

import numpy as np

from .seed import MutationTrajectory, skew_symmetrizer
from .semifield import tropicalize

__all__ = [
    "ConsistencyError",
    "SignCoherenceError",
    "c_matrices",
    "tropical_signs",
    "g_matrices",
    "check_duality",
    "column_sign",
]


class ConsistencyError(RuntimeError):
    """Two independent computations of the same object disagree."""


class SignCoherenceError(AssertionError):
    """A c-vector has entries of both signs (or vanishes)."""


def _pos(a):
    return a if a > 0 else 0


def _frozen(a):
    a = np.array(a, dtype=np.int64)
    a.flags.writeable = False
    return a


def _c_step(C, B, k, dk):
    n = C.shape[0]
    out = C.copy()
    for i in range(n):
        cik = int(C[i, k])
        for j in range(n):
            if j == k:
                out[i, j] = -cik
            else:
                bkj = int(B[k, j])
                out[i, j] = C[i, j] + dk * (_pos(-cik) * bkj + cik * _pos(bkj))
    return out


def c_matrices(traj: MutationTrajectory, cross_check: bool = True) -> list[np.ndarray]:
    """C-matrices by recursion, checked column by column against tropicalized y-variables."""
    n = traj.n
    C = np.eye(n, dtype=np.int64)
    out = [_frozen(C)]
    for t, k in enumerate(traj.ks):
        s = traj.seeds[t]
        C = _c_step(C, s.B, k - 1, s.d[k - 1])
        out.append(_frozen(C))
    if cross_check:
        for t, (C, s) in enumerate(zip(out, traj.seeds)):
            for i, y in enumerate(s.y):
                e = tropicalize(y, s.alphabet).exponents
                if tuple(int(v) for v in C[:, i]) != e[:n] or any(e[n:]):
                    raise ConsistencyError(
                        f"c-vector c_{i + 1}[{t + 1}] = {C[:, i].tolist()} but trop(y) = {list(e)}"
                    )
    return out


def column_sign(col) -> int:
    """+1 or -1 for a nonzero sign-coherent vector; raises otherwise."""
    col = [int(v) for v in col]
    if all(v >= 0 for v in col) and any(col):
        return 1
    if all(v <= 0 for v in col) and any(col):
        return -1
    raise SignCoherenceError(f"vector {col} is not sign-coherent")


def tropical_signs(traj: MutationTrajectory, cs: list[np.ndarray] | None = None) -> tuple[int, ...]:
    """``eps_t`` = sign of the mutated c-vector at each step; every column is checked."""
    if cs is None:
        cs = c_matrices(traj)
    for t, C in enumerate(cs):
        for i in range(C.shape[1]):
            try:
                column_sign(C[:, i])
            except SignCoherenceError as e:
                raise SignCoherenceError(f"c_{i + 1}[{t + 1}]: {e}") from None
    return tuple(column_sign(cs[t][:, k - 1]) for t, k in enumerate(traj.ks))


def g_matrices(
    traj: MutationTrajectory,
    signs: tuple[int, ...] | None = None,
    cs: list[np.ndarray] | None = None,
) -> list[np.ndarray]:
    """G-matrices from the piecewise-linear maps ``rho_t`` acting on g-vectors (columns).

    Duality with the C-matrices is verified at every step.
    """
    if cs is None:
        cs = c_matrices(traj)
    if signs is None:
        signs = tropical_signs(traj, cs)
    n = traj.n
    G = np.eye(n, dtype=np.int64)
    out = [_frozen(G)]
    for t, k in enumerate(traj.ks):
        s = traj.seeds[t]
        kk, eps, dk = k - 1, signs[t], s.d[k - 1]
        G = G.copy()
        col = -G[:, kk]
        for j in range(n):
            w = _pos(-eps * int(s.B[j, kk]))
            if w:
                col = col + dk * w * G[:, j]
        G[:, kk] = col
        out.append(_frozen(G))
    r = skew_symmetrizer(traj.seeds[0].B).r
    for t, (G, C) in enumerate(zip(out, cs)):
        if not check_duality(G, C, r):
            raise ConsistencyError(f"duality R^-1 G^T R C = I fails at t = {t + 1}")
    return out


def check_duality(G, C, r) -> bool:
    """``R^{-1} G^T R C = I``, checked in the equivalent integral form ``G^T R C = R``."""
    R = np.diag(np.asarray(r, dtype=np.int64))
    return bool(np.array_equal(G.T @ R @ C, R))
