"""Generalized seeds and their mutations.

A seed is ``(B, x, y, z)`` with mutation degrees ``d``.  Coefficients live in
the universal semifield Q+(y, z), so the semifield sum in the exchange
polynomial is the ordinary sum.  Mutation directions and permutations are
1-based throughout the public API, matching the usual notation ``mu_1, mu_2``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

import numpy as np

from .exact import MPoly, RatFunc
from .semifield import Alphabet, SubtractionFreeElem, poly_in

__all__ = [
    "NotSkewSymmetrizableError",
    "SymmetrizerData",
    "GCASeed",
    "MutationTrajectory",
    "PeriodReport",
    "skew_symmetrizer",
    "make_initial_seed",
    "mutate_seed",
    "mutate_matrix",
    "yhat_vars",
    "run_sequence",
    "check_sigma_period",
]


class NotSkewSymmetrizableError(ValueError):
    pass


def _pos(a):
    return a if a > 0 else 0


def _frozen(a):
    a = np.array(a, dtype=np.int64)
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class SymmetrizerData:
    r: tuple[int, ...]
    r_lcm: int
    r_tilde: tuple[int, ...]


def skew_symmetrizer(B) -> SymmetrizerData:
    """Minimal positive diagonal ``R`` with ``R @ B`` skew-symmetric, per connected block."""
    B = np.asarray(B, dtype=np.int64)
    n = B.shape[0]
    if B.shape != (n, n):
        raise NotSkewSymmetrizableError("not skew-symmetrizable: matrix is not square")
    for i in range(n):
        if B[i, i]:
            raise NotSkewSymmetrizableError("not skew-symmetrizable: nonzero diagonal")
        for j in range(n):
            if (B[i, j] == 0) != (B[j, i] == 0) or B[i, j] * B[j, i] > 0:
                raise NotSkewSymmetrizableError(
                    f"not skew-symmetrizable: entries ({i + 1},{j + 1}) and ({j + 1},{i + 1})"
                )
    r = [None] * n
    for root in range(n):
        if r[root] is not None:
            continue
        r[root] = Fraction(1)
        block = [root]
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if B[i, j] and r[j] is None:
                    # r_i b_ij = -r_j b_ji
                    r[j] = -r[i] * int(B[i, j]) / int(B[j, i])
                    block.append(j)
                    queue.append(j)
        scale = lcm(*(r[i].denominator for i in block))
        ints = [int(r[i] * scale) for i in block]
        g = 0
        for v in ints:
            g = gcd(g, v)
        for i, v in zip(block, ints):
            r[i] = v // g
    for i in range(n):
        for j in range(n):
            if r[i] * B[i, j] != -r[j] * B[j, i]:
                raise NotSkewSymmetrizableError("not skew-symmetrizable: inconsistent cycle")
    r = tuple(int(v) for v in r)
    m = lcm(*r) if r else 1
    return SymmetrizerData(r, m, tuple(m // v for v in r))


@dataclass(frozen=True, eq=False)
class GCASeed:
    """Seed ``(B, x, y, z)`` with mutation degrees ``d``.

    ``x`` is None for seeds mutated without tracking cluster variables.
    ``z[i]`` holds ``(z_{i,0}, ..., z_{i,d_i})`` with both ends equal to 1.
    """

    alphabet: Alphabet
    d: tuple[int, ...]
    B: np.ndarray
    x: tuple[RatFunc, ...] | None
    y: tuple[SubtractionFreeElem, ...]
    z: tuple[tuple[SubtractionFreeElem, ...], ...]

    @property
    def n(self) -> int:
        return len(self.d)

    def exchange_poly(self, k: int) -> SubtractionFreeElem:
        """``P_{d_k, z_k}(y_k)`` evaluated in the universal semifield (1-based ``k``)."""
        return poly_in(self.z[k - 1], self.y[k - 1])

    def same_as(self, other: "GCASeed", compare_x: bool = True) -> bool:
        if self.d != other.d or not np.array_equal(self.B, other.B):
            return False
        if any(a != b for a, b in zip(self.y, other.y)):
            return False
        if any(a != b for za, zb in zip(self.z, other.z) for a, b in zip(za, zb)):
            return False
        if compare_x and self.x is not None and other.x is not None:
            return all(a == b for a, b in zip(self.x, other.x))
        return True

    def __eq__(self, other):
        if not isinstance(other, GCASeed):
            return NotImplemented
        return self.same_as(other)

    __hash__ = None


def make_initial_seed(B, d: Sequence[int], z=None, track_x: bool = True) -> GCASeed:
    """Initial seed with generator ``x``, ``y`` and the given ``z`` specification.

    ``z[i]`` is a sequence of length ``d[i] + 1`` whose entries are symbol
    names (str) or positive rationals; both endpoints must equal 1.  When
    ``z`` is None every interior coefficient gets a symbol ``z{i}_{s}``.
    """
    B = _frozen(B)
    n = len(d)
    if B.shape != (n, n):
        raise ValueError(f"exchange matrix has shape {B.shape}, expected ({n}, {n})")
    if any(int(di) < 1 for di in d):
        raise ValueError("mutation degrees must be positive")
    skew_symmetrizer(B)
    if z is None:
        z = [[1] + [f"z{i + 1}_{s}" for s in range(1, di)] + [1] for i, di in enumerate(d)]
    if len(z) != n:
        raise ValueError("z specification must have one entry per index")
    names = []
    for i, (zi, di) in enumerate(zip(z, d)):
        if len(zi) != di + 1:
            raise ValueError(f"z_{i + 1} must have {di + 1} entries")
        for s in (0, di):
            if isinstance(zi[s], str) or Fraction(zi[s]) != 1:
                raise ValueError(f"z_{i + 1},{s} must equal 1")
        for v in zi[1:di]:
            if isinstance(v, str) and v not in names:
                names.append(v)
    alphabet = Alphabet(n, tuple(names))
    nv = alphabet.nvars
    zs = []
    for zi in z:
        row = []
        for v in zi:
            if isinstance(v, str):
                row.append(SubtractionFreeElem.gen(nv, alphabet.slot(v)))
            else:
                row.append(SubtractionFreeElem.const(nv, Fraction(v)))
        zs.append(tuple(row))
    x = tuple(RatFunc(alphabet.x(i)) for i in range(n)) if track_x else None
    y = tuple(SubtractionFreeElem.gen(nv, alphabet.y_slots[i]) for i in range(n))
    return GCASeed(alphabet, tuple(int(v) for v in d), B, x, y, tuple(zs))


def mutate_matrix(B, k: int, dk: int) -> np.ndarray:
    """Exchange-matrix mutation at ``k`` (1-based) with degree ``dk``."""
    B = np.asarray(B, dtype=np.int64)
    kk = k - 1
    n = B.shape[0]
    out = B.copy()
    for i in range(n):
        for j in range(n):
            if i == kk or j == kk:
                out[i, j] = -B[i, j]
            else:
                out[i, j] = B[i, j] + dk * (_pos(-B[i, kk]) * B[kk, j] + B[i, kk] * _pos(B[kk, j]))
    return _frozen(out)


def yhat_vars(s: GCASeed) -> list[RatFunc]:
    """``yhat_i = y_i * prod_j x_j ** b_ji`` in the ambient field."""
    if s.x is None:
        raise ValueError("seed was built without cluster variables")
    out = []
    for i in range(s.n):
        v = s.y[i].as_ratfunc()
        for j in range(s.n):
            b = int(s.B[j, i])
            if b:
                v = v * s.x[j] ** b
        out.append(v.cancel_monomials())
    return out


def _exchange_x(s: GCASeed, kk: int) -> RatFunc:
    """``x_k' = x_k^{-1} V^d P(yhat_k) / P|(y_k)`` with ``yhat_k = y_k U / V``, cleared into one fraction.

    ``U`` and ``V`` collect the x_j with positive and negative ``b_jk``.
    Writing ``A = num(y_k) num(U) den(V)`` and ``C = den(y_k) den(U) num(V)``,
    the numerator is ``sum_s z_s A^s C^{d-s}``; no intermediate fraction is formed.
    """
    nv = s.alphabet.nvars
    one = MPoly.const(nv, 1)
    dk = s.d[kk]
    un = ud = vn = vd = one
    for j in range(s.n):
        b = int(s.B[j, kk])
        if b > 0:
            un, ud = un * s.x[j].num ** b, ud * s.x[j].den ** b
        elif b < 0:
            vn, vd = vn * s.x[j].num ** -b, vd * s.x[j].den ** -b
    yk = s.y[kk]
    zs = []
    for z in s.z[kk]:
        if not z.den.is_const():
            raise ValueError("z-coefficients must be polynomial in the z symbols")
        zs.append(z.num * (1 / Fraction(z.den.const_value())))
    A, C = yk.num * un * vd, yk.den * ud * vn
    a_pows, c_pows = [one], [one]
    y_pows, yd_pows = [one], [one]
    for _ in range(dk):
        a_pows.append(a_pows[-1] * A)
        c_pows.append(c_pows[-1] * C)
        y_pows.append(y_pows[-1] * yk.num)
        yd_pows.append(yd_pows[-1] * yk.den)
    top = bottom = MPoly.zero(nv)
    for sdeg, z in enumerate(zs):
        top = top + z * a_pows[sdeg] * c_pows[dk - sdeg]
        bottom = bottom + z * y_pows[sdeg] * yd_pows[dk - sdeg]
    xk = s.x[kk]
    return RatFunc(top * xk.den, bottom * xk.num * (ud * vd) ** dk)


def mutate_seed(s: GCASeed, k: int) -> GCASeed:
    """Mutation of ``s`` in direction ``k`` (1-based)."""
    n = s.n
    if not 1 <= k <= n:
        raise IndexError(f"mutation index {k} out of range 1..{n}")
    kk = k - 1
    dk = s.d[kk]
    B = s.B
    yk = s.y[kk]
    Pk = s.exchange_poly(k).reduced()

    y_new = []
    for i in range(n):
        if i == kk:
            y_new.append(yk.inverse())
            continue
        b = int(B[kk, i])
        v = s.y[i]
        if b:
            v = v * yk ** (dk * _pos(b)) * Pk ** (-b)
            v = v.reduced()
        y_new.append(v)

    x_new = None
    if s.x is not None:
        x_new = list(s.x)
        x_new[kk] = _exchange_x(s, kk).reduced_over(s.alphabet.x_slots)
        x_new = tuple(x_new)

    z_new = list(s.z)
    z_new[kk] = tuple(reversed(s.z[kk]))
    return GCASeed(s.alphabet, s.d, mutate_matrix(B, k, dk), x_new, tuple(y_new), tuple(z_new))


@dataclass(frozen=True, eq=False)
class MutationTrajectory:
    """Seeds ``seeds[0..m]`` with ``seeds[t+1] = mutate(seeds[t], ks[t])``."""

    seeds: tuple[GCASeed, ...]
    ks: tuple[int, ...]
    sigma: tuple[int, ...] | None = None

    @property
    def m(self) -> int:
        return len(self.ks)

    @property
    def n(self) -> int:
        return self.seeds[0].n

    @property
    def alphabet(self) -> Alphabet:
        return self.seeds[0].alphabet

    def __len__(self):
        return len(self.seeds)


def run_sequence(s: GCASeed, ks: Sequence[int], sigma=None) -> MutationTrajectory:
    seeds = [s]
    for k in ks:
        seeds.append(mutate_seed(seeds[-1], int(k)))
    return MutationTrajectory(tuple(seeds), tuple(int(k) for k in ks),
                              None if sigma is None else tuple(sigma))


@dataclass(frozen=True)
class PeriodReport:
    periodic: bool
    sigma: tuple[int, ...] | None
    b_ok: bool
    x_ok: bool | None
    y_ok: bool
    r_ok: bool | None
    z_returns: bool | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)


def _period_parts(first: GCASeed, last: GCASeed, sigma):
    n = first.n
    p = [v - 1 for v in sigma]
    b_ok = all(last.B[p[i], p[j]] == first.B[i, j] for i in range(n) for j in range(n))
    y_ok = b_ok and all(last.y[p[i]] == first.y[i] for i in range(n))
    x_ok = None
    if first.x is not None and last.x is not None:
        x_ok = b_ok and y_ok and all(last.x[p[i]] == first.x[i] for i in range(n))
    return b_ok, x_ok, y_ok


def check_sigma_period(traj: MutationTrajectory, sigma="search") -> PeriodReport:
    """Test whether the last seed equals the first up to the permutation ``sigma``.

    ``sigma`` is a tuple of 1-based images, None (use ``traj.sigma`` or the
    identity) or ``"search"`` (lexicographic scan of all permutations, n <= 8).
    The z-variables are not part of the condition; ``z_returns`` reports them.
    """
    first, last = traj.seeds[0], traj.seeds[-1]
    n = first.n
    if sigma is None:
        sigma = traj.sigma or tuple(range(1, n + 1))
    if sigma == "search":
        if n > 8:
            raise ValueError("permutation search limited to rank <= 8")
        candidates = [tuple(v + 1 for v in p) for p in itertools.permutations(range(n))]
    else:
        sigma = tuple(int(v) for v in sigma)
        if sorted(sigma) != list(range(1, n + 1)):
            raise ValueError(f"{sigma} is not a permutation of 1..{n}")
        candidates = [sigma]
    best = None
    for cand in candidates:
        b_ok, x_ok, y_ok = _period_parts(first, last, cand)
        ok = b_ok and y_ok and x_ok is not False
        if ok:
            best = (cand, b_ok, x_ok, y_ok)
            break
        if best is None and len(candidates) == 1:
            best = (cand, b_ok, x_ok, y_ok)
    if best is None:
        return PeriodReport(False, None, False, None if first.x is None else False, False, None)
    cand, b_ok, x_ok, y_ok = best
    periodic = b_ok and y_ok and x_ok is not False
    r_ok = None
    z_ret = None
    notes = []
    if periodic:
        r = skew_symmetrizer(first.B).r
        r_ok = all(r[cand[i] - 1] == r[i] for i in range(n))
        p = [v - 1 for v in cand]
        z_ret = all(
            a == b for i in range(n) for a, b in zip(last.z[p[i]], first.z[i])
        )
        if first.x is None:
            notes.append("x-variables not tracked; periodicity judged on B and y")
    return PeriodReport(periodic, cand if periodic else None, b_ok, x_ok, y_ok, r_ok, z_ret, tuple(notes))
