"""Exact computations in the exterior square of a multiplicative group.

Every element lives in the free abelian group generated by a coprime basis
of polynomials together with rational primes.  A tensor ``sum a_uv b_u (x) b_v``
is stored as its integer matrix ``a``.  The exterior square is the quotient by
all ``x (x) x``, so an element vanishes exactly when ``a - a^T`` is zero; the
diagonal is irrelevant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .exact import MPoly, RatFunc, coprime_basis
from .seed import MutationTrajectory, skew_symmetrizer
from .semifield import SubtractionFreeElem

__all__ = [
    "WedgeSpace",
    "TensorSquareElem",
    "wedge_sum",
    "is_zero_in_wedge",
    "constancy_terms",
    "verify_constancy",
    "VSequenceReport",
    "v_sequence",
]


def _sides(f):
    """(numerator, denominator) polynomials of a group element."""
    if isinstance(f, (SubtractionFreeElem, RatFunc)):
        return f.num, f.den
    if isinstance(f, MPoly):
        return f, MPoly.const(f.nvars, 1)
    raise TypeError(f"unsupported group element {f!r}")


class WedgeSpace:
    """A coprime basis large enough to express every element handed to it."""

    def __init__(self, elements: Iterable, nvars: int | None = None):
        polys, seen = [], set()
        for f in elements:
            for p in _sides(f):
                if p.is_zero():
                    raise ValueError("zero is not an element of the multiplicative group")
                if p not in seen:
                    seen.add(p)
                    polys.append(p)
        if not polys:
            if nvars is None:
                raise ValueError("empty space needs nvars")
            polys = [MPoly.const(nvars, 1)]
        self.basis, rows = coprime_basis(polys)
        self.nvars = polys[0].nvars
        self._rows = {p: np.array(r, dtype=object) for p, r in zip(polys, rows)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vector(self, f) -> np.ndarray:
        num, den = _sides(f)
        try:
            return self._rows[num] - self._rows[den]
        except KeyError:
            raise KeyError("element not registered with this space") from None

    def element(self, terms: Sequence[tuple[int, object, object]]) -> "TensorSquareElem":
        a = np.zeros((self.dim, self.dim), dtype=object)
        for w, f, g in terms:
            if w:
                a = a + int(w) * np.outer(self.vector(f), self.vector(g))
        return TensorSquareElem(self, a)


@dataclass(frozen=True, eq=False)
class TensorSquareElem:
    """``sum a[u, v] basis_u (x) basis_v`` over the basis of ``space``."""

    space: WedgeSpace
    coeffs: np.ndarray

    @property
    def basis(self):
        return self.space.basis

    def _check(self, other):
        if other.space is not self.space:
            raise ValueError("elements built over different spaces; use a shared WedgeSpace")

    def __add__(self, other):
        self._check(other)
        return TensorSquareElem(self.space, self.coeffs + other.coeffs)

    def __sub__(self, other):
        self._check(other)
        return TensorSquareElem(self.space, self.coeffs - other.coeffs)

    def __neg__(self):
        return TensorSquareElem(self.space, -self.coeffs)

    def __rmul__(self, k: int):
        return TensorSquareElem(self.space, int(k) * self.coeffs)

    def antisymmetric(self) -> np.ndarray:
        """Coordinates in the exterior square: ``a - a^T``."""
        return self.coeffs - self.coeffs.T

    def is_zero_in_wedge(self) -> bool:
        return not self.antisymmetric().any()

    def equals_as_tensor(self, other) -> bool:
        self._check(other)
        return bool((self.coeffs == other.coeffs).all())

    def describe(self, names=None) -> str:
        """Nonzero wedge coordinates ``basis_u ^ basis_v`` (u < v) as text."""
        anti = self.antisymmetric()
        out = []
        for u in range(self.space.dim):
            for v in range(u + 1, self.space.dim):
                if anti[u, v]:
                    bu = self.basis[u].to_str(names)
                    bv = self.basis[v].to_str(names)
                    out.append(f"{anti[u, v]}*({bu})^({bv})")
        return " + ".join(out) if out else "0"


def wedge_sum(terms: Sequence[tuple[int, object, object]]) -> TensorSquareElem:
    """``sum weight * (f (x) g)`` over a coprime basis built from the inputs."""
    terms = list(terms)
    if not terms:
        raise ValueError("empty sum: build the zero element from a WedgeSpace instead")
    space = WedgeSpace([f for _, f, _ in terms] + [g for _, _, g in terms])
    return space.element(terms)


def is_zero_in_wedge(e: TensorSquareElem) -> bool:
    return e.is_zero_in_wedge()


def constancy_terms(traj: MutationTrajectory, r_tilde=None) -> list[tuple[int, object, object]]:
    """``r~_{k_t} (y_{k_t}[t], P(y_{k_t}[t]))`` for every step."""
    if r_tilde is None:
        r_tilde = skew_symmetrizer(traj.seeds[0].B).r_tilde
    out = []
    for t, k in enumerate(traj.ks):
        s = traj.seeds[t]
        out.append((r_tilde[k - 1], s.y[k - 1], s.exchange_poly(k)))
    return out


def verify_constancy(traj: MutationTrajectory, signs=None, symmetrizer=None) -> bool:
    """Whether the constancy sum vanishes in the exterior square.

    ``signs`` is accepted for interface symmetry; the sum does not use it.
    """
    rt = None if symmetrizer is None else symmetrizer.r_tilde
    terms = constancy_terms(traj, rt)
    if not terms:
        return True
    return wedge_sum(terms).is_zero_in_wedge()


@dataclass(frozen=True, eq=False)
class VSequenceReport:
    space: WedgeSpace
    V: tuple[TensorSquareElem, ...]
    step_ok: tuple[bool, ...]
    v1_zero: bool
    telescopes: bool  # V[m+1] - V[1] equals the constancy sum

    @property
    def ok(self) -> bool:
        return self.v1_zero and all(self.step_ok) and self.telescopes


def _v_terms(s, F, rt):
    n = s.n
    terms = [(rt[i], F[i], s.y[i]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            w = int(s.B[i, j]) * rt[j]
            if w:
                terms.append((w, F[i], F[j]))
    return terms


def v_sequence(traj: MutationTrajectory, fs, symmetrizer=None) -> VSequenceReport:
    """``V[t]`` for every seed, and the per-step difference check against the exchange term."""
    sym = symmetrizer or skew_symmetrizer(traj.seeds[0].B)
    rt = sym.r_tilde
    steps = constancy_terms(traj, rt)
    elems = []
    for s, F in zip(traj.seeds, fs):
        elems.extend(F)
        elems.extend(s.y)
    for _, y, p in steps:
        elems.extend((y, p))
    space = WedgeSpace(elems, traj.alphabet.nvars)
    V = tuple(space.element(_v_terms(s, F, rt)) for s, F in zip(traj.seeds, fs))
    step_ok = tuple(
        (V[t + 1] - V[t] - space.element([steps[t]])).is_zero_in_wedge()
        for t in range(traj.m)
    )
    total = space.element(steps)
    return VSequenceReport(
        space, V, step_ok, V[0].is_zero_in_wedge(), (V[-1] - V[0] - total).is_zero_in_wedge()
    )
