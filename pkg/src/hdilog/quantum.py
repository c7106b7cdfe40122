"""Truncated quantum-torus check of the quantum dilogarithm identity in tropical form.

Series live in the completion of the quantum torus along the nonnegative
cone, with ``Y^a Y^b = q^{-<a, b>} Y^{a + b}``.  Coefficients are exact
rational functions of ``q`` whose denominators are products of cyclotomic
polynomials (every denominator comes from some ``q^{2 r n} - 1``); the
numerators may depend polynomially on symbolic z-variables.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

import sympy

from .exact import MPoly
from .seed import MutationTrajectory, skew_symmetrizer
from .semifield import SubtractionFreeElem
from .tropical import SignCoherenceError, c_matrices, tropical_signs

__all__ = [
    "QRing",
    "QRat",
    "QTorusContext",
    "QSeriesElem",
    "PsiParams",
    "psi_coeffs",
    "psi_series",
    "qtorus_mul",
    "series_inverse",
    "QuantumReport",
    "verify_quantum_identity",
]


@lru_cache(maxsize=None)
def _divisors(n):
    return tuple(int(e) for e in sympy.divisors(n))


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(e):
    p = sympy.Poly(sympy.cyclotomic_poly(e, sympy.Symbol("q")))
    return tuple(int(c) for c in reversed(p.all_coeffs()))


class QRing:
    """Coefficient ring: slot 0 is ``q``, the remaining slots are z symbols."""

    def __init__(self, z_names: Sequence[str] = ()):
        self.z_names = tuple(z_names)
        self.nvars = 1 + len(self.z_names)
        self._cyc = {}

    def cyclotomic(self, e) -> MPoly:
        if e not in self._cyc:
            self._cyc[e] = MPoly.from_univariate(_cyclotomic_coeffs(e), self.nvars, 0)
        return self._cyc[e]

    def zero(self):
        return QRat(self, MPoly.zero(self.nvars))

    def one(self):
        return self.const(1)

    def const(self, c):
        return QRat(self, MPoly.const(self.nvars, Fraction(c)))

    def q_power(self, k: int):
        return QRat(self, MPoly.const(self.nvars, 1), qshift=k)

    def symbol(self, name: str):
        return QRat(self, MPoly.var(self.nvars, 1 + self.z_names.index(name)))

    def q_power_minus_one(self, k: int):
        """``q^k - 1`` as a pure denominator-friendly element (``k > 0``)."""
        num = MPoly.const(self.nvars, 1)
        for e in _divisors(k):
            num = num * self.cyclotomic(e)
        return QRat(self, num)


class QRat:
    """``q^qshift * num / prod_e Phi_e(q)^den[e]`` with ``num`` free of negative powers."""

    __slots__ = ("ring", "num", "qshift", "den")

    def __init__(self, ring: QRing, num: MPoly, qshift: int = 0, den: Mapping[int, int] | None = None):
        self.ring = ring
        self.num = num
        self.qshift = qshift
        self.den = Counter({e: k for e, k in (den or {}).items() if k})
        self._normalize_q()

    def _normalize_q(self):
        if self.num.is_zero():
            self.qshift = 0
            self.den = Counter()
            return
        m = min(e[0] for e in self.num.terms)
        if m:
            sh = (-m,) + (0,) * (self.num.nvars - 1)
            self.num = self.num.shift(sh)
            self.qshift += m

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _lift(self, den: Counter) -> MPoly:
        num = self.num
        for e, k in den.items():
            extra = k - self.den.get(e, 0)
            if extra:
                num = num * self.ring.cyclotomic(e) ** extra
        return num

    def __add__(self, other: "QRat") -> "QRat":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        den = self.den | other.den
        a, b = self._lift(den), other._lift(den)
        s = min(self.qshift, other.qshift)
        nv = self.num.nvars
        if self.qshift > s:
            a = a.shift((self.qshift - s,) + (0,) * (nv - 1))
        if other.qshift > s:
            b = b.shift((other.qshift - s,) + (0,) * (nv - 1))
        return QRat(self.ring, a + b, s, den)

    def __neg__(self):
        return QRat(self.ring, -self.num, self.qshift, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "QRat") -> "QRat":
        if self.is_zero() or other.is_zero():
            return self.ring.zero()
        return QRat(self.ring, self.num * other.num, self.qshift + other.qshift, self.den + other.den)

    def times_q(self, k: int) -> "QRat":
        if self.is_zero():
            return self
        return QRat(self.ring, self.num, self.qshift + k, self.den)

    def over_q_power_minus_one(self, k: int) -> "QRat":
        """Divide by ``q^k - 1``."""
        den = Counter(self.den)
        for e in _divisors(k):
            den[e] += 1
        return QRat(self.ring, self.num, self.qshift, den)

    def reduced(self) -> "QRat":
        """Cancel cyclotomic factors of the denominator that divide the numerator."""
        if self.is_zero():
            return self
        num, den = self.num, Counter(self.den)
        for e in sorted(den):
            phi = self.ring.cyclotomic(e)
            while den[e]:
                q = num.divexact(phi)
                if q is None:
                    break
                num, den[e] = q, den[e] - 1
        return QRat(self.ring, num, self.qshift, den)

    def __eq__(self, other):
        if not isinstance(other, QRat):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def to_str(self) -> str:
        names = ("q",) + self.ring.z_names
        if self.is_zero():
            return "0"
        s = self.num.to_str(names)
        if self.qshift:
            s = f"q^{self.qshift}*({s})"
        if self.den:
            s += " / (" + "*".join(
                f"Phi{e}" + (f"^{k}" if k > 1 else "") for e, k in sorted(self.den.items())
            ) + ")"
        return s

    def __repr__(self):
        return f"QRat({self.to_str()})"


@dataclass(frozen=True, eq=False)
class QTorusContext:
    """Quantum torus data: pairing ``<a, b> = sum a_i r_i b_ij b_j`` and truncation ``N``."""

    B: tuple[tuple[int, ...], ...]
    r: tuple[int, ...]
    N: int
    ring: QRing

    @classmethod
    def create(cls, B, N: int, ring: QRing, r=None):
        B = tuple(tuple(int(v) for v in row) for row in B)
        if r is None:
            r = skew_symmetrizer(B).r
        return cls(B, tuple(int(v) for v in r), int(N), ring)

    @property
    def n(self) -> int:
        return len(self.r)

    def pairing(self, a, b) -> int:
        n = self.n
        return sum(a[i] * self.r[i] * self.B[i][j] * b[j] for i in range(n) for j in range(n) if a[i] and b[j])

    def zero(self) -> "QSeriesElem":
        return QSeriesElem(self, {})

    def one(self) -> "QSeriesElem":
        return QSeriesElem(self, {(0,) * self.n: self.ring.one()})

    def monomial(self, alpha, coeff: QRat | None = None) -> "QSeriesElem":
        alpha = tuple(int(v) for v in alpha)
        if any(v < 0 for v in alpha):
            raise ValueError("series are supported on the nonnegative cone")
        if sum(alpha) > self.N:
            return self.zero()
        return QSeriesElem(self, {alpha: coeff if coeff is not None else self.ring.one()})


class QSeriesElem:
    """Truncated series ``sum_a c_a Y^a`` over ``a >= 0`` with ``|a| <= N``."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: QTorusContext, terms: dict):
        self.ctx = ctx
        self.terms = {a: c for a, c in terms.items() if not c.is_zero()}

    def __add__(self, other):
        out = dict(self.terms)
        for a, c in other.terms.items():
            out[a] = out[a] + c if a in out else c
        return QSeriesElem(self.ctx, out)

    def __neg__(self):
        return QSeriesElem(self.ctx, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return qtorus_mul(self, other)

    def constant(self) -> QRat:
        return self.terms.get((0,) * self.ctx.n, self.ctx.ring.zero())

    def reduced(self) -> "QSeriesElem":
        return QSeriesElem(self.ctx, {a: c.reduced() for a, c in self.terms.items()})

    def equals(self, other) -> bool:
        return not (self - other).terms

    def is_one(self) -> bool:
        return self.equals(self.ctx.one())

    def __repr__(self):
        inner = " + ".join(f"[{c.to_str()}]Y^{a}" for a, c in sorted(self.terms.items()))
        return f"QSeriesElem({inner or '0'})"


def qtorus_mul(a: QSeriesElem, b: QSeriesElem) -> QSeriesElem:
    """Twisted product ``Y^x Y^y = q^{-<x, y>} Y^{x + y}``, truncated at total degree N."""
    ctx = a.ctx
    if b.ctx is not ctx and (b.ctx.B != ctx.B or b.ctx.r != ctx.r or b.ctx.N != ctx.N):
        raise ValueError("factors belong to different quantum tori")
    N = ctx.N
    out: dict = {}
    for x, cx in a.terms.items():
        dx = sum(x)
        for y, cy in b.terms.items():
            if dx + sum(y) > N:
                continue
            xy = tuple(u + v for u, v in zip(x, y))
            term = (cx * cy).times_q(-ctx.pairing(x, y))
            out[xy] = out[xy] + term if xy in out else term
    return QSeriesElem(ctx, out).reduced()


def series_inverse(a: QSeriesElem) -> QSeriesElem:
    """Inverse of a series with constant term 1, as the geometric series in ``1 - a``."""
    ctx = a.ctx
    if not (a.constant() - ctx.ring.one()).is_zero():
        raise ValueError("series_inverse needs constant term 1")
    u = ctx.one() - a
    out, power = ctx.one(), ctx.one()
    for _ in range(ctx.N):
        power = qtorus_mul(power, u)
        if not power.terms:
            break
        out = out + power
    return out.reduced()


@dataclass(frozen=True)
class PsiParams:
    """``Psi_{d, z, q^r}`` evaluated at ``Y^alpha``; ``z`` entries are rationals or symbol names."""

    d: int
    z: tuple
    r: int
    alpha: tuple[int, ...]


def _coeff(ring: QRing, v) -> QRat:
    if isinstance(v, QRat):
        return v
    if isinstance(v, str):
        return ring.symbol(v)
    return ring.const(v)


def psi_coeffs(p: PsiParams, N: int, ring: QRing) -> list[QRat]:
    """``c_0..c_N`` of ``Psi(x) = prod_k P(q^{2k+1} x)^{-1}`` with base ``q^r``.

    From ``Psi(q^2 x) = Psi(x) P(q x)``:
    ``c_n (q^{2n} - 1) = sum_{s=1}^{min(d, n)} z_s q^s c_{n-s}``.
    """
    if len(p.z) != p.d + 1:
        raise ValueError("z must have d + 1 entries")
    z = [_coeff(ring, v) for v in p.z]
    c = [ring.one()]
    for n in range(1, N + 1):
        acc = ring.zero()
        for s in range(1, min(p.d, n) + 1):
            acc = acc + (z[s] * c[n - s]).times_q(s * p.r)
        c.append(acc.over_q_power_minus_one(2 * n * p.r).reduced())
    return c


def psi_series(p: PsiParams, ctx: QTorusContext) -> QSeriesElem:
    alpha = tuple(int(v) for v in p.alpha)
    deg = sum(alpha)
    if any(v < 0 for v in alpha) or deg == 0:
        raise ValueError("Psi argument must be a nonzero vector in the nonnegative cone")
    cs = psi_coeffs(p, ctx.N // deg, ctx.ring)
    # (Y^a)^n = Y^{n a} since <a, a> = 0
    return QSeriesElem(ctx, {tuple(n * v for v in alpha): cn for n, cn in enumerate(cs)})


@dataclass(frozen=True)
class QuantumReport:
    N: int
    ok: bool
    factors: tuple[tuple[int, int, tuple[int, ...], tuple[str, ...]], ...]  # (k, eps, alpha, z)
    nonzero: tuple[tuple[tuple[int, ...], str], ...]  # lowest-degree nonzero residuals

    @property
    def first_residual(self):
        return self.nonzero[0] if self.nonzero else None


def _z_entry(zs: SubtractionFreeElem, alphabet):
    """Symbol name or rational constant for a z-coefficient."""
    if zs.den.is_one() and zs.num.is_monomial() and zs.num.degree() == 1:
        (e, c), = zs.num.terms.items()
        if c == 1:
            return alphabet.names[e.index(1)]
    if zs.num.is_const() and zs.den.is_const():
        return Fraction(zs.num.const_value()) / Fraction(zs.den.const_value())
    raise ValueError("z-coefficients must be symbols or constants")


def verify_quantum_identity(
    traj: MutationTrajectory,
    N: int = 8,
    cs=None,
    signs=None,
    z_convention: str = "circ",
    report_limit: int = 5,
    symmetrizer=None,
) -> QuantumReport:
    """Check that the ordered product of ``Psi(Y^{eps_t c_{k_t}[t]})^{eps_t}`` is 1 up to degree N.

    ``z_convention="circ"`` uses ``z_{k_t}[t]`` for ``eps_t = 1`` and its
    reverse for ``eps_t = -1``, as in the signed classical identity;
    ``"literal"`` uses ``z_{k_t}[t]`` throughout.
    """
    if z_convention not in ("circ", "literal"):
        raise ValueError("z_convention must be 'circ' or 'literal'")
    if cs is None:
        cs = c_matrices(traj)
    if signs is None:
        signs = tropical_signs(traj, cs)
    a = traj.alphabet
    ring = QRing(a.z_names)
    s0 = traj.seeds[0]
    sym = symmetrizer or skew_symmetrizer(s0.B)
    ctx = QTorusContext.create(s0.B.tolist(), N, ring, sym.r)
    product = ctx.one()
    factors = []
    for t, k in enumerate(traj.ks):
        s, eps = traj.seeds[t], signs[t]
        alpha = tuple(eps * int(v) for v in cs[t][:, k - 1])
        if any(v < 0 for v in alpha):
            raise SignCoherenceError(f"eps_t c_k[t] = {alpha} leaves the nonnegative cone at t = {t + 1}")
        z = [_z_entry(zs, a) for zs in s.z[k - 1]]
        if eps < 0 and z_convention == "circ":
            z = z[::-1]
        psi = psi_series(PsiParams(s.d[k - 1], tuple(z), sym.r[k - 1], alpha), ctx)
        if eps < 0:
            psi = series_inverse(psi)
        product = qtorus_mul(product, psi)
        factors.append((k, eps, alpha, tuple(str(v) for v in z)))
    resid = product - ctx.one()
    bad = sorted(resid.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    nonzero = tuple((al, c.reduced().to_str()) for al, c in bad[:report_limit])
    return QuantumReport(N, not bad, tuple(factors), nonzero)
