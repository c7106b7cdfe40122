"""Higher-degree Euler and Rogers dilogarithms, and numerical identity checks.

With ``I(u) = int_0^u log P(y) / y dy`` for ``P = P_{d,z}``:

* ``li2_hd(x) = -I(-x)`` for ``x <= 1``;
* ``rogers_hd_tilde(x) = I(x) - log(x) log P(x) / 2`` for ``x >= 0``;
* ``rogers_inf = L~_z(1) + L~_{z*}(1)``.

``I`` is evaluated by adaptive Gauss-Legendre quadrature.  On ``[-1, 0)`` any
factor ``(1 + y)^m`` of ``P`` is split off and integrated in closed form,
because ``log P`` is singular at ``y = -1`` when ``P(-1) = 0``.  Beyond
``u = 1`` the integral continues in the variable ``v = log y``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

import numpy as np
from scipy.special import spence

from .exact import sturm_real_root_count
from .seed import MutationTrajectory, skew_symmetrizer
from .semifield import eval_phi
from .tropical import tropical_signs

__all__ = [
    "DilogParams",
    "QuadratureConfig",
    "QuadratureError",
    "GenericConditionError",
    "check_generic",
    "deflate_minus_one",
    "integrate",
    "li2_hd",
    "rogers_hd_tilde",
    "rogers_inf",
    "random_phi",
    "gid4_sum",
    "IdentityReport",
    "verify_identity",
]


class QuadratureError(ArithmeticError):
    pass


class GenericConditionError(ValueError):
    pass


def _frac(v) -> Fraction:
    # floats convert exactly; strings like "3/2" are accepted
    return Fraction(v)


@dataclass(frozen=True)
class DilogParams:
    """Degree ``d`` and coefficients ``z = (z_0, ..., z_d)`` with ``z_0 = z_d = 1``."""

    d: int
    z: tuple[Fraction, ...]

    def __post_init__(self):
        z = tuple(_frac(v) for v in self.z)
        object.__setattr__(self, "z", z)
        if self.d < 1:
            raise ValueError("degree must be positive")
        if len(z) != self.d + 1:
            raise ValueError(f"expected {self.d + 1} coefficients, got {len(z)}")
        if z[0] != 1 or z[-1] != 1:
            raise ValueError("z_0 and z_d must equal 1")
        if any(v < 0 for v in z):
            raise ValueError("coefficients must be nonnegative")

    @classmethod
    def from_z(cls, z: Sequence) -> "DilogParams":
        return cls(len(z) - 1, tuple(z))

    @property
    def star(self) -> "DilogParams":
        return DilogParams(self.d, tuple(reversed(self.z)))

    @property
    def floats(self) -> tuple[float, ...]:
        return tuple(float(v) for v in self.z)


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-12
    max_depth: int = 40
    order: int = 20


_DEFAULT = QuadratureConfig()


def deflate_minus_one(p: DilogParams) -> tuple[int, list[Fraction]]:
    """``P = (1 + x)^m Q`` with ``Q(-1) != 0``; returns ``(m, Q)`` ascending."""
    a = list(p.z)
    m = 0
    while len(a) > 1 and sum(c * (-1) ** i for i, c in enumerate(a)) == 0:
        # synthetic division by (x + 1), highest degree first
        hi = a[::-1]
        q = [hi[0]]
        for c in hi[1:-1]:
            q.append(c - q[-1])
        a = q[::-1]
        m += 1
    return m, a


def check_generic(p: DilogParams) -> bool:
    """No real root of ``P_{d,z}`` other than ``-1`` (decided exactly by Sturm)."""
    _, q = deflate_minus_one(p)
    if len(q) == 1:
        return True
    return sturm_real_root_count(q) == 0


# ---------------------------------------------------------------------------
# quadrature


@lru_cache(maxsize=None)
def _gauss_legendre(order):
    return np.polynomial.legendre.leggauss(order)


def integrate(f, a: float, b: float, cfg: QuadratureConfig = _DEFAULT) -> float:
    """Adaptive Gauss-Legendre quadrature of a vectorized ``f`` over ``[a, b]``.

    An interval is accepted when the rule on it and the rule on its two
    halves agree to within its share of ``rel_tol`` times the scale of the
    integral.
    """
    if a == b:
        return 0.0
    nodes, weights = _gauss_legendre(cfg.order)

    def rule(lo, hi):
        h, mid = (hi - lo) / 2, (hi + lo) / 2
        vals = f(mid + h * nodes)
        return h * float(weights @ vals), abs(h) * float(weights @ np.abs(vals))

    whole, scale = rule(a, b)
    if scale == 0.0:
        return 0.0
    length = abs(b - a)
    total = 0.0
    stack = [(a, b, whole, 0)]
    while stack:
        lo, hi, est, depth = stack.pop()
        mid = (lo + hi) / 2
        left, sl = rule(lo, mid)
        right, sr = rule(mid, hi)
        allowed = cfg.rel_tol * scale * abs(hi - lo) / length
        if abs(left + right - est) <= max(allowed, 4 * np.finfo(float).eps * (sl + sr)):
            total += left + right
            continue
        if depth >= cfg.max_depth:
            raise QuadratureError(f"tolerance {cfg.rel_tol} not reached on [{lo}, {hi}]")
        stack.append((lo, mid, left, depth + 1))
        stack.append((mid, hi, right, depth + 1))
    return total


def _horner_tail(c, y):
    # sum_{s >= 1} c[s] y^s
    acc = np.zeros_like(y)
    for cs in c[:0:-1]:
        acc = (acc + cs) * y
    return acc


def _log_poly(c, y):
    """``log(sum c_s y^s)`` for ``c[0] = 1`` and arguments with positive value."""
    return np.log1p(_horner_tail(c, y))


def _log_over_y(c):
    def g(y):
        y = np.asarray(y, dtype=float)
        safe = np.where(y == 0.0, 1.0, y)
        return np.where(y == 0.0, c[1] if len(c) > 1 else 0.0, _log_poly(c, safe) / safe)

    return g


def _log_p_exp(c):
    # log P(e^v) for v >= 0, through the reversed polynomial in e^{-v}
    d = len(c) - 1
    rev = c[::-1]

    def g(v):
        v = np.asarray(v, dtype=float)
        return d * v + _log_poly(rev, np.exp(-v))

    return g


def log_p(p: DilogParams, x: float) -> float:
    """``log P_{d,z}(x)`` for ``x >= 0`` without overflow."""
    c = p.floats
    if x <= 1.0:
        return float(_log_poly(c, np.float64(x)))
    return p.d * math.log(x) + float(_log_poly(c[::-1], np.float64(1.0 / x)))


def _classical_li2(x: float) -> float:
    # Li_2(x) for x <= 1
    return float(spence(1.0 - x))


@lru_cache(maxsize=4096)
def _I(p: DilogParams, u: float, cfg: QuadratureConfig) -> float:
    if u == 0.0:
        return 0.0
    c = p.floats
    if u < 0.0:
        if u < -1.0:
            raise ValueError("integral defined only for u >= -1")
        m, q = deflate_minus_one(p)
        qf = tuple(float(v) for v in q)
        smooth = -integrate(_log_over_y(qf), u, 0.0, cfg) if len(qf) > 1 else 0.0
        # int_0^u log(1 + y) / y dy = -Li_2(-u)
        return -m * _classical_li2(-u) + smooth
    if u <= 1.0:
        return integrate(_log_over_y(c), 0.0, u, cfg)
    return _I(p, 1.0, cfg) + integrate(_log_p_exp(c), 0.0, math.log(u), cfg)


def _params(p) -> DilogParams:
    return p if isinstance(p, DilogParams) else DilogParams.from_z(p)


def li2_hd(x: float, p, cfg: QuadratureConfig = _DEFAULT) -> float:
    """Euler dilogarithm of degree d, ``-int_0^{-x} log P(y)/y dy`` for ``x <= 1``."""
    p = _params(p)
    x = float(x)
    if x > 1.0:
        raise ValueError("li2_hd is defined for x <= 1")
    return -_I(p, -x, cfg)


def rogers_hd_tilde(x: float, p, cfg: QuadratureConfig = _DEFAULT) -> float:
    """``L~_{d,z}(x)`` for ``x >= 0`` (0 at the origin by continuity)."""
    p = _params(p)
    x = float(x)
    if x < 0.0:
        raise ValueError("L~ is defined for x >= 0")
    if x == 0.0:
        return 0.0
    if math.isinf(x):
        return rogers_inf(p, cfg)
    return _I(p, x, cfg) - 0.5 * math.log(x) * log_p(p, x)


def rogers_inf(p, cfg: QuadratureConfig = _DEFAULT) -> float:
    """``L~_{d,z}(infinity) = L~_z(1) + L~_{z*}(1)``."""
    p = _params(p)
    return rogers_hd_tilde(1.0, p, cfg) + rogers_hd_tilde(1.0, p.star, cfg)


# ---------------------------------------------------------------------------
# identities along a periodic trajectory


def _random_rational(rng: random.Random, lo=Fraction(1, 4), hi=Fraction(4)) -> Fraction:
    q = rng.randint(1, 16)
    return Fraction(rng.randint(math.ceil(lo * q), math.floor(hi * q)), q)


def _z_params(zrow, phi, alphabet) -> DilogParams:
    return DilogParams.from_z([eval_phi(zs, phi, alphabet) for zs in zrow])


def random_phi(
    traj: MutationTrajectory,
    rng: random.Random,
    z_images: Mapping[str, object] | None = None,
    max_tries: int = 1000,
) -> dict[str, Fraction]:
    """Random positive rationals in [1/4, 4] for y's and z symbols.

    z symbols fixed in ``z_images`` are kept.  A polynomial of odd degree
    always has a real root, so for such rows the root must sit at -1: one free
    symbol per odd row is solved from the linear condition ``P(-1) = 0``.
    Samples are redrawn until every initial ``phi(z_i)`` is generic.
    """
    a = traj.alphabet
    s0 = traj.seeds[0]
    fixed = {k: _frac(v) for k, v in (z_images or {}).items()}
    for _ in range(max_tries):
        phi = {name: _random_rational(rng) for name in a.generator_names}
        phi.update(fixed)
        if not _force_minus_one(s0.z, phi, set(fixed), a):
            continue
        if all(check_generic(_z_params(row, phi, a)) for row in s0.z):
            return phi
        if set(a.z_names) <= set(fixed):
            break
    raise GenericConditionError("no generic z-images found")


def _force_minus_one(rows, phi, frozen, a) -> bool:
    frozen = set(frozen)
    for row in rows:
        if (len(row) - 1) % 2 == 0:
            continue
        coef, const = {}, Fraction(0)
        for sdeg, zs in enumerate(row):
            sign = -1 if sdeg % 2 else 1
            slots = zs.num.support_vars()
            if zs.den.is_one() and zs.num.is_monomial() and zs.num.degree() == 1:
                name = a.names[next(iter(slots))]
                coef[name] = coef.get(name, 0) + sign
            else:
                const += sign * eval_phi(zs, phi, a)
        free = [nm for nm, c in coef.items() if c and nm not in frozen]
        if not free:
            continue
        nm = free[-1]
        rest = const + sum(c * phi[o] for o, c in coef.items() if o != nm)
        val = -rest / coef[nm]
        if not Fraction(1, 4) <= val <= 4:
            return False
        phi[nm] = val
        frozen.add(nm)
    return True


def _check_phi(traj, phi, allow_zero_z):
    a = traj.alphabet
    phi = {k: _frac(v) for k, v in phi.items()}
    for name in a.z_names:
        if name in phi and phi[name] == 0:
            if not allow_zero_z:
                raise ValueError(f"{name} -> 0 needs allow_zero_z=True")
    for row in traj.seeds[0].z:
        vals = []
        for zs in row:
            # zero images are outside the semifield; evaluate by hand
            v = _eval_allow_zero(zs, phi, a)
            vals.append(v)
        if not check_generic(DilogParams.from_z(vals)):
            raise GenericConditionError(f"z-images {[str(v) for v in vals]} violate the generic condition")
    return phi


def _eval_allow_zero(f, phi, a):
    pos = {k: v for k, v in phi.items() if v != 0}
    zero = {a.slot(k) for k, v in phi.items() if v == 0}
    if zero:
        vals = [1] * a.nvars
        for k, v in phi.items():
            vals[a.slot(k)] = v
        return Fraction(f.num.evaluate(vals)) / Fraction(f.den.evaluate(vals))
    return eval_phi(f, pos, a)


def _step_values(traj, phi):
    """Per step: (k, phi(y_k[t]), phi(z_k[t]) as DilogParams)."""
    a = traj.alphabet
    out = []
    for t, k in enumerate(traj.ks):
        s = traj.seeds[t]
        y = _eval_allow_zero(s.y[k - 1], phi, a)
        z = DilogParams.from_z([_eval_allow_zero(zs, phi, a) for zs in s.z[k - 1]])
        out.append((k, y, z))
    return out


def gid4_sum(traj: MutationTrajectory, phi: Mapping[str, object], r_tilde=None,
             cfg: QuadratureConfig = _DEFAULT, allow_zero_z: bool = False) -> float:
    """``sum_t r~_{k_t} L~_{phi(z_{k_t}[t])}(phi(y_{k_t}[t]))``."""
    phi = _check_phi(traj, phi, allow_zero_z)
    if r_tilde is None:
        r_tilde = skew_symmetrizer(traj.seeds[0].B).r_tilde
    return math.fsum(
        r_tilde[k - 1] * rogers_hd_tilde(float(y), z, cfg) for k, y, z in _step_values(traj, phi)
    )


@dataclass(frozen=True)
class IdentityReport:
    form: str
    lhs: float
    rhs: float
    residual: float
    tol: float
    phi: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return abs(self.residual) < self.tol


def verify_identity(
    traj: MutationTrajectory,
    signs=None,
    symmetrizer=None,
    phi="random",
    form: str = "gid5",
    tol: float = 1e-8,
    rng: random.Random | None = None,
    cfg: QuadratureConfig = _DEFAULT,
    allow_zero_z: bool = False,
) -> IdentityReport:
    """Residual of the constant-term identity (``gid5``) or its signed form (``gid6``)."""
    if form not in ("gid5", "gid6"):
        raise ValueError(f"unknown identity form {form!r}")
    if signs is None:
        signs = tropical_signs(traj)
    rt = (symmetrizer or skew_symmetrizer(traj.seeds[0].B)).r_tilde
    if isinstance(phi, str):
        if phi != "random":
            raise ValueError("phi must be a mapping or 'random'")
        phi = random_phi(traj, rng or random.Random(0))
    phi = _check_phi(traj, phi, allow_zero_z)
    steps = _step_values(traj, phi)
    if form == "gid5":
        lhs = math.fsum(rt[k - 1] * rogers_hd_tilde(float(y), z, cfg) for k, y, z in steps)
        rhs = math.fsum(
            rt[k - 1] * rogers_inf(z, cfg) for (k, _, z), e in zip(steps, signs) if e < 0
        )
    else:
        terms = []
        for (k, y, z), e in zip(steps, signs):
            zc = z if e > 0 else z.star
            terms.append(e * rt[k - 1] * rogers_hd_tilde(float(y ** e), zc, cfg))
        lhs, rhs = math.fsum(terms), 0.0
    return IdentityReport(form, lhs, rhs, lhs - rhs, tol, {k: str(v) for k, v in phi.items()})
