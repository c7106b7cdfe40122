"""F-polynomials of a trajectory and the separation formula.

``fs[t - 1][i - 1]`` is ``F_i[t]`` as an :class:`MPoly` over the trajectory's
alphabet (the x-slots never occur).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import MPoly, RatFunc
from .seed import MutationTrajectory
from .semifield import SubtractionFreeElem
from .tropical import c_matrices

__all__ = [
    "PolynomialityError",
    "SeparationResult",
    "f_polynomials",
    "check_separation",
    "check_f_periodicity",
    "f_polynomials_by_specialization",
    "z_as_poly",
]


class PolynomialityError(ArithmeticError):
    """The F-recursion produced a non-polynomial quotient."""


def _pos(a):
    return a if a > 0 else 0


def z_as_poly(zs: SubtractionFreeElem) -> MPoly:
    """A z-coefficient (a monomial or a positive constant) as a polynomial."""
    if not zs.den.is_const():
        raise ValueError("z-coefficients must be polynomials")
    return zs.num * (1 / Fraction(zs.den.const_value()))


def f_polynomials(traj: MutationTrajectory, cs=None) -> list[tuple[MPoly, ...]]:
    """F-polynomials by the exchange recursion, with exact division at every step."""
    if cs is None:
        cs = c_matrices(traj)
    a = traj.alphabet
    n, nv = traj.n, a.nvars
    one = MPoly.const(nv, 1)
    F = [one] * n
    out = [tuple(F)]
    for t, k in enumerate(traj.ks):
        s, C = traj.seeds[t], cs[t]
        kk, dk = k - 1, s.d[k - 1]
        up, down = one, one
        for j in range(n):
            c, b = int(C[j, kk]), int(s.B[j, kk])
            yj = a.y(j)
            up = up * yj ** _pos(c) * F[j] ** _pos(b)
            down = down * yj ** _pos(-c) * F[j] ** _pos(-b)
        # Uden^d * P(Unum / Uden), homogenized to stay polynomial
        num = MPoly.zero(nv)
        for sdeg, zs in enumerate(s.z[kk]):
            num = num + z_as_poly(zs) * up ** sdeg * down ** (dk - sdeg)
        q = num.divexact(F[kk])
        if q is None:
            raise PolynomialityError(f"F_{k}[{t + 2}] is not a polynomial")
        F = list(F)
        F[kk] = q
        out.append(tuple(F))
    return out


@dataclass(frozen=True)
class SeparationResult:
    ok: bool
    failure: tuple[int, int] | None = None  # (i, t), 1-based

    def __bool__(self):
        return self.ok


def check_separation(traj: MutationTrajectory, cs=None, fs=None) -> SeparationResult:
    """Check ``y_i[t] = prod_j y_j^{c_ji[t]} F_j[t]^{b_ji[t]}`` for every ``(i, t)``."""
    if cs is None:
        cs = c_matrices(traj)
    if fs is None:
        fs = f_polynomials(traj, cs)
    a = traj.alphabet
    n, nv = traj.n, a.nvars
    for t, s in enumerate(traj.seeds):
        for i in range(n):
            num, den = MPoly.const(nv, 1), MPoly.const(nv, 1)
            for j in range(n):
                c, b = int(cs[t][j, i]), int(s.B[j, i])
                num = num * a.y(j) ** _pos(c) * fs[t][j] ** _pos(b)
                den = den * a.y(j) ** _pos(-c) * fs[t][j] ** _pos(-b)
            y = s.y[i]
            if y.num * den != num * y.den:
                return SeparationResult(False, (i + 1, t + 1))
    return SeparationResult(True)


def check_f_periodicity(traj: MutationTrajectory, fs=None, sigma: Sequence[int] | None = None) -> bool:
    """True iff ``F_{sigma(i)}[m+1] = 1`` for every ``i``; only the last row matters."""
    if fs is None:
        fs = f_polynomials(traj)
    return all(f.is_one() for f in fs[-1])


def f_polynomials_by_specialization(traj: MutationTrajectory, cs=None) -> list[tuple[MPoly, ...]]:
    """Independent route: mutate x with tropical (principal) coefficients, then set x = 1.

    With coefficients in Trop(y, z) the coefficient ``y_k[t]`` is ``y^{c_k[t]}``
    and ``P(y_k[t])`` tropicalizes to ``y^{-d_k [-c_k[t]]_+}``.
    """
    if cs is None:
        cs = c_matrices(traj)
    a = traj.alphabet
    n, nv = traj.n, a.nvars
    xs = [RatFunc(a.x(i)) for i in range(n)]
    x_slots = set(a.x_slots)

    def mono(exps):
        e = [0] * nv
        for j, v in enumerate(exps):
            e[a.y_slots[j]] = int(v)
        return RatFunc.monomial(nv, tuple(e))

    def at_one(x):
        r = x.specialize({i: 1 for i in x_slots}).reduced()
        if not r.den.is_const():
            raise PolynomialityError("specialized cluster variable is not a polynomial")
        return r.num * (1 / Fraction(r.den.const_value()))

    out = [tuple(at_one(x) for x in xs)]
    for t, k in enumerate(traj.ks):
        s, C = traj.seeds[t], cs[t]
        kk, dk = k - 1, s.d[k - 1]
        ck = [int(v) for v in C[:, kk]]
        yhat = mono(ck)
        for j in range(n):
            b = int(s.B[j, kk])
            if b:
                yhat = yhat * xs[j] ** b
        P = RatFunc.const(nv, 0)
        power = RatFunc.const(nv, 1)
        for sdeg, zs in enumerate(s.z[kk]):
            if sdeg:
                power = power * yhat
            P = P + power * RatFunc(z_as_poly(zs))
        m = RatFunc.const(nv, 1)
        for j in range(n):
            e = _pos(-int(s.B[j, kk]))
            if e:
                m = m * xs[j] ** (e * dk)
        ptrop = mono([-dk * _pos(-c) for c in ck])
        xs[kk] = (xs[kk].inverse() * m * P / ptrop).reduced_over(a.x_slots)
        out.append(tuple(at_one(x) for x in xs))
    return out
