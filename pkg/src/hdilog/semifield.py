"""Semifields used by the seed machinery.

* the universal semifield Q+(y, z): :class:`SubtractionFreeElem`, a ratio of
  two polynomials with nonnegative coefficients;
* the tropical semifield Trop(y, z): :class:`TropElem`, a Laurent monomial
  with componentwise-minimum addition;
* the positive reals, reached through :func:`eval_phi`.

All polynomial data lives over an :class:`Alphabet`, which fixes the slot
layout ``x_1..x_n, y_1..y_n, <symbolic z names>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .exact import MPoly, RatFunc, mpoly_gcd

__all__ = [
    "Alphabet",
    "SubtractionFreeElem",
    "TropElem",
    "sf_eq",
    "tropicalize",
    "eval_phi",
]


@dataclass(frozen=True)
class Alphabet:
    """Variable layout: n cluster variables, n coefficients, then z symbols."""

    n: int
    z_names: tuple[str, ...] = ()

    @property
    def nvars(self) -> int:
        return 2 * self.n + len(self.z_names)

    @property
    def names(self) -> tuple[str, ...]:
        xs = tuple(f"x{i + 1}" for i in range(self.n))
        ys = tuple(f"y{i + 1}" for i in range(self.n))
        return xs + ys + self.z_names

    @property
    def x_slots(self) -> range:
        return range(self.n)

    @property
    def y_slots(self) -> range:
        return range(self.n, 2 * self.n)

    @property
    def z_slots(self) -> range:
        return range(2 * self.n, self.nvars)

    @property
    def generator_names(self) -> tuple[str, ...]:
        """Generators of the semifield, in TropElem order (y's then z symbols)."""
        return self.names[self.n:]

    def slot(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def x(self, i: int) -> MPoly:
        return MPoly.var(self.nvars, i)

    def y(self, i: int) -> MPoly:
        return MPoly.var(self.nvars, self.n + i)

    def z(self, name: str) -> MPoly:
        return MPoly.var(self.nvars, self.slot(name))

    def fmt(self, p) -> str:
        return p.to_str(self.names)


class SubtractionFreeElem:
    """Element of Q+(y, z) kept as ``num / den`` with nonnegative coefficients.

    There is no canonical form; compare with :func:`sf_eq` (or ``==``).
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly | None = None):
        if den is None:
            den = MPoly.const(num.nvars, 1)
        if num.is_zero() or den.is_zero():
            raise ValueError("subtraction-free elements are nonzero")
        if not (num.coeffs_nonneg() and den.coeffs_nonneg()):
            raise ValueError("numerator and denominator must have nonnegative coefficients")
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num, den):
        e = cls.__new__(cls)
        e.num = num
        e.den = den
        return e

    @classmethod
    def const(cls, nvars, c=1):
        c = Fraction(c)
        if c <= 0:
            raise ValueError("semifield constants are positive")
        return cls(MPoly.const(nvars, c))

    @classmethod
    def gen(cls, nvars, slot):
        return cls._raw(MPoly.var(nvars, slot), MPoly.const(nvars, 1))

    @property
    def nvars(self):
        return self.num.nvars

    def _coerce(self, other):
        if isinstance(other, SubtractionFreeElem):
            return other
        if isinstance(other, (int, Fraction)):
            return SubtractionFreeElem.const(self.nvars, other)
        return NotImplemented

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return SubtractionFreeElem._raw(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __add__(self, other):
        """Semifield addition (ordinary sum of rational functions)."""
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return SubtractionFreeElem._raw(self.num + other.num, self.den)
        return SubtractionFreeElem._raw(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def inverse(self):
        return SubtractionFreeElem._raw(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k >= 0:
            return SubtractionFreeElem._raw(self.num ** k, self.den ** k)
        return SubtractionFreeElem._raw(self.den ** -k, self.num ** -k)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return sf_eq(self, other)

    __hash__ = None

    def as_ratfunc(self) -> RatFunc:
        return RatFunc(self.num, self.den)

    def reduced(self) -> "SubtractionFreeElem":
        """Cancel the gcd of numerator and denominator when both quotients stay subtraction-free."""
        m = tuple(map(min, self.num.min_exps(), self.den.min_exps()))
        num, den = self.num, self.den
        if any(m):
            neg = tuple(-a for a in m)
            num, den = num.shift(neg), den.shift(neg)
        if den.is_const():
            c = den.const_value()
            return SubtractionFreeElem._raw(num * (1 / Fraction(c)), MPoly.const(num.nvars, 1))
        g = mpoly_gcd(num, den)
        if not g.is_one():
            n2, d2 = num.divexact(g), den.divexact(g)
            if n2.coeffs_nonneg() and d2.coeffs_nonneg():
                num, den = n2, d2
        if den.is_const():
            c = den.const_value()
            return SubtractionFreeElem._raw(num * (1 / Fraction(c)), MPoly.const(num.nvars, 1))
        return SubtractionFreeElem._raw(num, den)

    def to_str(self, names=None):
        if self.den.is_one():
            return self.num.to_str(names)
        return f"({self.num.to_str(names)})/({self.den.to_str(names)})"

    def __repr__(self):
        return f"SubtractionFreeElem({self.to_str()})"


def sf_eq(a: SubtractionFreeElem, b: SubtractionFreeElem) -> bool:
    return a.num * b.den == b.num * a.den


@dataclass(frozen=True)
class TropElem:
    """Laurent monomial over the semifield generators (y's, then z symbols)."""

    exponents: tuple[int, ...]

    def __mul__(self, other: "TropElem") -> "TropElem":
        return TropElem(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __truediv__(self, other: "TropElem") -> "TropElem":
        return TropElem(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, k: int) -> "TropElem":
        return TropElem(tuple(a * k for a in self.exponents))

    def oplus(self, other: "TropElem") -> "TropElem":
        """Tropical sum: componentwise minimum of exponents."""
        return TropElem(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def y_part(self, n: int) -> tuple[int, ...]:
        return self.exponents[:n]

    def z_part(self, n: int) -> tuple[int, ...]:
        return self.exponents[n:]


def tropicalize(f: SubtractionFreeElem, alphabet: Alphabet | None = None) -> TropElem:
    """Image under the tropicalization homomorphism Q+(y, z) -> Trop(y, z).

    Without an alphabet every slot is treated as a generator.
    """
    e = tuple(a - b for a, b in zip(f.num.min_exps(), f.den.min_exps()))
    if alphabet is not None:
        e = e[alphabet.n:]
    return TropElem(e)


def eval_phi(
    f: SubtractionFreeElem,
    assign: Mapping[str, object],
    alphabet: Alphabet,
):
    """Value of ``f`` under the semifield map sending each generator to a positive rational.

    ``assign`` maps generator names (``"y1"``, symbolic z names) to values.
    Values may also be floats; the result is then a float.
    """
    values = [1] * alphabet.nvars
    for name, v in assign.items():
        if not isinstance(v, float):
            v = Fraction(v)
        if v <= 0:
            raise ValueError(f"semifield map needs a positive value for {name}, got {v}")
        values[alphabet.slot(name)] = v
    missing = [
        alphabet.names[s]
        for s in list(alphabet.y_slots) + list(alphabet.z_slots)
        if alphabet.names[s] not in assign
        and (any(e[s] for e in f.num.terms) or any(e[s] for e in f.den.terms))
    ]
    if missing:
        raise KeyError(f"no value assigned to {', '.join(missing)}")
    num = f.num.evaluate(values)
    den = f.den.evaluate(values)
    if isinstance(num, float) or isinstance(den, float):
        return num / den
    return Fraction(num) / Fraction(den)


def poly_in(z: Sequence[SubtractionFreeElem], u):
    """``sum_s z[s] * u**s`` for a semifield element or rational function ``u``."""
    total = None
    power = None
    for s, zs in enumerate(z):
        power = u ** 0 if s == 0 else power * u
        term = power * _as(zs, u)
        total = term if total is None else total + term
    return total


def _as(zs, like):
    if isinstance(like, RatFunc) and isinstance(zs, SubtractionFreeElem):
        return zs.as_ratfunc()
    return zs
