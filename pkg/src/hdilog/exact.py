"""Exact arithmetic kernel.

Sparse multivariate polynomials over the rationals (:class:`MPoly`), rational
functions (:class:`RatFunc`), multivariate gcd (cheap structural cases
here, the general case delegated to sympy's sparse rings), gcd-free
(coprime) basis refinement and exact Sturm real-root counting.

Polynomials carry a fixed arity ``nvars``; exponent vectors are tuples of that
length.  Coefficients are ``int`` when integral and ``Fraction`` otherwise.
Every value is immutable once built.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, lcm
from typing import Iterable, Sequence

import sympy
from sympy.polys.rings import ring as _sympy_ring

__all__ = [
    "MPoly",
    "RatFunc",
    "mpoly_gcd",
    "coprime_basis",
    "factor_rational",
    "sturm_real_root_count",
    "sturm_sequence",
]

_add = operator.add
_sub = operator.sub


def _num(c):
    """Coerce to int or Fraction; integral Fractions collapse to int."""
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, (str, float)):
        return _num(Fraction(c))
    raise TypeError(f"not an exact number: {c!r}")


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return _num(Fraction(a) / b)


class MPoly:
    """Sparse polynomial in ``nvars`` commuting variables over Q."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} does not have arity {nvars}")
                c = _num(c)
                if c:
                    clean[e] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars, c=1):
        c = _num(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, nvars, i, power=1):
        e = [0] * nvars
        e[i] = power
        return cls._raw(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, nvars, exps, c=1):
        c = _num(c)
        return cls._raw(nvars, {tuple(exps): c} if c else {})

    @classmethod
    def from_univariate(cls, coeffs: Sequence, nvars=1, i=0):
        """Build ``sum coeffs[k] * x_i**k``; coefficients may be numbers or MPoly."""
        out = cls.zero(nvars)
        for k, c in enumerate(coeffs):
            if isinstance(c, MPoly):
                out = out + c * cls.var(nvars, i, k)
            elif c:
                out = out + cls.var(nvars, i, k) * c
        return out

    # predicates and accessors

    def is_zero(self):
        return not self.terms

    def is_const(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def const_value(self):
        if not self.is_const():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()), 0)

    def is_monomial(self):
        return len(self.terms) == 1

    def is_one(self):
        return self.is_const() and self.const_value() == 1

    def degree(self, i=None):
        """Degree in variable ``i``, or total degree when ``i`` is None; -1 for zero."""
        if not self.terms:
            return -1
        if i is None:
            return max(sum(e) for e in self.terms)
        return max(e[i] for e in self.terms)

    def degrees(self):
        if not self.terms:
            return (0,) * self.nvars
        return tuple(map(max, *self.terms)) if len(self.terms) > 1 else next(iter(self.terms))

    def min_exps(self):
        if not self.terms:
            return (0,) * self.nvars
        return tuple(map(min, *self.terms)) if len(self.terms) > 1 else next(iter(self.terms))

    def support_vars(self):
        return {i for e in self.terms for i, a in enumerate(e) if a}

    def lead(self):
        """Lexicographically largest exponent and its coefficient."""
        e = max(self.terms)
        return e, self.terms[e]

    def lc(self):
        return self.lead()[1] if self.terms else 0

    def coeffs_nonneg(self):
        return all(c >= 0 for c in self.terms.values())

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), 0)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials over different variable sets")
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other.terms) > len(self.terms):
            self, other = other, self
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _num(v) if isinstance(v, Fraction) else v
            else:
                out.pop(e, None)
        return MPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _num(other)
            if not other:
                return MPoly.zero(self.nvars)
            return MPoly._raw(self.nvars, {e: _num(c * other) for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        get = out.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(map(_add, e1, e2))
                out[e] = get(e, 0) + c1 * c2
        return MPoly._raw(self.nvars, {e: _num(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        if len(self.terms) == 1:
            (e, c), = self.terms.items()
            return MPoly._raw(self.nvars, {tuple(a * k for a in e): _num(c ** k)})
        result = MPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c):
        return self * c

    def shift(self, exps):
        """Multiply by the monomial ``x**exps`` (exps may be negative if the result stays polynomial)."""
        out = {}
        for e, c in self.terms.items():
            ne = tuple(map(_add, e, exps))
            if min(ne) < 0:
                raise ValueError("shift leaves the polynomial ring")
            out[ne] = c
        return MPoly._raw(self.nvars, out)

    def divexact(self, other: "MPoly"):
        """Exact quotient ``self / other`` or None when ``other`` does not divide ``self``."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.terms:
            return MPoly.zero(self.nvars)
        if len(other.terms) == 1:
            (oe, oc), = other.terms.items()
            out = {}
            for e, c in self.terms.items():
                ne = tuple(map(_sub, e, oe))
                if min(ne) < 0:
                    return None
                out[ne] = _div(c, oc)
            return MPoly._raw(self.nvars, out)
        sd, od = self.degrees(), other.degrees()
        if any(b > a for a, b in zip(sd, od)):
            return None
        lt_e, lt_c = other.lead()
        oterms = list(other.terms.items())
        rem = dict(self.terms)
        quot = {}
        while rem:
            e = max(rem)
            c = rem[e]
            d = tuple(map(_sub, e, lt_e))
            if min(d) < 0:
                return None
            f = _div(c, lt_c)
            quot[d] = f
            for oe, oc in oterms:
                k = tuple(map(_add, oe, d))
                v = rem.get(k, 0) - f * oc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return MPoly._raw(self.nvars, {e: _num(c) for e, c in quot.items()})

    def divides(self, other):
        return other.divexact(self) is not None

    # substitution

    def evaluate(self, values):
        """Value at the point ``values`` (one entry per variable)."""
        total = 0
        for e, c in self.terms.items():
            t = c
            for v, a in zip(values, e):
                if a:
                    t = t * v ** a
            total = total + t
        return total

    def specialize(self, assignment: dict):
        """Substitute numbers for some variables (``{slot: value}``); arity is kept."""
        out = {}
        for e, c in self.terms.items():
            e2 = list(e)
            for i, v in assignment.items():
                if e[i]:
                    c = c * v ** e[i]
                    e2[i] = 0
            e2 = tuple(e2)
            out[e2] = out.get(e2, 0) + c
        return MPoly(self.nvars, out)

    def compose(self, images: Sequence["MPoly"]):
        """Substitute a polynomial for every variable."""
        nv = images[0].nvars
        total = MPoly.zero(nv)
        for e, c in self.terms.items():
            t = MPoly.const(nv, c)
            for img, a in zip(images, e):
                if a:
                    t = t * img ** a
            total = total + t
        return total

    def as_univariate(self, i):
        """Coefficient list in variable ``i``; coefficients are MPoly free of ``i``."""
        buckets = {}
        for e, c in self.terms.items():
            k = e[i]
            e2 = e[:i] + (0,) + e[i + 1:]
            buckets.setdefault(k, {})[e2] = c
        deg = max(buckets, default=-1)
        return [MPoly._raw(self.nvars, buckets.get(k, {})) for k in range(deg + 1)]

    def derivative(self, i):
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                out[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
        return MPoly._raw(self.nvars, out)

    # normalization

    def integer_primitive(self):
        """Split as ``const * prim`` with ``prim`` integral, primitive, positive lex-leading coefficient."""
        if not self.terms:
            return Fraction(0), self
        den = reduce(lcm, (Fraction(c).denominator for c in self.terms.values()), 1)
        ints = {e: int(c * den) for e, c in self.terms.items()}
        g = reduce(gcd, ints.values())
        if ints[max(ints)] < 0:
            g = -g
        prim = MPoly._raw(self.nvars, {e: c // g for e, c in ints.items()})
        return Fraction(g, den), prim

    def normalized(self):
        return self.integer_primitive()[1]

    def int_content(self):
        return reduce(gcd, (int(c) for c in self.terms.values()), 0)

    # comparison and display

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.is_const() and self.const_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def to_str(self, names: Sequence[str] | None = None):
        if not self.terms:
            return "0"
        names = names or [f"v{i}" for i in range(self.nvars)]
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), tuple(-a for a in e))):
            c = self.terms[e]
            mono = "*".join(
                n if a == 1 else f"{n}^{a}" for n, a in zip(names, e) if a
            )
            if not mono:
                s = str(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{c}*{mono}" if not isinstance(c, Fraction) else f"({c})*{mono}"
            parts.append(s)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"MPoly({self.to_str()})"


# ---------------------------------------------------------------------------
# gcd


def mpoly_gcd(a: MPoly, b: MPoly) -> MPoly:
    """Greatest common divisor over Q, normalized (integral, primitive, positive leading coefficient)."""
    if a.nvars != b.nvars:
        raise ValueError("polynomials over different variable sets")
    if a.is_zero():
        return b.normalized()
    if b.is_zero():
        return a.normalized()
    _, pa = a.integer_primitive()
    _, pb = b.integer_primitive()
    return _zgcd(pa, pb).normalized()


def _positive(p):
    return -p if p.terms and p.lc() < 0 else p


def _zgcd(a: MPoly, b: MPoly) -> MPoly:
    # gcd over Z of nonzero integral polynomials, up to sign
    ma, mb = a.min_exps(), b.min_exps()
    mono = tuple(map(min, ma, mb))
    if any(ma):
        a = a.shift(tuple(-x for x in ma))
    if any(mb):
        b = b.shift(tuple(-x for x in mb))
    g = _zgcd_monofree(a, b)
    return g.shift(mono) if any(mono) else g


def _zgcd_monofree(a, b):
    n = a.nvars
    if a.is_const() or b.is_const():
        return MPoly.const(n, gcd(a.int_content(), b.int_content()))
    if a == b or a == -b:
        return _positive(a)
    if len(a.terms) > len(b.terms):
        a, b = b, a
    q = b.divexact(a)
    if q is not None and all(isinstance(c, int) for c in q.terms.values()):
        return _positive(a)
    va, vb = a.support_vars(), b.support_vars()
    if not (va & vb):
        return MPoly.const(n, gcd(a.int_content(), b.int_content()))
    return _positive(_ring_gcd(a, b))


@lru_cache(maxsize=None)
def _zz_ring(n):
    R, *_ = _sympy_ring([f"v{i}" for i in range(n)], sympy.ZZ)
    return R


def _ring_gcd(a, b):
    # heuristic gcd of sympy's sparse polynomial rings over ZZ
    R = _zz_ring(a.nvars)
    g = R.from_dict({e: int(c) for e, c in a.terms.items()}).gcd(
        R.from_dict({e: int(c) for e, c in b.terms.items()}))
    return MPoly._raw(a.nvars, {tuple(e): int(c) for e, c in g.items()})


def _list_content(coeffs):
    g = None
    for c in coeffs:
        if c.is_zero():
            continue
        g = _positive(c) if g is None else _zgcd(g, c)
        if g.is_const() and abs(g.const_value()) == 1:
            break
    return _positive(g)


def _content_over(p, main):
    # gcd of the coefficients of p viewed as a polynomial in the main slots
    groups = {}
    for e, c in p.terms.items():
        key = tuple(a if i in main else 0 for i, a in enumerate(e))
        rest = tuple(0 if i in main else a for i, a in enumerate(e))
        groups.setdefault(key, {})[rest] = c
    coeffs = sorted((MPoly._raw(p.nvars, t) for t in groups.values()), key=lambda q: len(q.terms))
    return _list_content(coeffs)


def factor_rational(c) -> dict:
    """Prime factorization of a positive rational as ``{prime: exponent}``."""
    c = Fraction(c)
    if c <= 0:
        raise ValueError(f"cannot factor nonpositive constant {c} over the primes")
    out = dict(sympy.factorint(c.numerator))
    for p, k in sympy.factorint(c.denominator).items():
        out[p] = out.get(p, 0) - k
    return {int(p): int(k) for p, k in out.items() if k}


def _refine(prims):
    basis = []
    for f in prims:
        pending = [f]
        while pending:
            g = pending.pop()
            if g.is_const():
                continue
            for idx, b in enumerate(basis):
                if not (g.support_vars() & b.support_vars()):
                    continue
                h = mpoly_gcd(g, b)
                if h.is_const():
                    continue
                basis.pop(idx)
                pending.extend([h, b.divexact(h), g.divexact(h)])
                break
            else:
                basis.append(g)
    return basis


def coprime_basis(fs: Sequence[MPoly]):
    """Refine ``fs`` into pairwise coprime factors.

    Returns ``(basis, exps)``.  ``basis`` lists the normalized polynomial
    factors first, then the primes occurring in the rational constants (as
    constant polynomials).  Row ``i`` of ``exps`` writes ``fs[i]`` as
    ``prod(basis[j] ** exps[i][j])``.  Negative constants are rejected.
    """
    fs = list(fs)
    if not fs:
        return [], []
    if any(f.is_zero() for f in fs):
        raise ValueError("coprime_basis: input contains the zero polynomial")
    split = [f.integer_primitive() for f in fs]
    polys = _refine([p for _, p in split])
    const_factors = [factor_rational(c) for c, _ in split]
    primes = sorted({p for fac in const_factors for p in fac})
    nv = fs[0].nvars
    basis = polys + [MPoly.const(nv, p) for p in primes]
    exps = []
    for (c, p), fac in zip(split, const_factors):
        row = []
        for b in polys:
            k = 0
            while True:
                q = p.divexact(b)
                if q is None:
                    break
                p, k = q, k + 1
            row.append(k)
        if not p.is_one():
            raise ArithmeticError("coprime refinement failed to reconstruct an input")
        row.extend(fac.get(pr, 0) for pr in primes)
        exps.append(row)
    # polynomial columns in order of first appearance among the inputs
    npoly = len(polys)
    first = [next(i for i, row in enumerate(exps) if row[j]) for j in range(npoly)]
    order = sorted(range(npoly), key=lambda j: (first[j], polys[j].degree()))
    order += list(range(npoly, len(basis)))
    basis = [basis[j] for j in order]
    exps = [[row[j] for j in order] for row in exps]
    return basis, exps


# ---------------------------------------------------------------------------
# univariate helpers and Sturm sequences


def _ucoeffs(p) -> list:
    if isinstance(p, MPoly):
        vs = p.support_vars()
        if len(vs) > 1:
            raise ValueError("expected a univariate polynomial")
        i = vs.pop() if vs else 0
        return [c.const_value() if not c.is_zero() else 0 for c in p.as_univariate(i)] or [0]
    return [_num(c) for c in p]


def _utrim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _udivmod(a, b):
    a, b = _utrim(a), _utrim(b)
    if not b:
        raise ZeroDivisionError
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = [Fraction(x) for x in a]
    while len(r) >= len(b) and r:
        f = r[-1] / b[-1]
        s = len(r) - len(b)
        q[s] = f
        for i, bc in enumerate(b):
            r[i + s] -= f * bc
        r = _utrim(r)
    return q, r


def _ugcd(a, b):
    a, b = _utrim(a), _utrim(b)
    while b:
        a, b = b, _udivmod(a, b)[1]
    return [Fraction(x) / a[-1] for x in a] if a else a


def _uderiv(a):
    return [i * c for i, c in enumerate(a)][1:]


def sturm_sequence(p) -> list[list[Fraction]]:
    """Sturm chain of the squarefree part of ``p`` (ascending coefficient lists)."""
    a = _utrim(_ucoeffs(p))
    if not a:
        raise ValueError("Sturm sequence of the zero polynomial")
    g = _ugcd(a, _uderiv(a))
    if len(g) > 1:
        a = _udivmod(a, g)[0]
    chain = [[Fraction(x) for x in a], [Fraction(x) for x in _uderiv(a)]]
    chain[1] = _utrim(chain[1])
    while chain[-1]:
        r = _udivmod(chain[-2], chain[-1])[1]
        chain.append([-x for x in r])
    chain.pop()
    return chain


def _sign_changes(signs):
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_real_root_count(p) -> int:
    """Number of distinct real roots of a nonzero univariate polynomial."""
    chain = sturm_sequence(p)
    at_pos = [1 if q[-1] > 0 else -1 for q in chain]
    at_neg = [(1 if q[-1] > 0 else -1) * (-1) ** (len(q) - 1) for q in chain]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def sturm_count_in(p, a, b) -> int:
    """Distinct roots in the half-open interval ``(a, b]``."""
    chain = sturm_sequence(p)

    def ev(q, x):
        return sum(c * x ** i for i, c in enumerate(q))

    va = _sign_changes([(ev(q, a) > 0) - (ev(q, a) < 0) for q in chain])
    vb = _sign_changes([(ev(q, b) > 0) - (ev(q, b) < 0) for q in chain])
    return va - vb


# ---------------------------------------------------------------------------
# rational functions


class RatFunc:
    """Quotient ``num / den`` of polynomials; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly | None = None):
        if den is None:
            den = MPoly.const(num.nvars, 1)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.nvars != den.nvars:
            raise ValueError("numerator and denominator over different variable sets")
        self.num = num
        self.den = den

    @property
    def nvars(self):
        return self.num.nvars

    @classmethod
    def const(cls, nvars, c=1):
        return cls(MPoly.const(nvars, c))

    @classmethod
    def var(cls, nvars, i):
        return cls(MPoly.var(nvars, i))

    @classmethod
    def monomial(cls, nvars, exps):
        """Laurent monomial; negative exponents land in the denominator."""
        pos = tuple(max(a, 0) for a in exps)
        neg = tuple(max(-a, 0) for a in exps)
        return cls(MPoly.monomial(nvars, pos), MPoly.monomial(nvars, neg))

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MPoly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k >= 0:
            return RatFunc(self.num ** k, self.den ** k)
        return RatFunc(self.den ** -k, self.num ** -k)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def is_zero(self):
        return self.num.is_zero()

    def reduced(self) -> "RatFunc":
        """Cancel the gcd; the denominator becomes primitive with positive leading coefficient."""
        g = mpoly_gcd(self.num, self.den)
        num = self.num.divexact(g) if not g.is_one() else self.num
        den = self.den.divexact(g) if not g.is_one() else self.den
        c, den = den.integer_primitive()
        return RatFunc(num * (1 / c), den)

    def reduced_over(self, main: Iterable[int]) -> "RatFunc":
        """Same result as :meth:`reduced`, computed by splitting off contents.

        Each side is written as (content in the non-main slots) times (part
        primitive in the main slots).  When the denominator's primitive part
        divides the numerator's, the large gcd is skipped entirely.
        """
        main = frozenset(main)
        r = self.cancel_monomials()
        if r.num.is_zero():
            return RatFunc(r.num, MPoly.const(r.nvars, 1))
        _, num = r.num.integer_primitive()
        cnum, _ = r.num.integer_primitive()
        _, den = r.den.integer_primitive()
        cden, _ = r.den.integer_primitive()
        cn, cd = _content_over(num, main), _content_over(den, main)
        pn, pd = num.divexact(cn), den.divexact(cd)
        g = _zgcd(cn, cd)
        if pd.is_const():
            gp = pd
        else:
            q = pn.divexact(pd)
            gp = pd if q is not None else _zgcd(pn, pd)
        num2 = cn.divexact(g) * pn.divexact(gp)
        den2 = cd.divexact(g) * pd.divexact(gp)
        c, den2 = den2.integer_primitive()
        return RatFunc(num2 * (cnum / (cden * c)), den2)

    def cancel_monomials(self) -> "RatFunc":
        """Cheap partial reduction: strip the common monomial factor."""
        m = tuple(map(min, self.num.min_exps(), self.den.min_exps()))
        if self.num.is_zero() or not any(m):
            return self
        neg = tuple(-a for a in m)
        return RatFunc(self.num.shift(neg), self.den.shift(neg))

    def evaluate(self, values):
        d = self.den.evaluate(values)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        n = self.num.evaluate(values)
        if isinstance(n, int) and isinstance(d, int):
            return Fraction(n, d)
        return n / d

    def specialize(self, assignment):
        return RatFunc(self.num.specialize(assignment), self.den.specialize(assignment))

    def is_laurent(self, slots: Iterable[int] | None = None) -> bool:
        """True when, after reduction, the denominator is a monomial.

        With ``slots`` given, the denominator may be a monomial in those
        slots times a polynomial in the remaining ones.
        """
        r = self.reduced()
        if slots is None:
            return r.den.is_monomial()
        slots = set(slots)
        m = r.den.min_exps()
        shift = tuple(-a if i in slots else 0 for i, a in enumerate(m))
        return not (r.den.shift(shift).support_vars() & slots)

    def to_str(self, names=None):
        if self.den.is_one():
            return self.num.to_str(names)
        return f"({self.num.to_str(names)})/({self.den.to_str(names)})"

    def __repr__(self):
        return f"RatFunc({self.to_str()})"
