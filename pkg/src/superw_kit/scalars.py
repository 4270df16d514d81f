"""Exact coefficients: rationals and rational functions in the deformation parameter eps."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import flint

Rational = Fraction

_ZERO_POLY = flint.fmpq_poly([])
_ONE_POLY = flint.fmpq_poly([1])


class PoleAtEvaluation(ZeroDivisionError):
    """Raised when a rational function is evaluated at a root of its denominator."""


def _to_fmpq(x) -> flint.fmpq:
    if isinstance(x, flint.fmpq):
        return x
    if isinstance(x, int):
        return flint.fmpq(x)
    if isinstance(x, Fraction):
        return flint.fmpq(x.numerator, x.denominator)
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


def _fmpq_to_fraction(x: flint.fmpq) -> Fraction:
    return Fraction(int(x.p), int(x.q))


class Scalar:
    """Element of Q(eps) stored as num/den with den monic and gcd(num, den) = 1."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, value=0):
        if isinstance(value, Scalar):
            self.num, self.den = value.num, value.den
        elif isinstance(value, flint.fmpq_poly):
            self.num, self.den = value, _ONE_POLY
        else:
            self.num, self.den = flint.fmpq_poly([_to_fmpq(value)]), _ONE_POLY
        self._hash = None

    @classmethod
    def _raw(cls, num, den) -> "Scalar":
        s = cls.__new__(cls)
        s.num, s.den, s._hash = num, den, None
        return s

    @classmethod
    def fraction(cls, num, den) -> "Scalar":
        """Canonical form of num/den for polynomials (or constants) num, den."""
        if not isinstance(num, flint.fmpq_poly):
            num = flint.fmpq_poly([_to_fmpq(num)])
        if not isinstance(den, flint.fmpq_poly):
            den = flint.fmpq_poly([_to_fmpq(den)])
        if den.degree() < 0:
            raise ZeroDivisionError("zero denominator")
        if num.degree() < 0:
            return cls._raw(_ZERO_POLY, _ONE_POLY)
        if den.degree() > 0:
            g = num.gcd(den)
            if g.degree() > 0:
                num = num // g
                den = den // g
        lc = den[den.degree()]
        if lc != 1:
            num = num / lc
            den = den / lc
        return cls._raw(num, den)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.degree() < 0

    def __bool__(self) -> bool:
        return self.num.degree() >= 0

    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den.degree() == 0

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        if self.num.degree() < 0:
            return Fraction(0)
        return _fmpq_to_fraction(self.num[0])

    def as_integer(self):
        """The integer value if this Scalar is an integer constant, else None."""
        if not self.is_constant():
            return None
        v = self.constant_value()
        return int(v) if v.denominator == 1 else None

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Scalar":
        if isinstance(other, Scalar):
            return other
        return Scalar(other)

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if self.den.degree() == 0 and o.den.degree() == 0:
            return Scalar._raw(self.num + o.num, _ONE_POLY)
        if self.den == o.den:
            return Scalar.fraction(self.num + o.num, self.den)
        return Scalar.fraction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(-self.num, self.den)

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if self.den.degree() == 0 and o.den.degree() == 0:
            return Scalar._raw(self.num * o.num, _ONE_POLY)
        return Scalar.fraction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero Scalar")
        return Scalar.fraction(self.den, self.num)

    def __truediv__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero Scalar")
        if o.is_constant():
            return Scalar._raw(self.num / o.num[0], self.den)
        return Scalar.fraction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return Scalar._raw(self.num**k, self.den**k)

    # -- comparison / hashing -------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((tuple(_fmpq_to_fraction(c) for c in self.num.coeffs()),
                                   tuple(_fmpq_to_fraction(c) for c in self.den.coeffs())))
        return self._hash

    # -- evaluation -------------------------------------------------------
    def evaluate(self, eps_value) -> Fraction:
        return evaluate(self, eps_value)

    def integer_form(self):
        """(num_coeffs, den_coeffs) as integer lists with den leading coefficient positive."""
        return _integer_form(self)

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Scalar({render(self)!r})"


EPS = Scalar(flint.fmpq_poly([0, 1]))
ZERO = Scalar(0)
ONE = Scalar(1)


def scalar(x) -> Scalar:
    return x if isinstance(x, Scalar) else Scalar(x)


def evaluate(s: Scalar, eps_value) -> Fraction:
    v = _to_fmpq(Fraction(eps_value) if not isinstance(eps_value, (int, Fraction)) else eps_value)
    d = s.den(v)
    if d == 0:
        raise PoleAtEvaluation(f"{render(s)} has a pole at eps = {eps_value}")
    return _fmpq_to_fraction(s.num(v) / d)


def specialize(s: Scalar, eps_value) -> Scalar:
    """Evaluate and return the value as a constant Scalar."""
    return Scalar(evaluate(s, eps_value))


@lru_cache(maxsize=4096)
def _binom_cached(j: int, alpha: Scalar) -> Scalar:
    out = ONE
    for i in range(j):
        out = out * (alpha - i)
    fact = 1
    for i in range(2, j + 1):
        fact *= i
    return out / fact


def gen_binomial(j: int, alpha) -> Scalar:
    """alpha (alpha-1) ... (alpha-j+1) / j!"""
    if j < 0:
        raise ValueError("gen_binomial needs j >= 0")
    return _binom_cached(j, scalar(alpha))


def level_shift() -> Scalar:
    """k + h^vee = (eps + 1)/eps."""
    return (EPS + 1) / EPS


def varkappa() -> Scalar:
    """k + h^vee - 1 = 1/eps."""
    return ONE / EPS


# -- text rendering -----------------------------------------------------------

def _integer_form(s: Scalar):
    from math import gcd, lcm

    num = [_fmpq_to_fraction(c) for c in s.num.coeffs()]
    den = [_fmpq_to_fraction(c) for c in s.den.coeffs()]
    m = 1
    for c in num + den:
        m = lcm(m, c.denominator)
    inum = [int(c * m) for c in num]
    iden = [int(c * m) for c in den]
    g = 0
    for c in inum + iden:
        g = gcd(g, c)
    if g > 1:
        inum = [c // g for c in inum]
        iden = [c // g for c in iden]
    return inum, iden


def _render_poly(coeffs) -> str:
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            mono = str(abs(c))
        else:
            var = "eps" if k == 1 else f"eps^{k}"
            mono = var if abs(c) == 1 else f"{abs(c)}*{var}"
        if not parts:
            parts.append(("-" if c < 0 else "") + mono)
        else:
            parts.append((" - " if c < 0 else " + ") + mono)
    return "".join(parts) if parts else "0"


def _nterms(coeffs) -> int:
    return sum(1 for c in coeffs if c != 0)


def render(s: Scalar) -> str:
    """Canonical text form p(eps)/q(eps) with integer coefficients."""
    if s.is_zero():
        return "0"
    num, den = _integer_form(s)
    p = _render_poly(num)
    if len(den) == 1 and den[0] == 1:
        return p
    q = _render_poly(den)
    if _nterms(num) > 1:
        p = f"({p})"
    if " " in q or "*" in q:
        q = f"({q})"
    return f"{p}/{q}"


def parse_scalar(text: str) -> Scalar:
    """Parse an arithmetic expression in eps (integers, + - * / ^, parentheses)."""
    from .dsl import parse_scalar_expr

    return parse_scalar_expr(text)
