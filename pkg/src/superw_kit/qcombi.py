"""Truncated q-series with exact rational coefficients.

Exponents are stored as integers in v with v^2 = q, so half-integer powers of q
are exact.  A series carries its precision ``prec`` (largest v-exponent whose
coefficient is known); every operation propagates the minimum precision of its
operands.  Public functions take a truncation ``trunc`` in powers of q.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

F = Fraction


def _v(q_exp) -> int:
    """q-exponent (integer or half-integer) as a v-exponent."""
    e = F(q_exp) * 2
    if e.denominator != 1:
        raise ValueError(f"q-exponent {q_exp} is not a half-integer")
    return int(e)


def _exp(e: Fraction) -> str:
    return str(e) if e.denominator == 1 and e >= 0 else f"({e})"


class QSeries:
    """sum_k c_k v^k for k <= prec, with v = q^(1/2)."""

    __slots__ = ("coeffs", "prec")

    def __init__(self, coeffs: Dict[int, Fraction], prec: int):
        self.prec = prec
        self.coeffs = {k: F(c) for k, c in coeffs.items() if c != 0 and k <= prec}

    # -- constructors -----------------------------------------------------

    @classmethod
    def one(cls, trunc) -> "QSeries":
        return cls({0: F(1)}, _v(trunc))

    @classmethod
    def zero(cls, trunc) -> "QSeries":
        return cls({}, _v(trunc))

    @classmethod
    def monomial(cls, q_exp, trunc, coeff=1) -> "QSeries":
        return cls({_v(q_exp): F(coeff)}, _v(trunc))

    @classmethod
    def from_list(cls, values: Sequence, trunc=None) -> "QSeries":
        """Integer q-powers 0, 1, 2, ... from a list of coefficients."""
        trunc = len(values) - 1 if trunc is None else trunc
        return cls({2 * i: F(c) for i, c in enumerate(values)}, _v(trunc))

    # -- inspection -------------------------------------------------------

    @property
    def trunc(self) -> Fraction:
        return F(self.prec, 2)

    def coefficient(self, q_exp) -> Fraction:
        k = _v(q_exp)
        if k > self.prec:
            raise ValueError(f"coefficient of q^{q_exp} is beyond the truncation q^{self.trunc}")
        return self.coeffs.get(k, F(0))

    def valuation(self) -> Optional[int]:
        return min(self.coeffs) if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def has_integer_exponents(self) -> bool:
        return all(k % 2 == 0 for k in self.coeffs)

    def to_list(self, trunc=None) -> List[Fraction]:
        """Coefficients of q^0 .. q^trunc (integer exponents only)."""
        trunc = self.trunc if trunc is None else F(trunc)
        if not self.has_integer_exponents():
            raise ValueError("series has half-integer exponents")
        if any(k < 0 for k in self.coeffs):
            raise ValueError("series has negative exponents")
        return [self.coefficient(i) for i in range(int(trunc) + 1)]

    def items(self) -> List[Tuple[Fraction, Fraction]]:
        return [(F(k, 2), c) for k, c in sorted(self.coeffs.items())]

    def truncate(self, trunc) -> "QSeries":
        p = _v(trunc)
        if p > self.prec:
            raise ValueError("cannot raise the precision of a series")
        return QSeries(self.coeffs, p)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return other
        return QSeries({0: F(other)}, self.prec)

    def __add__(self, other):
        other = self._coerce(other)
        prec = min(self.prec, other.prec)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return QSeries(out, prec)

    __radd__ = __add__

    def __neg__(self):
        return QSeries({k: -c for k, c in self.coeffs.items()}, self.prec)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            c = F(other)
            return QSeries({k: v * c for k, v in self.coeffs.items()}, self.prec)
        va, vb = self.valuation(), other.valuation()
        if va is None or vb is None:
            lo_a = va if va is not None else 0
            lo_b = vb if vb is not None else 0
            return QSeries({}, min(self.prec + lo_b, other.prec + lo_a))
        prec = min(self.prec + vb, other.prec + va)
        out: Dict[int, Fraction] = {}
        for ka, ca in self.coeffs.items():
            if ka + vb > prec:
                continue
            for kb, cb in other.coeffs.items():
                k = ka + kb
                if k <= prec:
                    out[k] = out.get(k, 0) + ca * cb
        return QSeries(out, prec)

    __rmul__ = __mul__

    def shift(self, q_exp) -> "QSeries":
        """Multiply by q^q_exp."""
        s = _v(q_exp)
        return QSeries({k + s: c for k, c in self.coeffs.items()}, self.prec + s)

    def inverse(self) -> "QSeries":
        v0 = self.valuation()
        if v0 is None:
            raise ZeroDivisionError("inverse of the zero series")
        lead = self.coeffs[v0]
        rel = self.prec - v0  # relative precision
        out: Dict[int, Fraction] = {}
        for k in range(rel + 1):
            acc = F(1) if k == 0 else F(0)
            for j in range(1, k + 1):
                c = self.coeffs.get(v0 + j)
                if c and (k - j) in out:
                    acc -= c * out[k - j]
            out[k] = acc / lead
        return QSeries({k - v0: c for k, c in out.items()}, rel - v0)

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return self * other.inverse()
        return self * (F(1) / F(other))

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QSeries({0: F(1)}, self.prec if self.valuation() is not None and self.valuation() >= 0 else self.prec)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        p = min(self.prec, other.prec)
        a = {k: c for k, c in self.coeffs.items() if k <= p}
        b = {k: c for k, c in other.coeffs.items() if k <= p}
        return a == b

    def __hash__(self):
        return hash((self.prec, tuple(sorted(self.coeffs.items()))))

    def __repr__(self):
        return f"QSeries({self})"

    def __str__(self):
        terms = []
        for k, c in sorted(self.coeffs.items()):
            e = F(k, 2)
            mon = "" if e == 0 else ("q" if e == 1 else f"q^{_exp(e)}")
            if mon and c == 1:
                terms.append(mon)
            elif mon and c == -1:
                terms.append("-" + mon)
            else:
                terms.append(f"{c}{'*' + mon if mon else ''}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} + O(q^{_exp(F(self.prec + 1, 2))})"

    def to_json(self, name: str = "") -> dict:
        return {
            "name": name,
            "trunc": str(self.trunc),
            "coeffs": [[str(e), str(c)] for e, c in self.items()],
        }


class ZQSeries:
    """Laurent polynomial in auxiliary variables z_1..z_r with QSeries coefficients."""

    def __init__(self, terms: Dict[Tuple[int, ...], QSeries], nvars: int, trunc):
        self.nvars = nvars
        self.trunc = F(trunc)
        self.terms = {k: c for k, c in terms.items() if not c.is_zero()}

    @classmethod
    def constant(cls, series: QSeries, nvars: int = 1) -> "ZQSeries":
        return cls({(0,) * nvars: series}, nvars, series.trunc)

    @classmethod
    def from_univariate(cls, terms: Dict[int, QSeries], var: int, nvars: int, trunc) -> "ZQSeries":
        out = {}
        for e, c in terms.items():
            key = [0] * nvars
            key[var] = e
            out[tuple(key)] = c
        return cls(out, nvars, trunc)

    def coefficient(self, *exps: int) -> QSeries:
        if len(exps) != self.nvars:
            raise ValueError("wrong number of z-exponents")
        return self.terms.get(tuple(exps), QSeries.zero(self.trunc))

    def constant_term(self) -> QSeries:
        return self.coefficient(*([0] * self.nvars))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "ZQSeries") -> "ZQSeries":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return ZQSeries(out, self.nvars, min(self.trunc, other.trunc))

    def __neg__(self):
        return ZQSeries({k: -c for k, c in self.terms.items()}, self.nvars, self.trunc)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other) -> "ZQSeries":
        if isinstance(other, ZQSeries):
            out: Dict[Tuple[int, ...], QSeries] = {}
            for ka, ca in self.terms.items():
                for kb, cb in other.terms.items():
                    k = tuple(x + y for x, y in zip(ka, kb))
                    p = ca * cb
                    out[k] = out[k] + p if k in out else p
            return ZQSeries(out, self.nvars, min(self.trunc, other.trunc))
        return ZQSeries({k: c * other for k, c in self.terms.items()}, self.nvars, self.trunc)

    __rmul__ = __mul__

    def shift_z(self, exps: Sequence[int]) -> "ZQSeries":
        return ZQSeries({tuple(x + y for x, y in zip(k, exps)): c for k, c in self.terms.items()}, self.nvars, self.trunc)

    def retruncate(self) -> "ZQSeries":
        """Drop terms that are zero to the declared truncation."""
        out = {}
        for k, c in self.terms.items():
            c = c.truncate(min(c.trunc, self.trunc)) if c.trunc >= self.trunc else c
            if not c.is_zero():
                out[k] = c
        return ZQSeries(out, self.nvars, self.trunc)


# ---------------------------------------------------------------------------
# products and basic series
# ---------------------------------------------------------------------------

def pochhammer(q_exp, length: Optional[int], trunc, coeff=1) -> QSeries:
    """(c q^a; q)_length with c = coeff and a = q_exp; length None means infinite."""
    a = F(q_exp)
    c = F(coeff)
    out = QSeries.one(trunc)
    if length is None:
        if a <= 0:
            raise ValueError("infinite Pochhammer symbol needs a positive base exponent")
        p = 0
        while a + p <= F(trunc):
            out = out * (1 - QSeries.monomial(a + p, trunc, c))
            p += 1
        return out
    for p in range(length):
        out = out * (1 - QSeries.monomial(a + p, trunc, c))
    return out


def multi_pochhammer(q_exps: Iterable, length: Optional[int], trunc) -> QSeries:
    """(q^a_1, ..., q^a_r; q)_length."""
    out = QSeries.one(trunc)
    for a in q_exps:
        out = out * pochhammer(a, length, trunc)
    return out


def euler_function(trunc) -> QSeries:
    """(q; q)_infinity."""
    return pochhammer(1, None, trunc)


def inverse_pochhammer_z(q_exp, trunc, coeff=1) -> Dict[int, QSeries]:
    """1/(c z q^a; q)_inf = sum_m c^m z^m q^{am} / (q;q)_m, as {m: series}, a > 0."""
    a = F(q_exp)
    if a <= 0:
        raise ValueError("the z-expansion needs a positive exponent")
    out = {}
    m = 0
    qq = QSeries.one(trunc)
    while a * m <= F(trunc):
        out[m] = (QSeries.monomial(a * m, trunc, F(coeff) ** m)) / qq
        m += 1
        qq = qq * (1 - QSeries.monomial(m, trunc))
    return out


def pochhammer_z(q_exp, trunc, coeff=1) -> Dict[int, QSeries]:
    """(c z q^a; q)_inf = sum_m (-c)^m q^{m(m-1)/2 + am} z^m / (q;q)_m, a > 0."""
    a = F(q_exp)
    if a <= 0:
        raise ValueError("the z-expansion needs a positive exponent")
    out = {}
    m = 0
    qq = QSeries.one(trunc)
    while F(m * (m - 1), 2) + a * m <= F(trunc):
        out[m] = QSeries.monomial(F(m * (m - 1), 2) + a * m, trunc, (-F(coeff)) ** m) / qq
        m += 1
        qq = qq * (1 - QSeries.monomial(m, trunc))
    return out


def _zseries(terms: Dict[int, QSeries], inverse_z: bool, var: int, nvars: int, trunc) -> ZQSeries:
    if inverse_z:
        terms = {-e: c for e, c in terms.items()}
    return ZQSeries.from_univariate(terms, var, nvars, trunc)


def false_theta(s: int, trunc) -> QSeries:
    """Phi_s(q) = sum_{m >= 0} (-1)^m q^{m(m+1)/2 + ms}."""
    out = {}
    m = 0
    while True:
        e = F(m * (m + 1), 2) + m * s
        if e > F(trunc) and m > -s:
            break
        if e <= F(trunc):
            out[_v(e)] = out.get(_v(e), 0) + (-1) ** m
        m += 1
    return QSeries(out, _v(trunc))


def false_theta_expansion_residual(trunc, smax: int) -> Dict[int, QSeries]:
    """For |s| <= smax, coefficient of z^s in
    1/(zq, z^{-1}q; q)_inf - (q;q)_inf^{-2} sum_s (Phi_s - Phi_{s-1}) z^s."""
    lhs = _zseries(inverse_pochhammer_z(1, trunc), False, 0, 1, trunc) * _zseries(
        inverse_pochhammer_z(1, trunc), True, 0, 1, trunc)
    pre = euler_function(trunc) ** -2
    out = {}
    for s in range(-smax, smax + 1):
        rhs = pre * (false_theta(s, trunc) - false_theta(s - 1, trunc))
        out[s] = (lhs.coefficient(s) - rhs).truncate(trunc)
    return out


# ---------------------------------------------------------------------------
# characters of the center and plane partitions
# ---------------------------------------------------------------------------

def center_character(n: int, trunc) -> QSeries:
    """sum_m (-1)^m q^{m(m+1)/2} (q^{m+1};q)_{n-1} / ((q;q)_inf^2 (q, ..., q^{n-1}; q)_inf)."""
    if n < 1:
        raise ValueError("n must be positive")
    num = QSeries.zero(trunc)
    m = 0
    while F(m * (m + 1), 2) <= F(trunc):
        num = num + pochhammer(m + 1, n - 1, trunc).shift(F(m * (m + 1), 2)) * ((-1) ** m)
        m += 1
    den = euler_function(trunc) ** 2 * multi_pochhammer(range(1, n), None, trunc)
    return num / den


def constant_term_character(n: int, trunc) -> QSeries:
    """Constant z-term of 1/(q, ..., q^{n-1}, zq, z^{-1} q^{n-1}; q)_inf for n >= 2.

    At n = 1 the factor 1/(z^{-1}; q)_inf has no q-adic expansion, so the case is rejected.
    """
    if n < 2:
        raise ValueError("the constant-term form needs n >= 2")
    zpart = _zseries(inverse_pochhammer_z(1, trunc), False, 0, 1, trunc) * _zseries(
        inverse_pochhammer_z(n - 1, trunc), True, 0, 1, trunc)
    return zpart.constant_term() / multi_pochhammer(range(1, n), None, trunc)


def pit_gf_formula(m: int, n: int, trunc) -> QSeries:
    """Generating function of plane partitions with the pit (m+1, n+1), n >= m >= 1."""
    if not 1 <= m <= n:
        raise ValueError("need n >= m >= 1")
    T = F(trunc)
    total = QSeries.zero(trunc)

    def ks(prefix):
        i = len(prefix)
        if i == m:
            yield tuple(prefix)
            return
        top = prefix[-1] if prefix else None
        k = 0
        while top is None or k <= top:
            e = sum(F(kk * (kk + 2 * (j + 1) - 1), 2) for j, kk in enumerate(prefix + [k]))
            if e > T:
                break
            yield from ks(prefix + [k])
            k += 1

    for k in ks([]):
        kk = list(k) + [0] * (n - m)
        e = sum(F(kk[i] * (kk[i] + 2 * (i + 1) - 1), 2) for i in range(m))
        term = QSeries.monomial(e, trunc, (-1) ** sum(k))
        for i in range(n):
            for j in range(i + 1, n):
                term = term * (1 - QSeries.monomial(kk[i] - kk[j] + j - i, trunc))
        for i in range(m):
            for j in range(i + 1, m):
                term = term * (1 - QSeries.monomial(kk[i] - kk[j] + j - i, trunc))
        total = total + term
    return total / euler_function(trunc) ** (n + m)


def macmahon(trunc) -> QSeries:
    """1 / prod_{k >= 1} (1 - q^k)^k."""
    den = QSeries.one(trunc)
    for k in range(1, int(F(trunc)) + 1):
        den = den * pochhammer(k, 1, trunc) ** k
    return den.inverse()


# ---------------------------------------------------------------------------
# gl(3|2)
# ---------------------------------------------------------------------------

GL32_PBW_WEIGHTS = [(F(1), 0), (F(2), 0), (F(2), 0), (F(3), 0),
                    (F(3, 2), 1), (F(3, 2), 1), (F(5, 2), 1), (F(5, 2), 1)]


def _pbw_character(weights, trunc) -> QSeries:
    out = QSeries.one(trunc)
    for w, parity in weights:
        if parity:
            out = out * pochhammer(w, None, trunc, coeff=-1)
        else:
            out = out / pochhammer(w, None, trunc)
    return out


def gl32_closed_character(trunc) -> QSeries:
    """(-q^{3/2}, -q^{3/2}, -q^{5/2}, -q^{5/2}; q)_inf / (q, q^2, q^2, q^3; q)_inf."""
    num = QSeries.one(trunc)
    for a in (F(3, 2), F(3, 2), F(5, 2), F(5, 2)):
        num = num * pochhammer(a, None, trunc, coeff=-1)
    return num / multi_pochhammer((1, 2, 2, 3), None, trunc)


def gl32_constant_term_character(trunc) -> QSeries:
    """Constant term in z_1, z_2 of (1 - z_2/z_1) f(z_1) f(z_2) with
    f(z) = (-z q^{1/2}, -z^{-1} q^{1/2}; q)_inf / (z q, z^{-1} q; q)_inf."""
    def f(var):
        ferm = _zseries(pochhammer_z(F(1, 2), trunc, coeff=-1), False, var, 2, trunc) * _zseries(
            pochhammer_z(F(1, 2), trunc, coeff=-1), True, var, 2, trunc)
        bos = _zseries(inverse_pochhammer_z(1, trunc), False, var, 2, trunc) * _zseries(
            inverse_pochhammer_z(1, trunc), True, var, 2, trunc)
        return ferm * bos

    g = f(0) * f(1)
    measure = ZQSeries({(0, 0): QSeries.one(trunc), (-1, 1): -QSeries.one(trunc)}, 2, trunc)
    return (measure * g).constant_term()


def gl32_two_term_character(trunc) -> QSeries:
    """The intermediate two-term expression
    ((-q^{3/2};q)^2 (-q^{3/2};q)^2 - q (-q^{1/2};q)^2 (-q^{5/2};q)^2) / (q, q^2; q)^2."""
    def p(a):
        return pochhammer(a, None, trunc, coeff=-1)

    den = multi_pochhammer((1, 2), None, trunc) ** 2
    return (p(F(3, 2)) ** 2 * p(F(3, 2)) ** 2 - (p(F(1, 2)) ** 2 * p(F(5, 2)) ** 2).shift(1)) / den


def gl32_pbw_character(trunc) -> QSeries:
    return _pbw_character(GL32_PBW_WEIGHTS, trunc)


def gl32_characters(trunc) -> Tuple[QSeries, QSeries, QSeries]:
    """(closed form, two-variable constant term, PBW form)."""
    return gl32_closed_character(trunc), gl32_constant_term_character(trunc), gl32_pbw_character(trunc)


_EXACT = 10 ** 9  # precision marker for finite (exact) Laurent polynomials


def _finite_pochhammer(c: Fraction, lo: int, hi: int) -> QSeries:
    """prod_{p=lo}^{hi} (1 - c q^p) as an exact Laurent polynomial."""
    out = QSeries({0: F(1)}, _EXACT)
    for p in range(lo, hi + 1):
        out = out * (QSeries({0: F(1)}, _EXACT) - QSeries({2 * p: c}, _EXACT))
    return out


def _beta_rhs_coefficient(a: Fraction, b: Fraction, n: int, trunc) -> Optional[QSeries]:
    """(-1)^n (a q^{n+1}, b q^{1-n}; q)_inf / (q, abq; q)_inf q^{n^2/2}, or None if beyond trunc."""
    T = F(trunc)
    fin = _finite_pochhammer(a, n + 1, 0) * _finite_pochhammer(b, 1 - n, 0)
    v = fin.valuation()
    if v is None:
        return QSeries.zero(trunc)
    lead = F(n * n, 2)
    if lead + F(v, 2) > T:
        return None
    tinf = T - lead - F(v, 2)
    inf = pochhammer(max(n + 1, 1), None, tinf, coeff=a) * pochhammer(max(1 - n, 1), None, tinf, coeff=b)
    den = euler_function(tinf) * pochhammer(1, None, tinf, coeff=a * b)
    return (fin * inf / den).shift(lead) * ((-1) ** n)


def beta_integral_residual(a, b, trunc) -> ZQSeries:
    """LHS - RHS of
    (z q^{1/2}, z^{-1} q^{1/2}; q)_inf / (a z q^{1/2}, b z^{-1} q^{1/2}; q)_inf
      = sum_n (-1)^n (a q^{n+1}, b q^{1-n}; q)_inf / (q, abq; q)_inf q^{n^2/2} z^{-n}
    at rational a, b, over every z-power that contributes up to q^trunc."""
    a, b = F(a), F(b)
    h = F(1, 2)
    lhs = (_zseries(pochhammer_z(h, trunc), False, 0, 1, trunc)
           * _zseries(pochhammer_z(h, trunc), True, 0, 1, trunc)
           * _zseries(inverse_pochhammer_z(h, trunc, coeff=a), False, 0, 1, trunc)
           * _zseries(inverse_pochhammer_z(h, trunc, coeff=b), True, 0, 1, trunc))
    nmax = int(2 * F(trunc)) + 2
    rhs_terms = {}
    for n in range(-nmax, nmax + 1):
        c = _beta_rhs_coefficient(a, b, n, trunc)
        if c is not None:
            rhs_terms[(-n,)] = c
    rhs = ZQSeries(rhs_terms, 1, trunc)
    return (lhs - rhs).retruncate()
