"""Pseudo-differential operators over commutative differential polynomials.

A ``DiffPoly`` is a polynomial in commuting symbols ``d^j g``.  A ``PsiDO`` is a
finite sum of ``coefficient * d^a`` with exponents ``a = m`` or ``a = m + eps``
(one flag per operator) together with a truncation bound below which the
coefficients are unknown.  Composition uses the generalized Leibniz rule

    (f d^a)(g d^b) = sum_j binom(a, j) f (d^j g) d^(a+b-j)

and fractional powers of ``D = d + f`` are defined by
``D^alpha = sum_j binom(alpha, j) (D^j 1) d^(alpha-j)``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .scalars import EPS, ONE, ZERO, Scalar, evaluate, gen_binomial, scalar
from .vacore import Algebra, State, _add_into, build_algebra, render_terms, affine_gl, gl_parity

DSym = Tuple[str, int]
DMono = Tuple[DSym, ...]


class DepthExceeded(ValueError):
    """A coefficient below the stored truncation was requested."""


class NonHeisenbergGenerator(ValueError):
    """as_state was given a symbol that is not a generator of the target algebra."""


# ---------------------------------------------------------------------------
# commutative differential polynomials
# ---------------------------------------------------------------------------

def _mono_mul(a: DMono, b: DMono) -> DMono:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b))


class DiffPoly:
    """Element of Q(eps)[d^j g] with canonical sorted monomials."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[DMono, Scalar] = None):
        self.terms = {m: scalar(c) for m, c in (terms or {}).items() if not scalar(c).is_zero()}
        self._hash = None

    @classmethod
    def _wrap(cls, terms) -> "DiffPoly":
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def var(cls, name: str, deriv: int = 0) -> "DiffPoly":
        return cls._wrap({((name, deriv),): ONE})

    @classmethod
    def const(cls, c) -> "DiffPoly":
        c = scalar(c)
        return cls._wrap({(): c} if not c.is_zero() else {})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        other = _as_dp(other)
        out = dict(self.terms)
        _add_into(out, other.terms)
        return DiffPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return DiffPoly._wrap({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_dp(other))

    def __rsub__(self, other):
        return _as_dp(other) - self

    def __mul__(self, other):
        if isinstance(other, DiffPoly):
            out: Dict[DMono, Scalar] = {}
            for ma, ca in self.terms.items():
                for mb, cb in other.terms.items():
                    _add_into(out, {_mono_mul(ma, mb): ca * cb})
            return DiffPoly._wrap(out)
        c = scalar(other)
        if c.is_zero():
            return DiffPoly._wrap({})
        return DiffPoly._wrap({m: v * c for m, v in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = DiffPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, DiffPoly):
            return self.terms == other.terms
        try:
            return self.terms == _as_dp(other).terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def derivative(self, times: int = 1) -> "DiffPoly":
        cur = self
        for _ in range(times):
            out: Dict[DMono, Scalar] = {}
            for mono, c in cur.terms.items():
                for pos, (g, j) in enumerate(mono):
                    new = tuple(sorted(mono[:pos] + ((g, j + 1),) + mono[pos + 1:]))
                    _add_into(out, {new: c})
            cur = DiffPoly._wrap(out)
        return cur

    def partial(self, sym: DSym) -> "DiffPoly":
        """Partial derivative with respect to the variable d^j g."""
        out: Dict[DMono, Scalar] = {}
        for mono, c in self.terms.items():
            k = mono.count(sym)
            if k == 0:
                continue
            pos = mono.index(sym)
            _add_into(out, {mono[:pos] + mono[pos + 1:]: c * k})
        return DiffPoly._wrap(out)

    def variables(self) -> set:
        return {s for m in self.terms for s in m}

    def generators(self) -> set:
        return {g for m in self.terms for g, _ in m}

    def degree_part(self, p: int) -> "DiffPoly":
        return DiffPoly._wrap({m: c for m, c in self.terms.items() if len(m) == p})

    def weight_of(self, mono: DMono, weights=None) -> Fraction:
        return sum((Fraction(1 if weights is None else weights[g]) + j for g, j in mono), Fraction(0))

    def map_coefficients(self, fn) -> "DiffPoly":
        out = {}
        for m, c in self.terms.items():
            v = fn(c)
            if not v.is_zero():
                out[m] = v
        return DiffPoly._wrap(out)

    def evaluate_eps(self, value) -> "DiffPoly":
        return self.map_coefficients(lambda c: Scalar(evaluate(c, value)))

    def substitute(self, images: Mapping[str, "DiffPoly"]) -> "DiffPoly":
        """Replace each generator g by images[g] (derivatives follow by d)."""
        cache: Dict[DSym, DiffPoly] = {}

        def img(sym):
            if sym not in cache:
                g, j = sym
                base = images.get(g)
                cache[sym] = DiffPoly.var(g, j) if base is None else base.derivative(j)
            return cache[sym]

        out = DiffPoly()
        for mono, c in self.terms.items():
            term = DiffPoly.const(c)
            for sym in mono:
                term = term * img(sym)
            out = out + term
        return out

    def rename(self, mapping: Mapping[str, str]) -> "DiffPoly":
        out: Dict[DMono, Scalar] = {}
        for mono, c in self.terms.items():
            new = tuple(sorted((mapping.get(g, g), j) for g, j in mono))
            _add_into(out, {new: c})
        return DiffPoly._wrap(out)

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kv: (-len(kv[0]), kv[0]))
        return render_terms([(c, _render_dmono(m)) for m, c in items])

    def __repr__(self):
        return f"DiffPoly({self})"


def _render_dsym(s: DSym) -> str:
    g, j = s
    return g if j == 0 else f"d^{j} {g}"


def _render_dmono(m: DMono) -> str:
    if not m:
        return "1"
    return " ".join(_render_dsym(s) for s in m)


def _as_dp(x) -> DiffPoly:
    if isinstance(x, DiffPoly):
        return x
    return DiffPoly.const(x)


# ---------------------------------------------------------------------------
# pseudo-differential operators
# ---------------------------------------------------------------------------

class PsiDO:
    """sum_m coeff[m] d^(m + flag*eps), known for all exponents with integer part >= low.

    ``low`` is None for exact (finite) operators.
    """

    __slots__ = ("coeffs", "eps", "low")

    def __init__(self, coeffs: Mapping[int, DiffPoly], eps: bool = False, low: Optional[int] = None):
        self.coeffs = {m: c for m, c in coeffs.items() if not c.is_zero() and (low is None or m >= low)}
        self.eps = bool(eps)
        self.low = low

    @classmethod
    def d(cls, power: int = 1) -> "PsiDO":
        return cls({power: DiffPoly.const(1)})

    @classmethod
    def first_order(cls, f: DiffPoly) -> "PsiDO":
        """d + f."""
        return cls({1: DiffPoly.const(1), 0: f})

    @classmethod
    def multiplication(cls, f: DiffPoly) -> "PsiDO":
        return cls({0: f})

    def exponent(self, m: int) -> Scalar:
        return Scalar(m) + (EPS if self.eps else ZERO)

    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero operator has no leading exponent")
        return max(self.coeffs)

    def coefficient(self, m: int) -> DiffPoly:
        if self.low is not None and m < self.low:
            raise DepthExceeded(f"coefficient of exponent {m} is below the truncation {self.low}")
        return self.coeffs.get(m, DiffPoly())

    def truncate(self, low: int) -> "PsiDO":
        new_low = low if self.low is None else max(low, self.low)
        return PsiDO(self.coeffs, self.eps, new_low)

    def __add__(self, other: "PsiDO"):
        if self.eps != other.eps:
            raise ValueError("cannot add operators with different eps flags")
        lows = [x for x in (self.low, other.low) if x is not None]
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, DiffPoly()) + c
        return PsiDO(out, self.eps, max(lows) if lows else None)

    def __neg__(self):
        return PsiDO({m: -c for m, c in self.coeffs.items()}, self.eps, self.low)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PsiDO):
            return compose(self, other)
        return PsiDO({m: c * other for m, c in self.coeffs.items()}, self.eps, self.low)

    def __eq__(self, other):
        if not isinstance(other, PsiDO):
            return NotImplemented
        return self.coeffs == other.coeffs and self.eps == other.eps and self.low == other.low

    def map_coefficients(self, fn) -> "PsiDO":
        return PsiDO({m: fn(c) for m, c in self.coeffs.items()}, self.eps, self.low)

    def to_json(self):
        out = []
        for m in sorted(self.coeffs, reverse=True):
            e = str(m) if not self.eps else (f"{m}+eps" if m >= 0 else f"{m}+eps")
            out.append({"exponent": e, "coefficient": str(self.coeffs[m])})
        return out

    def __str__(self):
        parts = []
        for m in sorted(self.coeffs, reverse=True):
            e = f"{m}" if not self.eps else (f"{m}+eps" if m != 0 else "eps")
            parts.append(f"({self.coeffs[m]}) d^({e})")
        tail = "" if self.low is None else f" + O(d^({self.low - 1}{'+eps' if self.eps else ''}))"
        return (" + ".join(parts) if parts else "0") + tail


def compose(A: PsiDO, B: PsiDO, depth: Optional[int] = None) -> PsiDO:
    """A B, keeping exponents with integer part >= lead(A)+lead(B)-depth (all if depth is None)."""
    if A.eps and B.eps:
        raise ValueError("composition would produce an exponent with 2*eps")
    if not A.coeffs or not B.coeffs:
        return PsiDO({}, A.eps or B.eps, None)
    la, lb = A.leading(), B.leading()
    bounds = []
    if depth is not None:
        bounds.append(la + lb - depth)
    if A.low is not None:
        bounds.append(A.low + lb)
    if B.low is not None:
        bounds.append(la + B.low)
    low = max(bounds) if bounds else None
    out: Dict[int, DiffPoly] = {}
    for a, f in A.coeffs.items():
        alpha = A.exponent(a)
        exact_int = not A.eps and a >= 0
        for b, g in B.coeffs.items():
            jmax = None
            if low is not None:
                jmax = a + b - low
                if jmax < 0:
                    continue
            if exact_int:
                jmax = a if jmax is None else min(jmax, a)
            if jmax is None:
                raise ValueError("infinite expansion: pass a depth")
            gj = g
            for j in range(jmax + 1):
                if j > 0:
                    gj = gj.derivative()
                if gj.is_zero():
                    break
                c = gen_binomial(j, alpha)
                if c.is_zero():
                    continue
                term = f * gj * c
                key = a + b - j
                out[key] = out.get(key, DiffPoly()) + term
    return PsiDO(out, A.eps or B.eps, low)


def apply_to_function(D: PsiDO, g: DiffPoly) -> DiffPoly:
    """Action of a differential operator (non-negative integer exponents) on a function."""
    if D.eps or any(m < 0 for m in D.coeffs):
        raise ValueError("only differential operators act on functions")
    out = DiffPoly()
    for m, c in D.coeffs.items():
        out = out + c * g.derivative(m)
    return out


def frac_power(D: PsiDO, depth: int, power=EPS) -> PsiDO:
    """D^power for monic first-order D = d + f, to ``depth`` terms below the leading one.

    ``power`` is eps or an integer; for non-negative integers the result is exact.
    """
    if set(D.coeffs) - {0, 1} or D.coeffs.get(1) != DiffPoly.const(1) or D.eps:
        raise ValueError("frac_power expects a monic first order operator d + f")
    f = D.coeffs.get(0, DiffPoly())
    power = scalar(power)
    if power == EPS:
        flag, lead = True, 0
    else:
        r = power.as_integer()
        if r is None:
            raise ValueError("power must be eps or an integer")
        flag, lead = False, r
    exact = not flag and lead >= 0
    jmax = lead if exact else depth
    out: Dict[int, DiffPoly] = {}
    dj = DiffPoly.const(1)
    for j in range(jmax + 1):
        if j > 0:
            dj = dj.derivative() + f * dj
        c = gen_binomial(j, power)
        if not c.is_zero():
            out[lead - j] = dj * c
    return PsiDO(out, flag, None if exact else lead - depth)


# ---------------------------------------------------------------------------
# Miura operator
# ---------------------------------------------------------------------------

def t_names(n: int) -> List[str]:
    return [f"t{i}" for i in range(1, n + 2)]


def miura_factors(n: int, variables: Optional[Sequence[str]] = None) -> List[PsiDO]:
    """D_i = d + eps t_i (i <= n) and D_{n+1} = d - eps t_{n+1}."""
    names = list(variables) if variables is not None else t_names(n)
    fs = [PsiDO.first_order(DiffPoly.var(names[i]) * EPS) for i in range(n)]
    fs.append(PsiDO.first_order(DiffPoly.var(names[n]) * (-EPS)))
    return fs


def miura_operator(n: int, depth: int) -> PsiDO:
    """D_1 ... D_n D_{n+1}^eps, with W_1..W_depth determined."""
    if n < 1:
        raise ValueError("n must be >= 1")
    fs = miura_factors(n)
    L = frac_power(fs[n], depth)
    for D in reversed(fs[:n]):
        L = compose(D, L)
    return L


def w_coefficients(n: int, pmax: int) -> List[DiffPoly]:
    """[W_1, ..., W_pmax] from L = (1 + sum W_p d^-p) d^(n+eps)."""
    L = miura_operator(n, pmax)
    return [L.coefficient(n - p) for p in range(1, pmax + 1)]


def critical_rename(n: int) -> Dict[str, str]:
    return {f"t{i}": f"u{i}" for i in range(1, n + 2)}


def critical_specialize(P, n: Optional[int] = None):
    """eps -> -1 and t_i -> u_i; eps-shifted exponents become integers."""
    def conv(c: DiffPoly) -> DiffPoly:
        out = c.evaluate_eps(-1)
        names = {g for g in out.generators() if g.startswith("t") and g[1:].isdigit()}
        return out.rename({g: "u" + g[1:] for g in names})

    if isinstance(P, DiffPoly):
        return conv(P)
    if isinstance(P, PsiDO):
        shift = -1 if P.eps else 0
        low = None if P.low is None else P.low + shift
        return PsiDO({m + shift: conv(c) for m, c in P.coeffs.items()}, False, low)
    raise TypeError("critical_specialize expects a DiffPoly or PsiDO")


def critical_miura_operator(n: int, depth: int) -> PsiDO:
    """(d - u_1)...(d - u_n)(d + u_{n+1})^{-1} computed directly with integer exponents."""
    us = [f"u{i}" for i in range(1, n + 2)]
    inv = frac_power(PsiDO.first_order(DiffPoly.var(us[n])), depth, -1)
    L = inv
    for i in reversed(range(n)):
        L = compose(PsiDO.first_order(-DiffPoly.var(us[i])), L)
    return L


# ---------------------------------------------------------------------------
# bridges to the vertex algebra engine
# ---------------------------------------------------------------------------

def as_state(f: DiffPoly, alg: Algebra) -> State:
    """The canonical state with the same monomials (Heisenberg generators only)."""
    terms: Dict[tuple, Scalar] = {}
    for mono, c in f.terms.items():
        syms = []
        for g, j in mono:
            if g not in alg.index:
                raise NonHeisenbergGenerator(f"{g!r} is not a generator of the algebra")
            idx = alg.index[g]
            if alg.spec.generators[idx].parity:
                raise NonHeisenbergGenerator(f"{g!r} is odd")
            syms.append((idx, j))
        _add_into(terms, {tuple(sorted(syms)): c})
    return State(alg, terms)


def symbol(a: State, p: int, keep: Optional[Iterable[str]] = None) -> DiffPoly:
    """Degree-p part of a canonical state as a commutative differential polynomial.

    With ``keep`` given, monomials containing other generators are dropped
    (e.g. the projection onto a Cartan subalgebra).
    """
    keep = set(keep) if keep is not None else None
    out: Dict[DMono, Scalar] = {}
    alg = a.alg
    for mono, c in a.terms.items():
        if len(mono) != p:
            continue
        names = [(alg.names[g], j) for g, j in mono]
        if keep is not None and any(nm not in keep for nm, _ in names):
            continue
        if any(alg.spec.generators[g].parity for g, _ in mono):
            raise ValueError("symbol of a monomial with odd generators is not commutative")
        _add_into(out, {tuple(sorted(names)): c})
    return DiffPoly._wrap(out)


# ---------------------------------------------------------------------------
# classical lambda-bracket
# ---------------------------------------------------------------------------

class ClassicalLambda:
    """Polynomial in lambda with DiffPoly coefficients."""

    def __init__(self, coeffs: Mapping[int, DiffPoly]):
        self.coeffs = {p: c for p, c in coeffs.items() if not c.is_zero()}

    def coefficient(self, j: int) -> DiffPoly:
        return self.coeffs.get(j, DiffPoly())

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, ClassicalLambda):
            return self.coeffs == other.coeffs
        if other == 0:
            return not self.coeffs
        return NotImplemented

    def __add__(self, other):
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, DiffPoly()) + c
        return ClassicalLambda(out)

    def __neg__(self):
        return ClassicalLambda({p: -c for p, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for p in sorted(self.coeffs):
            lam = "" if p == 0 else ("lambda" if p == 1 else f"lambda^{p}")
            body = str(self.coeffs[p])
            parts.append(body if not lam else f"({body}) {lam}")
        return " + ".join(parts)


def _lambda_shift(F: DiffPoly, N: int) -> Dict[int, DiffPoly]:
    """(lambda + d)^N F as {power: coefficient}."""
    out = {}
    cur = F
    for k in range(N + 1):
        if k > 0:
            cur = cur.derivative()
        if cur.is_zero():
            break
        out[N - k] = cur * comb(N, k)
    return out


def classical_lambda_bracket(f: DiffPoly, g: DiffPoly, gram: Mapping[Tuple[str, str], object]) -> ClassicalLambda:
    """{f lambda g} for {u_i lambda u_j} = gram[(u_i, u_j)] lambda, by the master formula.

    ``gram`` maps ordered name pairs to scalars; missing pairs are zero.
    """
    acc: Dict[int, DiffPoly] = {}
    fvars = f.variables()
    gvars = g.variables()
    for (ui, m) in fvars:
        fi = f.partial((ui, m))
        for (uj, n) in gvars:
            gij = gram.get((ui, uj))
            if gij is None or scalar(gij).is_zero():
                continue
            gj = g.partial((uj, n))
            sign = -1 if m % 2 else 1
            for p, c in _lambda_shift(fi, n + m + 1).items():
                acc[p] = acc.get(p, DiffPoly()) + gj * c * (scalar(gij) * sign)
    return ClassicalLambda(acc)


def gram_dict(names: Sequence[str], matrix) -> Dict[Tuple[str, str], Scalar]:
    out = {}
    for i, a in enumerate(names):
        for j, b in enumerate(names):
            v = scalar(matrix[i][j])
            if not v.is_zero():
                out[(a, b)] = v
    return out


def differential_monomials(generators: Mapping[str, DiffPoly], weights: Mapping[str, int], weight: int):
    """All products of derivatives d^j G (G in generators) of total weight ``weight``.

    Returns a list of (label, DiffPoly).
    """
    items = []
    for nm, w in weights.items():
        for j in range(0, weight - w + 1):
            items.append((nm, j, w + j))
    items.sort()
    results = []

    def rec(start, remaining, chosen):
        if remaining == 0:
            results.append(tuple(chosen))
            return
        for idx in range(start, len(items)):
            nm, j, w = items[idx]
            if w <= remaining:
                rec(idx, remaining - w, chosen + [(nm, j)])

    rec(0, weight, [])
    cache = {}
    out = []
    for combo in results:
        val = DiffPoly.const(1)
        for nm, j in combo:
            key = (nm, j)
            if key not in cache:
                cache[key] = generators[nm].derivative(j)
            val = val * cache[key]
        out.append((combo, val))
    return out


def solve_in_span(target: DiffPoly, basis: Sequence[DiffPoly]):
    """Coefficients c with sum c_i basis_i = target, or None if target is not in the span."""
    from flint import fmpq_mat, fmpq

    monos = sorted({m for b in basis for m in b.terms} | set(target.terms))
    for b in list(basis) + [target]:
        for c in b.terms.values():
            if not c.is_constant():
                raise ValueError("solve_in_span expects rational coefficients")
    rows = len(monos)
    cols = len(basis)
    if cols == 0:
        return [] if target.is_zero() else None
    idx = {m: i for i, m in enumerate(monos)}
    A = fmpq_mat(rows, cols + 1)
    for j, b in enumerate(basis):
        for m, c in b.terms.items():
            v = c.constant_value()
            A[idx[m], j] = fmpq(v.numerator, v.denominator)
    for m, c in target.terms.items():
        v = c.constant_value()
        A[idx[m], cols] = fmpq(v.numerator, v.denominator)
    R, rank = A.rref()
    # inconsistent iff a pivot lies in the augmented column
    sol = [Fraction(0)] * cols
    for row in range(rows):
        lead = None
        for col in range(cols + 1):
            if R[row, col] != 0:
                lead = col
                break
        if lead is None:
            continue
        if lead == cols:
            return None
        v = R[row, cols]
        sol[lead] = Fraction(int(v.p), int(v.q))
    return sol


def span_rank(polys: Sequence[DiffPoly]) -> int:
    """Dimension of the rational span of the given differential polynomials."""
    from flint import fmpq_mat, fmpq

    monos = sorted({m for f in polys for m in f.terms})
    if not monos or not polys:
        return 0
    idx = {m: i for i, m in enumerate(monos)}
    A = fmpq_mat(len(polys), len(monos))
    for i, f in enumerate(polys):
        for m, c in f.terms.items():
            if not c.is_constant():
                raise ValueError("span_rank expects rational coefficients")
            v = c.constant_value()
            A[i, idx[m]] = fmpq(v.numerator, v.denominator)
    return A.rank()


# ---------------------------------------------------------------------------
# Segal-Sugawara vectors
# ---------------------------------------------------------------------------

class MatrixDiffOp:
    """Square matrix whose entries are sums of (word in e_ij(-s), power of d) with Scalar coefficients.

    An entry is a dict mapping (word, dpower) to a Scalar where word is a tuple of
    ((i, j), s) meaning e_ij(-s) applied right to left on the vacuum; d is kept
    to the right of every word.
    """

    def __init__(self, m: int, n: int, entries):
        self.m, self.n = m, n
        self.N = m + n
        self.entries = entries

    def parity(self, i: int) -> int:
        return gl_parity(i, self.m)

    @classmethod
    def d_plus_e(cls, m: int, n: int) -> "MatrixDiffOp":
        """d * 1 + sum_ij E_ij x e_ji(-1) (-1)^{p(i)}.

        d is the scalar identity matrix. With the Koszul product this is the
        sign arrangement for which the coefficients are central in the super case.
        """
        N = m + n
        entries = {}
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                sgn = Scalar((-1) ** gl_parity(i, m))
                e = {((((j, i), 1),), 0): sgn}
                if i == j:
                    e[((), 1)] = ONE
                entries[(i, j)] = e
        return cls(m, n, entries)

    @staticmethod
    def _move_d(word, dpow):
        """d^dpow * word = sum of (word', r) with d^r on the right."""
        # d acts on a word of negative modes by [d, e(-s)] = s e(-s-1)
        terms = {(word, 0): ONE}
        for _ in range(dpow):
            nxt = {}
            for (w, r), c in terms.items():
                key = (w, r + 1)
                nxt[key] = nxt.get(key, ZERO) + c
                for pos, (ij, s) in enumerate(w):
                    w2 = w[:pos] + ((ij, s + 1),) + w[pos + 1:]
                    key = (w2, r)
                    nxt[key] = nxt.get(key, ZERO) + c * s
            terms = {k: v for k, v in nxt.items() if not v.is_zero()}
        return terms

    @classmethod
    def _mul_entry(cls, a, b, sign):
        out = {}
        for (wa, ra), ca in a.items():
            for (wb, rb), cb in b.items():
                for (wb2, r2), c2 in cls._move_d(wb, ra).items():
                    key = (wa + wb2, r2 + rb)
                    out[key] = out.get(key, ZERO) + ca * cb * c2 * sign
        return {k: v for k, v in out.items() if not v.is_zero()}

    def word_parity(self, word) -> int:
        return sum(self.parity(i) + self.parity(j) for (i, j), _ in word) % 2

    def __mul__(self, other: "MatrixDiffOp") -> "MatrixDiffOp":
        # (E_ik x a)(E_kj x b) = (-1)^{p(a) p(E_kj)} E_ij x ab; entries are parity homogeneous
        out = {}
        for i in range(1, self.N + 1):
            for j in range(1, self.N + 1):
                acc = {}
                for k in range(1, self.N + 1):
                    a = self.entries.get((i, k))
                    b = other.entries.get((k, j))
                    if not a or not b:
                        continue
                    pa = (self.parity(i) + self.parity(k)) % 2
                    pE = (self.parity(k) + self.parity(j)) % 2
                    sign = -1 if (pa and pE) else 1
                    for key, v in self._mul_entry(a, b, sign).items():
                        acc[key] = acc.get(key, ZERO) + v
                acc = {k: v for k, v in acc.items() if not v.is_zero()}
                if acc:
                    out[(i, j)] = acc
        return MatrixDiffOp(self.m, self.n, out)

    def supertrace(self):
        out = {}
        for i in range(1, self.N + 1):
            sgn = (-1) ** self.parity(i)
            for key, v in self.entries.get((i, i), {}).items():
                out[key] = out.get(key, ZERO) + v * sgn
        return {k: v for k, v in out.items() if not v.is_zero()}


def critical_affine(m: int, n: int) -> Algebra:
    return build_algebra(affine_gl(m, n))


def segal_sugawara(m: int, n: int, p: int, alg: Optional[Algebra] = None) -> List[State]:
    """[s_{p,0}, ..., s_{p,p}] from str(d + E)^p = sum_q s_{p,q} d^(p-q), evaluated on the vacuum."""
    alg = alg if alg is not None else critical_affine(m, n)
    if p == 0:
        return [alg.scalar_state(m - n)]
    M = MatrixDiffOp.d_plus_e(m, n)
    P = M
    for _ in range(p - 1):
        P = P * M
    tr = P.supertrace()
    out = [alg.zero() for _ in range(p + 1)]
    gen_cache: Dict[Tuple[int, int], State] = {}
    for (word, r), c in tr.items():
        q = p - r
        st = alg.unit()
        for (i, j), s in reversed(word):
            g = gen_cache.get((i, j))
            if g is None:
                g = alg.gen(f"e{i}{j}")
                gen_cache[(i, j)] = g
            st = alg.nth_product(g, st, -s)
        out[q] = out[q] + st * c
    return out


def cartan_symbol(a: State, m: int, n: int, p: int) -> DiffPoly:
    """Degree-p symbol projected to the Cartan part, with e_ii -> u_i (i <= m), e_{m+j,m+j} -> v_j."""
    N = m + n
    keep = {f"e{i}{i}" for i in range(1, N + 1)}
    rename = {f"e{i}{i}": (f"u{i}" if i <= m else f"v{i - m}") for i in range(1, N + 1)}
    return symbol(a, p, keep=keep).rename(rename)
