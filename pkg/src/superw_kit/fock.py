"""Fock modules e^gamma over a Heisenberg algebra, lattice vertex operators and screenings.

Polynomial parts live in the Heisenberg algebra of ``vacore``; since strictly
negative Heisenberg modes commute, a canonical monomial there is just a
commutative monomial in the symbols ``d^j h_i``.  Internally the vertex
operator formula works with mode variables ``y[i, m] = h_{i,-m}`` (m >= 1), so
that ``d^j h_i = j! y[i, j+1]``.

For ``a = P e^alpha`` and ``w = Q e^beta`` the field of ``a`` is the free-field
normal ordered product of the fields in ``P`` with ``Y(e^alpha, z)``:

    Y(a, z) w = z^{(alpha, beta)} * sum over splittings of P into creation and
    annihilation parts of  [creation parts] E^+(z) [annihilation parts] E^-(z) Q e^{alpha+beta}

with trivial cocycle.  ``E^-`` acts on ``Q`` as the shift
``y[j, k] -> y[j, k] - (alpha, h_j) z^{-k}`` and annihilation modes act as
constant-coefficient derivations.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Dict, Sequence, Tuple

from .scalars import ONE, ZERO, Scalar, render, scalar
from .vacore import Algebra, State, _add_into, build_algebra, heisenberg, render_terms

Weight = Tuple[Scalar, ...]
YMono = Tuple[Tuple[int, int], ...]
YPoly = Dict[YMono, Scalar]


class NonIntegralPairing(ValueError):
    """The pairing of two exponents is not an integer, so vertex modes are undefined."""

    def __init__(self, value):
        super().__init__(f"non-integral pairing {render(value)}")
        self.value = value


# ---------------------------------------------------------------------------
# y-polynomial helpers
# ---------------------------------------------------------------------------

def _ymul(a: YPoly, b: YPoly) -> YPoly:
    out: YPoly = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(sorted(ma + mb)) if ma and mb else (ma or mb)
            _add_into(out, {m: ca * cb})
    return out


def _yadd(target: YPoly, src: YPoly, coeff: Scalar = ONE):
    _add_into(target, src, coeff)


def _series_mul(a: Dict[int, YPoly], b: Dict[int, YPoly], maxdeg: int) -> Dict[int, YPoly]:
    out: Dict[int, YPoly] = {}
    for da, pa in a.items():
        for db, pb in b.items():
            if da + db > maxdeg:
                continue
            slot = out.setdefault(da + db, {})
            _yadd(slot, _ymul(pa, pb))
    return {d: p for d, p in out.items() if p}


class FockSpace:
    """A Heisenberg quadratic space with Scalar Gram matrix and optional odd x-direction."""

    def __init__(self, gram, names: Sequence[str], x_index=None):
        self.names = list(names)
        self.rank = len(self.names)
        self.gram = [[scalar(gram[i][j]) for j in range(self.rank)] for i in range(self.rank)]
        self.alg: Algebra = build_algebra(heisenberg(self.gram, self.names))
        self.x_index = x_index
        self.index = {nm: i for i, nm in enumerate(self.names)}

    # -- weight vectors -----------------------------------------------------
    def weight(self, coords=None, **named) -> Weight:
        v = [ZERO] * self.rank
        if coords is not None:
            v = [scalar(c) for c in coords]
        for nm, c in named.items():
            v[self.index[nm]] = v[self.index[nm]] + scalar(c)
        return tuple(v)

    def zero_weight(self) -> Weight:
        return tuple([ZERO] * self.rank)

    def pair(self, v: Weight, w: Weight) -> Scalar:
        s = ZERO
        for i in range(self.rank):
            if v[i].is_zero():
                continue
            for j in range(self.rank):
                if w[j].is_zero() or self.gram[i][j].is_zero():
                    continue
                s = s + v[i] * self.gram[i][j] * w[j]
        return s

    def pair_gen(self, i: int, w: Weight) -> Scalar:
        s = ZERO
        for j in range(self.rank):
            if not w[j].is_zero() and not self.gram[i][j].is_zero():
                s = s + self.gram[i][j] * w[j]
        return s

    def lattice_parity(self, gamma: Weight) -> int:
        if self.x_index is None:
            return 0
        c = gamma[self.x_index]
        v = c.as_integer()
        if v is None:
            if c.is_constant():
                return 0
            raise ValueError(f"x-coordinate {render(c)} is not a constant")
        return v % 2

    def field(self, gamma: Weight) -> State:
        """The Heisenberg field sum gamma_i h_i as a State."""
        return State(self.alg, {((i, 0),): c for i, c in enumerate(gamma) if not c.is_zero()})

    # -- constructors ---------------------------------------------------------
    def vector(self, gamma: Weight) -> "FockState":
        return FockState(self, {(tuple(gamma), ()): ONE})

    def from_state(self, s: State, gamma: Weight = None) -> "FockState":
        g = tuple(gamma) if gamma is not None else self.zero_weight()
        return FockState(self, {(g, m): c for m, c in s.terms.items()})

    def gen(self, name: str, deriv: int = 0) -> "FockState":
        return self.from_state(self.alg.gen(name, deriv))

    def vacuum(self) -> "FockState":
        return self.vector(self.zero_weight())

    def zero(self) -> "FockState":
        return FockState(self, {})

    # -- mode formula ---------------------------------------------------------
    def _to_y(self, mono) -> Tuple[YMono, int]:
        coeff = 1
        for _, d in mono:
            coeff *= factorial(d)
        return tuple((i, d + 1) for i, d in mono), coeff

    def _from_y(self, ypoly: YPoly):
        out = {}
        for ym, c in ypoly.items():
            f = 1
            for _, m in ym:
                f *= factorial(m - 1)
            mono = tuple((i, m - 1) for i, m in ym)
            _add_into(out, {mono: c / f if f != 1 else c})
        return out

    def _shift(self, qy: YPoly, alpha: Weight) -> Dict[int, YPoly]:
        """E^-(z) Q: substitute y[j,k] -> y[j,k] - (alpha, h_j) z^{-k}."""
        cs = [self.pair_gen(j, alpha) for j in range(self.rank)]
        out: Dict[int, YPoly] = {}
        for mono, c in qy.items():
            # expand product of (y - c z^{-k}) over factors
            partial = {(0, ()): c}
            for (j, k) in mono:
                nxt = {}
                for (ze, ym), v in partial.items():
                    key = (ze, tuple(sorted(ym + ((j, k),))))
                    nxt[key] = nxt.get(key, ZERO) + v
                    if not cs[j].is_zero():
                        key2 = (ze - k, ym)
                        nxt[key2] = nxt.get(key2, ZERO) - v * cs[j]
                partial = {kk: vv for kk, vv in nxt.items() if not vv.is_zero()}
            for (ze, ym), v in partial.items():
                slot = out.setdefault(ze, {})
                _yadd(slot, {ym: v})
        return {z: p for z, p in out.items() if p}

    def _annihilate(self, sym, series: Dict[int, YPoly], beta: Weight) -> Dict[int, YPoly]:
        """Apply the annihilation part of the field d^d h_i(z) to a z-Laurent y-polynomial."""
        i, d = sym
        sgn = (-1) ** d
        out: Dict[int, YPoly] = {}
        c0 = self.pair_gen(i, beta)
        if not c0.is_zero():
            f = Scalar(sgn * factorial(d)) * c0
            for ze, p in series.items():
                slot = out.setdefault(ze - 1 - d, {})
                _yadd(slot, p, f)
        row = self.gram[i]
        for ze, p in series.items():
            for mono, c in p.items():
                seen = set()
                for pos, (j, n) in enumerate(mono):
                    if (j, n) in seen:
                        continue
                    seen.add((j, n))
                    g = row[j]
                    if g.is_zero():
                        continue
                    mult = mono.count((j, n))
                    rest = mono[:pos] + mono[pos + 1:]
                    coeff = Scalar(sgn * factorial(n + d) // factorial(n) * n * mult) * g * c
                    slot = out.setdefault(ze - n - 1 - d, {})
                    _yadd(slot, {rest: coeff})
        return {z: p for z, p in out.items() if p}

    def _creation(self, sym, maxdeg: int) -> Dict[int, YPoly]:
        i, d = sym
        out = {}
        for m in range(d + 1, d + 2 + maxdeg):
            deg = m - 1 - d
            if deg > maxdeg:
                break
            out[deg] = {((i, m),): Scalar(factorial(m - 1) // factorial(m - 1 - d))}
        return out

    def _eplus(self, alpha: Weight, maxdeg: int) -> Dict[int, YPoly]:
        ps: Dict[int, YPoly] = {0: {(): ONE}}
        for j in range(1, maxdeg + 1):
            acc: YPoly = {}
            for k in range(1, j + 1):
                prev = ps.get(j - k)
                if not prev:
                    continue
                ak = {((i, k),): alpha[i] for i in range(self.rank) if not alpha[i].is_zero()}
                _yadd(acc, _ymul(ak, prev), Scalar(Fraction(1, j)))
            if acc:
                ps[j] = acc
        return ps

    def _vertex_components(self, alpha: Weight, pmono, beta: Weight, qy: YPoly, want) -> Dict[int, YPoly]:
        """Coefficients of z^N (N in ``want``, or all N <= -1 if want is None) of Y(P e^alpha, z) Q e^beta."""
        ab = self.pair(alpha, beta)
        shift = ab.as_integer()
        if shift is None:
            raise NonIntegralPairing(ab)
        base = self._shift(qy, alpha)
        factors = list(pmono)
        r = len(factors)
        pieces = []  # (creation symbols, annihilated series)
        for size in range(r + 1):
            for S in combinations(range(r), size):
                series = base
                for pos in range(r):
                    if pos in S:
                        continue
                    series = self._annihilate(factors[pos], series, beta)
                    if not series:
                        break
                if series:
                    pieces.append(([factors[p] for p in S], series))
        if not pieces:
            return {}
        low = min(min(s) for _, s in pieces) + shift
        if want is None:
            targets = list(range(low, 0))
        else:
            targets = [N for N in want if N >= low]
        if not targets:
            return {}
        top = max(targets)
        out: Dict[int, YPoly] = {}
        for csyms, series in pieces:
            maxdeg = top - shift - min(series)
            if maxdeg < 0:
                continue
            cre = self._eplus(alpha, maxdeg)
            for sym in csyms:
                cre = _series_mul(cre, self._creation(sym, maxdeg), maxdeg)
            for ze, p in series.items():
                for N in targets:
                    deg = N - shift - ze
                    if deg < 0 or deg not in cre:
                        continue
                    slot = out.setdefault(N, {})
                    _yadd(slot, _ymul(cre[deg], p))
        return {N: p for N, p in out.items() if p}

    def _vertex(self, a: "FockState", w: "FockState", want) -> Dict[int, "FockState"]:
        acc: Dict[int, dict] = {}
        for (alpha, pm), ca in a.terms.items():
            for beta in w.exponents():
                qpart = w.polynomial_part(beta)
                qy: YPoly = {}
                for m, c in qpart.terms.items():
                    ym, f = self._to_y(m)
                    _yadd(qy, {ym: c * f})
                pm_y, pf = self._to_y(pm)
                comps = self._vertex_components(alpha, pm, beta, qy, want)
                gamma = tuple(x + y for x, y in zip(alpha, beta))
                for N, yp in comps.items():
                    st = self._from_y(yp)
                    slot = acc.setdefault(N, {})
                    for m, c in st.items():
                        _add_into(slot, {(gamma, m): c * ca})
        return {N: FockState(self, {k: v for k, v in d.items() if not v.is_zero()}) for N, d in acc.items()}

    def vertex_mode(self, a: "FockState", n: int, w: "FockState") -> "FockState":
        """a_(n) w."""
        comps = self._vertex(a, w, [-n - 1])
        return comps.get(-n - 1, self.zero())

    def lambda_bracket(self, a: "FockState", w: "FockState") -> "FockLambda":
        comps = self._vertex(a, w, None)
        out = {}
        for N, st in comps.items():
            n = -N - 1
            if st.is_zero():
                continue
            out[n] = st * Scalar(Fraction(1, factorial(n)))
        return FockLambda(self, out)

    def translate(self, w: "FockState") -> "FockState":
        """d(Q|gamma>) = (dQ)|gamma> + :gamma_field Q:|gamma>."""
        out = {}
        for gamma in w.exponents():
            q = w.polynomial_part(gamma)
            res = self.alg.translate(q) + self.alg.normal_product(self.field(gamma), q)
            for m, c in res.terms.items():
                _add_into(out, {(gamma, m): c})
        return FockState(self, out)

    def multiply(self, s, w: "FockState") -> "FockState":
        """:s w: for a Heisenberg state s."""
        if isinstance(s, State):
            s = self.from_state(s)
        return self.vertex_mode(s, -1, w)

    def heis_bracket(self, h: str, w: "FockState") -> "FockLambda":
        return self.lambda_bracket(self.gen(h), w)

    def screen(self, S: "ScreeningCharge", w: "FockState") -> "FockState":
        """(P e^beta)_(0) w."""
        return self.vertex_mode(S.as_fock(self), 0, w)


class FockState:
    """Finite sum of terms (exponent, Heisenberg monomial) -> Scalar."""

    __slots__ = ("space", "terms")

    def __init__(self, space: FockSpace, terms):
        self.space = space
        self.terms = terms

    def exponents(self):
        seen = []
        for g, _ in self.terms:
            if g not in seen:
                seen.append(g)
        return seen

    def polynomial_part(self, gamma=None) -> State:
        if gamma is None:
            exps = self.exponents()
            if len(exps) > 1:
                raise ValueError("state has several exponents")
            gamma = exps[0] if exps else self.space.zero_weight()
        return State(self.space.alg, {m: c for (g, m), c in self.terms.items() if g == tuple(gamma)})

    def exponent(self) -> Weight:
        exps = self.exponents()
        if len(exps) != 1:
            raise ValueError("state is not supported on a single exponent")
        return exps[0]

    def parity(self) -> int:
        ps = {self.space.lattice_parity(g) for g, _ in self.terms}
        if len(ps) > 1:
            raise ValueError("mixed parity")
        return ps.pop() if ps else 0

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "FockState"):
        out = dict(self.terms)
        _add_into(out, other.terms)
        return FockState(self.space, out)

    def __neg__(self):
        return FockState(self.space, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = scalar(c)
        if c.is_zero():
            return FockState(self.space, {})
        return FockState(self.space, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, FockState):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def map_coefficients(self, fn) -> "FockState":
        out = {}
        for k, v in self.terms.items():
            nv = fn(v)
            if not nv.is_zero():
                out[k] = nv
        return FockState(self.space, out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for gamma in self.exponents():
            poly = self.polynomial_part(gamma)
            ket = "|" + ",".join(render(c) for c in gamma) + ">"
            if all(c.is_zero() for c in gamma):
                parts.append(str(poly))
            elif len(poly.terms) == 1 and () in poly.terms:
                parts.append(render_terms([(poly.terms[()], ket)]))
            else:
                parts.append(f"({poly}) {ket}")
        return " + ".join(parts)

    def __repr__(self):
        return f"FockState({self})"


class FockLambda:
    """Polynomial in lambda with FockState coefficients."""

    def __init__(self, space: FockSpace, coeffs: Dict[int, FockState]):
        self.space = space
        self.coeffs = {p: s for p, s in coeffs.items() if not s.is_zero()}

    def coefficient(self, j: int) -> FockState:
        return self.coeffs.get(j, self.space.zero())

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, FockLambda):
            return self.coeffs == other.coeffs
        if other == 0:
            return not self.coeffs
        return NotImplemented

    def __sub__(self, other: "FockLambda"):
        out = dict(self.coeffs)
        for p, s in other.coeffs.items():
            out[p] = out.get(p, self.space.zero()) - s
        return FockLambda(self.space, out)

    def __add__(self, other: "FockLambda"):
        out = dict(self.coeffs)
        for p, s in other.coeffs.items():
            out[p] = out.get(p, self.space.zero()) + s
        return FockLambda(self.space, out)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for p in sorted(self.coeffs):
            lam = "" if p == 0 else ("lambda" if p == 1 else f"lambda^{p}")
            body = str(self.coeffs[p])
            parts.append(body if not lam else f"({body}) {lam}")
        return " + ".join(parts)


class ScreeningCharge:
    """The zero mode of P e^beta; P is a State of the ambient Heisenberg algebra (or None for 1)."""

    def __init__(self, beta: Weight, prefactor: State = None):
        self.beta = tuple(beta)
        self.prefactor = prefactor
        if all(c.is_zero() for c in self.beta):
            raise ValueError("screening exponent must be nonzero")

    def as_fock(self, space: FockSpace) -> FockState:
        if self.prefactor is None:
            return space.vector(self.beta)
        return space.from_state(self.prefactor, self.beta)

    def __str__(self):
        p = "1" if self.prefactor is None else str(self.prefactor)
        return f"({p}, [{', '.join(render(c) for c in self.beta)}])"


# functional interface

def fock_vector(space: FockSpace, gamma: Weight) -> FockState:
    return space.vector(gamma)


def fock_translate(w: FockState) -> FockState:
    return w.space.translate(w)


def fock_multiply(s, w: FockState) -> FockState:
    return w.space.multiply(s, w)


def heis_bracket(h: str, w: FockState) -> FockLambda:
    return w.space.heis_bracket(h, w)


def vertex_mode(a: FockState, n: int, w: FockState) -> FockState:
    return w.space.vertex_mode(a, n, w)


def screen(S: ScreeningCharge, w: FockState) -> FockState:
    return w.space.screen(S, w)
