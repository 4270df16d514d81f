"""Freely generated vertex superalgebras: canonical states, normal products and lambda-brackets.

A state is a finite linear combination of canonical monomials.  A canonical
monomial is a tuple of symbols ``(generator_index, derivative_order)`` sorted
ascending and read as the right-nested normal ordered product
``:s1 :s2 :... sk:::``.  Generator brackets are stored as lambda-polynomials
whose coefficients may be composite states; everything else follows from
sesquilinearity, skew-symmetry, the non-commutative Wick formula and
quasi-associativity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Dict, Mapping, Tuple

from .scalars import ONE, ZERO, Scalar, render, scalar

Symbol = Tuple[int, int]
Monomial = Tuple[Symbol, ...]
StateDict = Dict[Monomial, Scalar]
LamDict = Dict[int, StateDict]

UNIT: Monomial = ()


class InconsistentSpec(ValueError):
    """A bracket table violating skew-symmetry, parity or weight homogeneity."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


# ---------------------------------------------------------------------------
# dictionary helpers
# ---------------------------------------------------------------------------

def _add_into(target: StateDict, src: Mapping[Monomial, Scalar], coeff: Scalar = ONE) -> None:
    one = coeff == 1
    for mono, c in src.items():
        v = c if one else c * coeff
        old = target.get(mono)
        if old is None:
            target[mono] = v
        else:
            s = old + v
            if s.is_zero():
                del target[mono]
            else:
                target[mono] = s


def _clean(d: StateDict) -> StateDict:
    return {m: c for m, c in d.items() if not c.is_zero()}


def _lam_add(target: LamDict, power: int, src: Mapping[Monomial, Scalar], coeff: Scalar = ONE) -> None:
    slot = target.setdefault(power, {})
    _add_into(slot, src, coeff)
    if not slot:
        del target[power]


def _lam_clean(d: LamDict) -> LamDict:
    out = {}
    for p, s in d.items():
        s = _clean(s)
        if s:
            out[p] = s
    return out


# ---------------------------------------------------------------------------
# specifications
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Generator:
    name: str
    parity: int
    weight: Fraction


@dataclass
class AlgebraSpec:
    """Generators plus a table of generator lambda-brackets.

    ``brackets[(a, b)]`` maps a power of lambda to a list of ``(coefficient, word)``
    where a word is a tuple of ``(generator_name, derivative_order)`` read as a
    right-nested normal ordered product in the given order (the empty word is
    the unit).  Pairs missing from the table are zero unless the reversed pair
    is present, in which case skew-symmetry supplies them.
    """

    generators: list
    brackets: dict = field(default_factory=dict)

    def names(self):
        return [g.name for g in self.generators]


def _gen(name, parity=0, weight=1):
    return Generator(name, int(parity), Fraction(weight))


def heisenberg(gram, names=None) -> AlgebraSpec:
    """[h_i lambda h_j] = gram[i][j] lambda."""
    r = len(gram)
    names = list(names) if names is not None else ([f"h{i + 1}" for i in range(r)] if r > 1 else ["h"])
    gens = [_gen(nm) for nm in names]
    br = {}
    for i in range(r):
        for j in range(r):
            g = scalar(gram[i][j])
            if not g.is_zero():
                br[(names[i], names[j])] = {1: [(g, ())]}
    return AlgebraSpec(gens, br)


def _pair_names(base, star, r):
    if r == 1:
        return [base], [base + star]
    return [f"{base}{i + 1}" for i in range(r)], [f"{base}{i + 1}{star}" for i in range(r)]


def bc_pairs(r: int, names=None, weight=Fraction(1, 2)) -> AlgebraSpec:
    """Odd pairs with [psi lambda psi*] = 1."""
    ps, qs = names if names is not None else _pair_names("psi", "*", r)
    gens = []
    br = {}
    for p, q in zip(ps, qs):
        gens += [_gen(p, 1, weight), _gen(q, 1, 1 - Fraction(weight))]
        br[(p, q)] = {0: [(ONE, ())]}
    return AlgebraSpec(gens, br)


def betagamma_pairs(r: int, names=None, weight=Fraction(1)) -> AlgebraSpec:
    """Even pairs with [beta lambda gamma] = 1."""
    ps, qs = names if names is not None else _pair_names("beta", "", r)
    if names is None:
        qs = [q.replace("beta", "gamma") for q in ps]
    gens = []
    br = {}
    for p, q in zip(ps, qs):
        gens += [_gen(p, 0, weight), _gen(q, 0, 1 - Fraction(weight))]
        br[(p, q)] = {0: [(ONE, ())]}
    return AlgebraSpec(gens, br)


def degenerate_betagamma_pairs(r: int, names=None) -> AlgebraSpec:
    """Even pairs (a_i, a_i*) of weight 1 with all brackets zero."""
    ps, qs = names if names is not None else _pair_names("a", "*", r)
    gens = []
    for p, q in zip(ps, qs):
        gens += [_gen(p, 0, 1), _gen(q, 0, 1)]
    return AlgebraSpec(gens, {})


def gl_parity(i: int, m: int) -> int:
    """Parity of the i-th basis vector of C^{m|n} (1-based)."""
    return 0 if i <= m else 1


def gl_supertrace_form(m: int, n: int):
    """str(e_ij e_pq) as a function of index tuples."""

    def form(a, b):
        (i, j), (p, q) = a, b
        return (-1) ** gl_parity(i, m) if (j == p and i == q) else 0

    return form


def gl_critical_form(m: int, n: int):
    """kappa_c(x, y) = -(m-n) str(xy) + str(x) str(y)."""
    st = gl_supertrace_form(m, n)

    def form(a, b):
        (i, j), (p, q) = a, b
        val = -(m - n) * st(a, b)
        if i == j and p == q:
            val += (-1) ** (gl_parity(i, m) + gl_parity(p, m))
        return val

    return form


def affine_gl(m: int, n: int, shift=ZERO) -> AlgebraSpec:
    """V^kappa(gl(m|n)) with kappa = shift * str(xy) + kappa_c, shift = k + h^vee.

    Generators e_ij (row-major), [e_ij lambda e_kl] = [e_ij, e_kl] + kappa(e_ij, e_kl) lambda.
    """
    shift = scalar(shift)
    N = m + n
    idx = [(i, j) for i in range(1, N + 1) for j in range(1, N + 1)]
    name = {ij: f"e{ij[0]}{ij[1]}" for ij in idx}
    par = {ij: (gl_parity(ij[0], m) + gl_parity(ij[1], m)) % 2 for ij in idx}
    gens = [_gen(name[ij], par[ij], 1) for ij in idx]
    st = gl_supertrace_form(m, n)
    crit = gl_critical_form(m, n)
    br = {}
    for a in idx:
        for b in idx:
            (i, j), (k, l) = a, b
            terms = {}
            if j == k:
                terms[(i, l)] = terms.get((i, l), 0) + 1
            if l == i:
                sgn = -1 if (par[a] and par[b]) else 1
                terms[(k, j)] = terms.get((k, j), 0) - sgn
            lam0 = [(Scalar(c), ((name[ij], 0),)) for ij, c in terms.items() if c != 0]
            central = shift * st(a, b) + crit(a, b)
            entry = {}
            if lam0:
                entry[0] = lam0
            if not central.is_zero():
                entry[1] = [(central, ())]
            if entry:
                br[(name[a], name[b])] = entry
    return AlgebraSpec(gens, br)


def tensor(*specs: AlgebraSpec) -> AlgebraSpec:
    gens = []
    br = {}
    seen = set()
    for s in specs:
        for g in s.generators:
            if g.name in seen:
                raise InconsistentSpec(f"duplicate generator name {g.name!r}")
            seen.add(g.name)
            gens.append(g)
        br.update(s.brackets)
    return AlgebraSpec(gens, br)


# ---------------------------------------------------------------------------
# the algebra
# ---------------------------------------------------------------------------

class Algebra:
    """Validated handle with memoized normal ordering and bracket evaluation."""

    def __init__(self, spec: AlgebraSpec, validate: bool = True):
        self.spec = spec
        self.names = [g.name for g in spec.generators]
        self.index = {nm: i for i, nm in enumerate(self.names)}
        if len(self.index) != len(self.names):
            raise InconsistentSpec("duplicate generator names")
        self.parities = [g.parity for g in spec.generators]
        self.weights = [Fraction(g.weight) for g in spec.generators]
        self._raw = {}
        for (a, b), entry in spec.brackets.items():
            if a not in self.index or b not in self.index:
                raise InconsistentSpec(f"bracket entry for unknown generator in {(a, b)}", (a, b))
            ia, ib = self.index[a], self.index[b]
            raw = {}
            for power, terms in entry.items():
                lst = []
                for coeff, word in terms:
                    w = tuple((self.index[g], int(d)) for g, d in word)
                    lst.append((scalar(coeff), w))
                if lst:
                    raw[int(power)] = lst
            self._raw[(ia, ib)] = raw
        self._table_cache = {}
        self._insert_cache = {}
        self._np_cache = {}
        self._br_cache = {}
        self._d_cache = {}
        if validate:
            self._validate_homogeneity()
            self._validate_skew()

    # -- metadata ---------------------------------------------------------
    def parity_of(self, mono: Monomial) -> int:
        p = 0
        for g, _ in mono:
            p ^= self.parities[g]
        return p

    def weight_of(self, mono: Monomial) -> Fraction:
        return sum((self.weights[g] + d for g, d in mono), Fraction(0))

    def _word_weight(self, word):
        return sum((self.weights[g] + d for g, d in word), Fraction(0))

    def _validate_homogeneity(self):
        for (ia, ib), raw in self._raw.items():
            pa, pb = self.parities[ia], self.parities[ib]
            target = self.weights[ia] + self.weights[ib]
            for power, terms in raw.items():
                for coeff, word in terms:
                    if coeff.is_zero():
                        continue
                    w = self._word_weight(word)
                    if w != target - power - 1:
                        raise InconsistentSpec(
                            f"weight violation in [{self.names[ia]} lambda {self.names[ib]}] at lambda^{power}: "
                            f"term of weight {w}, expected {target - power - 1}",
                            (self.names[ia], self.names[ib]),
                        )
                    if self.parity_of(word) != (pa ^ pb):
                        raise InconsistentSpec(
                            f"parity violation in [{self.names[ia]} lambda {self.names[ib]}]",
                            (self.names[ia], self.names[ib]),
                        )

    def _validate_skew(self):
        for (ia, ib) in list(self._raw):
            if ia < ib and (ib, ia) in self._raw:
                given = self._table_from_raw(ib, ia)
                derived = self._skew(self._table_from_raw(ia, ib), self._sign(ia, ib) * -1)
                if _lam_sub(given, derived):
                    raise InconsistentSpec(
                        f"skew-symmetry violated between [{self.names[ia]} lambda {self.names[ib]}] "
                        f"and [{self.names[ib]} lambda {self.names[ia]}]",
                        (self.names[ia], self.names[ib]),
                    )
            if ia == ib:
                given = self._table_from_raw(ia, ia)
                derived = self._skew(given, self._sign(ia, ia) * -1)
                if _lam_sub(given, derived):
                    raise InconsistentSpec(
                        f"skew-symmetry violated for [{self.names[ia]} lambda {self.names[ia]}]",
                        (self.names[ia], self.names[ia]),
                    )

    def _sign(self, ia: int, ib: int) -> int:
        return -1 if (self.parities[ia] and self.parities[ib]) else 1

    def _mono_sign(self, A: Monomial, B: Monomial) -> int:
        return -1 if (self.parity_of(A) and self.parity_of(B)) else 1

    # -- generator table ----------------------------------------------------
    def _word_to_state(self, word) -> StateDict:
        state = {UNIT: ONE}
        for sym in reversed(word):
            nxt = {}
            for mono, c in state.items():
                _add_into(nxt, self._insert(sym, mono), c)
            state = nxt
        return state

    def _table_from_raw(self, ia: int, ib: int) -> LamDict:
        out: LamDict = {}
        for power, terms in self._raw.get((ia, ib), {}).items():
            for coeff, word in terms:
                _lam_add(out, power, self._word_to_state(word), coeff)
        return out

    def _table(self, ia: int, ib: int) -> LamDict:
        key = (ia, ib)
        hit = self._table_cache.get(key)
        if hit is not None:
            return hit
        if key in self._raw:
            res = self._table_from_raw(ia, ib)
        elif (ib, ia) in self._raw:
            res = self._skew(self._table_from_raw(ib, ia), -self._sign(ia, ib))
        else:
            res = {}
        self._table_cache[key] = res
        return res

    def _skew(self, br: LamDict, sign: int) -> LamDict:
        """sign * sum_j (-lambda - d)^j f_j for br = sum_j lambda^j f_j."""
        out: LamDict = {}
        for j, f in br.items():
            for r in range(j + 1):
                c = Scalar(sign * (-1) ** j * comb(j, r))
                _lam_add(out, j - r, self._translate_dict(f, r), c)
        return out

    def _gen_bracket(self, sa: Symbol, sb: Symbol) -> LamDict:
        """[d^i a lambda d^j b] = (-lambda)^i (lambda + d)^j [a lambda b]."""
        (ia, di), (ib, dj) = sa, sb
        base = self._table(ia, ib)
        if not base:
            return {}
        if di == 0 and dj == 0:
            return base
        out: LamDict = {}
        sgn = (-1) ** di
        for k, c in base.items():
            for r in range(dj + 1):
                _lam_add(out, k + dj - r + di, self._translate_dict(c, r), Scalar(sgn * comb(dj, r)))
        return out

    # -- translation --------------------------------------------------------
    def _translate_mono(self, mono: Monomial) -> StateDict:
        hit = self._d_cache.get(mono)
        if hit is not None:
            return hit
        if not mono:
            res = {}
        else:
            (g, d), rest = mono[0], mono[1:]
            res = dict(self._insert((g, d + 1), rest))
            for m, c in self._translate_mono(rest).items():
                _add_into(res, self._insert(mono[0], m), c)
        self._d_cache[mono] = res
        return res

    def _translate_dict(self, state: StateDict, times: int = 1) -> StateDict:
        for _ in range(times):
            nxt: StateDict = {}
            for mono, c in state.items():
                _add_into(nxt, self._translate_mono(mono), c)
            state = nxt
        return state

    # -- normal ordering ----------------------------------------------------
    def _insert(self, a: Symbol, B: Monomial) -> StateDict:
        """:a B: for a symbol a and a canonical monomial B."""
        if not B:
            return {(a,): ONE}
        b = B[0]
        if a < b or (a == b and not self.parities[a[0]]):
            return {(a,) + B: ONE}
        key = (a, B)
        hit = self._insert_cache.get(key)
        if hit is not None:
            return hit
        rest = B[1:]
        out: StateDict = {}
        if a == b:
            # odd a: :a :a X:: = 1/2 sum_j (-1)^j :(d^{j+1} c_j / (j+1)) X:
            for j, c in self._gen_bracket(a, a).items():
                coeff = Scalar(Fraction((-1) ** j, 2 * (j + 1)))
                _add_into(out, self._np_dict_mono(self._translate_dict(c, j + 1), rest), coeff)
        else:
            sign = self._sign(a[0], b[0])
            for m, c in self._insert(a, rest).items():
                _add_into(out, self._insert(b, m), c if sign == 1 else -c)
            for j, c in self._gen_bracket(a, b).items():
                coeff = Scalar(Fraction((-1) ** j, j + 1))
                _add_into(out, self._np_dict_mono(self._translate_dict(c, j + 1), rest), coeff)
        self._insert_cache[key] = out
        return out

    def _np_dict_mono(self, X: StateDict, Y: Monomial) -> StateDict:
        out: StateDict = {}
        for m, c in X.items():
            _add_into(out, self._np(m, Y), c)
        return out

    def _np_dicts(self, X: StateDict, Y: StateDict) -> StateDict:
        out: StateDict = {}
        for my, cy in Y.items():
            for mx, cx in X.items():
                _add_into(out, self._np(mx, my), cx * cy)
        return out

    def _np(self, A: Monomial, B: Monomial) -> StateDict:
        """:A B: for canonical monomials, by quasi-associativity on A = :a A':."""
        if not A:
            return {B: ONE}
        if len(A) == 1:
            return self._insert(A[0], B)
        key = (A, B)
        hit = self._np_cache.get(key)
        if hit is not None:
            return hit
        a, Ap = A[0], A[1:]
        out: StateDict = {}
        for m, c in self._np(Ap, B).items():
            _add_into(out, self._insert(a, m), c)
        # :(int_0^d a) [A' lambda B]:
        for j, cj in self._br(Ap, B).items():
            sym = (a[0], a[1] + j + 1)
            inv = Scalar(Fraction(1, j + 1))
            for m, c in cj.items():
                _add_into(out, self._insert(sym, m), c * inv)
        # p(a, A') :(int_0^d A') [a lambda B]:
        sign = -1 if (self.parities[a[0]] and self.parity_of(Ap)) else 1
        for j, dj in self._br((a,), B).items():
            dAp = self._translate_dict({Ap: ONE}, j + 1)
            _add_into(out, self._np_dicts(dAp, dj), Scalar(Fraction(sign, j + 1)))
        self._np_cache[key] = out
        return out

    # -- lambda brackets ----------------------------------------------------
    def _br(self, A: Monomial, B: Monomial) -> LamDict:
        if not A or not B:
            return {}
        if len(B) == 1:
            if len(A) == 1:
                return self._gen_bracket(A[0], B[0])
            key = (A, B)
            hit = self._br_cache.get(key)
            if hit is not None:
                return hit
            res = self._skew(self._br(B, A), -self._mono_sign(A, B))
            self._br_cache[key] = res
            return res
        key = (A, B)
        hit = self._br_cache.get(key)
        if hit is not None:
            return hit
        b, Bp = B[0], B[1:]
        out: LamDict = {}
        brAb = self._br(A, (b,))
        for j, cj in brAb.items():
            _lam_add(out, j, self._np_dict_mono(cj, Bp))
        sign = -1 if (self.parity_of(A) and self.parities[b[0]]) else 1
        for j, dj in self._br(A, Bp).items():
            slot: StateDict = {}
            for m, c in dj.items():
                _add_into(slot, self._insert(b, m), c if sign == 1 else -c)
            _lam_add(out, j, slot)
        for j, cj in brAb.items():
            for mc, coef in cj.items():
                for i, e in self._br(mc, Bp).items():
                    _lam_add(out, j + i + 1, e, coef * Scalar(Fraction(1, i + 1)))
        out = _lam_clean(out)
        self._br_cache[key] = out
        return out

    def _br_dicts(self, X: StateDict, Y: StateDict) -> LamDict:
        out: LamDict = {}
        for mx, cx in X.items():
            for my, cy in Y.items():
                for j, s in self._br(mx, my).items():
                    _lam_add(out, j, s, cx * cy)
        return out

    # -- public API ---------------------------------------------------------
    def state(self, terms: Mapping[Monomial, Scalar]) -> "State":
        return State(self, _clean({m: scalar(c) for m, c in terms.items()}))

    def unit(self) -> "State":
        return State(self, {UNIT: ONE})

    def zero(self) -> "State":
        return State(self, {})

    def scalar_state(self, c) -> "State":
        c = scalar(c)
        return State(self, {UNIT: c} if not c.is_zero() else {})

    def gen(self, name: str, deriv: int = 0) -> "State":
        return State(self, {((self.index[name], deriv),): ONE})

    def word(self, *symbols) -> "State":
        """Right-nested normal ordered product of the given (name, deriv) symbols or names."""
        syms = []
        for s in symbols:
            if isinstance(s, str):
                syms.append((self.index[s], 0))
            else:
                syms.append((self.index[s[0]], int(s[1])))
        return State(self, self._word_to_state(tuple(syms)))

    def translate(self, a: "State", times: int = 1) -> "State":
        return State(self, self._translate_dict(a.terms, times))

    def normal_product(self, a: "State", b: "State") -> "State":
        return State(self, _clean(self._np_dicts(a.terms, b.terms)))

    def lambda_bracket(self, a: "State", b: "State") -> "LambdaPoly":
        return LambdaPoly(self, _lam_clean(self._br_dicts(a.terms, b.terms)))

    def nth_product(self, a: "State", b: "State", n: int) -> "State":
        if n < 0:
            if n == -1:
                return self.normal_product(a, b)
            # a_(-1-k) b = :(d^k a / k!) b:
            k = -1 - n
            return self.normal_product(self.translate(a, k) * Scalar(Fraction(1, factorial(k))), b)
        br = self.lambda_bracket(a, b)
        return br.coefficient(n) * factorial(n)

    def skew_apply(self, br: "LambdaPoly", sign: int) -> "LambdaPoly":
        return LambdaPoly(self, _lam_clean(self._skew(br.coeffs_dict(), sign)))

    def render_symbol(self, sym: Symbol) -> str:
        g, d = sym
        nm = self.names[g]
        if d == 0:
            return nm
        return f"d^{d} {nm}"

    def render_monomial(self, mono: Monomial) -> str:
        if not mono:
            return "1"
        if len(mono) == 1:
            return self.render_symbol(mono[0])
        return ":" + " ".join(self.render_symbol(s) for s in mono) + ":"

    def sort_key(self, mono: Monomial):
        return (len(mono), mono)


def _lam_sub(a: LamDict, b: LamDict) -> LamDict:
    out: LamDict = {p: dict(s) for p, s in a.items()}
    for p, s in b.items():
        _lam_add(out, p, s, Scalar(-1))
    return _lam_clean(out)


def _render_coeff_term(c: Scalar, body: str) -> str:
    """Render c*body with the conventions of the text form."""
    if body == "1":
        return render(c)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    txt = render(c)
    if " " in txt or "/" in txt and txt.startswith("("):
        txt = f"({txt})"
    return f"{txt} {body}"


def render_terms(items) -> str:
    """Join rendered (coefficient, body) pairs with signs."""
    parts = []
    for c, body in items:
        t = _render_coeff_term(c, body)
        if parts:
            if t.startswith("-"):
                parts.append(" - " + t[1:])
            else:
                parts.append(" + " + t)
        else:
            parts.append(t)
    return "".join(parts) if parts else "0"


class State:
    """Immutable linear combination of canonical monomials of an Algebra."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: Algebra, terms: StateDict):
        self.alg = alg
        self.terms = terms

    def __add__(self, other):
        if isinstance(other, State):
            out = dict(self.terms)
            _add_into(out, other.terms)
            return State(self.alg, out)
        return self + self.alg.scalar_state(other)

    __radd__ = __add__

    def __neg__(self):
        return State(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, c):
        if isinstance(c, State):
            return self.alg.normal_product(self, c)
        c = scalar(c)
        if c.is_zero():
            return State(self.alg, {})
        return State(self.alg, {m: v * c for m, v in self.terms.items()})

    def __rmul__(self, c):
        return self * c

    def __eq__(self, other):
        if isinstance(other, State):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: Monomial) -> Scalar:
        return self.terms.get(mono, ZERO)

    def weights(self) -> set:
        return {self.alg.weight_of(m) for m in self.terms}

    def weight(self) -> Fraction:
        ws = self.weights()
        if len(ws) != 1:
            raise ValueError("state is not homogeneous")
        return next(iter(ws))

    def parity(self) -> int:
        ps = {self.alg.parity_of(m) for m in self.terms}
        if len(ps) > 1:
            raise ValueError("state is not parity homogeneous")
        return ps.pop() if ps else 0

    def map_coefficients(self, fn) -> "State":
        return State(self.alg, _clean({m: fn(c) for m, c in self.terms.items()}))

    def __str__(self):
        items = sorted(self.terms.items(), key=lambda kv: self.alg.sort_key(kv[0]))
        return render_terms((c, self.alg.render_monomial(m)) for m, c in items)

    def __repr__(self):
        return f"State({self})"


class LambdaPoly:
    """Polynomial in lambda with State coefficients."""

    __slots__ = ("alg", "coeffs")

    def __init__(self, alg: Algebra, coeffs: LamDict):
        self.alg = alg
        self.coeffs = coeffs

    def coeffs_dict(self) -> LamDict:
        return self.coeffs

    def coefficient(self, j: int) -> State:
        return State(self.alg, dict(self.coeffs.get(j, {})))

    def powers(self):
        return sorted(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return max(self.coeffs) if self.coeffs else -1

    def __add__(self, other: "LambdaPoly"):
        out: LamDict = {p: dict(s) for p, s in self.coeffs.items()}
        for p, s in other.coeffs.items():
            _lam_add(out, p, s)
        return LambdaPoly(self.alg, out)

    def __neg__(self):
        return LambdaPoly(self.alg, {p: {m: -c for m, c in s.items()} for p, s in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = scalar(c)
        if c.is_zero():
            return LambdaPoly(self.alg, {})
        return LambdaPoly(self.alg, {p: {m: v * c for m, v in s.items()} for p, s in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, LambdaPoly):
            return self.coeffs == other.coeffs
        if other == 0:
            return not self.coeffs
        return NotImplemented

    @classmethod
    def from_states(cls, alg: Algebra, coeffs: Mapping[int, State]) -> "LambdaPoly":
        return cls(alg, _lam_clean({p: dict(s.terms) for p, s in coeffs.items()}))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for p in sorted(self.coeffs):
            st = State(self.alg, self.coeffs[p])
            body = str(st)
            lam = "" if p == 0 else ("lambda" if p == 1 else f"lambda^{p}")
            if not lam:
                parts.append(body)
            elif len(st.terms) == 1:
                mono, c = next(iter(st.terms.items()))
                if not mono:
                    parts.append(_render_coeff_term(c, lam))
                else:
                    parts.append(_render_coeff_term(c, f"{self.alg.render_monomial(mono)} {lam}"))
            else:
                parts.append(f"({body}) {lam}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"LambdaPoly({self})"


def build_algebra(spec: AlgebraSpec) -> Algebra:
    return Algebra(spec)


# convenience wrappers mirroring the functional interface

def translate(a: State, times: int = 1) -> State:
    return a.alg.translate(a, times)


def normal_product(a: State, b: State) -> State:
    return a.alg.normal_product(a, b)


def lambda_bracket(a: State, b: State) -> LambdaPoly:
    return a.alg.lambda_bracket(a, b)


def nth_product(a: State, b: State, n: int) -> State:
    return a.alg.nth_product(a, b, n)


# ---------------------------------------------------------------------------
# presentation checks
# ---------------------------------------------------------------------------

TwoVar = Dict[Tuple[int, int], StateDict]


@dataclass
class ConsistencyReport:
    skew_residuals: dict
    jacobi_residuals: dict
    error: str = ""

    @property
    def ok(self) -> bool:
        return not self.error and not self.skew_residuals and not self.jacobi_residuals

    def summary(self) -> str:
        if self.error:
            return f"inconsistent specification: {self.error}"
        return (f"skew-symmetry failures: {len(self.skew_residuals)}, "
                f"Jacobi failures: {len(self.jacobi_residuals)}")


def _two_add(target: TwoVar, key, src: StateDict, coeff: Scalar = ONE):
    slot = target.setdefault(key, {})
    _add_into(slot, src, coeff)
    if not slot:
        del target[key]


def jacobi_residual(alg: Algebra, A: StateDict, B: StateDict, C: StateDict) -> TwoVar:
    """[a lambda [b mu c]] - [[a lambda b] lambda+mu c] - p(a,b) [b mu [a lambda c]] as {(i, j): state}."""
    out: TwoVar = {}
    for j, x in alg._br_dicts(B, C).items():
        for i, y in alg._br_dicts(A, x).items():
            _two_add(out, (i, j), y)
    for j, z in alg._br_dicts(A, B).items():
        for r, w in alg._br_dicts(z, C).items():
            # lambda^j (lambda + mu)^r
            for s in range(r + 1):
                _two_add(out, (j + s, r - s), w, Scalar(-comb(r, s)))
    pa = {alg.parity_of(m) for m in A}
    pb = {alg.parity_of(m) for m in B}
    sign = -1 if (pa == {1} and pb == {1}) else 1
    for j, u in alg._br_dicts(A, C).items():
        for i, v in alg._br_dicts(B, u).items():
            _two_add(out, (j, i), v, Scalar(-sign))
    return {k: _clean(v) for k, v in out.items() if _clean(v)}


def skew_residual(alg: Algebra, A: StateDict, B: StateDict) -> LamDict:
    ab = alg._br_dicts(A, B)
    ba = alg._br_dicts(B, A)
    pa = {alg.parity_of(m) for m in A}
    pb = {alg.parity_of(m) for m in B}
    sign = -1 if (pa == {1} and pb == {1}) else 1
    return _lam_sub(ba, alg._skew(ab, -sign))


def check_presentation(spec: AlgebraSpec, sample_budget=None) -> ConsistencyReport:
    """Skew-symmetry on all generator pairs and Jacobi on all generator triples.

    ``sample_budget`` optionally caps the number of triples examined (in a fixed order).
    """
    try:
        alg = Algebra(spec, validate=True)
    except InconsistentSpec as exc:
        return ConsistencyReport({}, {}, error=str(exc))
    n = len(alg.names)
    gens = [{((i, 0),): ONE} for i in range(n)]
    skew = {}
    for i in range(n):
        for j in range(n):
            if (i, j) in alg._raw and (j, i) in alg._raw or i == j:
                res = skew_residual(alg, gens[i], gens[j])
                if res:
                    skew[(alg.names[i], alg.names[j])] = res
    jac = {}
    count = 0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if sample_budget is not None and count >= sample_budget:
                    break
                count += 1
                res = jacobi_residual(alg, gens[i], gens[j], gens[k])
                if res:
                    jac[(alg.names[i], alg.names[j], alg.names[k])] = res
    return ConsistencyReport(skew, jac)
