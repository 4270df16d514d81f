"""Concrete free-field constructions for gl(n|1), gl(1|1) and gl(3|2).

Level conventions: ``eps`` is the deformation parameter, ``K = k + h^vee = (eps+1)/eps``
and ``varkappa = K - 1 = 1/eps``.  Every builder accepts ``eps`` so the same code
runs at generic (symbolic) level and at the critical value eps = -1 (K = 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Dict, List, Optional, Tuple

from .fock import FockSpace, FockState, ScreeningCharge
from .miura import DiffPoly, PsiDO, apply_to_function, as_state, w_coefficients
from .scalars import EPS, ONE, ZERO, Scalar, scalar
from .vacore import (
    Algebra,
    AlgebraSpec,
    State,
    _gen,
    affine_gl,
    bc_pairs,
    build_algebra,
    degenerate_betagamma_pairs,
    tensor,
)

F = Fraction


def level_K(eps=EPS) -> Scalar:
    eps = scalar(eps)
    return (eps + 1) / eps


def varkappa(eps=EPS) -> Scalar:
    return ONE / scalar(eps)


# ---------------------------------------------------------------------------
# root data of gl(n|1)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootDatumGlN1:
    """Simple roots (identified with coroots) of gl(n|1) in the basis u_1..u_{n+1}."""

    n: int

    @property
    def names(self) -> List[str]:
        return [f"u{i}" for i in range(1, self.n + 2)]

    def form(self) -> List[List[int]]:
        """kappa_V = diag(1, ..., 1, -1)."""
        N = self.n + 1
        return [[(1 if i < self.n else -1) if i == j else 0 for j in range(N)] for i in range(N)]

    def simple_root(self, i: int) -> Tuple[int, ...]:
        v = [0] * (self.n + 1)
        v[i - 1] = 1
        if i < self.n:
            v[i] = -1
        else:
            v[self.n] = 1
        return tuple(v)

    def pairing(self, a, b) -> int:
        g = self.form()
        return sum(a[i] * g[i][i] * b[i] for i in range(self.n + 1))

    def fundamental_weight_n(self) -> Tuple[int, ...]:
        """varpi_n = -u_{n+1}."""
        v = [0] * (self.n + 1)
        v[self.n] = -1
        return tuple(v)


# ---------------------------------------------------------------------------
# free-field spaces
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def ux_space(n: int, eps=EPS) -> FockSpace:
    """Heisenberg u_1..u_{n+1} at level K kappa_V together with the odd lattice direction x."""
    K = level_K(eps)
    rd = RootDatumGlN1(n)
    N = n + 2
    gram = [[ZERO] * N for _ in range(N)]
    for i in range(n + 1):
        gram[i][i] = K * rd.form()[i][i]
    gram[n + 1][n + 1] = ONE
    return FockSpace(gram, rd.names + ["x"], x_index=n + 1)


def t_gram(n: int, eps=EPS):
    K = level_K(eps)
    N = n + 1
    gram = [[ZERO] * N for _ in range(N)]
    for i in range(n):
        gram[i][i] = K
    gram[n][n] = K * (K - 1)
    return gram


@lru_cache(maxsize=None)
def t_space(n: int, eps=EPS) -> FockSpace:
    """Heisenberg t_1..t_{n+1} with [t_i t_i] = K lambda (i <= n), K(K-1) lambda (i = n+1)."""
    return FockSpace(t_gram(n, eps), [f"t{i}" for i in range(1, n + 2)])


def coset_algebra(n: int, eps=EPS) -> Algebra:
    return t_space(n, eps).alg


def t_in_ux(n: int, eps=EPS) -> Dict[str, DiffPoly]:
    """t_i = u_i (i <= n), t_{n+1} = u_{n+1} - K x."""
    K = level_K(eps)
    out = {f"t{i}": DiffPoly.var(f"u{i}") for i in range(1, n + 1)}
    out[f"t{n + 1}"] = DiffPoly.var(f"u{n + 1}") - DiffPoly.var("x") * K
    return out


def J_field(n: int) -> DiffPoly:
    """J = x + varpi_n = x - u_{n+1}."""
    return DiffPoly.var("x") - DiffPoly.var(f"u{n + 1}")


def Omega_field(n: int) -> DiffPoly:
    out = DiffPoly()
    for i in range(1, n + 2):
        out = out + DiffPoly.var(f"u{i}")
    return out


def h_field(n: int, i: int) -> DiffPoly:
    """Coroot h_i as a field: u_i - u_{i+1} (i < n), u_n + u_{n+1} (i = n)."""
    if i < n:
        return DiffPoly.var(f"u{i}") - DiffPoly.var(f"u{i + 1}")
    return DiffPoly.var(f"u{n}") + DiffPoly.var(f"u{n + 1}")


def h_tail(n: int, i: int) -> DiffPoly:
    """h_i + ... + h_n = u_i + u_{n+1}."""
    out = DiffPoly()
    for j in range(i, n + 1):
        out = out + h_field(n, j)
    return out


def H_field(n: int, i: int) -> DiffPoly:
    """H_i = -(h_i + ... + h_n)."""
    return -h_tail(n, i)


# ---------------------------------------------------------------------------
# screenings
# ---------------------------------------------------------------------------

def screening_data(n: int, i: int, eps=EPS, coords: str = "t") -> ScreeningCharge:
    """S_i = e^{-(t_i - t_{i+1})/K} (i < n), e^{-(t_n + t_{n+1})/K} (i = n)."""
    if not 1 <= i <= n:
        raise ValueError("screening index out of range")
    K = level_K(eps)
    c = -ONE / K
    if coords == "t":
        v = [ZERO] * (n + 1)
        v[i - 1] = c
        v[i] = -c if i < n else c
        return ScreeningCharge(tuple(v))
    if coords == "ux":
        v = [ZERO] * (n + 2)
        v[i - 1] = c
        if i < n:
            v[i] = -c
        else:
            v[n] = c  # -(u_n + u_{n+1})/K
            v[n + 1] = ONE  # + x
        return ScreeningCharge(tuple(v))
    raise ValueError("coords must be 't' or 'ux'")


def screen_state(S: ScreeningCharge, space: FockSpace, state) -> FockState:
    if isinstance(state, State):
        state = space.from_state(state)
    return space.screen(S, state)


# ---------------------------------------------------------------------------
# W_p and the tilde generators
# ---------------------------------------------------------------------------

def w_polys(n: int, pmax: int, eps=EPS) -> List[DiffPoly]:
    ws = w_coefficients(n, pmax)
    eps = scalar(eps)
    if eps != EPS:
        ws = [w.evaluate_eps(eps.constant_value()) for w in ws]
    return ws


def w_states(n: int, pmax: int, eps=EPS) -> List[State]:
    alg = coset_algebra(n, eps)
    return [as_state(w, alg) for w in w_polys(n, pmax, eps)]


def w_states_ux(n: int, pmax: int, eps=EPS) -> List[State]:
    sp = ux_space(n, eps)
    sub = t_in_ux(n, eps)
    return [as_state(w.substitute(sub), sp.alg) for w in w_polys(n, pmax, eps)]


class Gl11ScreeningProof:
    """Operators in the gl(1|1) screening argument on the t_1, t_2 Fock space.

    Q = e^H with H = -(t_1 + t_2)/K, D_1 = d + eps t_1, D_2 = d - eps t_2.
    """

    def __init__(self, eps=EPS):
        self.eps = scalar(eps)
        self.space = t_space(1, eps)
        self.beta = screening_data(1, 1, eps).beta
        self.Q = self.space.vector(self.beta)
        al = self.space.alg
        self.H = (al.gen("t1") + al.gen("t2")) * (-ONE / level_K(eps))
        self._t1, self._t2 = al.gen("t1"), al.gen("t2")

    def D1(self, w: FockState) -> FockState:
        return self.space.translate(w) + self.space.multiply(self._t1, w) * self.eps

    def D2(self, w: FockState) -> FockState:
        return self.space.translate(w) - self.space.multiply(self._t2, w) * self.eps

    def Q_mode(self, m: int, w: FockState) -> FockState:
        return self.space.vertex_mode(self.Q, m, w)

    def H_mode(self, w: FockState) -> FockState:
        return self.space.multiply(self.H, w)

    def commutator(self, m: int, D: Callable, w: FockState) -> FockState:
        """[Q_(m), D] w."""
        return self.Q_mode(m, D(w)) - D(self.Q_mode(m, w))

    def D2_power(self, n: int, w: FockState) -> FockState:
        for _ in range(n):
            w = self.D2(w)
        return w

    def _dQ(self, p: int) -> FockState:
        v = self.Q
        for _ in range(p):
            v = self.space.translate(v)
        return v

    def _dH(self, p: int) -> FockState:
        return self.space.from_state(self.space.alg.translate(self.H, p))

    def A(self, n: int) -> Tuple[FockState, FockState]:
        """(Q_(0) D_2^n 1, sum_p (-1)^{p+1} (p+1) C(n, p+1) D_2^{n-1-p} d^p Q)."""
        lhs = self.Q_mode(0, self.D2_power(n, self.space.vacuum()))
        rhs = self.space.zero()
        for p in range(n):
            rhs = rhs + self.D2_power(n - 1 - p, self._dQ(p)) * ((-1) ** (p + 1) * (p + 1) * comb(n, p + 1))
        return lhs, rhs

    def B(self, n: int) -> Tuple[FockState, FockState]:
        """(Q_(-1) D_2^n 1, sum_p (-1)^p (p+1) C(n, p) D_2^{n-p} d^p Q)."""
        lhs = self.Q_mode(-1, self.D2_power(n, self.space.vacuum()))
        rhs = self.space.zero()
        for p in range(n + 1):
            rhs = rhs + self.D2_power(n - p, self._dQ(p)) * ((-1) ** p * (p + 1) * comb(n, p))
        return lhs, rhs

    def C(self, n: int, literal: bool = False) -> Tuple[FockState, FockState]:
        """(H_(-1) D_2^n 1, sum_p (-1)^p C(n, p) D_2^{n-p} d^p H).

        literal=True inserts the extra factor (p+1) on the right, which fails for n >= 1.
        """
        lhs = self.H_mode(self.D2_power(n, self.space.vacuum()))
        rhs = self.space.zero()
        for p in range(n + 1):
            c = (-1) ** p * comb(n, p) * ((p + 1) if literal else 1)
            rhs = rhs + self.D2_power(n - p, self._dH(p)) * c
        return lhs, rhs


def tilde_generators(n: int, literal: bool = False) -> Tuple[State, State, State]:
    """W~_1, W~_2, W~_3 built from W_1, W_2, W_3 by normal products at generic eps.

    The d W_2 and W_2 W_1 terms of W~_3 use W~_2; with literal=True they use
    W_2 instead, which does not give a primary field.
    """
    alg = coset_algebra(n)
    W1, W2, W3 = w_states(n, 3)
    e = EPS
    np = alg.normal_product
    d = alg.translate
    a = (e + n - 1)
    b = (e + n)
    W1sq = np(W1, W1)
    Wt2 = (W2 - W1sq * (a / (2 * b)) - d(W1) * (a / 2)) * (-ONE / (e * (e + 1)))
    V = W2 if literal else Wt2
    inner = (d(V) * (e * (e + 1) / 2)
             - d(W1, 2) * (a / 6)
             + np(V, W1) * (e * (e + 1) / b)
             - np(W1, d(W1)) * (a / (2 * b))
             - np(W1, W1sq) * (a / (6 * b * b)))
    Wt3 = W3 + inner * (e + n - 2)
    return W1, Wt2, Wt3


def c_n(n: int) -> Scalar:
    e = EPS
    return -Scalar(n) * (e + n - 1) * (2 * e + n + 1) / (e * (e + 1))


# ---------------------------------------------------------------------------
# odd fields G_+ and G_-
# ---------------------------------------------------------------------------

def _field_state(space: FockSpace, f: DiffPoly) -> State:
    return as_state(f, space.alg)


def R_operator(n: int, i: int, w: FockState, eps=EPS) -> FockState:
    """R_i = varkappa d - x + (h_i + ... + h_n), acting on a Fock state."""
    sp = w.space
    field = _field_state(sp, h_tail(n, i) - DiffPoly.var("x"))
    return sp.translate(w) * varkappa(eps) + sp.multiply(field, w)


def g_fields(n: int, eps=EPS) -> Tuple[FockState, FockState]:
    """G_+ = |x>, G_- = R_1 ... R_n |-x>."""
    sp = ux_space(n, eps)
    x = [ZERO] * (n + 2)
    x[n + 1] = ONE
    Gp = sp.vector(tuple(x))
    x[n + 1] = -ONE
    Gm = sp.vector(tuple(x))
    for i in reversed(range(1, n + 1)):
        Gm = R_operator(n, i, Gm, eps)
    return Gp, Gm


def critical_W_script(n: int) -> DiffPoly:
    """(-1)^n (d + H_1) ... (d + H_n) 1 as a differential polynomial in u."""
    f = DiffPoly.const(1)
    for i in reversed(range(1, n + 1)):
        f = apply_to_function(PsiDO.first_order(H_field(n, i)), f)
    return f * ((-1) ** n)


def gl11_embedding(n: int) -> Dict[str, FockState]:
    """e11 -> J, e22 -> -J + W_n^script, e12 -> G_+, e21 -> G_- at eps = -1."""
    eps = Scalar(-1)
    sp = ux_space(n, eps)
    Gp, Gm = g_fields(n, eps)
    J = sp.from_state(_field_state(sp, J_field(n)))
    Wn = sp.from_state(_field_state(sp, critical_W_script(n)))
    return {"e11": J, "e12": Gp, "e21": Gm, "e22": Wn - J}


# ---------------------------------------------------------------------------
# gl(1|1) free field realization
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def wakimoto_space(eps=EPS) -> FockSpace:
    """u1, u2, x with [u1 u1] = k, [u2 u2] = -k, [x x] = 1 and k = (eps+1)/eps."""
    k = level_K(eps)
    return FockSpace([[k, ZERO, ZERO], [ZERO, -k, ZERO], [ZERO, ZERO, ONE]], ["u1", "u2", "x"], x_index=2)


def wakimoto_gl11(eps=EPS) -> Dict[str, FockState]:
    """e11 -> u1 + x, e12 -> psi, e21 -> :psi*(u1+u2): + k d psi*, e22 -> u2 - x."""
    sp = wakimoto_space(eps)
    k = level_K(eps)
    al = sp.alg
    psi = sp.vector((ZERO, ZERO, ONE))
    psis = sp.vector((ZERO, ZERO, -ONE))
    u12 = al.gen("u1") + al.gen("u2")
    return {
        "e11": sp.from_state(al.gen("u1") + al.gen("x")),
        "e12": psi,
        "e21": sp.multiply(u12, psis) + sp.translate(psis) * k,
        "e22": sp.from_state(al.gen("u2") - al.gen("x")),
    }


def wakimoto_screening(eps=EPS) -> ScreeningCharge:
    """psi e^{-(u1+u2)/k} = e^{x - (u1+u2)/k}."""
    k = level_K(eps)
    return ScreeningCharge((-ONE / k, -ONE / k, ONE))


def gl11_affine(eps=EPS) -> Algebra:
    """V^k(gl(1|1)) with k = (eps+1)/eps (h^vee = 0)."""
    return build_algebra(affine_gl(1, 1, level_K(eps)))


def map_state(images: Dict[str, FockState], state: State, space: FockSpace) -> FockState:
    """Extend a generator map to canonical states by right-nested normal products."""
    alg = state.alg
    out = space.zero()
    cache: Dict[Tuple[int, int], FockState] = {}

    def img(sym):
        if sym not in cache:
            g, d = sym
            v = images[alg.names[g]]
            for _ in range(d):
                v = space.translate(v)
            cache[sym] = v
        return cache[sym]

    for mono, c in state.terms.items():
        v = space.vacuum()
        for sym in reversed(mono):
            v = space.vertex_mode(img(sym), -1, v)
        out = out + v * c
    return out


def map_state_va(images: Dict[str, State], state: State, target: Algebra) -> State:
    out = target.zero()
    cache: Dict[Tuple[int, int], State] = {}
    alg = state.alg
    for mono, c in state.terms.items():
        v = target.unit()
        for sym in reversed(mono):
            if sym not in cache:
                g, d = sym
                cache[sym] = target.translate(images[alg.names[g]], d)
            v = target.normal_product(cache[sym], v)
        out = out + v * c
    return out


def homomorphism_residuals(images: Dict[str, FockState], source: Algebra, space: FockSpace) -> List[Tuple[str, str, int]]:
    """Generator pairs (a, b, lambda power) where [img a lambda img b] != img [a lambda b]."""
    bad = []
    for a in source.names:
        for b in source.names:
            want = source.lambda_bracket(source.gen(a), source.gen(b))
            got = space.lambda_bracket(images[a], images[b])
            top = max([j for j in want.powers()] + [j for j in got.coeffs] + [0])
            for j in range(top + 1):
                if got.coefficient(j) != map_state(images, want.coefficient(j), space):
                    bad.append((a, b, j))
    return bad


def homomorphism_residuals_va(images: Dict[str, State], source: Algebra, target: Algebra) -> List[Tuple[str, str, int]]:
    """Same as homomorphism_residuals with the target a vertex algebra given by generators."""
    bad = []
    for a in source.names:
        for b in source.names:
            want = source.lambda_bracket(source.gen(a), source.gen(b))
            got = target.lambda_bracket(images[a], images[b])
            top = max(list(want.powers()) + list(got.powers()) + [0])
            for j in range(top + 1):
                if got.coefficient(j) != map_state_va(images, want.coefficient(j), target):
                    bad.append((a, b, j))
    return bad


# ---------------------------------------------------------------------------
# gl(3|2) at the critical level
# ---------------------------------------------------------------------------

GL32_GENERATORS = [
    ("J", 0, F(1)), ("S2", 0, F(2)), ("L", 0, F(2)), ("S3", 0, F(3)),
    ("s1+", 1, F(3, 2)), ("s2+", 1, F(5, 2)), ("s1-", 1, F(3, 2)), ("s2-", 1, F(5, 2)),
]


def gl32_presentation(literal: bool = False) -> AlgebraSpec:
    """Generators and brackets of the critical-level W-superalgebra of sl(3|2).

    With ``literal=True`` the [L lambda s2] entry carries the undifferentiated
    ``5/4 s1 lambda`` term exactly as printed, which is not weight homogeneous;
    the default uses ``5/4 s2 lambda``, the term forced by the free field images.
    """
    gens = [_gen(nm, p, w) for nm, p, w in GL32_GENERATORS]
    h, q, t, s = F(1, 2), F(1, 4), F(2, 9), F(1, 6)
    br = {
        ("J", "J"): {1: [(2, ())]},
        ("L", "L"): {0: [(1, (("L", 1),))], 1: [(2, (("L", 0),))], 3: [(F(1, 12), ())]},
    }
    for sg in "+-":
        sign = 1 if sg == "+" else -1
        s1, s2 = f"s1{sg}", f"s2{sg}"
        br[("J", s1)] = {0: [(sign, ((s1, 0),))]}
        br[("J", s2)] = {0: [(sign, ((s2, 0),))]}
        br[("L", s1)] = {0: [(1, ((s2, 0),))], 1: [(q, ((s1, 0),))]}
        lam1 = [(F(5, 4), ((s1, 0),))] if literal else [(F(5, 4), ((s2, 0),))]
        br[("L", s2)] = {0: [(1, (("L", 0), (s1, 0)))], 1: lam1, 2: [(q, ((s1, 0),))]}
        br[(s2, s2)] = {0: [(q, ((s1, 0), (s1, 1))), (-1, ((s1, 0), (s2, 0)))]}
    br[("s1+", "s1-")] = {0: [(1, (("S2", 0),))]}
    core = [(t, (("S3", 0),)), (s, (("S2", 1),)), (h, (("J", 0), ("S2", 0))), (-h, (("s1+", 0), ("s1-", 0)))]
    br[("s1+", "s2-")] = {0: core, 1: [(h, (("S2", 0),))]}
    br[("s2+", "s1-")] = {0: [(-c, w) for c, w in core], 1: [(-h, (("S2", 0),))]}
    br[("s2+", "s2-")] = {
        0: [(-q, (("J", 0), ("S2", 1))), (-1, (("S2", 0), ("L", 0))), (-h, (("s1-", 0), ("s2+", 0))),
            (-h, (("s1+", 0), ("s2-", 0))), (q, (("s1+", 0), ("s1-", 1))), (-q, (("S2", 0), ("J", 1))),
            (-F(1, 9), (("S3", 1),)), (F(1, 24), (("S2", 2),))],
        1: [(-t, (("S3", 0),)), (-s, (("S2", 1),)), (-h, (("J", 0), ("S2", 0))), (q, (("s1+", 0), ("s1-", 0)))],
        2: [(-F(3, 8), (("S2", 0),))],
    }
    return AlgebraSpec(gens, br)


def gl32_target() -> Algebra:
    """Degenerate beta-gamma pairs a_i, a_i* tensored with bc pairs psi_i, psi_i* (i = 1, 2)."""
    spec = tensor(
        degenerate_betagamma_pairs(2, (["a1", "a2"], ["a1*", "a2*"])),
        bc_pairs(2, (["psi1", "psi2"], ["psi1*", "psi2*"])),
    )
    return build_algebra(spec)


def gl32_bilinears(T: Algebra) -> Dict[Tuple[int, int], State]:
    """J_{0,p} = -sum psi_i d^p psi_i*, J_{1,p} = sum a_i d^p a_i*,
    J_{2,p} = -sum psi_i d^p a_i*, J_{3,p} = sum a_i d^p psi_i*  (p = 0, 1)."""
    out = {}
    for p in (0, 1):
        J0 = J1 = J2 = J3 = T.zero()
        for i in (1, 2):
            J0 = J0 - T.word(f"psi{i}", (f"psi{i}*", p))
            J1 = J1 + T.word(f"a{i}", (f"a{i}*", p))
            J2 = J2 - T.normal_product(T.gen(f"psi{i}"), T.gen(f"a{i}*", p))
            J3 = J3 + T.normal_product(T.gen(f"a{i}"), T.gen(f"psi{i}*", p))
        out[(0, p)], out[(1, p)], out[(2, p)], out[(3, p)] = J0, J1, J2, J3
    return out


def gl32_images(T: Optional[Algebra] = None) -> Dict[str, State]:
    T = T if T is not None else gl32_target()
    B = gl32_bilinears(T)
    np, d = T.normal_product, T.translate
    J00, J01 = B[(0, 0)], B[(0, 1)]
    return {
        "J": -J00,
        "L": J01 - np(J00, J00) * F(1, 4) - d(J00) * F(1, 2),
        "S2": -B[(1, 0)],
        "S3": B[(1, 1)] * F(-9, 2) + d(B[(1, 0)]) * F(3, 4),
        "s1+": B[(2, 0)],
        "s2+": -B[(2, 1)] + np(J00, B[(2, 0)]) * F(1, 2) + d(B[(2, 0)]),
        "s1-": B[(3, 0)],
        "s2-": B[(3, 1)] - np(J00, B[(3, 0)]) * F(1, 2),
    }


def check_gl32(literal: bool = False):
    """(presentation consistency report, {unordered generator pair: mismatched lambda powers})."""
    from .vacore import check_presentation

    spec = gl32_presentation(literal)
    report = check_presentation(spec)
    T = gl32_target()
    bad = homomorphism_residuals_va(gl32_images(T), Algebra(spec, validate=False), T)
    names = [g[0] for g in GL32_GENERATORS]
    pairs = {}
    for i, a in enumerate(names):
        for b in names[i:]:
            pairs[(a, b)] = sorted({j for x, y, j in bad if {x, y} == {a, b} and (x, y) in ((a, b), (b, a))})
    return report, pairs


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    name: str
    anchor: str
    build: Callable


CATALOG: Dict[str, CatalogEntry] = {}


def _register(name, anchor, build):
    CATALOG[name] = CatalogEntry(name, anchor, build)


_register("coset_algebra", "Heisenberg fields t_i with [t_i t_i] = K lambda, K(K-1) lambda", coset_algebra)
_register("screening_data", "screenings e^{-(t_i - t_{i+1})/K}, e^{-(t_n + t_{n+1})/K}", screening_data)
_register("w_states", "coefficients W_p of D_1 ... D_n D_{n+1}^eps", w_states)
_register("tilde_generators", "W~_1, W~_2, W~_3 and their lambda-brackets", tilde_generators)
_register("g_fields", "odd fields G_+ = |x>, G_- = R_1 ... R_n |-x>", g_fields)
_register("gl11_embedding", "V(gl(1|1)) at the critical level inside the critical W-superalgebra", gl11_embedding)
_register("wakimoto_gl11", "free field realization of V^k(gl(1|1))", wakimoto_gl11)
_register("gl32_presentation", "generators and lambda-brackets of the critical W-superalgebra of sl(3|2)", gl32_presentation)
_register("gl32_images", "homomorphism onto GL_2 invariants of degenerate beta-gamma and lattice fermions", gl32_images)
_register("root_datum", "simple roots of gl(n|1) and the form diag(1,...,1,-1)", RootDatumGlN1)
