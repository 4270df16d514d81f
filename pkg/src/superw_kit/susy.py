"""Supersymmetric polynomials in u_1..u_m | v_1..v_n and their differential closure."""

from __future__ import annotations

from typing import List

from .miura import DiffPoly, differential_monomials, span_rank


def u_names(m: int) -> List[str]:
    return [f"u{i}" for i in range(1, m + 1)]


def v_names(n: int) -> List[str]:
    return [f"v{j}" for j in range(1, n + 1)]


def power_sum(m: int, n: int, p: int) -> DiffPoly:
    """s_p = u_1^p + ... + u_m^p - (-1)^p (v_1^p + ... + v_n^p), p > 0."""
    if p <= 0:
        raise ValueError("power sums are defined for p > 0")
    out = DiffPoly()
    for u in u_names(m):
        out = out + DiffPoly.var(u) ** p
    sign = -((-1) ** p)
    for v in v_names(n):
        out = out + DiffPoly.var(v) ** p * sign
    return out


def is_supersymmetric(f: DiffPoly, m: int, n: int) -> bool:
    """Substitution test: d^j u_m -> d^j t and d^j v_n -> -d^j t leaves no t.

    This is the cancellation condition only; symmetry in the u's and in the
    v's separately is not checked.
    """
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    t = DiffPoly.var("_t")
    g = f.substitute({f"u{m}": t, f"v{n}": -t})
    return "_t" not in g.generators()


def symmetric_in(f: DiffPoly, names: List[str]) -> bool:
    """Invariance under every transposition of adjacent names."""
    for a, b in zip(names, names[1:]):
        if f.rename({a: b, b: a}) != f:
            return False
    return True


def graded_pieces(m: int, n: int, weight: int) -> List[DiffPoly]:
    """Products of derivatives of power sums with total weight ``weight`` (deg u = 1, deg d = 1)."""
    gens = {f"s{p}": power_sum(m, n, p) for p in range(1, weight + 1)}
    weights = {f"s{p}": p for p in range(1, weight + 1)}
    return [f for _, f in differential_monomials(gens, weights, weight)]


def affine_graded_dimension(m: int, n: int, weight_cap: int) -> List[int]:
    """Dimension per weight 0..weight_cap of the differential algebra generated by the power sums."""
    out = []
    for w in range(weight_cap + 1):
        out.append(1 if w == 0 else span_rank(graded_pieces(m, n, w)))
    return out


def to_super_variables(f: DiffPoly, n: int) -> DiffPoly:
    """Rename u_{n+1} -> v_1 so that a gl(n|1) expression lives in u_1..u_n | v_1."""
    return f.rename({f"u{n + 1}": "v1"})


def h_bar(n: int, p: int) -> DiffPoly:
    """(-1)^{p-1} v_1^{p-1} (u_1 + v_1) ... (u_n + v_1)."""
    v = DiffPoly.var("v1")
    out = v ** (p - 1) * ((-1) ** (p - 1))
    for i in range(1, n + 1):
        out = out * (DiffPoly.var(f"u{i}") + v)
    return out
