"""Mode-expansion oracle for free-field vertex algebras.

An independent second evaluator of n-th products, used only to cross-check
the bracket recursion of ``vacore``.  It applies explicit modes to the vacuum
of the Fock representation: states are polynomials in creation modes
``a_(m)`` (m <= -1), annihilation modes are commuted to the right using the
constant generator brackets, and the modes of a composite state are those of
the fully normal ordered product of free fields.

Only algebras whose generator brackets are constants (Heisenberg, bc, beta-gamma
and their tensor products) are supported.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import factorial
from typing import Dict, List, Tuple

from .scalars import ONE, Scalar, scalar

Mode = Tuple[int, int]  # (generator index, mode number)
OState = Dict[Tuple[Mode, ...], Scalar]


def _binom(top: int, k: int) -> int:
    """binom(top, k) for any integer top and k >= 0."""
    num = 1
    for i in range(k):
        num *= top - i
    return num // factorial(k)


class ModeOracle:
    def __init__(self, spec):
        self.names = [g.name for g in spec.generators]
        self.index = {nm: i for i, nm in enumerate(self.names)}
        self.parity = [g.parity for g in spec.generators]
        self.weight = [Fraction(g.weight) for g in spec.generators]
        # const[(i, j)][k] = coefficient of lambda^k in [g_i lambda g_j]
        self.const: Dict[Tuple[int, int], Dict[int, Scalar]] = {}
        for (a, b), entry in spec.brackets.items():
            i, j = self.index[a], self.index[b]
            table = {}
            for k, terms in entry.items():
                c = Scalar(0)
                for coeff, word in terms:
                    if word:
                        raise ValueError("mode oracle needs constant generator brackets")
                    c = c + scalar(coeff)
                if not c.is_zero():
                    table[int(k)] = c
            self.const[(i, j)] = table
        for (i, j), table in list(self.const.items()):
            if (j, i) not in self.const:
                s = -((-1) ** (self.parity[i] * self.parity[j]))
                self.const[(j, i)] = {k: c * (s * (-1) ** k) for k, c in table.items()}

    # -- modes on Fock states ----------------------------------------------
    def _commutator(self, a: Mode, b: Mode) -> Scalar:
        """[a_(m), b_(n)] (super), a scalar for free fields."""
        (i, m), (j, n) = a, b
        out = Scalar(0)
        for k, c in self.const.get((i, j), {}).items():
            if m + n - k == -1:
                out = out + c * (_binom(m, k) * factorial(k))
        return out

    def _sort(self, modes: List[Mode]) -> Tuple[Tuple[Mode, ...], int]:
        """Bubble sort creation modes to canonical order, tracking the Koszul sign."""
        modes = list(modes)
        sign = 1
        for i in range(len(modes)):
            for j in range(len(modes) - 1 - i):
                if modes[j] > modes[j + 1]:
                    if self.parity[modes[j][0]] and self.parity[modes[j + 1][0]]:
                        sign = -sign
                    modes[j], modes[j + 1] = modes[j + 1], modes[j]
        for j in range(len(modes) - 1):
            if modes[j] == modes[j + 1] and self.parity[modes[j][0]]:
                return (), 0
        return tuple(modes), sign

    def apply_mode(self, mode: Mode, v: OState) -> OState:
        out: OState = {}
        for word, c in v.items():
            if mode[1] < 0:
                w, s = self._sort([mode] + list(word))
                if s:
                    out[w] = out.get(w, Scalar(0)) + c * s
                continue
            sign = 1
            for pos, other in enumerate(word):
                k = self._commutator(mode, other)
                if not k.is_zero():
                    rest = word[:pos] + word[pos + 1:]
                    out[rest] = out.get(rest, Scalar(0)) + c * k * sign
                if self.parity[mode[0]] and self.parity[other[0]]:
                    sign = -sign
        return {w: c for w, c in out.items() if not c.is_zero()}

    def state_weight(self, word) -> Fraction:
        return sum((self.weight[i] - m - 1 for i, m in word), Fraction(0))

    # -- conversion from canonical monomials ----------------------------------
    def from_terms(self, terms) -> OState:
        """Canonical monomials ((g, d), ...) as right-nested products of d^d g."""
        out: OState = {}
        for mono, c in terms.items():
            v: OState = {(): ONE}
            for g, d in reversed(mono):
                v = self.apply_mode((g, -d - 1), v)
                v = {w: x * factorial(d) for w, x in v.items()}
            for w, x in v.items():
                out[w] = out.get(w, Scalar(0)) + c * x
        return {w: c for w, c in out.items() if not c.is_zero()}

    # -- n-th products ----------------------------------------------------------
    def _word_mode(self, word, n: int, v: OState) -> OState:
        """(field of the creation word)_(n) applied to v, by full normal ordering."""
        if not word:
            return dict(v) if n == -1 else {}
        # creation mode g_(-k-1) corresponds to the factor d^k g / k!
        facs = [(g, -m - 1) for g, m in word]
        vmax = max((self.state_weight(w) for w in v), default=Fraction(0))
        total = n + 1
        ranges = []
        hi = [int(vmax + self.weight[g]) - 1 for g, _ in facs]
        for idx, (g, k) in enumerate(facs):
            others = sum(hi[j] + facs[j][1] + 1 for j in range(len(facs)) if j != idx)
            lo = total - others - k - 1
            ranges.append(range(lo, hi[idx] + 1))
        out: OState = {}
        for ms in product(*ranges):
            if sum(m + k + 1 for m, (_, k) in zip(ms, facs)) != total:
                continue
            coeff = 1
            for m, (_, k) in zip(ms, facs):
                coeff *= _binom(-m - 1, k)
            if coeff == 0:
                continue
            seq = [(g, m) for m, (g, _) in zip(ms, facs)]
            create = [x for x in seq if x[1] < 0]
            annih = [x for x in seq if x[1] >= 0]
            sign = 1
            for a_pos, x in enumerate(seq):
                if x[1] >= 0 and self.parity[x[0]]:
                    for y in seq[a_pos + 1:]:
                        if y[1] < 0 and self.parity[y[0]]:
                            sign = -sign
            w = dict(v)
            for x in reversed(annih):
                w = self.apply_mode(x, w)
                if not w:
                    break
            for x in reversed(create):
                if not w:
                    break
                w = self.apply_mode(x, w)
            for key, c in w.items():
                out[key] = out.get(key, Scalar(0)) + c * (coeff * sign)
        return {w: c for w, c in out.items() if not c.is_zero()}

    def nth_product(self, a: OState, b: OState, n: int) -> OState:
        out: OState = {}
        for word, c in a.items():
            for key, x in self._word_mode(word, n, b).items():
                out[key] = out.get(key, Scalar(0)) + c * x
        return {w: c for w, c in out.items() if not c.is_zero()}


def oracle_for(alg) -> ModeOracle:
    return ModeOracle(alg.spec)
