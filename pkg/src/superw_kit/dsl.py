"""Expression language for scalars, vertex algebra states and Fock vectors.

Grammar (whitespace separates tokens)::

    expr     := term (('+' | '-') term)*
    term     := ['-'] product
    product  := factor (('*' | '/') factor | factor)*   -- juxtaposition multiplies
    factor   := primary ('^' integer)?
    primary  := number | 'eps' | '(' expr ')' | generator
              | 'd' '^' integer primary | 'd' primary
              | ':' primary primary+ ':'                 -- right-nested normal product
              | '|' expr (',' expr)* '>'                 -- Fock vector e^gamma

A colon inside a normal product always closes it, so nested products are
written in parentheses: ``:a (:b c:) d:``.

Generators are matched against the names of the algebra (longest match
first) so that names such as ``s1+`` or ``psi1*`` are single tokens.  In a
Fock space, a Heisenberg polynomial juxtaposed with ``|gamma>`` is the
tensor ``P e^gamma``, which is the text form used when printing Fock states;
``:a |gamma>:`` is the (-1)-product instead.  Only scalars may be divided by,
raised to powers, or multiplied with each other freely.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Union

from .scalars import EPS, Scalar, scalar


class ParseError(ValueError):
    """Syntax or type error at a character offset of the input."""

    def __init__(self, message: str, text: str, pos: int):
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}\n  {text}\n  {' ' * pos}^")


@dataclass
class Token:
    kind: str  # num, eps, gen, d, lambda, op, end
    value: str
    pos: int


_NUM = re.compile(r"\d+(?:\.\d+)?")
_WORD = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_OPS = set("+-*/^():|,>")


def tokenize(text: str, names: Sequence[str] = ()) -> List[Token]:
    names = sorted(names, key=len, reverse=True)
    out: List[Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        m = _NUM.match(text, i)
        if m:
            out.append(Token("num", m.group(), i))
            i = m.end()
            continue
        if ch.isalpha() or ch == "_":
            hit = next((nm for nm in names if text.startswith(nm, i)), None)
            word = _WORD.match(text, i).group()
            if hit is not None and len(hit) >= len(word):
                out.append(Token("gen", hit, i))
                i += len(hit)
                continue
            if word == "eps":
                out.append(Token("eps", word, i))
            elif word == "d":
                out.append(Token("d", word, i))
            elif word in ("lambda", "lam"):
                out.append(Token("lambda", word, i))
            else:
                raise ParseError(f"unknown identifier '{word}'", text, i)
            i += len(word)
            continue
        if ch in _OPS:
            out.append(Token("op", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character '{ch}'", text, i)
    out.append(Token("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, context=None):
        self.text = text
        self.ctx = context
        names = []
        if context is not None:
            names = list(context.names)
        self.toks = tokenize(text, names)
        self.k = 0
        self.fock = context is not None and hasattr(context, "vertex_mode")

    # -- token helpers --------------------------------------------------------
    def peek(self) -> Token:
        return self.toks[self.k]

    def take(self) -> Token:
        t = self.toks[self.k]
        self.k += 1
        return t

    def at_op(self, ch: str) -> bool:
        t = self.peek()
        return t.kind == "op" and t.value == ch

    def expect(self, ch: str) -> Token:
        t = self.peek()
        if not (t.kind == "op" and t.value == ch):
            self.fail(f"expected '{ch}'", t.pos)
        return self.take()

    def fail(self, msg: str, pos: Optional[int] = None):
        raise ParseError(msg, self.text, self.peek().pos if pos is None else pos)

    # -- value algebra --------------------------------------------------------
    @staticmethod
    def is_scalar(v) -> bool:
        return isinstance(v, Scalar)

    def add(self, a, b, pos):
        if self.is_scalar(a) and self.is_scalar(b):
            return a + b
        return self.lift(a, pos) + self.lift(b, pos)

    def lift(self, v, pos):
        """Promote a scalar to a multiple of the vacuum (or leave a state alone)."""
        if not self.is_scalar(v):
            return v
        if self.ctx is None:
            return v
        if self.fock:
            return self.ctx.vacuum() * v
        return self.ctx.scalar_state(v)

    def mul(self, a, b, pos):
        if self.is_scalar(a) and self.is_scalar(b):
            return a * b
        if self.is_scalar(a):
            return b * a
        if self.is_scalar(b):
            return a * b
        if self.fock and self.is_polynomial(a) and self.is_pure_ket(b):
            poly = a.polynomial_part(self.ctx.zero_weight())
            (gamma,) = b.exponents()
            return self.ctx.from_state(poly, gamma) * b.terms[(gamma, ())]
        self.fail("product of two states; use :a b: for the normal product", pos)

    def is_polynomial(self, v) -> bool:
        return all(all(c.is_zero() for c in g) for g in v.exponents())

    @staticmethod
    def is_pure_ket(v) -> bool:
        return len(v.terms) == 1 and next(iter(v.terms))[1] == ()

    def normal_product(self, a, b, pos):
        a, b = self.lift(a, pos), self.lift(b, pos)
        if self.fock:
            return self.ctx.vertex_mode(a, -1, b)
        return self.ctx.normal_product(a, b)

    def translate(self, a, times, pos):
        if self.is_scalar(a):
            return Scalar(0)
        if self.fock:
            for _ in range(times):
                a = self.ctx.translate(a)
            return a
        return self.ctx.translate(a, times)

    # -- grammar --------------------------------------------------------------
    def parse(self):
        v = self.expr()
        if self.peek().kind != "end":
            self.fail(f"unexpected '{self.peek().value}'")
        return v

    def expr(self):
        neg = False
        if self.at_op("-"):
            self.take()
            neg = True
        elif self.at_op("+"):
            self.take()
        v = self.product()
        if neg:
            v = v * Scalar(-1) if not self.is_scalar(v) else -v
        while self.at_op("+") or self.at_op("-"):
            op = self.take()
            w = self.product()
            if op.value == "-":
                w = -w
            v = self.add(v, w, op.pos)
        return v

    def starts_primary(self) -> bool:
        t = self.peek()
        if t.kind in ("num", "eps", "gen", "d", "lambda"):
            return True
        return t.kind == "op" and t.value in "(:|"

    def product(self):
        v = self.factor()
        while True:
            t = self.peek()
            if self.at_op("*"):
                self.take()
                v = self.mul(v, self.factor(), t.pos)
            elif self.at_op("/"):
                self.take()
                pos = self.peek().pos
                w = self.factor()
                if not self.is_scalar(w):
                    self.fail("division by a state", pos)
                if w.is_zero():
                    self.fail("division by zero", pos)
                v = v / w if self.is_scalar(v) else v * w.inverse()
            elif self.starts_primary():
                v = self.mul(v, self.factor(), t.pos)
            else:
                return v

    def factor(self):
        pos = self.peek().pos
        v = self.primary()
        if self.at_op("^"):
            self.take()
            t = self.peek()
            sign = 1
            if self.at_op("-"):
                self.take()
                sign = -1
                t = self.peek()
            if t.kind != "num" or "." in t.value:
                self.fail("expected an integer exponent")
            self.take()
            if not self.is_scalar(v):
                self.fail("powers of states are not defined", pos)
            e = sign * int(t.value)
            if e < 0 and v.is_zero():
                self.fail("division by zero", pos)
            v = v ** e if e >= 0 else (v ** (-e)).inverse()
        return v

    def primary(self):
        t = self.peek()
        if t.kind == "num":
            self.take()
            return scalar(Fraction(t.value))
        if t.kind == "eps":
            self.take()
            return EPS
        if t.kind == "lambda":
            self.fail("lambda is not allowed here")
        if t.kind == "gen":
            self.take()
            return self.ctx.gen(t.value)
        if t.kind == "d":
            self.take()
            times = 1
            if self.at_op("^"):
                self.take()
                n = self.peek()
                if n.kind != "num" or "." in n.value:
                    self.fail("expected an integer derivative order")
                self.take()
                times = int(n.value)
            if self.ctx is None:
                self.fail("derivatives need an algebra", t.pos)
            return self.translate(self.primary(), times, t.pos)
        if t.kind == "op" and t.value == "(":
            self.take()
            v = self.expr()
            self.expect(")")
            return v
        if t.kind == "op" and t.value == ":":
            if self.ctx is None:
                self.fail("normal products need an algebra")
            self.take()
            items = []
            while not self.at_op(":"):
                if self.peek().kind == "end":
                    self.fail("unterminated normal product")
                items.append((self.peek().pos, self.primary()))
            self.take()
            if len(items) < 2:
                self.fail("a normal product needs at least two factors (nest products in parentheses)", t.pos)
            v = items[-1][1]
            for pos, a in reversed(items[:-1]):
                v = self.normal_product(a, v, pos)
            return v
        if t.kind == "op" and t.value == "|":
            if not self.fock:
                self.fail("Fock vectors need a Fock space", t.pos)
            self.take()
            coords = [self.coordinate()]
            while self.at_op(","):
                self.take()
                coords.append(self.coordinate())
            self.expect(">")
            if len(coords) != self.ctx.rank:
                self.fail(f"expected {self.ctx.rank} coordinates, got {len(coords)}", t.pos)
            return self.ctx.vector(tuple(coords))
        self.fail(f"unexpected '{t.value}'" if t.kind != "end" else "unexpected end of input")

    def coordinate(self) -> Scalar:
        pos = self.peek().pos
        v = self.expr()
        if not self.is_scalar(v):
            self.fail("Fock coordinates must be scalars", pos)
        return v


def parse_scalar_expr(text: str) -> Scalar:
    v = _Parser(text).parse()
    if not isinstance(v, Scalar):
        raise ParseError("expected a scalar", text, 0)
    return v


def parse_expression(text: str, context) -> Union[Scalar, object]:
    """Parse a state of an Algebra or a vector of a FockSpace (scalars become multiples of 1)."""
    p = _Parser(text, context)
    v = p.parse()
    return p.lift(v, 0)
