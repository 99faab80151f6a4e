"""Recursive-descent parser for generator-word expressions.

Grammar:
    expr   := term (("+"|"-") term)*
    term   := factor (("*"|"/") factor)*
    factor := atom ("^" "-"? INT)?
    atom   := "T" INT | "E" INT | "E{" INT ("," INT)+ "}"
            | "u" | INT | "(" expr ")"

Everything evaluates to a normal-form AlgebraElement for the session's n.
Scalars are multiples of the identity; "/" and negative exponents demand a
scalar (or, for "^-k", a T generator, which has an explicit inverse).
"""

from __future__ import annotations

from .algebra_core import AlgebraElement, gen, mul, e_pair, product
from .combinatorics import sp_closure, Permutation
from .exactmath import RF_U, RatFunc


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__("%s (at position %d)" % (message, pos))
        self.pos = pos


def _tokenize(text: str):
    tokens = []  # (kind, value, pos)
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("INT", int(text[i:j]), i))
            i = j
            continue
        if ch in "TEu":
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch in "+-*/^(){},":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError("unexpected character %r" % ch, i)
    tokens.append(("EOF", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, n: int):
        self.tokens = _tokenize(text)
        self.k = 0
        self.n = n

    def peek(self):
        return self.tokens[self.k]

    def next(self, kind=None):
        tok = self.tokens[self.k]
        if kind is not None and tok[0] != kind:
            raise ParseError("expected %s, found %r" % (kind, tok[1]), tok[2])
        self.k += 1
        return tok

    def _scalar(self, el: AlgebraElement, what: str) -> RatFunc:
        one = AlgebraElement.one(self.n)
        if not el:
            return RatFunc(0)
        keys = list(el.terms)
        if keys == list(one.terms):
            return el.terms[keys[0]]
        raise ParseError("%s requires a scalar operand" % what, self.peek()[2])

    def parse(self) -> AlgebraElement:
        el = self.expr()
        tok = self.peek()
        if tok[0] != "EOF":
            raise ParseError("trailing input %r" % tok[1], tok[2])
        return el

    def expr(self) -> AlgebraElement:
        if self.peek()[0] == "-":
            self.next()
            el = self.term().scale(-1)
        else:
            el = self.term()
        while self.peek()[0] in "+-":
            op = self.next()[0]
            rhs = self.term()
            el = el + rhs if op == "+" else el - rhs
        return el

    def term(self) -> AlgebraElement:
        el = self.factor()
        while self.peek()[0] in "*/":
            op = self.next()[0]
            rhs = self.factor()
            if op == "*":
                el = mul(el, rhs)
            else:
                c = self._scalar(rhs, "division")
                if not c:
                    raise ParseError("division by zero", self.peek()[2])
                el = el.scale(c.inverse())
        return el

    def factor(self) -> AlgebraElement:
        el, t_index = self.atom()
        if self.peek()[0] == "^":
            self.next()
            sign = 1
            if self.peek()[0] == "-":
                self.next()
                sign = -1
            tok = self.next("INT")
            k = tok[1]
            if sign < 0:
                if t_index is not None:
                    base = gen("Tinv", t_index, self.n)
                else:
                    c = self._scalar(el, "negative exponent")
                    if not c:
                        raise ParseError("inverse of zero", tok[2])
                    base = AlgebraElement.one(self.n).scale(c.inverse())
            else:
                base = el
            el = product([base] * k, self.n)
        return el

    def atom(self):
        """Returns (element, T-index or None); the index enables T_i^-k."""
        tok = self.next()
        kind, val, pos = tok
        if kind == "T":
            i = self.next("INT")[1]
            self._check_index(i, pos)
            return gen("T", i, self.n), i
        if kind == "E":
            if self.peek()[0] == "{":
                self.next()
                ids = [self.next("INT")[1]]
                while self.peek()[0] == ",":
                    self.next()
                    ids.append(self.next("INT")[1])
                self.next("}")
                if len(set(ids)) != len(ids) or not all(
                    1 <= x <= self.n for x in ids
                ):
                    raise ParseError("bad index set %r" % ids, pos)
                el = AlgebraElement.one(self.n)
                base = min(ids)
                for x in sorted(ids):
                    if x != base:
                        el = mul(el, e_pair(base, x, self.n))
                return el, None
            i = self.next("INT")[1]
            self._check_index(i, pos)
            return gen("E", i, self.n), None
        if kind == "u":
            return AlgebraElement.one(self.n).scale(RF_U), None
        if kind == "INT":
            return AlgebraElement.one(self.n).scale(val), None
        if kind == "(":
            el = self.expr()
            self.next(")")
            return el, None
        raise ParseError("unexpected token %r" % (val,), pos)

    def _check_index(self, i: int, pos: int):
        if not 1 <= i <= self.n - 1:
            raise ParseError(
                "generator index %d out of range for n=%d" % (i, self.n), pos
            )


def parse_word(text: str, n: int) -> AlgebraElement:
    """Parse and evaluate a generator expression for the size-n algebra."""
    return _Parser(text, n).parse()
