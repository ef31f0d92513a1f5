"""Expression grammar for rational functions and shift operators.

Accepted input: integers, variables, `+ - * / ^` with parentheses; `^` takes
a nonnegative integer literal and implicit multiplication is not allowed.
Rationals are written as quotients of integers.  The same grammar, with the
extra name `Sx`, covers operator text like `(x+1)*Sx^2 - Sx + 1/x`.

Formatting is canonical (graded-lex term order, explicit `*` and `^`), and
parsing a formatted value returns it unchanged.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .polys import _RING, VAR_INDEX, MultiPoly
from .rational import RatFunc


class ParseError(ValueError):
    """Syntax or semantic error in an input expression, with position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|([-+*/^()]))")


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if not m or m.end() == m.start():
            if text[i:].strip():
                raise ParseError(f"unexpected character {text[i]!r}", i)
            break
        if m.group(1):
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2):
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        i = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, names):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.names = names

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def expect_op(self, op: str):
        kind, val, p = self.next()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", p)

    def parse(self):
        node = self.expr()
        kind, _, p = self.peek()
        if kind != "end":
            raise ParseError("trailing input", p)
        return node

    def expr(self):
        node = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                rhs = self.term()
                node = (("add" if val == "+" else "sub"), node, rhs)
            else:
                return node

    def term(self):
        node = self.unary()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "*/":
                self.next()
                rhs = self.unary()
                node = (("mul" if val == "*" else "div"), node, rhs)
            else:
                return node

    def unary(self):
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.next()
            inner = self.unary()
            return inner if val == "+" else ("neg", inner)
        return self.power()

    def power(self):
        node = self.atom()
        kind, val, p = self.peek()
        if kind == "op" and val == "^":
            self.next()
            kind2, exp, p2 = self.next()
            if kind2 != "int":
                raise ParseError("exponent must be a nonnegative integer literal", p2)
            return ("pow", node, exp)
        return node

    def atom(self):
        kind, val, p = self.next()
        if kind == "int":
            return ("int", val)
        if kind == "name":
            if val not in self.names:
                raise ParseError(f"unknown variable {val!r}", p)
            return ("var", val)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ParseError("expected a number, variable or parenthesis", p)


def _eval_ast(node, var_map) -> RatFunc:
    op = node[0]
    if op == "int":
        return RatFunc(node[1])
    if op == "var":
        return var_map[node[1]]
    if op == "neg":
        return -_eval_ast(node[1], var_map)
    if op == "pow":
        return _eval_ast(node[1], var_map) ** node[2]
    a = _eval_ast(node[1], var_map)
    b = _eval_ast(node[2], var_map)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero:
            raise ParseError("division by the zero polynomial", 0)
        return a / b
    raise AssertionError(op)


_XYZ_MAP = {v: RatFunc.variable(v) for v in ("x", "y", "z")}


def parse_expr(text: str) -> RatFunc:
    """Parse an expression in x, y, z into a canonical rational function."""
    ast = _Parser(text, _XYZ_MAP.keys()).parse()
    return _eval_ast(ast, _XYZ_MAP)


def parse_poly(text: str) -> MultiPoly:
    f = parse_expr(text)
    if not f.is_polynomial():
        raise ParseError("expected a polynomial, got a proper rational function", 0)
    return f.as_poly()


def parse_expr_prefactored(text: str):
    """Parse `NUM/DEN` keeping DEN's explicit product/power structure.

    Returns (value, hints) where hints is a list of (factor, multiplicity)
    pairs read off the denominator syntax, for use as a factorization hint.
    The expression must be a quotient whose numerator is division-free.
    """
    ast = _Parser(text, _XYZ_MAP.keys()).parse()
    value = _eval_ast(ast, _XYZ_MAP)
    node = ast
    neg = False
    while node[0] == "neg":
        neg, node = not neg, node[1]
    if node[0] != "div" or _has_div(node[1]):
        raise ParseError("pre-factored input must look like NUM/(f1^e1*f2^e2*...)", 0)
    hints = []
    _collect_factors(node[2], 1, hints)
    return value, hints


def _has_div(node):
    op = node[0]
    if op in ("int", "var"):
        return False
    if op in ("neg",):
        return _has_div(node[1])
    if op == "pow":
        return _has_div(node[1])
    return op == "div" or _has_div(node[1]) or _has_div(node[2])


def _collect_factors(node, mult, out):
    op = node[0]
    if op == "mul":
        _collect_factors(node[1], mult, out)
        _collect_factors(node[2], mult, out)
        return
    if op == "pow":
        _collect_factors(node[1], mult * node[2], out)
        return
    if op == "neg":
        _collect_factors(node[1], mult, out)
        return
    val = _eval_ast(node, _XYZ_MAP)
    if not val.is_polynomial():
        raise ParseError("pre-factored denominator factors must be polynomials", 0)
    p = val.as_poly()
    if not p.is_constant():
        out.append((p, mult))


# -- formatting ---------------------------------------------------------------


def _format_coeff(c: Fraction) -> str:
    return str(c) if c.denominator != 1 else str(c.numerator)


def format_poly(p: MultiPoly, var_names=("x", "y", "z")) -> str:
    """Canonical text: graded-lex descending terms, explicit * and ^."""
    if p.is_zero:
        return "0"
    items = sorted(p.terms().items(), key=lambda t: _RING.order(t[0]), reverse=True)
    pieces = []
    for mono, c in items:
        vs = [f"{var_names[i]}^{e}" if e > 1 else var_names[i]
              for i, e in enumerate(mono) if e]
        mag = abs(c)
        if not vs:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(vs)
        else:
            body = "*".join([_format_coeff(mag)] + vs)
        pieces.append((c < 0, body))
    out = []
    for i, (negative, body) in enumerate(pieces):
        if i == 0:
            out.append("-" + body if negative else body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


def _is_bare_power(p: MultiPoly) -> bool:
    t = p.terms()
    if len(t) != 1:
        return False
    (mono, c), = t.items()
    return c == 1 and sum(1 for e in mono if e) == 1


def format_ratfunc(f: RatFunc, var_names=("x", "y", "z")) -> str:
    num = format_poly(f.num, var_names)
    if f.den == MultiPoly.one():
        return num
    if len(f.num.terms()) > 1:
        num = f"({num})"
    den = format_poly(f.den, var_names)
    if not _is_bare_power(f.den):
        den = f"({den})"
    return f"{num}/{den}"


def format_operator(coeffs: dict) -> str:
    """Render {power: coefficient RatFunc in x} as text in Sx."""
    if not coeffs:
        return "0"
    pieces = []
    for k in sorted(coeffs, reverse=True):
        c = coeffs[k]
        negative = c.num.leading_coeff() < 0
        mag = -c if negative else c
        if k == 0:
            body = _coeff_text(mag)
        elif mag == RatFunc.one():
            body = f"Sx^{k}" if k > 1 else "Sx"
        else:
            body = f"{_coeff_text(mag)}*" + (f"Sx^{k}" if k > 1 else "Sx")
        pieces.append((negative, body))
    out = []
    for i, (negative, body) in enumerate(pieces):
        if i == 0:
            out.append("-" + body if negative else body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


def _coeff_text(c: RatFunc) -> str:
    s = format_ratfunc(c)
    if "+" in s[1:] or "-" in s[1:]:
        return f"({s})"
    return s


def parse_operator(text: str):
    """Parse operator text in x and Sx into {power: coefficient} form.

    The text is read as a commutative expression; it denotes the operator
    sum(c_k(x) * Sx^k).  Sx may not appear in any denominator.
    """
    smap = {"x": RatFunc.variable("x"), "Sx": RatFunc.variable("y")}
    ast = _Parser(text, smap.keys()).parse()
    val = _eval_ast(ast, smap)
    if val.involves("z"):
        raise ParseError("operator text may use only x and Sx", 0)
    if val.den.involves("y"):
        raise ParseError("Sx may not appear in a denominator", 0)
    coeffs = {}
    den = RatFunc(val.den)
    for k, c in enumerate(val.num.coeffs_in("y")):
        if not c.is_zero:
            if c.involves("y"):
                raise AssertionError("coefficient extraction left the shift symbol")
            coeffs[k] = RatFunc(c) / den
    return coeffs
