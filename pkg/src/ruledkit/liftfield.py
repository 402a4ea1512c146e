"""Moment fields ubar(u, v), vbar(u, v) and their exact partials.

A lift field assigns the dual (moment) components of the sphere chart as
functions of the chart angles.  Fields come from a tiny infix expression
language (constants, u, v, pi, + - * / ^, sin, cos, exp, unary minus) or
from the affine fast path.  Partial derivatives are computed by
forward-mode differentiation, never by symbolic manipulation:

  * first partials: two dual-number passes, seeding eps on u then on v;
  * second partials: one pass over order-2 Taylor jets in (u, v).

Finite differences appear only in tests, as the independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Protocol, runtime_checkable

from .dual import DualScalar, dcos, dexp, dsin
from .errors import DomainError, ParseError


class LiftSample(NamedTuple):
    ub: float
    vb: float
    ub_u: float
    ub_v: float
    vb_u: float
    vb_v: float


class LiftJet(NamedTuple):
    """Values, first and second partials of (ubar, vbar) at one point."""

    ub: float
    vb: float
    ub_u: float
    ub_v: float
    vb_u: float
    vb_v: float
    ub_uu: float
    ub_uv: float
    ub_vv: float
    vb_uu: float
    vb_uv: float
    vb_vv: float


@runtime_checkable
class LiftField(Protocol):
    def sample(self, u: float, v: float) -> LiftSample: ...
    def jet(self, u: float, v: float) -> LiftJet: ...


# ---------------------------------------------------------------------------
# expression AST

@dataclass(frozen=True)
class Const:
    value: float


@dataclass(frozen=True)
class Var:
    name: str  # "u" or "v"


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class Bin:
    op: str  # + - * / ^
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Call:
    fn: str  # sin cos exp
    arg: "Node"


Node = Const | Var | Neg | Bin | Call

_PRECEDENCE = {"+": 1, "-": 1, "*": 2, "/": 2, "^": 4}


def to_source(node: Node) -> str:
    """Canonical infix rendering; reparses to an identical tree."""
    def render(n: Node, parent_prec: int) -> str:
        if isinstance(n, Const):
            if n.value == math.pi:
                return "pi"
            return f"{n.value:.17g}"
        if isinstance(n, Var):
            return n.name
        if isinstance(n, Call):
            return f"{n.fn}({render(n.arg, 0)})"
        if isinstance(n, Neg):
            inner = render(n.arg, 3)
            text = f"-{inner}"
            return f"({text})" if parent_prec > 3 else text
        prec = _PRECEDENCE[n.op]
        if n.op == "^":
            # right-assoc: parenthesize an equal-precedence left operand
            text = f"{render(n.left, prec + 1)}^{render(n.right, prec)}"
        else:
            # left-assoc: parenthesize an equal-precedence right operand
            text = f"{render(n.left, prec)} {n.op} {render(n.right, prec + 1)}"
        return f"({text})" if parent_prec > prec else text

    return render(node, 0)


# ---------------------------------------------------------------------------
# tokenizer + recursive descent parser

_NAMES = {"u", "v", "pi", "sin", "cos", "exp"}


class _Token(NamedTuple):
    kind: str  # num name op lparen rparen comma end
    text: str
    pos: int


def _tokenize(source: str) -> list[_Token]:
    tokens = []
    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit() or ch == ".":
            j = i
            while j < n and (source[j].isdigit() or source[j] == "."):
                j += 1
            if j < n and source[j] in "eE" and j + 1 < n and (
                    source[j + 1].isdigit() or source[j + 1] in "+-"):
                j += 2
                while j < n and source[j].isdigit():
                    j += 1
            text = source[i:j]
            try:
                float(text)
            except ValueError:
                raise ParseError(f"bad number {text!r}", i) from None
            tokens.append(_Token("num", text, i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            text = source[i:j]
            if text not in _NAMES:
                raise ParseError(f"unknown name {text!r}", i,
                                 expected="u, v, pi, sin, cos, or exp")
            tokens.append(_Token("name", text, i))
            i = j
        elif ch in "+-*/^":
            tokens.append(_Token("op", ch, i))
            i += 1
        elif ch == "(":
            tokens.append(_Token("lparen", ch, i))
            i += 1
        elif ch == ")":
            tokens.append(_Token("rparen", ch, i))
            i += 1
        elif ch == ",":
            tokens.append(_Token("comma", ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expr(self) -> Node:
        node = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.advance().text
            node = Bin(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.peek().kind == "op" and self.peek().text in "*/":
            op = self.advance().text
            node = Bin(op, node, self.factor())
        return node

    def factor(self) -> Node:
        if self.peek().kind == "op" and self.peek().text == "-":
            self.advance()
            return Neg(self.factor())
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.peek().kind == "op" and self.peek().text == "^":
            self.advance()
            return Bin("^", base, self.factor())
        return base

    def atom(self) -> Node:
        tok = self.peek()
        if tok.kind == "num":
            self.advance()
            return Const(float(tok.text))
        if tok.kind == "name":
            self.advance()
            if tok.text == "pi":
                return Const(math.pi)
            if tok.text in ("u", "v"):
                return Var(tok.text)
            opener = self.advance()
            if opener.kind != "lparen":
                raise ParseError(f"{tok.text} needs parentheses", opener.pos,
                                 expected="'('")
            arg = self.expr()
            closer = self.advance()
            if closer.kind != "rparen":
                raise ParseError("unbalanced parentheses", closer.pos,
                                 expected="')'")
            return Call(tok.text, arg)
        if tok.kind == "lparen":
            self.advance()
            node = self.expr()
            closer = self.advance()
            if closer.kind != "rparen":
                raise ParseError("unbalanced parentheses", closer.pos,
                                 expected="')'")
            return node
        raise ParseError(f"expected a value, got {tok.text or 'end of input'!r}",
                         tok.pos, expected="number, name, '(', or '-'")


def parse_expression(source: str) -> Node:
    parser = _Parser(_tokenize(source))
    node = parser.expr()
    tail = parser.peek()
    if tail.kind != "end":
        raise ParseError(f"unexpected trailing input {tail.text!r}", tail.pos)
    return node


def parse_field(source: str) -> "ExpressionField":
    """Parse 'ubar-expr , vbar-expr' into a lift field."""
    tokens = _tokenize(source)
    parser = _Parser(tokens)
    ub = parser.expr()
    sep = parser.advance()
    if sep.kind != "comma":
        raise ParseError("expected ',' between the two expressions", sep.pos,
                         expected="','")
    vb = parser.expr()
    tail = parser.peek()
    if tail.kind != "end":
        raise ParseError(f"unexpected trailing input {tail.text!r}", tail.pos)
    return ExpressionField(ub, vb)


# ---------------------------------------------------------------------------
# order-2 Taylor jet in two variables

@dataclass(frozen=True, slots=True)
class _Jet2:
    val: float
    du: float = 0.0
    dv: float = 0.0
    duu: float = 0.0
    duv: float = 0.0
    dvv: float = 0.0

    def __add__(self, o):
        return _Jet2(self.val + o.val, self.du + o.du, self.dv + o.dv,
                     self.duu + o.duu, self.duv + o.duv, self.dvv + o.dvv)

    def __sub__(self, o):
        return _Jet2(self.val - o.val, self.du - o.du, self.dv - o.dv,
                     self.duu - o.duu, self.duv - o.duv, self.dvv - o.dvv)

    def __neg__(self):
        return _Jet2(-self.val, -self.du, -self.dv, -self.duu, -self.duv, -self.dvv)

    def __mul__(self, o):
        return _Jet2(
            self.val * o.val,
            self.du * o.val + self.val * o.du,
            self.dv * o.val + self.val * o.dv,
            self.duu * o.val + 2.0 * self.du * o.du + self.val * o.duu,
            self.duv * o.val + self.du * o.dv + self.dv * o.du + self.val * o.duv,
            self.dvv * o.val + 2.0 * self.dv * o.dv + self.val * o.dvv,
        )

    def __truediv__(self, o):
        if o.val == 0.0:
            raise ZeroDivisionError("division by zero")
        val = self.val / o.val
        du = (self.du - val * o.du) / o.val
        dv = (self.dv - val * o.dv) / o.val
        duu = (self.duu - 2.0 * du * o.du - val * o.duu) / o.val
        duv = (self.duv - du * o.dv - dv * o.du - val * o.duv) / o.val
        dvv = (self.dvv - 2.0 * dv * o.dv - val * o.dvv) / o.val
        return _Jet2(val, du, dv, duu, duv, dvv)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise TypeError("only integer powers are defined on jets")
        if exponent < 0:
            return _Jet2(1.0) / self.__pow__(-exponent)
        out = _Jet2(1.0)
        for _ in range(exponent):
            out = out * self
        return out

    def chain(self, f: float, df: float, ddf: float) -> "_Jet2":
        """Compose with a scalar function given f, f', f'' at self.val."""
        return _Jet2(
            f,
            df * self.du,
            df * self.dv,
            ddf * self.du * self.du + df * self.duu,
            ddf * self.du * self.dv + df * self.duv,
            ddf * self.dv * self.dv + df * self.dvv,
        )


def _jet_sin(x: _Jet2) -> _Jet2:
    s, c = math.sin(x.val), math.cos(x.val)
    return x.chain(s, c, -s)


def _jet_cos(x: _Jet2) -> _Jet2:
    s, c = math.sin(x.val), math.cos(x.val)
    return x.chain(c, -s, -c)


def _jet_exp(x: _Jet2) -> _Jet2:
    e = math.exp(x.val)
    return x.chain(e, e, e)


def _jet_log(x: _Jet2) -> _Jet2:
    if x.val <= 0.0:
        raise ValueError("log of a non-positive value")
    return x.chain(math.log(x.val), 1.0 / x.val, -1.0 / (x.val * x.val))


def _dual_log(x: DualScalar) -> DualScalar:
    if x.real <= 0.0:
        raise ValueError("log of a non-positive value")
    return DualScalar(math.log(x.real), x.dual / x.real)


class _DualOps:
    const = staticmethod(lambda c: DualScalar(c))
    sin = staticmethod(dsin)
    cos = staticmethod(dcos)
    exp = staticmethod(dexp)
    log = staticmethod(_dual_log)


class _JetOps:
    const = staticmethod(lambda c: _Jet2(c))
    sin = staticmethod(_jet_sin)
    cos = staticmethod(_jet_cos)
    exp = staticmethod(_jet_exp)
    log = staticmethod(_jet_log)


def _eval(node: Node, u, v, ops):
    if isinstance(node, Const):
        return ops.const(node.value)
    if isinstance(node, Var):
        return u if node.name == "u" else v
    if isinstance(node, Neg):
        return -_eval(node.arg, u, v, ops)
    if isinstance(node, Call):
        fn = getattr(ops, node.fn)
        return fn(_eval(node.arg, u, v, ops))
    left = _eval(node.left, u, v, ops)
    if node.op == "^":
        # integer constant exponents work for any base; everything else
        # goes through exp(e * log(b)) and needs a positive base
        if isinstance(node.right, Const) and float(node.right.value).is_integer():
            return left ** int(node.right.value)
        if isinstance(node.right, Neg) and isinstance(node.right.arg, Const) \
                and float(node.right.arg.value).is_integer():
            return left ** (-int(node.right.arg.value))
        right = _eval(node.right, u, v, ops)
        return ops.exp(right * ops.log(left))
    right = _eval(node.right, u, v, ops)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    return left / right


@dataclass(frozen=True)
class ExpressionField:
    """Lift field backed by two parsed expressions."""

    ub_expr: Node
    vb_expr: Node

    @property
    def source(self) -> str:
        return f"{to_source(self.ub_expr)}, {to_source(self.vb_expr)}"

    def sample(self, u: float, v: float) -> LiftSample:
        # two dual passes: eps seeded on u, then on v
        try:
            du_u = DualScalar(u, 1.0)
            dv0 = DualScalar(v, 0.0)
            ub_pass_u = _eval(self.ub_expr, du_u, dv0, _DualOps)
            vb_pass_u = _eval(self.vb_expr, du_u, dv0, _DualOps)
            du0 = DualScalar(u, 0.0)
            dv_v = DualScalar(v, 1.0)
            ub_pass_v = _eval(self.ub_expr, du0, dv_v, _DualOps)
            vb_pass_v = _eval(self.vb_expr, du0, dv_v, _DualOps)
        except (ZeroDivisionError, ValueError, OverflowError) as exc:
            raise DomainError(f"field undefined at (u={u!r}, v={v!r}): {exc}") from exc
        return LiftSample(ub_pass_u.real, vb_pass_u.real,
                          ub_pass_u.dual, ub_pass_v.dual,
                          vb_pass_u.dual, vb_pass_v.dual)

    def jet(self, u: float, v: float) -> LiftJet:
        try:
            ju = _Jet2(u, du=1.0)
            jv = _Jet2(v, dv=1.0)
            ub = _eval(self.ub_expr, ju, jv, _JetOps)
            vb = _eval(self.vb_expr, ju, jv, _JetOps)
        except (ZeroDivisionError, ValueError, OverflowError) as exc:
            raise DomainError(f"field undefined at (u={u!r}, v={v!r}): {exc}") from exc
        return LiftJet(ub.val, vb.val, ub.du, ub.dv, vb.du, vb.dv,
                       ub.duu, ub.duv, ub.dvv, vb.duu, vb.duv, vb.dvv)

    def __str__(self) -> str:
        return self.source


@dataclass(frozen=True)
class AffineField:
    """ubar = a1 u + b1 v + c1, vbar = a2 u + b2 v + c2; constant partials."""

    a1: float
    b1: float
    c1: float
    a2: float
    b2: float
    c2: float

    def sample(self, u: float, v: float) -> LiftSample:
        return LiftSample(
            self.a1 * u + self.b1 * v + self.c1,
            self.a2 * u + self.b2 * v + self.c2,
            self.a1, self.b1, self.a2, self.b2,
        )

    def jet(self, u: float, v: float) -> LiftJet:
        s = self.sample(u, v)
        return LiftJet(s.ub, s.vb, s.ub_u, s.ub_v, s.vb_u, s.vb_v,
                       0.0, 0.0, 0.0, 0.0, 0.0, 0.0)

    def __str__(self) -> str:
        def lin(a, b, c):
            return f"{a:.17g}*u + {b:.17g}*v + {c:.17g}"
        return f"{lin(self.a1, self.b1, self.c1)}, {lin(self.a2, self.b2, self.c2)}"


def affine(a1: float, b1: float, c1: float,
           a2: float, b2: float, c2: float) -> AffineField:
    return AffineField(a1, b1, c1, a2, b2, c2)


ZERO_FIELD = AffineField(0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
