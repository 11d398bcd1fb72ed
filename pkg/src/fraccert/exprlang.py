"""Small arithmetic expression language for the nonlinear right-hand sides.

Variables: t, u, v. Operators: + - * / ^ (power, right-associative) and
unary minus, with precedence ^ > unary- > * / > + -. Functions: abs, sqrt,
exp, log, sin, cos (unary) and min, max (binary).

Evaluation never returns a non-finite number: division by zero, domain
faults (sqrt/log of a negative, negative base with a non-integer exponent)
and overflow raise typed EvalError subclasses carrying the byte offset of
the offending token.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "ExprError",
    "ExprSyntaxError",
    "UnknownIdentifier",
    "ArityError",
    "EvalError",
    "DivisionByZero",
    "DomainError",
    "Overflow",
    "Expr",
    "Num",
    "Var",
    "Unary",
    "Bin",
    "Call",
    "parse",
    "eval_expr",
    "eval_expr_array",
    "pretty",
    "NonnegativityReport",
    "check_nonnegative_sampled",
]


class ExprError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class ExprSyntaxError(ExprError):
    pass


class UnknownIdentifier(ExprError):
    pass


class ArityError(ExprError):
    pass


class EvalError(ArithmeticError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (operator at offset {position})")
        self.position = position


class DivisionByZero(EvalError):
    pass


class DomainError(EvalError):
    pass


class Overflow(EvalError):
    pass


@dataclass(frozen=True)
class Num:
    value: float
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Var:
    name: str
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Unary:
    op: str
    operand: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Bin:
    op: str
    left: "Expr"
    right: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Call:
    fn: str
    args: tuple["Expr", ...]
    pos: int = field(default=0, compare=False)


Expr = Num | Var | Unary | Bin | Call

VARIABLES = ("t", "u", "v")
FUNCTIONS = {"abs": 1, "sqrt": 1, "exp": 1, "log": 1, "sin": 1, "cos": 1, "min": 2, "max": 2}

_TOKEN = re.compile(
    r"\s*(?:(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/^(),]))"
)

# binding powers: + - (10) < * / (20) < unary - (30) < ^ (40, right-assoc)
_BIN_BP = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 40}
_UNARY_BP = 30


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                at = pos + len(text[pos:]) - len(text[pos:].lstrip())
                if at >= len(text):
                    break
                raise ExprSyntaxError(f"unexpected character {text[at]!r}", at)
            pos = m.end()
            for kind in ("num", "ident", "op"):
                val = m.group(kind)
                if val is not None:
                    self.toks.append((kind, val, m.start(kind)))
                    break
        self.toks.append(("end", "", len(text)))
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.i]

    def next(self) -> tuple[str, str, int]:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, text: str):
        kind, val, pos = self.next()
        if val != text:
            shown = val if kind != "end" else "end of input"
            raise ExprSyntaxError(f"expected {text!r}, found {shown!r}", pos)


def _parse_prefix(ts: _Tokens) -> Expr:
    kind, val, pos = ts.next()
    if kind == "num":
        return Num(float(val), pos)
    if kind == "ident":
        if ts.peek()[1] == "(":
            if val not in FUNCTIONS:
                raise UnknownIdentifier(f"unknown function {val!r}", pos)
            ts.expect("(")
            args = [_parse_expr(ts, 0)]
            while ts.peek()[1] == ",":
                ts.next()
                args.append(_parse_expr(ts, 0))
            ts.expect(")")
            if len(args) != FUNCTIONS[val]:
                raise ArityError(
                    f"{val} takes {FUNCTIONS[val]} argument(s), got {len(args)}", pos
                )
            return Call(val, tuple(args), pos)
        if val not in VARIABLES:
            raise UnknownIdentifier(f"unknown identifier {val!r}", pos)
        return Var(val, pos)
    if val == "-":
        return Unary("-", _parse_expr(ts, _UNARY_BP), pos)
    if val == "(":
        inner = _parse_expr(ts, 0)
        ts.expect(")")
        return inner
    shown = val if kind != "end" else "end of input"
    raise ExprSyntaxError(f"expected a value, found {shown!r}", pos)


def _parse_expr(ts: _Tokens, min_bp: int) -> Expr:
    left = _parse_prefix(ts)
    while True:
        kind, val, pos = ts.peek()
        bp = _BIN_BP.get(val, -1) if kind == "op" else -1
        if bp < min_bp or bp == -1:
            return left
        ts.next()
        # right-associative power re-enters at its own binding power
        right = _parse_expr(ts, bp if val == "^" else bp + 1)
        left = Bin(val, left, right, pos)


def parse(text: str) -> Expr:
    """Parse an expression; raises ExprSyntaxError / UnknownIdentifier / ArityError."""
    ts = _Tokens(text)
    expr = _parse_expr(ts, 0)
    kind, val, pos = ts.peek()
    if kind != "end":
        raise ExprSyntaxError(f"trailing input starting with {val!r}", pos)
    return expr


def _check_finite(res, node_pos: int, what: str):
    if not np.all(np.isfinite(res)):
        raise Overflow(f"{what} overflowed to a non-finite value", node_pos)
    return res


def _evaluate(node: Expr, t, u, v):
    if isinstance(node, Num):
        return np.asarray(node.value, dtype=float)
    if isinstance(node, Var):
        return np.asarray({"t": t, "u": u, "v": v}[node.name], dtype=float)
    if isinstance(node, Unary):
        return -_evaluate(node.operand, t, u, v)
    if isinstance(node, Bin):
        a = _evaluate(node.left, t, u, v)
        b = _evaluate(node.right, t, u, v)
        if node.op == "+":
            return _check_finite(a + b, node.pos, "addition")
        if node.op == "-":
            return _check_finite(a - b, node.pos, "subtraction")
        if node.op == "*":
            return _check_finite(a * b, node.pos, "multiplication")
        if node.op == "/":
            if np.any(b == 0.0):
                raise DivisionByZero("division by zero", node.pos)
            with np.errstate(over="ignore"):
                return _check_finite(a / b, node.pos, "division")
        # power: negative base requires an integer exponent to stay real
        neg_base = a < 0.0
        if np.any(neg_base & (b != np.floor(b))):
            raise DomainError("negative base with a non-integer exponent", node.pos)
        if np.any((a == 0.0) & (b < 0.0)):
            raise DivisionByZero("zero base with a negative exponent", node.pos)
        with np.errstate(over="ignore", invalid="ignore"):
            res = np.where(neg_base, np.sign(np.where(b % 2.0 == 0.0, 1.0, -1.0)), 1.0) * (
                np.abs(a) ** b
            )
        return _check_finite(res, node.pos, "power")
    a = _evaluate(node.args[0], t, u, v)
    if node.fn == "abs":
        return np.abs(a)
    if node.fn == "sqrt":
        if np.any(a < 0.0):
            raise DomainError("sqrt of a negative number", node.pos)
        return np.sqrt(a)
    if node.fn == "exp":
        with np.errstate(over="ignore"):
            return _check_finite(np.exp(a), node.pos, "exp")
    if node.fn == "log":
        if np.any(a <= 0.0):
            raise DomainError("log of a non-positive number", node.pos)
        return np.log(a)
    if node.fn == "sin":
        return np.sin(a)
    if node.fn == "cos":
        return np.cos(a)
    b = _evaluate(node.args[1], t, u, v)
    if node.fn == "min":
        return np.minimum(a, b)
    return np.maximum(a, b)


def eval_expr(expr: Expr, t: float, u: float, v: float) -> float:
    """Evaluate at a point; returns a finite float or raises an EvalError."""
    res = _evaluate(expr, float(t), float(u), float(v))
    return float(_check_finite(res, getattr(expr, "pos", 0), "expression"))


def eval_expr_array(expr: Expr, t, u, v) -> np.ndarray:
    """Evaluate on broadcastable numpy arrays; any faulty sample raises."""
    t, u, v = np.broadcast_arrays(
        np.asarray(t, dtype=float), np.asarray(u, dtype=float), np.asarray(v, dtype=float)
    )
    res = _check_finite(_evaluate(expr, t, u, v), getattr(expr, "pos", 0), "expression")
    return np.broadcast_to(res, t.shape)


def _prec(node: Expr) -> int:
    if isinstance(node, Bin):
        return _BIN_BP[node.op]
    if isinstance(node, Unary):
        return _UNARY_BP
    return 100


def pretty(expr: Expr) -> str:
    """Render an expression; parse(pretty(e)) is structurally equal to e."""
    if isinstance(expr, Num):
        return repr(expr.value)
    if isinstance(expr, Var):
        return expr.name
    if isinstance(expr, Unary):
        inner = pretty(expr.operand)
        if _prec(expr.operand) < _UNARY_BP:
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(expr, Bin):
        lhs, rhs = pretty(expr.left), pretty(expr.right)
        bp = _BIN_BP[expr.op]
        # left child needs parens below bp; right child at-or-below (left-assoc),
        # power is the mirror image (right-assoc)
        if expr.op == "^":
            if _prec(expr.left) <= bp:
                lhs = f"({lhs})"
            if _prec(expr.right) < bp:
                rhs = f"({rhs})"
        else:
            if _prec(expr.left) < bp:
                lhs = f"({lhs})"
            if _prec(expr.right) <= bp:
                rhs = f"({rhs})"
        return f"{lhs} {expr.op} {rhs}"
    return f"{expr.fn}({', '.join(pretty(a) for a in expr.args)})"


@dataclass(frozen=True)
class NonnegativityReport:
    """Sampled sign check of an expression over a box."""

    min_value: float
    location: tuple[float, float, float]
    samples: int
    nonnegative: bool


def check_nonnegative_sampled(expr: Expr, t_range, u_range, v_range, n: int = 21) -> NonnegativityReport:
    """Sample an n^3 grid over the box and report the minimum found.

    Advisory only: a nonnegative report does not prove nonnegativity.
    Evaluation faults propagate as EvalError.
    """
    if n < 2:
        raise ValueError(f"need n >= 2 samples per axis, got {n}")
    axes = [np.linspace(float(lo), float(hi), n) for lo, hi in (t_range, u_range, v_range)]
    tg, ug, vg = np.meshgrid(*axes, indexing="ij")
    vals = eval_expr_array(expr, tg, ug, vg)
    flat = int(np.argmin(vals))
    idx = np.unravel_index(flat, vals.shape)
    return NonnegativityReport(
        min_value=float(vals[idx]),
        location=(float(tg[idx]), float(ug[idx]), float(vg[idx])),
        samples=vals.size,
        nonnegative=bool(vals[idx] >= 0.0),
    )
