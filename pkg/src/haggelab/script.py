"""A small line-oriented language for constructions, assertions and figures.

    point A = (0, 0)
    triangle T = A B C
    let Hc = hagge_circle(T, centroid(T))
    assert on_circle(Hc, orthocenter(T))
    draw Hc color=red

Names are single-assignment and must be defined before use.  Arguments may
be names, nested calls, scalars (``3``, ``-2/5``, ``0.25``) or dotted field
lookups such as ``cfg.X``.  ``#`` starts a comment.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field, fields, is_dataclass
from fractions import Fraction
from typing import Any, Callable, Optional, Union

from . import centers, geom, hagge, speckman
from .errors import (
    ArgumentTypeError,
    ArityError,
    GeometryError,
    ScriptSyntaxError,
    UnknownName,
    UseBeforeDef,
)
from .geom import Circle, Conic, Line, Point, Triangle
from .numeric import Backend, coerce, format_scalar, is_zero, parse_scalar
from .report import CheckReport

# --- syntax tree ------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Ref:
    name: str
    attr: Optional[str] = None
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


@dataclass(frozen=True)
class PointLit:
    x: Fraction
    y: Fraction


Expr = Union[Num, Ref, Call, PointLit]


@dataclass(frozen=True)
class PointDef:
    name: str
    expr: Expr
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class TriangleDef:
    name: str
    vertices: tuple
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Let:
    name: str
    expr: Expr
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Assert:
    pred: Call
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Draw:
    name: str
    style: tuple = ()
    line: int = field(default=0, compare=False)


Statement = Union[PointDef, TriangleDef, Let, Assert, Draw]


@dataclass(frozen=True)
class Program:
    statements: tuple

    def __len__(self) -> int:
        return len(self.statements)

    def draws(self) -> list:
        return [s for s in self.statements if isinstance(s, Draw)]


# --- builtins ---------------------------------------------------------------


@dataclass(frozen=True)
class CenterPair:
    """The two orthologic centers, ``first`` on the first triangle's circumcircle."""

    first: Point
    second: Point


SCALAR = "scalar"


def _is(value, kind) -> bool:
    if kind == SCALAR:
        return isinstance(value, (Fraction, float))
    return isinstance(value, kind)


def _kind_name(kind) -> str:
    return kind if isinstance(kind, str) else kind.__name__


def _intersect(l1: Line, l2: Line) -> Point:
    return geom.intersect_lines(l1, l2)


def _orthologic(t1: Triangle, t2: Triangle) -> CenterPair:
    return CenterPair(*speckman.orthologic_centers(t1, t2))


CONSTRUCTIONS: dict[str, tuple[tuple, Callable]] = {
    "centroid": ((Triangle,), centers.centroid),
    "orthocenter": ((Triangle,), centers.orthocenter),
    "circumcenter": ((Triangle,), centers.circumcenter),
    "circumcircle": ((Triangle,), centers.circumcircle),
    "nine_point_circle": ((Triangle,), centers.nine_point_circle),
    "medial": ((Triangle,), centers.medial_triangle),
    "isogonal": ((Triangle, Point), centers.isogonal_conjugate),
    "reflect": ((Point, Line), geom.reflect_in_line),
    "line": ((Point, Point), geom.line_through),
    "intersect": ((Line, Line), _intersect),
    "midpoint": ((Point, Point), geom.midpoint),
    "divide": ((Point, Point, SCALAR), geom.divide),
    "second_intersection": ((Circle, Line, Point), geom.second_intersection),
    "hagge": ((Triangle, Point), hagge.build_hagge),
    "hagge_circle": ((Triangle, Point), hagge.hagge_circle),
    "double_simson": ((Triangle, Point), hagge.double_simson),
    "perspector": ((Triangle, Triangle), speckman.perspector),
    "desargues_axis": ((Triangle, Triangle), speckman.desargues_axis),
    "orthologic": ((Triangle, Triangle), _orthologic),
    "paralogic": ((Triangle, Triangle), speckman.paralogic_center),
    "conic5": ((Point,) * 5, geom.conic_through_five),
    "speckman_h": ((Triangle, SCALAR, SCALAR), speckman.build_speckman_through_H),
}


def _equal(a, b) -> bool:
    if type(a) is not type(b):
        if _is(a, SCALAR) and _is(b, SCALAR):
            return is_zero(a - b)
        return False
    if isinstance(a, Point):
        return geom.same_point(a, b)
    if isinstance(a, Line):
        return geom.same_line(a, b)
    if isinstance(a, Circle):
        return geom.same_circle(a, b)
    if isinstance(a, Conic):
        return geom.same_conic(a, b)
    if isinstance(a, Triangle):
        return all(geom.same_point(p, q) for p, q in zip(a.vertices, b.vertices))
    if _is(a, SCALAR):
        return is_zero(a - b)
    return a == b


PREDICATES: dict[str, tuple[tuple, Callable]] = {
    "collinear": ((Point, Point, Point), geom.collinear),
    "concurrent": ((Line, Line, Line), geom.concurrent),
    "concyclic": ((Point, Point, Point, Point), geom.concyclic),
    "on_circle": ((Circle, Point), lambda c, p: c.contains(p)),
    "on_conic": ((Conic, Point), geom.conic_contains),
    "equal": ((object, object), _equal),
    "parallel": ((Line, Line), geom.parallel),
    "perpendicular": ((Line, Line), geom.perpendicular),
}


# --- tokenizer and parser ---------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#.*)
  | (?P<num>-?\d+(?:/\d+|\.\d+)?)
  | (?P<id>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<str>"[^"\n]*")
  | (?P<punct>[(),=.])
    """,
    re.VERBOSE,
)

KEYWORDS = {"point", "triangle", "let", "assert", "draw"}


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(line_text: str, lineno: int) -> list:
    toks, pos = [], 0
    while pos < len(line_text):
        m = _TOKEN.match(line_text, pos)
        if m is None:
            raise ScriptSyntaxError(f"unexpected character {line_text[pos]!r}", lineno, pos + 1)
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            toks.append(_Tok(kind, m.group(), lineno, pos + 1))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, toks: list, lineno: int, width: int, defined: set):
        self.toks = toks
        self.i = 0
        self.lineno = lineno
        self.end_col = width + 1
        self.defined = defined

    def peek(self) -> Optional[_Tok]:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def fail(self, msg: str, tok: Optional[_Tok] = None):
        col = tok.column if tok else self.end_col
        got = f"{tok.text!r}" if tok else "end of line"
        raise ScriptSyntaxError(f"{msg}, found {got}", self.lineno, col)

    def expect(self, kind: str, text: Optional[str] = None) -> _Tok:
        tok = self.peek()
        if tok is None or tok.kind != kind or (text is not None and tok.text != text):
            self.fail(f"expected {text!r}" if text else f"expected {kind}", tok)
        self.i += 1
        return tok

    def at(self, text: str) -> bool:
        tok = self.peek()
        return tok is not None and tok.kind == "punct" and tok.text == text

    def done(self):
        if self.peek() is not None:
            self.fail("unexpected trailing input", self.peek())

    def new_name(self) -> str:
        tok = self.expect("id")
        if tok.text in KEYWORDS:
            self.fail("keyword used as a name", tok)
        if tok.text in self.defined:
            raise ScriptSyntaxError(f"{tok.text!r} is already defined", tok.line, tok.column)
        return tok.text

    def ref(self) -> Ref:
        tok = self.expect("id")
        if tok.text not in self.defined:
            raise UseBeforeDef(f"{tok.text!r} used before definition", tok.line, tok.column)
        attr = None
        if self.at("."):
            self.i += 1
            attr = self.expect("id").text
        return Ref(tok.text, attr, tok.line, tok.column)

    def scalar(self) -> Fraction:
        tok = self.expect("num")
        return Fraction(parse_scalar(tok.text))

    def call(self, table: dict) -> Call:
        tok = self.expect("id")
        if tok.text not in table:
            raise UnknownName(f"unknown function {tok.text!r}", tok.line, tok.column)
        self.expect("punct", "(")
        args = []
        if not self.at(")"):
            args.append(self.expr())
            while self.at(","):
                self.i += 1
                args.append(self.expr())
        self.expect("punct", ")")
        want = len(table[tok.text][0])
        if len(args) != want:
            raise ArityError(f"{tok.text} takes {want} arguments, got {len(args)}", tok.line, tok.column)
        return Call(tok.text, tuple(args))

    def point_literal(self) -> PointLit:
        self.expect("punct", "(")
        x = self.scalar()
        self.expect("punct", ",")
        y = self.scalar()
        self.expect("punct", ")")
        return PointLit(x, y)

    def expr(self) -> Expr:
        tok = self.peek()
        if tok is None:
            self.fail("expected an argument")
        if tok.kind == "num":
            return Num(self.scalar())
        if tok.kind == "punct" and tok.text == "(":
            return self.point_literal()
        if tok.kind == "id":
            nxt = self.toks[self.i + 1] if self.i + 1 < len(self.toks) else None
            if nxt is not None and nxt.text == "(":
                return self.call(CONSTRUCTIONS)
            return self.ref()
        self.fail("expected an argument", tok)

    def statement(self) -> Statement:
        head = self.expect("id")
        kw = head.text
        if kw == "point":
            name = self.new_name()
            self.expect("punct", "=")
            expr = self.expr()
            stmt = PointDef(name, expr, self.lineno)
        elif kw == "triangle":
            name = self.new_name()
            self.expect("punct", "=")
            verts = tuple(self.ref() for _ in range(3))
            stmt = TriangleDef(name, verts, self.lineno)
        elif kw == "let":
            name = self.new_name()
            self.expect("punct", "=")
            stmt = Let(name, self.expr(), self.lineno)
        elif kw == "assert":
            stmt = Assert(self.call(PREDICATES), self.lineno)
        elif kw == "draw":
            target = self.ref()
            if target.attr is not None:
                self.fail("draw takes a plain name")
            style = []
            while self.peek() is not None:
                key = self.expect("id").text
                self.expect("punct", "=")
                tok = self.peek()
                if tok is None or tok.kind not in ("id", "num", "str"):
                    self.fail("expected a style value", tok)
                self.i += 1
                style.append((key, tok.text[1:-1] if tok.kind == "str" else tok.text))
            stmt = Draw(target.name, tuple(style), self.lineno)
        else:
            self.fail("expected point, triangle, let, assert or draw", head)
        self.done()
        if isinstance(stmt, (PointDef, TriangleDef, Let)):
            self.defined.add(stmt.name)
        return stmt


def parse_script(text: str) -> Program:
    """Parse a whole script; the first error raises with its line and column."""
    defined: set = set()
    statements = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokenize(raw, lineno)
        if not toks:
            continue
        statements.append(_Parser(toks, lineno, len(raw), defined).statement())
    return Program(tuple(statements))


def _fmt_expr(e: Expr) -> str:
    if isinstance(e, Num):
        return format_scalar(e.value)
    if isinstance(e, PointLit):
        return f"({format_scalar(e.x)}, {format_scalar(e.y)})"
    if isinstance(e, Ref):
        return e.name if e.attr is None else f"{e.name}.{e.attr}"
    return f"{e.name}({', '.join(_fmt_expr(a) for a in e.args)})"


def _fmt_style(value: str) -> str:
    return value if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*|-?\d+(?:/\d+|\.\d+)?", value) else f'"{value}"'


def serialize(prog: Program) -> str:
    out = []
    for s in prog.statements:
        if isinstance(s, PointDef):
            out.append(f"point {s.name} = {_fmt_expr(s.expr)}")
        elif isinstance(s, TriangleDef):
            out.append(f"triangle {s.name} = {' '.join(_fmt_expr(v) for v in s.vertices)}")
        elif isinstance(s, Let):
            out.append(f"let {s.name} = {_fmt_expr(s.expr)}")
        elif isinstance(s, Assert):
            out.append(f"assert {_fmt_expr(s.pred)}")
        else:
            style = "".join(f" {k}={_fmt_style(v)}" for k, v in s.style)
            out.append(f"draw {s.name}{style}")
    return "\n".join(out) + "\n"


# --- evaluation -------------------------------------------------------------


class _Unavailable(Exception):
    """A name whose defining statement failed."""

    def __init__(self, name: str):
        super().__init__(name)
        self.name = name


def _attr(value, attr: str):
    allowed: set = set()
    if is_dataclass(value):
        allowed = {f.name for f in fields(value)}
    elif isinstance(value, Triangle):
        allowed = {"A", "B", "C"}
    elif isinstance(value, Circle):
        allowed = {"center", "radius_sq"}
    elif isinstance(value, Point):
        allowed = {"x", "y"}
    if attr not in allowed:
        raise ArgumentTypeError(f"{type(value).__name__} has no field {attr!r}")
    return getattr(value, attr)


class _Evaluator:
    def __init__(self, backend: Backend):
        self.backend = backend
        self.env: dict[str, Any] = {}
        self.failed: set = set()

    def scalar(self, v: Fraction):
        return coerce(v, self.backend)

    def eval(self, e: Expr):
        if isinstance(e, Num):
            return self.scalar(e.value)
        if isinstance(e, PointLit):
            return Point(self.scalar(e.x), self.scalar(e.y))
        if isinstance(e, Ref):
            if e.name in self.failed:
                raise _Unavailable(e.name)
            value = self.env[e.name]
            return value if e.attr is None else _attr(value, e.attr)
        return self.apply(CONSTRUCTIONS, e)

    def apply(self, table: dict, call: Call):
        return _invoke(table, call.name, [self.eval(a) for a in call.args])


def _invoke(table: dict, name: str, args: list):
    kinds, fn = table[name]
    for i, (arg, kind) in enumerate(zip(args, kinds)):
        if kind is not object and not _is(arg, kind):
            raise ArgumentTypeError(f"{name} argument {i + 1} must be {_kind_name(kind)}, got {type(arg).__name__}")
    return fn(*args)


def _describe_failure(call: Call, args: list) -> dict:
    """Both sides of the failing relation, as text."""
    name = call.name
    if name == "on_circle":
        c, p = args
        return {"lhs": format_scalar(c.power(p)), "rhs": "0"}
    if name == "on_conic":
        K, p = args
        return {"lhs": format_scalar(K.value(p)), "rhs": "0"}
    if name == "collinear":
        return {"lhs": format_scalar(geom.orient(*args)), "rhs": "0"}
    return {"lhs": _show(args[0]), "rhs": _show(args[1]) if len(args) > 1 else ""}


def _show(v) -> str:
    if _is(v, SCALAR):
        return format_scalar(v)
    return repr(v)


def value_json(v):
    """JSON form of any value a script can bind."""
    if isinstance(v, (Point, Line, Circle, Conic, Triangle)):
        return geom.to_json(v)
    if _is(v, SCALAR):
        return format_scalar(v)
    if is_dataclass(v):
        out = {}
        for f in fields(v):
            item = getattr(v, f.name)
            if isinstance(item, (Point, Line, Circle, Conic, Triangle, CenterPair)):
                out[f.name] = value_json(item)
        return out
    return repr(v)


@dataclass
class RunResult:
    report: CheckReport
    env: dict

    def env_json(self) -> dict:
        return {name: value_json(v) for name, v in self.env.items()}


def run_program(prog: Program, backend: Union[Backend, str] = Backend.RATIONAL) -> RunResult:
    """Execute statements in order.

    Failed assertions and failed constructions become failing checks named
    after their line; later statements that need a failed name fail too.
    """
    backend = Backend(backend)
    ev = _Evaluator(backend)
    rep = CheckReport("script", backend=backend.value)
    n_assert = 0
    for s in prog.statements:
        label = f"line {s.line}"
        try:
            if isinstance(s, PointDef):
                value = ev.eval(s.expr)
                if not isinstance(value, Point):
                    raise ArgumentTypeError(f"{s.name} is bound to {type(value).__name__}, not a point")
                ev.env[s.name] = value
            elif isinstance(s, TriangleDef):
                pts = [ev.eval(v) for v in s.vertices]
                if not all(isinstance(p, Point) for p in pts):
                    raise ArgumentTypeError("triangle vertices must be points")
                ev.env[s.name] = Triangle(*pts)
            elif isinstance(s, Let):
                ev.env[s.name] = ev.eval(s.expr)
            elif isinstance(s, Assert):
                n_assert += 1
                args = [ev.eval(a) for a in s.pred.args]
                ok = _invoke(PREDICATES, s.pred.name, args)
                detail = {} if ok else _describe_failure(s.pred, args)
                rep.add(f"{label}: {s.pred.name}", _fmt_expr(s.pred), ok, **detail)
            else:
                if s.name in ev.failed:
                    raise _Unavailable(s.name)
        except _Unavailable as exc:
            _fail(rep, ev, s, label, "Unavailable", f"depends on failed {exc.name!r}")
        except (GeometryError, ZeroDivisionError) as exc:
            name = exc.name if isinstance(exc, GeometryError) else "DivisionByZero"
            _fail(rep, ev, s, label, name, str(exc))
    rep.records["assertions"] = n_assert
    return RunResult(rep, ev.env)


def _fail(rep: CheckReport, ev: _Evaluator, s: Statement, label: str, error: str, message: str):
    if isinstance(s, (PointDef, TriangleDef, Let)):
        ev.failed.add(s.name)
        rep.add(f"{label}: {s.name}", "construction", False, error=error, message=message)
    elif isinstance(s, Assert):
        rep.add(f"{label}: {s.pred.name}", _fmt_expr(s.pred), False, error=error, message=message)
    else:
        rep.add(f"{label}: draw {s.name}", "draw", False, error=error, message=message)
