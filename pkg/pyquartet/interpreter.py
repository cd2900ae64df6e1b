"""Evaluator for construction scripts.

Values are rational functions, points and triangles over one ``VarTable``. Indeterminates
must be declared with ``vars`` (or predeclared by the caller) before use.
"""
from dataclasses import dataclass, field
import logging
from typing import Callable, Dict, List, Optional, Sequence, TextIO, Tuple, Union

from pyquartet.errors import (
    QuartetError,
    ScriptError,
    ScriptEvalError,
    ScriptNameError,
    ScriptTypeError,
)
from pyquartet.geometry import (
    Point,
    Triangle,
    circumcenter,
    circumradius_sq,
    collinear_det,
    concyclic_det,
    de_sq,
    isogonal_conjugate,
    reflect_over_line,
    te,
    triangle,
)
from pyquartet.multipoly import DEFAULT_TABLE, VarTable
from pyquartet.parser import (
    Assert,
    Assign,
    BinOp,
    Call,
    Expr,
    Ident,
    Neg,
    NumberLit,
    Script,
    Show,
    TupleLit,
    VarsDecl,
    parse,
    parse_expression,
)
from pyquartet.ratfield import RatFunc, rf_const, rf_eq, rf_format, rf_var
from pyquartet.scalar import rat_parse

logger = logging.getLogger(__name__)

Value = Union[RatFunc, Point, Triangle]


def kind_of(value: Value) -> str:
    if isinstance(value, RatFunc):
        return "number"
    if isinstance(value, Point):
        return "point"
    if isinstance(value, Triangle):
        return "triangle"
    raise TypeError(f"not a script value: {value!r}")


def format_value(value: Value) -> str:
    if isinstance(value, RatFunc):
        return rf_format(value)
    return str(value)


def values_equal(left: Value, right: Value) -> bool:
    """Field equality, component-wise for points and vertex-wise for triangles."""
    if isinstance(left, RatFunc):
        return rf_eq(left, right)
    if isinstance(left, Point):
        return rf_eq(left.x, right.x) and rf_eq(left.y, right.y)
    return all(values_equal(p, q) for p, q in zip(left.vertices, right.vertices))


@dataclass
class Environment:
    table: VarTable
    declared: frozenset = frozenset()
    bindings: Dict[str, Value] = field(default_factory=dict)

    @classmethod
    def empty(cls) -> "Environment":
        # constants need some table; nothing is declared until ``vars``
        return cls(table=DEFAULT_TABLE)

    @classmethod
    def predeclared(cls, table: VarTable) -> "Environment":
        return cls(table=table, declared=frozenset(table.names))


@dataclass(frozen=True)
class ReportLine:
    kind: str
    line: int
    text: str
    passed: Optional[bool] = None

    def __str__(self):
        if self.kind == "assert":
            return f"ASSERT line {self.line}: {'PASS' if self.passed else 'FAIL'}"
        return self.text


@dataclass
class RunReport:
    lines: List[ReportLine] = field(default_factory=list)

    @property
    def asserts(self) -> List[ReportLine]:
        return [line for line in self.lines if line.kind == "assert"]

    @property
    def passed(self) -> bool:
        return all(line.passed for line in self.asserts)

    @property
    def failures(self) -> List[ReportLine]:
        return [line for line in self.asserts if not line.passed]

    def __str__(self):
        return "\n".join(str(line) for line in self.lines)


# builtins: name -> list of (parameter kinds, implementation)

def _vertex(t: Triangle, i: RatFunc) -> Point:
    if not i.is_constant or i.constant_value not in (1, 2, 3):
        raise ScriptTypeError(f"vertex index must be 1, 2 or 3, got {rf_format(i)}")
    return t.vertex(int(i.constant_value))


Signature = Tuple[Tuple[str, ...], Callable[..., Value]]

BUILTINS: Dict[str, List[Signature]] = {
    "Te": [(("number", "number"), lambda u, v: te(u, v, u.table))],
    "vertex": [(("triangle", "number"), _vertex)],
    "point": [(("number", "number"), Point)],
    "triangle": [(("point", "point", "point"), triangle)],
    "isogonal": [
        (("triangle", "point"), isogonal_conjugate),
        (("point", "point", "point", "point"),
         lambda p1, p2, p3, p: isogonal_conjugate(Triangle(p1, p2, p3), p)),
    ],
    "deSq": [(("point", "point"), de_sq)],
    "circumcenter": [(("point", "point", "point"), circumcenter)],
    "circumradiusSq": [(("point", "point", "point"), circumradius_sq)],
    "reflect": [(("point", "point", "point"), reflect_over_line)],
    "collinearDet": [(("point", "point", "point"), collinear_det)],
    "concyclicDet": [(("point", "point", "point", "point"), concyclic_det)],
    "xcoord": [(("point",), lambda p: p.x)],
    "ycoord": [(("point",), lambda p: p.y)],
}


def _describe(signatures: Sequence[Signature], name: str) -> str:
    return " or ".join(f"{name}({', '.join(kinds)})" for kinds, _ in signatures)


class Interpreter:
    def __init__(self, env: Environment, out: Optional[TextIO] = None):
        self.env = env
        self.out = out
        self.report = RunReport()

    def _emit(self, line: ReportLine):
        self.report.lines.append(line)
        if self.out is not None:
            print(line, file=self.out)

    def run(self, script: Script) -> RunReport:
        for statement in script.statements:
            self.execute(statement)
        return self.report

    def execute(self, statement):
        if isinstance(statement, VarsDecl):
            self._declare(statement)
        elif isinstance(statement, Assign):
            if statement.name in self.env.declared:
                raise ScriptNameError(f"cannot assign to indeterminate {statement.name!r}",
                                      statement.line, statement.col)
            self.env.bindings[statement.name] = self.evaluate(statement.value)
        elif isinstance(statement, Assert):
            left = self.evaluate(statement.left)
            right = self.evaluate(statement.right)
            if kind_of(left) != kind_of(right):
                raise ScriptTypeError(
                    f"cannot compare {kind_of(left)} with {kind_of(right)}",
                    statement.line, statement.col,
                )
            verdict = values_equal(left, right)
            if statement.op == "!=":
                verdict = not verdict
            if not verdict:
                logger.warning("assertion on line %d failed", statement.line)
            self._emit(ReportLine("assert", statement.line, "", verdict))
        elif isinstance(statement, Show):
            self._emit(ReportLine("show", statement.line, format_value(self.evaluate(statement.value))))
        else:
            raise TypeError(f"unknown statement {statement!r}")

    def _declare(self, statement: VarsDecl):
        names = statement.names
        if len(set(names)) != len(names):
            raise ScriptNameError(f"duplicate indeterminate in vars {', '.join(names)}",
                                  statement.line, statement.col)
        if self.env.declared:
            if tuple(names) == self.env.table.names:
                return
            raise ScriptNameError(
                f"indeterminates already declared as {', '.join(self.env.table.names)}",
                statement.line, statement.col,
            )
        if self.env.bindings:
            raise ScriptNameError("vars must come before any assignment",
                                  statement.line, statement.col)
        self.env.table = VarTable(names)
        self.env.declared = frozenset(names)

    def evaluate(self, node: Expr) -> Value:
        try:
            return self._evaluate(node)
        except ScriptError:
            raise
        except QuartetError as e:
            raise ScriptEvalError(e, node.line, node.col) from e

    def _evaluate(self, node: Expr) -> Value:
        table = self.env.table
        if isinstance(node, NumberLit):
            return rf_const(table, rat_parse(node.text))
        if isinstance(node, Ident):
            if node.name in self.env.declared:
                return rf_var(table, node.name)
            if node.name in self.env.bindings:
                return self.env.bindings[node.name]
            raise ScriptNameError(f"unbound name {node.name!r}", node.line, node.col)
        if isinstance(node, Neg):
            value = self.evaluate(node.operand)
            if isinstance(value, Triangle):
                raise ScriptTypeError("cannot negate a triangle", node.line, node.col)
            return -value
        if isinstance(node, TupleLit):
            x, y = (self._expect_number(item) for item in node.items)
            return Point(x, y)
        if isinstance(node, BinOp):
            return self._binop(node)
        if isinstance(node, Call):
            return self._call(node)
        raise TypeError(f"unknown expression {node!r}")

    def _expect_number(self, node: Expr) -> RatFunc:
        value = self.evaluate(node)
        if not isinstance(value, RatFunc):
            raise ScriptTypeError(f"expected a number, found a {kind_of(value)}",
                                  node.line, node.col)
        return value

    def _binop(self, node: BinOp) -> Value:
        left = self.evaluate(node.left)
        right = self.evaluate(node.right)
        kinds = (kind_of(left), kind_of(right))
        op = node.op
        if op == "^":
            if kinds[0] != "number":
                raise ScriptTypeError(f"cannot raise a {kinds[0]} to a power", node.line, node.col)
            if kinds[1] != "number" or not right.is_constant \
                    or right.constant_value.denominator != 1:
                raise ScriptTypeError("exponent must be an integer constant",
                                      node.right.line, node.right.col)
            return left ** int(right.constant_value)
        if kinds == ("number", "number"):
            return {"+": left.__add__, "-": left.__sub__,
                    "*": left.__mul__, "/": left.__truediv__}[op](right)
        if kinds == ("point", "point") and op in "+-":
            return left + right if op == "+" else left - right
        if kinds == ("number", "point") and op == "*":
            return right * left
        if kinds == ("point", "number") and op in "*/":
            return left * right if op == "*" else left * (1 / right)
        raise ScriptTypeError(f"unsupported operands for {op}: {kinds[0]} and {kinds[1]}",
                              node.line, node.col)

    def _call(self, node: Call) -> Value:
        signatures = BUILTINS.get(node.name)
        if signatures is None:
            raise ScriptNameError(f"unknown function {node.name!r}", node.line, node.col)
        args = [self.evaluate(arg) for arg in node.args]
        kinds = tuple(kind_of(arg) for arg in args)
        for params, fn in signatures:
            if params == kinds:
                try:
                    return fn(*args)
                except (ScriptTypeError, ScriptNameError) as e:
                    raise type(e)(e.message, node.line, node.col) from None
        raise ScriptTypeError(
            f"{node.name} expects {_describe(signatures, node.name)}, got "
            f"{node.name}({', '.join(kinds)})",
            node.line, node.col,
        )


def interpret(script: Script, table: Optional[VarTable] = None,
              out: Optional[TextIO] = None) -> RunReport:
    """Run a parsed script; ``table`` predeclares indeterminates, ``out`` receives each line."""
    env = Environment.empty() if table is None else Environment.predeclared(table)
    return Interpreter(env, out).run(script)


def run_source(source: str, table: Optional[VarTable] = None,
               out: Optional[TextIO] = None) -> RunReport:
    return interpret(parse(source), table, out)


def evaluate_expression(text: str, table: VarTable = DEFAULT_TABLE) -> Value:
    """Evaluate a single expression with every indeterminate of ``table`` in scope."""
    node = parse_expression(text)
    return Interpreter(Environment.predeclared(table)).evaluate(node)
