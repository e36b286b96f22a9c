"""Side-condition predicates over parameter points.

Expressions are small arithmetic strings such as ``"a/(c*d)"``; they are
parsed with :mod:`ast` and evaluated over exact or float scopes.
"""

from __future__ import annotations

import ast
import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow,
}


@lru_cache(maxsize=None)
def _parse(expr: str) -> ast.AST:
    tree = ast.parse(expr, mode="eval").body
    for node in ast.walk(tree):
        ok = isinstance(
            node,
            (ast.BinOp, ast.UnaryOp, ast.Name, ast.Constant, ast.Load, ast.USub, ast.UAdd)
            + tuple(_BINOPS),
        )
        if not ok:
            raise ValueError(f"unsupported syntax in {expr!r}")
        if isinstance(node, ast.Constant) and not isinstance(node.value, int):
            raise ValueError(f"only integer literals allowed in {expr!r}")
    return tree


def evaluate(expr: str, scope):
    def ev(node):
        if isinstance(node, ast.Constant):
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            return scope[node.id]
        if isinstance(node, ast.UnaryOp):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        return _BINOPS[type(node.op)](ev(node.left), ev(node.right))

    return ev(_parse(expr))


def symbols_of(expr: str) -> set[str]:
    return {n.id for n in ast.walk(_parse(expr)) if isinstance(n, ast.Name)}


@dataclass(frozen=True)
class Pred:
    op: str
    args: tuple
    bound: Fraction | None = None

    def holds(self, scope) -> bool:
        try:
            vals = [evaluate(a, scope) for a in self.args]
        except ZeroDivisionError:
            return False
        if self.op == "nonzero":
            return vals[0] != 0
        if self.op == "neq":
            return vals[0] != vals[1]
        if self.op == "abs_lt":
            return abs(vals[0]) < self.bound
        raise ValueError(f"unknown predicate {self.op}")

    def to_json(self) -> dict:
        out = {"op": self.op, "args": list(self.args)}
        if self.bound is not None:
            out["bound"] = str(self.bound)
        return out

    def __str__(self):
        if self.op == "abs_lt":
            return f"abs_lt({self.args[0]}, {self.bound})"
        return f"{self.op}({', '.join(self.args)})"


def nonzero(expr: str) -> Pred:
    _parse(expr)
    return Pred("nonzero", (expr,))


def neq(left: str, right: str) -> Pred:
    _parse(left), _parse(right)
    return Pred("neq", (left, right))


def abs_lt(expr: str, bound) -> Pred:
    _parse(expr)
    return Pred("abs_lt", (expr,), Fraction(bound))


def all_hold(preds, scope) -> list[Pred]:
    """The predicates that fail at scope (empty list means admissible)."""
    return [p for p in preds if not p.holds(scope)]
