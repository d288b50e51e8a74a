"""Exact arithmetic expressions used by the identity catalog.

Expressions are ordinary Python syntax restricted to numbers, names,
``+ - * / // % **``, comparisons and a few integer helpers.  They are
compiled once and evaluated over ``Fraction``.
"""

from __future__ import annotations

import ast
import math
from fractions import Fraction
from functools import lru_cache


def _floor(x):
    return math.floor(Fraction(x))


def _ceil(x):
    return math.ceil(Fraction(x))


def _int_arg(x, name):
    x = Fraction(x)
    if x.denominator != 1:
        raise ValueError(f"{name} needs an integer, got {x}")
    return int(x)


def _fact(x):
    x = _int_arg(x, "fact")
    if x < 0:
        raise ValueError("factorial of a negative integer")
    return math.factorial(x)


def _binom(a, b):
    a, b = _int_arg(a, "binom"), _int_arg(b, "binom")
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def _sign(x):
    return (x > 0) - (x < 0)


FUNCTIONS = {
    "floor": _floor,
    "ceil": _ceil,
    "fact": _fact,
    "binom": _binom,
    "min": min,
    "max": max,
    "abs": abs,
    "isint": lambda x: Fraction(x).denominator == 1,
    "sign": _sign,
}

_ALLOWED = (
    ast.Expression, ast.BinOp, ast.UnaryOp, ast.Constant, ast.Name, ast.Load,
    ast.Call, ast.Compare, ast.BoolOp, ast.IfExp,
    ast.Add, ast.Sub, ast.Mult, ast.Div, ast.FloorDiv, ast.Mod, ast.Pow,
    ast.USub, ast.UAdd, ast.Not, ast.And, ast.Or,
    ast.Eq, ast.NotEq, ast.Lt, ast.LtE, ast.Gt, ast.GtE,
)


class _Fractionize(ast.NodeTransformer):
    """Turn numeric literals into Fraction calls so ``1/2`` stays exact."""

    def visit_Constant(self, node):
        if isinstance(node.value, bool) or not isinstance(node.value, (int, float)):
            raise ValueError(f"unsupported literal {node.value!r}")
        return ast.copy_location(
            ast.Call(ast.Name("_F", ast.Load()), [ast.Constant(str(node.value))], []), node
        )


@lru_cache(maxsize=None)
def compile_expr(text: str):
    tree = ast.parse(str(text).replace("^", "**"), mode="eval")
    for node in ast.walk(tree):
        if not isinstance(node, _ALLOWED):
            raise ValueError(f"disallowed syntax {type(node).__name__} in {text!r}")
        if isinstance(node, ast.Call):
            if not isinstance(node.func, ast.Name) or node.func.id not in FUNCTIONS:
                raise ValueError(f"unknown function in {text!r}")
    tree = ast.fix_missing_locations(_Fractionize().visit(tree))
    return compile(tree, f"<expr {text}>", "eval")


def evaluate(text, env: dict) -> Fraction:
    """Evaluate ``text`` with the names in ``env`` bound to exact values."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    scope = {"_F": Fraction, "__builtins__": {}}
    scope.update(FUNCTIONS)
    for k, v in env.items():
        scope[k] = Fraction(v) if not isinstance(v, Fraction) else v
    value = eval(compile_expr(str(text)), scope)
    if isinstance(value, bool):
        return value
    if isinstance(value, float):
        raise ValueError(f"{text} is irrational for {env}")
    return Fraction(value)


def evaluate_int(text, env: dict) -> int:
    v = evaluate(text, env)
    if v.denominator != 1:
        raise ValueError(f"{text} = {v} is not an integer")
    return int(v)
