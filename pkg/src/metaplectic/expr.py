"""Algebraic expression parsing on top of the ast module.

Parses strings like ``((k-1)*(k+1)/(k^4*q-1))*x1 + x2`` against a mapping
of variable names to domain objects (scalars or Laurent elements).  ``^`` is
accepted as power.  Integer subexpressions stay exact: int/int becomes a
Fraction, which the domain classes absorb on contact.
"""

from __future__ import annotations

import ast
from fractions import Fraction

_ALLOWED = (ast.Expression, ast.BinOp, ast.UnaryOp, ast.Constant, ast.Name,
            ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow, ast.USub, ast.UAdd)


class ExpressionError(ValueError):
    pass


def parse_expression(text: str, names: dict):
    """Evaluate an algebraic expression over the given variables."""
    try:
        tree = ast.parse(text.replace("^", "**").strip(), mode="eval")
    except SyntaxError as exc:
        raise ExpressionError(f"cannot parse {text!r}: {exc}") from None

    def ev(node):
        if not isinstance(node, _ALLOWED):
            raise ExpressionError(
                f"disallowed syntax {type(node).__name__} in {text!r}")
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant):
            if not isinstance(node.value, int):
                raise ExpressionError(f"non-integer literal {node.value!r}")
            return node.value
        if isinstance(node, ast.Name):
            try:
                return names[node.id]
            except KeyError:
                raise ExpressionError(f"unknown variable {node.id!r}") from None
        if isinstance(node, ast.UnaryOp):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        left, right = ev(node.left), ev(node.right)
        both_int = isinstance(left, (int, Fraction)) and \
            isinstance(right, (int, Fraction))
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if both_int:
                return Fraction(left) / Fraction(right)
            return left / right
        if isinstance(node.op, ast.Pow):
            if not isinstance(right, int):
                raise ExpressionError("exponents must be integer literals")
            return left ** right
        raise ExpressionError(f"unsupported operator in {text!r}")

    return ev(tree)


def scalar_names(field) -> dict:
    """Variable table for a ground field.

    Includes the adjoined indeterminates, eps aliases, and the derived
    g-parameters up to index n-1 so any table expression parses.
    """
    names = {name: field.var(name) for name in field.var_names}
    if getattr(field, "style", None) == "gl":
        names["eps"] = field.from_int(field.epsilon["lg"])
        for j in range(1, field.n):
            names.setdefault(f"g{j}", field.g(j))
    else:
        for y, e in getattr(field, "epsilon", {}).items():
            names[f"eps_{y}"] = field.from_int(e)
        for j in range(1, field.n):
            for y in field.classes:
                names.setdefault(f"g{j}_{y}", field.g(j, y))
    return names


def laurent_names(field, rank: int, prefix: str = "x") -> dict:
    """Variable table extending scalar_names with x1..x_rank monomials."""
    from .group_algebra import LaurentElement
    names = scalar_names(field)
    for i in range(rank):
        exp = tuple(1 if j == i else 0 for j in range(rank))
        names[f"{prefix}{i + 1}"] = LaurentElement.monomial(field, exp)
    return names


def parse_scalar(field, text: str):
    return parse_expression(text, scalar_names(field))


def parse_laurent(field, rank: int, text: str):
    from .group_algebra import LaurentElement
    out = parse_expression(text, laurent_names(field, rank))
    if not isinstance(out, LaurentElement):
        if isinstance(out, (int, Fraction)):
            out = field.from_fraction(out)
        out = LaurentElement.monomial(field, (0,) * rank, out)
    return out
