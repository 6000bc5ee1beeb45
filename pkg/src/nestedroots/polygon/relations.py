"""Commutator relation tables for the hexagon and the octagon, kept as data.

A table maps an ordered pair of generator names (f, g) to the normal-form
word of the commutator [f(a), g(b)] = f(a)^-1 g(b)^-1 f(a) g(b).  Each word
is a list of (generator, expression) pairs.  Expressions are small Python
expressions in the arguments ``a`` and ``b``:

* ``x**S`` is the Tits endomorphism applied to x, ``x**(2*S+3)`` means
  x^3 * sigma(x)^2;
* ``N(x)``, ``sharp(x)``, ``T(x, y)``, ``cross(x, y)`` are the hexagonal
  system maps;
* integer literals, ``+``, ``-`` (binary and unary) and ``*``.

The expressions are parsed once with :mod:`ast` and evaluated over whatever
coefficient ring is active.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "Expr",
    "compile_expr",
    "OCTAGON_ORDER",
    "OCTAGON_BAND",
    "OCTAGON_TABLE",
    "OCTAGON_CONJUGATION",
    "OCTAGON_BASIS",
    "HEXAGON_ORDER",
    "HEXAGON_TABLE",
    "lookup",
]


class ExprError(ValueError):
    pass


def _exponent(node):
    """Exponent as (plain, sigma) with value plain + sigma * S."""
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value, 0
    if isinstance(node, ast.Name) and node.id == "S":
        return 0, 1
    if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Add):
        p1, s1 = _exponent(node.left)
        p2, s2 = _exponent(node.right)
        return p1 + p2, s1 + s2
    if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Mult):
        if isinstance(node.left, ast.Constant):
            k = node.left.value
            p, s = _exponent(node.right)
            return k * p, k * s
    raise ExprError(f"unsupported exponent {ast.dump(node)}")


_FUNCS = {"N": 1, "sharp": 1, "T": 2, "cross": 2}


def _check(node):
    if isinstance(node, ast.Expression):
        return _check(node.body)
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            _check(node.left)
            e = _exponent(node.right)
            if min(e) < 0:
                raise ExprError("negative exponent")
            return
        if not isinstance(node.op, (ast.Add, ast.Sub, ast.Mult)):
            raise ExprError(f"operator {type(node.op).__name__} not allowed")
        _check(node.left)
        _check(node.right)
        return
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return _check(node.operand)
    if isinstance(node, ast.Name):
        if node.id in ("a", "b"):
            return
        raise ExprError(f"unknown name {node.id}")
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id in _FUNCS:
        if len(node.args) != _FUNCS[node.func.id] or node.keywords:
            raise ExprError(f"bad call to {node.func.id}")
        for arg in node.args:
            _check(arg)
        return
    raise ExprError(f"unsupported syntax {ast.dump(node)}")


@dataclass(frozen=True)
class Expr:
    src: str
    tree: ast.Expression

    def __call__(self, ring, env: dict, system=None):
        return _eval(self.tree.body, ring, env, system)

    def __repr__(self):
        return f"Expr({self.src!r})"


def _const(ring, n):
    if hasattr(ring, "constant"):
        return ring.constant(n % 2) if ring.characteristic == 2 else ring.constant(n)
    if ring.characteristic == 2:
        return n & 1
    return n % ring.characteristic


def _power(ring, x, plain, sig):
    out = ring.pow(x, plain) if plain else ring.one
    if sig:
        out = ring.mul(out, ring.pow(ring.sigma(x), sig))
    return out


def _eval(node, ring, env, system):
    if isinstance(node, ast.Name):
        return env[node.id]
    if isinstance(node, ast.Constant):
        return _const(ring, node.value)
    if isinstance(node, ast.UnaryOp):
        return ring.neg(_eval(node.operand, ring, env, system))
    if isinstance(node, ast.Call):
        args = [_eval(a, ring, env, system) for a in node.args]
        if system is None:
            raise ExprError(f"{node.func.id} needs a hexagonal system")
        return getattr(system, node.func.id)(*args)
    if isinstance(node.op, ast.Pow):
        base = _eval(node.left, ring, env, system)
        plain, sig = _exponent(node.right)
        return _power(ring, base, plain, sig)
    left = _eval(node.left, ring, env, system)
    right = _eval(node.right, ring, env, system)
    if isinstance(node.op, ast.Add):
        return ring.add(left, right)
    if isinstance(node.op, ast.Sub):
        return ring.sub(left, right)
    return ring.mul(left, right)


@lru_cache(maxsize=None)
def compile_expr(src: str) -> Expr:
    tree = ast.parse(src, mode="eval")
    _check(tree)
    return Expr(src, tree)


def _word(*pairs):
    return tuple((g, compile_expr(e)) for g, e in pairs)


# Octagon: generators x1..x8, even ones carry a second flavour y_i.
# Normal-form order inside the band U_2 ... U_7.
OCTAGON_ORDER = ("x2", "y2", "x3", "x4", "y4", "x5", "x6", "y6", "x7")
OCTAGON_BAND = frozenset(OCTAGON_ORDER)

# [f(a), g(b)] for f later than g in OCTAGON_ORDER; every pair not listed
# (and not inside one U_i) commutes.
OCTAGON_TABLE = {
    ("x7", "x2"): _word(("x4", "a*b")),
    ("y4", "y2"): _word(("x3", "a*b")),
    ("x5", "y2"): _word(("x4", "a*b")),
    ("x7", "y2"): _word(("x5", "a*b**S"), ("x6", "a**S*b")),
    ("y6", "x3"): _word(("x4", "a*b")),
    ("y6", "y4"): _word(("x5", "a*b")),
    ("x7", "y4"): _word(("x6", "a*b")),
}

# Commutators with y8(b)^-1 on the right, used to conjugate the basic
# commutator word.  Missing band generators commute with y8.
OCTAGON_CONJUGATION = {
    ("x2", "y8inv"): _word(("x3", "a*b"), ("x4", "a**S*b**(S+1)"), ("x6", "a*b**(S+2)")),
    ("x3", "y8inv"): _word(("x4", "a**S*b"), ("x5", "a*b**S"), ("x6", "a*b**(S+1)")),
    ("x4", "y8inv"): (),
    ("y4", "y8inv"): (),
    ("x5", "y8inv"): _word(("x6", "a*b")),
    ("x6", "y8inv"): (),
    ("y6inv", "y8inv"): _word(("x7", "a*b")),
    ("y6", "y8inv"): _word(("x7", "a*b")),
    ("x7", "y8inv"): (),
}

# Commutators of the two basis generators.
OCTAGON_BASIS = {
    ("x1", "x8"): _word(
        ("x2", "a**(S+1)*b"),
        ("x3", "a**(S+1)*b**S"),
        ("y4", "a**S*b"),
        ("x5", "a**(S+1)*b**2"),
        ("y6inv", "a*b"),
        ("x7", "a*b**S"),
    ),
    ("x1", "y8inv"): _word(
        ("y2", "a*b"),
        ("x3", "a**(S+1)*b**(S+2)"),
        ("x4", "a**(S+2)*b**(2*S+3)"),
        ("y4", "a**S*b**(S+1)"),
        ("x5", "a**(S+1)*b**(2*S+2)"),
        ("x6", "a**(S+1)*b**(2*S+3)"),
        ("x7", "a*b**(S+2)"),
    ),
    ("x1", "y6"): _word(("x2", "a**S*b"), ("x3", "a*b**S")),
}

# Hexagon over a hexagonal system: x1, x3, x5 take values in J, the even
# generators in the field.
HEXAGON_ORDER = ("x2", "x3", "x4", "x5")

HEXAGON_TABLE = {
    ("x1", "x3"): _word(("x2", "-T(a, b)")),
    ("x3", "x5"): _word(("x4", "T(a, b)")),
    ("x1", "x5"): _word(("x2", "-T(sharp(a), b)"), ("x3", "cross(a, b)"), ("x4", "T(a, sharp(b))")),
    ("x2", "x6"): _word(("x4", "a*b")),
    ("x1", "x6"): _word(("x2", "-b*N(a)"), ("x3", "b*sharp(a)"), ("x4", "b**2*N(a)"), ("x5", "-b*a")),
}


def lookup(table: dict, f: str, g: str):
    """The commutator word for [f, g], or None when the pair is absent."""
    return table.get((f, g))
