"""Draw the walls of a hyperbolic rank 3 type in the Klein disk.

Purely illustrative and numeric: the bilinear form is diagonalized in
double precision, a point p of V with B(p, p) < 0 is sent to the disk
point (y1/y0, y2/y0), and each wall {B(p, v) = 0} becomes a chord.
"""

from __future__ import annotations

import math

import numpy as np

from nestedroots.coxeter import CoxeterType
from nestedroots.roots import positive_roots

__all__ = ["walls_svg"]


def _frame(ct: CoxeterType):
    F = ct.field
    G = np.array([[F.to_float(x) / 2 for x in row] for row in ct.A])
    w, Q = np.linalg.eigh(G)
    neg = [i for i in range(3) if w[i] < 0]
    if len(neg) != 1 or any(abs(x) < 1e-12 for x in w):
        raise ValueError(f"type ({ct}) is not hyperbolic")
    order = [neg[0]] + [i for i in range(3) if i != neg[0]]
    return G, w[order], Q[:, order]


def _chord(n):
    """Intersection of the line n0 + n1 x + n2 y = 0 with the unit disk."""
    n0, n1, n2 = n
    r2 = n1 * n1 + n2 * n2
    if r2 == 0:
        return None
    # closest point to the origin, then half-chord along the direction
    d = -n0 / math.sqrt(r2)
    if abs(d) >= 1:
        return None
    ux, uy = n1 / math.sqrt(r2), n2 / math.sqrt(r2)
    h = math.sqrt(1 - d * d)
    cx, cy = d * ux, d * uy
    return (cx - h * uy, cy + h * ux), (cx + h * uy, cy - h * ux)


def walls_svg(ct: CoxeterType, depth: int, size: int = 600) -> str:
    G, w, Q = _frame(ct)
    scale = np.sqrt(np.abs(w))
    lines = []
    for r in positive_roots(ct, depth):
        v = np.array([ct.field.to_float(x) for x in r.vec])
        # wall: p^T G v = 0 with p = Q diag(1/scale) y
        n = (Q.T @ (G @ v)) / scale
        chord = _chord(n)
        if chord is None:
            continue
        (x1, y1), (x2, y2) = chord
        width = 2.0 if r.depth == 0 else 0.6
        lines.append(
            f'<line x1="{x1:.5f}" y1="{y1:.5f}" x2="{x2:.5f}" y2="{y2:.5f}" '
            f'stroke="black" stroke-width="{width / size * 2:.5f}"/>'
        )
    half = size / 2
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="-1.02 -1.02 2.04 2.04">\n'
        f"<title>walls of type ({ct}) up to depth {depth}</title>\n"
        f'<circle cx="0" cy="0" r="1" fill="none" stroke="gray" stroke-width="{2 / half:.5f}"/>\n'
        + "\n".join(lines)
        + "\n</svg>\n"
    )
