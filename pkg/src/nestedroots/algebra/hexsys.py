"""The hexagonal system of type (1/K) over a commutative field K.

N(v) = v^3, v^# = v^2, T(u, v) = 3uv and the cross product u x v = 2uv.
"""

from __future__ import annotations

__all__ = ["HexagonalSystem1K"]


class HexagonalSystem1K:
    def __init__(self, K):
        self.K = K

    def __repr__(self):
        return f"HexagonalSystem1K({self.K!r})"

    def N(self, v):
        K = self.K
        return K.mul(v, K.mul(v, v))

    def sharp(self, v):
        return self.K.mul(v, v)

    def T(self, u, v):
        K = self.K
        return K.mul(K(3), K.mul(u, v))

    def cross(self, u, v):
        K = self.K
        return K.mul(K(2), K.mul(u, v))
