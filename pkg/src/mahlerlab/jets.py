"""Second-order jets: scalars carrying exact first and second derivatives.

A Jet2 is a truncated Taylor value (f, f', f'') propagated through +, -, *, /,
sqrt and powers by the chain rule, so derivatives come out to machine
precision without symbolic differentiation.  `sqrt` dispatches on the
argument type, letting the same closure run on plain floats (value-only) and
on jets.
"""

from __future__ import annotations

import math

from .errors import DomainError


class Jet2:
    __slots__ = ("value", "d1", "d2")

    def __init__(self, value: float, d1: float = 0.0, d2: float = 0.0):
        self.value = value
        self.d1 = d1
        self.d2 = d2

    @staticmethod
    def seed(x: float) -> "Jet2":
        """The identity function's jet at x: (x, 1, 0)."""
        return Jet2(float(x), 1.0, 0.0)

    def __repr__(self) -> str:
        return f"Jet2({self.value!r}, {self.d1!r}, {self.d2!r})"

    def _lift(other):
        if isinstance(other, Jet2):
            return other
        if isinstance(other, (int, float)):
            return Jet2(float(other))
        return None

    def __add__(self, other):
        o = Jet2._lift(other)
        if o is None:
            return NotImplemented
        return Jet2(self.value + o.value, self.d1 + o.d1, self.d2 + o.d2)

    __radd__ = __add__

    def __neg__(self):
        return Jet2(-self.value, -self.d1, -self.d2)

    def __sub__(self, other):
        o = Jet2._lift(other)
        if o is None:
            return NotImplemented
        return Jet2(self.value - o.value, self.d1 - o.d1, self.d2 - o.d2)

    def __rsub__(self, other):
        o = Jet2._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = Jet2._lift(other)
        if o is None:
            return NotImplemented
        return Jet2(
            self.value * o.value,
            self.d1 * o.value + self.value * o.d1,
            self.d2 * o.value + 2.0 * self.d1 * o.d1 + self.value * o.d2,
        )

    __rmul__ = __mul__

    def _inv(self) -> "Jet2":
        if self.value == 0.0:
            raise ZeroDivisionError("Jet2: division by a jet with zero value")
        iv = 1.0 / self.value
        return Jet2(
            iv,
            -self.d1 * iv * iv,
            (2.0 * self.d1 * self.d1 * iv - self.d2) * iv * iv,
        )

    def __truediv__(self, other):
        o = Jet2._lift(other)
        if o is None:
            return NotImplemented
        return self * o._inv()

    def __rtruediv__(self, other):
        o = Jet2._lift(other)
        if o is None:
            return NotImplemented
        return o * self._inv()

    def __pow__(self, n):
        if isinstance(n, int) or (isinstance(n, float) and n.is_integer()):
            n = int(n)
            if n == 0:
                return Jet2(1.0)
            if n < 0:
                return (self ** (-n))._inv()
            out = self
            for _ in range(n - 1):
                out = out * self
            return out
        if self.value <= 0.0:
            raise DomainError(
                f"Jet2: non-integer power of non-positive value {self.value}"
            )
        v = self.value ** n
        return Jet2(
            v,
            n * self.value ** (n - 1.0) * self.d1,
            n * (n - 1.0) * self.value ** (n - 2.0) * self.d1 * self.d1
            + n * self.value ** (n - 1.0) * self.d2,
        )


def sqrt(u):
    """Square root for floats and jets (jets need value > 0)."""
    if isinstance(u, Jet2):
        if u.value <= 0.0:
            raise DomainError(f"Jet2 sqrt: requires value > 0, got {u.value}")
        s = math.sqrt(u.value)
        d1 = u.d1 / (2.0 * s)
        return Jet2(s, d1, (u.d2 - 2.0 * d1 * d1) / (2.0 * s))
    return math.sqrt(u)
