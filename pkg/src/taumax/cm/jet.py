"""Truncated Taylor series ("jets") with the usual composition rules.

A jet of order K at center c stores c_0..c_K with f(c + h) ~ sum c_k h^k,
so the k-th derivative is k! c_k.  Arithmetic between two jets requires a
common center and order; plain numbers are promoted to constant jets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Real

from ..errors import JetError

__all__ = ["TaylorJet", "add", "sub", "mul", "div", "exp", "log", "pow_const"]


@dataclass(frozen=True)
class TaylorJet:
    center: float
    coeffs: tuple[float, ...]

    def __post_init__(self):
        coeffs = tuple(float(c) for c in self.coeffs)
        if len(coeffs) < 1:
            raise JetError("a jet needs at least the constant coefficient")
        if not all(math.isfinite(c) for c in coeffs):
            raise JetError(f"non-finite jet coefficient in {coeffs}")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "center", float(self.center))

    @classmethod
    def variable(cls, center: float, order: int) -> "TaylorJet":
        """The identity function h -> center + h."""
        return cls(center, (center, 1.0) + (0.0,) * (order - 1))

    @classmethod
    def constant(cls, value: float, center: float, order: int) -> "TaylorJet":
        return cls(center, (value,) + (0.0,) * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def derivative(self, k: int) -> float:
        return math.factorial(k) * self.coeffs[k]

    def derivatives(self) -> list[float]:
        return [self.derivative(k) for k in range(len(self.coeffs))]

    def _like(self, coeffs) -> "TaylorJet":
        return TaylorJet(self.center, tuple(coeffs))

    def _coerce(self, other) -> "TaylorJet":
        if isinstance(other, TaylorJet):
            if other.order != self.order:
                raise JetError(f"order mismatch: {self.order} vs {other.order}")
            if other.center != self.center:
                raise JetError(f"center mismatch: {self.center} vs {other.center}")
            return other
        if isinstance(other, Real):
            return TaylorJet.constant(float(other), self.center, self.order)
        return NotImplemented

    def __add__(self, other):
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, other)

    def __rsub__(self, other):
        return sub(self._coerce(other), self)

    def __mul__(self, other):
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return div(self, other)

    def __rtruediv__(self, other):
        return div(self._coerce(other), self)

    def __neg__(self):
        return self._like(-c for c in self.coeffs)

    def __pow__(self, p):
        return pow_const(self, p)


def _pair(a, b):
    if isinstance(a, TaylorJet):
        b2 = a._coerce(b)
        if b2 is NotImplemented:
            raise JetError(f"cannot combine a jet with {type(b).__name__}")
        return a, b2
    if isinstance(b, TaylorJet):
        return _pair(b, a)[::-1]
    raise JetError("at least one operand must be a TaylorJet")


def add(a, b) -> TaylorJet:
    a, b = _pair(a, b)
    return a._like(x + y for x, y in zip(a.coeffs, b.coeffs))


def sub(a, b) -> TaylorJet:
    a, b = _pair(a, b)
    return a._like(x - y for x, y in zip(a.coeffs, b.coeffs))


def mul(a, b) -> TaylorJet:
    a, b = _pair(a, b)
    p, q = a.coeffs, b.coeffs
    n = len(p)
    return a._like(sum(p[j] * q[k - j] for j in range(k + 1)) for k in range(n))


def div(a, b) -> TaylorJet:
    a, b = _pair(a, b)
    p, q = a.coeffs, b.coeffs
    if q[0] == 0.0:
        raise JetError("division by a jet with zero constant term")
    out = []
    for k in range(len(p)):
        s = p[k] - sum(q[j] * out[k - j] for j in range(1, k + 1))
        out.append(s / q[0])
    return a._like(out)


def exp(a: TaylorJet) -> TaylorJet:
    p = a.coeffs
    out = [math.exp(p[0])]
    for k in range(1, len(p)):
        out.append(sum(j * p[j] * out[k - j] for j in range(1, k + 1)) / k)
    return a._like(out)


def log(a: TaylorJet) -> TaylorJet:
    p = a.coeffs
    if not p[0] > 0.0:
        raise JetError(f"log of a jet with constant term {p[0]!r} <= 0")
    out = [math.log(p[0])]
    for k in range(1, len(p)):
        s = sum(j * out[j] * p[k - j] for j in range(1, k))
        out.append((p[k] - s / k) / p[0])
    return a._like(out)


def pow_const(a: TaylorJet, power: float) -> TaylorJet:
    """a**power for a real exponent; needs a positive constant term."""
    p = a.coeffs
    power = float(power)
    if not p[0] > 0.0:
        raise JetError(f"pow_const needs a positive constant term, got {p[0]!r}")
    out = [p[0] ** power]
    for k in range(1, len(p)):
        s = sum(((power + 1.0) * j - k) * p[j] * out[k - j] for j in range(1, k + 1))
        out.append(s / (k * p[0]))
    return a._like(out)
