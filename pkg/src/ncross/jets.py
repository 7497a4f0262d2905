"""Truncated jets of ring-valued curves.

A Jet stores raw derivative coefficients (f(0), f'(0), ..., f^(K)(0)),
not Taylor coefficients.  Products use the Leibniz rule in order
(left factor derivatives stay on the left) so everything works over
quaternions and matrix scalars."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Sequence

from .errors import DimensionMismatch, NotInvertible
from .scalars import Ring, Scalar

DEFAULT_ORDER = 6


class Jet:
    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Sequence[Scalar], ring: Ring | None = None):
        self.coeffs = tuple(coeffs)
        if not self.coeffs and ring is None:
            raise ValueError("empty jet needs an explicit ring")
        self.ring = ring if ring is not None else self.coeffs[0].ring

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Scalar:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __repr__(self):
        return f"Jet({list(self.coeffs)!r})"

    @classmethod
    def constant(cls, value: Scalar, order: int = DEFAULT_ORDER) -> "Jet":
        z = value.ring.zero
        return cls((value,) + (z,) * order)

    @classmethod
    def variable(cls, ring: Ring, order: int = DEFAULT_ORDER) -> "Jet":
        """The jet of s |-> s at s = 0."""
        coeffs = [ring.zero] * (order + 1)
        if order >= 1:
            coeffs[1] = ring.one
        return cls(coeffs, ring)

    def _match(self, other: "Jet") -> int:
        if len(self) != len(other):
            raise DimensionMismatch(
                f"jet orders differ: {self.order} vs {other.order}")
        return len(self)

    def __add__(self, other):
        if not isinstance(other, Jet):
            return NotImplemented
        self._match(other)
        return Jet([a + b for a, b in zip(self.coeffs, other.coeffs)], self.ring)

    def __sub__(self, other):
        if not isinstance(other, Jet):
            return NotImplemented
        self._match(other)
        return Jet([a - b for a, b in zip(self.coeffs, other.coeffs)], self.ring)

    def __neg__(self):
        return Jet([-a for a in self.coeffs], self.ring)

    def __mul__(self, other):
        if isinstance(other, Jet):
            n = self._match(other)
            out = []
            for m in range(n):
                acc = self.ring.zero
                for k in range(m + 1):
                    acc = acc + self.coeffs[k] * other.coeffs[m - k] * \
                        self.ring.from_real(math.comb(m, k))
                out.append(acc)
            return Jet(out, self.ring)
        if isinstance(other, Scalar):
            return Jet([a * other for a in self.coeffs], self.ring)
        if isinstance(other, (int, float, Fraction)):
            c = self.ring.from_real(other)
            return Jet([a * c for a in self.coeffs], self.ring)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Scalar):
            return Jet([other * a for a in self.coeffs], self.ring)
        if isinstance(other, (int, float, Fraction)):
            c = self.ring.from_real(other)
            return Jet([c * a for a in self.coeffs], self.ring)
        return NotImplemented

    def inv(self) -> "Jet":
        """Jet of s |-> f(s)^-1, by the Leibniz recursion
        (f^-1)^(n) = -f(0)^-1 sum_{k=1..n} C(n,k) f^(k) (f^-1)^(n-k)."""
        try:
            g0 = self.coeffs[0].inv()
        except NotInvertible as e:
            raise NotInvertible(f"jet value not invertible: {e}") from e
        out = [g0]
        for n in range(1, len(self)):
            acc = self.ring.zero
            for k in range(1, n + 1):
                acc = acc + self.coeffs[k] * out[n - k] * \
                    self.ring.from_real(math.comb(n, k))
            out.append(-(g0 * acc))
        return Jet(out, self.ring)

    def derivative(self) -> "Jet":
        """Shift: the jet of f', one order lower."""
        if self.order < 1:
            raise DimensionMismatch("cannot differentiate an order-0 jet")
        return Jet(self.coeffs[1:], self.ring)

    def truncate(self, order: int) -> "Jet":
        if order > self.order:
            raise DimensionMismatch("cannot extend a jet by truncation")
        return Jet(self.coeffs[: order + 1], self.ring)

    def eval(self, s: float) -> Scalar:
        """Taylor evaluation sum_k f^(k)(0) s^k / k!."""
        exact = isinstance(s, (int, Fraction))
        acc = self.ring.zero
        for k, c in enumerate(self.coeffs):
            w = (Fraction(s) ** k / math.factorial(k) if exact
                 else s ** k / math.factorial(k))
            acc = acc + c * self.ring.from_real(w)
        return acc


def jet_from_function(derivs: Callable[[int], float], ring: Ring,
                      order: int = DEFAULT_ORDER) -> Jet:
    """Build a jet from a rule n -> n-th derivative at 0 (a real number)."""
    return Jet([ring.from_real(derivs(n)) for n in range(order + 1)], ring)


def sin_jet(ring: Ring, order: int = DEFAULT_ORDER) -> Jet:
    cyc = (0.0, 1.0, 0.0, -1.0)
    return jet_from_function(lambda n: cyc[n % 4], ring, order)


def cos_jet(ring: Ring, order: int = DEFAULT_ORDER) -> Jet:
    cyc = (1.0, 0.0, -1.0, 0.0)
    return jet_from_function(lambda n: cyc[n % 4], ring, order)


def tan_jet(ring: Ring, order: int = DEFAULT_ORDER) -> Jet:
    # tan = sin * cos^-1; derivatives at 0: 0, 1, 0, 2, 0, 16, 0, ...
    return sin_jet(ring, order) * cos_jet(ring, order).inv()


def exp_jet(value: Scalar, order: int = DEFAULT_ORDER) -> Jet:
    """Jet of s |-> exp(a s) at 0 when a commutes with itself: coefficients
    a^n."""
    coeffs = [value.ring.one]
    for _ in range(order):
        coeffs.append(coeffs[-1] * value)
    return Jet(coeffs, value.ring)


def moebius_jet(a: Scalar, b: Scalar, c: Scalar, d: Scalar, z: Jet) -> Jet:
    """(a z + b)(c z + d)^-1 applied jet-wise."""
    ring = z.ring
    az = Jet([a * w for w in z.coeffs], ring) + Jet.constant(b, z.order)
    cz = Jet([c * w for w in z.coeffs], ring) + Jet.constant(d, z.order)
    return az * cz.inv()
