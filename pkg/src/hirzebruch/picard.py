"""Picard lattice of the Hirzebruch surface F_e.

Divisor classes are written ``a*C0 + b*f0`` where ``C0`` is the negative
section (``C0^2 = -e``) and ``f0`` a fibre of the ruling.  Python integers are
unbounded, so none of the arithmetic below can overflow.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Surface:
    e: int

    def __post_init__(self) -> None:
        if not isinstance(self.e, int) or self.e < 0:
            raise ValueError(f"Hirzebruch invariant must be a non-negative integer, got {self.e!r}")

    def __str__(self) -> str:
        return f"F_{self.e}"


@dataclass(frozen=True, order=True)
class DivisorClass:
    """The class ``a*C0 + b*f0``."""

    a: int
    b: int

    def __add__(self, other: DivisorClass) -> DivisorClass:
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return DivisorClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> DivisorClass:
        return DivisorClass(-self.a, -self.b)

    def __mul__(self, k: int) -> DivisorClass:
        if not isinstance(k, int):
            return NotImplemented
        return DivisorClass(k * self.a, k * self.b)

    __rmul__ = __mul__

    def __iter__(self):
        yield self.a
        yield self.b

    def __str__(self) -> str:
        return f"({self.a},{self.b})"

    @classmethod
    def parse(cls, text: str) -> DivisorClass:
        """Parse ``"a,b"`` (parentheses and spaces tolerated)."""
        parts = text.strip().strip("()").split(",")
        if len(parts) != 2:
            raise ValueError(f"expected a divisor as 'a,b', got {text!r}")
        return cls(int(parts[0]), int(parts[1]))


C0 = DivisorClass(1, 0)
F0 = DivisorClass(0, 1)
ZERO = DivisorClass(0, 0)


def intersect(s: Surface, d1: DivisorClass, d2: DivisorClass) -> int:
    return -s.e * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b


def is_ample(s: Surface, d: DivisorClass) -> bool:
    """Nakai criterion on F_e: ``a > 0`` and ``b > a*e``.

    Ample and very ample coincide on Hirzebruch surfaces, so this doubles as
    the very-ampleness test.
    """
    return d.a > 0 and d.b > d.a * s.e


is_very_ample = is_ample


def is_effective(d: DivisorClass) -> bool:
    return d.a >= 0 and d.b >= 0


def canonical_divisor(s: Surface) -> DivisorClass:
    return DivisorClass(-2, -(s.e + 2))
