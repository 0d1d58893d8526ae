"""Cohomology of line bundles on F_e via pushforward to P^1.

For ``a >= 0`` the pushforward of ``O(a*C0 + b*f0)`` along the ruling splits as
``O(b) + O(b - e) + ... + O(b - a*e)`` and the higher direct image vanishes, so
h^0 and h^1 are sums of the corresponding numbers on P^1.  For ``a = -1`` both
direct images vanish.  Everything else is reached through Serre duality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InconsistencyError
from .picard import DivisorClass, Surface, canonical_divisor, intersect


@dataclass(frozen=True)
class CohomologyTable:
    h0: int
    h1: int
    h2: int

    @property
    def euler(self) -> int:
        return self.h0 - self.h1 + self.h2


def _pushforward_degrees(s: Surface, d: DivisorClass) -> list[int]:
    # degrees b, b-e, ..., b-a*e of the summands on P^1; only valid for a >= 0
    return [d.b - k * s.e for k in range(d.a + 1)]


def h0(s: Surface, d: DivisorClass) -> int:
    if d.a < 0:
        return 0
    return sum(max(0, n + 1) for n in _pushforward_degrees(s, d))


def h1(s: Surface, d: DivisorClass) -> int:
    if d.a == -1:
        return 0
    if d.a <= -2:
        return h1(s, canonical_divisor(s) - d)
    return sum(max(0, -n - 1) for n in _pushforward_degrees(s, d))


def h2(s: Surface, d: DivisorClass) -> int:
    return h0(s, canonical_divisor(s) - d)


def cohomology_table(s: Surface, d: DivisorClass) -> CohomologyTable:
    return CohomologyTable(h0(s, d), h1(s, d), h2(s, d))


def euler_char(s: Surface, d: DivisorClass) -> int:
    """Riemann-Roch: ``chi(O(D)) = 1 + D.(D - K)/2``."""
    twice = intersect(s, d, d - canonical_divisor(s))
    if twice % 2:
        raise InconsistencyError(f"D.(D-K) = {twice} is odd for D={d} on {s}")
    return 1 + twice // 2


def ext1_dim(s: Surface, quotient: DivisorClass, sub: DivisorClass) -> int:
    """Dimension of ``Ext^1(O(quotient), O(sub)) = H^1(O(sub - quotient))``."""
    return h1(s, sub - quotient)
