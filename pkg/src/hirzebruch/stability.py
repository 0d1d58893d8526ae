"""Slope stability of rank-2 extensions with respect to a polarization H.

Two independent routes are provided.  The chamber route builds the wall
``zeta = 2G - c1`` of the sub-bundle ``O(G)`` and declares E stable for every
ample H with ``H.zeta < 0``.  The brute-force route compares the degrees of
sub-line-bundles of E against ``mu_H(E)`` directly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .bundles import CanonicalInvariants, ExtensionBundle, Splitting, chern_from_extension
from .errors import CornerArgumentError, EmptyChamber, NotAmple, UnsupportedBundle
from .picard import C0, F0, DivisorClass, Surface, intersect, is_ample

#: bound of the diagnostic search for an ample point inside a chamber
CHAMBER_SEARCH_BOUND = 1000
DEFAULT_SWEEP_WINDOW = 10


def slope(s: Surface, h: DivisorClass, c1: DivisorClass, rank: int) -> Fraction:
    if not is_ample(s, h):
        raise NotAmple(f"H={h} is not ample on {s}")
    if rank <= 0:
        raise ValueError(f"rank must be positive, got {rank}")
    return Fraction(intersect(s, c1, h), rank)


def stable_for_some_polarization(inv: CanonicalInvariants, beta: int, splitting: Splitting) -> bool:
    """E is H-stable for some ample H iff ``2r < beta`` and (★) does not split."""
    if inv.r + inv.s != beta:
        raise ValueError(f"r + s = {inv.r + inv.s} does not match beta = {beta}")
    return 2 * inv.r < beta and splitting is Splitting.NON_SPLIT


@dataclass(frozen=True)
class Wall:
    zeta: DivisorClass
    sub: DivisorClass
    c1: DivisorClass


def wall(g: DivisorClass, c1: DivisorClass) -> Wall:
    return Wall(zeta=2 * g - c1, sub=g, c1=c1)


def _coefficient(k: Fraction) -> str:
    """Render ``k*a``: 1 -> 'a', 2 -> '2a', 3/2 -> '3a/2'."""
    if k == 0:
        return "0"
    sign = "-" if k < 0 else ""
    k = abs(k)
    head = "" if k.numerator == 1 else str(k.numerator)
    tail = "" if k.denominator == 1 else f"/{k.denominator}"
    return f"{sign}{head}a{tail}"


def _render(u: int, v: int, e: int) -> str:
    floor = _coefficient(Fraction(e))
    if v > 0:
        return f"{floor} < b < {_coefficient(Fraction(-u, v))}"
    if v < 0:
        k = Fraction(u, -v)
        return f"b > {_coefficient(max(k, Fraction(e)))}"
    if u < 0:
        return f"b > {floor}"
    return "empty"


@dataclass(frozen=True)
class ChamberRegion:
    """Ample classes ``H = (a, b)`` with ``u*a + v*b < 0``."""

    u: int
    v: int
    surface: Surface
    human_readable: str

    def __contains__(self, h: DivisorClass) -> bool:
        return is_in_chamber(self, h)

    def __str__(self) -> str:
        return self.human_readable


def _first_point(u: int, v: int, e: int, bound: int) -> DivisorClass | None:
    for a in range(1, bound + 1):
        lo, hi = max(1, a * e + 1), bound
        # integer b in [lo, hi] with v*b < -u*a
        if v > 0:
            hi = min(hi, (-u * a - 1) // v)
        elif v < 0:
            lo = max(lo, (u * a) // (-v) + 1)
        elif u * a >= 0:
            continue
        if lo <= hi:
            return DivisorClass(a, lo)
    return None


def stable_chamber(s: Surface, w: Wall) -> ChamberRegion:
    """The region ``H.zeta < 0`` inside the ample cone.

    ``H.zeta = a*(z2 - e*z1) + b*z1`` for ``H = (a, b)``, ``zeta = (z1, z2)``.
    Emptiness is only diagnosed by searching ``1 <= a, b <= 1000``.
    """
    z1, z2 = w.zeta
    u, v = z2 - s.e * z1, z1
    if _first_point(u, v, s.e, CHAMBER_SEARCH_BOUND) is None:
        raise EmptyChamber(
            f"no ample H with 1 <= a,b <= {CHAMBER_SEARCH_BOUND} satisfies H.zeta < 0 for zeta={w.zeta} on {s}"
        )
    return ChamberRegion(u=u, v=v, surface=s, human_readable=_render(u, v, s.e))


def is_in_chamber(region: ChamberRegion, h: DivisorClass) -> bool:
    return region.u * h.a + region.v * h.b < 0 and is_ample(region.surface, h)


class Outcome(enum.Enum):
    STABLE = "Stable"
    DESTABILIZED = "Destabilized"


@dataclass(frozen=True)
class StabilityVerdict:
    outcome: Outcome
    witness: DivisorClass | None
    mu: Fraction
    # (D, D.H) for each corner candidate, in the order sub, quotient-C0, quotient-f0
    candidates: tuple[tuple[DivisorClass, int], ...] = ()

    def __post_init__(self) -> None:
        if (self.outcome is Outcome.DESTABILIZED) != (self.witness is not None):
            raise ValueError("a witness is present exactly when the bundle is destabilized")

    @property
    def is_stable(self) -> bool:
        return self.outcome is Outcome.STABLE


def corner_candidates(bundle: ExtensionBundle) -> tuple[DivisorClass, ...]:
    """Maximal sub-line-bundle classes of a non-split extension.

    ``O(D) -> E`` either factors through ``O(sub)`` (``sub - D`` effective) or
    maps non-trivially to the quotient (``quotient - D`` effective) with
    ``D != quotient`` since the extension does not split.  For ample H both
    families have their maximal degree at these corners.
    """
    q = bundle.quotient
    return (bundle.sub, q - C0, q - F0)


def _check_supported(bundle: ExtensionBundle, h: DivisorClass) -> None:
    if not is_ample(bundle.surface, h):
        raise NotAmple(f"H={h} is not ample on {bundle.surface}")
    if bundle.deg_y != 0:
        raise UnsupportedBundle(f"deg Y = {bundle.deg_y}; only Y = empty is supported")
    if bundle.is_split:
        raise UnsupportedBundle("split extensions are decomposable and never stable")
    if bundle.sub.a <= bundle.quotient.a:
        raise UnsupportedBundle(
            f"need sub fibre degree > quotient fibre degree, got {bundle.sub.a} <= {bundle.quotient.a}"
        )


def sweep_sub_line_bundles(
    bundle: ExtensionBundle, h: DivisorClass, window: int = DEFAULT_SWEEP_WINDOW
) -> tuple[DivisorClass, int]:
    """Exhaustive maximum of ``D.H`` over both families, ``window`` steps below each corner.

    Returns the first maximizer in a fixed scan order, so the result does not
    depend on anything but the inputs.
    """
    s = bundle.surface
    best: tuple[DivisorClass, int] | None = None
    for top, skip_top in ((bundle.sub, False), (bundle.quotient, True)):
        for i in range(window + 1):
            for j in range(window + 1):
                if skip_top and i == j == 0:
                    continue
                d = top - DivisorClass(i, j)
                deg = intersect(s, d, h)
                if best is None or deg > best[1]:
                    best = (d, deg)
    assert best is not None
    return best


def brute_force_stability(
    bundle: ExtensionBundle,
    h: DivisorClass,
    *,
    exhaustive: bool = False,
    window: int = DEFAULT_SWEEP_WINDOW,
) -> StabilityVerdict:
    """Decide H-stability by comparing ``2*D.H`` with ``c1.H`` for the corner candidates.

    With ``exhaustive=True`` the corner maximum is also checked against a full
    sweep of ``window`` steps below each corner; a larger degree found there
    raises :class:`CornerArgumentError`.
    """
    _check_supported(bundle, h)
    s = bundle.surface
    c1 = chern_from_extension(bundle).c1
    total = intersect(s, c1, h)
    candidates = tuple((d, intersect(s, d, h)) for d in corner_candidates(bundle))

    witness, top = candidates[0]
    for d, deg in candidates[1:]:
        if deg > top:
            witness, top = d, deg

    if exhaustive:
        swept, swept_top = sweep_sub_line_bundles(bundle, h, window)
        if swept_top > top:
            raise CornerArgumentError(
                f"sweep found D={swept} with D.H={swept_top} above the corner maximum {top}"
            )

    mu = Fraction(total, 2)
    if 2 * top < total:
        return StabilityVerdict(Outcome.STABLE, None, mu, candidates)
    return StabilityVerdict(Outcome.DESTABILIZED, witness, mu, candidates)
