"""Rank-2 bundles given as extensions of twisted line bundles.

A bundle is modelled by its numerical shadow

    0 -> O(sub) -> E -> O(quotient) (x) I_Y -> 0

where only the length ``deg_y`` of the codimension-2 locus ``Y`` is kept.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .cohomology import ext1_dim
from .errors import AmbiguousInvariants, InconsistencyError, InvalidBundle, UnsupportedFiberType
from .picard import DivisorClass, Surface, intersect


class Splitting(enum.Enum):
    NON_SPLIT = "non-split"
    SPLIT = "split"


@dataclass(frozen=True)
class ExtensionBundle:
    surface: Surface
    sub: DivisorClass
    quotient: DivisorClass
    deg_y: int = 0
    splitting: Splitting = Splitting.NON_SPLIT

    def __post_init__(self) -> None:
        if self.deg_y < 0:
            raise InvalidBundle(f"deg Y must be non-negative, got {self.deg_y}")
        if (
            self.splitting is Splitting.NON_SPLIT
            and self.deg_y == 0
            and ext1_dim(self.surface, self.quotient, self.sub) == 0
        ):
            raise InvalidBundle(
                f"Ext^1(O{self.quotient}, O{self.sub}) = 0 on {self.surface}: "
                "no non-split extension exists"
            )

    @property
    def is_split(self) -> bool:
        return self.splitting is Splitting.SPLIT


@dataclass(frozen=True)
class ChernData:
    c1: DivisorClass
    c2: int

    @property
    def alpha(self) -> int:
        return self.c1.a

    @property
    def beta(self) -> int:
        return self.c1.b


@dataclass(frozen=True)
class CanonicalInvariants:
    d: int
    d_prime: int
    r: int
    s: int
    deg_y: int


def chern_from_extension(bundle: ExtensionBundle) -> ChernData:
    """Whitney formula: ``c1 = sub + quotient``, ``c2 = sub.quotient + deg Y``."""
    return ChernData(
        c1=bundle.sub + bundle.quotient,
        c2=intersect(bundle.surface, bundle.sub, bundle.quotient) + bundle.deg_y,
    )


def deg_y_from_invariants(c2: int, alpha: int, beta: int, d: int, r: int, s: Surface) -> int:
    """Length of Y recovered from the Chern classes and the invariants (d, r).

    A negative result means the inputs are inconsistent; it is returned as is.
    """
    e = s.e
    return c2 + alpha * (d * e - r) - beta * d + 2 * d * r - d * d * e


def generic_splitting_type(bundle: ExtensionBundle) -> tuple[int, int]:
    """Splitting type ``(d, d')`` of E on a general fibre, ``d >= d'``.

    On a fibre the extension reads ``0 -> O(sub.a) -> E|f -> O(quot.a) -> 0``,
    which splits as soon as ``H^1(O(sub.a - quot.a))`` vanishes on P^1.
    """
    p, q = bundle.sub.a, bundle.quotient.a
    if p < q - 1:
        raise UnsupportedFiberType(
            f"fibre degrees {p} < {q} - 1: the restriction to a fibre need not split as O({p})+O({q})"
        )
    return max(p, q), min(p, q)


def require_canonical_presentation(sub: DivisorClass, quotient: DivisorClass) -> None:
    if sub.a == quotient.a:
        raise AmbiguousInvariants(
            f"sub and quotient have equal fibre degree {sub.a}; r depends on the extension class"
        )
    if sub.a < quotient.a:
        raise UnsupportedFiberType(
            f"sub fibre degree {sub.a} < quotient fibre degree {quotient.a}; "
            "re-present the extension with the larger fibre degree as sub-bundle"
        )


def canonical_invariants(bundle: ExtensionBundle) -> CanonicalInvariants:
    """Read off ``(d, d', r, s, deg Y)`` from a presentation with ``sub.a > quotient.a``.

    Twisting by ``-d*C0 - m*f0`` leaves the quotient with negative C0-degree,
    so it has no sections, and ``H^0(E(-d*C0 - m*f0)) = H^0(O((r - m)*f0))``,
    which is non-zero exactly when ``m <= r``.  Hence the sub-bundle is already
    the maximal one and its coefficients are the invariants.
    """
    require_canonical_presentation(bundle.sub, bundle.quotient)
    inv = CanonicalInvariants(
        d=bundle.sub.a,
        d_prime=bundle.quotient.a,
        r=bundle.sub.b,
        s=bundle.quotient.b,
        deg_y=bundle.deg_y,
    )
    chern = chern_from_extension(bundle)
    recovered = deg_y_from_invariants(chern.c2, chern.alpha, chern.beta, inv.d, inv.r, bundle.surface)
    if recovered != bundle.deg_y:
        raise InconsistencyError(f"deg Y formula gives {recovered}, bundle carries {bundle.deg_y}")
    return inv
