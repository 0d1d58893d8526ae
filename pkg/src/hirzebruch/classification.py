"""Indecomposable ample rank-2 bundles with small c2, and their stability.

Ampleness is not recomputed here: the four non-split extensions with
``c2 <= e + 6`` are taken from Ishihara's classification as tabulated data.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bundles import (
    CanonicalInvariants,
    ChernData,
    ExtensionBundle,
    Splitting,
    canonical_invariants,
    chern_from_extension,
)
from .cohomology import ext1_dim
from .picard import DivisorClass, Surface
from .stability import ChamberRegion, stable_chamber, stable_for_some_polarization, wall


@dataclass(frozen=True)
class ClassifiedCase:
    label: str
    surface: Surface
    bundle: ExtensionBundle
    expected_c2: int

    def __post_init__(self) -> None:
        c2 = chern_from_extension(self.bundle).c2
        if c2 != self.expected_c2:
            raise ValueError(f"case {self.label}: c2 = {c2}, expected {self.expected_c2}")
        if self.expected_c2 < self.surface.e + 5:
            raise ValueError(f"case {self.label}: c2 = {c2} below the bound e + 5")


@dataclass(frozen=True)
class StabilityReport:
    label: str
    surface: Surface
    bundle: ExtensionBundle
    chern: ChernData
    invariants: CanonicalInvariants
    ext1: int
    stable_for_some_h: bool
    chamber: ChamberRegion | None

    def __post_init__(self) -> None:
        if self.stable_for_some_h != (self.chamber is not None):
            raise ValueError("a chamber is reported exactly for the stable cases")


def _case(label: str, e: int, sub: tuple[int, int], quot: tuple[int, int], c2: int) -> ClassifiedCase:
    surface = Surface(e)
    bundle = ExtensionBundle(surface, DivisorClass(*sub), DivisorClass(*quot), 0, Splitting.NON_SPLIT)
    return ClassifiedCase(label, surface, bundle, c2)


def ishihara_table() -> list[ClassifiedCase]:
    return [
        _case("A", 1, (2, 2), (1, 3), 6),
        _case("B", 0, (2, 0), (1, 3), 6),
        _case("C", 1, (2, 1), (1, 4), 7),
        _case("D", 2, (2, 4), (1, 4), 8),
    ]


def analyze(case: ClassifiedCase) -> StabilityReport:
    bundle = case.bundle
    chern = chern_from_extension(bundle)
    inv = canonical_invariants(bundle)
    stable = stable_for_some_polarization(inv, chern.beta, bundle.splitting)
    chamber = stable_chamber(case.surface, wall(bundle.sub, chern.c1)) if stable else None
    return StabilityReport(
        label=case.label,
        surface=case.surface,
        bundle=bundle,
        chern=chern,
        invariants=inv,
        ext1=ext1_dim(case.surface, bundle.quotient, bundle.sub),
        stable_for_some_h=stable,
        chamber=chamber,
    )


def in_main_theorem_range(c2: int, e: int) -> bool:
    """``c2 <= 6``, or ``c2 <= 7`` on a surface with ``e >= 1``."""
    return c2 <= 6 or (c2 <= 7 and e >= 1)


def classify_stable(c2_max: int, e_filter: int | None = None) -> list[StabilityReport]:
    reports = []
    for case in ishihara_table():
        if case.expected_c2 > c2_max or not in_main_theorem_range(case.expected_c2, case.surface.e):
            continue
        if e_filter is not None and case.surface.e != e_filter:
            continue
        report = analyze(case)
        if report.stable_for_some_h:
            reports.append(report)
    return reports
