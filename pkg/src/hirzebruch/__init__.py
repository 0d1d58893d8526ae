"""Exact intersection theory, line-bundle cohomology and slope stability
for rank-2 vector bundles on Hirzebruch surfaces."""

from .bundles import (
    CanonicalInvariants,
    ChernData,
    ExtensionBundle,
    Splitting,
    canonical_invariants,
    chern_from_extension,
    deg_y_from_invariants,
    generic_splitting_type,
)
from .classification import ClassifiedCase, StabilityReport, analyze, classify_stable, ishihara_table
from .cohomology import CohomologyTable, cohomology_table, euler_char, ext1_dim, h0, h1, h2
from .errors import (
    AmbiguousInvariants,
    EmptyChamber,
    HirzebruchError,
    InvalidBundle,
    NotAmple,
    UnsupportedBundle,
    UnsupportedFiberType,
)
from .picard import C0, F0, DivisorClass, Surface, canonical_divisor, intersect, is_ample, is_effective
from .stability import (
    ChamberRegion,
    Outcome,
    StabilityVerdict,
    Wall,
    brute_force_stability,
    is_in_chamber,
    slope,
    stable_chamber,
    stable_for_some_polarization,
    wall,
)

__version__ = "0.1.0"
