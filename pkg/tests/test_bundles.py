import itertools

import pytest

from hirzebruch.bundles import (
    ExtensionBundle,
    Splitting,
    canonical_invariants,
    chern_from_extension,
    deg_y_from_invariants,
    generic_splitting_type,
)
from hirzebruch.cohomology import ext1_dim
from hirzebruch.errors import AmbiguousInvariants, InvalidBundle, UnsupportedFiberType
from hirzebruch.picard import DivisorClass, Surface


def bundle(e, sub, quot, deg_y=0, splitting=Splitting.NON_SPLIT):
    return ExtensionBundle(Surface(e), DivisorClass(*sub), DivisorClass(*quot), deg_y, splitting)


PAPER_CASES = [
    # e, sub, quot, (c1, c2), (d, d', r, s)
    (1, (2, 2), (1, 3), ((3, 5), 6), (2, 1, 2, 3)),
    (0, (2, 0), (1, 3), ((3, 3), 6), (2, 1, 0, 3)),
    (1, (2, 1), (1, 4), ((3, 5), 7), (2, 1, 1, 4)),
    (2, (2, 4), (1, 4), ((3, 8), 8), (2, 1, 4, 4)),
]


@pytest.mark.parametrize("e, sub, quot, chern, _", PAPER_CASES)
def test_chern_from_extension(e, sub, quot, chern, _):
    ch = chern_from_extension(bundle(e, sub, quot))
    assert (tuple(ch.c1), ch.c2) == chern


def test_chern_of_trivial_extension():
    ch = chern_from_extension(bundle(0, (0, 0), (0, 0), splitting=Splitting.SPLIT))
    assert ch.c1 == DivisorClass(0, 0) and ch.c2 == 0


def test_deg_y_contributes_to_c2():
    assert chern_from_extension(bundle(1, (2, 2), (1, 3), deg_y=3)).c2 == 9


@pytest.mark.parametrize(
    "c2, alpha, beta, d, r, e",
    [(6, 3, 5, 2, 2, 1), (8, 3, 8, 2, 4, 2), (0, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 5)],
)
def test_deg_y_formula_vanishes(c2, alpha, beta, d, r, e):
    assert deg_y_from_invariants(c2, alpha, beta, d, r, Surface(e)) == 0


def test_deg_y_formula_negative_is_returned():
    assert deg_y_from_invariants(5, 3, 5, 2, 2, Surface(1)) == -1


@pytest.mark.parametrize("e, sub, quot, _, expected", PAPER_CASES)
def test_canonical_invariants(e, sub, quot, _, expected):
    inv = canonical_invariants(bundle(e, sub, quot))
    assert (inv.d, inv.d_prime, inv.r, inv.s, inv.deg_y) == (*expected, 0)
    assert generic_splitting_type(bundle(e, sub, quot)) == expected[:2]


def test_splitting_type_equal_fibre_degrees():
    b = bundle(0, (3, 0), (3, 7), splitting=Splitting.SPLIT)
    assert generic_splitting_type(b) == (3, 3)


def test_splitting_type_rejects_far_apart_degrees():
    with pytest.raises(UnsupportedFiberType):
        generic_splitting_type(bundle(0, (0, 0), (2, 0), deg_y=1))


def test_splitting_type_swap_invariant():
    for p, q in itertools.product(range(-3, 4), repeat=2):
        if p >= q - 1 and q >= p - 1:
            one = bundle(1, (p, 0), (q, 1), deg_y=1)
            two = bundle(1, (q, 1), (p, 0), deg_y=1)
            assert generic_splitting_type(one) == generic_splitting_type(two)


def test_invariants_errors():
    with pytest.raises(AmbiguousInvariants):
        canonical_invariants(bundle(0, (1, 0), (1, 0), splitting=Splitting.SPLIT))
    with pytest.raises(UnsupportedFiberType):
        canonical_invariants(bundle(0, (1, 0), (2, 0), deg_y=1))


def test_bundle_invariants_enforced():
    with pytest.raises(InvalidBundle):
        bundle(1, (2, 2), (1, 3), deg_y=-1)
    # Ext^1(O, O) = 0: nothing non-split to speak of
    with pytest.raises(InvalidBundle):
        bundle(0, (1, 0), (1, 0))
    # a split presentation with vanishing Ext^1 is a legal decomposable bundle
    assert bundle(0, (1, 0), (1, 0), splitting=Splitting.SPLIT).is_split


def _sweep():
    coeffs = range(-3, 6)
    for e in range(4):
        s = Surface(e)
        for sa, sb, qa, qb in itertools.product(coeffs, repeat=4):
            if sa <= qa:
                continue
            sub, quot = DivisorClass(sa, sb), DivisorClass(qa, qb)
            has_ext = ext1_dim(s, quot, sub) > 0
            for deg_y in range(5):
                split = Splitting.NON_SPLIT if has_ext or deg_y else Splitting.SPLIT
                yield ExtensionBundle(s, sub, quot, deg_y, split)


def test_whitney_consistency_exhaustive():
    n = 0
    for b in _sweep():
        ch = chern_from_extension(b)
        inv = canonical_invariants(b)
        assert inv.d + inv.d_prime == ch.alpha
        assert inv.r + inv.s == ch.beta
        assert inv.d >= inv.d_prime
        assert deg_y_from_invariants(ch.c2, ch.alpha, ch.beta, inv.d, inv.r, b.surface) == b.deg_y
        n += 1
    assert n > 50_000
