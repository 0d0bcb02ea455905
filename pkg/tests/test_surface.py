from __future__ import annotations

import pytest

from mcgx import curves as cv
from mcgx.generators import catalog
from mcgx.surface import Signature, build_signature, puncture_loop
from mcgx.words import abelianize, is_cyclically_reduced


def closed_pairing(sig: Signature, x, y) -> int:
    """Algebraic intersection number of two homology vectors on the closed-surface block."""
    return sum(x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i] for i in range(sig.genus))


def test_build_signature():
    assert build_signature(0, 1).names == ("u1",)
    assert build_signature(0, 2).rank == 3
    assert build_signature(2, 2).rank == 7
    with pytest.raises(ValueError):
        build_signature(1, 0)
    with pytest.raises(ValueError):
        build_signature(-1, 1)


def test_puncture_loops():
    s = Signature(0, 2)
    assert puncture_loop(s, 1, 1).letters == (1,)
    assert puncture_loop(s, 2, 2).letters == (-3, -2, -1)
    t = Signature(1, 1)
    assert puncture_loop(t, 1, 2).letters == (-3, 2, 1, -2, -1)
    with pytest.raises(IndexError):
        puncture_loop(s, 3, 1)
    with pytest.raises(IndexError):
        puncture_loop(s, 1, 3)


@pytest.mark.parametrize("g,n", [(0, 1), (0, 3), (1, 1), (2, 2), (3, 1)])
def test_relator_and_loops_abelianize_to_zero(g, n):
    s = Signature(g, n)
    assert not any(s.abelianize(s.relator + s.last_loop))
    total = [0] * s.rank
    for j in range(1, s.punctures + 1):
        total = [a + b for a, b in zip(total, s.abelianize(s.u(j)))]
    assert not any(total)


@pytest.mark.parametrize("g,n", [(0, 2), (1, 1), (1, 2), (2, 1), (3, 2)])
def test_catalog_self_consistency(g, n):
    s = Signature(g, n)
    cat = catalog(s)
    for name, w in cat.items():
        assert w and is_cyclically_reduced(w), name
        assert abelianize(w, s.rank) == s.abelianize(w)
    for i in range(1, g + 1):
        beta = s.abelianize(cat[f"beta_{i}"])
        assert beta == [int(k == s.b(i) - 1) for k in range(s.rank)]
        assert not any(s.abelianize(cat[f"dT_{i}"]))
    ends = [x + y for x, y in zip(s.abelianize(s.u(1)), s.abelianize(s.u(2)))]
    assert s.abelianize(cat["dA_1"]) == ends


def test_intersection_pairing_of_catalog():
    s = Signature(2, 1)
    cat = {k: s.abelianize(v) for k, v in catalog(s).items()}
    assert abs(closed_pairing(s, cat["alpha_1"], cat["beta_1"])) == 1
    disjoint = [("alpha_1", "beta_2"), ("beta_1", "beta_2"), ("beta_1", "dT_1"), ("alpha_2", "dC_1"), ("beta_1", "dA_1")]
    for x, y in disjoint:
        assert closed_pairing(s, cat[x], cat[y]) == 0, (x, y)


def test_enclosing_curves_have_the_expected_homology():
    s = Signature(1, 2)
    w = cv.enclose(s, [cv.pt(2), cv.pt(3)])
    assert s.abelianize(w) == [0, 0, 0, 1, 1]
    # enclosing every feature but the last puncture is the inverse of the loop around it
    everything = cv.enclose(s, cv.features(s)[:-1])
    assert s.abelianize(everything) == [-x for x in s.abelianize(s.u(s.punctures))]
