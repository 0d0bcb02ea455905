from __future__ import annotations

import random

import pytest
from sympy import Matrix
from sympy.polys.domains import ZZ
from sympy.matrices.normalforms import invariant_factors

from conftest import determinantal_factors
from mcgx.generators import named
from mcgx.linktool import (
    Abelianization,
    abelianization,
    alexander_matrix,
    elementary_ideal,
    link_invariants,
    link_presentation,
    quotient_to_handlebody,
    smith_normal_form,
)
from mcgx.surface import Signature


def test_quotient_examples():
    s = Signature(1, 2)
    assert quotient_to_handlebody(s, (2,)) == ()
    assert quotient_to_handlebody(s, (1,)) == (1,)
    assert quotient_to_handlebody(s, s.relator + s.last_loop) == ()
    assert quotient_to_handlebody(s, (1,), "upper") == (4,)
    with pytest.raises(ValueError):
        quotient_to_handlebody(s, (1,), "middle")


def test_quotient_is_a_homomorphism():
    s = Signature(2, 2)
    rng = random.Random(3)
    for _ in range(100):
        u = tuple(rng.choice([1, -1]) * rng.randint(1, s.rank) for _ in range(rng.randint(0, 8)))
        v = tuple(rng.choice([1, -1]) * rng.randint(1, s.rank) for _ in range(rng.randint(0, 8)))
        from mcgx.words import mul

        assert quotient_to_handlebody(s, u + v) == mul(quotient_to_handlebody(s, u), quotient_to_handlebody(s, v))


def test_presentation_shape_and_export():
    s = Signature(2, 1)
    p = link_presentation(named(s, ""))
    assert len(p.relators) == s.rank
    assert p.generators == ("x1", "x2", "m1", "X1", "X2", "M1")
    assert p.export().startswith("gens: x1, x2, m1, X1, X2, M1\nrels: ")
    assert len(p.export_lines().splitlines()) == s.rank


def test_unknot_and_trivial_links():
    assert abelianization(link_presentation(named(Signature(0, 1), ""))) == Abelianization(1, ())
    p = link_presentation(named(Signature(0, 2), ""))
    assert abelianization(p) == Abelianization(2, ())
    assert len(p.components) == 2
    q = link_presentation(named(Signature(2, 1), ""))
    assert str(abelianization(q.ambient())) == "Z^2"


def test_hopf_and_trefoil_ideals():
    s = Signature(0, 2)
    hopf = link_invariants(named(s, "sigma_2^2"))
    assert hopf["components"] == 2
    # the augmentation ideal times the Alexander polynomial 1
    assert hopf["first_elementary_ideal"] == ("t1 - 1", "t2 - 1", "s1 - 1", "s2 - 1")
    trefoil = link_invariants(named(s, "sigma_2^3"))
    assert trefoil["components"] == 1
    assert trefoil["abelianization"] == "Z"
    # Alexander polynomial t^2 - t + 1, in the inverted variable
    assert trefoil["first_elementary_ideal"] == ("s1**2 - s1 + 1", "s1 + t1 - 1")


def test_unknot_ideal_is_trivial():
    p = link_presentation(named(Signature(0, 2), "sigma_2"))
    assert len(p.components) == 1
    assert elementary_ideal(p, 1) == ("1",)
    m, ts = alexander_matrix(p)
    assert m.shape == (len(p.relators), p.rank) and len(ts) == 1


def test_invariance_under_an_extending_factor():
    s = Signature(1, 1)
    phi = named(s, "twist:alpha_1 tau_1^2 twist:alpha_1")
    a = link_invariants(phi)
    b = link_invariants(phi @ named(s, "xi_1_1 omega_1"))
    assert a == b


def test_smith_normal_form_examples():
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]
    assert smith_normal_form([[0, 0], [0, 3]]) == [3, 0]
    assert smith_normal_form([[1, 2, 3]]) == [1]
    assert smith_normal_form([[0]]) == [0]


@pytest.mark.parametrize("seed", range(12))
def test_smith_normal_form_matches_oracles(seed):
    rng = random.Random(seed)
    rows, cols = rng.randint(1, 6), rng.randint(1, 6)
    m = [[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)]
    if seed % 3 == 0 and rows > 1:
        m[-1] = [2 * x - y for x, y in zip(m[0], m[1 % rows])]  # force a rank drop
    ours = smith_normal_form(m)
    assert ours == determinantal_factors(m)
    ref = [abs(int(d)) for d in invariant_factors(Matrix(m), domain=ZZ)]
    assert [d for d in ours if d] == [d for d in ref if d]
