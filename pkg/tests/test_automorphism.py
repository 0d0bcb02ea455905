from __future__ import annotations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from mcgx.automorphism import Automorphism, NotInvertible
from mcgx.generators import MappingClass, catalog, dehn_twist, generating_set, table
from mcgx.surface import Signature
from mcgx.words import Word, mul

SIGS = [Signature(0, 2), Signature(1, 1), Signature(1, 2), Signature(2, 1)]


def table_names(sig):
    return generating_set(sig, False) + generating_set(sig, True)


def gen_words(sig, max_len=4):
    names = sorted(set(table_names(sig)))
    token = st.tuples(st.sampled_from(names), st.sampled_from([1, -1]))
    return st.lists(token, max_size=max_len).map(lambda w: MappingClass(sig, tuple(w)).automorphism)


def perm_compose(p, q):
    return tuple(p[q[j] - 1] for j in range(len(q)))


def test_apply_examples():
    s = Signature(0, 2)
    ident = Automorphism.identity(s)
    w = s.letters("u1 u2^-1 u3")
    assert ident.apply(w) == w
    phi = Automorphism(s, ((1, 2, -1), (1,), (3,)))
    assert phi.apply((1, 2)) == (1, 2)
    assert phi.apply(()) == ()
    assert phi.apply(Word((1, 2), 3)) == Word((1, 2), 3)
    with pytest.raises(ValueError):
        phi.apply(Word((1,), 5))


@pytest.mark.parametrize("sig", SIGS, ids=str)
def test_every_generator_is_a_positive_mapping_class(sig):
    t = table(sig)
    for name in table_names(sig):
        f = t[name]
        assert f.is_mapping_class(), name
        assert (f @ f.inverse()).outer_equal(Automorphism.identity(sig)) is not None, name
        assert f @ Automorphism.identity(sig) == f
        m = sympy.Matrix(f.homology_action())
        assert m.det() in (1, -1), name


def test_is_mapping_class_rejects_a_square():
    s = Signature(0, 2)
    assert Automorphism.identity(s).is_mapping_class()
    assert not Automorphism(s, ((1, 1), (2,), (3,))).is_mapping_class()
    with pytest.raises(ValueError):
        Automorphism(s, ((1, 1), (2,), (3,))).induced_permutation()


def test_inverse():
    s = Signature(1, 1)
    ident = Automorphism.identity(s)
    assert ident.inverse() == ident
    t = table(s)
    tw = t["tau_1"]
    assert tw.inverse() == dehn_twist(s, catalog(s)["beta_1"], -1)
    lhs = (t["iota_1"] @ t["tau_1"]).inverse()
    assert lhs == t["tau_1"].inverse() @ t["iota_1"].inverse()
    with pytest.raises(NotInvertible):
        Automorphism(s, ident.images).inverse()


def test_outer_equal_examples():
    s = Signature(0, 2)
    t = table(s)
    f = t["S_1_2"]
    assert f.outer_equal(f) == ()
    a = (1,)
    assert f.inner(a).outer_equal(f) == a
    # half twists on punctures 1,2 and on punctures 2,3 induce different transpositions
    assert t["sigma_1"].outer_equal(t["sigma_2"]) is None


def test_induced_permutations():
    s = Signature(1, 3)
    t = table(s)
    assert t["iota_1"].induced_permutation() == (2, 1, 3, 4, 5, 6)
    assert t["lambda_1"].induced_permutation() == (3, 4, 1, 2, 5, 6)
    assert t["lambda_2"].induced_permutation() == (1, 2, 5, 6, 3, 4)
    assert Automorphism.identity(s).induced_permutation() == tuple(range(1, 7))


def test_twist_on_meridian_homology():
    s = Signature(1, 1)
    m = dehn_twist(s, catalog(s)["beta_1"]).homology_action()
    assert abs(m[0][1]) == 1 and m[0][0] == 1 and m[0][2] == 0
    assert m[1] == [0, 1, 0] and m[2] == [0, 0, 1]


def test_twist_fixes_its_own_curve_and_disjoint_letters():
    s = Signature(2, 1)
    cat = catalog(s)
    tw = dehn_twist(s, cat["beta_1"])
    assert tw.apply(cat["beta_1"]) == cat["beta_1"]
    assert tw.apply(mul(cat["beta_1"], cat["beta_1"])) == mul(cat["beta_1"], cat["beta_1"])
    for x in (s.a(2), s.b(2), s.b(1)):
        assert tw.apply((x,)) == (x,)


@pytest.mark.parametrize("sig", SIGS, ids=str)
def test_homomorphism_properties(sig):
    @given(gen_words(sig), gen_words(sig), gen_words(sig))
    @settings(max_examples=25, deadline=None)
    def check(f, g, h):
        assert ((f @ g) @ h).images == (f @ (g @ h)).images
        assert (f @ g).induced_permutation() == perm_compose(f.induced_permutation(), g.induced_permutation())
        mf, mg = sympy.Matrix(f.homology_action()), sympy.Matrix(g.homology_action())
        assert sympy.Matrix((f @ g).homology_action()) == mg * mf
        t = (f @ g).outer_equal(f.inner((1,)) @ g)
        assert t is not None
        assert all(mul(t, w, tuple(-x for x in reversed(t))) == v for w, v in zip((f.inner((1,)) @ g).images, (f @ g).images))

    check()


def test_homology_permutation_block_matches_permutation():
    s = Signature(0, 3)
    f = table(s)["lambda_1"]
    m = f.homology_action()
    perm = f.induced_permutation()
    for j in range(1, s.punctures):
        target = perm[j - 1]
        if target < s.punctures:
            assert m[j - 1] == [int(k == target - 1) for k in range(s.rank)]
