"""Finite categories, functors, nerves, and the Grothendieck construction."""

import math

import pytest

from hammock_lab import corpus as C
from hammock_lab.fincat import (
    CategoryError,
    category_violations,
    comma_over,
    comma_under,
    functors_between,
    has_left_adjoint,
    has_right_adjoint,
    identity_functor,
    lax_colim,
    monotone_maps,
    nerve,
    opposite,
    truncated_simplex_category,
    validate_category,
    Functor,
)
from hammock_lab.sset import validate_sset


def test_corpus_categories_validate():
    for name in C.CATEGORY_NAMES:
        cat = C.category(name)
        assert not category_violations(
            list(cat.objects), cat.morphisms, cat.identity, cat.compose_table
        )


def test_broken_associativity_rejected():
    # one object, two non-identity endos with a non-associative table
    morphisms = {"i": ("*", "*"), "x": ("*", "*"), "y": ("*", "*")}
    compose = {}
    for f in morphisms:
        compose[(f, "i")] = f
        compose[("i", f)] = f
    compose[("x", "x")] = "y"
    compose[("x", "y")] = "i"
    compose[("y", "x")] = "x"
    compose[("y", "y")] = "x"
    issues = category_violations(["*"], morphisms, {"*": "i"}, compose)
    assert issues
    with pytest.raises(CategoryError):
        validate_category(["*"], morphisms, {"*": "i"}, compose)


def test_opposite_is_involutive():
    for name in C.CATEGORY_NAMES:
        cat = C.category(name)
        opp = opposite(cat)
        assert set(opp.morphisms) == set(cat.morphisms)
        for f, (s, t) in cat.morphisms.items():
            assert opp.morphisms[f] == (t, s)
        back = opposite(opp)
        assert back.morphisms == cat.morphisms
        assert back.compose_table == cat.compose_table


def test_nerve_counts_against_counting_formulas():
    # chains in a 3-element total order: monotone maps [n] -> [2]
    x = nerve(C.chain3_category(), 3)
    assert x.level_counts() == [
        math.comb(n + 3, 2) for n in range(4)
    ] == [3, 6, 10, 15]
    # the 2-element group: 2^n chains at level n
    y = nerve(C.z2_category(), 3)
    assert y.level_counts() == [1, 2, 4, 8]


def test_nerves_satisfy_simplicial_identities():
    for name in C.CATEGORY_NAMES:
        assert not validate_sset(nerve(C.category(name), 2))


def test_functor_enumeration_counts():
    pt = C.pt_category()
    i2 = C.i2_category()
    z2 = C.z2_category()
    assert len(functors_between(pt, i2)) == 2
    assert len(functors_between(i2, pt)) == 1
    # group homomorphisms Z/2 -> Z/2: identity and trivial
    assert len(functors_between(z2, z2)) == 2


def test_truncated_simplex_category_size():
    delta = truncated_simplex_category(2)
    assert len(delta.objects) == 3
    # sum over m, n <= 2 of C(n + m + 1, m + 1)
    expected = sum(
        math.comb(n + m + 1, m + 1) for m in range(3) for n in range(3)
    )
    assert len(delta.morphisms) == expected == 31
    assert len(monotone_maps(1, 2)) == 6
    assert len(monotone_maps(2, 2)) == 10


def test_comma_under_identity_is_coslice():
    ch = C.chain3_category()
    u = identity_functor(ch)
    cat = comma_under(u, 1)
    # objects of 1 down-to id: morphisms out of 1, namely 1->1 and 1->2
    assert len(cat.objects) == 2
    cat2 = comma_over(u, 1)
    assert len(cat2.objects) == 2


def test_grothendieck_of_one_object_diagram():
    cat, proj = lax_colim(C.fibre_z2_over_pt())
    assert len(cat.objects) == 1
    assert len(cat.morphisms) == 2
    assert proj.target is C.fibre_z2_over_pt().shape or len(
        proj.target.objects
    ) == 1


def test_adjoint_detection():
    pt = C.pt_category()
    ch = C.chain3_category()
    i2 = C.i2_category()
    to_pt = Functor(
        ch, pt, {o: 0 for o in ch.objects}, {f: (0, 0) for f in ch.morphisms}
    )
    assert has_left_adjoint(to_pt)
    assert has_right_adjoint(to_pt)
    at_zero = Functor(pt, i2, {0: 0}, {(0, 0): (0, 0)})
    assert has_right_adjoint(at_zero)
    assert not has_left_adjoint(at_zero)
