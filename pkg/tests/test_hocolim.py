"""Homotopy colimits of simplicial-set diagrams and asphericity checks."""

from hammock_lab import corpus as C
from hammock_lab import hocolim as H
from hammock_lab import sset as S
from hammock_lab.fincat import Functor, nerve
from hammock_lab.sset import validate_sset


def test_bk_colim_of_point_diagram_over_chain3():
    shape = C.chain3_category()
    d = H.point_diagram(shape, 2)
    x = H.bk_colim(d, 2)
    assert not validate_sset(x)
    # the simplicial replacement of a point diagram is the nerve of the shape
    assert x.level_counts() == nerve(shape, 2).level_counts()
    assert len(S.pi0(x)[0]) == 1


def test_bk_nerve_iso_on_corpus():
    for name in C.CATEGORY_NAMES:
        assert H.bk_nerve_iso_check(C.category(name), 2)


def test_duality_on_seeded_diagrams():
    rng = C.seeded_rng(3)
    for _ in range(5):
        d = C.random_sset_diagram(rng, 2)
        assert not H.sset_diagram_violations(d)
        assert H.duality_check(d, 2)


def test_thomason_on_fibre_diagram():
    cd = C.fibre_z2_over_pt()
    assert H.thomason_evidence(cd, 1, 2)


def test_asphericity_and_quillen_a():
    pt = C.pt_category()
    i2 = C.i2_category()
    z2 = C.z2_category()
    at_zero = Functor(pt, i2, {0: 0}, {(0, 0): (0, 0)})
    right = H.is_right_aspherical(at_zero, 1, 2)
    left = H.is_left_aspherical(at_zero, 1, 2)
    assert right["aspherical"]
    assert not left["aspherical"]
    assert left["per_object"] == {0: True, 1: False}
    assert H.quillen_a_evidence(at_zero, 1, 2) is True
    # Z/2 -> pt: fibres are BZ/2, not contractible, so no verdict either way
    to_pt = Functor(
        z2, pt, {"*": 0}, {f: (0, 0) for f in z2.morphisms}
    )
    assert H.quillen_a_evidence(to_pt, 2, 3) is None


def test_bk_vs_diagonal_on_external_product():
    x = S.standard_simplex(1, 2)
    y = nerve(C.i2_category(), 2)
    bx = S.external_product(x, y)
    assert H.bk_vs_diagonal_evidence(bx, 1)


def test_homotopical_invariance():
    shape = C.i2_category()
    x = S.standard_simplex(0, 2)
    y = S.standard_simplex(1, 2)
    d1 = H.constant_diagram(shape, x)
    d2 = H.constant_diagram(shape, y)
    comp = {
        o: S.SSetMap(
            x, y, {n: {sx: (0,) * (n + 1) for sx in x.level(n)} for n in range(3)}
        )
        for o in shape.objects
    }
    phi = H.SSetDiagramMap(d1, d2, comp)
    assert not H.diagram_map_violations(phi)
    assert H.homotopical_invariance_check(phi, 1)
