"""Hammocks, reduced-hammock hom-spaces, and special hammocks."""

from hammock_lab import corpus as C
from hammock_lab import hammock as H
from hammock_lab import modelcat as M
from hammock_lab.sset import pi0, validate_sset


def _relcat(cat_name, kind):
    return C.model_structure(cat_name, kind).relcat


def test_reduced_hammock_counts_against_homotopy_category():
    # pi0 of the hammock hom-space must match zigzag classes computed by the
    # independent homotopy-category engine, for every pair and structure
    for cat_name in ("chain3", "walking-iso", "i2"):
        for kind in ("trivial", "all-weq"):
            m = C.model_structure(cat_name, kind)
            counts = M.homotopy_category_hom_counts(m)
            for a in m.cat.sorted_objects():
                for b in m.cat.sorted_objects():
                    x = H.hammock_hom_space(m.relcat, a, b, 1, 4)
                    assert not validate_sset(x)
                    assert len(pi0(x)[0]) == counts[(a, b)], (
                        cat_name,
                        kind,
                        a,
                        b,
                    )


def test_hammock_reduction_idempotent_and_validating():
    rel = _relcat("walking-iso", "all-weq")
    hams = H.enumerate_reduced_hammocks(rel, "a", "b", 1, 3)
    assert hams
    for h in hams:
        assert not H.hammock_violations(rel, h)
        assert H.is_reduced(rel, h)
        assert H.reduce_hammock(rel, h) == h


def test_pi0_length_stability():
    rel = _relcat("chain3", "trivial")
    assert H.pi0_length_stability(rel, 0, 2, 4)


def test_special_hammocks_and_t_category():
    m = C.model_structure("chain3", "trivial")
    specials = H.special_hammocks(m, 0, 2)
    assert specials
    tcat = H.t_category(m, 0, 2)
    assert set(tcat.objects) == set(specials)


def test_nerve_t_to_hom_is_a_map():
    from hammock_lab.sset import sset_map_violations

    m = C.model_structure("chain3", "trivial")
    phi = H.nerve_t_to_hom(m, 0, 2, 1)
    assert not sset_map_violations(phi)


def test_special_vs_reduced_evidence():
    m = C.model_structure("chain3", "trivial")
    assert H.special_vs_reduced_evidence(m, 0, 2, 1)


def test_naturality_square():
    m = C.model_structure("chain3", "trivial")
    # precompose along 0 -> 1 and postcompose along 2 -> 2
    rep = H.naturality_square_check(m, (0, 1), (2, 2), 1, 1, 4)
    assert rep["pi0"]
