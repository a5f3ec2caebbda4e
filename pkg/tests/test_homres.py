"""(Co)simplicial resolutions, hom-complexes, and the comparison report."""

from hammock_lab import corpus as C
from hammock_lab import homres as R
from hammock_lab import modelcat as M
from hammock_lab.sset import pi0, validate_sset, weq_evidence_pair


def test_constant_objects_are_resolutions():
    m = C.model_structure("chain3", "trivial")
    for b in m.cat.sorted_objects():
        x = R.const_simplicial(m, b, 2)
        assert not R.simplicial_obj_violations(x)
        cert = R.is_simplicial_resolution(x)
        assert cert.ok and cert.weakly_constant and cert.reedy_ok
        y = R.const_cosimplicial(m, b, 2)
        assert not R.cosimplicial_obj_violations(y)
        assert R.is_cosimplicial_resolution(y).ok


def test_build_resolutions_on_poset_structures():
    for cat_name in ("chain3", "square-poset"):
        for kind in ("trivial", "all-weq"):
            m = C.model_structure(cat_name, kind)
            b = m.cat.sorted_objects()[0]
            x, maps = R.build_simplicial_resolution(m, b, 2)
            assert R.is_simplicial_resolution(x).ok
            a = m.cat.sorted_objects()[-1]
            y, maps2 = R.build_cosimplicial_resolution(m, a, 2)
            assert R.is_cosimplicial_resolution(y).ok


def test_hom_complexes_validate_and_agree_on_pi0():
    m = C.model_structure("chain3", "trivial")
    a, b = 0, 2
    bs, _ = R.build_simplicial_resolution(m, b, 2)
    ac, _ = R.build_cosimplicial_resolution(m, a, 2)
    right = R.right_hom_complex(a, bs)
    left = R.left_hom_complex(ac, b)
    assert not validate_sset(right)
    assert not validate_sset(left)
    total = R.total_hom_complex(ac, bs)
    assert not validate_sset(total)
    counts = M.homotopy_category_hom_counts(m)
    for x in (right, left, total):
        assert len(pi0(x)[0]) == counts[(a, b)]


def test_derived_hom_carries_certificates():
    m = C.model_structure("chain3", "all-weq")
    x = R.derived_hom(m, 0, 2, 2)
    assert x.meta["simplicial_certificate"].ok
    assert x.meta["cosimplicial_certificate"].ok


def test_weq_preservation():
    m = C.model_structure("walking-iso", "all-weq")
    bs, _ = R.build_simplicial_resolution(m, "a", 2)
    rep = R.weq_preservation_check(m, bs, 1)
    assert rep["all_pass"]
    assert rep["cases"]  # walking-iso has non-identity weqs between objects


def test_resolution_asphericity():
    m = C.model_structure("i2", "trivial")
    rep = R.resolution_asphericity_check(m, 1, 1, side="simplicial")
    assert rep["aspherical"]
    rep2 = R.resolution_asphericity_check(m, 0, 1, side="cosimplicial")
    assert rep2["aspherical"]


def test_middle_double_colimit_small():
    m = C.model_structure("i2", "trivial")
    bs, _ = R.build_simplicial_resolution(m, 1, 2)
    ac, _ = R.build_cosimplicial_resolution(m, 0, 2)
    x = R.middle_double_colimit(ac, bs, 1)
    assert not validate_sset(x)
    counts = M.homotopy_category_hom_counts(m)
    assert len(pi0(x)[0]) == counts[(0, 1)]


def test_comparison_report_chain3():
    m = C.model_structure("chain3", "trivial")
    rep = R.comparison_report(m, 0, 2, 2, 1)
    assert rep["pi0_agree"]
    assert rep["pi0_matches_ho_hom"]
    assert rep["homology_agree"]
    assert rep["special_to_hammock_evidence"]


def test_resolution_independence_walking_iso():
    m = C.model_structure("walking-iso", "trivial")
    found = list(
        R.enumerate_simplicial_resolutions(m, "a", 2, search=True, limit=4)
    )
    assert len(found) >= 2
    homs = [R.right_hom_complex("b", bs) for bs, _ in found[:2]]
    assert weq_evidence_pair(homs[0], homs[1], 1)
