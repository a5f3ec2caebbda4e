"""Corpus integrity: fixtures, corruptions, and random generators."""

from hammock_lab import corpus as C
from hammock_lab import modelcat as M
from hammock_lab.fincat import (
    cat_diagram_violations,
    functor_violations,
)
from hammock_lab.hocolim import sset_diagram_violations
from hammock_lab.sset import validate_bisset, validate_sset


def test_corpus_names_fixed():
    assert C.CATEGORY_NAMES == (
        "pt",
        "i2",
        "walking-iso",
        "z2",
        "chain3",
        "square-poset",
    )
    assert C.STRUCTURE_KINDS == ("trivial", "all-weq")
    assert len(C.model_structures()) == 12


def test_functor_corpus_is_exhaustive_and_valid():
    fs = C.corpus_functors()
    assert len(fs) == 198
    for u in fs:
        assert not functor_violations(u)


def test_corruptions_each_break_a_distinct_axiom():
    seen = set()
    for label, m in C.corrupted_structures():
        assert label not in seen
        seen.add(label)
        assert M.validate_model_structure(m)
    assert len(seen) == 20


def test_random_generators_produce_valid_objects():
    rng = C.seeded_rng(42)
    for _ in range(5):
        cd = C.random_cat_diagram(rng)
        assert not cat_diagram_violations(cd)
        sd = C.random_sset_diagram(rng, 2)
        assert not sset_diagram_violations(sd)
        bx = C.random_bisset(rng, 2)
        assert not validate_bisset(bx)


def test_seeded_generation_is_reproducible():
    a = C.random_sset_diagram(C.seeded_rng(5), 2)
    b = C.random_sset_diagram(C.seeded_rng(5), 2)
    assert [a.ob[o].level_counts() for o in sorted(a.ob, key=repr)] == [
        b.ob[o].level_counts() for o in sorted(b.ob, key=repr)
    ]


def test_sset_pool_validates():
    for x in C.sset_pool(2).values():
        assert not validate_sset(x)


def test_fibre_diagram_shape():
    cd = C.fibre_z2_over_pt()
    assert not cat_diagram_violations(cd)
    assert len(cd.shape.objects) == 1
