"""Free resolutions, zigzag localization, and hammock cross-checks."""

import pytest

from hammock_lab import corpus as C
from hammock_lab import locres as L
from hammock_lab.fincat import nerve
from hammock_lab.sset import pi0, validate_sset


def test_reflexive_graph_of_category():
    g = L.underlying_reflexive_graph(C.chain3_category())
    assert not L.refl_graph_violations(g)
    assert len(g.non_reflexive()) == 3  # 0->1, 1->2, 0->2


def test_free_category_word_counts():
    g = L.underlying_reflexive_graph(C.z2_category())
    f = L.free_category(g, 3)
    # words in the single generator g of length 0..3
    assert f.morphism_count() == 4
    assert not f.complete
    ch = L.free_category(L.underlying_reflexive_graph(C.chain3_category()), 4)
    assert ch.complete
    assert sorted(ch.hom(0, 2), key=len) == [((0, 2),), ((0, 1), (1, 2))]


def test_standard_resolution_identities():
    # word bounds sized per category: nesting makes free words explode fast
    for name, bound in (("chain3", 3), ("i2", 3), ("walking-iso", 2)):
        res = L.standard_resolution(C.category(name), 2, bound)
        assert not L.resolution_identity_issues(res)


def test_resolution_level_sizes_chain3():
    res = L.standard_resolution(C.chain3_category(), 2, 2)
    # non-identity words of bounded length at each nesting depth
    assert [res.levels[n].morphism_count() for n in range(3)] == [7, 8, 9]


def test_augmentation_collapses_words():
    cat = C.chain3_category()
    res = L.standard_resolution(cat, 1, 4)
    aug = L.augmentation(res.levels[0], cat)
    assert not aug.issues()
    assert aug.apply(((0, 1), (1, 2))) == (0, 2)
    z2 = C.z2_category()
    zres = L.standard_resolution(z2, 1, 4)
    zaug = L.augmentation(zres.levels[0], z2)
    assert zaug.apply(("g", "g"), source="*") == "e"


def test_reduce_word_cancellation():
    w = (("-", "a"), ("+", "a"), ("-", "a"))
    assert L.reduce_word(w) == (("-", "a"),)
    assert L.reduce_word((("+", "a"), ("-", "a"))) == ()


def test_localization_of_walking_iso_direction():
    # invert the single generator of the walking arrow: one map each way
    cat = C.i2_category()
    weq = set(cat.identity.values()) | {(0, 1)}
    x = L.loc_hom_space(cat, weq, 1, 0, 1, 4)
    assert not validate_sset(x)
    assert len(pi0(x)[0]) == 1


def test_loc_hom_chain3():
    cat = C.chain3_category()
    weq = set(cat.identity.values())
    x = L.loc_hom_space(cat, weq, 0, 2, 2, 4)
    assert not validate_sset(x)
    assert x.level_counts() == [2, 3, 4]
    assert len(pi0(x)[0]) == 1
    empty = L.loc_hom_space(cat, weq, 2, 0, 2, 4)
    assert empty.level_counts() == [0, 0, 0]


def test_local_confluence_clean():
    cat = C.i2_category()
    weq = set(cat.identity.values()) | {(0, 1)}
    g = L.underlying_reflexive_graph(cat)
    f = L.free_category(g, 4)
    inverted = {e for e in g.non_reflexive() if e in weq}
    loc = L.localize_free(f, inverted, 4)
    assert not L.local_confluence_issues(loc)


def test_weq_must_be_subcategory():
    cat = C.chain3_category()
    with pytest.raises(ValueError):
        # (0,1) alone without identities is not a subcategory
        L.loc_hom_space(cat, {(0, 1)}, 0, 1, 1, 3)


def test_presheaf_validation_and_fibrancy():
    cat = C.i2_category()
    x = nerve(C.z2_category(), 2)
    p = L.const_presheaf(cat, x)
    assert not L.presheaf_violations(p)
    from hammock_lab.modelcat import RelCat

    rel = RelCat(cat, frozenset(cat.identity.values()))
    rep = L.presheaf_local_fibrancy_evidence(p, rel, 1)
    assert rep["ok"]


def test_hammock_vs_loc_agreement():
    cat = C.chain3_category()
    weq = set(cat.identity.values())
    rep = L.hammock_vs_loc_evidence(cat, weq, 0, 2, 2, 4, 1)
    assert rep["pi0"]["agree"]
    assert rep["evidence"] in ("exact", "homology-evidence")
