"""Bundled example categories, model structures, corrupted fixtures, and
seeded generators of diagrams used by the test suite and the CLI.

The corpus covers six small categories: a point, the walking arrow, the
walking isomorphism, the cyclic group of order two, the three-element chain,
and the commuting square poset.
"""

import itertools
import random

from . import hocolim as H
from . import modelcat as MC
from . import sset as S
from .fincat import (
    CatDiagram,
    Functor,
    functors_between,
    identity_functor,
    nerve,
    validate_category,
)

CATEGORY_NAMES = ("pt", "i2", "walking-iso", "z2", "chain3", "square-poset")
STRUCTURE_KINDS = ("trivial", "all-weq")


def poset_category(objects, leq):
    """The category of a finite poset: one morphism (a, b) per related pair."""
    morphisms = {}
    for a in objects:
        for b in objects:
            if leq(a, b):
                morphisms[(a, b)] = (a, b)
    identity = {a: (a, a) for a in objects}
    composites = {}
    for (b1, c) in morphisms:
        for (a, b2) in morphisms:
            if b2 == b1:
                composites[((b1, c), (a, b2))] = (a, c)
    return validate_category(list(objects), morphisms, identity, composites)


def pt_category():
    return poset_category([0], lambda a, b: True)


def i2_category():
    """The walking arrow 0 -> 1."""
    return poset_category([0, 1], lambda a, b: a <= b)


def walking_iso_category():
    """Two objects with exactly one morphism in each direction."""
    return poset_category(["a", "b"], lambda a, b: True)


def z2_category():
    """One object with endomorphisms {e, g}, g squaring to e."""
    morphisms = {"e": ("*", "*"), "g": ("*", "*")}
    composites = {
        ("e", "e"): "e",
        ("e", "g"): "g",
        ("g", "e"): "g",
        ("g", "g"): "e",
    }
    return validate_category(["*"], morphisms, {"*": "e"}, composites)


def chain3_category():
    return poset_category([0, 1, 2], lambda a, b: a <= b)


def square_poset_category():
    objs = ["00", "01", "10", "11"]
    return poset_category(
        objs, lambda a, b: a[0] <= b[0] and a[1] <= b[1]
    )


def categories():
    return {
        "pt": pt_category(),
        "i2": i2_category(),
        "walking-iso": walking_iso_category(),
        "z2": z2_category(),
        "chain3": chain3_category(),
        "square-poset": square_poset_category(),
    }


def category(name):
    cats = categories()
    if name not in cats:
        raise KeyError(f"unknown corpus category {name!r}")
    return cats[name]


def model_structure(cat_name, kind):
    cat = category(cat_name)
    if kind == "trivial":
        return MC.trivial_model_structure(cat)
    if kind == "all-weq":
        return MC.all_weq_model_structure(cat)
    raise KeyError(f"unknown structure kind {kind!r}")


def model_structures():
    return {
        (name, kind): model_structure(name, kind)
        for name in CATEGORY_NAMES
        for kind in STRUCTURE_KINDS
    }


# ---------------------------------------------------------------------------
# corrupted model-structure fixtures


def _with(m, relcat=None, cof=None, fib=None, fact_cf=None, fact_tcf=None):
    return MC.ModelStructure(
        relcat if relcat is not None else m.relcat,
        cof if cof is not None else m.cof,
        fib if fib is not None else m.fib,
        fact_cf if fact_cf is not None else m.fact_cf,
        fact_tcf if fact_tcf is not None else m.fact_tcf,
    )


def _with_weq(m, weq):
    return _with(m, relcat=MC.RelCat(m.cat, frozenset(weq)))


def corrupted_structures():
    """Twenty single-field corruptions of the four poset structures.

    Each entry is (name, structure); every structure must be rejected by
    the model-axiom verifier with a cited failure.
    """
    out = []
    for cat_name in ("chain3", "square-poset"):
        cat = category(cat_name)
        objs = cat.sorted_objects()
        bot, top = objs[0], objs[-1]
        ident = cat.id_of(bot)
        arrow = next(
            f for f in cat.sorted_morphisms() if not cat.is_identity(f)
        )
        long_arrow = (bot, top)

        triv = model_structure(cat_name, "trivial")
        out.append(
            (f"{cat_name}-trivial-weq-gains-non-iso",
             _with_weq(triv, set(triv.weq) | {arrow}))
        )
        out.append(
            (f"{cat_name}-trivial-weq-loses-identity",
             _with_weq(triv, set(triv.weq) - {ident}))
        )
        out.append(
            (f"{cat_name}-trivial-cof-loses-arrow",
             _with(triv, cof=triv.cof - {arrow}))
        )
        out.append(
            (f"{cat_name}-trivial-fib-loses-identity",
             _with(triv, fib=triv.fib - {ident}))
        )
        bad_cf = dict(triv.fact_cf)
        bad_cf[long_arrow] = (ident, ident)
        out.append(
            (f"{cat_name}-trivial-factorization-breaks",
             _with(triv, fact_cf=bad_cf))
        )

        allw = model_structure(cat_name, "all-weq")
        out.append(
            (f"{cat_name}-all-weq-cof-loses-identity",
             _with(allw, cof=allw.cof - {ident}))
        )
        out.append(
            (f"{cat_name}-all-weq-weq-loses-arrow",
             _with_weq(allw, set(allw.weq) - {arrow}))
        )
        out.append(
            (f"{cat_name}-all-weq-fib-loses-arrow",
             _with(allw, fib=allw.fib - {arrow}))
        )
        bad_tcf = dict(allw.fact_tcf)
        bad_tcf[arrow] = (arrow, cat.id_of(cat.morphisms[arrow][1]))
        out.append(
            (f"{cat_name}-all-weq-tcof-factor-not-cofibration",
             _with(allw, fact_tcf=bad_tcf))
        )
        bad_cf2 = dict(allw.fact_cf)
        bad_cf2[long_arrow] = (ident, ident)
        out.append(
            (f"{cat_name}-all-weq-factorization-breaks",
             _with(allw, fact_cf=bad_cf2))
        )
    assert len(out) == 20
    return out


# ---------------------------------------------------------------------------
# functor inventory


def corpus_functors(limit_per_pair=None):
    """All functors between corpus categories, sorted deterministically."""
    cats = categories()
    out = []
    for sname in CATEGORY_NAMES:
        for tname in CATEGORY_NAMES:
            fs = functors_between(cats[sname], cats[tname])
            if limit_per_pair is not None:
                fs = fs[:limit_per_pair]
            out.extend(fs)
    return out


# ---------------------------------------------------------------------------
# simplicial set pool and seeded generators


def sset_pool(k):
    pool = {
        "point": S.standard_simplex(0, k),
        "interval": S.standard_simplex(1, k),
        "triangle": S.standard_simplex(2, k),
        "circle": S.boundary_simplex(2, k),
        "two-points": S.discrete(["x", "y"], k),
    }
    for name in CATEGORY_NAMES:
        pool[f"nerve-{name}"] = nerve(category(name), k)
    return pool


def _collapse_functor(source, target, obj):
    """The constant functor at an object of the target."""
    return Functor(
        source,
        target,
        {c: obj for c in source.objects},
        {f: target.id_of(obj) for f in source.morphisms},
    )


def _poset_cut_diagram(shape, value, cut):
    """Values `value` on objects inside the cut, the point category outside.

    The cut must be downward closed, so every morphism either stays inside,
    stays outside, or collapses; composition is then path independent.
    """
    pt = pt_category()
    inside = set(cut)
    ob = {c: value if c in inside else pt for c in shape.objects}
    mor = {}
    for f, (s, t) in shape.morphisms.items():
        if s in inside and t in inside:
            mor[f] = identity_functor(value)
        elif s not in inside and t not in inside:
            mor[f] = identity_functor(pt)
        elif s in inside:
            mor[f] = _collapse_functor(value, pt, 0)
        else:
            raise ValueError("cut is not downward closed")
    return CatDiagram(shape, ob, mor)


def _downward_closed_subsets(shape):
    objs = shape.sorted_objects()
    out = []
    for bits in itertools.product([False, True], repeat=len(objs)):
        cut = {o for o, b in zip(objs, bits) if b}
        ok = True
        for f, (s, t) in shape.morphisms.items():
            if t in cut and s not in cut:
                ok = False
                break
        if ok:
            out.append(cut)
    return out


def random_cat_diagram(rng):
    """A random strict diagram of corpus categories over a corpus shape."""
    shape_name = rng.choice(["pt", "i2", "chain3", "square-poset"])
    shape = category(shape_name)
    value_name = rng.choice(list(CATEGORY_NAMES))
    value = category(value_name)
    cuts = _downward_closed_subsets(shape)
    cut = rng.choice(cuts)
    return _poset_cut_diagram(shape, value, cut)


def fibre_z2_over_pt():
    """The constant diagram at the two-element group over the point."""
    shape = pt_category()
    z2 = z2_category()
    return CatDiagram(shape, {0: z2}, {(0, 0): identity_functor(z2)})


def random_sset_diagram(rng, k):
    """A random strict simplicial-set diagram over a corpus shape."""
    if rng.random() < 0.5:
        return H.nerve_diagram(random_cat_diagram(rng), k)
    shape = category(rng.choice(["pt", "i2", "chain3", "square-poset"]))
    pool = sset_pool(k)
    x = pool[rng.choice(sorted(pool))]
    return H.constant_diagram(shape, x)


def random_bisset(rng, k):
    """A random bisimplicial set: an external product of pool members."""
    pool = sset_pool(k)
    names = sorted(pool)
    x = pool[rng.choice(names)]
    y = pool[rng.choice(names)]
    return S.external_product(x, y)


def seeded_rng(seed):
    return random.Random(seed)
