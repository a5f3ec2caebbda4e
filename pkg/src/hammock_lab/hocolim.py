"""Bousfield-Kan colimits, duality, Thomason evidence, asphericity checks.

Simplices of the Bousfield-Kan colimit are encoded as
``(objs, fs, x)`` where ``objs = (c_0, ..., c_n)``, ``fs = (f_1, ..., f_n)``
with f_i : c_{i-1} -> c_i, and x is an n-simplex of X(c_0).  The dual colimit
uses ``(x, objs, fs)`` with f_i : c_i -> c_{i-1} and x an n-simplex of
X(c_n).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import sset as S
from .fincat import (
    FinCat,
    Functor,
    comma_over,
    comma_under,
    identity_functor,
    lax_colim,
    nerve,
    nerve_functor_map,
    opposite,
    oplax_colim,
    restrict_cat_diagram,
)


@dataclass(frozen=True)
class SSetDiagram:
    """A strict functor shape -> truncated simplicial sets."""

    shape: FinCat
    ob: dict  # shape object -> TruncSSet
    mor: dict  # shape morphism id -> SSetMap

    def value(self, c):
        return self.ob[c]

    def map(self, f):
        return self.mor[f]

    @property
    def k(self):
        return next(iter(self.ob.values())).k


def sset_diagram_violations(d):
    issues = []
    ks = {x.k for x in d.ob.values()}
    if len(ks) > 1:
        issues.append("mismatched truncation levels across the diagram")
        return issues
    for f, (s, t) in d.shape.morphisms.items():
        m = d.mor.get(f)
        if m is None:
            issues.append(f"no map assigned to {f!r}")
            continue
        if m.source is not d.ob[s]:
            issues.append(f"map at {f!r} has wrong source")
        if m.target is not d.ob[t]:
            issues.append(f"map at {f!r} has wrong target")
        issues.extend(S.sset_map_violations(m))
    if issues:
        return issues
    for c in d.shape.objects:
        m = d.mor[d.shape.identity[c]]
        for n in range(d.k + 1):
            for sx in d.ob[c].level(n):
                if m.apply(n, sx) != sx:
                    issues.append(f"identity of {c!r} does not act trivially")
                    break
    for (g, f), h in d.shape.compose_table.items():
        mg, mf, mh = d.mor[g], d.mor[f], d.mor[h]
        for n in range(d.k + 1):
            for sx in mf.source.level(n):
                if mg.apply(n, mf.apply(n, sx)) != mh.apply(n, sx):
                    issues.append(f"diagram not functorial on ({g!r}, {f!r})")
                    break
    return issues


def constant_diagram(shape, x):
    ident = S.identity_map(x)
    return SSetDiagram(
        shape,
        {c: x for c in shape.objects},
        {f: ident for f in shape.morphisms},
    )


def point_diagram(shape, k):
    return constant_diagram(shape, S.discrete(["*"], k))


def _chains(shape, n):
    """Composable chains (objs, fs) with f_i : c_{i-1} -> c_i."""
    if n == 0:
        return [((c,), ()) for c in shape.sorted_objects()]
    shorter = _chains(shape, n - 1)
    out = []
    for objs, fs in shorter:
        last = objs[-1]
        for c in shape.sorted_objects():
            for f in shape.hom(last, c):
                out.append((objs + (c,), fs + (f,)))
    return out


def bk_colim(d, k=None):
    """Bousfield-Kan colimit of a simplicial set diagram."""
    shape = d.shape
    if k is None:
        k = d.k
    levels = []
    for n in range(k + 1):
        lv = [
            (objs, fs, x)
            for objs, fs in _chains(shape, n)
            for x in d.ob[objs[0]].level(n)
        ]
        levels.append(lv)
    faces = {}
    degens = {}
    for n in range(1, k + 1):
        for i in range(n + 1):
            mp = {}
            for (objs, fs, x) in levels[n]:
                x0 = d.ob[objs[0]]
                if i == 0:
                    y = d.mor[fs[0]].apply(n, x)
                    y = d.ob[objs[1]].d(n, 0, y)
                    mp[(objs, fs, x)] = (objs[1:], fs[1:], y)
                elif i == n:
                    mp[(objs, fs, x)] = (objs[:-1], fs[:-1], x0.d(n, n, x))
                else:
                    comp = shape.compose(fs[i], fs[i - 1])
                    new_fs = fs[: i - 1] + (comp,) + fs[i + 1 :]
                    new_objs = objs[:i] + objs[i + 1 :]
                    mp[(objs, fs, x)] = (new_objs, new_fs, x0.d(n, i, x))
            faces[(n, i)] = mp
    for n in range(k):
        for i in range(n + 1):
            mp = {}
            for (objs, fs, x) in levels[n]:
                x0 = d.ob[objs[0]]
                new_fs = fs[:i] + (shape.identity[objs[i]],) + fs[i:]
                new_objs = objs[: i + 1] + objs[i:]
                mp[(objs, fs, x)] = (new_objs, new_fs, x0.s(n, i, x))
            degens[(n, i)] = mp
    out = S.TruncSSet(k, levels, faces, degens)
    issues = S.validate_sset(out)
    assert not issues, issues[:3]
    return out


def dual_bk_colim(d, k=None):
    """Dual Bousfield-Kan colimit: morphism chains run against x."""
    shape = d.shape
    if k is None:
        k = d.k
    op = opposite(shape)
    levels = []
    for n in range(k + 1):
        # f_i : c_i -> c_{i-1}, so chains in the opposite category
        lv = [
            (x, objs, fs)
            for objs, fs in _chains(op, n)
            for x in d.ob[objs[-1]].level(n)
        ]
        levels.append(lv)
    faces = {}
    degens = {}
    for n in range(1, k + 1):
        for i in range(n + 1):
            mp = {}
            for (x, objs, fs) in levels[n]:
                xn = d.ob[objs[-1]]
                if i == 0:
                    mp[(x, objs, fs)] = (xn.d(n, 0, x), objs[1:], fs[1:])
                elif i == n:
                    y = d.mor[fs[-1]].apply(n, x)
                    y = d.ob[objs[-2]].d(n, n, y)
                    mp[(x, objs, fs)] = (y, objs[:-1], fs[:-1])
                else:
                    # f_i o f_{i+1} composes in the base category
                    comp = op.compose(fs[i], fs[i - 1])
                    new_fs = fs[: i - 1] + (comp,) + fs[i + 1 :]
                    new_objs = objs[:i] + objs[i + 1 :]
                    mp[(x, objs, fs)] = (xn.d(n, i, x), new_objs, new_fs)
            faces[(n, i)] = mp
    for n in range(k):
        for i in range(n + 1):
            mp = {}
            for (x, objs, fs) in levels[n]:
                xn = d.ob[objs[-1]]
                new_fs = fs[:i] + (op.identity[objs[i]],) + fs[i:]
                new_objs = objs[: i + 1] + objs[i:]
                mp[(x, objs, fs)] = (xn.s(n, i, x), new_objs, new_fs)
            degens[(n, i)] = mp
    out = S.TruncSSet(k, levels, faces, degens)
    issues = S.validate_sset(out)
    assert not issues, issues[:3]
    return out


@dataclass(frozen=True)
class SSetDiagramMap:
    """A natural transformation of simplicial set diagrams (same shape)."""

    source: SSetDiagram
    target: SSetDiagram
    components: dict  # shape object -> SSetMap

    def component(self, c):
        return self.components[c]


def diagram_map_violations(phi):
    issues = []
    if phi.source.shape is not phi.target.shape:
        if phi.source.shape.morphisms != phi.target.shape.morphisms:
            issues.append("diagram shapes differ")
            return issues
    for c in phi.source.shape.objects:
        comp = phi.components.get(c)
        if comp is None:
            issues.append(f"missing component at {c!r}")
            continue
        issues.extend(S.sset_map_violations(comp))
    if issues:
        return issues
    for f, (s, t) in phi.source.shape.morphisms.items():
        xf, yf = phi.source.mor[f], phi.target.mor[f]
        for n in range(phi.source.k + 1):
            for sx in phi.source.ob[s].level(n):
                if phi.components[t].apply(n, xf.apply(n, sx)) != yf.apply(
                    n, phi.components[s].apply(n, sx)
                ):
                    issues.append(f"naturality fails at {f!r}")
                    break
    return issues


def bk_induced_map(phi, k=None):
    src = bk_colim(phi.source, k)
    tgt = bk_colim(phi.target, k)
    level_maps = {}
    for n in range(src.k + 1):
        level_maps[n] = {
            (objs, fs, x): (objs, fs, phi.components[objs[0]].apply(n, x))
            for (objs, fs, x) in src.level(n)
        }
    out = S.SSetMap(src, tgt, level_maps)
    assert not S.sset_map_violations(out)
    return out


def dual_bk_induced_map(phi, k=None):
    src = dual_bk_colim(phi.source, k)
    tgt = dual_bk_colim(phi.target, k)
    level_maps = {}
    for n in range(src.k + 1):
        level_maps[n] = {
            (x, objs, fs): (phi.components[objs[-1]].apply(n, x), objs, fs)
            for (x, objs, fs) in src.level(n)
        }
    out = S.SSetMap(src, tgt, level_maps)
    assert not S.sset_map_violations(out)
    return out


def objectwise_opposite(d):
    ops = {c: S.opposite_sset(x) for c, x in d.ob.items()}
    mors = {
        f: S.SSetMap(ops[s], ops[t], d.mor[f].level_maps)
        for f, (s, t) in d.shape.morphisms.items()
    }
    return SSetDiagram(d.shape, ops, mors)


def duality_check(d, k=None):
    """Verify the bijection bk(op X) -> op(dual bk X) is a simplicial iso.

    The assignment sends (f_n, ..., f_1, x) to (x, f_1, ..., f_n).
    """
    if k is None:
        k = d.k
    left = bk_colim(objectwise_opposite(d), k)
    right = S.opposite_sset(dual_bk_colim(d, k))

    def assign(simplex):
        objs, fs, x = simplex
        return (x, tuple(reversed(objs)), tuple(reversed(fs)))

    for n in range(k + 1):
        image = [assign(sx) for sx in left.level(n)]
        if sorted(image, key=repr) != [
            sx for sx in right.level(n)
        ] or len(set(image)) != len(image):
            return False
    for n in range(1, k + 1):
        for i in range(n + 1):
            for sx in left.level(n):
                if assign(left.d(n, i, sx)) != right.d(n, i, assign(sx)):
                    return False
    for n in range(k):
        for i in range(n + 1):
            for sx in left.level(n):
                if assign(left.s(n, i, sx)) != right.s(n, i, assign(sx)):
                    return False
    return True


def bk_nerve_iso_check(shape, k):
    """Exhibit the isomorphism bk_colim(constant point) = nerve(shape)."""
    bk = bk_colim(point_diagram(shape, k), k)
    nv = nerve(shape, k)

    def assign(simplex, n):
        objs, fs, _ = simplex
        return objs[0] if n == 0 else fs

    for n in range(k + 1):
        image = [assign(sx, n) for sx in bk.level(n)]
        if len(set(image)) != len(image) or set(image) != set(nv.level(n)):
            return False
    for n in range(1, k + 1):
        for i in range(n + 1):
            for sx in bk.level(n):
                if assign(bk.d(n, i, sx), n - 1) != nv.d(n, i, assign(sx, n)):
                    return False
    for n in range(k):
        for i in range(n + 1):
            for sx in bk.level(n):
                if assign(bk.s(n, i, sx), n + 1) != nv.s(n, i, assign(sx, n)):
                    return False
    return True


def homotopical_invariance_check(phi, d):
    """Objectwise equivalence evidence must persist to both colimits."""
    issues = diagram_map_violations(phi)
    if issues:
        raise ValueError("; ".join(issues[:3]))
    return S.weq_evidence(bk_induced_map(phi), d) and S.weq_evidence(
        dual_bk_induced_map(phi), d
    )


def nerve_diagram(cd, k):
    """Apply the nerve objectwise to a diagram of categories."""
    obs = {c: nerve(cat, k) for c, cat in cd.ob.items()}
    mors = {}
    for f, (s, t) in cd.shape.morphisms.items():
        m = nerve_functor_map(cd.mor[f], k)
        mors[f] = S.SSetMap(obs[s], obs[t], m.level_maps)
    return SSetDiagram(cd.shape, obs, mors)


def thomason_evidence(cd, d, k=None):
    """Homology-level comparison of both colimit models, per Thomason.

    Compares bk_colim of the nerves against the nerve of the lax colimit,
    and the dual colimit against the oplax colimit.  Evidence only: the
    natural comparison maps are not constructed.
    """
    if k is None:
        k = d + 1
    nd = nerve_diagram(cd, k)
    lax_cat, _ = lax_colim(cd)
    oplax_cat, _ = oplax_colim(cd)
    lax_ok = S.weq_evidence_pair(bk_colim(nd, k), nerve(lax_cat, k), d)
    oplax_ok = S.weq_evidence_pair(
        dual_bk_colim(nd, k), nerve(oplax_cat, k), d
    )
    return lax_ok and oplax_ok


def is_left_aspherical(u, d, k=None):
    """Homology-point check for every comma category (b down-to u)."""
    if k is None:
        k = d + 1
    detail = {}
    for b in u.target.sorted_objects():
        cat = comma_under(u, b)
        detail[b] = S.is_homology_point(nerve(cat, k), d)
    return {"aspherical": all(detail.values()), "per_object": detail}


def is_right_aspherical(u, d, k=None):
    if k is None:
        k = d + 1
    detail = {}
    for b in u.target.sorted_objects():
        cat = comma_over(u, b)
        detail[b] = S.is_homology_point(nerve(cat, k), d)
    return {"aspherical": all(detail.values()), "per_object": detail}


def quillen_a_evidence(u, d, k=None):
    """Evidence for the nerve of an aspherical functor being an equivalence.

    Returns True/False when the asphericity hypothesis holds on either
    side, and None ("hypothesis not established") otherwise.
    """
    if k is None:
        k = d + 1
    left = is_left_aspherical(u, d, k)
    right = is_right_aspherical(u, d, k)
    if not (left["aspherical"] or right["aspherical"]):
        return None
    return S.weq_evidence(nerve_functor_map(u, k), d)


def lax_colim_induced_functor(u, cd):
    """The functor lax_colim(D o u) -> lax_colim(D) over u."""
    restricted = restrict_cat_diagram(cd, u)
    src, _ = lax_colim(restricted)
    tgt, _ = lax_colim(cd)
    omap = {(a, x): (u.object_map[a], x) for (a, x) in src.objects}
    mmap = {}
    for mid, (s, t) in src.morphisms.items():
        (a1, x1), (a2, x2), (f, g) = mid
        mmap[mid] = (omap[(a1, x1)], omap[(a2, x2)], (u.morphism_map[f], g))
    return Functor(src, tgt, omap, mmap)


def oplax_colim_induced_functor(u, cd):
    restricted = restrict_cat_diagram(cd, u)
    src, _ = oplax_colim(restricted)
    tgt, _ = oplax_colim(cd)
    omap = {(a, x): (u.object_map[a], x) for (a, x) in src.objects}
    mmap = {}
    for mid, (s, t) in src.morphisms.items():
        (a1, x1), (a2, x2), (f, g) = mid
        mmap[mid] = (omap[(a1, x1)], omap[(a2, x2)], (u.morphism_map[f], g))
    return Functor(src, tgt, omap, mmap)


def cofinality_asphericity_evidence(u, cd, d, k=None):
    """Asphericity transfer to the Grothendieck constructions.

    If u is left aspherical, the induced functor between lax colimits must
    be left aspherical and the one between oplax colimits right aspherical.
    """
    if k is None:
        k = d + 1
    hyp = is_left_aspherical(u, d, k)
    if not hyp["aspherical"]:
        return {
            "hypothesis": False,
            "lax": None,
            "oplax": None,
            "pass": None,
            "note": "hypothesis not established",
        }
    lax_rep = is_left_aspherical(lax_colim_induced_functor(u, cd), d, k)
    oplax_rep = is_right_aspherical(oplax_colim_induced_functor(u, cd), d, k)
    return {
        "hypothesis": True,
        "lax": lax_rep,
        "oplax": oplax_rep,
        "pass": lax_rep["aspherical"] and oplax_rep["aspherical"],
    }


def row_diagram(bx):
    """The diagram over the opposite simplex category sending [n] to X_{n,*}.

    Structure maps act through the horizontal direction via factorization
    into elementary faces and degeneracies.
    """
    from .fincat import truncated_simplex_category

    k = bx.k
    shape = opposite(truncated_simplex_category(k))
    obs = {n: S.row_sset(bx, n) for n in range(k + 1)}
    mors = {}
    for mid, (src_n, dst_m) in shape.morphisms.items():
        m_, n_, vals = mid
        # mid encodes a monotone map [m_] -> [n_]; in the opposite category
        # it points n_ -> m_ and acts on rows by the horizontal action
        level_maps = {}
        for q in range(k + 1):
            col = S.column_sset(bx, q)
            level_maps[q] = S.monotone_action(col, vals, m_, n_)
        mors[mid] = S.SSetMap(obs[n_], obs[m_], level_maps)
    dg = SSetDiagram(shape, obs, mors)
    issues = sset_diagram_violations(dg)
    assert not issues, issues[:3]
    return dg


def bk_vs_diagonal_evidence(bx, d):
    """Homology comparison of both colimits of the rows with the diagonal."""
    dg = row_diagram(bx)
    diag = S.diagonal(bx)
    k = bx.k
    return S.weq_evidence_pair(bk_colim(dg, k), diag, d) and S.weq_evidence_pair(
        dual_bk_colim(dg, k), diag, d
    )
