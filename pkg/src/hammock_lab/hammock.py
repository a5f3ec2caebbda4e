"""Hammocks, reduction, hammock hom-spaces, and the special-hammock category.

A hammock of width w and length n between A and B is stored as a frozen
value: a tuple of w+1 rows (each a tuple of n+1 objects starting at A and
ending at B), a direction per arrow column ('r' or 'l'), the horizontal
arrows per row per column, and the vertical arrows per object column per
adjacent row pair.  The relative category is passed alongside, never
stored inside the value, so hammocks stay hashable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import sset as S
from .fincat import build_category, Functor
from .modelcat import pullback_of, pushout_of


@dataclass(frozen=True)
class Hammock:
    a: object
    b: object
    directions: tuple  # length n of 'r' / 'l'
    rows: tuple  # w+1 rows, each a tuple of n+1 objects
    horizontals: tuple  # w+1 tuples of n morphism ids
    verticals: tuple  # w tuples of n+1 morphism ids (row i -> row i+1)

    @property
    def width(self):
        return len(self.rows) - 1

    @property
    def length(self):
        return len(self.directions)


def hammock_violations(rel, h):
    cat = rel.cat
    weq = rel.weq
    issues = []
    n = h.length
    w = h.width
    if len(h.rows) != w + 1 or len(h.horizontals) != w + 1 or len(
        h.verticals
    ) != w:
        issues.append("row/arrow counts inconsistent")
        return issues
    if n == 0 and h.a != h.b:
        issues.append("length 0 requires equal endpoints")
    for i, row in enumerate(h.rows):
        if len(row) != n + 1:
            issues.append(f"row {i} has wrong length")
            return issues
        if row[0] != h.a or row[-1] != h.b:
            issues.append(f"row {i} does not run from A to B")
    for i, harr in enumerate(h.horizontals):
        if len(harr) != n:
            issues.append(f"horizontal row {i} has wrong length")
            return issues
        for j, f in enumerate(harr):
            if f not in cat.morphisms:
                issues.append(f"unknown morphism {f!r} at row {i} column {j}")
                continue
            if h.directions[j] == "r":
                expect = (h.rows[i][j], h.rows[i][j + 1])
            else:
                expect = (h.rows[i][j + 1], h.rows[i][j])
            if cat.morphisms[f] != expect:
                issues.append(f"mistyped horizontal at row {i} column {j}")
            if h.directions[j] == "l" and f not in weq:
                issues.append(
                    f"leftward arrow at row {i} column {j} is not a weak "
                    f"equivalence"
                )
    for i, varr in enumerate(h.verticals):
        if len(varr) != n + 1:
            issues.append(f"vertical row pair {i} has wrong length")
            return issues
        for j, v in enumerate(varr):
            if v not in cat.morphisms:
                issues.append(f"unknown vertical {v!r} at column {j}")
                continue
            if cat.morphisms[v] != (h.rows[i][j], h.rows[i + 1][j]):
                issues.append(f"mistyped vertical at row pair {i} column {j}")
            if v not in weq:
                issues.append(
                    f"vertical arrow at row pair {i} column {j} is not a "
                    f"weak equivalence"
                )
            if j in (0, n) and not cat.is_identity(v):
                issues.append(
                    f"endpoint vertical at row pair {i} column {j} must be "
                    f"an identity"
                )
    if issues:
        return issues
    # interior squares commute
    for i in range(w):
        for j in range(n):
            hu = h.horizontals[i][j]
            hd = h.horizontals[i + 1][j]
            vl = h.verticals[i][j]
            vr = h.verticals[i][j + 1]
            if h.directions[j] == "r":
                if cat.compose(vr, hu) != cat.compose(hd, vl):
                    issues.append(f"square at row pair {i} column {j} fails")
            else:
                if cat.compose(vl, hu) != cat.compose(hd, vr):
                    issues.append(f"square at row pair {i} column {j} fails")
    return issues


def validate_hammock(rel, h):
    return hammock_violations(rel, h)


def is_reduced(rel, h):
    cat = rel.cat
    for j in range(h.length):
        if all(cat.is_identity(h.horizontals[i][j]) for i in range(h.width + 1)):
            return False
    for j in range(h.length - 1):
        if h.directions[j] == h.directions[j + 1]:
            return False
    return True


def _drop_column(h, j):
    """Remove arrow column j, merging equal object columns j and j+1."""
    rows = tuple(r[: j + 1] + r[j + 2 :] for r in h.rows)
    horiz = tuple(hr[:j] + hr[j + 1 :] for hr in h.horizontals)
    verts = tuple(vr[: j + 1] + vr[j + 2 :] for vr in h.verticals)
    dirs = h.directions[:j] + h.directions[j + 1 :]
    return Hammock(h.a, h.b, dirs, rows, horiz, verts)


def _merge_columns(rel, h, j):
    """Compose same-direction arrow columns j and j+1."""
    cat = rel.cat
    if h.directions[j] == "r":
        comp = tuple(
            cat.compose(h.horizontals[i][j + 1], h.horizontals[i][j])
            for i in range(h.width + 1)
        )
    else:
        comp = tuple(
            cat.compose(h.horizontals[i][j], h.horizontals[i][j + 1])
            for i in range(h.width + 1)
        )
    rows = tuple(r[: j + 1] + r[j + 2 :] for r in h.rows)
    horiz = tuple(
        hr[:j] + (comp[i],) + hr[j + 2 :] for i, hr in enumerate(h.horizontals)
    )
    verts = tuple(vr[: j + 1] + vr[j + 2 :] for vr in h.verticals)
    dirs = h.directions[:j] + h.directions[j + 1 :]
    return Hammock(h.a, h.b, dirs, rows, horiz, verts)


def reduce_hammock(rel, h):
    """Delete all-identity columns, merge same-direction neighbours.

    Leftmost applicable step first, iterated to a fixpoint; this gives a
    canonical form.
    """
    cat = rel.cat
    while True:
        target = None
        for j in range(h.length):
            if all(
                cat.is_identity(h.horizontals[i][j])
                for i in range(h.width + 1)
            ):
                target = ("drop", j)
                break
        if target is None:
            for j in range(h.length - 1):
                if h.directions[j] == h.directions[j + 1]:
                    target = ("merge", j)
                    break
        if target is None:
            return h
        kind, j = target
        h = _drop_column(h, j) if kind == "drop" else _merge_columns(rel, h, j)


def empty_hammock(rel, a, w):
    rows = tuple((a,) for _ in range(w + 1))
    verts = tuple((rel.cat.identity[a],) for _ in range(w))
    return Hammock(a, a, (), rows, tuple(() for _ in range(w + 1)), verts)


def _column_states(rel, objs):
    """Object columns with chosen weak-equivalence verticals.

    objs is the list of candidate objects; yields (column, verticals).
    """
    cat = rel.cat
    w1 = len(objs)
    for col in itertools.product(*objs):
        pools = []
        ok = True
        for i in range(len(col) - 1):
            pool = [v for v in cat.hom(col[i], col[i + 1]) if v in rel.weq]
            if not pool:
                ok = False
                break
            pools.append(pool)
        if not ok:
            continue
        for verts in itertools.product(*pools):
            yield col, verts


def _arrow_fillings(rel, s, t, direction):
    """Horizontal arrow columns between states with commuting squares."""
    cat = rel.cat
    scol, svert = s
    tcol, tvert = t
    w = len(scol) - 1
    pools = []
    for i in range(w + 1):
        if direction == "r":
            pool = cat.hom(scol[i], tcol[i])
        else:
            pool = [f for f in cat.hom(tcol[i], scol[i]) if f in rel.weq]
        if not pool:
            return
        pools.append(pool)
    for arrows in itertools.product(*pools):
        ok = True
        for i in range(w):
            if direction == "r":
                if cat.compose(tvert[i], arrows[i]) != cat.compose(
                    arrows[i + 1], svert[i]
                ):
                    ok = False
                    break
            else:
                if cat.compose(svert[i], arrows[i]) != cat.compose(
                    arrows[i + 1], tvert[i]
                ):
                    ok = False
                    break
        if ok:
            yield arrows


def enumerate_reduced_hammocks(rel, a, b, w, max_length):
    """All reduced hammocks of the given width with length <= max_length."""
    cat = rel.cat
    out = []
    if a == b:
        out.append(empty_hammock(rel, a, w))
    end_a = (
        (a,) * (w + 1),
        tuple(cat.identity[a] for _ in range(w)),
    )
    end_b = (
        (b,) * (w + 1),
        tuple(cat.identity[b] for _ in range(w)),
    )
    interior = list(
        _column_states(rel, [cat.sorted_objects() for _ in range(w + 1)])
    )

    def extend(cols, arrows, dirs):
        n = len(dirs)
        if n >= 1 and cols[-1] == end_b:
            h = Hammock(
                a,
                b,
                tuple(dirs),
                tuple(
                    tuple(cols[c][0][i] for c in range(n + 1))
                    for i in range(w + 1)
                ),
                tuple(
                    tuple(arrows[c][i] for c in range(n)) for i in range(w + 1)
                ),
                tuple(
                    tuple(cols[c][1][i] for c in range(n + 1))
                    for i in range(w)
                ),
            )
            if is_reduced(rel, h):
                out.append(h)
        if n == max_length:
            return
        last_dir = dirs[-1] if dirs else None
        for direction in ("r", "l"):
            if direction == last_dir:
                continue
            candidates = (
                interior + [end_b]
                if n < max_length - 1
                else [end_b]
            )
            for t in candidates:
                for filling in _arrow_fillings(rel, cols[-1], t, direction):
                    extend(cols + [t], arrows + [filling], dirs + [direction])

    extend([end_a], [], [])
    # canonical order and dedup (end_b can coincide with an interior state)
    seen = set()
    uniq = []
    for h in sorted(out, key=repr):
        if h not in seen:
            seen.add(h)
            uniq.append(h)
    return uniq


def _delete_row(rel, h, i):
    cat = rel.cat
    w = h.width
    rows = h.rows[:i] + h.rows[i + 1 :]
    horiz = h.horizontals[:i] + h.horizontals[i + 1 :]
    if i == 0:
        verts = h.verticals[1:]
    elif i == w:
        verts = h.verticals[:-1]
    else:
        merged = tuple(
            cat.compose(h.verticals[i][j], h.verticals[i - 1][j])
            for j in range(h.length + 1)
        )
        verts = h.verticals[: i - 1] + (merged,) + h.verticals[i + 1 :]
    return Hammock(h.a, h.b, h.directions, rows, horiz, verts)


def _duplicate_row(rel, h, i):
    cat = rel.cat
    rows = h.rows[: i + 1] + (h.rows[i],) + h.rows[i + 1 :]
    horiz = h.horizontals[: i + 1] + (h.horizontals[i],) + h.horizontals[i + 1 :]
    idvert = tuple(cat.identity[o] for o in h.rows[i])
    verts = h.verticals[:i] + (idvert,) + h.verticals[i:]
    return Hammock(h.a, h.b, h.directions, rows, horiz, verts)


def hammock_hom_space(rel, a, b, k, max_length):
    """The hom-space of the hammock localisation, truncated at width k.

    Level j holds the reduced hammocks of width j and length <= max_length;
    faces delete a row and reduce, degeneracies duplicate a row.
    """
    levels = [
        enumerate_reduced_hammocks(rel, a, b, j, max_length)
        for j in range(k + 1)
    ]
    faces = {}
    degens = {}
    for n in range(1, k + 1):
        for i in range(n + 1):
            faces[(n, i)] = {
                h: reduce_hammock(rel, _delete_row(rel, h, i))
                for h in levels[n]
            }
    for n in range(k):
        for i in range(n + 1):
            degens[(n, i)] = {h: _duplicate_row(rel, h, i) for h in levels[n]}
    meta = {
        "max_length": max_length,
        "complete_up_to_length": True,
        "pi0_stable": None,
    }
    out = S.TruncSSet(k, levels, faces, degens, meta)
    return out


def pi0_length_stability(rel, a, b, max_length):
    """Whether pi0 of the width-0 graph is unchanged from L-1 to L."""
    if max_length == 0:
        return False
    small = hammock_hom_space(rel, a, b, 1, max_length - 1)
    big = hammock_hom_space(rel, a, b, 1, max_length)
    return len(S.pi0(small)[0]) == len(S.pi0(big)[0])


def widen_hammock(rel, h, w):
    """A width-0 hammock repeated over w+1 rows with identity verticals."""
    assert h.width == 0
    out = h
    for _ in range(w):
        out = _duplicate_row(rel, out, 0)
    return out


def single_column_hammock(rel, f, direction="r"):
    cat = rel.cat
    if direction == "r":
        a, b = cat.morphisms[f]
    else:
        b, a = cat.morphisms[f]
    return Hammock(a, b, (direction,), ((a, b),), ((f,),), tuple())


def concat_hammocks(h1, h2):
    assert h1.b == h2.a and h1.width == h2.width
    rows = tuple(r1 + r2[1:] for r1, r2 in zip(h1.rows, h2.rows))
    horiz = tuple(a1 + a2 for a1, a2 in zip(h1.horizontals, h2.horizontals))
    verts = tuple(v1 + v2[1:] for v1, v2 in zip(h1.verticals, h2.verticals))
    return Hammock(h1.a, h2.b, h1.directions + h2.directions, rows, horiz, verts)


def compose_hammocks(rel, h1, h2):
    """Concatenate then reduce; length-0 hammocks are strict identities."""
    if h1.b != h2.a:
        raise ValueError("endpoint mismatch")
    if h1.width != h2.width:
        raise ValueError("width mismatch")
    return reduce_hammock(rel, concat_hammocks(h1, h2))


def special_hammocks(m, a, b):
    """Width-0 length-3 hammocks with pattern (l, r, l).

    The leftmost arrow must be a trivial fibration and the rightmost a
    trivial cofibration; encoded as (C1, C2, p, f, j).
    """
    cat = m.cat
    out = []
    for c1 in cat.sorted_objects():
        for p in cat.hom(c1, a):
            if p not in m.triv_fib:
                continue
            for c2 in cat.sorted_objects():
                for j in cat.hom(b, c2):
                    if j not in m.triv_cof:
                        continue
                    for f in cat.hom(c1, c2):
                        out.append((c1, c2, p, f, j))
    return out


def special_to_hammock(m, obj):
    c1, c2, p, f, j = obj
    a = m.cat.dst(p)
    b = m.cat.src(j)
    return Hammock(
        a, b, ("l", "r", "l"), ((a, c1, c2, b),), ((p, f, j),), tuple()
    )


def t_category(m, a, b):
    """The category of special hammocks from a to b.

    Morphisms are width-1 special hammocks; composition pastes vertically.
    """
    cat = m.cat
    objs = special_hammocks(m, a, b)
    morphisms = {}
    identity = {}
    composites = {}
    for o1 in objs:
        for o2 in objs:
            c1, c2, p, f, j = o1
            d1, d2, q, g, l = o2
            for v1 in cat.hom(c1, d1):
                if v1 not in m.weq:
                    continue
                if cat.compose(q, v1) != p:
                    continue
                for v2 in cat.hom(c2, d2):
                    if v2 not in m.weq:
                        continue
                    if cat.compose(v2, f) != cat.compose(g, v1):
                        continue
                    if cat.compose(v2, j) != l:
                        continue
                    morphisms[(o1, o2, (v1, v2))] = (o1, o2)
    for o in objs:
        identity[o] = (o, o, (cat.identity[o[0]], cat.identity[o[1]]))
    for mid1, (s1, t1) in morphisms.items():
        for mid2, (s2, t2) in morphisms.items():
            if t1 != s2:
                continue
            v1 = cat.compose(mid2[2][0], mid1[2][0])
            v2 = cat.compose(mid2[2][1], mid1[2][1])
            composites[(mid2, mid1)] = (s1, t2, (v1, v2))
    return build_category(objs, morphisms, identity, composites)


def _pullback_act(m, f, obj):
    """Pull the left trivial fibration of a special hammock back along f.

    Returns (new C1, new p, projection q: new C1 -> C1) using the chosen
    pullback; identity choice when f is an identity.
    """
    cat = m.cat
    c1, c2, p, mid, j = obj
    if cat.is_identity(f):
        return c1, p, cat.identity[c1]
    lim = pullback_of(cat, p, f)
    if lim is None:
        raise ValueError("required pullback does not exist")
    c1p = lim["apex"]
    q = lim["legs"]["l"]
    pp = lim["legs"]["r"]
    if pp not in m.triv_fib:
        raise ValueError("pulled-back map is not a trivial fibration")
    return c1p, pp, q


def _pushout_act(m, g, obj):
    cat = m.cat
    c1, c2, p, mid, j = obj
    if cat.is_identity(g):
        return c2, j, cat.identity[c2]
    col = pushout_of(cat, j, g)
    if col is None:
        raise ValueError("required pushout does not exist")
    c2p = col["apex"]
    r = col["legs"]["l"]
    jp = col["legs"]["r"]
    if jp not in m.triv_cof:
        raise ValueError("pushed-out map is not a trivial cofibration")
    return c2p, jp, r


def t_functoriality(m, f, g):
    """The functor T(A,B) -> T(A',B') induced by f: A' -> A, g: B -> B'."""
    cat = m.cat
    a = cat.dst(f)
    ap = cat.src(f)
    b = cat.src(g)
    bp = cat.dst(g)
    src = t_category(m, a, b)
    tgt = t_category(m, ap, bp)
    omap = {}
    witness = {}
    for o in src.objects:
        c1, c2, p, mid, j = o
        c1p, pp, q = _pullback_act(m, f, o)
        c2p, jp, r = _pushout_act(m, g, o)
        new_mid = cat.compose(r, cat.compose(mid, q))
        omap[o] = (c1p, c2p, pp, new_mid, jp)
        witness[o] = (q, r)
    mmap = {}
    for mid_id, (o1, o2) in src.morphisms.items():
        v1, v2 = mid_id[2]
        q1, r1 = witness[o1]
        q2, r2 = witness[o2]
        n1 = _unique_mediator(
            cat,
            omap[o1][0],
            omap[o2][0],
            [
                (q2, cat.compose(v1, q1)),
                (omap[o2][2], omap[o1][2]),
            ],
        )
        # mediator out of the pushout: determined by compatibility with the
        # two injections
        n2 = None
        for cand in cat.hom(omap[o1][1], omap[o2][1]):
            if cat.compose(cand, r1) == cat.compose(r2, v2) and cat.compose(
                cand, omap[o1][4]
            ) == omap[o2][4]:
                n2 = cand
                break
        assert n2 is not None, "pushout mediator missing"
        mmap[mid_id] = (omap[o1], omap[o2], (n1, n2))
    u = Functor(src, tgt, omap, mmap)
    return u


def _unique_mediator(cat, src_obj, dst_obj, equations):
    """Find the morphism satisfying leg equations into a limit apex."""
    for cand in cat.hom(src_obj, dst_obj):
        ok = True
        for leg, target in equations:
            if leg is None:
                continue
            if cat.compose(leg, cand) != target:
                ok = False
                break
        if ok:
            return cand
    raise ValueError("no mediating morphism found")


def nerve_t_to_hom(m, a, b, k, max_length=4):
    """Paste chains of width-1 special hammocks into the hom-space.

    A j-simplex of the nerve of T(A,B) becomes a width-j length-3 hammock
    by stacking the rows along the chain, then reducing.
    """
    from .fincat import nerve

    rel = m.relcat
    t_cat = t_category(m, a, b)
    nv = nerve(t_cat, k)
    hom = hammock_hom_space(rel, a, b, k, max_length)
    level_maps = {}
    # level 0: objects
    level_maps[0] = {
        o: reduce_hammock(rel, special_to_hammock(m, o)) for o in nv.level(0)
    }
    for n in range(1, k + 1):
        lm = {}
        for chain in nv.level(n):
            objs = [t_cat.morphisms[chain[0]][0]]
            vs = []
            for mid in chain:
                objs.append(t_cat.morphisms[mid][1])
                vs.append(mid[2])
            rows = tuple(
                (a, o[0], o[1], b) for o in objs
            )
            horiz = tuple((o[2], o[3], o[4]) for o in objs)
            verts = tuple(
                (
                    m.cat.identity[a],
                    v1,
                    v2,
                    m.cat.identity[b],
                )
                for (v1, v2) in vs
            )
            h = Hammock(a, b, ("l", "r", "l"), rows, horiz, verts)
            lm[chain] = reduce_hammock(rel, h)
        level_maps[n] = lm
    out = S.SSetMap(nv, hom, level_maps)
    issues = S.sset_map_violations(out)
    if issues:
        raise ValueError("; ".join(issues[:3]))
    return out


def special_vs_reduced_evidence(m, a, b, d, k=None, max_length=4):
    if k is None:
        k = d + 1
    return S.weq_evidence(nerve_t_to_hom(m, a, b, k, max_length), d)


def hom_action_map(rel, f, g, hom_src, hom_tgt, k):
    """The map hom(A,B) -> hom(A',B') given f: A' -> A and g: B -> B'.

    Pre-concatenates the single-column hammock of f and post-concatenates
    that of g, widened to the appropriate width, then reduces.
    """
    cat = rel.cat
    level_maps = {}
    for n in range(k + 1):
        lm = {}
        for h in hom_src.level(n):
            pre = widen_hammock(rel, single_column_hammock(rel, f), n)
            post = widen_hammock(rel, single_column_hammock(rel, g), n)
            lm[h] = reduce_hammock(
                rel, concat_hammocks(concat_hammocks(pre, h), post)
            )
        level_maps[n] = lm
    out = S.SSetMap(hom_src, hom_tgt, level_maps)
    issues = S.sset_map_violations(out)
    if issues:
        raise ValueError("; ".join(issues[:3]))
    return out


def naturality_square_check(m, f, g, k, d, max_length=4):
    """Compare the two routes nerve(T(A,B)) -> hom(A',B').

    Returns {"strict": bool, "pi0": bool, "homology": bool}.
    """
    cat = m.cat
    rel = m.relcat
    a, ap = cat.dst(f), cat.src(f)
    b, bp = cat.src(g), cat.dst(g)
    top = nerve_t_to_hom(m, a, b, k, max_length)
    bottom = nerve_t_to_hom(m, ap, bp, k, max_length)
    u = t_functoriality(m, f, g)
    from .fincat import nerve_functor_map

    nerve_u = nerve_functor_map(u, k)
    nerve_u = S.SSetMap(top.source, bottom.source, nerve_u.level_maps)
    hom_map = hom_action_map(rel, f, g, top.target, bottom.target, k)
    route1 = S.compose_maps(hom_map, top)
    route2 = S.compose_maps(bottom, nerve_u)
    strict = all(
        route1.apply(n, sx) == route2.apply(n, sx)
        for n in range(k + 1)
        for sx in top.source.level(n)
    )
    pi0_ok = S.pi0_map(route1) == S.pi0_map(route2)
    hom_ok = S.maps_agree_on_homology(route1, route2, d)
    return {"strict": strict, "pi0": pi0_ok, "homology": hom_ok}
