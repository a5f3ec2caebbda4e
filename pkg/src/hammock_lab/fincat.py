"""Finite categories, functors, diagrams of categories, and basic constructions.

Objects and morphisms are identified by opaque hashable ids (strings in
files, tuples for constructed categories).  Composition is a total table
over composable pairs; every axiom is checked exhaustively.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field


class CategoryError(ValueError):
    """Input data violates the category (or functor) axioms."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True)
class FinCat:
    """A finite category given by explicit sets and a composition table.

    ``morphisms`` maps morphism id -> (source object, target object).
    ``compose_table`` maps (g, f) -> g∘f for composable pairs (f applied
    first).
    """

    objects: frozenset
    morphisms: dict
    identity: dict
    compose_table: dict

    def src(self, f):
        return self.morphisms[f][0]

    def dst(self, f):
        return self.morphisms[f][1]

    def id_of(self, a):
        return self.identity[a]

    def is_identity(self, f):
        return self.identity[self.src(f)] == f

    def compose(self, g, f):
        """Return g∘f (f applied first)."""
        return self.compose_table[(g, f)]

    def compose_path(self, fs, at=None):
        """Compose a left-to-right path (f1, f2, ...) into f_n∘...∘f1.

        ``at`` names the object for the empty path.
        """
        fs = tuple(fs)
        if not fs:
            if at is None:
                raise ValueError("empty path needs an object")
            return self.identity[at]
        acc = fs[0]
        for f in fs[1:]:
            acc = self.compose(f, acc)
        return acc

    def hom(self, a, b):
        return sorted(
            (f for f, (s, t) in self.morphisms.items() if s == a and t == b),
            key=repr,
        )

    def sorted_objects(self):
        return sorted(self.objects, key=repr)

    def sorted_morphisms(self):
        return sorted(self.morphisms, key=repr)

    def is_iso(self, f):
        a, b = self.morphisms[f]
        for g in self.hom(b, a):
            if (
                self.compose(g, f) == self.identity[a]
                and self.compose(f, g) == self.identity[b]
            ):
                return True
        return False

    def isos(self):
        return frozenset(f for f in self.morphisms if self.is_iso(f))

    def initial_object(self):
        for a in self.sorted_objects():
            if all(len(self.hom(a, b)) == 1 for b in self.objects):
                return a
        return None

    def terminal_object(self):
        for a in self.sorted_objects():
            if all(len(self.hom(b, a)) == 1 for b in self.objects):
                return a
        return None


def category_violations(objects, morphisms, identity, compose_table):
    """Exhaustively check the category axioms; return a list of messages."""
    issues = []
    objects = set(objects)
    for f, (s, t) in morphisms.items():
        if s not in objects or t not in objects:
            issues.append(f"dangling source/target id on morphism {f!r}")
    for a in objects:
        i = identity.get(a)
        if i is None or i not in morphisms:
            issues.append(f"missing identity for object {a!r}")
        elif morphisms[i] != (a, a):
            issues.append(f"identity of {a!r} is not an endomorphism")
    if issues:
        return issues
    for (g, f), h in compose_table.items():
        if g not in morphisms or f not in morphisms or h not in morphisms:
            issues.append(f"unknown morphism id in table entry ({g!r}, {f!r})")
            continue
        if morphisms[f][1] != morphisms[g][0]:
            issues.append(f"non-composable pair in table: ({g!r}, {f!r})")
        elif (morphisms[h][0], morphisms[h][1]) != (
            morphisms[f][0],
            morphisms[g][1],
        ):
            issues.append(f"composite of ({g!r}, {f!r}) has wrong endpoints")
    for f, (s, t) in morphisms.items():
        for g, (s2, t2) in morphisms.items():
            if t == s2 and (g, f) not in compose_table:
                issues.append(f"missing table entry for ({g!r}, {f!r})")
    if issues:
        return issues
    for f, (s, t) in morphisms.items():
        if compose_table[(f, identity[s])] != f:
            issues.append(f"identity law fails: {f!r}∘id != {f!r}")
        if compose_table[(identity[t], f)] != f:
            issues.append(f"identity law fails: id∘{f!r} != {f!r}")
    for f in morphisms:
        for g in morphisms:
            if morphisms[f][1] != morphisms[g][0]:
                continue
            gf = compose_table[(g, f)]
            for h in morphisms:
                if morphisms[g][1] != morphisms[h][0]:
                    continue
                if compose_table[(h, gf)] != compose_table[
                    (compose_table[(h, g)], f)
                ]:
                    issues.append(
                        f"associativity fails on ({h!r}, {g!r}, {f!r})"
                    )
    return issues


def validate_category(objects, morphisms, identity, compose_table):
    """Build a validated FinCat; raise CategoryError on any axiom failure."""
    issues = category_violations(objects, morphisms, identity, compose_table)
    if issues:
        raise CategoryError(issues)
    return FinCat(
        frozenset(objects), dict(morphisms), dict(identity), dict(compose_table)
    )


def build_category(objects, morphisms, identity, composites):
    """Complete a partial composition table (identity entries added) and validate.

    ``composites`` holds entries for pairs of non-identity morphisms; identity
    composites are filled in automatically.
    """
    table = dict(composites)
    for f, (s, t) in morphisms.items():
        table[(f, identity[s])] = f
        table[(identity[t], f)] = f
    return validate_category(objects, morphisms, identity, table)


def opposite(cat):
    """The opposite category: sources and targets swapped, table reversed."""
    morphisms = {f: (t, s) for f, (s, t) in cat.morphisms.items()}
    table = {(f, g): h for (g, f), h in cat.compose_table.items()}
    return FinCat(cat.objects, morphisms, dict(cat.identity), table)


@dataclass(frozen=True)
class Functor:
    source: FinCat
    target: FinCat
    object_map: dict
    morphism_map: dict

    def on_obj(self, a):
        return self.object_map[a]

    def on_mor(self, f):
        return self.morphism_map[f]


def functor_violations(u):
    issues = []
    for a in u.source.objects:
        if u.object_map.get(a) not in u.target.objects:
            issues.append(f"object {a!r} not mapped into target")
    for f, (s, t) in u.source.morphisms.items():
        uf = u.morphism_map.get(f)
        if uf not in u.target.morphisms:
            issues.append(f"morphism {f!r} not mapped into target")
            continue
        if u.target.morphisms[uf] != (u.object_map[s], u.object_map[t]):
            issues.append(f"functor breaks source/target on {f!r}")
    if issues:
        return issues
    for a in u.source.objects:
        if u.morphism_map[u.source.identity[a]] != u.target.identity[
            u.object_map[a]
        ]:
            issues.append(f"functor breaks identity at {a!r}")
    for (g, f), h in u.source.compose_table.items():
        if u.target.compose(u.morphism_map[g], u.morphism_map[f]) != u.morphism_map[h]:
            issues.append(f"functor breaks composition on ({g!r}, {f!r})")
    return issues


def validate_functor(u):
    issues = functor_violations(u)
    if issues:
        raise CategoryError(issues)
    return u


def identity_functor(cat):
    return Functor(
        cat,
        cat,
        {a: a for a in cat.objects},
        {f: f for f in cat.morphisms},
    )


def compose_functors(v, u):
    """v∘u (u applied first)."""
    return Functor(
        u.source,
        v.target,
        {a: v.object_map[u.object_map[a]] for a in u.source.objects},
        {f: v.morphism_map[u.morphism_map[f]] for f in u.source.morphisms},
    )


def opposite_functor(u):
    return Functor(opposite(u.source), opposite(u.target), u.object_map, u.morphism_map)


def is_isomorphism_of_categories(u):
    """Bijective on objects and on morphisms (and already a functor)."""
    if functor_violations(u):
        return False
    return len(set(u.object_map.values())) == len(u.target.objects) and len(
        set(u.morphism_map.values())
    ) == len(u.target.morphisms)


def functors_between(source, target):
    """Enumerate all functors source -> target (desk scale only)."""
    objs = source.sorted_objects()
    nonid = [f for f in source.sorted_morphisms() if not source.is_identity(f)]
    out = []
    for obj_images in itertools.product(target.sorted_objects(), repeat=len(objs)):
        omap = dict(zip(objs, obj_images))
        pools = []
        ok = True
        for f in nonid:
            s, t = source.morphisms[f]
            pool = target.hom(omap[s], omap[t])
            if not pool:
                ok = False
                break
            pools.append(pool)
        if not ok:
            continue
        for mor_images in itertools.product(*pools):
            mmap = dict(zip(nonid, mor_images))
            for a in objs:
                mmap[source.identity[a]] = target.identity[omap[a]]
            u = Functor(source, target, omap, mmap)
            if not functor_violations(u):
                out.append(u)
    return out


def nerve(cat, k):
    """Nerve truncated at level k: n-simplices are composable n-chains.

    Level-0 simplices are object ids; an n-simplex is the tuple
    (f1, ..., fn) with dst(f_i) = src(f_{i+1}).
    """
    from .sset import TruncSSet

    levels = [list(cat.sorted_objects())]
    for n in range(1, k + 1):
        chains = []
        if n == 1:
            chains = [(f,) for f in cat.sorted_morphisms()]
        else:
            for chain in levels[n - 1]:
                for f in cat.sorted_morphisms():
                    if cat.src(f) == cat.dst(chain[-1]):
                        chains.append(chain + (f,))
        levels.append(chains)

    faces = {}
    degens = {}
    for n in range(1, k + 1):
        for i in range(n + 1):
            fmap = {}
            for chain in levels[n]:
                if n == 1:
                    f = chain[0]
                    fmap[chain] = cat.dst(f) if i == 0 else cat.src(f)
                elif i == 0:
                    fmap[chain] = chain[1:]
                elif i == n:
                    fmap[chain] = chain[:-1]
                else:
                    merged = cat.compose(chain[i], chain[i - 1])
                    fmap[chain] = chain[: i - 1] + (merged,) + chain[i + 1 :]
            faces[(n, i)] = fmap
    for n in range(k):
        for i in range(n + 1):
            smap = {}
            for chain in levels[n]:
                if n == 0:
                    smap[chain] = (cat.identity[chain],)
                else:
                    obj = cat.src(chain[0]) if i == 0 else cat.dst(chain[i - 1])
                    smap[chain] = chain[:i] + (cat.identity[obj],) + chain[i:]
            degens[(n, i)] = smap
    return TruncSSet(k, levels, faces, degens)


def nerve_functor_map(u, k):
    """The map of nerves induced by a functor, as an SSetMap."""
    from .sset import SSetMap

    ns, nt = nerve(u.source, k), nerve(u.target, k)
    level_maps = {0: {a: u.object_map[a] for a in ns.level(0)}}
    for n in range(1, k + 1):
        level_maps[n] = {
            chain: tuple(u.morphism_map[f] for f in chain) for chain in ns.level(n)
        }
    return SSetMap(ns, nt, level_maps)


def comma_under(u, b):
    """The comma category (b ↓ u): objects are pairs (a, f: b -> u a)."""
    tgt, src = u.target, u.source
    objs = []
    for a in src.sorted_objects():
        for f in tgt.hom(b, u.object_map[a]):
            objs.append((a, f))
    morphisms = {}
    identity = {}
    composites = {}
    for (a, f) in objs:
        for (a2, f2) in objs:
            for g in src.hom(a, a2):
                if tgt.compose(u.morphism_map[g], f) == f2:
                    mid = ((a, f), (a2, f2), g)
                    morphisms[mid] = ((a, f), (a2, f2))
    for (a, f) in objs:
        identity[(a, f)] = ((a, f), (a, f), src.identity[a])
    for m1, (s1, t1) in morphisms.items():
        for m2, (s2, t2) in morphisms.items():
            if t1 == s2:
                g = src.compose(m2[2], m1[2])
                composites[(m2, m1)] = (s1, t2, g)
    return validate_category(objs, morphisms, identity, composites)


def comma_over(u, b):
    """The comma category (u ↓ b): objects are pairs (a, f: u a -> b)."""
    tgt, src = u.target, u.source
    objs = []
    for a in src.sorted_objects():
        for f in tgt.hom(u.object_map[a], b):
            objs.append((a, f))
    morphisms = {}
    identity = {}
    composites = {}
    for (a, f) in objs:
        for (a2, f2) in objs:
            for g in src.hom(a, a2):
                if tgt.compose(f2, u.morphism_map[g]) == f:
                    mid = ((a, f), (a2, f2), g)
                    morphisms[mid] = ((a, f), (a2, f2))
    for (a, f) in objs:
        identity[(a, f)] = ((a, f), (a, f), src.identity[a])
    for m1, (s1, t1) in morphisms.items():
        for m2, (s2, t2) in morphisms.items():
            if t1 == s2:
                g = src.compose(m2[2], m1[2])
                composites[(m2, m1)] = (s1, t2, g)
    return validate_category(objs, morphisms, identity, composites)


@dataclass(frozen=True)
class CatDiagram:
    """A strict functor shape -> Cat, given objectwise and morphismwise."""

    shape: FinCat
    ob: dict  # shape object -> FinCat
    mor: dict  # shape morphism id -> Functor

    def value_cat(self, c):
        return self.ob[c]

    def value_fun(self, f):
        return self.mor[f]


def cat_diagram_violations(d):
    issues = []
    for f, (s, t) in d.shape.morphisms.items():
        u = d.mor.get(f)
        if u is None:
            issues.append(f"no functor assigned to {f!r}")
            continue
        if u.source is not d.ob[s] and u.source != d.ob[s]:
            issues.append(f"functor at {f!r} has wrong source")
        if u.target is not d.ob[t] and u.target != d.ob[t]:
            issues.append(f"functor at {f!r} has wrong target")
        issues.extend(functor_violations(u))
    if issues:
        return issues
    for c in d.shape.objects:
        u = d.mor[d.shape.identity[c]]
        ident = identity_functor(d.ob[c])
        if u.object_map != ident.object_map or u.morphism_map != ident.morphism_map:
            issues.append(f"identity of {c!r} is not the identity functor")
    for (g, f), h in d.shape.compose_table.items():
        comp = compose_functors(d.mor[g], d.mor[f])
        if (
            comp.object_map != d.mor[h].object_map
            or comp.morphism_map != d.mor[h].morphism_map
        ):
            issues.append(f"diagram not strictly functorial on ({g!r}, {f!r})")
    return issues


def validate_cat_diagram(d):
    issues = cat_diagram_violations(d)
    if issues:
        raise CategoryError(issues)
    return d


def restrict_cat_diagram(d, u):
    """Precompose a Cat-diagram on u's target with the functor u."""
    return CatDiagram(
        u.source,
        {a: d.ob[u.object_map[a]] for a in u.source.objects},
        {f: d.mor[u.morphism_map[f]] for f in u.source.morphisms},
    )


def lax_colim(d):
    """Grothendieck lax colimit; returns (category, projection functor).

    Objects are pairs (c, x); a morphism (c', x') -> (c, x) is a pair
    (f: c' -> c, g: X(f)(x') -> x).
    """
    shape = d.shape
    objs = [
        (c, x)
        for c in shape.sorted_objects()
        for x in d.ob[c].sorted_objects()
    ]
    morphisms = {}
    for (c1, x1) in objs:
        for (c2, x2) in objs:
            for f in shape.hom(c1, c2):
                fx1 = d.mor[f].object_map[x1]
                for g in d.ob[c2].hom(fx1, x2):
                    mid = ((c1, x1), (c2, x2), (f, g))
                    morphisms[mid] = ((c1, x1), (c2, x2))
    identity = {
        (c, x): ((c, x), (c, x), (shape.identity[c], d.ob[c].identity[x]))
        for (c, x) in objs
    }
    composites = {}
    for m1, (s1, t1) in morphisms.items():
        (c1, x1), (c2, x2), (f1, g1) = m1
        for m2, (s2, t2) in morphisms.items():
            if t1 != s2:
                continue
            (_, _), (c3, x3), (f2, g2) = m2
            f = shape.compose(f2, f1)
            fib = d.ob[c3]
            g = fib.compose(g2, d.mor[f2].morphism_map[g1])
            composites[(m2, m1)] = (s1, t2, (f, g))
    cat = validate_category(objs, morphisms, identity, composites)
    proj = Functor(
        cat,
        shape,
        {o: o[0] for o in objs},
        {m: m[2][0] for m in morphisms},
    )
    return cat, proj


def oplax_colim(d):
    """Grothendieck oplax colimit; projection lands in the opposite shape.

    A morphism (c', x') -> (c, x) is a pair (f: c -> c', g: x' -> X(f)(x)).
    """
    shape = d.shape
    objs = [
        (c, x)
        for c in shape.sorted_objects()
        for x in d.ob[c].sorted_objects()
    ]
    morphisms = {}
    for (c1, x1) in objs:
        for (c2, x2) in objs:
            for f in shape.hom(c2, c1):
                fx2 = d.mor[f].object_map[x2]
                for g in d.ob[c1].hom(x1, fx2):
                    mid = ((c1, x1), (c2, x2), (f, g))
                    morphisms[mid] = ((c1, x1), (c2, x2))
    identity = {
        (c, x): ((c, x), (c, x), (shape.identity[c], d.ob[c].identity[x]))
        for (c, x) in objs
    }
    composites = {}
    for m1, (s1, t1) in morphisms.items():
        (c1, x1), (c2, x2), (f1, g1) = m1
        for m2, (s2, t2) in morphisms.items():
            if t1 != s2:
                continue
            (_, _), (c3, x3), (f2, g2) = m2
            f = shape.compose(f1, f2)
            fib = d.ob[c1]
            g = fib.compose(d.mor[f1].morphism_map[g2], g1)
            composites[(m2, m1)] = (s1, t2, (f, g))
    cat = validate_category(objs, morphisms, identity, composites)
    proj = Functor(
        cat,
        opposite(shape),
        {o: o[0] for o in objs},
        {m: m[2][0] for m in morphisms},
    )
    return cat, proj


def check_cofinality_pullback(u, d):
    """Check the two strict pullback squares for a functor u and diagram d.

    Compares lax_colim(d∘u) with the pullback of lax_colim(d) -> B along u
    (and dually for the oplax square along opposite(u)); returns a dict of
    booleans.
    """
    du = restrict_cat_diagram(d, u)

    lax_u, _ = lax_colim(du)
    lax_b, proj_b = lax_colim(d)
    ok_lax = _pullback_comparison(u, lax_u, lax_b, proj_b, u.source)

    oplax_u, _ = oplax_colim(du)
    oplax_b, oproj_b = oplax_colim(d)
    ok_oplax = _pullback_comparison(
        opposite_functor(u), oplax_u, oplax_b, oproj_b, opposite(u.source)
    )
    return {"lax": ok_lax, "oplax": ok_oplax}


def _pullback_comparison(u, gr_u, gr_b, proj_b, base):
    # Pullback of proj_b along u: objects (a, y) with u(a) = proj(y),
    # morphisms (g, h) with u(g) = proj(h).
    pb_objs = {
        (a, y)
        for a in base.objects
        for y in gr_b.objects
        if u.object_map[a] == proj_b.object_map[y]
    }
    pb_mors = {
        (g, h)
        for g in base.morphisms
        for h in gr_b.morphisms
        if u.morphism_map[g] == proj_b.morphism_map[h]
        and (base.morphisms[g][0], gr_b.morphisms[h][0]) in pb_objs
        and (base.morphisms[g][1], gr_b.morphisms[h][1]) in pb_objs
    }
    # Canonical comparison from the Grothendieck construction of d∘u:
    # (a, x) -> (a, (u a, x)); ((a,x),(a',x'),(g,m)) -> (g, ((u a, x), (u a', x'), (u g, m))).
    if len(gr_u.objects) != len(pb_objs) or len(gr_u.morphisms) != len(pb_mors):
        return False
    for (a, x) in gr_u.objects:
        if (a, (u.object_map[a], x)) not in pb_objs:
            return False
    for mid in gr_u.morphisms:
        (a, x), (a2, x2), (g, m) = mid
        image = (
            g,
            (
                (u.object_map[a], x),
                (u.object_map[a2], x2),
                (u.morphism_map[g], m),
            ),
        )
        if image not in pb_mors:
            return False
    return True


def monotone_maps(m, n):
    """All monotone maps [m] -> [n] as value tuples."""
    return [
        tuple(vals)
        for vals in itertools.combinations_with_replacement(range(n + 1), m + 1)
    ]


def truncated_simplex_category(k):
    """The full subcategory of the simplex category on [0], ..., [k]."""
    objs = list(range(k + 1))
    morphisms = {}
    for m in objs:
        for n in objs:
            for vals in monotone_maps(m, n):
                morphisms[(m, n, vals)] = (m, n)
    identity = {n: (n, n, tuple(range(n + 1))) for n in objs}
    composites = {}
    for f, (mf, nf) in morphisms.items():
        for g, (mg, ng) in morphisms.items():
            if nf == mg:
                vals = tuple(g[2][v] for v in f[2])
                composites[(g, f)] = (mf, ng, vals)
    return validate_category(objs, morphisms, identity, composites)


def has_left_adjoint(u):
    """True iff every comma (b ↓ u) has an initial object."""
    return all(
        comma_under(u, b).initial_object() is not None for b in u.target.objects
    )


def has_right_adjoint(u):
    """True iff every comma (u ↓ b) has a terminal object."""
    return all(
        comma_over(u, b).terminal_object() is not None for b in u.target.objects
    )
