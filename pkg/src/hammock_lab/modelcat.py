"""Relative categories and brute-force verification of model structures.

All axioms are checked exhaustively: retract diagrams, lifting squares,
2-out-of-3 triples, and factorization tables.  Finite limits and colimits
are found by cone search plus a universality check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .fincat import FinCat


@dataclass(frozen=True)
class RelCat:
    """A category with a distinguished subcategory of weak equivalences."""

    cat: FinCat
    weq: frozenset
    two_out_of_three: bool = False

    def is_weq(self, f):
        return f in self.weq


def relcat_violations(cat, weq):
    issues = []
    for f in weq:
        if f not in cat.morphisms:
            issues.append(f"weq member {f!r} is not a morphism")
    if issues:
        return issues
    for a in cat.objects:
        if cat.identity[a] not in weq:
            issues.append(f"identity of {a!r} missing from weq")
    for (g, f), h in cat.compose_table.items():
        if g in weq and f in weq and h not in weq:
            issues.append(f"weq not closed under composition: ({g!r}, {f!r})")
    return issues


def has_two_out_of_three(cat, weq):
    for (g, f), h in cat.compose_table.items():
        flags = (f in weq, g in weq, h in weq)
        if sum(flags) == 2 and not all(flags):
            return False
    return True


def validate_relcat(cat, weq):
    issues = relcat_violations(cat, weq)
    if issues:
        raise ValueError("; ".join(issues))
    return RelCat(cat, frozenset(weq), has_two_out_of_three(cat, weq))


@dataclass(frozen=True)
class FinDiagram:
    """A finite diagram in a category: labelled nodes and labelled edges."""

    nodes: dict  # node id -> object
    edges: tuple  # tuples (src node, dst node, morphism id)


def _cones(cat, d):
    """All cones over the diagram: (apex, legs dict)."""
    node_ids = sorted(d.nodes, key=repr)
    out = []
    for apex in cat.sorted_objects():
        pools = [cat.hom(apex, d.nodes[n]) for n in node_ids]
        for legs in itertools.product(*pools):
            legmap = dict(zip(node_ids, legs))
            if all(
                cat.compose(f, legmap[s]) == legmap[t] for (s, t, f) in d.edges
            ):
                out.append((apex, legmap))
    return out


def _cocones(cat, d):
    node_ids = sorted(d.nodes, key=repr)
    out = []
    for apex in cat.sorted_objects():
        pools = [cat.hom(d.nodes[n], apex) for n in node_ids]
        for legs in itertools.product(*pools):
            legmap = dict(zip(node_ids, legs))
            if all(
                cat.compose(legmap[t], f) == legmap[s] for (s, t, f) in d.edges
            ):
                out.append((apex, legmap))
    return out


def finite_limit(cat, d):
    """Limit cone by exhaustive search; None when absent."""
    cones = _cones(cat, d)
    for apex, legs in cones:
        universal = True
        for apex2, legs2 in cones:
            mediators = [
                u
                for u in cat.hom(apex2, apex)
                if all(cat.compose(legs[n], u) == legs2[n] for n in legs)
            ]
            if len(mediators) != 1:
                universal = False
                break
        if universal:
            return {"apex": apex, "legs": legs}
    return None


def finite_colimit(cat, d):
    cocones = _cocones(cat, d)
    for apex, legs in cocones:
        universal = True
        for apex2, legs2 in cocones:
            mediators = [
                u
                for u in cat.hom(apex, apex2)
                if all(cat.compose(u, legs[n]) == legs2[n] for n in legs)
            ]
            if len(mediators) != 1:
                universal = False
                break
        if universal:
            return {"apex": apex, "legs": legs}
    return None


def product_of(cat, a, b):
    return finite_limit(cat, FinDiagram({"l": a, "r": b}, ()))


def coproduct_of(cat, a, b):
    return finite_colimit(cat, FinDiagram({"l": a, "r": b}, ()))


def pullback_of(cat, f, g):
    """Pullback of dst-sharing morphisms f: a -> c <- b :g."""
    assert cat.dst(f) == cat.dst(g)
    d = FinDiagram(
        {"l": cat.src(f), "r": cat.src(g), "m": cat.dst(f)},
        (("l", "m", f), ("r", "m", g)),
    )
    return finite_limit(cat, d)


def pushout_of(cat, f, g):
    """Pushout of src-sharing morphisms b <- a -> c."""
    assert cat.src(f) == cat.src(g)
    d = FinDiagram(
        {"l": cat.dst(f), "r": cat.dst(g), "m": cat.src(f)},
        (("m", "l", f), ("m", "r", g)),
    )
    return finite_colimit(cat, d)


def lifting_squares(cat, i, p):
    """All commuting squares with left edge i and right edge p."""
    out = []
    for u in cat.hom(cat.src(i), cat.src(p)):
        for v in cat.hom(cat.dst(i), cat.dst(p)):
            if cat.compose(p, u) == cat.compose(v, i):
                out.append((u, v))
    return out


def has_lift(cat, i, p):
    """True iff every commuting square (i left, p right) has a diagonal."""
    for u, v in lifting_squares(cat, i, p):
        found = False
        for h in cat.hom(cat.dst(i), cat.src(p)):
            if cat.compose(h, i) == u and cat.compose(p, h) == v:
                found = True
                break
        if not found:
            return False
    return True


def retract_pairs(cat):
    """All pairs (f, g) with f a retract of g in the arrow category."""
    pairs = set()
    morphs = cat.sorted_morphisms()
    for f in morphs:
        for g in morphs:
            if _is_retract(cat, f, g):
                pairs.add((f, g))
    return pairs


def _is_retract(cat, f, g):
    fa, fb = cat.morphisms[f]
    ga, gb = cat.morphisms[g]
    for i1 in cat.hom(fa, ga):
        for r1 in cat.hom(ga, fa):
            if cat.compose(r1, i1) != cat.identity[fa]:
                continue
            for i2 in cat.hom(fb, gb):
                if cat.compose(g, i1) != cat.compose(i2, f):
                    continue
                for r2 in cat.hom(gb, fb):
                    if cat.compose(r2, i2) != cat.identity[fb]:
                        continue
                    if cat.compose(f, r1) == cat.compose(r2, g):
                        return True
    return False


@dataclass(frozen=True)
class ModelStructure:
    """A model structure presented by explicit classes and tables."""

    relcat: RelCat
    cof: frozenset
    fib: frozenset
    fact_cf: dict  # f -> (cofibration, trivial fibration)
    fact_tcf: dict  # f -> (trivial cofibration, fibration)

    @property
    def cat(self):
        return self.relcat.cat

    @property
    def weq(self):
        return self.relcat.weq

    @property
    def triv_cof(self):
        return self.cof & self.weq

    @property
    def triv_fib(self):
        return self.fib & self.weq

    def is_cofibrant(self, a):
        """a is cofibrant when the map from the initial object is a cof."""
        ini = self.cat.initial_object()
        if ini is None:
            return False
        (f,) = self.cat.hom(ini, a)
        return f in self.cof

    def is_fibrant(self, a):
        ter = self.cat.terminal_object()
        if ter is None:
            return False
        (f,) = self.cat.hom(a, ter)
        return f in self.fib


def classify(m, f):
    if f not in m.cat.morphisms:
        raise KeyError(f"unknown morphism {f!r}")
    return {
        "cof": f in m.cof,
        "fib": f in m.fib,
        "weq": f in m.weq,
        "triv_cof": f in m.triv_cof,
        "triv_fib": f in m.triv_fib,
    }


def factor(m, f, kind):
    if kind == "cof_then_tfib":
        g, h = m.fact_cf[f]
    elif kind == "tcof_then_fib":
        g, h = m.fact_tcf[f]
    else:
        raise ValueError(f"unknown factorization kind {kind!r}")
    return g, h


def validate_model_structure(m):
    """Exhaustive axiom check; returns a list of cited failures."""
    issues = []
    cat = m.cat
    morphs = set(cat.morphisms)
    for name, cls in (("cof", m.cof), ("fib", m.fib), ("weq", m.weq)):
        extra = cls - morphs
        if extra:
            issues.append(f"{name} contains unknown ids {sorted(extra, key=repr)}")
    if issues:
        return issues
    isos = set(cat.isos())
    for name, cls in (("cof", m.cof), ("fib", m.fib), ("weq", m.weq)):
        missing = isos - cls
        if missing:
            issues.append(
                f"{name} must contain all isomorphisms; missing "
                f"{sorted(missing, key=repr)}"
            )
        for (g, f), h in cat.compose_table.items():
            if g in cls and f in cls and h not in cls:
                issues.append(
                    f"{name} not closed under composition on ({g!r}, {f!r})"
                )
                break
    # 2-out-of-3 for weq
    for (g, f), h in cat.compose_table.items():
        flags = (f in m.weq, g in m.weq, h in m.weq)
        if sum(flags) == 2 and not all(flags):
            issues.append(f"2-out-of-3 fails on the triple ({g!r}, {f!r}, {h!r})")
    # retract closure
    retracts = retract_pairs(cat)
    for name, cls in (("cof", m.cof), ("fib", m.fib), ("weq", m.weq)):
        for f, g in retracts:
            if g in cls and f not in cls:
                issues.append(
                    f"{name} not closed under retracts: {f!r} is a retract "
                    f"of {g!r}"
                )
    # lifting axioms
    for i in m.cof:
        for p in m.triv_fib:
            if not has_lift(cat, i, p):
                issues.append(
                    f"lifting fails: cofibration {i!r} against trivial "
                    f"fibration {p!r}"
                )
    for i in m.triv_cof:
        for p in m.fib:
            if not has_lift(cat, i, p):
                issues.append(
                    f"lifting fails: trivial cofibration {i!r} against "
                    f"fibration {p!r}"
                )
    # factorization tables
    for f in morphs:
        for kind, table, c_cls, c_name, f_cls, f_name in (
            ("cof_then_tfib", m.fact_cf, m.cof, "cof", m.triv_fib, "fib∩weq"),
            ("tcof_then_fib", m.fact_tcf, m.triv_cof, "cof∩weq", m.fib, "fib"),
        ):
            entry = table.get(f)
            if entry is None:
                issues.append(f"{kind} table missing entry for {f!r}")
                continue
            g, h = entry
            if g not in morphs or h not in morphs:
                issues.append(f"{kind} entry for {f!r} uses unknown morphisms")
                continue
            if cat.src(g) != cat.src(f) or cat.dst(h) != cat.dst(f) or cat.dst(
                g
            ) != cat.src(h):
                issues.append(f"{kind} entry for {f!r} is not composable")
                continue
            if cat.compose(h, g) != f:
                issues.append(f"{kind} entry for {f!r} does not compose to f")
            if g not in c_cls:
                issues.append(
                    f"{kind} first factor of {f!r} is not in {c_name}"
                )
            if h not in f_cls:
                issues.append(
                    f"{kind} second factor of {f!r} is not in {f_name}"
                )
    return issues


def build_model_structure(cat, weq, cof, fib, fact_cf, fact_tcf):
    rc = validate_relcat(cat, weq)
    m = ModelStructure(rc, frozenset(cof), frozenset(fib), fact_cf, fact_tcf)
    issues = validate_model_structure(m)
    if issues:
        raise ValueError("; ".join(issues[:5]))
    return m


def factorization_functoriality_flag(m):
    """Whether mediating morphisms exist for every square, per table.

    A weak surrogate for functorial factorization: for each commuting
    square v o f = f' o u there must exist w between the middle objects
    with w o g = g' o u and h' o w = v o h.
    """
    cat = m.cat
    for table in (m.fact_cf, m.fact_tcf):
        for f in cat.sorted_morphisms():
            for f2 in cat.sorted_morphisms():
                for u in cat.hom(cat.src(f), cat.src(f2)):
                    for v in cat.hom(cat.dst(f), cat.dst(f2)):
                        if cat.compose(v, f) != cat.compose(f2, u):
                            continue
                        g, h = table[f]
                        g2, h2 = table[f2]
                        ok = any(
                            cat.compose(w, g) == cat.compose(g2, u)
                            and cat.compose(h2, w) == cat.compose(v, h)
                            for w in cat.hom(cat.dst(g), cat.dst(g2))
                        )
                        if not ok:
                            return False
    return True


def trivial_model_structure(cat):
    """weq = isomorphisms, cof = fib = all morphisms."""
    weq = frozenset(cat.isos())
    morphs = frozenset(cat.morphisms)
    fact_cf = {f: (f, cat.identity[cat.dst(f)]) for f in cat.morphisms}
    fact_tcf = {f: (cat.identity[cat.src(f)], f) for f in cat.morphisms}
    return build_model_structure(cat, weq, morphs, morphs, fact_cf, fact_tcf)


def all_weq_model_structure(cat):
    """weq = all morphisms, cof = isomorphisms, fib = all morphisms."""
    morphs = frozenset(cat.morphisms)
    cof = frozenset(cat.isos())
    fact_cf = {f: (cat.identity[cat.src(f)], f) for f in cat.morphisms}
    fact_tcf = {f: (cat.identity[cat.src(f)], f) for f in cat.morphisms}
    return build_model_structure(cat, morphs, cof, morphs, fact_cf, fact_tcf)


def _letters(cat, weq):
    out = []
    for f in cat.sorted_morphisms():
        if cat.is_identity(f):
            continue
        out.append((f, 1))
        if f in weq:
            out.append((f, -1))
    return out


def _letter_ends(cat, letter):
    f, sign = letter
    s, t = cat.morphisms[f]
    return (s, t) if sign == 1 else (t, s)


def zigzag_classes(cat, weq, max_len=4):
    """Hom-sets of the localization via bounded congruence closure.

    Words are zig-zag paths of non-identity letters; a union-find over all
    words of length <= max_len is closed under composing adjacent aligned
    letters, cancelling inverse pairs, and dropping identity composites.
    Expansion steps are covered implicitly: every expansion of a word w is
    a word w' whose own contraction reaches w.
    """
    letters = _letters(cat, weq)
    words = [()]
    cur = [()]
    for _ in range(max_len):
        nxt = []
        for w in cur:
            for lt in letters:
                if w:
                    prev_end = _letter_ends(cat, w[-1])[1]
                    if _letter_ends(cat, lt)[0] != prev_end:
                        continue
                nw = w + (lt,)
                nxt.append(nw)
        cur = nxt
        words.extend(nxt)
    word_set = set(words)
    parent = {}

    def find(w):
        root = w
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(w, w) != w:
            parent[w], w = root, parent[w]
        return root

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    def contractions(w):
        out = []
        for i in range(len(w) - 1):
            (f, sf), (g, sg) = w[i], w[i + 1]
            if sf == 1 and sg == 1:
                h = cat.compose(g, f)
                rep = () if cat.is_identity(h) else ((h, 1),)
                out.append(w[:i] + rep + w[i + 2 :])
            elif sf == -1 and sg == -1:
                h = cat.compose(f, g)
                rep = () if cat.is_identity(h) else ((h, -1),)
                out.append(w[:i] + rep + w[i + 2 :])
            elif f == g:
                out.append(w[:i] + w[i + 2 :])
        return out

    for w in words:
        for c in contractions(w):
            if c in word_set:
                union(w, c)

    # anchor words at endpoints; the empty word stands for the identity at
    # its anchor and can only merge with loop words
    anchored = {}
    for a in cat.sorted_objects():
        for b in cat.sorted_objects():
            reps = set()
            if a == b:
                reps.add(find(()))
            for w in words:
                if not w:
                    continue
                if _letter_ends(cat, w[0])[0] != a:
                    continue
                if _letter_ends(cat, w[-1])[1] != b:
                    continue
                reps.add(find(w))
            anchored[(a, b)] = len(reps)
    return anchored


def homotopy_category_hom_counts(m, max_len=4):
    """|Hom| in the homotopy category for every ordered object pair."""
    return zigzag_classes(m.cat, m.weq, max_len)
