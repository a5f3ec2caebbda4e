"""Simplicial localization at finite level.

Free categories on reflexive graphs, the iterated free resolution of a
category (levelwise free categories with face functors that multiply out
one nesting level and degeneracy functors that wrap each letter), levelwise
localization by zigzag-word rewriting, hom-spaces of the localized
simplicial category, and evidence reports for presheaf local fibrancy and
for agreement with hammock hom-spaces.

Everything is bound-clipped: word lengths are capped at L and every result
carries completeness flags instead of pretending the infinite construction
was carried out.

Conventions (recorded, not claimed canonical): words are stored in
application order (first letter applied first); face i multiplies out
nesting depth i counting the outermost level as 0, with the innermost face
composing in the base category and dropping identity letters; degeneracy i
wraps each letter at depth i in a singleton.
"""

from . import hammock as HK
from . import modelcat as MC
from . import sset as S
from .fincat import FinCat


def _key(x):
    return repr(x)


# ---------------------------------------------------------------------------
# reflexive graphs and free categories


class ReflGraph:
    """A graph with a distinguished reflexive edge at every vertex."""

    def __init__(self, vertices, edges, reflexive):
        self.vertices = sorted(vertices, key=_key)
        self.edges = dict(edges)
        self.reflexive = dict(reflexive)

    def non_reflexive(self):
        refl = set(self.reflexive.values())
        return sorted((e for e in self.edges if e not in refl), key=_key)

    def endpoints(self, e):
        return self.edges[e]


def refl_graph_violations(g):
    issues = []
    for v in g.vertices:
        e = g.reflexive.get(v)
        if e is None:
            issues.append(f"vertex {v!r} has no reflexive edge")
        elif e not in g.edges:
            issues.append(f"reflexive edge {e!r} of {v!r} is not an edge")
        elif g.edges[e] != (v, v):
            issues.append(f"reflexive edge {e!r} of {v!r} is not a loop at it")
    for e, (s, t) in g.edges.items():
        if s not in set(g.vertices) or t not in set(g.vertices):
            issues.append(f"edge {e!r} has endpoints outside the vertex set")
    return issues


def validate_refl_graph(g):
    issues = refl_graph_violations(g)
    if issues:
        raise ValueError("; ".join(issues))
    return g


def underlying_reflexive_graph(c):
    """All morphisms become edges; identities are the reflexive edges.

    Accepts a finite category or a (possibly bound-clipped) free category;
    in the latter case the edges are its words and the reflexive edges are
    fresh per-vertex tags, so identities never occur as word letters.
    """
    if isinstance(c, FinCat):
        return validate_refl_graph(
            ReflGraph(c.sorted_objects(), dict(c.morphisms), dict(c.identity))
        )
    if isinstance(c, FreeCat):
        edges = {}
        reflexive = {}
        for v in c.objects:
            e = ("refl", v)
            edges[e] = (v, v)
            reflexive[v] = e
        for (a, b), words in c.hom_words.items():
            for w in words:
                if w:
                    edges[w] = (a, b)
        return validate_refl_graph(ReflGraph(c.objects, edges, reflexive))
    raise TypeError(f"cannot take the underlying graph of {type(c).__name__}")


class FreeCat:
    """Words of non-reflexive edges up to length L; the empty word is the
    identity and composition is concatenation.

    ``complete`` is False when some hom-set was clipped by the length bound.
    """

    def __init__(self, graph, bound, hom_words, complete):
        self.graph = graph
        self.bound = bound
        self.hom_words = hom_words
        self.complete = complete
        self.objects = list(graph.vertices)

    def hom(self, a, b):
        return self.hom_words.get((a, b), [])

    def word_endpoints(self, w, source=None):
        if not w:
            if source is None:
                raise ValueError("the empty word needs an explicit source")
            return (source, source)
        return (self.graph.endpoints(w[0])[0], self.graph.endpoints(w[-1])[1])

    def compose(self, w2, w1):
        """The composite w2 after w1 (words in application order)."""
        w = tuple(w1) + tuple(w2)
        if len(w) > self.bound:
            raise BoundExhausted(
                f"composite word of length {len(w)} exceeds bound {self.bound}"
            )
        return w

    def sorted_morphisms(self):
        out = []
        for pair in sorted(self.hom_words, key=_key):
            for w in self.hom_words[pair]:
                out.append((pair[0], pair[1], w))
        return out

    def generators(self):
        return self.graph.non_reflexive()

    def morphism_count(self):
        return sum(len(ws) for ws in self.hom_words.values())


class BoundExhausted(ValueError):
    """A word exceeded the length bound L."""


def _word_sort_key(w):
    return (len(w), repr(w))


def free_category(g, bound):
    """The free category on a reflexive graph, clipped at word length L."""
    validate_refl_graph(g)
    gens = g.non_reflexive()
    out_edges = {v: [] for v in g.vertices}
    for e in gens:
        out_edges[g.endpoints(e)[0]].append(e)
    hom_words = {}
    frontier = []
    for v in g.vertices:
        hom_words[(v, v)] = [()]
        frontier.append((v, v, ()))
    complete = True
    for length in range(1, bound + 2):
        new_frontier = []
        for (a, _b, w) in frontier:
            tip = a if not w else g.endpoints(w[-1])[1]
            for e in out_edges[tip]:
                nw = w + (e,)
                nb = g.endpoints(e)[1]
                if length > bound:
                    complete = False
                else:
                    hom_words.setdefault((a, nb), []).append(nw)
                    new_frontier.append((a, nb, nw))
        frontier = new_frontier
        if not frontier:
            break
    for pair in hom_words:
        hom_words[pair].sort(key=_word_sort_key)
    return FreeCat(g, bound, hom_words, complete)


# ---------------------------------------------------------------------------
# the iterated free resolution


def _flatten_at(w, depth):
    """Multiply out nesting level `depth`: concatenate sub-words there."""
    if depth == 0:
        return tuple(x for part in w for x in part)
    return tuple(_flatten_at(part, depth - 1) for part in w)


def _compose_bottom(w, cat, depth):
    """Multiply out the innermost nesting level by composing in `cat`,
    dropping identity letters (and any sub-word that becomes empty)."""
    out = []
    if depth == 1:
        for part in w:
            f = part[0]
            for g in part[1:]:
                f = cat.compose(g, f)
            if not cat.is_identity(f):
                out.append(f)
        return tuple(out)
    for part in w:
        q = _compose_bottom(part, cat, depth - 1)
        if q:
            out.append(q)
    return tuple(out)


def _wrap_at(w, depth):
    """Wrap every letter at nesting level `depth` in a singleton."""
    if depth == 0:
        return tuple((letter,) for letter in w)
    return tuple(_wrap_at(part, depth - 1) for part in w)


def innermost_letters(w, depth):
    """The base-category letters of a depth-`depth` nested word."""
    if depth <= 1:
        return list(w)
    out = []
    for part in w:
        out.extend(innermost_letters(part, depth - 1))
    return out


class StandardResolution:
    """Levels F_0..F_{n_max} with F_0 free on the graph of C and F_{j+1}
    free on the graph of F_j; morphisms of F_j are depth-(j+1) nested words.
    """

    def __init__(self, cat, n_max, bound):
        if n_max > 3:
            raise ValueError("resolution levels above 3 are not supported")
        self.cat = cat
        self.n_max = n_max
        self.bound = bound
        self.levels = [free_category(underlying_reflexive_graph(cat), bound)]
        for _ in range(n_max):
            self.levels.append(
                free_category(
                    underlying_reflexive_graph(self.levels[-1]), bound
                )
            )
        self.complete = all(level.complete for level in self.levels)

    def face(self, n, i, w):
        """The i-th face functor F_n -> F_{n-1} applied to a word."""
        if not (1 <= n <= self.n_max and 0 <= i <= n):
            raise ValueError(f"no face ({n}, {i})")
        if i < n:
            return _flatten_at(w, i)
        return _compose_bottom(w, self.cat, n)

    def degen(self, n, i, w):
        """The i-th degeneracy functor F_n -> F_{n+1} applied to a word."""
        if not (0 <= n < self.n_max and 0 <= i <= n):
            raise ValueError(f"no degeneracy ({n}, {i})")
        return _wrap_at(w, i)


def resolution_identity_issues(res, sample_cap=500):
    """Verify the simplicial and functoriality identities on sampled words."""
    issues = []

    def sample(level):
        ms = [w for (_a, _b, w) in res.levels[level].sorted_morphisms()]
        return ms[:sample_cap]

    for n in range(2, res.n_max + 1):
        for w in sample(n):
            for j in range(1, n + 1):
                for i in range(j):
                    lhs = res.face(n - 1, i, res.face(n, j, w))
                    rhs = res.face(n - 1, j - 1, res.face(n, i, w))
                    if lhs != rhs:
                        issues.append(
                            f"d_{i} d_{j} != d_{j-1} d_{i} at level {n}"
                        )
    for n in range(res.n_max):
        for w in sample(n):
            for j in range(n + 1):
                sw = res.degen(n, j, w)
                for i in range(n + 2):
                    lhs = res.face(n + 1, i, sw)
                    if i == j or i == j + 1:
                        rhs = w
                    elif i < j:
                        rhs = res.degen(n - 1, j - 1, res.face(n, i, w))
                    else:
                        rhs = res.degen(n - 1, j, res.face(n, i - 1, w))
                    if lhs != rhs:
                        issues.append(
                            f"d_{i} s_{j} identity fails at level {n}"
                        )
    for n in range(res.n_max - 1):
        for w in sample(n):
            for j in range(n + 1):
                for i in range(j + 1):
                    lhs = res.degen(n + 1, i, res.degen(n, j, w))
                    rhs = res.degen(n + 1, j + 1, res.degen(n, i, w))
                    if lhs != rhs:
                        issues.append(
                            f"s_{i} s_{j} != s_{j+1} s_{i} at level {n}"
                        )
    # faces and degeneracies are functors: they preserve identities and
    # turn concatenation into concatenation
    for n in range(1, res.n_max + 1):
        for i in range(n + 1):
            if res.face(n, i, ()) != ():
                issues.append(f"face ({n}, {i}) does not preserve identities")
    if res.n_max >= 1:
        pairs = res.levels[1].sorted_morphisms()[:50]
        for (a, b, w1) in pairs:
            for (b2, _c, w2) in pairs:
                if b2 != b or not w1 or not w2:
                    continue
                if len(w1) + len(w2) > res.bound:
                    continue
                for i in range(2):
                    lhs = res.face(1, i, w1 + w2)
                    rhs = res.face(1, i, w1) + res.face(1, i, w2)
                    if lhs != rhs:
                        issues.append(f"face (1, {i}) is not functorial")
    return issues


def standard_resolution(cat, n_max, bound):
    res = StandardResolution(cat, n_max, bound)
    issues = resolution_identity_issues(res)
    if issues:
        raise ValueError("; ".join(sorted(set(issues))))
    return res


class Augmentation:
    """The functor from the level-0 free category that sends a word to its
    composite in the base category."""

    def __init__(self, f0, cat):
        self.source = f0
        self.target = cat
        for e in f0.graph.non_reflexive():
            if e not in cat.morphisms:
                raise ValueError(
                    "free category was not built from this category"
                )

    def apply(self, w, source=None):
        if not w:
            if source is None:
                raise ValueError("the empty word needs an explicit source")
            return self.target.id_of(source)
        f = w[0]
        for g in w[1:]:
            f = self.target.compose(g, f)
        return f

    def issues(self):
        out = []
        cat = self.target
        for (a, b, w1) in self.source.sorted_morphisms():
            got = self.apply(w1, a)
            if cat.morphisms[got] != (a, b):
                out.append(f"augmentation of {w1!r} has wrong endpoints")
        for (a, b, w1) in self.source.sorted_morphisms():
            for (b2, c, w2) in self.source.sorted_morphisms():
                if b2 != b or len(w1) + len(w2) > self.source.bound:
                    continue
                lhs = self.apply(w1 + w2, a)
                rhs = cat.compose(self.apply(w2, b), self.apply(w1, a))
                if lhs != rhs:
                    out.append("augmentation is not functorial")
                    return out
        return out


def augmentation(f0, cat):
    u = Augmentation(f0, cat)
    issues = u.issues()
    if issues:
        raise ValueError("; ".join(issues))
    return u


# ---------------------------------------------------------------------------
# zigzag words and levelwise localization


def reduce_word(word):
    """Cancel adjacent mutually inverse letters to the (unique) fixpoint."""
    out = []
    for letter in word:
        if out and out[-1][1] == letter[1] and out[-1][0] != letter[0]:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def zigzag_endpoints(g, word, source=None):
    if not word:
        if source is None:
            raise ValueError("the empty zigzag needs an explicit source")
        return (source, source)

    def ends(letter):
        sign, e = letter
        s, t = g.endpoints(e)
        return (s, t) if sign == "+" else (t, s)

    return (ends(word[0])[0], ends(word[-1])[1])


class LocCat:
    """Reduced zigzag words of length <= L over the generators of a free
    category, with the weak-equivalence generators formally inverted."""

    def __init__(self, base, weq, bound, hom_words, complete):
        self.base = base
        self.weq = frozenset(weq)
        self.bound = bound
        self.hom_words = hom_words
        self.complete = complete
        self.objects = list(base.objects)

    def hom(self, a, b):
        return self.hom_words.get((a, b), [])

    def compose(self, w2, w1):
        w = reduce_word(tuple(w1) + tuple(w2))
        if len(w) > self.bound:
            raise BoundExhausted(
                f"reduced composite of length {len(w)} exceeds {self.bound}"
            )
        return w


def localize_free(f, fw, bound):
    """Invert the generators `fw`; morphisms become reduced zigzag words."""
    g = f.graph
    gens = g.non_reflexive()
    fw = frozenset(fw)
    unknown = fw - set(gens)
    if unknown:
        raise ValueError(f"not generators: {sorted(unknown, key=_key)}")
    letters = [("+", e) for e in gens] + [("-", e) for e in sorted(fw, key=_key)]
    out_letters = {v: [] for v in g.vertices}
    for letter in letters:
        sign, e = letter
        s, t = g.endpoints(e)
        src = s if sign == "+" else t
        out_letters[src].append(letter)
    hom_words = {}
    frontier = []
    for v in g.vertices:
        hom_words[(v, v)] = [()]
        frontier.append((v, (), v))
    complete = True
    for length in range(1, bound + 2):
        new_frontier = []
        for (a, w, tip) in frontier:
            for letter in out_letters[tip]:
                if w and w[-1][1] == letter[1] and w[-1][0] != letter[0]:
                    continue  # would cancel: not a new reduced word
                nw = w + (letter,)
                sign, e = letter
                s, t = g.endpoints(e)
                nt = t if sign == "+" else s
                if length > bound:
                    complete = False
                else:
                    hom_words.setdefault((a, nt), []).append(nw)
                    new_frontier.append((a, nw, nt))
        frontier = new_frontier
        if not frontier:
            break
    for pair in hom_words:
        hom_words[pair].sort(key=_word_sort_key)
    return LocCat(f, fw, bound, hom_words, complete)


def one_step_reductions(word):
    """All words obtained by cancelling one adjacent inverse pair."""
    out = []
    for i in range(len(word) - 1):
        a, b = word[i], word[i + 1]
        if a[1] == b[1] and a[0] != b[0]:
            out.append(word[:i] + word[i + 2 :])
    return out


def local_confluence_issues(loc, insertion_cap=3):
    """Newman-style check on critical pairs built from the hom-sets.

    Every word with overlapping cancellable pairs must reach the same
    normal form no matter which pair is cancelled first.
    """
    issues = []
    samples = set()
    inv_letters = [("-", e) for e in sorted(loc.weq, key=_key)]
    for pair in sorted(loc.hom_words, key=_key):
        for w in loc.hom_words[pair][:insertion_cap]:
            for i in range(len(w) + 1):
                for letter in inv_letters:
                    sign, e = letter
                    samples.add(w[:i] + (("+", e), ("-", e)) + w[i:])
                    samples.add(w[:i] + (("-", e), ("+", e)) + w[i:])
                    samples.add(
                        w[:i]
                        + (("+", e), ("-", e), ("+", e))
                        + w[i:]
                    )
    for w in sorted(samples, key=_word_sort_key):
        normal_forms = set()
        stack = [w]
        seen = set()
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen.add(u)
            steps = one_step_reductions(u)
            if not steps:
                normal_forms.add(u)
            else:
                stack.extend(steps)
        if len(normal_forms) != 1 or reduce_word(w) not in normal_forms:
            issues.append(f"reduction of {w!r} is not confluent")
    return issues


# ---------------------------------------------------------------------------
# localized hom-spaces


def _check_weq_subcategory(cat, weq):
    weq = frozenset(weq)
    for obj in cat.objects:
        if cat.id_of(obj) not in weq:
            raise ValueError(f"weq must contain the identity of {obj!r}")
    for f in weq:
        if f not in cat.morphisms:
            raise ValueError(f"weq member {f!r} is not a morphism")
    for g in weq:
        for f in weq:
            if cat.morphisms[f][1] == cat.morphisms[g][0]:
                if cat.compose(g, f) not in weq:
                    raise ValueError(
                        "weq is not closed under composition "
                        f"({g!r} after {f!r})"
                    )
    return weq


def _weq_generators(res, weq, n):
    """Generators of level n all of whose base letters lie in weq."""
    if n == 0:
        return frozenset(
            f for f in res.cat.sorted_morphisms()
            if f in weq and not res.cat.is_identity(f)
        )
    out = set()
    for e in res.levels[n].graph.non_reflexive():
        if all(f in weq for f in innermost_letters(e, n)):
            out.add(e)
    return frozenset(out)


def _zig_operator(word, gen_image, target_weq):
    """Push a zigzag word through a functor given on forward generators.

    Inverse letters map to reversed inverses of the image letters, which
    must themselves be invertible in the target level.
    """
    out = []
    for (sign, e) in word:
        img = gen_image(e)
        if sign == "+":
            out.extend(("+", x) for x in img)
        else:
            for x in img:
                if x not in target_weq:
                    raise ValueError(
                        f"image letter {x!r} is not an inverted generator"
                    )
            out.extend(("-", x) for x in reversed(img))
    return reduce_word(tuple(out))


def loc_hom_space(cat, weq, a, b, k, bound):
    """The hom-space from a to b in the levelwise-localized resolution.

    Level n holds the reduced zigzag words of the localized level-n free
    category; faces and degeneracies are induced by the resolution functors
    followed by word reduction.  Metadata records per-level completeness
    and any operator images that exceeded the length bound.
    """
    weq = _check_weq_subcategory(cat, weq)
    res = standard_resolution(cat, k, bound)
    fws = [_weq_generators(res, weq, n) for n in range(k + 1)]
    locs = [
        localize_free(res.levels[n], fws[n], bound) for n in range(k + 1)
    ]
    levels = [set(locs[n].hom(a, b)) for n in range(k + 1)]
    oversized = set()

    def face_image(n, i, word):
        return _zig_operator(
            word, lambda e: res.face(n, i, (e,)), fws[n - 1]
        )

    def degen_image(n, i, word):
        return _zig_operator(
            word, lambda e: res.degen(n, i, (e,)), fws[n + 1]
        )

    # close the level sets under all operator images
    work = [(n, w) for n in range(k + 1) for w in levels[n]]
    while work:
        n, w = work.pop()
        images = []
        if n >= 1:
            for i in range(n + 1):
                images.append((n - 1, face_image(n, i, w)))
        if n < k:
            for i in range(n + 1):
                images.append((n + 1, degen_image(n, i, w)))
        for (m, img) in images:
            if img not in levels[m]:
                levels[m].add(img)
                work.append((m, img))
                if len(img) > bound:
                    oversized.add((m, img))

    faces = {}
    degens = {}
    for n in range(1, k + 1):
        for i in range(n + 1):
            faces[(n, i)] = {w: face_image(n, i, w) for w in levels[n]}
    for n in range(k):
        for i in range(n + 1):
            degens[(n, i)] = {w: degen_image(n, i, w) for w in levels[n]}
    meta = {
        "pair": (a, b),
        "word_bound": bound,
        "level_complete": [loc.complete for loc in locs],
        "bound_exhausted_levels": [
            (not locs[n].complete) or any(m == n for (m, _w) in oversized)
            for n in range(k + 1)
        ],
        "oversized_simplices": sorted(
            (n, repr(w)) for (n, w) in oversized
        ),
        "weq_generator_counts": [len(fw) for fw in fws],
        "convention": (
            "face i multiplies out nesting depth i (outermost = 0); "
            "degeneracy i wraps letters at depth i"
        ),
    }
    x = S.TruncSSet(k, [sorted(lv, key=_key) for lv in levels], faces, degens, meta)
    issues = S.validate_sset(x)
    if issues:
        raise ValueError("; ".join(issues[:5]))
    return x


# ---------------------------------------------------------------------------
# simplicial presheaves


class SimpPresheaf:
    """A strict contravariant functor to truncated simplicial sets.

    ``values[c]`` is a TruncSSet per object; ``maps[f]`` is an SSetMap
    from the value at the target of f to the value at its source.
    """

    def __init__(self, cat, values, maps):
        self.cat = cat
        self.values = dict(values)
        self.maps = dict(maps)


def presheaf_violations(p):
    issues = []
    cat = p.cat
    for obj in cat.objects:
        if obj not in p.values:
            issues.append(f"no value at object {obj!r}")
    for f, (src, dst) in cat.morphisms.items():
        m = p.maps.get(f)
        if m is None:
            issues.append(f"no map at morphism {f!r}")
            continue
        if m.source is not p.values[dst] or m.target is not p.values[src]:
            issues.append(f"map at {f!r} has wrong endpoints")
            continue
        issues.extend(
            f"map at {f!r}: {msg}" for msg in S.sset_map_violations(m)
        )
    if issues:
        return issues
    for obj in cat.objects:
        ident = p.maps[cat.id_of(obj)]
        x = p.values[obj]
        for n in range(x.k + 1):
            for sx in x.level(n):
                if ident.apply(n, sx) != sx:
                    issues.append(f"identity map at {obj!r} is not identity")
    for g in cat.sorted_morphisms():
        for f in cat.sorted_morphisms():
            if cat.morphisms[f][1] != cat.morphisms[g][0]:
                continue
            gf = cat.compose(g, f)
            lhs = p.maps[gf]
            x = lhs.source
            for n in range(x.k + 1):
                for sx in x.level(n):
                    if lhs.apply(n, sx) != p.maps[f].apply(
                        n, p.maps[g].apply(n, sx)
                    ):
                        issues.append(
                            f"functoriality fails on {g!r} after {f!r}"
                        )
    return issues


def validate_presheaf(p):
    issues = presheaf_violations(p)
    if issues:
        raise ValueError("; ".join(issues[:5]))
    return p


def const_presheaf(cat, x):
    """The presheaf with value x everywhere and identity action."""
    ident = S.identity_map(x)
    return validate_presheaf(
        SimpPresheaf(
            cat,
            {obj: x for obj in cat.objects},
            {f: ident for f in cat.morphisms},
        )
    )


def presheaf_local_fibrancy_evidence(p, r, d):
    """Finite-level evidence for fibrancy in the weq-local sense.

    Clause (a): exhaustive horn filling up to dimension d at every object.
    Clause (b): the map at every non-identity weak equivalence carries
    homology-level weak-equivalence evidence.
    """
    validate_presheaf(p)
    kan = {}
    for obj in sorted(p.cat.objects, key=_key):
        kan[obj] = S.kan_check(p.values[obj], d)
    weq_images = {}
    for w in sorted(r.weq, key=_key):
        if p.cat.is_identity(w):
            continue
        weq_images[w] = S.weq_evidence(p.maps[w], d)
    kan_ok = all(rep["pass"] for rep in kan.values())
    weq_ok = all(weq_images.values())
    return {
        "kan": kan,
        "kan_ok": kan_ok,
        "weq_images": weq_images,
        "weq_ok": weq_ok,
        "ok": kan_ok and weq_ok,
    }


# ---------------------------------------------------------------------------
# hammock hom-spaces vs localized hom-spaces


def hammock_vs_loc_evidence(cat, weq, a, b, k, bound, d):
    """Exact pi0 and homology-group comparison of the two hom-space models.

    Returns a report with per-clause verdicts, an evidence-strength label,
    and bound-exhaustion flags from both sides.
    """
    rel = MC.RelCat(cat, frozenset(weq))
    hh = HK.hammock_hom_space(rel, a, b, k, bound)
    lh = loc_hom_space(cat, weq, a, b, k, bound)
    pi0_h = len(S.pi0(hh)[0])
    pi0_l = len(S.pi0(lh)[0])
    common_degree = min(d, k - 1) if k >= 1 else 0
    homology = {
        "hammock": [
            (h["degree"], tuple(h["torsion"]), h["free_rank"])
            for h in S.homology_groups(hh, common_degree)
            if h["reliable"]
        ],
        "localized": [
            (h["degree"], tuple(h["torsion"]), h["free_rank"])
            for h in S.homology_groups(lh, common_degree)
            if h["reliable"]
        ],
    }
    homology_agree = homology["hammock"] == homology["localized"]
    bound_limited = any(lh.meta["bound_exhausted_levels"]) or not HK.pi0_length_stability(rel, a, b, bound)
    pi0_agree = pi0_h == pi0_l
    if bound_limited:
        evidence = "bound-limited"
    elif pi0_agree and homology_agree:
        evidence = "homology-evidence" if common_degree >= 1 else "exact"
    else:
        evidence = "disagreement"
    return {
        "pair": (a, b),
        "k": k,
        "word_bound": bound,
        "degree": common_degree,
        "pi0": {"hammock": pi0_h, "localized": pi0_l, "agree": pi0_agree},
        "homology": {**homology, "agree": homology_agree},
        "bound_limited": bound_limited,
        "evidence": evidence,
        "ok": pi0_agree and homology_agree,
    }
