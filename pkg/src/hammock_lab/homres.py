"""(Co)simplicial objects in a finite model category and derived hom-spaces.

Provides truncated simplicial and cosimplicial objects valued in a finite
model category, weak-constancy and Reedy latching/matching certificates,
resolution construction, the left/right/total hom-complexes, a brute-force
totalization (finite end), derived hom-spaces, the double homotopy colimit
of the hom-set diagram, asphericity certificates for resolutions, and a
driver comparing the four models of the derived hom-space.
"""

import itertools
from dataclasses import dataclass

from . import hammock as HK
from . import hocolim as H
from . import modelcat as MC
from . import sset as S
from .fincat import (
    Functor,
    monotone_maps,
    nerve,
    opposite,
    truncated_simplex_category,
    validate_category,
    validate_functor,
)


# ---------------------------------------------------------------------------
# truncated (co)simplicial objects in a finite category


@dataclass(frozen=True)
class SimplicialObj:
    """A simplicial object truncated at level k, valued in a model category.

    ``faces[(n, i)]`` is the morphism X_n -> X_{n-1} induced by the coface
    [n-1] -> [n] skipping i; ``degens[(n, i)]`` is X_n -> X_{n+1} induced by
    the codegeneracy [n+1] -> [n] repeating i.
    """

    model: MC.ModelStructure
    levels: tuple
    faces: dict
    degens: dict

    @property
    def k(self):
        return len(self.levels) - 1


@dataclass(frozen=True)
class CosimplicialObj:
    """A cosimplicial object truncated at level k.

    ``cofaces[(n, i)]`` is A^{n-1} -> A^n and ``codegens[(n, i)]`` is
    A^{n+1} -> A^n, keyed by the same elementary maps of the simplex
    category as in :class:`SimplicialObj`.
    """

    model: MC.ModelStructure
    levels: tuple
    cofaces: dict
    codegens: dict

    @property
    def k(self):
        return len(self.levels) - 1


def simplicial_action(x, vals, m, n):
    """The morphism X_n -> X_m of M induced by a monotone map [m] -> [n]."""
    cat = x.model.cat
    ops = S.monotone_factorization(vals, m, n)
    ordered = [op for op in ops if op[0] == "d"] + [
        op for op in reversed(ops) if op[0] == "s"
    ]
    result = cat.id_of(x.levels[n])
    lvl = n
    for kind, i in ordered:
        if kind == "d":
            result = cat.compose(x.faces[(lvl, i)], result)
            lvl -= 1
        else:
            result = cat.compose(x.degens[(lvl, i)], result)
            lvl += 1
    assert lvl == m
    return result


def cosimplicial_action(x, vals, m, n):
    """The morphism A^m -> A^n of M induced by a monotone map [m] -> [n]."""
    cat = x.model.cat
    ops = S.monotone_factorization(vals, m, n)
    ordered = [op for op in ops if op[0] == "d"] + [
        op for op in reversed(ops) if op[0] == "s"
    ]
    result = cat.id_of(x.levels[n])
    lvl = n
    for kind, i in ordered:
        if kind == "d":
            result = cat.compose(result, x.cofaces[(lvl, i)])
            lvl -= 1
        else:
            result = cat.compose(result, x.codegens[(lvl, i)])
            lvl += 1
    assert lvl == m
    return result


def _operator_key_issues(x, elementary, direction):
    cat = x.model.cat
    k = x.k
    issues = []
    face_keys = {(n, i) for n in range(1, k + 1) for i in range(n + 1)}
    degen_keys = {(n, i) for n in range(k) for i in range(n + 1)}
    fdict, sdict = elementary
    if set(fdict) != face_keys:
        issues.append("face operator keys do not match the truncation")
    if set(sdict) != degen_keys:
        issues.append("degeneracy operator keys do not match the truncation")
    for (n, i), f in fdict.items():
        if f not in cat.morphisms:
            issues.append(f"unknown morphism at face {(n, i)}")
            continue
        src, dst = cat.morphisms[f]
        want = (
            (x.levels[n], x.levels[n - 1])
            if direction == "contra"
            else (x.levels[n - 1], x.levels[n])
        )
        if (src, dst) != want:
            issues.append(f"face {(n, i)} has wrong endpoints")
    for (n, i), f in sdict.items():
        if f not in cat.morphisms:
            issues.append(f"unknown morphism at degeneracy {(n, i)}")
            continue
        src, dst = cat.morphisms[f]
        want = (
            (x.levels[n], x.levels[n + 1])
            if direction == "contra"
            else (x.levels[n + 1], x.levels[n])
        )
        if (src, dst) != want:
            issues.append(f"degeneracy {(n, i)} has wrong endpoints")
    return issues


def _functoriality_issues(x, action, contravariant):
    cat = x.model.cat
    k = x.k
    issues = []
    for a in range(k + 1):
        for b in range(k + 1):
            for c in range(k + 1):
                for f in monotone_maps(a, b):
                    xf = action(x, f, a, b)
                    for g in monotone_maps(b, c):
                        comp = tuple(g[v] for v in f)
                        xg = action(x, g, b, c)
                        expect = (
                            cat.compose(xf, xg)
                            if contravariant
                            else cat.compose(xg, xf)
                        )
                        if action(x, comp, a, c) != expect:
                            issues.append(
                                f"functoriality fails for {f} then {g}"
                                f" at sizes ({a}, {b}, {c})"
                            )
                            return issues
    return issues


def simplicial_obj_violations(x):
    issues = []
    for lv in x.levels:
        if lv not in x.model.cat.objects:
            issues.append(f"unknown level object {lv!r}")
    if issues:
        return issues
    issues = _operator_key_issues(x, (x.faces, x.degens), "contra")
    if issues:
        return issues
    return _functoriality_issues(x, simplicial_action, contravariant=True)


def cosimplicial_obj_violations(x):
    issues = []
    for lv in x.levels:
        if lv not in x.model.cat.objects:
            issues.append(f"unknown level object {lv!r}")
    if issues:
        return issues
    issues = _operator_key_issues(x, (x.cofaces, x.codegens), "co")
    if issues:
        return issues
    return _functoriality_issues(x, cosimplicial_action, contravariant=False)


def validate_simplicial_obj(x):
    issues = simplicial_obj_violations(x)
    if issues:
        raise ValueError("; ".join(issues[:5]))
    return x


def validate_cosimplicial_obj(x):
    issues = cosimplicial_obj_violations(x)
    if issues:
        raise ValueError("; ".join(issues[:5]))
    return x


def const_simplicial(m, a, k):
    """The constant simplicial object at a: all operators identities."""
    ident = m.cat.id_of(a)
    faces = {(n, i): ident for n in range(1, k + 1) for i in range(n + 1)}
    degens = {(n, i): ident for n in range(k) for i in range(n + 1)}
    return SimplicialObj(m, (a,) * (k + 1), faces, degens)


def const_cosimplicial(m, a, k):
    """The constant cosimplicial object at a."""
    ident = m.cat.id_of(a)
    cofaces = {(n, i): ident for n in range(1, k + 1) for i in range(n + 1)}
    codegens = {(n, i): ident for n in range(k) for i in range(n + 1)}
    return CosimplicialObj(m, (a,) * (k + 1), cofaces, codegens)


def weak_constancy_maps(x):
    """The comparison morphisms along the unique surjections [n] -> [0].

    For a simplicial object these run X_0 -> X_n; for a cosimplicial object
    they run A^n -> A^0.
    """
    out = {}
    for n in range(x.k + 1):
        vals = (0,) * (n + 1)
        if isinstance(x, SimplicialObj):
            out[n] = simplicial_action(x, vals, n, 0)
        else:
            out[n] = cosimplicial_action(x, vals, n, 0)
    return out


def is_weakly_constant(x):
    weq = x.model.weq
    return all(f in weq for f in weak_constancy_maps(x).values())


# ---------------------------------------------------------------------------
# Reedy latching and matching objects


def _proper_monos(n):
    return [
        (m, vals)
        for m in range(n)
        for vals in monotone_maps(m, n)
        if len(set(vals)) == m + 1
    ]


def _proper_epis(n):
    return [
        (m, vals)
        for m in range(n)
        for vals in monotone_maps(n, m)
        if set(vals) == set(range(m + 1))
    ]


def _mono_factorizations(index):
    """Triples (alpha, beta, gamma) with beta = alpha o gamma, gamma proper."""
    out = []
    for (ma, va) in index:
        for (mb, vb) in index:
            if mb >= ma:
                continue
            for vg in monotone_maps(mb, ma):
                if len(set(vg)) != mb + 1:
                    continue
                if tuple(va[v] for v in vg) == vb:
                    out.append(((ma, va), (mb, vb), (mb, ma, vg)))
    return out


def _epi_factorizations(index):
    """Triples (sigma, sigma', tau) with sigma' = tau o sigma, tau proper."""
    out = []
    for (ma, va) in index:
        for (mb, vb) in index:
            if mb >= ma:
                continue
            for vt in monotone_maps(ma, mb):
                if set(vt) != set(range(mb + 1)):
                    continue
                if tuple(vt[v] for v in va) == vb:
                    out.append(((ma, va), (mb, vb), (ma, mb, vt)))
    return out


def _unique_mediator(cat, src, dst, constraints):
    """The unique morphism src -> dst satisfying all (post, want) pairs."""
    found = [
        u
        for u in cat.hom(src, dst)
        if all(cat.compose(post, u) == want for post, want in constraints)
    ]
    assert len(found) == 1, "universal property violated"
    return found[0]


def matching_object(x, n):
    """The n-th matching object with the canonical map out of level n."""
    cat = x.model.cat
    if isinstance(x, SimplicialObj):
        index = _proper_monos(n)
        nodes = {alpha: x.levels[alpha[0]] for alpha in index}
        edges = tuple(
            (alpha, beta, simplicial_action(x, g[2], g[0], g[1]))
            for alpha, beta, g in _mono_factorizations(index)
        )
        cone = {
            alpha: simplicial_action(x, alpha[1], alpha[0], n)
            for alpha in index
        }
    else:
        index = _proper_epis(n)
        nodes = {sig: x.levels[sig[0]] for sig in index}
        edges = tuple(
            (sig, sig2, cosimplicial_action(x, t[2], t[0], t[1]))
            for sig, sig2, t in _epi_factorizations(index)
        )
        cone = {
            sig: cosimplicial_action(x, sig[1], n, sig[0]) for sig in index
        }
    lim = MC.finite_limit(cat, MC.FinDiagram(nodes, edges))
    if lim is None:
        raise ValueError(f"required limit absent in M at matching level {n}")
    canonical = _unique_mediator(
        cat,
        x.levels[n],
        lim["apex"],
        [(lim["legs"][nid], cone[nid]) for nid in nodes],
    )
    return {"object": lim["apex"], "legs": lim["legs"], "canonical": canonical}


def latching_object(x, n):
    """The n-th latching object with the canonical map into level n."""
    cat = x.model.cat
    if isinstance(x, SimplicialObj):
        index = _proper_epis(n)
        nodes = {sig: x.levels[sig[0]] for sig in index}
        edges = tuple(
            (sig2, sig, simplicial_action(x, t[2], t[0], t[1]))
            for sig, sig2, t in _epi_factorizations(index)
        )
        cocone = {
            sig: simplicial_action(x, sig[1], n, sig[0]) for sig in index
        }
    else:
        index = _proper_monos(n)
        nodes = {alpha: x.levels[alpha[0]] for alpha in index}
        edges = tuple(
            (beta, alpha, cosimplicial_action(x, g[2], g[0], g[1]))
            for alpha, beta, g in _mono_factorizations(index)
        )
        cocone = {
            alpha: cosimplicial_action(x, alpha[1], alpha[0], n)
            for alpha in index
        }
    colim = MC.finite_colimit(cat, MC.FinDiagram(nodes, edges))
    if colim is None:
        raise ValueError(f"required colimit absent in M at latching level {n}")
    found = [
        u
        for u in cat.hom(colim["apex"], x.levels[n])
        if all(
            cat.compose(u, colim["legs"][nid]) == cocone[nid] for nid in nodes
        )
    ]
    assert len(found) == 1, "universal property violated"
    return {"object": colim["apex"], "legs": colim["legs"], "canonical": found[0]}


@dataclass(frozen=True)
class ResolutionCertificate:
    subject: object
    weakly_constant: bool
    reedy_ok: tuple
    comparison_classes: tuple

    @property
    def ok(self):
        return self.weakly_constant and all(self.reedy_ok)


def is_simplicial_resolution(x):
    """Weak constancy plus Reedy fibrancy of every matching map."""
    m = x.model
    reedy = []
    for n in range(x.k + 1):
        mm = matching_object(x, n)
        reedy.append(mm["canonical"] in m.fib)
    classes = tuple(
        MC.classify(m, f) for _, f in sorted(weak_constancy_maps(x).items())
    )
    return ResolutionCertificate(x, is_weakly_constant(x), tuple(reedy), classes)


def is_cosimplicial_resolution(x):
    """Weak constancy plus Reedy cofibrancy of every latching map."""
    m = x.model
    reedy = []
    for n in range(x.k + 1):
        ll = latching_object(x, n)
        reedy.append(ll["canonical"] in m.cof)
    classes = tuple(
        MC.classify(m, f) for _, f in sorted(weak_constancy_maps(x).items())
    )
    return ResolutionCertificate(x, is_weakly_constant(x), tuple(reedy), classes)


# ---------------------------------------------------------------------------
# resolution construction: build then certify, fall back to search


def _simplicial_operator_tables(m, levels):
    """All operator assignments making the level tuple a simplicial object."""
    cat = m.cat
    k = len(levels) - 1
    face_keys = [(n, i) for n in range(1, k + 1) for i in range(n + 1)]
    degen_keys = [(n, i) for n in range(k) for i in range(n + 1)]
    face_pools = [cat.hom(levels[n], levels[n - 1]) for n, _ in face_keys]
    degen_pools = [cat.hom(levels[n], levels[n + 1]) for n, _ in degen_keys]
    if any(not p for p in face_pools) or any(not p for p in degen_pools):
        return
    for fs in itertools.product(*face_pools):
        for ss in itertools.product(*degen_pools):
            x = SimplicialObj(
                m, tuple(levels), dict(zip(face_keys, fs)), dict(zip(degen_keys, ss))
            )
            if not simplicial_obj_violations(x):
                yield x


def _cosimplicial_operator_tables(m, levels):
    cat = m.cat
    k = len(levels) - 1
    face_keys = [(n, i) for n in range(1, k + 1) for i in range(n + 1)]
    degen_keys = [(n, i) for n in range(k) for i in range(n + 1)]
    face_pools = [cat.hom(levels[n - 1], levels[n]) for n, _ in face_keys]
    degen_pools = [cat.hom(levels[n + 1], levels[n]) for n, _ in degen_keys]
    if any(not p for p in face_pools) or any(not p for p in degen_pools):
        return
    for fs in itertools.product(*face_pools):
        for ss in itertools.product(*degen_pools):
            x = CosimplicialObj(
                m, tuple(levels), dict(zip(face_keys, fs)), dict(zip(degen_keys, ss))
            )
            if not cosimplicial_obj_violations(x):
                yield x


def _section_maps_simplicial(m, b, x):
    """Compatible families i_n: b -> X_n of trivial cofibrations."""
    cat = m.cat
    pools = [
        [f for f in cat.hom(b, lv) if f in m.triv_cof] for lv in x.levels
    ]
    for maps in itertools.product(*pools):
        ok = True
        for (n, i), f in x.faces.items():
            if cat.compose(f, maps[n]) != maps[n - 1]:
                ok = False
                break
        if ok:
            for (n, i), f in x.degens.items():
                if cat.compose(f, maps[n]) != maps[n + 1]:
                    ok = False
                    break
        if ok:
            yield tuple(maps)


def _projection_maps_cosimplicial(m, a, x):
    """Compatible families p_n: A^n -> a of trivial fibrations."""
    cat = m.cat
    pools = [
        [f for f in cat.hom(lv, a) if f in m.triv_fib] for lv in x.levels
    ]
    for maps in itertools.product(*pools):
        ok = True
        for (n, i), f in x.cofaces.items():
            if cat.compose(maps[n], f) != maps[n - 1]:
                ok = False
                break
        if ok:
            for (n, i), f in x.codegens.items():
                if cat.compose(maps[n], f) != maps[n + 1]:
                    ok = False
                    break
        if ok:
            yield tuple(maps)


def enumerate_simplicial_resolutions(m, b, k, search=False, limit=None):
    """Yield certified pairs (resolution, section maps) for the object b.

    Constant candidates come first (the object itself, then the other
    objects reachable by a trivial cofibration); with ``search`` the
    enumeration continues through non-constant level tuples.
    """
    cat = m.cat
    count = 0
    seen = set()

    def signature(x):
        return (
            x.levels,
            tuple(sorted(x.faces.items())),
            tuple(sorted(x.degens.items())),
        )

    objects = [b] + [c for c in cat.sorted_objects() if c != b]
    for c in objects:
        x = const_simplicial(m, c, k)
        for maps in _section_maps_simplicial(m, b, x):
            if is_simplicial_resolution(x).ok:
                seen.add(signature(x))
                yield x, maps
                count += 1
                if limit is not None and count >= limit:
                    return
            break
    if not search:
        return
    for levels in itertools.product(cat.sorted_objects(), repeat=k + 1):
        for x in _simplicial_operator_tables(m, levels):
            if signature(x) in seen:
                continue
            for maps in _section_maps_simplicial(m, b, x):
                if is_simplicial_resolution(x).ok:
                    seen.add(signature(x))
                    yield x, maps
                    count += 1
                    if limit is not None and count >= limit:
                        return
                break


def enumerate_cosimplicial_resolutions(m, a, k, search=False, limit=None):
    """Yield certified pairs (resolution, projection maps) for the object a."""
    cat = m.cat
    count = 0
    seen = set()

    def signature(x):
        return (
            x.levels,
            tuple(sorted(x.cofaces.items())),
            tuple(sorted(x.codegens.items())),
        )

    objects = [a] + [c for c in cat.sorted_objects() if c != a]
    for c in objects:
        x = const_cosimplicial(m, c, k)
        for maps in _projection_maps_cosimplicial(m, a, x):
            if is_cosimplicial_resolution(x).ok:
                seen.add(signature(x))
                yield x, maps
                count += 1
                if limit is not None and count >= limit:
                    return
            break
    if not search:
        return
    for levels in itertools.product(cat.sorted_objects(), repeat=k + 1):
        for x in _cosimplicial_operator_tables(m, levels):
            if signature(x) in seen:
                continue
            for maps in _projection_maps_cosimplicial(m, a, x):
                if is_cosimplicial_resolution(x).ok:
                    seen.add(signature(x))
                    yield x, maps
                    count += 1
                    if limit is not None and count >= limit:
                        return
                break


def build_simplicial_resolution(m, b, k):
    """A simplicial resolution of b with a trivial-cofibration section."""
    for x, maps in enumerate_simplicial_resolutions(m, b, k, search=True):
        return x, maps
    raise ValueError("no resolution found within M")


def build_cosimplicial_resolution(m, a, k):
    """A cosimplicial resolution of a with a trivial-fibration projection."""
    for x, maps in enumerate_cosimplicial_resolutions(m, a, k, search=True):
        return x, maps
    raise ValueError("no resolution found within M")


# ---------------------------------------------------------------------------
# hom-complexes


def _checked_sset(k, levels, faces, degens, meta=None):
    out = S.TruncSSet(k, levels, faces, degens, meta=meta)
    issues = S.validate_sset(out)
    assert not issues, issues[:3]
    return out


def right_hom_complex(a, bs):
    """The simplicial set n |-> Hom(a, B_n), operators by postcomposition."""
    cat = bs.model.cat
    k = bs.k
    levels = [cat.hom(a, bs.levels[n]) for n in range(k + 1)]
    faces = {
        key: {f: cat.compose(g, f) for f in levels[key[0]]}
        for key, g in bs.faces.items()
    }
    degens = {
        key: {f: cat.compose(g, f) for f in levels[key[0]]}
        for key, g in bs.degens.items()
    }
    return _checked_sset(k, levels, faces, degens, meta={"kind": "right-hom"})


def left_hom_complex(ac, b):
    """The simplicial set n |-> Hom(A^n, b), operators by precomposition."""
    cat = ac.model.cat
    k = ac.k
    levels = [cat.hom(ac.levels[n], b) for n in range(k + 1)]
    faces = {
        key: {f: cat.compose(f, g) for f in levels[key[0]]}
        for key, g in ac.cofaces.items()
    }
    degens = {
        key: {f: cat.compose(f, g) for f in levels[key[0]]}
        for key, g in ac.codegens.items()
    }
    return _checked_sset(k, levels, faces, degens, meta={"kind": "left-hom"})


def total_hom_complex(ac, bs):
    """The simplicial set n |-> Hom(A^n, B_n) with mixed operator action."""
    assert ac.model is bs.model or ac.model == bs.model
    cat = ac.model.cat
    k = min(ac.k, bs.k)
    levels = [cat.hom(ac.levels[n], bs.levels[n]) for n in range(k + 1)]
    faces = {}
    degens = {}
    for n in range(1, k + 1):
        for i in range(n + 1):
            faces[(n, i)] = {
                f: cat.compose(
                    cat.compose(bs.faces[(n, i)], f), ac.cofaces[(n, i)]
                )
                for f in levels[n]
            }
    for n in range(k):
        for i in range(n + 1):
            degens[(n, i)] = {
                f: cat.compose(
                    cat.compose(bs.degens[(n, i)], f), ac.codegens[(n, i)]
                )
                for f in levels[n]
            }
    return _checked_sset(k, levels, faces, degens, meta={"kind": "total-hom"})


# ---------------------------------------------------------------------------
# cosimplicial simplicial sets and totalization


@dataclass(frozen=True)
class CosimpSSet:
    """A cosimplicial object of truncated simplicial sets.

    ``cofaces[(n, i)]`` maps level n-1 to level n and ``codegens[(n, i)]``
    maps level n+1 to level n, both as simplicial maps.
    """

    levels: tuple
    cofaces: dict
    codegens: dict

    @property
    def k(self):
        return len(self.levels) - 1


def cosimp_sset_action(cs, vals, m, n):
    """The simplicial map level m -> level n induced by monotone [m] -> [n]."""
    ops = S.monotone_factorization(vals, m, n)
    ordered = [op for op in ops if op[0] == "d"] + [
        op for op in reversed(ops) if op[0] == "s"
    ]
    result = S.identity_map(cs.levels[n])
    lvl = n
    for kind, i in ordered:
        if kind == "d":
            result = S.compose_maps(result, cs.cofaces[(lvl, i)])
            lvl -= 1
        else:
            result = S.compose_maps(result, cs.codegens[(lvl, i)])
            lvl += 1
    assert lvl == m
    return result


def cosimp_sset_violations(cs):
    issues = []
    for key, f in list(cs.cofaces.items()) + list(cs.codegens.items()):
        issues.extend(S.sset_map_violations(f))
    if issues:
        return issues

    def eq(f, g):
        return all(
            f.apply(n, x) == g.apply(n, x)
            for n in range(f.source.k + 1)
            for x in f.source.level(n)
        )

    k = cs.k
    for a in range(k + 1):
        for b in range(k + 1):
            for c in range(k + 1):
                for f in monotone_maps(a, b):
                    xf = cosimp_sset_action(cs, f, a, b)
                    for g in monotone_maps(b, c):
                        comp = tuple(g[v] for v in f)
                        xg = cosimp_sset_action(cs, g, b, c)
                        if not eq(
                            cosimp_sset_action(cs, comp, a, c),
                            S.compose_maps(xg, xf),
                        ):
                            issues.append(
                                f"functoriality fails for {f} then {g}"
                            )
                            return issues
    return issues


def _delta_post(vals, i):
    return tuple(v if v < i else v + 1 for v in vals)


def _sigma_post(vals, i):
    return tuple(v if v <= i else v - 1 for v in vals)


def _serialize_level_maps(lm):
    return tuple(
        tuple(sorted(lm[n].items(), key=lambda kv: repr(kv)))
        for n in sorted(lm)
    )


def tot(cs, k=None):
    """The finite end computing the totalization of a cosimplicial sset.

    An n-simplex is a family of simplicial maps standard_simplex(n) x
    standard_simplex(m) -> level m, natural in m; naturality is imposed on
    the elementary operators, which generate all monotone maps.
    """
    if k is None:
        k = cs.k
    kx = cs.levels[0].k
    deltas = [S.standard_simplex(n, kx) for n in range(max(k, cs.k) + 1)]
    products = {
        (n, m): S.product_sset(deltas[n], deltas[m])
        for n in range(k + 1)
        for m in range(cs.k + 1)
    }
    candidates = {
        (n, m): enumerate_sset_maps(products[(n, m)], cs.levels[m])
        for (n, m) in products
    }

    def compatible(n, prev, phi, m):
        """Check naturality between phi at level m and prev at level m-1."""
        pm = products[(n, m)]
        pm1 = products[(n, m - 1)]
        for i in range(m + 1):
            cof = cs.cofaces[(m, i)]
            for p in range(kx + 1):
                for (u, w) in pm1.level(p):
                    if cof.apply(p, prev.apply(p, (u, w))) != phi.apply(
                        p, (u, _delta_post(w, i))
                    ):
                        return False
        for i in range(m):
            cod = cs.codegens[(m - 1, i)]
            for p in range(kx + 1):
                for (u, w) in pm.level(p):
                    if cod.apply(p, phi.apply(p, (u, w))) != prev.apply(
                        p, (u, _sigma_post(w, i))
                    ):
                        return False
        return True

    families = {}
    registry = {}
    for n in range(k + 1):
        found = []

        def extend(m, partial):
            if m > cs.k:
                found.append(tuple(partial))
                return
            for phi in candidates[(n, m)]:
                if m == 0 or compatible(n, partial[-1], phi, m):
                    partial.append(phi)
                    extend(m + 1, partial)
                    partial.pop()

        extend(0, [])
        families[n] = []
        for fam in found:
            ser = tuple(_serialize_level_maps(phi.level_maps) for phi in fam)
            families[n].append(ser)
            registry[(n, ser)] = fam

    def transform(n, ser, move):
        """Precompose every member with a map on the first simplex factor."""
        fam = registry[(n, ser)]
        out = []
        for m, phi in enumerate(fam):
            src = products[(move[2], m)]
            lm = {
                p: {
                    (u, w): phi.apply(p, (move[0](u), w))
                    for (u, w) in src.level(p)
                }
                for p in range(kx + 1)
            }
            out.append(lm)
        return tuple(_serialize_level_maps(lm) for lm in out)

    levels = [sorted(set(families[n]), key=repr) for n in range(k + 1)]
    level_sets = [set(lv) for lv in levels]
    faces = {}
    degens = {}
    for n in range(1, k + 1):
        for i in range(n + 1):
            table = {
                ser: transform(n, ser, (lambda u, i=i: _delta_post(u, i), n, n - 1))
                for ser in levels[n]
            }
            assert all(img in level_sets[n - 1] for img in table.values()), (
                "face image escaped the enumerated families"
            )
            faces[(n, i)] = table
    for n in range(k):
        for i in range(n + 1):
            table = {
                ser: transform(n, ser, (lambda u, i=i: _sigma_post(u, i), n, n + 1))
                for ser in levels[n]
            }
            assert all(img in level_sets[n + 1] for img in table.values()), (
                "degeneracy image escaped the enumerated families"
            )
            degens[(n, i)] = table
    return _checked_sset(k, levels, faces, degens, meta={"kind": "tot"})


def enumerate_sset_maps(x, y, limit=None):
    return S.enumerate_sset_maps(x, y, limit)


def enriched_hom_s(a, b, k=None):
    """Hom-space of the simplicial enrichment on simplicial objects.

    Totalizes the cosimplicial simplicial set m |-> Hom(A_m, B_bullet).
    """
    cat = a.model.cat
    if k is None:
        k = min(a.k, b.k)
    levels = tuple(right_hom_complex(a.levels[m], b) for m in range(a.k + 1))

    def precompose(src, tgt, g):
        lm = {
            n: {f: cat.compose(f, g) for f in src.level(n)}
            for n in range(src.k + 1)
        }
        out = S.SSetMap(src, tgt, lm)
        assert not S.sset_map_violations(out)
        return out

    cofaces = {
        key: precompose(levels[key[0] - 1], levels[key[0]], g)
        for key, g in a.faces.items()
        if key[0] <= a.k
    }
    codegens = {
        key: precompose(levels[key[0] + 1], levels[key[0]], g)
        for key, g in a.degens.items()
    }
    return tot(CosimpSSet(levels, cofaces, codegens), k)


def enriched_hom_c(a, b, k=None):
    """Hom-space of the enrichment on cosimplicial objects."""
    cat = a.model.cat
    if k is None:
        k = min(a.k, b.k)
    levels = tuple(left_hom_complex(a, b.levels[m]) for m in range(b.k + 1))

    def postcompose(src, tgt, g):
        lm = {
            n: {f: cat.compose(g, f) for f in src.level(n)}
            for n in range(src.k + 1)
        }
        out = S.SSetMap(src, tgt, lm)
        assert not S.sset_map_violations(out)
        return out

    cofaces = {
        key: postcompose(levels[key[0] - 1], levels[key[0]], g)
        for key, g in b.cofaces.items()
    }
    codegens = {
        key: postcompose(levels[key[0] + 1], levels[key[0]], g)
        for key, g in b.codegens.items()
    }
    return tot(CosimpSSet(levels, cofaces, codegens), k)


# ---------------------------------------------------------------------------
# weak-equivalence preservation, derived hom-spaces


def weq_preservation_check(m, resolution, d):
    """Check that homming out of (into) a resolution preserves weqs.

    For a simplicial resolution, every weak equivalence between cofibrant
    objects must induce weq evidence on right hom-complexes; dually for a
    cosimplicial resolution with fibrant objects and left hom-complexes.
    """
    cat = m.cat
    cases = []
    simplicial = isinstance(resolution, SimplicialObj)
    for f in cat.sorted_morphisms():
        if f not in m.weq or cat.is_identity(f):
            continue
        src, dst = cat.morphisms[f]
        if simplicial:
            if not (m.is_cofibrant(src) and m.is_cofibrant(dst)):
                continue
            hom_src = right_hom_complex(dst, resolution)
            hom_tgt = right_hom_complex(src, resolution)
            lm = {
                n: {g: cat.compose(g, f) for g in hom_src.level(n)}
                for n in range(hom_src.k + 1)
            }
        else:
            if not (m.is_fibrant(src) and m.is_fibrant(dst)):
                continue
            hom_src = left_hom_complex(resolution, src)
            hom_tgt = left_hom_complex(resolution, dst)
            lm = {
                n: {g: cat.compose(f, g) for g in hom_src.level(n)}
                for n in range(hom_src.k + 1)
            }
        induced = S.SSetMap(hom_src, hom_tgt, lm)
        assert not S.sset_map_violations(induced)
        verdict = S.weq_evidence(induced, d)
        cases.append({"morphism": f, "weq_evidence": verdict})
    return {
        "side": "right" if simplicial else "left",
        "cases": cases,
        "all_pass": all(c["weq_evidence"] for c in cases),
    }


def derived_hom(m, a, b, k):
    """The total hom-complex of freshly built resolutions of a and b."""
    ac, p_maps = build_cosimplicial_resolution(m, a, k)
    bs, i_maps = build_simplicial_resolution(m, b, k)
    out = total_hom_complex(ac, bs)
    out.meta["cosimplicial_certificate"] = is_cosimplicial_resolution(ac)
    out.meta["simplicial_certificate"] = is_simplicial_resolution(bs)
    out.meta["projection_maps"] = p_maps
    out.meta["section_maps"] = i_maps
    return out


def middle_double_colimit(ac, bs, k=None):
    """The double homotopy colimit of the hom-set diagram of resolutions.

    For each n the inner diagram over the opposite truncated simplex
    category sends m to the discrete simplicial set on Hom(A^n, B_m); the
    outer diagram collects the inner colimits contravariantly in n.
    """
    cat = ac.model.cat
    if k is None:
        k = min(ac.k, bs.k)
    shape = opposite(truncated_simplex_category(k))

    def inner(n):
        ob = {
            mm: S.discrete(cat.hom(ac.levels[n], bs.levels[mm]), k)
            for mm in range(k + 1)
        }
        mor = {}
        for fid, (src, dst) in shape.morphisms.items():
            m1, m2, vals = fid
            post = simplicial_action(bs, vals, m1, m2)
            lm = {
                q: {g: cat.compose(post, g) for g in ob[src].level(q)}
                for q in range(k + 1)
            }
            mor[fid] = S.SSetMap(ob[src], ob[dst], lm)
        return H.SSetDiagram(shape, ob, mor)

    inner_colims = {n: H.bk_colim(inner(n), k) for n in range(k + 1)}
    outer_mor = {}
    for fid, (src, dst) in shape.morphisms.items():
        n1, n2, vals = fid
        pre = cosimplicial_action(ac, vals, n1, n2)
        y_src, y_dst = inner_colims[src], inner_colims[dst]
        lm = {
            q: {
                (objs, fs, x): (objs, fs, cat.compose(x, pre))
                for (objs, fs, x) in y_src.level(q)
            }
            for q in range(k + 1)
        }
        mp = S.SSetMap(y_src, y_dst, lm)
        assert not S.sset_map_violations(mp)
        outer_mor[fid] = mp
    outer = H.SSetDiagram(shape, inner_colims, outer_mor)
    assert not H.sset_diagram_violations(outer)
    return H.dual_bk_colim(outer, k)


# ---------------------------------------------------------------------------
# asphericity of resolutions


def _under_weq_cofibrations(m, b):
    """The category of trivial cofibrations out of b with weqs under b."""
    cat = m.cat
    objs = [j for j in cat.sorted_morphisms() if j in m.triv_cof and cat.morphisms[j][0] == b]
    morphisms = {}
    identity = {}
    for j1 in objs:
        for j2 in objs:
            for w in cat.hom(cat.morphisms[j1][1], cat.morphisms[j2][1]):
                if w in m.weq and cat.compose(w, j1) == j2:
                    morphisms[(j1, j2, w)] = (j1, j2)
    for j in objs:
        identity[j] = (j, j, cat.id_of(cat.morphisms[j][1]))
    composites = {}
    for g in morphisms:
        for f in morphisms:
            if f[1] == g[0]:
                composites[(g, f)] = (f[0], g[1], cat.compose(g[2], f[2]))
    return validate_category(objs, morphisms, identity, composites)


def _over_weq_fibrations(m, a):
    """The category of trivial fibrations into a with weqs over a."""
    cat = m.cat
    objs = [q for q in cat.sorted_morphisms() if q in m.triv_fib and cat.morphisms[q][1] == a]
    morphisms = {}
    identity = {}
    for q1 in objs:
        for q2 in objs:
            for w in cat.hom(cat.morphisms[q1][0], cat.morphisms[q2][0]):
                if w in m.weq and cat.compose(q2, w) == q1:
                    morphisms[(q1, q2, w)] = (q1, q2)
    for q in objs:
        identity[q] = (q, q, cat.id_of(cat.morphisms[q][0]))
    composites = {}
    for g in morphisms:
        for f in morphisms:
            if f[1] == g[0]:
                composites[(g, f)] = (f[0], g[1], cat.compose(g[2], f[2]))
    return validate_category(objs, morphisms, identity, composites)


def resolution_asphericity_check(m, x, d, side="simplicial", resolution=None,
                                 maps=None, k=None):
    """Asphericity of the diagram of a resolution in the weq slice category.

    For a simplicial resolution of x the diagram runs from the opposite
    truncated simplex category to the category of trivial cofibrations out
    of x, and must be left aspherical; dually for a cosimplicial resolution
    with trivial fibrations into x and right asphericity.
    """
    if k is None:
        k = d + 1
    cat = m.cat
    if resolution is None:
        if side == "simplicial":
            resolution, maps = build_simplicial_resolution(m, x, k)
        else:
            resolution, maps = build_cosimplicial_resolution(m, x, k)
    if side == "simplicial":
        if any(i not in m.triv_cof for i in maps):
            raise ValueError("comparison maps are not trivial cofibrations")
        target = _under_weq_cofibrations(m, x)
        shape = opposite(truncated_simplex_category(resolution.k))
        object_map = {n: maps[n] for n in range(resolution.k + 1)}
        morphism_map = {}
        for fid, (src, dst) in shape.morphisms.items():
            n1, n2, vals = fid
            w = simplicial_action(resolution, vals, n1, n2)
            morphism_map[fid] = (maps[src], maps[dst], w)
        u = Functor(shape, target, object_map, morphism_map)
        validate_functor(u)
        report = H.is_left_aspherical(u, d, k)
        report["side"] = "left"
    else:
        if any(p not in m.triv_fib for p in maps):
            raise ValueError("comparison maps are not trivial fibrations")
        target = _over_weq_fibrations(m, x)
        shape = truncated_simplex_category(resolution.k)
        object_map = {n: maps[n] for n in range(resolution.k + 1)}
        morphism_map = {}
        for fid, (src, dst) in shape.morphisms.items():
            n1, n2, vals = fid
            w = cosimplicial_action(resolution, vals, n1, n2)
            morphism_map[fid] = (maps[src], maps[dst], w)
        u = Functor(shape, target, object_map, morphism_map)
        validate_functor(u)
        report = H.is_right_aspherical(u, d, k)
        report["side"] = "right"
    report["category_size"] = len(target.objects)
    return report


# ---------------------------------------------------------------------------
# the four-model comparison


def comparison_report(m, a, b, k, d, max_length=4, middle_k=2):
    """Compare the four models of the derived hom-space from a to b.

    S1 is the total hom-complex of resolutions, S2 the double homotopy
    colimit of the hom-set diagram, S3 the nerve of the category of special
    hammocks, and S4 the reduced-hammock hom-space.  The report carries
    exact pi0 comparisons, homology tables on the common reliable degrees,
    weq evidence for the pasting map S3 -> S4, and naturality spot checks.

    S2 has its own truncation (default 2): its size grows as the square of
    the nerve of the truncated simplex category, which rules out depth 3.
    """
    cat = m.cat
    ac, p_maps = build_cosimplicial_resolution(m, a, k)
    bs, i_maps = build_simplicial_resolution(m, b, k)
    s1 = total_hom_complex(ac, bs)
    s2 = middle_double_colimit(ac, bs, min(middle_k, k))
    t_map = HK.nerve_t_to_hom(m, a, b, k, max_length)
    s3 = t_map.source
    s4 = t_map.target
    spaces = {"S1": s1, "S2": s2, "S3": s3, "S4": s4}
    pi0_sizes = {name: len(S.pi0(x)[0]) for name, x in spaces.items()}
    pi0_agree = len(set(pi0_sizes.values())) == 1
    ho_counts = MC.homotopy_category_hom_counts(m, max_length)
    ho_count = ho_counts.get((a, b), 0)
    common_degree = min([d] + [x.k - 1 for x in spaces.values()])
    homology = {
        name: [
            (h["degree"], tuple(h["torsion"]), h["free_rank"])
            for h in S.homology_groups(x, common_degree)
            if h["reliable"]
        ]
        for name, x in spaces.items()
    }
    homology_agree = len({tuple(v) for v in homology.values()}) == 1
    evidence = S.weq_evidence(t_map, d)
    fs = [cat.id_of(a)] + [
        f
        for f in cat.sorted_morphisms()
        if cat.morphisms[f][1] == a and not cat.is_identity(f)
    ][:1]
    gs = [cat.id_of(b)] + [
        g
        for g in cat.sorted_morphisms()
        if cat.morphisms[g][0] == b and not cat.is_identity(g)
    ][:1]
    naturality = []
    for f in fs:
        for g in gs:
            check = HK.naturality_square_check(m, f, g, k, d, max_length)
            naturality.append({"f": f, "g": g, **check})
    return {
        "pair": (a, b),
        "k": k,
        "d": d,
        "max_length": max_length,
        "level_counts": {name: x.level_counts() for name, x in spaces.items()},
        "pi0_sizes": pi0_sizes,
        "pi0_agree": pi0_agree,
        "ho_hom_count": ho_count,
        "pi0_matches_ho_hom": all(v == ho_count for v in pi0_sizes.values()),
        "common_degree": common_degree,
        "homology": homology,
        "homology_agree": homology_agree,
        "special_to_hammock_evidence": evidence,
        "naturality": naturality,
    }
