"""Truncated simplicial sets, bisimplicial sets, maps, and basic operations.

A TruncSSet stores simplices level by level (0..k) together with explicit
face and degeneracy dictionaries.  All simplicial identities are checkable
exhaustively via :func:`validate_sset`.
"""

from __future__ import annotations

import heapq
import itertools


def _key(x):
    return repr(x)


class TruncSSet:
    """A simplicial set truncated at level k.

    ``levels[n]`` is the list of n-simplices (canonically sorted);
    ``faces[(n, i)]`` and ``degens[(n, i)]`` are dictionaries implementing
    d_i : level n -> level n-1 and s_i : level n -> level n+1.
    """

    def __init__(self, k, levels, faces, degens, meta=None):
        self.k = k
        self.levels = [sorted(lv, key=_key) for lv in levels]
        while len(self.levels) < k + 1:
            self.levels.append([])
        self.faces = faces
        self.degens = degens
        self.meta = dict(meta or {})
        self._level_sets = [set(lv) for lv in self.levels]

    def level(self, n):
        return self.levels[n] if 0 <= n <= self.k else []

    def has(self, n, x):
        return 0 <= n <= self.k and x in self._level_sets[n]

    def d(self, n, i, x):
        return self.faces[(n, i)][x]

    def s(self, n, i, x):
        return self.degens[(n, i)][x]

    def is_degenerate(self, n, x):
        if n == 0:
            return False
        for i in range(n):
            for y in self.level(n - 1):
                if self.s(n - 1, i, y) == x:
                    return True
        return False

    def nondegenerate(self, n):
        if n == 0:
            return list(self.level(0))
        degenerate = {
            self.s(n - 1, i, y) for i in range(n) for y in self.level(n - 1)
        }
        return [x for x in self.level(n) if x not in degenerate]

    def level_counts(self):
        return [len(lv) for lv in self.levels]

    def is_empty(self):
        return not self.level(0)


def validate_sset(x):
    """Check every simplicial identity instance; return a list of failures."""
    issues = []
    k = x.k
    for n in range(1, k + 1):
        for i in range(n + 1):
            fmap = x.faces.get((n, i))
            if fmap is None:
                issues.append(f"missing face map d_{i} at level {n}")
                continue
            for sx in x.level(n):
                if sx not in fmap:
                    issues.append(f"d_{i} undefined on level-{n} simplex {sx!r}")
                elif not x.has(n - 1, fmap[sx]):
                    issues.append(
                        f"d_{i} leaves level {n - 1}: {sx!r} -> {fmap[sx]!r}"
                    )
    for n in range(k):
        for i in range(n + 1):
            smap = x.degens.get((n, i))
            if smap is None:
                issues.append(f"missing degeneracy s_{i} at level {n}")
                continue
            for sx in x.level(n):
                if sx not in smap:
                    issues.append(f"s_{i} undefined on level-{n} simplex {sx!r}")
                elif not x.has(n + 1, smap[sx]):
                    issues.append(
                        f"s_{i} leaves level {n + 1}: {sx!r} -> {smap[sx]!r}"
                    )
    if issues:
        return issues
    # d_i d_j = d_{j-1} d_i for i < j
    for n in range(2, k + 1):
        for j in range(1, n + 1):
            for i in range(j):
                for sx in x.level(n):
                    if x.d(n - 1, i, x.d(n, j, sx)) != x.d(
                        n - 1, j - 1, x.d(n, i, sx)
                    ):
                        issues.append(
                            f"d_{i} d_{j} != d_{j - 1} d_{i} at level {n} on {sx!r}"
                        )
    # s_i s_j = s_{j+1} s_i for i <= j
    for n in range(k - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                for sx in x.level(n):
                    if x.s(n + 1, i, x.s(n, j, sx)) != x.s(
                        n + 1, j + 1, x.s(n, i, sx)
                    ):
                        issues.append(
                            f"s_{i} s_{j} != s_{j + 1} s_{i} at level {n} on {sx!r}"
                        )
    # d_i s_j relations
    for n in range(k):
        for j in range(n + 1):
            for i in range(n + 2):
                for sx in x.level(n):
                    lhs = x.d(n + 1, i, x.s(n, j, sx))
                    if i < j:
                        rhs = x.s(n - 1, j - 1, x.d(n, i, sx))
                    elif i in (j, j + 1):
                        rhs = sx
                    else:
                        rhs = x.s(n - 1, j, x.d(n, i - 1, sx))
                    if lhs != rhs:
                        issues.append(
                            f"d_{i} s_{j} identity fails at level {n} on {sx!r}"
                        )
    return issues


class SSetMap:
    """A level-wise map of truncated simplicial sets."""

    def __init__(self, source, target, level_maps):
        self.source = source
        self.target = target
        self.level_maps = level_maps

    def apply(self, n, x):
        return self.level_maps[n][x]


def sset_map_violations(f):
    issues = []
    x, y = f.source, f.target
    if x.k != y.k:
        issues.append("mismatched truncation levels")
        return issues
    for n in range(x.k + 1):
        lm = f.level_maps.get(n)
        if lm is None:
            issues.append(f"missing level function at level {n}")
            continue
        for sx in x.level(n):
            if sx not in lm:
                issues.append(f"map undefined on level-{n} simplex {sx!r}")
            elif not y.has(n, lm[sx]):
                issues.append(f"map leaves target at level {n}: {sx!r}")
    if issues:
        return issues
    for n in range(1, x.k + 1):
        for i in range(n + 1):
            for sx in x.level(n):
                if f.apply(n - 1, x.d(n, i, sx)) != y.d(n, i, f.apply(n, sx)):
                    issues.append(f"map breaks d_{i} at level {n} on {sx!r}")
    for n in range(x.k):
        for i in range(n + 1):
            for sx in x.level(n):
                if f.apply(n + 1, x.s(n, i, sx)) != y.s(n, i, f.apply(n, sx)):
                    issues.append(f"map breaks s_{i} at level {n} on {sx!r}")
    return issues


def identity_map(x):
    return SSetMap(x, x, {n: {s: s for s in x.level(n)} for n in range(x.k + 1)})


def compose_maps(g, f):
    return SSetMap(
        f.source,
        g.target,
        {
            n: {s: g.apply(n, f.apply(n, s)) for s in f.source.level(n)}
            for n in range(f.source.k + 1)
        },
    )


def discrete(members, k):
    """The discrete simplicial set on a finite set: all operators identity."""
    members = sorted(members, key=_key)
    levels = [list(members) for _ in range(k + 1)]
    ident = {m: m for m in members}
    faces = {(n, i): dict(ident) for n in range(1, k + 1) for i in range(n + 1)}
    degens = {(n, i): dict(ident) for n in range(k) for i in range(n + 1)}
    return TruncSSet(k, levels, faces, degens)


def standard_simplex(m, k):
    """Δ^m truncated at k: level n = monotone maps [n] -> [m]."""
    from .fincat import monotone_maps

    levels = [monotone_maps(n, m) for n in range(k + 1)]
    faces = {}
    degens = {}
    for n in range(1, k + 1):
        for i in range(n + 1):
            faces[(n, i)] = {
                v: v[:i] + v[i + 1 :] for v in levels[n]
            }
    for n in range(k):
        for i in range(n + 1):
            degens[(n, i)] = {
                v: v[: i + 1] + v[i:] for v in levels[n]
            }
    return TruncSSet(k, levels, faces, degens)


def opposite_sset(x):
    """Reindex operators: d_i -> d_{n-i}, s_i -> s_{n-i}; an involution."""
    faces = {
        (n, i): x.faces[(n, n - i)] for (n, i) in x.faces
    }
    degens = {
        (n, i): x.degens[(n, n - i)] for (n, i) in x.degens
    }
    return TruncSSet(x.k, [list(lv) for lv in x.levels], faces, degens, x.meta)


def pi0(x):
    """Connected components: coequalizer of d_0, d_1 on level 1.

    Returns (components, assignment) where components is a sorted list of
    representatives and assignment maps each vertex to its representative.
    """
    parent = {v: v for v in x.level(0)}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            if _key(ra) < _key(rb):
                parent[rb] = ra
            else:
                parent[ra] = rb

    if x.k >= 1:
        for e in x.level(1):
            union(x.d(1, 0, e), x.d(1, 1, e))
    assignment = {v: find(v) for v in x.level(0)}
    components = sorted(set(assignment.values()), key=_key)
    return components, assignment


def pi0_map(f):
    """The induced map on components; returns a dict rep -> rep."""
    comps_x, assign_x = pi0(f.source)
    comps_y, assign_y = pi0(f.target)
    out = {}
    for v in f.source.level(0):
        out[assign_x[v]] = assign_y[f.apply(0, v)]
    return out


def pi0_bijective(f):
    m = pi0_map(f)
    comps_y, _ = pi0(f.target)
    return len(set(m.values())) == len(m) and set(m.values()) == set(comps_y)


class BiTruncSSet:
    """A bisimplicial set truncated at (k, k).

    ``levels[(p, q)]`` is the list of (p, q)-simplices; ``hfaces[(p, q, i)]``
    is the horizontal d_i : (p, q) -> (p-1, q), and similarly for
    ``vfaces``, ``hdegens``, ``vdegens``.
    """

    def __init__(self, k, levels, hfaces, vfaces, hdegens, vdegens):
        self.k = k
        self.levels = {pq: sorted(lv, key=_key) for pq, lv in levels.items()}
        self.hfaces = hfaces
        self.vfaces = vfaces
        self.hdegens = hdegens
        self.vdegens = vdegens

    def level(self, p, q):
        return self.levels.get((p, q), [])


def validate_bisset(x):
    issues = []
    k = x.k
    # each row and each column must itself be a simplicial set
    for p in range(k + 1):
        row = row_sset(x, p)
        for msg in validate_sset(row):
            issues.append(f"row {p}: {msg}")
    for q in range(k + 1):
        col = column_sset(x, q)
        for msg in validate_sset(col):
            issues.append(f"column {q}: {msg}")
    # horizontal operators commute with vertical operators
    for p in range(k + 1):
        for q in range(k + 1):
            for sx in x.level(p, q):
                for i in range(p + 1):
                    if p == 0:
                        break
                    for j in range(q + 1):
                        if q == 0:
                            break
                        a = x.vfaces[(p - 1, q, j)][x.hfaces[(p, q, i)][sx]]
                        b = x.hfaces[(p, q - 1, i)][x.vfaces[(p, q, j)][sx]]
                        if a != b:
                            issues.append(
                                f"h/v face commutation fails at ({p},{q}) on {sx!r}"
                            )
                for i in range(p + 1):
                    if p == k:
                        break
                    for j in range(q + 1):
                        if q == k:
                            continue
                        a = x.vdegens[(p + 1, q, j)][x.hdegens[(p, q, i)][sx]]
                        b = x.hdegens[(p, q + 1, i)][x.vdegens[(p, q, j)][sx]]
                        if a != b:
                            issues.append(
                                f"h/v degeneracy commutation fails at ({p},{q})"
                            )
    return issues


def row_sset(x, p):
    """Row p of a bisimplicial set: q -> X_{p, q} with vertical operators."""
    levels = [x.level(p, q) for q in range(x.k + 1)]
    faces = {
        (q, j): x.vfaces[(p, q, j)] for q in range(1, x.k + 1) for j in range(q + 1)
    }
    degens = {
        (q, j): x.vdegens[(p, q, j)] for q in range(x.k) for j in range(q + 1)
    }
    return TruncSSet(x.k, levels, faces, degens)


def column_sset(x, q):
    levels = [x.level(p, q) for p in range(x.k + 1)]
    faces = {
        (p, i): x.hfaces[(p, q, i)] for p in range(1, x.k + 1) for i in range(p + 1)
    }
    degens = {
        (p, i): x.hdegens[(p, q, i)] for p in range(x.k) for i in range(p + 1)
    }
    return TruncSSet(x.k, levels, faces, degens)


def diagonal(x):
    """Diagonal simplicial set: level n = X_{n, n}; d_i = h d_i then v d_i."""
    k = x.k
    levels = [x.level(n, n) for n in range(k + 1)]
    faces = {}
    degens = {}
    for n in range(1, k + 1):
        for i in range(n + 1):
            faces[(n, i)] = {
                sx: x.vfaces[(n - 1, n, i)][x.hfaces[(n, n, i)][sx]]
                for sx in levels[n]
            }
    for n in range(k):
        for i in range(n + 1):
            degens[(n, i)] = {
                sx: x.vdegens[(n + 1, n, i)][x.hdegens[(n, n, i)][sx]]
                for sx in levels[n]
            }
    return TruncSSet(k, levels, faces, degens)


def external_product(x, y):
    """The bisimplicial set (p, q) -> X_p × Y_q."""
    k = x.k
    levels = {
        (p, q): [(a, b) for a in x.level(p) for b in y.level(q)]
        for p in range(k + 1)
        for q in range(k + 1)
    }
    hfaces, vfaces, hdegens, vdegens = {}, {}, {}, {}
    for p in range(k + 1):
        for q in range(k + 1):
            for i in range(p + 1):
                if p >= 1:
                    hfaces[(p, q, i)] = {
                        (a, b): (x.d(p, i, a), b) for (a, b) in levels[(p, q)]
                    }
                if p < k:
                    hdegens[(p, q, i)] = {
                        (a, b): (x.s(p, i, a), b) for (a, b) in levels[(p, q)]
                    }
            for j in range(q + 1):
                if q >= 1:
                    vfaces[(p, q, j)] = {
                        (a, b): (a, y.d(q, j, b)) for (a, b) in levels[(p, q)]
                    }
                if q < k:
                    vdegens[(p, q, j)] = {
                        (a, b): (a, y.s(q, j, b)) for (a, b) in levels[(p, q)]
                    }
    return BiTruncSSet(k, levels, hfaces, vfaces, hdegens, vdegens)


def product_sset(x, y):
    """Levelwise product X × Y with componentwise operators."""
    k = x.k
    levels = [
        [(a, b) for a in x.level(n) for b in y.level(n)] for n in range(k + 1)
    ]
    faces = {}
    degens = {}
    for n in range(1, k + 1):
        for i in range(n + 1):
            faces[(n, i)] = {
                (a, b): (x.d(n, i, a), y.d(n, i, b)) for (a, b) in levels[n]
            }
    for n in range(k):
        for i in range(n + 1):
            degens[(n, i)] = {
                (a, b): (x.s(n, i, a), y.s(n, i, b)) for (a, b) in levels[n]
            }
    return TruncSSet(k, levels, faces, degens)


def monotone_action(x, vals, m, n):
    """The structure map X_n -> X_m induced by a monotone map [m] -> [n].

    Returns a dict simplex -> simplex, built by composing elementary face
    and degeneracy dictionaries.
    """
    ops = monotone_factorization(vals, m, n)
    # contravariance: cofaces act first in discovery order, codegeneracies
    # act afterwards in reverse discovery order
    ordered = [op for op in ops if op[0] == "d"] + [
        op for op in reversed(ops) if op[0] == "s"
    ]
    out = {sx: sx for sx in x.level(n)}
    lvl = n
    for kind, i in ordered:
        if kind == "d":
            out = {sx: x.d(lvl, i, y) for sx, y in out.items()}
            lvl -= 1
        else:
            out = {sx: x.s(lvl, i, y) for sx, y in out.items()}
            lvl += 1
    assert lvl == m
    return out


def monotone_factorization(vals, m, n):
    """Factor a monotone map [m] -> [n] into elementary maps.

    Returns a list of ('d', i) / ('s', i) such that the map equals the
    left-to-right composite δ/σ chain applied from the last entry first;
    consumers apply the corresponding simplicial operators front to back.
    """
    vals = tuple(vals)
    assert len(vals) == m + 1
    ops = []
    cur = vals
    cur_n = n
    # strip missing values (cofaces) from the top
    image = set(cur)
    for i in range(n, -1, -1):
        if i not in image:
            ops.append(("d", i))
            cur = tuple(v if v < i else v - 1 for v in cur)
            cur_n -= 1
    # strip repeats (codegeneracies)
    changed = True
    while changed:
        changed = False
        for j in range(len(cur) - 1):
            if cur[j] == cur[j + 1]:
                ops.append(("s", cur[j]))
                # removing the repeat corresponds to σ_{value}; adjust domain
                cur = cur[: j + 1] + tuple(
                    v for v in cur[j + 2 :]
                )
                changed = True
                break
    assert cur == tuple(range(cur_n + 1)), (vals, cur)
    return ops


def enumerate_sset_maps(x, y, limit=None):
    """Enumerate simplicial maps X -> Y by level-wise backtracking."""
    out = []
    levels = list(range(x.k + 1))

    def candidates(n, partial, sx):
        opts = []
        for ty in y.level(n):
            ok = True
            if n >= 1:
                for i in range(n + 1):
                    if y.d(n, i, ty) != partial[n - 1][x.d(n, i, sx)]:
                        ok = False
                        break
            if ok:
                opts.append(ty)
        return opts

    def extend(n, partial):
        if limit is not None and len(out) >= limit:
            return
        if n > x.k:
            # degeneracy compatibility
            for m in range(x.k):
                for i in range(m + 1):
                    for sx in x.level(m):
                        if partial[m + 1][x.s(m, i, sx)] != y.s(
                            m, i, partial[m][sx]
                        ):
                            return
            out.append(
                SSetMap(x, y, {m: dict(partial[m]) for m in levels})
            )
            return
        # the face constraints only involve the previous level, so the
        # candidate list per simplex is fixed for the whole level
        simplices = x.level(n)
        cand = [candidates(n, partial, sx) for sx in simplices]
        if any(not c for c in cand):
            return
        for combo in itertools.product(*cand):
            if limit is not None and len(out) >= limit:
                return
            partial[n] = dict(zip(simplices, combo))
            extend(n + 1, partial)
            del partial[n]

    extend(0, {})
    return out


class ChainComplex:
    """Integer chain complex: ranks per degree and boundary matrices.

    ``boundary[n]`` presents d_n : C_n -> C_{n-1} either as a dense list of
    rows (rank_{n-1} x rank_n) or as a sparse list of column dicts
    ``{row: coefficient}``; both are stored column-sparse internally.
    Composites of successive boundaries are checked to vanish at
    construction time.
    """

    def __init__(self, ranks, boundary):
        self.ranks = list(ranks)
        self.cols = {}
        self._factors = {}
        self._dense = {}
        for n, mat in boundary.items():
            if mat and isinstance(mat[0], dict):
                self.cols[n] = [dict(col) for col in mat]
            else:
                cols = [dict() for _ in range(self.rank(n))]
                for i, row in enumerate(mat):
                    for j, v in enumerate(row):
                        if v:
                            cols[j][i] = v
                self.cols[n] = cols
            assert len(self.cols[n]) == self.rank(n)
        for n in range(2, len(self.ranks)):
            outer = self.cols[n - 1]
            for col in self.cols[n]:
                acc = {}
                for mid, v in col.items():
                    for i, w in outer[mid].items():
                        acc[i] = acc.get(i, 0) + v * w
                assert all(e == 0 for e in acc.values()), (
                    f"boundary composite nonzero in degree {n}"
                )

    def rank(self, n):
        return self.ranks[n] if 0 <= n < len(self.ranks) else 0

    def column_matrix(self, n):
        if 1 <= n < len(self.ranks):
            return self.cols[n]
        return []

    def matrix(self, n):
        """Dense row-major form, materialized (and cached) on demand."""
        if not (1 <= n < len(self.ranks)):
            return [[0] * 0 for _ in range(self.rank(n - 1))]
        if n not in self._dense:
            mat = [[0] * self.rank(n) for _ in range(self.rank(n - 1))]
            for j, col in enumerate(self.cols[n]):
                for i, v in col.items():
                    mat[i][j] = v
            self._dense[n] = mat
        return self._dense[n]


def mat_mul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        assert len(row) == inner
        out.append(
            [sum(row[t] * b[t][j] for t in range(inner)) for j in range(cols)]
        )
    return out


def mat_identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def det_unimodular(m):
    """Exact integer determinant by fraction-free elimination; for small m."""
    from fractions import Fraction

    n = len(m)
    if n == 0:
        return 1
    a = [[Fraction(v) for v in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            for c in range(col, n):
                a[r][c] -= f * a[col][c]
    assert det.denominator == 1
    return int(det)


def smith_normal_form(m):
    """Smith normal form with verified unimodular transforms.

    Returns (invariants, U, V) where U.M.V is diagonal with positive
    invariant factors d_1 | d_2 | ... in the top-left block.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [list(row) for row in m]
    u = mat_identity(rows)
    v = mat_identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, f):
        # dst += f * src
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, f):
        for row in a:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(rows, cols):
        # find a pivot of minimal absolute value in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < best[0]):
                    best = (abs(a[i][j]), i, j)
        if best is None:
            break
        _, pi, pj = best
        swap_rows(t, pi)
        swap_cols(t, pj)
        dirty = False
        for i in range(t + 1, rows):
            if a[i][t] != 0:
                q = a[i][t] // a[t][t]
                add_row(t, i, -q)
                if a[i][t] != 0:
                    dirty = True
        for j in range(t + 1, cols):
            if a[t][j] != 0:
                q = a[t][j] // a[t][t]
                add_col(t, j, -q)
                if a[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # pivot must divide every remaining entry
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(offender, t, 1)
            continue
        if a[t][t] < 0:
            negate_row(t)
        t += 1
    invariants = tuple(a[i][i] for i in range(t))
    # verify: U M V = diag, unimodularity, divisibility
    check = mat_mul(mat_mul(u, m), v)
    for i in range(rows):
        for j in range(cols):
            expect = invariants[i] if i == j and i < t else 0
            assert check[i][j] == expect, "transform verification failed"
    assert abs(det_unimodular(u)) == 1
    assert abs(det_unimodular(v)) == 1
    for i in range(1, t):
        assert invariants[i] % invariants[i - 1] == 0
    return invariants, u, v


def _snf_invariants_only(m):
    """Invariant factors of a dense matrix without transform witnesses.

    Same pivoting strategy as smith_normal_form, but skips the U/V
    bookkeeping and verification, whose cost is quadratic/cubic in the
    full matrix dimensions even when the rank is tiny.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [list(row) for row in m]
    t = 0
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < best[0]):
                    best = (abs(a[i][j]), i, j)
        if best is None:
            break
        _, pi, pj = best
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        dirty = False
        for i in range(t + 1, rows):
            if a[i][t] != 0:
                q = a[i][t] // a[t][t]
                a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t] != 0:
                    dirty = True
        for j in range(t + 1, cols):
            if a[t][j] != 0:
                q = a[t][j] // a[t][t]
                for row in a:
                    row[j] -= q * row[t]
                if a[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
            continue
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
        t += 1
    invariants = tuple(abs(a[i][i]) for i in range(t))
    for i in range(1, t):
        assert invariants[i] % invariants[i - 1] == 0
    return invariants


def invariant_factors(m):
    """Invariant factors only, via sparse unit-pivot elimination.

    Accepts a dense row-major matrix or a sparse list of column dicts.
    Entries of simplicial boundary matrices are mostly 0 and +-1; each
    unit pivot contributes an invariant factor 1 and strictly shrinks the
    problem.  Pivots are drawn from a lazily revalidated heap ordered by
    Markowitz cost, keeping selection cheap on large matrices.  The
    (typically tiny) remainder goes through full SNF.
    """
    rows = {}
    cols = {}
    if m and isinstance(m[0], dict):
        for j, col in enumerate(m):
            for i, v in col.items():
                if v:
                    rows.setdefault(i, {})[j] = v
                    cols.setdefault(j, set()).add(i)
    else:
        for i, row in enumerate(m):
            for j, v in enumerate(row):
                if v:
                    rows.setdefault(i, {})[j] = v
                    cols.setdefault(j, set()).add(i)

    def cost(i, j):
        return (len(cols[j]) - 1) * (len(rows[i]) - 1)

    heap = [
        (cost(i, j), i, j)
        for i, row in rows.items()
        for j, v in row.items()
        if v in (1, -1)
    ]
    heapq.heapify(heap)
    units = 0
    while heap:
        c, pi, pj = heapq.heappop(heap)
        row = rows.get(pi)
        if row is None or row.get(pj) not in (1, -1):
            continue
        actual = cost(pi, pj)
        if actual > c:
            heapq.heappush(heap, (actual, pi, pj))
            continue
        pv = row[pj]
        prow = rows.pop(pi)
        for j in prow:
            cols[j].discard(pi)
        for i in list(cols.get(pj, ())):
            other = rows[i]
            factor = other[pj] * pv  # pv is its own inverse
            for j, v in prow.items():
                new = other.get(j, 0) - factor * v
                if new:
                    other[j] = new
                    cols.setdefault(j, set()).add(i)
                    if new in (1, -1):
                        heapq.heappush(heap, (cost(i, j), i, j))
                else:
                    other.pop(j, None)
                    cols[j].discard(i)
            if not other:
                del rows[i]
        units += 1
    if rows:
        live_rows = sorted(rows)
        live_cols = sorted({j for row in rows.values() for j in row})
        col_index = {j: t for t, j in enumerate(live_cols)}
        dense = [[0] * len(live_cols) for _ in live_rows]
        for t, i in enumerate(live_rows):
            for j, v in rows[i].items():
                dense[t][col_index[j]] = v
        rest = _snf_invariants_only(dense)
    else:
        rest = ()
    return (1,) * units + tuple(rest)


def normalized_chain_complex(x):
    """Degeneracy-quotiented chains of a truncated simplicial set.

    Basis in degree n = nondegenerate n-simplices; degenerate faces are
    dropped from the boundary.  Cached per simplicial set.
    """
    cached = getattr(x, "_ncc", None)
    if cached is not None:
        return cached
    bases = [x.nondegenerate(n) for n in range(x.k + 1)]
    index = [
        {sx: i for i, sx in enumerate(basis)} for basis in bases
    ]
    ranks = [len(b) for b in bases]
    boundary = {}
    for n in range(1, x.k + 1):
        cols = []
        for sx in bases[n]:
            col = {}
            for i in range(n + 1):
                face = x.d(n, i, sx)
                row = index[n - 1].get(face)
                if row is not None:
                    col[row] = col.get(row, 0) + (-1 if i % 2 else 1)
            cols.append({r: v for r, v in col.items() if v})
        boundary[n] = cols
    x._ncc = ChainComplex(ranks, boundary)
    return x._ncc


def _boundary_factors(c, n):
    if n not in c._factors:
        if 1 <= n < len(c.ranks) and c.rank(n) and c.rank(n - 1):
            c._factors[n] = invariant_factors(c.column_matrix(n))
        else:
            c._factors[n] = ()
    return c._factors[n]


def homology_of_complex(c, i):
    """H_i as (torsion invariant factors > 1, free rank)."""
    r_i = len(_boundary_factors(c, i)) if i >= 1 else 0
    inv_next = _boundary_factors(c, i + 1)
    torsion = tuple(d for d in inv_next if d > 1)
    free = c.rank(i) - r_i - len(inv_next)
    return torsion, free


def homology(x, i):
    """Homology of the normalized chains; degrees >= k are unreliable.

    Returns {"degree", "torsion", "free_rank", "reliable"}.
    """
    c = normalized_chain_complex(x)
    torsion, free = homology_of_complex(c, i)
    return {
        "degree": i,
        "torsion": list(torsion),
        "free_rank": free,
        "reliable": i <= x.k - 1,
    }


def homology_groups(x, d):
    return [homology(x, i) for i in range(d + 1)]


def chain_map_matrices(f):
    """Matrices of the induced map on normalized chains, per degree.

    A nondegenerate simplex can map to a degenerate one; such images are
    dropped (they vanish in the normalized quotient).
    """
    x, y = f.source, f.target
    bx = [x.nondegenerate(n) for n in range(x.k + 1)]
    by = [y.nondegenerate(n) for n in range(y.k + 1)]
    iy = [{sx: i for i, sx in enumerate(b)} for b in by]
    mats = {}
    for n in range(x.k + 1):
        mat = [[0] * len(bx[n]) for _ in range(len(by[n]))]
        for j, sx in enumerate(bx[n]):
            row = iy[n].get(f.apply(n, sx))
            if row is not None:
                mat[row][j] = 1
        mats[n] = mat
    return mats


def mapping_cone(f):
    """Cone of the induced chain map: C_n = A_{n-1} (+) B_n."""
    x, y = f.source, f.target
    ca = normalized_chain_complex(x)
    cb = normalized_chain_complex(y)
    fm = chain_map_matrices(f)
    k = x.k
    ranks = [ca.rank(n - 1) + cb.rank(n) for n in range(k + 2)]
    boundary = {}
    for n in range(1, k + 2):
        ra, rb = ca.rank(n - 1), cb.rank(n)
        rows = ca.rank(n - 2) + cb.rank(n - 1)
        mat = [[0] * (ra + rb) for _ in range(rows)]
        # block [[-dA, 0], [f, dB]]
        if n >= 2:
            da = ca.matrix(n - 1)
            for i in range(ca.rank(n - 2)):
                for j in range(ra):
                    mat[i][j] = -da[i][j]
        fmat = fm.get(n - 1, [])
        for i in range(cb.rank(n - 1)):
            for j in range(ra):
                if fmat:
                    mat[ca.rank(n - 2) + i][j] = fmat[i][j]
        if n <= k:
            db = cb.matrix(n)
            for i in range(cb.rank(n - 1)):
                for j in range(rb):
                    mat[ca.rank(n - 2) + i][ra + j] = db[i][j]
    # n = k+1: B has no chains in degree k+1, block is just [-dA, f]
        boundary[n] = mat
    return ChainComplex(ranks, boundary)


def weq_evidence(f, d):
    """Homology-level weak equivalence evidence for a simplicial map.

    True iff pi0 is a bijection and the mapping cone of the induced chain
    map is acyclic in degrees <= d.
    """
    if f.source.k != f.target.k:
        raise ValueError("mismatched truncation levels")
    if not pi0_bijective(f):
        return False
    cone = mapping_cone(f)
    for i in range(d + 1):
        torsion, free = homology_of_complex(cone, i)
        if torsion or free != 0:
            return False
    return True


def weq_evidence_pair(x, y, d):
    """Abstract-isomorphism comparison of homology groups up to degree d.

    Evidence only: no comparison map is involved.
    """
    cx, _ = pi0(x)
    cy, _ = pi0(y)
    if len(cx) != len(cy):
        return False
    for i in range(d + 1):
        hx = homology(x, i)
        hy = homology(y, i)
        if sorted(hx["torsion"]) != sorted(hy["torsion"]):
            return False
        if hx["free_rank"] != hy["free_rank"]:
            return False
    return True


def is_homology_point(x, d):
    """True iff X is nonempty, connected, and reduced H_i = 0 for i <= d."""
    if x.is_empty():
        return False
    comps, _ = pi0(x)
    if len(comps) != 1:
        return False
    for i in range(1, d + 1):
        h = homology(x, i)
        if h["torsion"] or h["free_rank"] != 0:
            return False
    return True


def kan_check(x, d):
    """Exhaustive horn-filling report up to dimension d.

    A horn Lambda^n_i in X is a compatible family of (n-1)-simplices
    (y_j for j != i) with d_a y_b = d_{b-1} y_a for a < b; a filler is an
    n-simplex whose j-th faces reproduce the family.
    """
    report = {"checked": 0, "unfilled": [], "pass": True}
    for n in range(1, min(d, x.k) + 1):
        for i in range(n + 1):
            slots = [j for j in range(n + 1) if j != i]
            for family in itertools.product(x.level(n - 1), repeat=len(slots)):
                fam = dict(zip(slots, family))
                ok = True
                if n >= 2:
                    for a in slots:
                        for b in slots:
                            if a < b and x.d(n - 1, a, fam[b]) != x.d(
                                n - 1, b - 1, fam[a]
                            ):
                                ok = False
                                break
                        if not ok:
                            break
                if not ok:
                    continue
                report["checked"] += 1
                filler = None
                for z in x.level(n):
                    if all(x.d(n, j, z) == fam[j] for j in slots):
                        filler = z
                        break
                if filler is None:
                    report["pass"] = False
                    report["unfilled"].append(
                        {"n": n, "i": i, "faces": {j: repr(fam[j]) for j in slots}}
                    )
    return report


def boundary_simplex(m, k):
    """The boundary of Delta^m truncated at k: drop surjective value tuples."""
    full = standard_simplex(m, k)
    keep = [
        [v for v in full.level(n) if len(set(v)) <= m] for n in range(k + 1)
    ]
    keep_sets = [set(lv) for lv in keep]
    faces = {
        key: {v: w for v, w in mp.items() if v in keep_sets[key[0]]}
        for key, mp in full.faces.items()
    }
    degens = {
        key: {v: w for v, w in mp.items() if v in keep_sets[key[0]]}
        for key, mp in full.degens.items()
    }
    return TruncSSet(k, keep, faces, degens)


def kernel_basis(m, cols):
    """Integer basis of ker(M) as column vectors, via the V transform."""
    if not m or not m[0]:
        return [
            [1 if i == j else 0 for i in range(cols)] for j in range(cols)
        ]
    inv, u, v = smith_normal_form(m)
    r = len(inv)
    return [[v[i][j] for i in range(len(v))] for j in range(r, len(v))]


def in_image(m, vec, rows):
    """Whether vec lies in the integer column span of M."""
    if all(x == 0 for x in vec):
        return True
    if not m or not m[0]:
        return False
    inv, u, v = smith_normal_form(m)
    uv = [sum(u[i][t] * vec[t] for t in range(rows)) for i in range(rows)]
    for i in range(rows):
        if i < len(inv):
            if uv[i] % inv[i] != 0:
                return False
        elif uv[i] != 0:
            return False
    return True


def maps_agree_on_homology(f1, f2, d):
    """Whether two parallel simplicial maps induce the same H_i for i <= d.

    Exact on pi0; in higher degrees checks that the difference of the
    induced chain maps sends every kernel generator to a boundary.
    """
    if pi0_map(f1) != pi0_map(f2):
        return False
    ca = normalized_chain_complex(f1.source)
    cb = normalized_chain_complex(f1.target)
    m1 = chain_map_matrices(f1)
    m2 = chain_map_matrices(f2)
    for i in range(1, d + 1):
        if ca.rank(i) == 0:
            continue
        cycles = (
            kernel_basis(ca.matrix(i), ca.rank(i))
            if ca.rank(i - 1)
            else [
                [1 if s == j else 0 for s in range(ca.rank(i))]
                for j in range(ca.rank(i))
            ]
        )
        diff = [
            [m1[i][r][c] - m2[i][r][c] for c in range(ca.rank(i))]
            for r in range(cb.rank(i))
        ]
        bnd = cb.matrix(i + 1) if cb.rank(i + 1) else []
        for z in cycles:
            img = [
                sum(diff[r][c] * z[c] for c in range(ca.rank(i)))
                for r in range(cb.rank(i))
            ]
            if not in_image(bnd, img, cb.rank(i)):
                return False
    return True
