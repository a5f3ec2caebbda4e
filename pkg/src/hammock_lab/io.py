"""Versioned JSON serialization for categories, model structures,
simplicial sets, functors, diagrams, and presheaves.

Every file carries a ``"format": "hammock-lab/1"`` header and a ``"kind"``
tag.  Identifiers may be arbitrary JSON scalars or arrays; arrays are read
back as tuples.  Dumps are deterministic: keys sorted, lists ordered by
the canonical sort key used across the library.
"""

import json
import os

from . import hocolim as H
from . import locres as LR
from . import modelcat as MC
from . import sset as S
from .fincat import CatDiagram, FinCat, Functor, validate_category

FORMAT = "hammock-lab/1"


class InputError(ValueError):
    """A parse or schema failure, with field provenance in the message."""


def _key(x):
    return repr(x)


def encode(x):
    """Tuples become JSON arrays, recursively."""
    if isinstance(x, (tuple, list)):
        return [encode(v) for v in x]
    if isinstance(x, frozenset):
        return sorted((encode(v) for v in x), key=_key)
    return x


def decode(x):
    """JSON arrays become tuples, recursively."""
    if isinstance(x, list):
        return tuple(decode(v) for v in x)
    return x


def dumps(doc):
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _require(doc, field, where):
    if field not in doc:
        raise InputError(f"{where}: missing field {field!r}")
    return doc[field]


def _header(kind):
    return {"format": FORMAT, "kind": kind}


def _check_header(doc, where, kind=None):
    if not isinstance(doc, dict):
        raise InputError(f"{where}: expected a JSON object")
    fmt = _require(doc, "format", where)
    if fmt != FORMAT:
        raise InputError(f"{where}: unsupported format {fmt!r}")
    got = _require(doc, "kind", where)
    if kind is not None and got != kind:
        raise InputError(f"{where}: expected kind {kind!r}, found {got!r}")
    return got


# ---------------------------------------------------------------------------
# categories


def category_to_doc(cat):
    doc = _header("category")
    doc["objects"] = [encode(o) for o in cat.sorted_objects()]
    doc["morphisms"] = [
        {"id": encode(f), "src": encode(s), "dst": encode(t)}
        for f, (s, t) in sorted(cat.morphisms.items(), key=lambda kv: _key(kv[0]))
    ]
    doc["identity"] = [
        {"object": encode(o), "id": encode(cat.identity[o])}
        for o in cat.sorted_objects()
    ]
    doc["composites"] = [
        {"g": encode(g), "f": encode(f), "gf": encode(gf)}
        for (g, f), gf in sorted(
            cat.compose_table.items(), key=lambda kv: _key(kv[0])
        )
    ]
    return doc


def category_from_doc(doc, where="category"):
    _check_header(doc, where, "category")
    objects = [decode(o) for o in _require(doc, "objects", where)]
    morphisms = {}
    for row in _require(doc, "morphisms", where):
        morphisms[decode(row["id"])] = (decode(row["src"]), decode(row["dst"]))
    identity = {
        decode(row["object"]): decode(row["id"])
        for row in _require(doc, "identity", where)
    }
    composites = {
        (decode(row["g"]), decode(row["f"])): decode(row["gf"])
        for row in _require(doc, "composites", where)
    }
    try:
        return validate_category(objects, morphisms, identity, composites)
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from exc


# ---------------------------------------------------------------------------
# relative categories and model structures


def relcat_to_doc(rel):
    doc = _header("relcat")
    doc["category"] = category_to_doc(rel.cat)
    doc["weq"] = [encode(f) for f in sorted(rel.weq, key=_key)]
    return doc


def relcat_from_doc(doc, where="relcat"):
    _check_header(doc, where, "relcat")
    cat = category_from_doc(_require(doc, "category", where), f"{where}.category")
    weq = frozenset(decode(f) for f in _require(doc, "weq", where))
    issues = MC.relcat_violations(cat, weq)
    if issues:
        raise InputError(f"{where}: {issues[0]}")
    return MC.RelCat(cat, weq)


def model_to_doc(m):
    doc = _header("model-structure")
    doc["category"] = category_to_doc(m.cat)
    doc["weq"] = [encode(f) for f in sorted(m.weq, key=_key)]
    doc["cof"] = [encode(f) for f in sorted(m.cof, key=_key)]
    doc["fib"] = [encode(f) for f in sorted(m.fib, key=_key)]
    doc["fact_cf"] = [
        {"f": encode(f), "first": encode(p[0]), "second": encode(p[1])}
        for f, p in sorted(m.fact_cf.items(), key=lambda kv: _key(kv[0]))
    ]
    doc["fact_tcf"] = [
        {"f": encode(f), "first": encode(p[0]), "second": encode(p[1])}
        for f, p in sorted(m.fact_tcf.items(), key=lambda kv: _key(kv[0]))
    ]
    return doc


def model_from_doc(doc, where="model-structure"):
    _check_header(doc, where, "model-structure")
    cat = category_from_doc(_require(doc, "category", where), f"{where}.category")
    weq = frozenset(decode(f) for f in _require(doc, "weq", where))
    cof = frozenset(decode(f) for f in _require(doc, "cof", where))
    fib = frozenset(decode(f) for f in _require(doc, "fib", where))

    def table(field):
        return {
            decode(row["f"]): (decode(row["first"]), decode(row["second"]))
            for row in _require(doc, field, where)
        }

    return MC.ModelStructure(
        MC.RelCat(cat, weq), cof, fib, table("fact_cf"), table("fact_tcf")
    )


# ---------------------------------------------------------------------------
# simplicial sets


def _jsonable(x):
    if isinstance(x, (str, int, float, bool)) or x is None:
        return True
    if isinstance(x, (list, tuple)):
        return all(_jsonable(v) for v in x)
    if isinstance(x, dict):
        return all(
            isinstance(k, str) and _jsonable(v) for k, v in x.items()
        )
    return False


def sset_to_doc(x):
    doc = _header("sset")
    doc["k"] = x.k
    doc["levels"] = [[encode(sx) for sx in x.level(n)] for n in range(x.k + 1)]
    doc["faces"] = [
        {
            "n": n,
            "i": i,
            "map": [
                [encode(sx), encode(x.d(n, i, sx))] for sx in x.level(n)
            ],
        }
        for n in range(1, x.k + 1)
        for i in range(n + 1)
    ]
    doc["degens"] = [
        {
            "n": n,
            "i": i,
            "map": [
                [encode(sx), encode(x.s(n, i, sx))] for sx in x.level(n)
            ],
        }
        for n in range(x.k)
        for i in range(n + 1)
    ]
    meta = {k: v for k, v in x.meta.items() if _jsonable(v)}
    if meta:
        doc["meta"] = encode_meta(meta)
    return doc


def encode_meta(meta):
    return {k: encode(v) if isinstance(v, tuple) else v for k, v in meta.items()}


def sset_from_doc(doc, where="sset"):
    _check_header(doc, where, "sset")
    k = _require(doc, "k", where)
    levels = [
        [decode(sx) for sx in lv] for lv in _require(doc, "levels", where)
    ]
    faces = {}
    for row in _require(doc, "faces", where):
        faces[(row["n"], row["i"])] = {
            decode(a): decode(b) for a, b in row["map"]
        }
    degens = {}
    for row in _require(doc, "degens", where):
        degens[(row["n"], row["i"])] = {
            decode(a): decode(b) for a, b in row["map"]
        }
    x = S.TruncSSet(k, levels, faces, degens, doc.get("meta"))
    issues = S.validate_sset(x)
    if issues:
        raise InputError(f"{where}: {issues[0]}")
    return x


def relabel_sset(x):
    """Rename simplices to deterministic strings for serialization.

    Needed when simplices are rich objects (hammocks, zigzag words) whose
    native names are not JSON values.
    """
    names = {}
    for n in range(x.k + 1):
        for idx, sx in enumerate(x.level(n)):
            names[(n, _key(sx))] = f"{n}.{idx}"
    levels = [
        [names[(n, _key(sx))] for sx in x.level(n)] for n in range(x.k + 1)
    ]
    faces = {
        (n, i): {
            names[(n, _key(sx))]: names[(n - 1, _key(x.d(n, i, sx)))]
            for sx in x.level(n)
        }
        for n in range(1, x.k + 1)
        for i in range(n + 1)
    }
    degens = {
        (n, i): {
            names[(n, _key(sx))]: names[(n + 1, _key(x.s(n, i, sx)))]
            for sx in x.level(n)
        }
        for n in range(x.k)
        for i in range(n + 1)
    }
    meta = {k: v for k, v in x.meta.items() if _jsonable(v)}
    return S.TruncSSet(x.k, levels, faces, degens, meta)


# ---------------------------------------------------------------------------
# functors and diagrams


def functor_to_doc(u):
    doc = _header("functor")
    doc["source"] = category_to_doc(u.source)
    doc["target"] = category_to_doc(u.target)
    doc["object_map"] = [
        [encode(a), encode(b)]
        for a, b in sorted(u.object_map.items(), key=lambda kv: _key(kv[0]))
    ]
    doc["morphism_map"] = [
        [encode(f), encode(g)]
        for f, g in sorted(u.morphism_map.items(), key=lambda kv: _key(kv[0]))
    ]
    return doc


def functor_from_doc(doc, where="functor"):
    _check_header(doc, where, "functor")
    source = category_from_doc(_require(doc, "source", where), f"{where}.source")
    target = category_from_doc(_require(doc, "target", where), f"{where}.target")
    u = Functor(
        source,
        target,
        {decode(a): decode(b) for a, b in _require(doc, "object_map", where)},
        {decode(f): decode(g) for f, g in _require(doc, "morphism_map", where)},
    )
    from .fincat import functor_violations

    issues = functor_violations(u)
    if issues:
        raise InputError(f"{where}: {issues[0]}")
    return u


def _plain_functor_from_doc(row, source, target, where):
    return Functor(
        source,
        target,
        {decode(a): decode(b) for a, b in _require(row, "object_map", where)},
        {decode(f): decode(g) for f, g in _require(row, "morphism_map", where)},
    )


def cat_diagram_to_doc(d):
    doc = _header("cat-diagram")
    doc["shape"] = category_to_doc(d.shape)
    doc["values"] = [
        {"object": encode(c), "category": category_to_doc(d.ob[c])}
        for c in d.shape.sorted_objects()
    ]
    doc["functors"] = [
        {
            "morphism": encode(f),
            "object_map": [
                [encode(a), encode(b)]
                for a, b in sorted(
                    d.mor[f].object_map.items(), key=lambda kv: _key(kv[0])
                )
            ],
            "morphism_map": [
                [encode(g), encode(h)]
                for g, h in sorted(
                    d.mor[f].morphism_map.items(), key=lambda kv: _key(kv[0])
                )
            ],
        }
        for f in sorted(d.shape.morphisms, key=_key)
    ]
    return doc


def cat_diagram_from_doc(doc, where="cat-diagram"):
    _check_header(doc, where, "cat-diagram")
    shape = category_from_doc(_require(doc, "shape", where), f"{where}.shape")
    ob = {}
    for row in _require(doc, "values", where):
        c = decode(row["object"])
        ob[c] = category_from_doc(row["category"], f"{where}.values[{c!r}]")
    mor = {}
    for row in _require(doc, "functors", where):
        f = decode(row["morphism"])
        s, t = shape.morphisms[f]
        mor[f] = _plain_functor_from_doc(
            row, ob[s], ob[t], f"{where}.functors[{f!r}]"
        )
    d = CatDiagram(shape, ob, mor)
    from .fincat import cat_diagram_violations

    issues = cat_diagram_violations(d)
    if issues:
        raise InputError(f"{where}: {issues[0]}")
    return d


def _level_maps_to_doc(m):
    return [
        {
            "n": n,
            "map": [
                [encode(a), encode(b)]
                for a, b in sorted(lm.items(), key=lambda kv: _key(kv[0]))
            ],
        }
        for n, lm in sorted(m.level_maps.items())
    ]


def _level_maps_from_doc(rows):
    return {
        row["n"]: {decode(a): decode(b) for a, b in row["map"]}
        for row in rows
    }


def sset_diagram_to_doc(d):
    doc = _header("sset-diagram")
    doc["shape"] = category_to_doc(d.shape)
    doc["values"] = [
        {"object": encode(c), "sset": sset_to_doc(d.ob[c])}
        for c in d.shape.sorted_objects()
    ]
    doc["maps"] = [
        {"morphism": encode(f), "levels": _level_maps_to_doc(d.mor[f])}
        for f in sorted(d.shape.morphisms, key=_key)
    ]
    return doc


def sset_diagram_from_doc(doc, where="sset-diagram"):
    _check_header(doc, where, "sset-diagram")
    shape = category_from_doc(_require(doc, "shape", where), f"{where}.shape")
    ob = {}
    for row in _require(doc, "values", where):
        c = decode(row["object"])
        ob[c] = sset_from_doc(row["sset"], f"{where}.values[{c!r}]")
    mor = {}
    for row in _require(doc, "maps", where):
        f = decode(row["morphism"])
        s, t = shape.morphisms[f]
        mor[f] = S.SSetMap(ob[s], ob[t], _level_maps_from_doc(row["levels"]))
    d = H.SSetDiagram(shape, ob, mor)
    issues = H.sset_diagram_violations(d)
    if issues:
        raise InputError(f"{where}: {issues[0]}")
    return d


# ---------------------------------------------------------------------------
# presheaves (category plus per-object simplicial sets, possibly by file)


def presheaf_to_doc(p, weq=()):
    doc = _header("presheaf")
    doc["category"] = category_to_doc(p.cat)
    doc["weq"] = [encode(f) for f in sorted(weq, key=_key)]
    doc["values"] = [
        {"object": encode(c), "sset": sset_to_doc(p.values[c])}
        for c in p.cat.sorted_objects()
    ]
    doc["maps"] = [
        {"morphism": encode(f), "levels": _level_maps_to_doc(p.maps[f])}
        for f in sorted(p.cat.morphisms, key=_key)
    ]
    return doc


def _maybe_file(node, base_dir, loader, where):
    if isinstance(node, dict) and set(node) == {"file"}:
        path = os.path.join(base_dir or ".", node["file"])
        with open(path) as fh:
            return loader(json.load(fh), where)
    return loader(node, where)


def presheaf_from_doc(doc, where="presheaf", base_dir=None):
    _check_header(doc, where, "presheaf")
    cat = _maybe_file(
        _require(doc, "category", where),
        base_dir,
        category_from_doc,
        f"{where}.category",
    )
    weq = frozenset(decode(f) for f in doc.get("weq", []))
    values = {}
    for row in _require(doc, "values", where):
        c = decode(row["object"])
        values[c] = _maybe_file(
            row["sset"], base_dir, sset_from_doc, f"{where}.values[{c!r}]"
        )
    maps = {}
    for row in _require(doc, "maps", where):
        f = decode(row["morphism"])
        s, t = cat.morphisms[f]
        maps[f] = S.SSetMap(values[t], values[s], _level_maps_from_doc(row["levels"]))
    p = LR.SimpPresheaf(cat, values, maps)
    issues = LR.presheaf_violations(p)
    if issues:
        raise InputError(f"{where}: {issues[0]}")
    return p, weq


# ---------------------------------------------------------------------------
# top-level load/save

_LOADERS = {
    "category": category_from_doc,
    "relcat": relcat_from_doc,
    "model-structure": model_from_doc,
    "sset": sset_from_doc,
    "functor": functor_from_doc,
    "cat-diagram": cat_diagram_from_doc,
    "sset-diagram": sset_diagram_from_doc,
}


def load_path(path):
    """Parse a file into (kind, object); presheaves yield (p, weq)."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"{path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    kind = _check_header(doc, path)
    if kind == "presheaf":
        return kind, presheaf_from_doc(doc, path, os.path.dirname(path))
    loader = _LOADERS.get(kind)
    if loader is None:
        raise InputError(f"{path}: unknown kind {kind!r}")
    return kind, loader(doc, path)


def save(doc, path):
    with open(path, "w") as fh:
        fh.write(dumps(doc))
