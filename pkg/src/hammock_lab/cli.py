"""Command-line frontend: file validation, nerve and homology reports,
homotopy colimits, asphericity checks, model-structure verification,
hammock and localized hom-spaces, resolutions, the four-model comparison,
presheaf fibrancy evidence, and corpus management.

Exit codes: 0 all verdicts pass, 1 a verdict failed, 2 input error,
3 bound exhaustion under --strict.  JSON reports are byte-identical
across repeated runs with the same config; wall-clock timing is printed
only in text mode.
"""

import argparse
import json
import os
import sys
import time

from . import corpus as corpus_mod
from . import hammock as HK
from . import hocolim as H
from . import homres as HR
from . import io as IO
from . import locres as LR
from . import modelcat as MC
from . import sset as S
from .fincat import lax_colim, nerve

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_BOUND = 3


def corpus_dir():
    override = os.environ.get("HAMMOCKLAB_CORPUS")
    if override:
        return override
    return os.path.join(os.path.dirname(__file__), "data")


def corpus_list():
    """Inventory of the bundled example files, grouped per category."""
    d = corpus_dir()
    try:
        files = sorted(os.listdir(d))
    except OSError:
        files = []
    categories = []
    for name in sorted(corpus_mod.CATEGORY_NAMES):
        if f"{name}.json" not in files:
            continue
        structures = sorted(
            f
            for f in files
            if f.startswith(f"{name}-") and f.endswith(".json")
        )
        categories.append(
            {"name": name, "file": f"{name}.json", "structures": structures}
        )
    known = {c["file"] for c in categories} | {
        s for c in categories for s in c["structures"]
    }
    extras = sorted(f for f in files if f.endswith(".json") and f not in known)
    return {"directory": d, "categories": categories, "other_files": extras}


def _parse_id(text):
    """Object/morphism ids on the command line: JSON if it parses, else a
    bare string; arrays become tuples."""
    try:
        return IO.decode(json.loads(text))
    except (json.JSONDecodeError, ValueError):
        return text


def _resolve_path(path):
    if os.path.exists(path):
        return path
    candidate = os.path.join(corpus_dir(), path)
    if os.path.exists(candidate):
        return candidate
    return path


def _load(path, *kinds):
    kind, obj = IO.load_path(_resolve_path(path))
    if kinds and kind not in kinds:
        raise IO.InputError(
            f"{path}: expected one of {sorted(kinds)}, found {kind!r}"
        )
    return kind, obj


def _relcat_from(path):
    kind, obj = _load(path, "relcat", "model-structure")
    if kind == "relcat":
        return obj
    return MC.RelCat(obj.cat, obj.weq)


def _homology_rows(x, d):
    return [
        {
            "degree": h["degree"],
            "torsion": list(h["torsion"]),
            "free_rank": h["free_rank"],
            "reliable": h["reliable"],
        }
        for h in S.homology_groups(x, d)
    ]


def _clamp_degree(args, warnings):
    k = getattr(args, "k", None)
    if k is not None and args.degree > k - 1:
        warnings.append(
            f"degree {args.degree} exceeds k-1={k - 1}; clamped"
        )
        args.degree = max(k - 1, 0)


# ---------------------------------------------------------------------------
# per-command handlers: each returns (verdicts, facts, artifacts, bound_flag)


def _cmd_validate(args, warnings):
    kind, obj = _load(args.file)
    verdicts = {"valid": True}
    facts = {"kind": kind}
    if kind == "model-structure":
        issues = MC.validate_model_structure(obj)
        verdicts["valid"] = not issues
        facts["issues"] = issues
    return verdicts, facts, {}, False


def _cmd_nerve(args, warnings):
    _kind, cat = _load(args.file, "category")
    x = nerve(cat, args.k)
    facts = {"level_counts": x.level_counts(), "pi0": len(S.pi0(x)[0])}
    artifacts = {"sset": IO.sset_to_doc(x)}
    return {"computed": True}, facts, artifacts, False


def _cmd_homology(args, warnings):
    _kind, x = _load(args.file, "sset")
    rows = _homology_rows(x, args.degree)
    facts = {
        "level_counts": x.level_counts(),
        "groups": rows,
        "evidence": "exact",
    }
    return {"computed": True}, facts, {}, False


def _cmd_bk_colim(args, warnings):
    _kind, d = _load(args.file, "sset-diagram")
    x = H.bk_colim(d, args.k if args.k is not None else None)
    facts = {"level_counts": x.level_counts(), "pi0": len(S.pi0(x)[0])}
    artifacts = {"sset": IO.sset_to_doc(IO.relabel_sset(x))}
    return {"computed": True}, facts, artifacts, False


def _cmd_grothendieck(args, warnings):
    _kind, d = _load(args.file, "cat-diagram")
    cat, proj = lax_colim(d)
    facts = {
        "objects": len(cat.objects),
        "morphisms": len(cat.morphisms),
    }
    artifacts = {"category": IO.category_to_doc(cat)}
    return {"computed": True}, facts, artifacts, False


def _cmd_aspherical(args, warnings):
    _kind, u = _load(args.file, "functor")
    if args.side == "left":
        report = H.is_left_aspherical(u, args.degree, args.k)
    else:
        report = H.is_right_aspherical(u, args.degree, args.k)
    facts = {
        "side": args.side,
        "degree": args.degree,
        "per_object": {
            repr(c): bool(v) for c, v in sorted(
                report["per_object"].items(), key=lambda kv: repr(kv[0])
            )
        },
        "evidence": "homology-evidence",
    }
    return {"aspherical": bool(report["aspherical"])}, facts, {}, False


def _cmd_model_check(args, warnings):
    _kind, m = _load(args.file, "model-structure")
    issues = MC.validate_model_structure(m)
    facts = {"issues": issues}
    return {"axioms": not issues}, facts, {}, False


def _cmd_hammock_hom(args, warnings):
    rel = _relcat_from(args.file)
    a, b = _parse_id(args.A), _parse_id(args.B)
    x = HK.hammock_hom_space(rel, a, b, args.k, args.max_length)
    stable = HK.pi0_length_stability(rel, a, b, args.max_length)
    facts = {
        "pair": [IO.encode(a), IO.encode(b)],
        "level_counts": x.level_counts(),
        "pi0": len(S.pi0(x)[0]),
        "pi0_length_stable": stable,
        "evidence": "exact" if stable else "bound-limited",
    }
    artifacts = {"sset": IO.sset_to_doc(IO.relabel_sset(x))}
    return {"computed": True}, facts, artifacts, not stable


def _cmd_special_hammocks(args, warnings):
    _kind, m = _load(args.file, "model-structure")
    a, b = _parse_id(args.A), _parse_id(args.B)
    objs = HK.special_hammocks(m, a, b)
    facts = {
        "pair": [IO.encode(a), IO.encode(b)],
        "count": len(objs),
        "objects": [repr(o) for o in objs],
    }
    return {"computed": True}, facts, {}, False


def _cmd_resolve(args, warnings):
    _kind, m = _load(args.file, "model-structure")
    obj = _parse_id(args.object)
    if args.side == "simplicial":
        x, maps = HR.build_simplicial_resolution(m, obj, args.k)
        cert = HR.is_simplicial_resolution(x)
    else:
        x, maps = HR.build_cosimplicial_resolution(m, obj, args.k)
        cert = HR.is_cosimplicial_resolution(x)
    facts = {
        "object": IO.encode(obj),
        "side": args.side,
        "levels": [IO.encode(lv) for lv in x.levels],
        "weakly_constant": cert.weakly_constant,
        "reedy_ok": list(cert.reedy_ok),
    }
    return {"resolution": cert.ok}, facts, {}, False


def _cmd_derived_hom(args, warnings):
    _kind, m = _load(args.file, "model-structure")
    a, b = _parse_id(args.A), _parse_id(args.B)
    x = HR.derived_hom(m, a, b, args.k)
    cert_s = x.meta["simplicial_certificate"]
    cert_c = x.meta["cosimplicial_certificate"]
    facts = {
        "pair": [IO.encode(a), IO.encode(b)],
        "level_counts": x.level_counts(),
        "pi0": len(S.pi0(x)[0]),
        "simplicial_certificate_ok": cert_s.ok,
        "cosimplicial_certificate_ok": cert_c.ok,
    }
    verdicts = {"certified": cert_s.ok and cert_c.ok}
    artifacts = {"sset": IO.sset_to_doc(IO.relabel_sset(x))}
    return verdicts, facts, artifacts, False


def _cmd_compare(args, warnings):
    _kind, m = _load(args.file, "model-structure")
    a, b = _parse_id(args.A), _parse_id(args.B)
    rep = HR.comparison_report(
        m, a, b, args.k, args.degree, args.max_length, args.middle_k
    )
    facts = {
        "pair": [IO.encode(a), IO.encode(b)],
        "level_counts": rep["level_counts"],
        "pi0_sizes": rep["pi0_sizes"],
        "ho_hom_count": rep["ho_hom_count"],
        "common_degree": rep["common_degree"],
        "homology": {
            name: [
                {"degree": dg, "torsion": list(t), "free_rank": fr}
                for (dg, t, fr) in rows
            ]
            for name, rows in rep["homology"].items()
        },
        "naturality": [
            {
                "f": IO.encode(c["f"]),
                "g": IO.encode(c["g"]),
                "strict": c["strict"],
                "pi0": c["pi0"],
                "homology": c["homology"],
            }
            for c in rep["naturality"]
        ],
        "evidence": "homology-evidence",
    }
    verdicts = {
        "pi0_agree": rep["pi0_agree"],
        "pi0_matches_ho_hom": rep["pi0_matches_ho_hom"],
        "homology_agree": rep["homology_agree"],
        "special_to_hammock": bool(rep["special_to_hammock_evidence"]),
        "naturality": all(
            c["strict"] or (c["pi0"] and c["homology"])
            for c in rep["naturality"]
        ),
    }
    return verdicts, facts, {}, False


def _cmd_loc_hom(args, warnings):
    rel = _relcat_from(args.file)
    a, b = _parse_id(args.A), _parse_id(args.B)
    x = LR.loc_hom_space(
        rel.cat, rel.weq, a, b, args.level, args.word_bound
    )
    exhausted = any(x.meta["bound_exhausted_levels"])
    facts = {
        "pair": [IO.encode(a), IO.encode(b)],
        "level_counts": x.level_counts(),
        "pi0": len(S.pi0(x)[0]),
        "bound_exhausted_levels": x.meta["bound_exhausted_levels"],
        "weq_generator_counts": x.meta["weq_generator_counts"],
        "evidence": "bound-limited" if exhausted else "exact",
    }
    artifacts = {"sset": IO.sset_to_doc(IO.relabel_sset(x))}
    return {"computed": True}, facts, artifacts, exhausted


def _cmd_presheaf_check(args, warnings):
    _kind, (p, weq) = _load(args.file, "presheaf")
    weq = frozenset(weq) | frozenset(p.cat.identity.values())
    rel = MC.RelCat(p.cat, weq)
    rep = LR.presheaf_local_fibrancy_evidence(p, rel, args.degree)
    facts = {
        "kan": {
            repr(c): {"checked": r["checked"], "pass": r["pass"]}
            for c, r in sorted(rep["kan"].items(), key=lambda kv: repr(kv[0]))
        },
        "weq_images": {
            repr(w): v
            for w, v in sorted(
                rep["weq_images"].items(), key=lambda kv: repr(kv[0])
            )
        },
        "evidence": "homology-evidence",
    }
    verdicts = {"kan": rep["kan_ok"], "weq_images": rep["weq_ok"]}
    return verdicts, facts, {}, False


def _cmd_corpus(args, warnings):
    inv = corpus_list()
    verdicts = {"available": len(inv["categories"]) >= 6}
    if args.write:
        os.makedirs(args.write, exist_ok=True)
        written = []
        for name in corpus_mod.CATEGORY_NAMES:
            IO.save(
                IO.category_to_doc(corpus_mod.category(name)),
                os.path.join(args.write, f"{name}.json"),
            )
            written.append(f"{name}.json")
            for kind in corpus_mod.STRUCTURE_KINDS:
                IO.save(
                    IO.model_to_doc(corpus_mod.model_structure(name, kind)),
                    os.path.join(args.write, f"{name}-{kind}.json"),
                )
                written.append(f"{name}-{kind}.json")
        inv["written"] = written
    return verdicts, inv, {}, False


_HANDLERS = {
    "validate": _cmd_validate,
    "nerve": _cmd_nerve,
    "homology": _cmd_homology,
    "bk-colim": _cmd_bk_colim,
    "grothendieck": _cmd_grothendieck,
    "aspherical": _cmd_aspherical,
    "model-check": _cmd_model_check,
    "hammock-hom": _cmd_hammock_hom,
    "special-hammocks": _cmd_special_hammocks,
    "resolve": _cmd_resolve,
    "derived-hom": _cmd_derived_hom,
    "compare": _cmd_compare,
    "loc-hom": _cmd_loc_hom,
    "presheaf-check": _cmd_presheaf_check,
    "corpus": _cmd_corpus,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hammock-lab",
        description="Finite-level derived hom-space toolkit",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text",
        help="report format",
    )
    common.add_argument(
        "--strict", action="store_true",
        help="treat bound exhaustion as an error (exit 3)",
    )
    common.add_argument("--out", help="write the main artifact to this file")
    common.add_argument(
        "--seed", type=int, default=0, help="seed for sampling-based checks"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, *, file=True, pair=False, k=None, L=None, d=None):
        p = sub.add_parser(name, parents=[common])
        if file:
            p.add_argument("file")
        if pair:
            p.add_argument("--A", required=True)
            p.add_argument("--B", required=True)
        if k is not None:
            p.add_argument("-k", "--k", type=int, default=k)
        if L is not None:
            p.add_argument(
                "-L", "--max-length", dest="max_length", type=int, default=L
            )
        if d is not None:
            p.add_argument(
                "-d", "--degree", dest="degree", type=int, default=d
            )
        return p

    add("validate")
    add("nerve", k=3)
    add("homology", d=2)
    p = add("bk-colim")
    p.add_argument("-k", "--k", type=int, default=None)
    add("grothendieck")
    p = add("aspherical", k=3, d=2)
    p.add_argument("--side", choices=("left", "right"), default="left")
    add("model-check")
    add("hammock-hom", pair=True, k=3, L=4)
    add("special-hammocks", pair=True)
    p = add("resolve", k=3)
    p.add_argument("--object", required=True)
    p.add_argument(
        "--side", choices=("simplicial", "cosimplicial"), default="simplicial"
    )
    add("derived-hom", pair=True, k=3)
    p = add("compare", pair=True, k=3, L=4, d=2)
    p.add_argument("--middle-k", dest="middle_k", type=int, default=2)
    p = add("loc-hom", pair=True)
    p.add_argument("--level", type=int, default=2)
    p.add_argument("--word-bound", dest="word_bound", type=int, default=4)
    add("presheaf-check", d=2)
    p = add("corpus", file=False)
    p.add_argument("--write", help="materialize the corpus into a directory")

    return parser


def _print_text(report, elapsed):
    lines = [f"command: {report['command']}"]
    for name, ok in report["verdicts"].items():
        lines.append(f"{'PASS' if ok else 'FAIL'} {name}")
    for warning in report["warnings"]:
        lines.append(f"warning: {warning}")
    facts = report["facts"]
    for key in sorted(facts):
        lines.append(f"{key}: {json.dumps(facts[key], sort_keys=True)}")
    lines.append(f"elapsed: {elapsed:.2f}s")
    print("\n".join(lines))


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    warnings = []
    if hasattr(args, "degree"):
        _clamp_degree(args, warnings)
    started = time.monotonic()
    try:
        verdicts, facts, artifacts, bound_flag = _HANDLERS[args.command](
            args, warnings
        )
    except IO.InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, KeyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    elapsed = time.monotonic() - started
    if bound_flag:
        warnings.append("a length or word bound was exhausted")
    config = {
        k: v
        for k, v in sorted(vars(args).items())
        if k not in ("command",) and v is not None
    }
    report = {
        "format": IO.FORMAT,
        "command": args.command,
        "config": config,
        "verdicts": verdicts,
        "facts": facts,
        "warnings": warnings,
    }
    if args.out and artifacts:
        artifact = next(iter(artifacts.values()))
        IO.save(artifact, args.out)
        report["facts"]["artifact_written"] = os.path.basename(args.out)
    if args.format == "json":
        sys.stdout.write(IO.dumps(report))
    else:
        _print_text(report, elapsed)
    if not all(verdicts.values()):
        return EXIT_FAIL
    if bound_flag and args.strict:
        return EXIT_BOUND
    return EXIT_PASS


if __name__ == "__main__":
    sys.exit(main())
