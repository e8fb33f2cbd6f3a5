"""Command-line interface.

Verb grammar: `delta verify|compose|decompose`, `sset simplex|boundary|
horn|check`, `cat nerve|check|ho`, `lift classify|fill`, `causal
imset|equiv|classes|dsep|fill|separoid`, `psr sdm|discover|check-hom|
nerve`, `hom compute|nerve|imset`.

Exit codes: 0 success, 1 verified-failure verdict (an inequivalence, a
failed axiom, a failed homomorphism), 2 malformed input or exceeded
bound.  Machine output (--format json) is canonical and byte-stable for
identical inputs; human output appends a timing footer.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import delta, documents, homology
from .causal import (
    CausalHorn,
    causal_fillers,
    check_separoid,
    d_separation,
    equivalence_classes,
    markov_equivalent,
    standard_imset,
)
from .errors import (
    BoundExceededError,
    DocumentError,
    SimpdiscError,
    TruncationError,
)
from .fincat import homotopy_category, nerve, nerve_hom_bijection_check
from .lifting import (
    HornFillingInstance,
    classify,
    fill_horn,
    threads_from_env,
)
from .psr import (
    build_sdm,
    check_mdp_homomorphism,
    check_psr_homomorphism,
    discover_core_tests,
    psr_dynamics,
    psr_nerve,
)
from .sset import (
    SimplicialMap,
    boundary,
    horn,
    standard_simplex,
    subset_as_sset,
)

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def _table_rows(items):
    """Aligned table lines for a list of flat records with shared keys."""
    keys = list(items[0].keys())
    header = [str(k) for k in keys]
    rows = [[_scalar_repr(item[k]) for k in keys] for item in items]
    widths = [
        max(len(header[c]), *(len(row[c]) for row in rows)) for c in range(len(keys))
    ]
    out = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for row in rows:
        out.append("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip())
    return out


def _is_table(value):
    if not isinstance(value, list) or len(value) < 2:
        return False
    if not all(isinstance(item, dict) for item in value):
        return False
    keys = list(value[0].keys())
    return all(
        list(item.keys()) == keys
        and all(not isinstance(v, (dict, list)) for v in item.values())
        for item in value
    )


def _human_lines(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key in obj:
            value = obj[key]
            if _is_table(value):
                lines.append(f"{pad}{key}:")
                lines.extend(f"{pad}  {row}" for row in _table_rows(value))
            elif isinstance(value, (dict, list)) and value and not _scalar_list(value):
                lines.append(f"{pad}{key}:")
                lines.extend(_human_lines(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar_repr(value)}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, (dict, list)) and item and not _scalar_list(item):
                lines.append(f"{pad}-")
                lines.extend(_human_lines(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar_repr(item)}")
    else:
        lines.append(f"{pad}{_scalar_repr(obj)}")
    return lines


def _scalar_list(value):
    return isinstance(value, list) and all(
        not isinstance(v, (dict, list)) for v in value
    )


def _scalar_repr(value):
    if isinstance(value, list):
        return "[" + ", ".join(str(v) for v in value) + "]"
    return str(value)


def emit(report: dict, fmt: str, started: float) -> None:
    if fmt == "json":
        sys.stdout.write(documents.canonical_json(report))
    else:
        for line in _human_lines(report):
            print(line)
        print(f"elapsed: {time.monotonic() - started:.3f}s")


def _load(path):
    return documents.load_json(path)


# --- delta --------------------------------------------------------------------

def run_delta_verify(args):
    rep = delta.verify_simplicial_relations(args.max_n)
    report = {
        "max_n": rep.max_n,
        "checked": rep.checked,
        "violations": [
            {
                "family": v.family,
                "n": v.n,
                "i": v.i,
                "j": v.j,
                "lhs": list(v.lhs),
                "rhs": list(v.rhs),
            }
            for v in rep.violations
        ],
    }
    return report, EXIT_OK if rep.ok else EXIT_FAIL


def run_delta_compose(args):
    try:
        g = delta.MonotoneMap.from_text(args.g)
        f = delta.MonotoneMap.from_text(args.f)
        result = delta.compose(g, f)
    except (ValueError, SimpdiscError) as exc:
        raise DocumentError(str(exc)) from exc
    return {"g": g.to_text(), "f": f.to_text(), "g_after_f": result.to_text()}, EXIT_OK


def run_delta_decompose(args):
    try:
        f = delta.MonotoneMap.from_text(args.map)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    seq = delta.decompose(f)
    recomposed = delta.recompose(seq, f.dom)
    return {
        "input": f.to_text(),
        "sequence": [[e.kind.value, e.index, e.dim] for e in seq],
        "recomposed": recomposed.to_text(),
        "round_trip": recomposed == f,
    }, EXIT_OK


# --- sset ----------------------------------------------------------------------

def run_sset_simplex(args):
    x = standard_simplex(args.n, args.trunc if args.trunc is not None else args.n)
    return documents.sset_to_doc(x), EXIT_OK


def run_sset_boundary(args):
    sub = boundary(args.n, args.trunc if args.trunc is not None else args.n)
    return documents.subset_to_doc(sub), EXIT_OK


def run_sset_horn(args):
    sub = horn(args.n, args.k, args.trunc if args.trunc is not None else args.n)
    return documents.subset_to_doc(sub), EXIT_OK


def run_sset_check(args):
    doc = _load(args.file)
    if "members" in doc:
        documents.subset_from_doc(doc, args.file)
        report = {"kind": "subset", "valid": True, "problems": []}
    else:
        documents.sset_from_doc(doc, args.file)
        report = {"kind": "simplicial-set", "valid": True, "problems": []}
    return report, EXIT_OK


# --- cat -----------------------------------------------------------------------

def run_cat_nerve(args):
    cat = documents.category_from_doc(_load(args.file), args.file)
    return documents.sset_to_doc(nerve(cat, args.trunc)), EXIT_OK


def run_cat_check(args):
    src = documents.category_from_doc(_load(args.src), args.src)
    dst = documents.category_from_doc(_load(args.dst), args.dst)
    rep = nerve_hom_bijection_check(src, dst, args.trunc, bound=args.bound)
    report = {
        "functors": rep.functor_count,
        "simplicial_maps": rep.map_count,
        "bijection": rep.bijection,
        "unmatched_maps": [list(map(list, m)) for m in rep.unmatched_maps],
        "collisions": rep.collisions,
    }
    return report, EXIT_OK if rep.bijection else EXIT_FAIL


def run_cat_ho(args):
    x = documents.sset_from_doc(_load(args.file), args.file)
    cat = homotopy_category(x, word_cap=args.word_cap)
    return documents.category_to_doc(cat), EXIT_OK


# --- lift ----------------------------------------------------------------------

def run_lift_classify(args):
    x = documents.sset_from_doc(_load(args.file), args.file)
    rep = classify(x, args.max_n, bound=args.bound, threads=threads_from_env())
    report = {
        "max_n": rep.max_n,
        "horns": [
            {
                "n": v.n,
                "k": v.k,
                "inner": v.inner,
                "horn_maps": v.total_maps,
                "without_filler": v.without_filler,
                "unique_filler": v.with_unique_filler,
                "multiple_fillers": v.with_multiple_fillers,
            }
            for v in rep.horns
        ],
        "witnesses": [
            {"n": v.n, "k": v.k, "horn_map": [list(level) for level in v.witness]}
            for v in rep.horns
            if v.witness is not None
        ],
        "kan_within_bound": rep.kan_within_bound,
        "quasicategory_within_bound": rep.quasicategory_within_bound,
        "nerve_like_within_bound": rep.nerve_like_within_bound,
    }
    return report, EXIT_OK


def run_lift_fill(args):
    x = documents.sset_from_doc(_load(args.target), args.target)
    hdoc = _load(args.hornmap)
    assignment = hdoc.get("assignment")
    if assignment is None:
        raise DocumentError(f"{args.hornmap}: missing field 'assignment'")
    from .lifting import horn_inclusion

    horn_sset, _, _ = horn_inclusion(args.n, args.k, x.trunc_dim)
    try:
        sigma0 = SimplicialMap(
            horn_sset, x, tuple(tuple(level) for level in assignment)
        )
        fillers = fill_horn(HornFillingInstance(args.n, args.k, x, sigma0), bound=args.bound)
    except (ValueError, IndexError) as exc:
        raise DocumentError(f"{args.hornmap}: {exc}") from exc
    report = {
        "n": args.n,
        "k": args.k,
        "filler_count": len(fillers),
        "fillers": [[list(level) for level in f.assignment] for f in fillers],
    }
    return report, EXIT_OK


# --- causal ----------------------------------------------------------------------

def run_causal_imset(args):
    g = documents.dag_from_doc(_load(args.dag), args.dag)
    return documents.imset_to_doc(standard_imset(g)), EXIT_OK


def run_causal_equiv(args):
    g1 = documents.dag_from_doc(_load(args.dag1), args.dag1)
    g2 = documents.dag_from_doc(_load(args.dag2), args.dag2)
    try:
        equivalent = markov_equivalent(g1, g2)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    report = {
        "equivalent": equivalent,
        "verdict": "equivalent" if equivalent else "not equivalent",
        "imset_1": documents.imset_to_doc(standard_imset(g1)),
        "imset_2": documents.imset_to_doc(standard_imset(g2)),
    }
    return report, EXIT_OK if equivalent else EXIT_FAIL


def run_causal_classes(args):
    rep = equivalence_classes(args.n_vars)
    report = {
        "n_vars": rep.n_vars,
        "dags": rep.n_dags,
        "classes": rep.n_classes,
        "class_sizes": list(rep.class_sizes),
        "oracle_agrees": rep.oracle_agrees,
    }
    return report, EXIT_OK if rep.oracle_agrees else EXIT_FAIL


def _mask_from_names(g, csv, where):
    mask = 0
    if not csv:
        return mask
    for name in csv.split(","):
        name = name.strip()
        if not name:
            continue
        if name not in g.vars:
            raise DocumentError(f"{where}: unknown variable {name!r}")
        mask |= 1 << g.vars.index(name)
    return mask


def run_causal_dsep(args):
    g = documents.dag_from_doc(_load(args.dag), args.dag)
    x = _mask_from_names(g, args.x, "--x")
    y = _mask_from_names(g, args.y, "--y")
    z = _mask_from_names(g, args.z, "--z")
    try:
        separated = d_separation(g, x, y, z)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    return {"x": args.x, "y": args.y, "z": args.z or "", "separated": separated}, EXIT_OK


def run_causal_fill(args):
    hdoc = _load(args.horn)
    try:
        pattern = tuple(
            (int(i), int(j), mark) for i, j, mark in hdoc.get("pattern", ())
        )
        h = CausalHorn(int(hdoc["n"]), int(hdoc["k"]), pattern)
    except (KeyError, ValueError, TypeError) as exc:
        raise DocumentError(f"{args.horn}: {exc}") from exc
    ci = documents.relation_from_doc(_load(args.ci), args.ci)
    fillers = causal_fillers(h, ci)
    report = {
        "n": h.n,
        "k": h.k,
        "filler_count": len(fillers),
        "fillers": [documents.dag_to_doc(g) for g in fillers],
    }
    return report, EXIT_OK


def run_causal_separoid(args):
    rel = documents.relation_from_doc(_load(args.file), args.file)
    rep = check_separoid(rel, strong=args.strong)
    report = {
        "axioms": [
            {
                "name": r.name,
                "holds": r.holds,
                "witness": list(r.witness) if r.witness else None,
            }
            for r in rep.results
        ],
        "ok": rep.ok,
    }
    return report, EXIT_OK if rep.ok else EXIT_FAIL


# --- psr ------------------------------------------------------------------------

def run_psr_sdm(args):
    m = documents.pomdp_from_doc(
        _load(args.pomdp), args.pomdp, tol=args.tol if args.mode == "float" else None
    )
    sdm = build_sdm(m, args.max_len, mode=args.mode, tol=args.tol, bound=args.bound)
    return documents.sdm_to_doc(sdm), EXIT_OK


def run_psr_discover(args):
    m = documents.pomdp_from_doc(
        _load(args.pomdp), args.pomdp, tol=args.tol if args.mode == "float" else None
    )
    sdm = build_sdm(m, args.max_len, mode=args.mode, tol=args.tol, bound=args.bound)
    model = discover_core_tests(sdm)
    errors = model.reconstruction_errors(sdm)
    report = {
        "core_tests": [
            documents.trajectory_to_doc(sdm.actions, sdm.observations, t)
            for t in model.core_tests
        ],
        "core_count": len(model.core_tests),
        "latent_states": len(m.states),
        "reconstruction_ok": not errors,
        "projections": [
            [
                documents.trajectory_to_doc(sdm.actions, sdm.observations, t),
                [
                    documents.format_fraction(v) if sdm.mode == "exact" else repr(v)
                    for v in model.projections[t]
                ],
            ]
            for t in sdm.tests
        ],
    }
    return report, EXIT_OK if not errors else EXIT_FAIL


def run_psr_check_hom(args):
    if args.kind == "mdp":
        src = documents.mdp_from_doc(_load(args.src), args.src)
        dst = documents.mdp_from_doc(_load(args.dst), args.dst)
        mdoc = _load(args.map)
        try:
            fmap = mdoc["f"]
            gmap = mdoc["g"]
            f = tuple(dst.states.index(fmap[s]) for s in src.states)
            g = tuple(
                tuple(
                    dst.actions.index(gmap[s][a]) if a in gmap.get(s, {}) else 0
                    for a in src.actions
                )
                for s in src.states
            )
        except (KeyError, ValueError, TypeError) as exc:
            raise DocumentError(f"{args.map}: {exc}") from exc
        try:
            rep = check_mdp_homomorphism(src, dst, f, g)
        except ValueError as exc:
            raise DocumentError(str(exc)) from exc
    else:
        src_m = documents.pomdp_from_doc(_load(args.src), args.src)
        dst_m = documents.pomdp_from_doc(_load(args.dst), args.dst)
        src_dyn = psr_dynamics(
            src_m, discover_core_tests(build_sdm(src_m, args.max_len)), depth=args.depth
        )
        dst_dyn = psr_dynamics(
            dst_m, discover_core_tests(build_sdm(dst_m, args.max_len)), depth=args.depth
        )
        mdoc = _load(args.map)
        try:
            f = tuple(int(v) for v in mdoc["f"])
            v = tuple(tuple(int(a) for a in row) for row in mdoc["v"])
        except (KeyError, ValueError, TypeError) as exc:
            raise DocumentError(f"{args.map}: {exc}") from exc
        try:
            rep = check_psr_homomorphism(src_dyn, dst_dyn, f, v)
        except ValueError as exc:
            raise DocumentError(str(exc)) from exc
    report = {
        "kind": args.kind,
        "ok": rep.ok,
        "witnesses": [
            {
                "kind": w.kind,
                "location": list(w.location),
                "lhs": str(w.lhs),
                "rhs": str(w.rhs),
            }
            for w in rep.witnesses
        ],
    }
    return report, EXIT_OK if rep.ok else EXIT_FAIL


def run_psr_nerve(args):
    m = documents.pomdp_from_doc(_load(args.pomdp), args.pomdp)
    model = discover_core_tests(build_sdm(m, args.max_len, bound=args.bound))
    dyn = psr_dynamics(m, model)
    ns = psr_nerve(dyn, args.trunc, args.max_len, bound=args.bound)
    return documents.sset_to_doc(ns), EXIT_OK


# --- hom ------------------------------------------------------------------------

def _homology_report(group) -> dict:
    return {
        "dim": group.dim,
        "free_rank": group.free_rank,
        "torsion": list(group.torsion),
        "truncation_caveat": group.truncation_caveat,
        "pretty": group.render(),
    }


def run_hom_compute(args):
    doc = _load(args.file)
    if "members" in doc:
        sub = documents.subset_from_doc(doc, args.file)
        x, _ = subset_as_sset(sub)
    else:
        x = documents.sset_from_doc(doc, args.file)
    cc = homology.chain_complex(x)
    problems = cc.validate()
    if problems:
        raise DocumentError(f"{args.file}: boundary condition fails: {problems[0]}")
    return _homology_report(homology.homology(cc, args.dim)), EXIT_OK


def run_hom_nerve(args):
    cat = documents.category_from_doc(_load(args.file), args.file)
    group = homology.classifying_space_homology(cat, args.trunc, args.dim)
    return _homology_report(group), EXIT_OK


def run_hom_imset(args):
    group = homology.imset_poset_homology(args.n_vars, args.dim, reading=args.reading)
    return _homology_report(group), EXIT_OK


# --- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simpdisc",
        description="Structure discovery over finite simplicial sets",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("human", "json"), default="human", help="output format"
    )
    common.add_argument(
        "--bound", type=int, default=2_000_000, help="search/enumeration guard"
    )

    tops = parser.add_subparsers(dest="noun", required=True)

    p_delta = tops.add_parser("delta", help="the ordinal category")
    sub = p_delta.add_subparsers(dest="verb", required=True)
    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--max-n", type=int, default=6)
    p.set_defaults(handler=run_delta_verify)
    p = sub.add_parser("compose", parents=[common])
    p.add_argument("g", help="monotone map text 'm n : v0 ... vm' (applied second)")
    p.add_argument("f", help="monotone map text (applied first)")
    p.set_defaults(handler=run_delta_compose)
    p = sub.add_parser("decompose", parents=[common])
    p.add_argument("map", help="monotone map text 'm n : v0 ... vm'")
    p.set_defaults(handler=run_delta_decompose)

    p_sset = tops.add_parser("sset", help="simplicial sets")
    sub = p_sset.add_subparsers(dest="verb", required=True)
    p = sub.add_parser("simplex", parents=[common])
    p.add_argument("n", type=int)
    p.add_argument("--trunc", type=int, default=None)
    p.set_defaults(handler=run_sset_simplex)
    p = sub.add_parser("boundary", parents=[common])
    p.add_argument("n", type=int)
    p.add_argument("--trunc", type=int, default=None)
    p.set_defaults(handler=run_sset_boundary)
    p = sub.add_parser("horn", parents=[common])
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--trunc", type=int, default=None)
    p.set_defaults(handler=run_sset_horn)
    p = sub.add_parser("check", parents=[common])
    p.add_argument("file")
    p.set_defaults(handler=run_sset_check)

    p_cat = tops.add_parser("cat", help="finite categories and nerves")
    sub = p_cat.add_subparsers(dest="verb", required=True)
    p = sub.add_parser("nerve", parents=[common])
    p.add_argument("file")
    p.add_argument("--trunc", type=int, default=3)
    p.set_defaults(handler=run_cat_nerve)
    p = sub.add_parser("check", parents=[common])
    p.add_argument("src")
    p.add_argument("dst")
    p.add_argument("--trunc", type=int, default=3)
    p.set_defaults(handler=run_cat_check)
    p = sub.add_parser("ho", parents=[common])
    p.add_argument("file", help="simplicial-set document")
    p.add_argument("--word-cap", type=int, default=8)
    p.set_defaults(handler=run_cat_ho)

    p_lift = tops.add_parser("lift", help="lifting problems and horn filling")
    sub = p_lift.add_subparsers(dest="verb", required=True)
    p = sub.add_parser("classify", parents=[common])
    p.add_argument("file", help="simplicial-set document")
    p.add_argument("--max-n", type=int, default=2)
    p.set_defaults(handler=run_lift_classify)
    p = sub.add_parser("fill", parents=[common])
    p.add_argument("target", help="simplicial-set document")
    p.add_argument("hornmap", help="horn-map document with per-dimension assignment")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=run_lift_fill)

    p_causal = tops.add_parser("causal", help="causal DAG models and imsets")
    sub = p_causal.add_subparsers(dest="verb", required=True)
    p = sub.add_parser("imset", parents=[common])
    p.add_argument("dag")
    p.set_defaults(handler=run_causal_imset)
    p = sub.add_parser("equiv", parents=[common])
    p.add_argument("dag1")
    p.add_argument("dag2")
    p.set_defaults(handler=run_causal_equiv)
    p = sub.add_parser("classes", parents=[common])
    p.add_argument("--n-vars", type=int, required=True)
    p.set_defaults(handler=run_causal_classes)
    p = sub.add_parser("dsep", parents=[common])
    p.add_argument("dag")
    p.add_argument("--x", required=True, help="comma-separated variable names")
    p.add_argument("--y", required=True)
    p.add_argument("--z", default="")
    p.set_defaults(handler=run_causal_dsep)
    p = sub.add_parser("fill", parents=[common])
    p.add_argument("horn", help="causal-horn document")
    p.add_argument("ci", help="independence-relation document")
    p.set_defaults(handler=run_causal_fill)
    p = sub.add_parser("separoid", parents=[common])
    p.add_argument("file", help="DAG document or explicit relation document")
    p.add_argument("--strong", action="store_true")
    p.set_defaults(handler=run_causal_separoid)

    p_psr = tops.add_parser("psr", help="predictive state representations")
    sub = p_psr.add_subparsers(dest="verb", required=True)
    p = sub.add_parser("sdm", parents=[common])
    p.add_argument("pomdp")
    p.add_argument("--max-len", type=int, default=3)
    p.add_argument("--mode", choices=("exact", "float"), default="exact")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(handler=run_psr_sdm)
    p = sub.add_parser("discover", parents=[common])
    p.add_argument("pomdp")
    p.add_argument("--max-len", type=int, default=3)
    p.add_argument("--mode", choices=("exact", "float"), default="exact")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(handler=run_psr_discover)
    p = sub.add_parser("check-hom", parents=[common])
    p.add_argument("src")
    p.add_argument("dst")
    p.add_argument("map")
    p.add_argument("--kind", choices=("mdp", "psr"), default="mdp")
    p.add_argument("--max-len", type=int, default=2)
    p.add_argument("--depth", type=int, default=32)
    p.set_defaults(handler=run_psr_check_hom)
    p = sub.add_parser("nerve", parents=[common])
    p.add_argument("pomdp")
    p.add_argument("--trunc", type=int, default=2)
    p.add_argument("--max-len", type=int, default=2)
    p.set_defaults(handler=run_psr_nerve)

    p_hom = tops.add_parser("hom", help="simplicial homology")
    sub = p_hom.add_subparsers(dest="verb", required=True)
    p = sub.add_parser("compute", parents=[common])
    p.add_argument("file", help="simplicial-set or subset document")
    p.add_argument("--dim", type=int, required=True)
    p.set_defaults(handler=run_hom_compute)
    p = sub.add_parser("nerve", parents=[common])
    p.add_argument("file", help="category document")
    p.add_argument("--trunc", type=int, default=3)
    p.add_argument("--dim", type=int, required=True)
    p.set_defaults(handler=run_hom_nerve)
    p = sub.add_parser("imset", parents=[common])
    p.add_argument("--n-vars", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--reading", choices=("order", "discrete"), default="order")
    p.set_defaults(handler=run_hom_imset)

    return parser


def main(argv=None) -> int:
    started = time.monotonic()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, code = args.handler(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (BoundExceededError, TruncationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except SimpdiscError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    emit(report, args.format, started)
    return code


if __name__ == "__main__":
    sys.exit(main())
