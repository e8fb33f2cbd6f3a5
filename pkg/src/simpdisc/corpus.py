"""Golden-corpus generator: the interchange documents shipped in corpus/.

Regenerate with `python -m simpdisc.corpus <outdir>`.  The CLI test
suite runs every subcommand over these files twice and insists on
byte-identical machine output.
"""

from __future__ import annotations

import os
import sys

from . import documents
from .causal import dag
from .fincat import catalogue, nerve, z2_category
from .lifting import enumerate_simplicial_maps, horn_inclusion
from .psr import fleet, grid4_mdp, rows2_mdp, cols2_mdp_bad_reward
from .sset import boundary


def _write(outdir: str, name: str, doc: dict) -> None:
    with open(os.path.join(outdir, name), "w", encoding="utf-8") as fh:
        fh.write(documents.canonical_json(doc))


def _z2_inner_horn_assignment():
    """The horn map sending both free edges of the inner 2-horn to g."""
    horn_sset, _, _ = horn_inclusion(2, 1, 3)
    target = nerve(z2_category(), 3)
    g_edge = target.labels[1].index("g")
    pins = {}
    for lbl in ("0,1", "1,2"):
        pins[(1, horn_sset.labels[1].index(lbl))] = g_edge
    maps = enumerate_simplicial_maps(horn_sset, target, pins=pins)
    assert len(maps) == 1
    return [list(level) for level in maps[0].assignment]


def write_corpus(outdir: str) -> list[str]:
    os.makedirs(outdir, exist_ok=True)
    written = []

    for name, cat in catalogue():
        fname = f"cat_{name}.json"
        _write(outdir, fname, documents.category_to_doc(cat))
        written.append(fname)

    dags = {
        "dag_chain.json": dag("abc", [("a", "b"), ("b", "c")]),
        "dag_chain_rev.json": dag("abc", [("c", "b"), ("b", "a")]),
        "dag_diverger.json": dag("abc", [("b", "a"), ("b", "c")]),
        "dag_collider.json": dag("abc", [("a", "c"), ("b", "c")]),
    }
    for fname, g in dags.items():
        _write(outdir, fname, documents.dag_to_doc(g))
        written.append(fname)

    for name, m in fleet():
        fname = f"pomdp_{name}.json"
        _write(outdir, fname, documents.pomdp_to_doc(m))
        written.append(fname)

    for fname, m in (
        ("mdp_grid4.json", grid4_mdp()),
        ("mdp_rows2.json", rows2_mdp()),
        ("mdp_cols2_bad.json", cols2_mdp_bad_reward()),
    ):
        _write(outdir, fname, documents.mdp_to_doc(m))
        written.append(fname)

    grid = grid4_mdp()
    rows = rows2_mdp()
    cols = cols2_mdp_bad_reward()
    row_map = {
        "f": {s: rows.states[int(s[0])] for s in grid.states},
        "g": {s: {"h": "h", "v": "v"} for s in grid.states},
    }
    col_map = {
        "f": {s: cols.states[int(s[1])] for s in grid.states},
        "g": {s: {"h": "h", "v": "v"} for s in grid.states},
    }
    _write(outdir, "map_row_collapse.json", row_map)
    _write(outdir, "map_col_collapse.json", col_map)
    _write(outdir, "map_psr_identity.json", {"f": [0, 1], "v": [[0], [0]]})
    written += ["map_row_collapse.json", "map_col_collapse.json", "map_psr_identity.json"]

    from .fincat import arrow_category

    _write(outdir, "sset_nerve_arrow.json", documents.sset_to_doc(nerve(arrow_category(), 2)))
    _write(outdir, "sset_nerve_z2_t3.json", documents.sset_to_doc(nerve(z2_category(), 3)))
    _write(outdir, "subset_boundary2.json", documents.subset_to_doc(boundary(2, 3)))
    written += ["sset_nerve_arrow.json", "sset_nerve_z2_t3.json", "subset_boundary2.json"]

    _write(
        outdir,
        "hornmap_z2_inner.json",
        {"n": 2, "k": 1, "assignment": _z2_inner_horn_assignment()},
    )
    written.append("hornmap_z2_inner.json")

    _write(
        outdir,
        "causal_horn21.json",
        {"n": 2, "k": 1, "pattern": [[0, 1, "->"], [1, 2, "->"]]},
    )
    _write(
        outdir,
        "ci_chain.json",
        {
            "vars": ["0", "1", "2"],
            "triples": [[["0"], ["2"], ["1"]], [["2"], ["0"], ["1"]]],
        },
    )
    _write(outdir, "ci_empty.json", {"vars": ["0", "1", "2"], "triples": []})
    written += ["causal_horn21.json", "ci_chain.json", "ci_empty.json"]

    return sorted(written)


if __name__ == "__main__":
    target = sys.argv[1] if len(sys.argv) > 1 else "corpus"
    names = write_corpus(target)
    print(f"wrote {len(names)} documents to {target}/")
