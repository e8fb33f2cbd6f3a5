"""Interchange documents: JSON readers/writers with load-time validation.

Every reader validates the type invariants before returning, reporting
the offending field; every writer is canonical (sorted keys, fixed
indentation) so identical inputs serialize to identical bytes.
Probabilities are written as exact fraction strings and read back from
fraction strings, decimal strings, or numbers.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .causal import Dag, Imset, TernaryRelation, dsep_relation, make_imset
from .errors import DocumentError
from .fincat import FiniteCategory, Morphism
from .psr import Mdp, Pomdp
from .sset import SimplicialSet, SimplicialSubset, is_closed_subset


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise DocumentError(f"{path}: no such file") from exc
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: not valid JSON ({exc})") from exc


def _need(doc: dict, field: str, path: str):
    if field not in doc:
        raise DocumentError(f"{path}: missing field {field!r}")
    return doc[field]


def parse_probability(raw, where: str) -> Fraction:
    try:
        if isinstance(raw, bool):
            raise ValueError("booleans are not probabilities")
        if isinstance(raw, int):
            return Fraction(raw)
        if isinstance(raw, float):
            return Fraction(str(raw))
        if isinstance(raw, str):
            return Fraction(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"{where}: bad probability {raw!r}") from exc
    raise DocumentError(f"{where}: bad probability {raw!r}")


def format_fraction(value) -> str:
    return str(Fraction(value))


# --- simplicial sets ---------------------------------------------------------

def sset_to_doc(x: SimplicialSet) -> dict:
    return {
        "trunc_dim": x.trunc_dim,
        "simplices": [list(level) for level in x.labels],
        "faces": [[list(row) for row in level] for level in x.faces],
        "degeneracies": [[list(row) for row in level] for level in x.degeneracies],
    }


def sset_from_doc(doc: dict, path: str = "<doc>") -> SimplicialSet:
    trunc = _need(doc, "trunc_dim", path)
    labels = tuple(tuple(level) for level in _need(doc, "simplices", path))
    faces = tuple(
        tuple(tuple(row) for row in level) for level in _need(doc, "faces", path)
    )
    degeneracies = tuple(
        tuple(tuple(row) for row in level)
        for level in _need(doc, "degeneracies", path)
    )
    if len(labels) != trunc + 1:
        raise DocumentError(f"{path}: simplices must list dimensions 0..{trunc}")
    try:
        x = SimplicialSet(trunc, labels, faces, degeneracies)
        problems = x.validate()
    except (IndexError, TypeError) as exc:
        raise DocumentError(f"{path}: malformed tables ({exc})") from exc
    if problems:
        raise DocumentError(f"{path}: simplicial identities fail: {problems[0]}")
    return x


def subset_to_doc(s: SimplicialSubset) -> dict:
    return {
        "ambient": sset_to_doc(s.ambient),
        "members": [list(level) for level in s.members],
    }


def subset_from_doc(doc: dict, path: str = "<doc>") -> SimplicialSubset:
    ambient = sset_from_doc(_need(doc, "ambient", path), path + ".ambient")
    members = tuple(tuple(level) for level in _need(doc, "members", path))
    sub = SimplicialSubset(ambient, members)
    try:
        closed = is_closed_subset(sub)
    except ValueError as exc:
        raise DocumentError(f"{path}: {exc}") from exc
    if not closed:
        raise DocumentError(f"{path}: members are not closed under faces/degeneracies")
    return sub


# --- categories ----------------------------------------------------------------

def category_to_doc(cat: FiniteCategory) -> dict:
    names = [m.name for m in cat.morphisms]
    return {
        "objects": list(cat.objects),
        "morphisms": [
            {"name": m.name, "dom": cat.objects[m.dom], "cod": cat.objects[m.cod]}
            for m in cat.morphisms
        ],
        "identities": [names[i] for i in cat.identities],
        "comp": sorted(
            [names[g], names[f], names[gf]] for (g, f), gf in cat.comp.items()
        ),
    }


def category_from_doc(doc: dict, path: str = "<doc>") -> FiniteCategory:
    objects = tuple(_need(doc, "objects", path))
    obj_index = {name: i for i, name in enumerate(objects)}
    morphisms = []
    mor_index = {}
    for k, m in enumerate(_need(doc, "morphisms", path)):
        name = _need(m, "name", f"{path}.morphisms[{k}]")
        dom = _need(m, "dom", f"{path}.morphisms[{k}]")
        cod = _need(m, "cod", f"{path}.morphisms[{k}]")
        if dom not in obj_index or cod not in obj_index:
            raise DocumentError(f"{path}.morphisms[{k}]: unknown object")
        if name in mor_index:
            raise DocumentError(f"{path}.morphisms[{k}]: duplicate name {name!r}")
        mor_index[name] = k
        morphisms.append(Morphism(name, obj_index[dom], obj_index[cod]))
    identities = []
    for k, name in enumerate(_need(doc, "identities", path)):
        if name not in mor_index:
            raise DocumentError(f"{path}.identities[{k}]: unknown morphism {name!r}")
        identities.append(mor_index[name])
    comp = {}
    for k, triple in enumerate(_need(doc, "comp", path)):
        try:
            g, f, gf = triple
        except ValueError as exc:
            raise DocumentError(f"{path}.comp[{k}]: need [g, f, gf]") from exc
        for name in (g, f, gf):
            if name not in mor_index:
                raise DocumentError(f"{path}.comp[{k}]: unknown morphism {name!r}")
        comp[(mor_index[g], mor_index[f])] = mor_index[gf]
    cat = FiniteCategory(objects, tuple(morphisms), tuple(identities), comp)
    problems = cat.validate()
    if problems:
        raise DocumentError(f"{path}: category laws fail: {problems[0]}")
    return cat


# --- DAGs and imsets -------------------------------------------------------------

def dag_to_doc(g: Dag) -> dict:
    return {
        "vars": list(g.vars),
        "edges": sorted([g.vars[a], g.vars[b]] for a, b in g.edges),
    }


def dag_from_doc(doc: dict, path: str = "<doc>") -> Dag:
    names = tuple(_need(doc, "vars", path))
    index = {v: i for i, v in enumerate(names)}
    if len(index) != len(names):
        raise DocumentError(f"{path}: duplicate variable names")
    edges = set()
    for k, pair in enumerate(_need(doc, "edges", path)):
        try:
            a, b = pair
        except ValueError as exc:
            raise DocumentError(f"{path}.edges[{k}]: need [parent, child]") from exc
        if a not in index or b not in index:
            raise DocumentError(f"{path}.edges[{k}]: unknown variable")
        edges.add((index[a], index[b]))
    try:
        return Dag(names, frozenset(edges))
    except ValueError as exc:
        raise DocumentError(f"{path}: {exc}") from exc


def imset_to_doc(u: Imset) -> dict:
    names = u.vars
    entries = []
    for mask, value in u.entries:  # already sorted by mask
        subset = [names[i] for i in range(len(names)) if mask & (1 << i)]
        entries.append([subset, value if isinstance(value, int) else str(value)])
    return {"vars": list(names), "entries": entries}


def imset_from_doc(doc: dict, path: str = "<doc>") -> Imset:
    names = tuple(_need(doc, "vars", path))
    index = {v: i for i, v in enumerate(names)}
    table = {}
    for k, entry in enumerate(_need(doc, "entries", path)):
        try:
            subset, value = entry
        except ValueError as exc:
            raise DocumentError(f"{path}.entries[{k}]: need [subset, value]") from exc
        mask = 0
        for v in subset:
            if v not in index:
                raise DocumentError(f"{path}.entries[{k}]: unknown variable {v!r}")
            mask |= 1 << index[v]
        if isinstance(value, str):
            value = Fraction(value)
            if value.denominator == 1:
                value = value.numerator
        elif not isinstance(value, int):
            raise DocumentError(f"{path}.entries[{k}]: bad value {value!r}")
        if mask in table:
            raise DocumentError(f"{path}.entries[{k}]: duplicate subset")
        table[mask] = value
    return make_imset(names, table)


def relation_from_doc(doc: dict, path: str = "<doc>") -> TernaryRelation:
    """Either a DAG document (lifted d-separation) or an explicit triple list."""
    if "edges" in doc:
        return dsep_relation(dag_from_doc(doc, path))
    names = tuple(_need(doc, "vars", path))
    index = {v: i for i, v in enumerate(names)}

    def mask_of(parts, where):
        mask = 0
        for v in parts:
            if v not in index:
                raise DocumentError(f"{where}: unknown variable {v!r}")
            mask |= 1 << index[v]
        return mask

    triples = set()
    for k, triple in enumerate(_need(doc, "triples", path)):
        try:
            xs, ys, zs = triple
        except ValueError as exc:
            raise DocumentError(f"{path}.triples[{k}]: need [x, y, z]") from exc
        where = f"{path}.triples[{k}]"
        triples.add((mask_of(xs, where), mask_of(ys, where), mask_of(zs, where)))
    return TernaryRelation(names, tuple(range(1 << len(names))), frozenset(triples))


# --- dynamical systems ------------------------------------------------------------

def _probability_rows(raw, path):
    out = []
    for i, per in enumerate(raw):
        rows = []
        for j, row in enumerate(per):
            rows.append(
                tuple(
                    parse_probability(v, f"{path}[{i}][{j}][{k}]")
                    for k, v in enumerate(row)
                )
            )
        out.append(tuple(rows))
    return tuple(out)


def pomdp_to_doc(m: Pomdp) -> dict:
    return {
        "states": list(m.states),
        "actions": list(m.actions),
        "observations": list(m.observations),
        "T": [
            [[format_fraction(v) for v in row] for row in per] for per in m.transition
        ],
        "Z": [
            [[format_fraction(v) for v in row] for row in per] for per in m.emission
        ],
        "b0": [format_fraction(v) for v in m.init],
    }


def pomdp_from_doc(doc: dict, path: str = "<doc>", tol: float | None = None) -> Pomdp:
    states = tuple(_need(doc, "states", path))
    actions = tuple(_need(doc, "actions", path))
    observations = tuple(_need(doc, "observations", path))
    t = _probability_rows(_need(doc, "T", path), f"{path}.T")
    z = _probability_rows(_need(doc, "Z", path), f"{path}.Z")
    b0 = tuple(
        parse_probability(v, f"{path}.b0[{k}]")
        for k, v in enumerate(_need(doc, "b0", path))
    )
    if len(t) != len(states) or any(len(per) != len(actions) for per in t):
        raise DocumentError(f"{path}.T: needs shape states x actions x states")
    if len(z) != len(states) or any(len(per) != len(actions) for per in z):
        raise DocumentError(f"{path}.Z: needs shape states x actions x observations")
    m = Pomdp(states, actions, observations, t, z, b0)
    problems = m.validate()
    if problems:
        if tol is None:
            raise DocumentError(f"{path}: {problems[0]}")
        rows = [row for per in t for row in per]
        rows += [row for per in z for row in per]
        rows.append(b0)
        for row in rows:
            if abs(float(sum(row)) - 1.0) > tol:
                raise DocumentError(f"{path}: {problems[0]}")
    return m


def mdp_to_doc(m: Mdp) -> dict:
    return {
        "states": list(m.states),
        "actions": list(m.actions),
        "Psi": sorted([m.states[s], m.actions[a]] for s, a in m.admissible),
        "P": [
            [[format_fraction(v) for v in row] for row in per] for per in m.transition
        ],
        "R": [[format_fraction(v) for v in row] for row in m.reward],
    }


def mdp_from_doc(doc: dict, path: str = "<doc>") -> Mdp:
    states = tuple(_need(doc, "states", path))
    actions = tuple(_need(doc, "actions", path))
    sidx = {v: i for i, v in enumerate(states)}
    aidx = {v: i for i, v in enumerate(actions)}
    if "Psi" in doc:
        admissible = set()
        for k, pair in enumerate(doc["Psi"]):
            try:
                s, a = pair
            except ValueError as exc:
                raise DocumentError(f"{path}.Psi[{k}]: need [state, action]") from exc
            if s not in sidx or a not in aidx:
                raise DocumentError(f"{path}.Psi[{k}]: unknown state or action")
            admissible.add((sidx[s], aidx[a]))
        admissible = frozenset(admissible)
    else:
        admissible = frozenset(
            (s, a) for s in range(len(states)) for a in range(len(actions))
        )
    p = _probability_rows(_need(doc, "P", path), f"{path}.P")
    r = tuple(
        tuple(parse_probability(v, f"{path}.R[{i}][{j}]") for j, v in enumerate(row))
        for i, row in enumerate(_need(doc, "R", path))
    )
    m = Mdp(states, actions, admissible, p, r)
    problems = m.validate()
    if problems:
        raise DocumentError(f"{path}: {problems[0]}")
    return m


# --- trajectories and matrices ------------------------------------------------------

def trajectory_to_doc(m_actions, m_observations, t) -> list:
    return [[m_actions[a], m_observations[o]] for a, o in t]


def trajectory_from_doc(raw, actions, observations, where: str):
    aidx = {v: i for i, v in enumerate(actions)}
    oidx = {v: i for i, v in enumerate(observations)}
    out = []
    for k, pair in enumerate(raw):
        try:
            a, o = pair
        except ValueError as exc:
            raise DocumentError(f"{where}[{k}]: need [action, observation]") from exc
        if a not in aidx or o not in oidx:
            raise DocumentError(f"{where}[{k}]: unknown action or observation")
        out.append((aidx[a], oidx[o]))
    return tuple(out)


def sdm_to_doc(sdm) -> dict:
    return {
        "actions": list(sdm.actions),
        "observations": list(sdm.observations),
        "histories": [
            trajectory_to_doc(sdm.actions, sdm.observations, h) for h in sdm.histories
        ],
        "tests": [
            trajectory_to_doc(sdm.actions, sdm.observations, t) for t in sdm.tests
        ],
        "values": [
            [format_fraction(v) if sdm.mode == "exact" else repr(v) for v in row]
            for row in sdm.values
        ],
        "mode": sdm.mode,
    }
