"""Controlled dynamical systems and predictive-state representations.

Probabilities default to exact rationals: the system-dynamics matrix is
built by forward filtering, core tests are discovered by rank-increase
over candidate columns generated as one-step extensions of accepted
tests, and projection vectors come from exact linear solves.  A float
mode with an SVD-style relative tolerance is available for all rank
decisions.  MDP and PSR homomorphism checking is exhaustive over the
finite data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import exactlin
from .errors import BoundExceededError, SimpdiscError
from .fincat import FiniteCategory, Morphism, nerve_detailed
from .sset import SimplicialSet

Trajectory = tuple  # ((action_idx, obs_idx), ...)


@dataclass(frozen=True)
class Pomdp:
    states: tuple[str, ...]
    actions: tuple[str, ...]
    observations: tuple[str, ...]
    transition: tuple  # T[s][a][s']
    emission: tuple    # Z[s'][a][o]
    init: tuple        # b0[s]

    def validate(self) -> list[str]:
        bad = []
        for s, per_action in enumerate(self.transition):
            for a, row in enumerate(per_action):
                if sum(row) != 1:
                    bad.append(f"transition row ({self.states[s]}, {self.actions[a]}) sums to {sum(row)}")
        for sp, per_action in enumerate(self.emission):
            for a, row in enumerate(per_action):
                if sum(row) != 1:
                    bad.append(f"emission row ({self.states[sp]}, {self.actions[a]}) sums to {sum(row)}")
        if sum(self.init) != 1:
            bad.append(f"initial distribution sums to {sum(self.init)}")
        return bad


def _propagate(m: Pomdp, belief, traj: Trajectory):
    """Unnormalized forward filter: mass of observing traj from belief."""
    b = list(belief)
    n = len(m.states)
    for a, o in traj:
        b = [
            sum(b[s] * m.transition[s][a][sp] * m.emission[sp][a][o] for s in range(n))
            for sp in range(n)
        ]
    return b


def history_probability(m: Pomdp, h: Trajectory) -> Fraction:
    return sum(_propagate(m, m.init, h))


def test_probability(m: Pomdp, h: Trajectory, t: Trajectory) -> Fraction:
    """P(test succeeds | history observed) = P(ht) / P(h) via exact filtering."""
    after_h = _propagate(m, m.init, h)
    ph = sum(after_h)
    if ph == 0:
        raise SimpdiscError("conditioning on a zero-probability history")
    return sum(_propagate(m, after_h, t)) / ph


def _words(m: Pomdp, length: int):
    """All action-observation words of exactly this length, lexicographic."""
    alphabet = list(itertools.product(range(len(m.actions)), range(len(m.observations))))
    return [tuple(w) for w in itertools.product(alphabet, repeat=length)]


@dataclass(frozen=True)
class SysDynMatrix:
    actions: tuple[str, ...]
    observations: tuple[str, ...]
    histories: tuple  # Trajectory rows, row 0 is the empty history
    tests: tuple      # Trajectory columns
    values: tuple     # values[i][j] = P(tests[j] | histories[i])
    mode: str = "exact"
    tol: float = 1e-9

    def column(self, j: int):
        return [row[j] for row in self.values]


def build_sdm(
    m: Pomdp,
    max_len: int,
    mode: str = "exact",
    tol: float = 1e-9,
    bound: int = 500_000,
) -> SysDynMatrix:
    """Histories (positive probability, shortest first) by tests (all words)."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    histories = [()]
    beliefs = {(): list(m.init)}
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for h in frontier:
            base = beliefs[h]
            for a in range(len(m.actions)):
                for o in range(len(m.observations)):
                    b = _propagate(m, base, ((a, o),))
                    if sum(b) > 0:
                        word = h + ((a, o),)
                        beliefs[word] = b
                        nxt.append(word)
        histories.extend(nxt)
        frontier = nxt
    tests = []
    for length in range(1, max_len + 1):
        tests.extend(_words(m, length))
    if len(histories) * len(tests) > bound:
        raise BoundExceededError(
            f"system-dynamics matrix {len(histories)}x{len(tests)} exceeds bound {bound}"
        )
    rows = []
    for h in histories:
        base = beliefs[h]
        ph = sum(base)
        row = [sum(_propagate(m, base, t)) / ph for t in tests]
        rows.append(tuple(row))
    sdm = SysDynMatrix(
        m.actions, m.observations, tuple(histories), tuple(tests), tuple(rows)
    )
    if mode == "float":
        rows = tuple(tuple(float(v) for v in row) for row in sdm.values)
        sdm = SysDynMatrix(
            m.actions, m.observations, sdm.histories, sdm.tests, rows, "float", tol
        )
    return sdm


class _ExactBasis:
    """Incremental column echelon basis over Q."""

    def __init__(self):
        self.rows = []  # (pivot index, normalized vector)

    def residue(self, col):
        v = list(col)
        for pivot, vec in self.rows:
            if v[pivot] != 0:
                c = v[pivot]
                v = [a - c * b for a, b in zip(v, vec)]
        return v

    def try_add(self, col) -> bool:
        v = self.residue(col)
        pivot = next((i for i, a in enumerate(v) if a != 0), None)
        if pivot is None:
            return False
        inv = Fraction(1, 1) / v[pivot]
        self.rows.append((pivot, [a * inv for a in v]))
        return True


class _FloatBasis:
    """Float-mode rank decisions with a relative SVD-style tolerance."""

    def __init__(self, tol):
        self.tol = tol
        self.cols = []

    def try_add(self, col) -> bool:
        import numpy as np

        trial = self.cols + [list(map(float, col))]
        a = np.array(trial, dtype=float).T
        s = np.linalg.svd(a, compute_uv=False)
        rank = int((s > self.tol * max(s[0], 1.0)).sum())
        if rank > len(self.cols):
            self.cols = trial
            return True
        return False


@dataclass(frozen=True)
class PsrModel:
    core_tests: tuple
    histories: tuple
    tests: tuple
    psi: dict      # history -> prediction vector over core tests
    projections: dict  # test -> m_t with P(t|h) = psi_h . m_t
    mode: str = "exact"
    tol: float = 1e-9

    def predict(self, h: Trajectory, t: Trajectory):
        return sum(a * b for a, b in zip(self.psi[h], self.projections[t]))

    def reconstruction_errors(self, sdm: SysDynMatrix) -> list:
        bad = []
        for i, h in enumerate(sdm.histories):
            for j, t in enumerate(sdm.tests):
                predicted = self.predict(h, t)
                actual = sdm.values[i][j]
                if self.mode == "exact":
                    if predicted != actual:
                        bad.append((h, t, predicted, actual))
                elif abs(predicted - actual) > self.tol:
                    bad.append((h, t, predicted, actual))
        return bad


def discover_core_tests(sdm: SysDynMatrix) -> PsrModel:
    """Horn-extension search for core tests.

    Length-1 tests seed the queue; a candidate column joins the core when
    it raises the matrix rank, and each accepted test enqueues its
    one-step extensions (shortest first, lexicographic tie-break).
    Projection vectors then solve P(t|h) = psi_h . m_t exactly on every
    row.
    """
    if not sdm.histories or not sdm.tests:
        raise ValueError("empty system-dynamics matrix")
    col_index = {t: j for j, t in enumerate(sdm.tests)}
    alphabet = sorted(
        {(a, o) for t in sdm.tests for a, o in t}
    )
    basis = _ExactBasis() if sdm.mode == "exact" else _FloatBasis(sdm.tol)
    core = []
    queue = [t for t in sdm.tests if len(t) == 1]
    while queue:
        t = queue.pop(0)
        if basis.try_add(sdm.column(col_index[t])):
            core.append(t)
            extensions = [t + (pair,) for pair in alphabet]
            queue.extend(e for e in extensions if e in col_index)
    psi = {
        h: tuple(sdm.values[i][col_index[q]] for q in core)
        for i, h in enumerate(sdm.histories)
    }
    core_matrix = [[sdm.values[i][col_index[q]] for q in core] for i in range(len(sdm.histories))]
    projections = {}
    if sdm.mode == "exact":
        for t, j in col_index.items():
            sol = exactlin.solve(core_matrix, sdm.column(j))
            if sol is None:
                raise SimpdiscError(
                    f"column for test {t} is outside the span of the discovered core"
                )
            projections[t] = tuple(sol)
    else:
        import numpy as np

        a = np.array([[float(v) for v in row] for row in core_matrix])
        for t, j in col_index.items():
            b = np.array([float(v) for v in sdm.column(j)])
            sol, residual, rank, _ = np.linalg.lstsq(a, b, rcond=None)
            err = float(np.max(np.abs(a @ sol - b))) if len(b) else 0.0
            if err > sdm.tol:
                raise SimpdiscError(
                    f"rank-deficiency inconsistency at column {t}: residual {err}"
                )
            projections[t] = tuple(float(v) for v in sol)
    return PsrModel(
        tuple(core), sdm.histories, sdm.tests, psi, projections, sdm.mode, sdm.tol
    )


# --- MDPs and their homomorphisms -------------------------------------------

@dataclass(frozen=True)
class Mdp:
    states: tuple[str, ...]
    actions: tuple[str, ...]
    admissible: frozenset  # (state, action) index pairs
    transition: tuple      # P[s][a][s'], meaningful on admissible pairs
    reward: tuple          # R[s][a]

    def validate(self) -> list[str]:
        bad = []
        for s, a in sorted(self.admissible):
            total = sum(self.transition[s][a])
            if total != 1:
                bad.append(
                    f"transition row ({self.states[s]}, {self.actions[a]}) sums to {total}"
                )
        return bad

    def admissible_actions(self, s: int) -> tuple[int, ...]:
        return tuple(a for a in range(len(self.actions)) if (s, a) in self.admissible)


@dataclass(frozen=True)
class HomWitness:
    kind: str
    location: tuple
    lhs: object
    rhs: object


@dataclass(frozen=True)
class HomReport:
    witnesses: tuple

    @property
    def ok(self) -> bool:
        return not self.witnesses


def check_mdp_homomorphism(src: Mdp, dst: Mdp, f, g) -> HomReport:
    """Verify the stochastic-substitution and reward equations exhaustively.

    f maps source states onto destination states; g[s] maps the actions
    admissible at s onto those admissible at f(s).
    """
    witnesses = []
    if set(f) != set(range(len(dst.states))):
        raise ValueError("state map is not surjective onto the destination states")
    for s in range(len(src.states)):
        image_actions = {g[s][a] for a in src.admissible_actions(s)}
        if image_actions != set(dst.admissible_actions(f[s])):
            raise ValueError(
                f"action map at state {src.states[s]} is not onto the admissible actions of {dst.states[f[s]]}"
            )
    blocks = {}
    for sp in range(len(src.states)):
        blocks.setdefault(f[sp], []).append(sp)
    for s in range(len(src.states)):
        for a in src.admissible_actions(s):
            fa = g[s][a]
            for tprime in range(len(dst.states)):
                lhs = dst.transition[f[s]][fa][tprime]
                rhs = sum(src.transition[s][a][sp] for sp in blocks.get(tprime, ()))
                if lhs != rhs:
                    witnesses.append(
                        HomWitness("transition", (s, a, tprime), lhs, rhs)
                    )
            if dst.reward[f[s]][fa] != src.reward[s][a]:
                witnesses.append(
                    HomWitness(
                        "reward", (s, a), dst.reward[f[s]][fa], src.reward[s][a]
                    )
                )
    return HomReport(tuple(witnesses))


def identity_mdp_hom(m: Mdp):
    f = tuple(range(len(m.states)))
    g = tuple(tuple(range(len(m.actions))) for _ in m.states)
    return f, g


def compose_mdp_homs(first, second):
    """(f1, g1): M1 -> M2 followed by (f2, g2): M2 -> M3."""
    f1, g1 = first
    f2, g2 = second
    f = tuple(f2[s2] for s2 in f1)
    g = tuple(
        tuple(g2[f1[s]][g1[s][a]] for a in range(len(g1[s])))
        for s in range(len(f1))
    )
    return f, g


# --- PSR dynamics and homomorphisms ------------------------------------------

@dataclass(frozen=True)
class PsrDynamics:
    """Finite transition system over reachable prediction vectors."""

    actions: tuple[str, ...]
    observations: tuple[str, ...]
    states: tuple          # prediction vectors (tuples of probabilities)
    init: int
    transitions: tuple     # transitions[si][a] = ((obs, prob, sj), ...)

    def state_transition(self, si: int, a: int):
        """Distribution over next states, observations marginalized out."""
        out = {}
        for _, p, sj in self.transitions[si][a]:
            out[sj] = out.get(sj, Fraction(0)) + p
        return out


def psr_dynamics(m: Pomdp, model: PsrModel, depth: int = 32) -> PsrDynamics:
    """Reachable prediction-vector dynamics of a POMDP under a PSR model.

    Beliefs reached from the initial distribution are identified whenever
    they induce the same prediction vector on the core tests; the search
    stops when no new vectors appear, and raises if the reachable set is
    still growing at the depth limit.
    """
    def belief_psi(belief):
        ph = sum(belief)
        return tuple(sum(_propagate(m, belief, q)) / ph for q in model.core_tests)

    def one_step(belief):
        ph = sum(belief)
        out = []
        for a in range(len(m.actions)):
            for o in range(len(m.observations)):
                b = _propagate(m, belief, ((a, o),))
                p = sum(b) / ph
                out.append((a, o, p, belief_psi(b) if p > 0 else None))
        return out

    states = []
    index = {}
    beliefs = {}

    def intern(belief):
        total = sum(belief)
        belief = [v / total for v in belief]
        psi = belief_psi(belief)
        if psi not in index:
            index[psi] = len(states)
            states.append(psi)
            beliefs[psi] = belief
        elif beliefs[psi] != belief and one_step(beliefs[psi]) != one_step(belief):
            raise SimpdiscError(
                "core tests are not a sufficient statistic: two beliefs share a "
                "prediction vector but disagree one step ahead"
            )
        return index[psi]

    init_idx = intern(list(m.init))
    transitions = {}
    frontier = [init_idx]
    seen = {init_idx}
    for step in range(depth + 1):
        if not frontier:
            break
        if step == depth:
            raise BoundExceededError(
                f"reachable prediction vectors still growing at depth {depth}"
            )
        nxt = []
        for si in frontier:
            belief = beliefs[states[si]]
            ph = sum(belief)
            for a in range(len(m.actions)):
                outs = []
                for o in range(len(m.observations)):
                    b = _propagate(m, belief, ((a, o),))
                    p = sum(b) / ph
                    if p > 0:
                        sj = intern(b)
                        outs.append((o, p, sj))
                        if sj not in seen:
                            seen.add(sj)
                            nxt.append(sj)
                transitions[(si, a)] = tuple(outs)
        frontier = nxt
    table = tuple(
        tuple(transitions.get((si, a), ()) for a in range(len(m.actions)))
        for si in range(len(states))
    )
    return PsrDynamics(m.actions, m.observations, tuple(states), init_idx, table)


def check_psr_homomorphism(src: PsrDynamics, dst: PsrDynamics, f, v) -> HomReport:
    """Verify P(psi' | f(psi), v_psi(a)) = P(f^{-1}(psi') | psi, a) exhaustively.

    f maps source prediction vectors onto destination ones; v[si] maps
    actions per source vector.
    """
    if set(f) != set(range(len(dst.states))):
        raise ValueError("prediction-vector map is not surjective")
    for si in range(len(src.states)):
        if set(v[si]) != set(range(len(dst.actions))):
            raise ValueError(f"action map at state {si} is not surjective")
    witnesses = []
    blocks = {}
    for sj, image in enumerate(f):
        blocks.setdefault(image, set()).add(sj)
    for si in range(len(src.states)):
        for a in range(len(src.actions)):
            src_dist = src.state_transition(si, a)
            dst_dist = dst.state_transition(f[si], v[si][a])
            for tprime in range(len(dst.states)):
                lhs = dst_dist.get(tprime, Fraction(0))
                rhs = sum(
                    (p for sj, p in src_dist.items() if sj in blocks.get(tprime, ())),
                    Fraction(0),
                )
                if lhs != rhs:
                    witnesses.append(HomWitness("psr", (si, a, tprime), lhs, rhs))
    return HomReport(tuple(witnesses))


# --- the nerve of a PSR -------------------------------------------------------

def history_tree_category(dyn: PsrDynamics, max_len: int):
    """Positive-probability histories as a prefix poset, with path probabilities."""
    nodes = [((), dyn.init, Fraction(1))]
    frontier = [0]
    for _ in range(max_len):
        nxt = []
        for idx in frontier:
            word, si, prob = nodes[idx]
            for a in range(len(dyn.actions)):
                for o, p, sj in dyn.transitions[si][a]:
                    nodes.append((word + ((a, o),), sj, prob * p))
                    nxt.append(len(nodes) - 1)
        frontier = nxt

    def render(word):
        if not word:
            return "()"
        return "/".join(
            f"{dyn.actions[a]}:{dyn.observations[o]}" for a, o in word
        )

    names = tuple(render(w) for w, _, _ in nodes)
    prefix_pairs = []
    for i, (wi, _, _) in enumerate(nodes):
        for j, (wj, _, _) in enumerate(nodes):
            if len(wi) <= len(wj) and wj[: len(wi)] == wi:
                prefix_pairs.append((i, j))
    morphisms = []
    index = {}
    for i, j in prefix_pairs:
        index[(i, j)] = len(morphisms)
        suffix = nodes[j][0][len(nodes[i][0]):]
        name = f"{names[i]}=>{render(suffix)}" if i != j else f"id:{names[i]}"
        morphisms.append(Morphism(name, i, j))
    identities = tuple(index[(i, i)] for i in range(len(nodes)))
    comp = {}
    for (i, j), fi in index.items():
        for (j2, k), gi in index.items():
            if j2 == j:
                comp[(gi, fi)] = index[(i, k)]
    cat = FiniteCategory(names, tuple(morphisms), identities, comp)
    probs = tuple(p for _, _, p in nodes)
    return cat, probs


def psr_nerve(dyn: PsrDynamics, trunc: int, max_len: int, bound: int = 200_000) -> SimplicialSet:
    """Nerve of the history-prefix poset, annotated with test probabilities.

    An n-simplex is a nested chain of histories h_0 <= ... <= h_n; its
    label carries P(suffix | h_0), the success probability of the test
    that extends the chain's first history to its last.
    """
    cat, probs = history_tree_category(dyn, max_len)
    size_estimate = len(cat.morphisms) ** max(1, trunc)
    if size_estimate > bound:
        raise BoundExceededError(
            f"nerve size estimate {size_estimate} exceeds bound {bound}"
        )
    ns, chains = nerve_detailed(cat, trunc)
    labels = []
    for n in range(trunc + 1):
        level = []
        for idx, chain in enumerate(chains[n]):
            objs = [chain.start]
            for fi in chain.morphisms:
                objs.append(cat.morphisms[fi].cod)
            p = probs[objs[-1]] / probs[objs[0]]
            level.append(f"{ns.label(n, idx)}|P={p}")
        labels.append(tuple(level))
    return SimplicialSet(trunc, tuple(labels), ns.faces, ns.degeneracies)


# --- the shipped test fleet ---------------------------------------------------

def _frac_rows(rows):
    return tuple(tuple(Fraction(v) for v in row) for row in rows)


def cycle2_pomdp() -> Pomdp:
    """Deterministic 2-state cycle; the observation reveals the state."""
    t = ((( Fraction(0), Fraction(1) ),), ((Fraction(1), Fraction(0)),))
    z = ((( Fraction(1), Fraction(0) ),), ((Fraction(0), Fraction(1)),))
    return Pomdp(
        ("s0", "s1"),
        ("a",),
        ("o0", "o1"),
        t,
        z,
        (Fraction(1), Fraction(0)),
    )


def cycle2_relabeled_pomdp() -> Pomdp:
    """The 2-state cycle with the two observation symbols swapped."""
    base = cycle2_pomdp()
    z = tuple(
        tuple(tuple(reversed(row)) for row in per_action) for per_action in base.emission
    )
    return Pomdp(base.states, base.actions, ("p0", "p1"), base.transition, z, base.init)


def ring3_pomdp() -> Pomdp:
    """Deterministic 3-state ring with noisy observations (3/4 correct)."""
    n = 3
    t = tuple(
        tuple(
            [tuple(Fraction(1) if sp == (s + 1) % n else Fraction(0) for sp in range(n))]
        )
        for s in range(n)
    )
    z = tuple(
        tuple(
            [
                tuple(
                    Fraction(3, 4) if o == sp else Fraction(1, 8) for o in range(n)
                )
            ]
        )
        for sp in range(n)
    )
    return Pomdp(
        ("s0", "s1", "s2"),
        ("a",),
        ("o0", "o1", "o2"),
        t,
        z,
        (Fraction(1), Fraction(0), Fraction(0)),
    )


def switch2_pomdp() -> Pomdp:
    """Two actions: stay keeps the state, go toggles it; colors reveal it."""
    stay = ((1, 0), (0, 1))
    go = ((0, 1), (1, 0))
    t = tuple(
        ( _frac_rows([stay[s]])[0], _frac_rows([go[s]])[0] )
        for s in range(2)
    )
    z_row = lambda sp: tuple(Fraction(1) if o == sp else Fraction(0) for o in range(2))
    z = tuple((z_row(sp), z_row(sp)) for sp in range(2))
    return Pomdp(
        ("s0", "s1"),
        ("stay", "go"),
        ("red", "green"),
        t,
        z,
        (Fraction(1, 2), Fraction(1, 2)),
    )


def _grid_states():
    return ("00", "01", "10", "11")  # row, col


def _grid_dynamics():
    """h toggles the column deterministically; v toggles the row w.p. 3/4."""
    states = _grid_states()
    coords = [(int(s[0]), int(s[1])) for s in states]
    pos = {c: i for i, c in enumerate(coords)}
    t = []
    for r, c in coords:
        h_row = [Fraction(0)] * 4
        h_row[pos[(r, 1 - c)]] = Fraction(1)
        v_row = [Fraction(0)] * 4
        v_row[pos[(1 - r, c)]] = Fraction(3, 4)
        v_row[pos[(r, c)]] = Fraction(1, 4)
        t.append((tuple(h_row), tuple(v_row)))
    return states, tuple(t)


def grid4_pomdp() -> Pomdp:
    states, t = _grid_dynamics()
    z_row = lambda sp: tuple(Fraction(1) if o == sp else Fraction(0) for o in range(4))
    z = tuple((z_row(sp), z_row(sp)) for sp in range(4))
    return Pomdp(
        states,
        ("h", "v"),
        states,
        t,
        z,
        (Fraction(1), Fraction(0), Fraction(0), Fraction(0)),
    )


def grid4_mdp() -> Mdp:
    """The gridworld as an MDP: moving vertically from the top row pays 1."""
    states, t = _grid_dynamics()
    admissible = frozenset((s, a) for s in range(4) for a in range(2))
    reward = tuple(
        (Fraction(0), Fraction(1) if states[s][0] == "1" else Fraction(0))
        for s in range(4)
    )
    return Mdp(states, ("h", "v"), admissible, t, reward)


def rows2_mdp() -> Mdp:
    """The gridworld collapsed along its mirror symmetry: only the row survives."""
    t = (
        ((Fraction(1), Fraction(0)), (Fraction(1, 4), Fraction(3, 4))),
        ((Fraction(0), Fraction(1)), (Fraction(3, 4), Fraction(1, 4))),
    )
    admissible = frozenset((s, a) for s in range(2) for a in range(2))
    reward = ((Fraction(0), Fraction(0)), (Fraction(0), Fraction(1)))
    return Mdp(("r0", "r1"), ("h", "v"), admissible, t, reward)


def grid4_row_collapse():
    """The mirror-symmetry homomorphism grid4 -> rows2."""
    src = grid4_mdp()
    f = tuple(int(s[0]) for s in src.states)
    g = tuple(tuple(range(2)) for _ in src.states)
    return src, rows2_mdp(), f, g


def cols2_mdp_bad_reward() -> Mdp:
    """Column collapse target: transitions work out, rewards cannot."""
    t = (
        ((Fraction(0), Fraction(1)), (Fraction(1), Fraction(0))),
        ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))),
    )
    admissible = frozenset((s, a) for s in range(2) for a in range(2))
    reward = ((Fraction(0), Fraction(0)), (Fraction(0), Fraction(0)))
    return Mdp(("c0", "c1"), ("h", "v"), admissible, t, reward)


def grid4_col_collapse():
    """Column collapse merges states with different rewards; the check fails."""
    src = grid4_mdp()
    f = tuple(int(s[1]) for s in src.states)
    g = tuple(tuple(range(2)) for _ in src.states)
    return src, cols2_mdp_bad_reward(), f, g


def fleet() -> list[tuple[str, Pomdp]]:
    """The in-repo POMDP test fleet."""
    return [
        ("cycle2", cycle2_pomdp()),
        ("ring3", ring3_pomdp()),
        ("switch2", switch2_pomdp()),
        ("grid4", grid4_pomdp()),
    ]


def fleet_state_counts() -> dict:
    return {name: len(m.states) for name, m in fleet()}
