"""Shared test machinery: random model generators and independent oracles.

The oracles deliberately work on plain tuples/dicts and re-derive every
answer from first principles (recursive search, subset enumeration), so
they share no code path with the library functions they cross-check.
"""

from __future__ import annotations

import itertools
from random import Random

from casys import make_automaton, make_controller
from casys.automata import InterfaceAutomaton
from casys.control import ControllingAutomaton

ACTION_POOL = ("x", "y", "z")


# ---------------------------------------------------------------- generators

def random_automaton(
    rng: Random,
    name: str = "sys",
    *,
    max_states: int = 5,
    max_actions: int = 3,
    state_prefix: str = "s",
    atom_prefix: str = "p",
    empty_start_prob: float = 0.05,
) -> InterfaceAutomaton:
    n = rng.randint(1, max_states)
    states = [f"{state_prefix}{i}" for i in range(n)]
    actions = list(ACTION_POOL[: rng.randint(0, max_actions)])
    polarity = {a: rng.choice(("inputs", "outputs", "internals")) for a in actions}
    alphabet = {"inputs": [], "outputs": [], "internals": []}
    for a, kind in polarity.items():
        alphabet[kind].append(a)
    n_transitions = rng.randint(0, 2 * n) if actions else 0
    transitions = [
        (f"{atom_prefix}{k + 1}", rng.choice(states), rng.choice(actions), rng.choice(states))
        for k in range(n_transitions)
    ]
    start = [] if rng.random() < empty_start_prob else [rng.choice(states)]
    return make_automaton(
        name,
        states=states,
        inputs=alphabet["inputs"],
        outputs=alphabet["outputs"],
        internals=alphabet["internals"],
        transitions=transitions,
        start=start,
    )


def random_controller(
    rng: Random,
    subject: InterfaceAutomaton,
    name: str = "ctrl",
    *,
    max_states: int = 4,
) -> ControllingAutomaton:
    n = rng.randint(1, max_states)
    states = [f"c{i}" for i in range(n)]
    terminals = sorted(subject.atoms())
    density = rng.uniform(0.15, 0.55)
    transitions = [
        (q, t, q2)
        for q in states
        for t in terminals
        for q2 in states
        if rng.random() < density
    ]
    start = rng.sample(states, rng.randint(1, n))
    return make_controller(
        name,
        subject.name,
        states=states,
        transitions=transitions,
        start=start,
        terminals=terminals,
    )


def random_composable_pair(rng: Random) -> tuple:
    """Two small automata satisfying the composability clauses by construction."""
    n_shared = rng.randint(0, 2)
    shared = [f"h{i}" for i in range(n_shared)]
    left_out = {a for a in shared if rng.random() < 0.5}

    def side(tag: str, own_actions: list) -> InterfaceAutomaton:
        n = rng.randint(1, 3)
        states = [f"{tag}{i}" for i in range(n)]
        inputs, outputs, internals = [], [], []
        for a in own_actions:
            rng.choice((inputs, outputs, internals)).append(a)
        if tag == "a":
            outputs += sorted(left_out)
            inputs += sorted(set(shared) - left_out)
        else:
            inputs += sorted(left_out)
            outputs += sorted(set(shared) - left_out)
        alphabet = inputs + outputs + internals
        n_transitions = rng.randint(0, 2 * n) if alphabet else 0
        transitions = [
            (f"{tag}t{k + 1}", rng.choice(states), rng.choice(alphabet), rng.choice(states))
            for k in range(n_transitions)
        ]
        start = [] if rng.random() < 0.05 else [states[0]]
        return make_automaton(
            f"{tag}-side",
            states=states,
            inputs=inputs,
            outputs=outputs,
            internals=internals,
            transitions=transitions,
            start=start,
        )

    left = side("a", [f"va{i}" for i in range(rng.randint(0, 2))])
    right = side("b", [f"vb{i}" for i in range(rng.randint(0, 2))])
    return left, right


# ------------------------------------------------------------------- oracles

def plain_edges(a: InterfaceAutomaton) -> list:
    """(sorted-name-tuple, source, action, target) tuples for the naive oracles."""
    return [(tuple(sorted(t.name)), t.source, t.action, t.target) for t in a.transitions]


def _edge_index(edges: list) -> dict:
    index: dict = {}
    for (name, source, action, target) in edges:
        index.setdefault((source, action), []).append((name, target))
    return index


def naive_accepts(edges: list, starts, trace) -> bool:
    """Word acceptance by recursive search over (source, action, target)."""
    trace = tuple(trace)
    index = _edge_index(edges)
    seen = set()

    def walk(state, i) -> bool:
        if i == len(trace):
            return True
        if (state, i) in seen:
            return False
        seen.add((state, i))
        return any(walk(target, i + 1) for (_, target) in index.get((state, trace[i]), ()))

    return any(walk(q, 0) for q in starts)


def naive_runs(edges: list, starts, trace) -> list:
    """All name sequences that spell the trace, by plain recursion."""
    trace = tuple(trace)
    index = _edge_index(edges)
    out = []

    def walk(state, i, acc) -> None:
        if i == len(trace):
            out.append(tuple(acc))
            return
        for (name, target) in index.get((state, trace[i]), ()):
            walk(target, i + 1, acc + [name])

    for q in starts:
        walk(q, 0, [])
    return out


def naive_controller_accepts(triples: list, starts, name_trace) -> bool:
    """Controller acceptance of a sequence of (possibly composite) names.

    ``triples`` are plain (source, terminal, target) tuples.  A composite
    name may be consumed only by one controller move shared by all atoms.
    """

    def walk(state, i) -> bool:
        if i == len(name_trace):
            return True
        atoms = tuple(sorted(name_trace[i]))
        candidates = None
        for atom in atoms:
            targets = {t for (s, term, t) in triples if s == state and term == atom}
            candidates = targets if candidates is None else candidates & targets
        return any(walk(q2, i + 1) for q2 in candidates or ())

    return any(walk(q, 0) for q in starts)


def naive_language(edges: list, starts, alphabet, max_len: int) -> set:
    """All accepted words up to ``max_len`` by checking every word in Σ*."""
    words = set()
    for length in range(max_len + 1):
        for word in itertools.product(sorted(alphabet), repeat=length):
            if naive_accepts(edges, starts, word):
                words.add(word)
    return words


def naive_illegal_pairs(left: InterfaceAutomaton, right: InterfaceAutomaton) -> set:
    """Pairs (v, u) where a shared output on one side cannot be received."""
    shared = left.alphabet & right.alphabet

    def can(a: InterfaceAutomaton, state, action) -> bool:
        return any(t.source == state and t.action == action for t in a.transitions)

    bad = set()
    for v in left.states:
        for u in right.states:
            for action in shared & left.outputs:
                if can(left, v, action) and not can(right, u, action):
                    bad.add((v, u))
            for action in shared & right.outputs:
                if can(right, u, action) and not can(left, v, action):
                    bad.add((v, u))
    return bad


def brute_force_compatible(states, local_edges, illegal) -> set:
    """Compatible set by subset enumeration.

    A subset is safe when it avoids every illegal state and no
    locally-controlled edge escapes it; the compatible states are the union
    of all safe subsets.  Exponential, therefore only used on tiny products.
    """
    states = sorted(states)
    safe_union = set()
    for r in range(len(states) + 1):
        for subset in itertools.combinations(states, r):
            chosen = set(subset)
            if chosen & set(illegal):
                continue
            if any(s in chosen and t not in chosen for (s, t) in local_edges):
                continue
            safe_union |= chosen
    return safe_union
