"""Binary composition of interface automata.

The product synchronizes shared actions (one side's output, the other's
input) and interleaves everything else; a synchronized action becomes an
internal action of the product.  States of the product where one side can
emit a shared output the other cannot currently receive are *illegal*; the
composition keeps only the states from which a helpful environment can
steer clear of them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import InterfaceAutomaton, Transition, natural_key
from .errors import NotComposableError

__all__ = [
    "Composability",
    "ProductAutomaton",
    "pair_id",
    "shared_actions",
    "composable",
    "product",
    "illegal_states",
    "compatible_states",
    "compose",
]


@dataclass(frozen=True)
class Composability:
    """Outcome of the composability check with one reason per violated clause."""

    ok: bool
    reasons: tuple

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class ProductAutomaton:
    """A product with its operands and the pair decomposition of its states."""

    automaton: InterfaceAutomaton
    left: InterfaceAutomaton
    right: InterfaceAutomaton
    shared: frozenset
    pairs: dict  # pair-state id -> (left state, right state)


def pair_id(v: str, u: str) -> str:
    """Canonical rendering of a pair state."""
    return f"({v},{u})"


def shared_actions(a: InterfaceAutomaton, b: InterfaceAutomaton) -> frozenset:
    """Actions the two alphabets have in common."""
    return a.alphabet & b.alphabet


def composable(a: InterfaceAutomaton, b: InterfaceAutomaton) -> Composability:
    """Check the four alphabet-disjointness clauses for composing ``a`` with ``b``."""
    reasons = []

    def clause(violated: frozenset, text: str) -> None:
        if violated:
            reasons.append(f"{text}: {', '.join(sorted(violated, key=natural_key))}")

    clause(a.internals & b.alphabet, f"internal actions of {a.name!r} appear in {b.name!r}")
    clause(a.inputs & b.inputs, "both automata declare these inputs")
    clause(a.outputs & b.outputs, "both automata declare these outputs")
    clause(b.internals & a.alphabet, f"internal actions of {b.name!r} appear in {a.name!r}")
    return Composability(ok=not reasons, reasons=tuple(reasons))


def product(a: InterfaceAutomaton, b: InterfaceAutomaton, name: str | None = None) -> ProductAutomaton:
    """The full synchronized product of two composable automata.

    Non-shared transitions are interleaved (one copy per state of the other
    operand, keeping their original name); shared actions fire only as
    synchronizations whose name joins the two operand names.  Nothing is
    pruned here: the state set is the whole cartesian product.
    """
    check = composable(a, b)
    if not check:
        raise NotComposableError(check.reasons)

    shared = shared_actions(a, b)
    pairs = {pair_id(v, u): (v, u) for v in a.states for u in b.states}

    transitions = set()
    for t in a.transitions:
        if t.action not in shared:
            for u in b.states:
                transitions.add(Transition(t.name, pair_id(t.source, u), t.action, pair_id(t.target, u)))
    for t in b.transitions:
        if t.action not in shared:
            for v in a.states:
                transitions.add(Transition(t.name, pair_id(v, t.source), t.action, pair_id(v, t.target)))
    for ta in a.transitions:
        if ta.action in shared:
            for tb in b.transitions:
                if tb.action == ta.action:
                    transitions.add(Transition(
                        ta.name | tb.name,
                        pair_id(ta.source, tb.source),
                        ta.action,
                        pair_id(ta.target, tb.target),
                    ))

    automaton = InterfaceAutomaton(
        name=name if name is not None else f"{a.name}*{b.name}",
        states=frozenset(pairs),
        inputs=(a.inputs | b.inputs) - shared,
        outputs=(a.outputs | b.outputs) - shared,
        internals=a.internals | b.internals | shared,
        transitions=frozenset(transitions),
        start=frozenset(pair_id(v, u) for v in a.start for u in b.start),
    )
    return ProductAutomaton(automaton=automaton, left=a, right=b, shared=shared, pairs=pairs)


def _output_enabled(a: InterfaceAutomaton, state: str, action: str) -> bool:
    return any(t.source == state and t.action == action for t in a.transitions)


def illegal_states(p: ProductAutomaton) -> frozenset:
    """Pair states where a shared output on one side finds the other deaf."""
    bad = set()
    left_out = p.shared & p.left.outputs
    right_out = p.shared & p.right.outputs
    for pid, (v, u) in p.pairs.items():
        for action in left_out:
            if _output_enabled(p.left, v, action) and not _output_enabled(p.right, u, action):
                bad.add(pid)
                break
        else:
            for action in right_out:
                if _output_enabled(p.right, u, action) and not _output_enabled(p.left, v, action):
                    bad.add(pid)
                    break
    return frozenset(bad)


def compatible_states(p: ProductAutomaton) -> frozenset:
    """States from which some environment can forever avoid illegal states.

    The environment may withhold the product's input actions but cannot
    stop its outputs or internal steps.  So a state is doomed when it is
    illegal, or when a locally-controlled (output or internal) transition
    leads to a doomed state; the compatible states are everything else.
    """
    auto = p.automaton
    local = auto.outputs | auto.internals
    doomed = set(illegal_states(p))
    incoming_local: dict[str, set] = {}
    for t in auto.transitions:
        if t.action in local:
            incoming_local.setdefault(t.target, set()).add(t.source)
    frontier = list(doomed)
    while frontier:
        q = frontier.pop()
        for source in incoming_local.get(q, ()):
            if source not in doomed:
                doomed.add(source)
                frontier.append(source)
    return frozenset(auto.states - doomed)


def compose(a: InterfaceAutomaton, b: InterfaceAutomaton, name: str | None = None) -> InterfaceAutomaton:
    """The product restricted to its compatible states.

    The start state is dropped when it is incompatible, leaving an automaton
    with an empty language rather than an error.
    """
    p = product(a, b)
    keep = compatible_states(p)
    return InterfaceAutomaton(
        name=name if name is not None else f"{a.name}||{b.name}",
        states=keep,
        inputs=p.automaton.inputs,
        outputs=p.automaton.outputs,
        internals=p.automaton.internals,
        transitions=frozenset(
            t for t in p.automaton.transitions if t.source in keep and t.target in keep
        ),
        start=p.automaton.start & keep,
    )
