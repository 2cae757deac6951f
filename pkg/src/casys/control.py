"""Controlling automata and the meta-composition operator.

A controlling automaton runs one level above its subject: its alphabet is
the set of the subject's transition names, so it constrains which
*sequences of transitions* the subject may take.  Meta-composition pairs
the two; a subject transition fires only when the controller can consume
all of its atomic names in a single step between one pair of controller
states.  Blocking a name everywhere simply means leaving it out of the
controller's transitions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .automata import (
    InterfaceAutomaton,
    Transition,
    format_name,
    natural_key,
)
from .composition import pair_id
from .errors import ControllerInvalidError, UnknownTerminalError

__all__ = [
    "ControlTransition",
    "ControllingAutomaton",
    "make_controller",
    "ControllerReport",
    "validate_controlling",
    "complete_selfloops",
    "TransitionOrigin",
    "MetaComposition",
    "meta_compose",
    "universal_controller",
]


@dataclass(frozen=True)
class ControlTransition:
    """A controller step consuming one terminal (one subject transition name)."""

    source: str
    terminal: str
    target: str


@dataclass(frozen=True)
class ControllingAutomaton:
    name: str
    subject: str
    states: frozenset
    terminals: frozenset
    transitions: frozenset
    start: frozenset
    notes: tuple = field(default=(), compare=False)

    def sorted_transitions(self) -> list[ControlTransition]:
        return sorted(
            self.transitions,
            key=lambda t: (natural_key(t.source), natural_key(t.terminal), natural_key(t.target)),
        )

    def moves(self, source: str, terminal: str) -> frozenset:
        return frozenset(t.target for t in self.transitions
                         if t.source == source and t.terminal == terminal)


def make_controller(
    name: str,
    subject: str,
    *,
    states: Iterable[str],
    transitions: Iterable = (),
    start: Iterable[str] = (),
    terminals: Iterable[str] | None = None,
    notes: Iterable[str] = (),
) -> ControllingAutomaton:
    """Build a controller from plain iterables.

    ``transitions`` accepts ControlTransition values or
    ``(source, terminal, target)`` tuples.  When ``terminals`` is omitted the
    terminal alphabet is inferred from the transitions; pass the subject's
    atom set explicitly to satisfy validation when some terminals are meant
    to be blocked.
    """
    built = []
    for t in transitions:
        if isinstance(t, ControlTransition):
            built.append(t)
        else:
            built.append(ControlTransition(*t))
    if terminals is None:
        terminals = {t.terminal for t in built}
    return ControllingAutomaton(
        name=name,
        subject=subject,
        states=frozenset(states),
        terminals=frozenset(terminals),
        transitions=frozenset(built),
        start=frozenset(start),
        notes=tuple(notes),
    )


@dataclass
class ControllerReport:
    """Validation outcome: hard violations plus informational notes."""

    violations: list
    notes: list

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_controlling(a: InterfaceAutomaton, c: ControllingAutomaton) -> ControllerReport:
    """Check a controller against its subject automaton.

    The terminal alphabet must be exactly the subject's transition-name
    atoms.  A terminal that never appears in the controller's transitions is
    legal (the subject transition is blocked everywhere) and is surfaced as
    a note rather than a violation.
    """
    violations: list[str] = []
    notes: list[str] = []

    if c.subject != a.name:
        violations.append(
            f"controller {c.name!r} declares subject {c.subject!r}, got automaton {a.name!r}"
        )

    if not c.start:
        violations.append("a controller needs at least one start state")
    for q in sorted(c.start - c.states, key=str):
        violations.append(f"start state {q!r} is not a declared state")

    overlap = c.states & a.states
    if overlap:
        names = ", ".join(sorted(overlap, key=natural_key))
        violations.append(f"controller states must be disjoint from the subject's: {names}")

    atoms = a.atoms()
    if c.terminals != atoms:
        missing = sorted(atoms - c.terminals, key=natural_key)
        extra = sorted(c.terminals - atoms, key=natural_key)
        if missing:
            violations.append(
                "terminal alphabet must cover every subject transition name; "
                f"missing: {', '.join(missing)}"
            )
        if extra:
            violations.append(f"unknown terminal: {', '.join(extra)}")

    for t in c.sorted_transitions():
        if t.source not in c.states:
            violations.append(f"transition on {t.terminal!r} leaves undeclared state {t.source!r}")
        if t.target not in c.states:
            violations.append(f"transition on {t.terminal!r} enters undeclared state {t.target!r}")
        if t.terminal not in c.terminals:
            violations.append(f"unknown terminal: {t.terminal!r}")

    used = {t.terminal for t in c.transitions}
    silent = sorted((atoms & c.terminals) - used, key=natural_key)
    if silent:
        notes.append(f"terminals never enabled (blocked everywhere): {', '.join(silent)}")

    return ControllerReport(violations=violations, notes=notes)


def complete_selfloops(c: ControllingAutomaton, scope: Iterable[str]) -> ControllingAutomaton:
    """Permit the terminals in ``scope`` wherever the controller is silent.

    For every controller state with no outgoing transition on a scoped
    terminal, a self-loop is added.  Authoring convenience: a constraint
    usually restricts a handful of transitions and should not have to spell
    out that all the others stay allowed.
    """
    scope = frozenset(scope)
    unknown = scope - c.terminals
    if unknown:
        names = ", ".join(sorted(unknown, key=natural_key))
        raise UnknownTerminalError(f"not terminals of {c.name!r}: {names}")
    outgoing = {(t.source, t.terminal) for t in c.transitions}
    added = {
        ControlTransition(q, terminal, q)
        for q in c.states
        for terminal in scope
        if (q, terminal) not in outgoing
    }
    if not added:
        return c
    return ControllingAutomaton(
        name=c.name,
        subject=c.subject,
        states=c.states,
        terminals=c.terminals,
        transitions=c.transitions | added,
        start=c.start,
        notes=c.notes,
    )


@dataclass(frozen=True)
class TransitionOrigin:
    """Where a meta-composition transition came from."""

    subject_transition: Transition
    controller_moves: tuple  # one ControlTransition per atom


@dataclass(frozen=True)
class MetaComposition:
    """The pairing of a subject automaton with a controlling automaton.

    ``automaton`` ranges over pair states (subject state, controller state)
    and keeps the subject's alphabet; ``provenance`` maps each of its
    transitions back to the subject transition and the controller moves
    that enabled it.
    """

    automaton: InterfaceAutomaton
    subject: str
    controller: str
    pairs: dict  # pair-state id -> (subject state, controller state)
    provenance: dict  # Transition -> TransitionOrigin


def meta_compose(a: InterfaceAutomaton, c: ControllingAutomaton) -> MetaComposition:
    """Combine a behavior model with its transition-level constraint.

    A subject transition named ``I`` fires from pair state (v, q) to
    (v', q') exactly when the controller can move from q to q' on *every*
    atom of ``I``.  For synchronized names the requirement is conjunctive:
    dropping any one atom from the controller blocks the whole transition.
    The full pair space is kept; use ``trim_unreachable`` on the result's
    automaton to keep only the live part.
    """
    report = validate_controlling(a, c)
    if not report.ok:
        raise ControllerInvalidError(tuple(report.violations))

    pairs = {pair_id(v, q): (v, q) for v in a.states for q in c.states}

    by_source_terminal: dict = {}
    for t in c.transitions:
        by_source_terminal.setdefault((t.source, t.terminal), []).append(t)

    transitions = set()
    provenance: dict = {}
    for t in sorted(a.transitions, key=lambda t: natural_key(format_name(t.name))):
        atoms = sorted(t.name, key=natural_key)
        for q in c.states:
            # controller targets reachable on every atom of the name
            shared_targets = None
            for atom in atoms:
                targets = {m.target for m in by_source_terminal.get((q, atom), ())}
                shared_targets = targets if shared_targets is None else shared_targets & targets
                if not shared_targets:
                    break
            for q2 in shared_targets or ():
                lifted = Transition(t.name, pair_id(t.source, q), t.action, pair_id(t.target, q2))
                transitions.add(lifted)
                provenance[lifted] = TransitionOrigin(
                    subject_transition=t,
                    controller_moves=tuple(ControlTransition(q, atom, q2) for atom in atoms),
                )

    automaton = InterfaceAutomaton(
        name=f"{a.name}->{c.name}",
        states=frozenset(pairs),
        inputs=a.inputs,
        outputs=a.outputs,
        internals=a.internals,
        transitions=frozenset(transitions),
        start=frozenset(pair_id(v, q) for v in a.start for q in c.start),
    )
    return MetaComposition(
        automaton=automaton,
        subject=a.name,
        controller=c.name,
        pairs=pairs,
        provenance=provenance,
    )


def universal_controller(a: InterfaceAutomaton, name: str = "allow-all") -> ControllingAutomaton:
    """A one-state controller that permits every subject transition."""
    state = "ctl0"
    while state in a.states:
        state += "_"
    atoms = a.atoms()
    return ControllingAutomaton(
        name=name,
        subject=a.name,
        states=frozenset((state,)),
        terminals=atoms,
        transitions=frozenset(ControlTransition(state, t, state) for t in atoms),
        start=frozenset((state,)),
    )
