"""Interface automata: states, a three-way action alphabet, named transitions.

An automaton owns input, output and internal actions (pairwise disjoint),
at most one start state, and a finite set of transitions.  Every transition
carries a *name*: a nonempty set of atomic identifiers.  Hand-written models
use singleton names; products and meta-compositions combine atoms from
their operands.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator

from .errors import UnknownActionError, UnknownStateError

__all__ = [
    "Polarity",
    "ActionLabel",
    "Name",
    "as_name",
    "format_name",
    "natural_key",
    "Transition",
    "InterfaceAutomaton",
    "make_automaton",
    "validate_automaton",
    "enabled",
    "accepts_actions",
    "run_of_actions",
    "reachable",
    "trim_unreachable",
]

#: A transition name: one or more atomic identifiers.
Name = frozenset

#: A finite word of actions.
ActionTrace = tuple

#: A finite word of transition names.
TransitionTrace = tuple


class Polarity(Enum):
    """Which third of the alphabet an action belongs to."""

    INPUT = "input"
    OUTPUT = "output"
    INTERNAL = "internal"

    @property
    def suffix(self) -> str:
        """Diagram suffix: '?' for inputs, '!' for outputs, ';' for internals."""
        return {"input": "?", "output": "!", "internal": ";"}[self.value]


@dataclass(frozen=True)
class ActionLabel:
    """An action name together with its polarity."""

    name: str
    polarity: Polarity


def natural_key(s: str):
    """Sort key that orders embedded integers numerically (p2 before p10)."""
    parts = re.split(r"(\d+)", s)
    return tuple(int(p) if i % 2 else p for i, p in enumerate(parts))


def as_name(name: str | Iterable[str]) -> Name:
    """Coerce a bare atom or an iterable of atoms into a transition name."""
    if isinstance(name, str):
        return frozenset((name,))
    return frozenset(name)


def sorted_atoms(name: Name) -> list[str]:
    return sorted(name, key=natural_key)


def format_name(name: Name) -> str:
    """Render a name: a bare atom, or '{a,b}' for synchronized transitions."""
    atoms = sorted_atoms(name)
    if len(atoms) == 1:
        return atoms[0]
    return "{" + ",".join(atoms) + "}"


@dataclass(frozen=True)
class Transition:
    """One labeled transition: name, source state, action, target state."""

    name: Name
    source: str
    action: str
    target: str

    def __str__(self) -> str:
        return f"{format_name(self.name)}: ({self.source}, {self.action}, {self.target})"


@dataclass(frozen=True)
class InterfaceAutomaton:
    name: str
    states: frozenset
    inputs: frozenset
    outputs: frozenset
    internals: frozenset
    transitions: frozenset
    start: frozenset
    notes: tuple = field(default=(), compare=False)

    @property
    def alphabet(self) -> frozenset:
        return self.inputs | self.outputs | self.internals

    def polarity_of(self, action: str) -> Polarity:
        if action in self.inputs:
            return Polarity.INPUT
        if action in self.outputs:
            return Polarity.OUTPUT
        if action in self.internals:
            return Polarity.INTERNAL
        raise UnknownActionError(f"action {action!r} is not in the alphabet of {self.name!r}")

    def action_label(self, action: str) -> ActionLabel:
        return ActionLabel(action, self.polarity_of(action))

    def atoms(self) -> frozenset:
        """All atomic identifiers occurring in transition names."""
        out = set()
        for t in self.transitions:
            out.update(t.name)
        return frozenset(out)

    def sorted_states(self) -> list[str]:
        return sorted(self.states, key=natural_key)

    def sorted_transitions(self) -> list[Transition]:
        return sorted(
            self.transitions,
            key=lambda t: (natural_key(format_name(t.name)), natural_key(t.source),
                           t.action, natural_key(t.target)),
        )

    def __iter__(self) -> Iterator[Transition]:
        return iter(self.sorted_transitions())


def make_automaton(
    name: str,
    *,
    states: Iterable[str],
    inputs: Iterable[str] = (),
    outputs: Iterable[str] = (),
    internals: Iterable[str] = (),
    transitions: Iterable = (),
    start: Iterable[str] = (),
    notes: Iterable[str] = (),
) -> InterfaceAutomaton:
    """Build an automaton from plain iterables.

    ``transitions`` accepts either Transition values or
    ``(name, source, action, target)`` tuples, where ``name`` may be a bare
    atom string or an iterable of atoms.
    """
    built = []
    for t in transitions:
        if isinstance(t, Transition):
            built.append(t)
        else:
            n, source, action, target = t
            built.append(Transition(as_name(n), source, action, target))
    return InterfaceAutomaton(
        name=name,
        states=frozenset(states),
        inputs=frozenset(inputs),
        outputs=frozenset(outputs),
        internals=frozenset(internals),
        transitions=frozenset(built),
        start=frozenset(start),
        notes=tuple(notes),
    )


def validate_automaton(a: InterfaceAutomaton) -> list[str]:
    """Check every structural invariant; return the violations (empty = valid).

    Violations are returned as data, not raised: an invalid model is
    something to report on, not a programming error.
    """
    violations: list[str] = []

    for q in a.states:
        if not isinstance(q, str) or not q:
            violations.append(f"state id {q!r} is not a nonempty string")
    for action in a.alphabet:
        if not isinstance(action, str) or not action:
            violations.append(f"action {action!r} is not a nonempty string")

    if len(a.start) > 1:
        violations.append(f"at most one start state is allowed, got {len(a.start)}")
    for q in sorted(a.start - a.states, key=str):
        violations.append(f"start state {q!r} is not a declared state")

    for left, right in (("inputs", "outputs"), ("inputs", "internals"), ("outputs", "internals")):
        overlap = getattr(a, left) & getattr(a, right)
        if overlap:
            names = ", ".join(sorted(overlap, key=str))
            violations.append(f"alphabets not disjoint: {names} in both {left} and {right}")

    seen_names: dict[Name, Transition] = {}
    for t in a.sorted_transitions():
        label = format_name(t.name)
        if not t.name or any(not isinstance(x, str) or not x for x in t.name):
            violations.append(f"transition {label} has an empty or malformed name")
        if t.source not in a.states:
            violations.append(f"transition {label} leaves undeclared state {t.source!r}")
        if t.target not in a.states:
            violations.append(f"transition {label} enters undeclared state {t.target!r}")
        if t.action not in a.alphabet:
            violations.append(f"transition {label} uses unknown action {t.action!r}")
        if t.name in seen_names:
            violations.append(f"duplicate transition name {label}")
        seen_names[t.name] = t

    return violations


def enabled(a: InterfaceAutomaton, q: str) -> frozenset:
    """The transitions leaving state ``q``."""
    if q not in a.states:
        raise UnknownStateError(f"{a.name!r} has no state {q!r}")
    return frozenset(t for t in a.transitions if t.source == q)


def _check_trace_alphabet(a: InterfaceAutomaton, trace: Iterable[str]) -> tuple:
    trace = tuple(trace)
    for action in trace:
        if action not in a.alphabet:
            raise UnknownActionError(
                f"action {action!r} is not in the alphabet of {a.name!r}"
            )
    return trace

def accepts_actions(a: InterfaceAutomaton, trace: Iterable[str]) -> bool:
    """True iff some run from a start state spells out ``trace``.

    Every state accepts, so the language is prefix closed.  Nondeterminism
    is handled by tracking the set of states reachable on the prefix read
    so far.  An automaton without a start state accepts nothing.
    """
    trace = _check_trace_alphabet(a, trace)
    current = set(a.start)
    if not current:
        return False
    for action in trace:
        current = {t.target for t in a.transitions if t.source in current and t.action == action}
        if not current:
            return False
    return True


def run_of_actions(a: InterfaceAutomaton, trace: Iterable[str]) -> set:
    """All transition traces from the start whose actions spell ``trace``.

    Nonempty exactly when ``accepts_actions`` holds.
    """
    trace = _check_trace_alphabet(a, trace)
    runs: set = set()
    if not a.start:
        return runs

    by_source: dict[str, list[Transition]] = {}
    for t in a.transitions:
        by_source.setdefault(t.source, []).append(t)

    def walk(state: str, i: int, prefix: tuple) -> None:
        if i == len(trace):
            runs.add(prefix)
            return
        for t in by_source.get(state, ()):
            if t.action == trace[i]:
                walk(t.target, i + 1, prefix + (t.name,))

    for q in a.start:
        walk(q, 0, ())
    return runs


def reachable(a: InterfaceAutomaton) -> frozenset:
    """States reachable from the start set by following transitions forward."""
    seen = set(a.start)
    frontier = list(a.start)
    by_source: dict[str, list[str]] = {}
    for t in a.transitions:
        by_source.setdefault(t.source, []).append(t.target)
    while frontier:
        q = frontier.pop()
        for target in by_source.get(q, ()):
            if target not in seen:
                seen.add(target)
                frontier.append(target)
    return frozenset(seen)


def trim_unreachable(a: InterfaceAutomaton) -> InterfaceAutomaton:
    """Restrict to the forward-reachable part; the alphabet is kept whole."""
    keep = reachable(a)
    return InterfaceAutomaton(
        name=a.name,
        states=keep,
        inputs=a.inputs,
        outputs=a.outputs,
        internals=a.internals,
        transitions=frozenset(t for t in a.transitions if t.source in keep),
        start=a.start & keep,
        notes=a.notes,
    )
