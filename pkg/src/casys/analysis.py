"""Bounded language exploration and hazard diagnosis.

Everything here works up to an explicit trace-length bound: at desk scale
an exhaustive walk of all accepted traces is both feasible and an effective
oracle for the combination operators.  ``diagnose`` compares a behavior
model with its constrained self and reports which transitions the safety
constraint eliminated.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .automata import (
    InterfaceAutomaton,
    accepts_actions,
    natural_key,
    reachable,
    run_of_actions,
)
from .control import ControllingAutomaton, MetaComposition, meta_compose
from .errors import EnumerationLimitError, SubjectMismatchError, UnknownTerminalError

__all__ = [
    "DEFAULT_ENUM_CAP",
    "enumeration_cap",
    "enumerate_action_language",
    "accepts_transition_trace",
    "Theorem1Result",
    "check_theorem1",
    "check_containment",
    "DiagnosisReport",
    "diagnose",
]

DEFAULT_ENUM_CAP = 12

#: Environment variable overriding the enumeration cap.
ENUM_CAP_ENV = "CASYS_MAX_ENUM"


def enumeration_cap() -> int:
    """The configured hard limit on enumeration length."""
    raw = os.environ.get(ENUM_CAP_ENV)
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        return int(raw)
    except ValueError:
        raise EnumerationLimitError(f"{ENUM_CAP_ENV} must be an integer, got {raw!r}") from None


def _check_bound(max_len: int, cap: int | None) -> None:
    if max_len < 0:
        raise EnumerationLimitError(f"trace length bound must be nonnegative, got {max_len}")
    limit = enumeration_cap() if cap is None else cap
    if max_len > limit:
        raise EnumerationLimitError(
            f"trace length bound {max_len} exceeds the cap {limit} "
            f"(raise it via {ENUM_CAP_ENV})"
        )


def enumerate_action_language(
    a: InterfaceAutomaton, max_len: int, *, cap: int | None = None
) -> set:
    """All accepted action traces of length at most ``max_len``.

    Walks the prefix tree of accepted traces, tracking the set of states
    each prefix can reach; dead prefixes are never extended, so only the
    accepted part of the trace space is ever visited.
    """
    _check_bound(max_len, cap)
    traces: set = set()
    if not a.start:
        return traces

    by_source: dict = {}
    for t in a.transitions:
        by_source.setdefault(t.source, []).append(t)

    level = [((), frozenset(a.start))]
    traces.add(())
    for _ in range(max_len):
        next_level = []
        for prefix, states in level:
            successors: dict = {}
            for q in states:
                for t in by_source.get(q, ()):
                    successors.setdefault(t.action, set()).add(t.target)
            for action, targets in successors.items():
                extended = prefix + (action,)
                traces.add(extended)
                next_level.append((extended, frozenset(targets)))
        level = next_level
        if not level:
            break
    return traces


def accepts_transition_trace(c: ControllingAutomaton, trace) -> bool:
    """True iff the controller can consume the trace of transition names.

    Each element is a transition name; a synchronized name is consumed in a
    single controller step that must be available on *all* of its atoms
    between the same pair of controller states.
    """
    current = set(c.start)
    for name in trace:
        atoms = sorted(name, key=natural_key) if not isinstance(name, str) else [name]
        for atom in atoms:
            if atom not in c.terminals:
                raise UnknownTerminalError(f"{c.name!r} has no terminal {atom!r}")
        next_states = set()
        for q in current:
            targets = None
            for atom in atoms:
                moves = c.moves(q, atom)
                targets = moves if targets is None else targets & moves
                if not targets:
                    break
            if targets:
                next_states.update(targets)
        current = next_states
        if not current:
            return False
    return bool(current)


@dataclass(frozen=True)
class Theorem1Result:
    """Outcome of the bounded acceptance-equivalence check."""

    holds: bool
    counterexample: tuple | None = None
    detail: str = ""
    traces_checked: int = 0


def check_theorem1(
    a: InterfaceAutomaton,
    c: ControllingAutomaton,
    max_len: int,
    *,
    cap: int | None = None,
) -> Theorem1Result:
    """Check, trace by trace, that the meta-composition accepts exactly
    the subject traces some run of which the controller approves.

    Only traces accepted by the subject or by the combination need
    inspecting: for any other trace both sides of the equivalence are
    false.  Returns the first counterexample when the equivalence fails
    (it never should for combinations built by ``meta_compose``).
    """
    _check_bound(max_len, cap)
    meta = meta_compose(a, c)
    candidates = enumerate_action_language(a, max_len, cap=cap) | enumerate_action_language(
        meta.automaton, max_len, cap=cap
    )
    for trace in sorted(candidates, key=lambda t: (len(t), t)):
        combined = accepts_actions(meta.automaton, trace)
        subject = accepts_actions(a, trace)
        approved = subject and any(
            accepts_transition_trace(c, run) for run in run_of_actions(a, trace)
        )
        if combined != approved:
            side = "accepts" if combined else "rejects"
            return Theorem1Result(
                holds=False,
                counterexample=trace,
                detail=(
                    f"combination {side} {' '.join(trace) or '(empty)'} but the "
                    f"subject+controller view says {approved}"
                ),
                traces_checked=len(candidates),
            )
    return Theorem1Result(holds=True, traces_checked=len(candidates))


def check_containment(
    meta: MetaComposition, a: InterfaceAutomaton, max_len: int, *, cap: int | None = None
) -> bool:
    """True iff every combination trace up to ``max_len`` is a subject trace."""
    if meta.subject != a.name:
        raise SubjectMismatchError(
            f"combination was built from {meta.subject!r}, not {a.name!r}"
        )
    return enumerate_action_language(meta.automaton, max_len, cap=cap) <= enumerate_action_language(
        a, max_len, cap=cap
    )


@dataclass(frozen=True)
class DiagnosisReport:
    """Which subject transitions the constraint eliminated.

    ``eliminated`` and ``retained`` partition the subject's transition-name
    atoms; ``unreachable_subject_states`` lists subject states that no
    reachable state of the combination projects onto.
    """

    eliminated: frozenset
    retained: frozenset
    unreachable_subject_states: frozenset

    def sorted_eliminated(self) -> list[str]:
        return sorted(self.eliminated, key=natural_key)

    def sorted_retained(self) -> list[str]:
        return sorted(self.retained, key=natural_key)

    def sorted_unreachable(self) -> list[str]:
        return sorted(self.unreachable_subject_states, key=natural_key)


def diagnose(a: InterfaceAutomaton, c: ControllingAutomaton) -> DiagnosisReport:
    """Build the combination, keep its live part, and report what died.

    An atom is eliminated when no reachable transition of the combination
    mentions it; those are exactly the behaviors the constraint (or plain
    unreachability) removed from the subject.
    """
    meta = meta_compose(a, c)
    live = reachable(meta.automaton)
    used = set()
    for t in meta.automaton.transitions:
        if t.source in live:
            used.update(t.name)
    atoms = a.atoms()
    covered = {meta.pairs[q][0] for q in live}
    return DiagnosisReport(
        eliminated=frozenset(atoms - used),
        retained=frozenset(atoms & used),
        unreachable_subject_states=frozenset(a.states - covered),
    )
