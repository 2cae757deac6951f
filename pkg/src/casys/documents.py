"""JSON documents for automata (``.ia.json``) and controllers (``.ca.json``).

Documents are strict: unknown keys are rejected, transition names must be
unique, and serialization is canonical (stable ordering, two-space
indent), so a serialized model is byte-stable and diff-friendly.
Semantic problems (undeclared states, overlapping alphabets, ...) are left
to ``validate_automaton`` / ``validate_controlling``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .automata import (
    InterfaceAutomaton,
    Transition,
    as_name,
    format_name,
    natural_key,
    sorted_atoms,
)
from .control import ControllingAutomaton, ControlTransition, complete_selfloops
from .errors import DocumentError

__all__ = [
    "AUTOMATON_SUFFIX",
    "CONTROLLER_SUFFIX",
    "parse_automaton",
    "serialize_automaton",
    "parse_controller",
    "serialize_controller",
    "load_automaton",
    "save_automaton",
    "load_controller",
    "save_controller",
    "load_model",
]

AUTOMATON_SUFFIX = ".ia.json"
CONTROLLER_SUFFIX = ".ca.json"

_AUTOMATON_KEYS = ("name", "states", "start", "inputs", "outputs", "internals", "transitions")
_CONTROLLER_KEYS = ("name", "subject", "states", "start", "transitions")


def _decode(text: str) -> object:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"not valid JSON: {e.msg}", e.lineno, e.colno) from None


def _require_object(doc: object, required: tuple, optional: tuple) -> dict:
    if not isinstance(doc, dict):
        raise DocumentError(f"document must be a JSON object, got {type(doc).__name__}")
    for key in required:
        if key not in doc:
            raise DocumentError(f"missing key {key!r}")
    unknown = sorted(set(doc) - set(required) - set(optional))
    if unknown:
        raise DocumentError(f"unknown key {unknown[0]!r}")
    return doc


def _string_list(doc: dict, key: str) -> list:
    value = doc[key]
    if not isinstance(value, list) or any(not isinstance(x, str) for x in value):
        raise DocumentError(f"{key!r} must be a list of strings")
    return value


def _notes(doc: dict) -> tuple:
    raw = doc.get("notes", [])
    if isinstance(raw, str):
        return (raw,)
    if not isinstance(raw, list) or any(not isinstance(x, str) for x in raw):
        raise DocumentError("'notes' must be a string or a list of strings")
    return tuple(raw)


def parse_automaton(text: str) -> InterfaceAutomaton:
    """Parse an automaton document; raises DocumentError on bad input."""
    doc = _require_object(_decode(text), _AUTOMATON_KEYS, ("notes",))
    if not isinstance(doc["name"], str) or not doc["name"]:
        raise DocumentError("'name' must be a nonempty string")

    raw_transitions = doc["transitions"]
    if not isinstance(raw_transitions, list):
        raise DocumentError("'transitions' must be a list")
    transitions = []
    seen = {}
    for i, entry in enumerate(raw_transitions):
        where = f"transitions[{i}]"
        if not isinstance(entry, dict):
            raise DocumentError(f"{where}: must be an object")
        unknown = sorted(set(entry) - {"name", "from", "action", "to"})
        if unknown:
            raise DocumentError(f"{where}: unknown key {unknown[0]!r}")
        for key in ("name", "from", "action", "to"):
            if key not in entry:
                raise DocumentError(f"{where}: missing key {key!r}")
        raw_name = entry["name"]
        if isinstance(raw_name, str):
            atoms = [raw_name]
        elif isinstance(raw_name, list) and raw_name and all(isinstance(x, str) for x in raw_name):
            atoms = raw_name
        else:
            raise DocumentError(f"{where}: 'name' must be a string or a nonempty list of strings")
        if any(not x for x in atoms):
            raise DocumentError(f"{where}: transition name atoms must be nonempty")
        name = as_name(atoms)
        if name in seen:
            raise DocumentError(f"{where}: duplicate transition name {format_name(name)}")
        seen[name] = i
        for key in ("from", "action", "to"):
            if not isinstance(entry[key], str):
                raise DocumentError(f"{where}: {key!r} must be a string")
        transitions.append(Transition(name, entry["from"], entry["action"], entry["to"]))

    return InterfaceAutomaton(
        name=doc["name"],
        states=frozenset(_string_list(doc, "states")),
        inputs=frozenset(_string_list(doc, "inputs")),
        outputs=frozenset(_string_list(doc, "outputs")),
        internals=frozenset(_string_list(doc, "internals")),
        transitions=frozenset(transitions),
        start=frozenset(_string_list(doc, "start")),
        notes=_notes(doc),
    )


def serialize_automaton(a: InterfaceAutomaton) -> str:
    """Canonical document text for an automaton."""
    doc: dict = {"name": a.name}
    if a.notes:
        doc["notes"] = list(a.notes)
    doc["states"] = sorted(a.states, key=natural_key)
    doc["start"] = sorted(a.start, key=natural_key)
    doc["inputs"] = sorted(a.inputs, key=natural_key)
    doc["outputs"] = sorted(a.outputs, key=natural_key)
    doc["internals"] = sorted(a.internals, key=natural_key)
    doc["transitions"] = [
        {"name": sorted_atoms(t.name), "from": t.source, "action": t.action, "to": t.target}
        for t in a.sorted_transitions()
    ]
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def parse_controller(text: str, *, subject: InterfaceAutomaton | None = None) -> ControllingAutomaton:
    """Parse a controller document.

    The document does not list its terminal alphabet; pass the subject
    automaton to bind it to the subject's transition names (required for
    validation when the controller deliberately blocks some of them).
    ``allow_elsewhere`` entries are expanded into self-loops at parse time.
    """
    doc = _require_object(_decode(text), _CONTROLLER_KEYS, ("allow_elsewhere", "notes"))
    for key in ("name", "subject"):
        if not isinstance(doc[key], str) or not doc[key]:
            raise DocumentError(f"{key!r} must be a nonempty string")

    raw_transitions = doc["transitions"]
    if not isinstance(raw_transitions, list):
        raise DocumentError("'transitions' must be a list")
    transitions = []
    for i, entry in enumerate(raw_transitions):
        where = f"transitions[{i}]"
        if not isinstance(entry, dict):
            raise DocumentError(f"{where}: must be an object")
        unknown = sorted(set(entry) - {"from", "terminal", "to"})
        if unknown:
            raise DocumentError(f"{where}: unknown key {unknown[0]!r}")
        for key in ("from", "terminal", "to"):
            if key not in entry:
                raise DocumentError(f"{where}: missing key {key!r}")
            if not isinstance(entry[key], str) or not entry[key]:
                raise DocumentError(f"{where}: {key!r} must be a nonempty string")
        triple = ControlTransition(entry["from"], entry["terminal"], entry["to"])
        if triple in transitions:
            raise DocumentError(f"{where}: duplicate transition")
        transitions.append(triple)

    allow = doc.get("allow_elsewhere", [])
    if not isinstance(allow, list) or any(not isinstance(x, str) for x in allow):
        raise DocumentError("'allow_elsewhere' must be a list of strings")

    if subject is not None:
        terminals = subject.atoms()
    else:
        terminals = {t.terminal for t in transitions} | set(allow)

    controller = ControllingAutomaton(
        name=doc["name"],
        subject=doc["subject"],
        states=frozenset(_string_list(doc, "states")),
        terminals=frozenset(terminals),
        transitions=frozenset(transitions),
        start=frozenset(_string_list(doc, "start")),
        notes=_notes(doc),
    )
    if allow:
        scope = frozenset(allow) & controller.terminals if subject is not None else frozenset(allow)
        dropped = frozenset(allow) - controller.terminals
        if subject is not None and dropped:
            names = ", ".join(sorted(dropped, key=natural_key))
            raise DocumentError(f"'allow_elsewhere' lists unknown terminals: {names}")
        controller = complete_selfloops(controller, scope)
    return controller


def serialize_controller(c: ControllingAutomaton) -> str:
    """Canonical document text for a controller.

    Always writes the expanded transition set: ``allow_elsewhere`` is an
    input-side convenience and is not reconstructed.
    """
    doc: dict = {"name": c.name, "subject": c.subject}
    if c.notes:
        doc["notes"] = list(c.notes)
    doc["states"] = sorted(c.states, key=natural_key)
    doc["start"] = sorted(c.start, key=natural_key)
    doc["transitions"] = [
        {"from": t.source, "terminal": t.terminal, "to": t.target}
        for t in c.sorted_transitions()
    ]
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def load_automaton(path) -> InterfaceAutomaton:
    return parse_automaton(Path(path).read_text(encoding="utf-8"))


def save_automaton(a: InterfaceAutomaton, path) -> None:
    Path(path).write_text(serialize_automaton(a), encoding="utf-8")


def load_controller(path, *, subject: InterfaceAutomaton | None = None) -> ControllingAutomaton:
    return parse_controller(Path(path).read_text(encoding="utf-8"), subject=subject)


def save_controller(c: ControllingAutomaton, path) -> None:
    Path(path).write_text(serialize_controller(c), encoding="utf-8")


def load_model(path, *, subject: InterfaceAutomaton | None = None):
    """Load either document kind based on the file suffix."""
    name = str(path)
    if name.endswith(CONTROLLER_SUFFIX):
        return load_controller(path, subject=subject)
    if name.endswith(AUTOMATON_SUFFIX):
        return load_automaton(path)
    raise DocumentError(
        f"cannot tell the model kind of {name!r}: expected a "
        f"{AUTOMATON_SUFFIX} or {CONTROLLER_SUFFIX} file"
    )
