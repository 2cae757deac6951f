"""The two shipped case studies, loaded from the packaged documents.

``reactor()`` is a single-component study: a batch reactor whose controller
may freeze the plant mid-reaction, and the constraint that opening the
catalyst flow must be followed by opening the water flow.

``candy()`` is a two-component study: a vending machine composed with a
greedy customer, and the constraint that forbids pushing a button twice
without waiting for the candy in between.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .automata import InterfaceAutomaton
from .composition import compose
from .control import ControllingAutomaton
from .documents import parse_automaton, parse_controller

__all__ = ["ReactorStudy", "CandyStudy", "reactor", "candy", "FIXTURE_FILES", "fixture_text"]

FIXTURE_FILES = {
    "reactor": ("reactor.ia.json", "reactor-control.ca.json"),
    "candy": ("candy-machine.ia.json", "candy-user.ia.json", "candy-control.ca.json"),
}


def fixture_text(filename: str) -> str:
    """The raw packaged document, byte for byte."""
    return resources.files("casys.data").joinpath(filename).read_text(encoding="utf-8")


@dataclass(frozen=True)
class ReactorStudy:
    automaton: InterfaceAutomaton
    controller: ControllingAutomaton


@dataclass(frozen=True)
class CandyStudy:
    machine: InterfaceAutomaton
    user: InterfaceAutomaton
    composed: InterfaceAutomaton
    controller: ControllingAutomaton


def reactor() -> ReactorStudy:
    automaton = parse_automaton(fixture_text("reactor.ia.json"))
    controller = parse_controller(fixture_text("reactor-control.ca.json"), subject=automaton)
    return ReactorStudy(automaton=automaton, controller=controller)


def candy() -> CandyStudy:
    machine = parse_automaton(fixture_text("candy-machine.ia.json"))
    user = parse_automaton(fixture_text("candy-user.ia.json"))
    composed = compose(machine, user)
    controller = parse_controller(fixture_text("candy-control.ca.json"), subject=composed)
    return CandyStudy(machine=machine, user=user, composed=composed, controller=controller)
