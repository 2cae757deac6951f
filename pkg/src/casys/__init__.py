"""Interface control systems.

Behavior models are interface automata; safety constraints are controlling
automata over their transition names; ``meta_compose`` combines the two
into a system that can only behave as the constraint allows.
"""

from .automata import (
    ActionLabel,
    InterfaceAutomaton,
    Polarity,
    Transition,
    accepts_actions,
    as_name,
    enabled,
    format_name,
    make_automaton,
    reachable,
    run_of_actions,
    trim_unreachable,
    validate_automaton,
)
from .composition import (
    Composability,
    ProductAutomaton,
    compatible_states,
    composable,
    compose,
    illegal_states,
    pair_id,
    product,
    shared_actions,
)
from .control import (
    ControllingAutomaton,
    ControlTransition,
    MetaComposition,
    TransitionOrigin,
    complete_selfloops,
    make_controller,
    meta_compose,
    universal_controller,
    validate_controlling,
)
from .analysis import (
    DiagnosisReport,
    Theorem1Result,
    accepts_transition_trace,
    check_containment,
    check_theorem1,
    diagnose,
    enumerate_action_language,
)
from .documents import (
    load_automaton,
    load_controller,
    load_model,
    parse_automaton,
    parse_controller,
    save_automaton,
    save_controller,
    serialize_automaton,
    serialize_controller,
)
from .dot import to_dot
from . import casestudies, errors

__version__ = "0.1.0"

__all__ = [
    "ActionLabel",
    "InterfaceAutomaton",
    "Polarity",
    "Transition",
    "accepts_actions",
    "as_name",
    "enabled",
    "format_name",
    "make_automaton",
    "reachable",
    "run_of_actions",
    "trim_unreachable",
    "validate_automaton",
    "Composability",
    "ProductAutomaton",
    "compatible_states",
    "composable",
    "compose",
    "illegal_states",
    "pair_id",
    "product",
    "shared_actions",
    "ControllingAutomaton",
    "ControlTransition",
    "MetaComposition",
    "TransitionOrigin",
    "complete_selfloops",
    "make_controller",
    "meta_compose",
    "universal_controller",
    "validate_controlling",
    "DiagnosisReport",
    "Theorem1Result",
    "accepts_transition_trace",
    "check_containment",
    "check_theorem1",
    "diagnose",
    "enumerate_action_language",
    "load_automaton",
    "load_controller",
    "load_model",
    "parse_automaton",
    "parse_controller",
    "save_automaton",
    "save_controller",
    "serialize_automaton",
    "serialize_controller",
    "to_dot",
    "casestudies",
    "errors",
]
