"""Command-line front end.

Workflow: author behavior models (``.ia.json``) and constraint models
(``.ca.json``), combine them (``compose`` for two components,
``metacompose`` for a model plus its constraint), then inspect the result
(``check-trace``, ``enumerate``, ``check-theorem1``, ``diagnose``, ``dot``).

Exit codes: 0 success, 1 a check found a violation or rejection,
2 malformed input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import casestudies
from .analysis import (
    check_theorem1,
    diagnose,
    enumerate_action_language,
)
from .automata import (
    accepts_actions,
    format_name,
    run_of_actions,
    trim_unreachable,
    validate_automaton,
)
from .composition import compose, product
from .control import ControllingAutomaton, meta_compose, validate_controlling
from .documents import (
    AUTOMATON_SUFFIX,
    CONTROLLER_SUFFIX,
    load_automaton,
    load_controller,
    load_model,
    save_automaton,
)
from .dot import to_dot
from .errors import CSystemError

USAGE_ERROR = 2
CHECK_FAILED = 1


class _Failure(Exception):
    """Internal: carry an exit code and message out of a subcommand."""

    def __init__(self, code: int, message: str):
        self.code = code
        self.message = message
        super().__init__(message)


def _load_subject_controller(sys_path: str, ctrl_path: str):
    subject = load_automaton(sys_path)
    controller = load_controller(ctrl_path, subject=subject)
    return subject, controller


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _fmt_trace(trace) -> str:
    return " ".join(trace) if trace else "(empty)"


def _cmd_validate(args) -> int:
    path = args.file
    if path.endswith(CONTROLLER_SUFFIX):
        subject = load_automaton(args.subject) if args.subject else None
        controller = load_controller(path, subject=subject)
        if subject is None:
            payload = {
                "file": path,
                "violations": [],
                "notes": ["no --subject given: only the document structure was checked"],
            }
        else:
            report = validate_controlling(subject, controller)
            payload = {"file": path, "violations": report.violations, "notes": report.notes}
    else:
        automaton = load_model(path)
        if isinstance(automaton, ControllingAutomaton):  # pragma: no cover - load_model dispatch
            raise _Failure(USAGE_ERROR, f"unexpected controller document: {path}")
        payload = {"file": path, "violations": validate_automaton(automaton), "notes": []}

    lines = [f"{path}: {'OK' if not payload['violations'] else 'INVALID'}"]
    lines += [f"  violation: {v}" for v in payload["violations"]]
    lines += [f"  note: {n}" for n in payload["notes"]]
    _emit(args, payload, "\n".join(lines))
    return CHECK_FAILED if payload["violations"] else 0


def _cmd_product(args) -> int:
    left = load_automaton(args.left)
    right = load_automaton(args.right)
    save_automaton(product(left, right).automaton, args.output)
    print(f"wrote {args.output}")
    return 0


def _cmd_compose(args) -> int:
    left = load_automaton(args.left)
    right = load_automaton(args.right)
    save_automaton(compose(left, right), args.output)
    print(f"wrote {args.output}")
    return 0


def _cmd_metacompose(args) -> int:
    subject, controller = _load_subject_controller(args.system, args.controller)
    meta = meta_compose(subject, controller)
    result = meta.automaton if args.full else trim_unreachable(meta.automaton)
    save_automaton(result, args.output)
    print(f"wrote {args.output}")
    return 0


def _cmd_check_trace(args) -> int:
    automaton = load_automaton(args.file)
    trace = tuple(x for x in args.actions.split(",") if x)
    ok = accepts_actions(automaton, trace)
    runs = sorted(run_of_actions(automaton, trace)) if ok else []
    rendered_runs = [" ".join(format_name(n) for n in run) for run in runs]
    payload = {
        "file": args.file,
        "actions": list(trace),
        "accepted": ok,
        "runs": rendered_runs,
    }
    lines = [f"{'accepted' if ok else 'rejected'}: {_fmt_trace(trace)}"]
    if rendered_runs:
        lines.append("runs:")
        lines += [f"  {r}" for r in rendered_runs]
    _emit(args, payload, "\n".join(lines))
    return 0 if ok else CHECK_FAILED


def _cmd_enumerate(args) -> int:
    automaton = load_automaton(args.file)
    traces = sorted(enumerate_action_language(automaton, args.max_len), key=lambda t: (len(t), t))
    payload = {"file": args.file, "max_len": args.max_len, "traces": [list(t) for t in traces]}
    _emit(args, payload, "\n".join(_fmt_trace(t) for t in traces) if traces else "(no traces)")
    return 0


def _cmd_check_theorem1(args) -> int:
    subject, controller = _load_subject_controller(args.system, args.controller)
    result = check_theorem1(subject, controller, args.max_len)
    payload = {
        "system": args.system,
        "controller": args.controller,
        "max_len": args.max_len,
        "holds": result.holds,
        "traces_checked": result.traces_checked,
        "counterexample": list(result.counterexample) if result.counterexample else None,
        "detail": result.detail,
    }
    if result.holds:
        text = (
            f"holds: acceptance equivalence verified on {result.traces_checked} "
            f"traces up to length {args.max_len}"
        )
    else:
        text = f"violated: {result.detail}"
    _emit(args, payload, text)
    return 0 if result.holds else CHECK_FAILED


def _cmd_diagnose(args) -> int:
    subject, controller = _load_subject_controller(args.system, args.controller)
    report = diagnose(subject, controller)
    payload = {
        "subject": subject.name,
        "controller": controller.name,
        "eliminated": report.sorted_eliminated(),
        "retained": report.sorted_retained(),
        "unreachable_subject_states": report.sorted_unreachable(),
    }
    lines = [
        f"subject: {subject.name} ({len(subject.states)} states, "
        f"{len(subject.transitions)} transitions)",
        f"constraint: {controller.name}",
        f"eliminated: {', '.join(report.sorted_eliminated()) or '(none)'}",
        f"retained: {', '.join(report.sorted_retained()) or '(none)'}",
        "unreachable subject states: "
        + (", ".join(report.sorted_unreachable()) or "(none)"),
    ]
    _emit(args, payload, "\n".join(lines))
    if args.figure:
        from .figures import render_diagnosis

        render_diagnosis(subject, report, args.figure)
        print(f"figure written to {args.figure}", file=sys.stderr)
    return 0


def _cmd_dot(args) -> int:
    model = load_model(args.file)
    if isinstance(model, ControllingAutomaton):
        raise _Failure(USAGE_ERROR, "dot export works on automaton documents")
    Path(args.output).write_text(to_dot(model), encoding="utf-8")
    print(f"wrote {args.output}")
    return 0


def _cmd_example(args) -> int:
    directory = Path(args.dir)
    directory.mkdir(parents=True, exist_ok=True)
    for filename in casestudies.FIXTURE_FILES[args.study]:
        target = directory / filename
        target.write_text(casestudies.fixture_text(filename), encoding="utf-8")
        print(f"wrote {target}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="casys",
        description="Model component behavior, model safety constraints on its "
        "transitions, and combine the two into a safe system.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a model document's invariants")
    p.add_argument("file")
    p.add_argument("--subject", help=f"subject automaton ({AUTOMATON_SUFFIX}) for controller files")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("product", help="full synchronized product of two automata")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(fn=_cmd_product)

    p = sub.add_parser("compose", help="product restricted to compatible states")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(fn=_cmd_compose)

    p = sub.add_parser("metacompose", help="combine an automaton with its constraint")
    p.add_argument("system")
    p.add_argument("controller")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--full", action="store_true",
                   help="keep unreachable pair states instead of trimming")
    p.set_defaults(fn=_cmd_metacompose)

    p = sub.add_parser("check-trace", help="test whether an automaton accepts an action trace")
    p.add_argument("file")
    p.add_argument("--actions", required=True, help="comma-separated action list")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_check_trace)

    p = sub.add_parser("enumerate", help="list all accepted traces up to a length")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("check-theorem1",
                       help="verify the combination accepts exactly the constrained traces")
    p.add_argument("system")
    p.add_argument("controller")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_check_theorem1)

    p = sub.add_parser("diagnose", help="report which transitions the constraint eliminates")
    p.add_argument("system")
    p.add_argument("controller")
    p.add_argument("--json", action="store_true")
    p.add_argument("--figure", help="also render the subject with eliminated transitions marked")
    p.set_defaults(fn=_cmd_diagnose)

    p = sub.add_parser("dot", help="export an automaton as a Graphviz graph")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(fn=_cmd_dot)

    p = sub.add_parser("example", help="write the shipped case-study documents")
    p.add_argument("study", choices=sorted(casestudies.FIXTURE_FILES))
    p.add_argument("--dir", default=".")
    p.set_defaults(fn=_cmd_example)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except _Failure as e:
        print(f"error: {e.message}", file=sys.stderr)
        return e.code
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE_ERROR
    except CSystemError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
