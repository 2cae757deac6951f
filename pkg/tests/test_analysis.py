"""Bounded enumeration, controller trace acceptance, the acceptance-equivalence
check, containment, and diagnosis."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from random import Random

from casys import (
    accepts_transition_trace,
    check_containment,
    check_theorem1,
    diagnose,
    enumerate_action_language,
    make_automaton,
    make_controller,
    meta_compose,
    run_of_actions,
    universal_controller,
)
from casys.analysis import enumeration_cap
from casys.errors import EnumerationLimitError, SubjectMismatchError, UnknownTerminalError

from helpers import (
    naive_language,
    plain_edges,
    random_automaton,
    random_controller,
)


class TestEnumerate:
    def test_reactor_prefixes(self, reactor_study):
        traces = enumerate_action_language(reactor_study.automaton, 2)
        assert ("c",) in traces
        assert ("c", "w") in traces
        assert ("w",) not in traces

    def test_zero_length(self, reactor_study):
        assert enumerate_action_language(reactor_study.automaton, 0) == {()}

    def test_empty_start(self):
        a = make_automaton("mute", states=["s0"])
        assert enumerate_action_language(a, 3) == set()

    def test_bound_above_cap_is_refused(self, reactor_study):
        with pytest.raises(EnumerationLimitError):
            enumerate_action_language(reactor_study.automaton, enumeration_cap() + 1)

    def test_negative_bound_is_refused(self, reactor_study):
        with pytest.raises(EnumerationLimitError):
            enumerate_action_language(reactor_study.automaton, -1)

    def test_env_override(self, reactor_study, monkeypatch):
        monkeypatch.setenv("CASYS_MAX_ENUM", "14")
        assert enumeration_cap() == 14
        enumerate_action_language(reactor_study.automaton, 13)
        monkeypatch.setenv("CASYS_MAX_ENUM", "3")
        with pytest.raises(EnumerationLimitError):
            enumerate_action_language(reactor_study.automaton, 4)

    def test_matches_naive_wordwise_check(self):
        rng = Random(7)
        for _ in range(25):
            a = random_automaton(rng)
            got = enumerate_action_language(a, 4)
            expected = naive_language(plain_edges(a), a.start, a.alphabet, 4)
            assert got == expected

    def test_monotone_and_prefix_closed(self):
        rng = Random(11)
        for _ in range(15):
            a = random_automaton(rng)
            smaller = enumerate_action_language(a, 3)
            larger = enumerate_action_language(a, 5)
            assert smaller <= larger
            for trace in larger:
                for i in range(len(trace)):
                    assert trace[:i] in larger


class TestControllerTraceAcceptance:
    def test_reactor_rejects_hazard_names(self, reactor_study):
        trace = [frozenset({p}) for p in ("p1", "p2", "p1", "p4", "p5", "p6")]
        assert not accepts_transition_trace(reactor_study.controller, trace)

    def test_reactor_accepts_matched_pair(self, reactor_study):
        trace = [frozenset({"p1"}), frozenset({"p2"})]
        assert accepts_transition_trace(reactor_study.controller, trace)

    def test_empty_trace_accepted(self, reactor_study):
        assert accepts_transition_trace(reactor_study.controller, [])

    def test_bare_atom_strings_allowed(self, reactor_study):
        assert accepts_transition_trace(reactor_study.controller, ["p1", "p2"])
        assert not accepts_transition_trace(reactor_study.controller, ["p1", "p4"])

    def test_unknown_terminal(self, reactor_study):
        with pytest.raises(UnknownTerminalError):
            accepts_transition_trace(reactor_study.controller, ["p99"])

    def test_composite_name_needs_one_shared_move(self, candy_study):
        ctrl = candy_study.controller
        assert accepts_transition_trace(ctrl, [frozenset({"p3", "p9"})])
        assert not accepts_transition_trace(ctrl, [frozenset({"p3", "p11"})])


class TestTheorem1Check:
    def test_reactor_holds(self, reactor_study):
        result = check_theorem1(reactor_study.automaton, reactor_study.controller, 6)
        assert result.holds
        assert result.counterexample is None
        assert result.traces_checked > 0

    def test_universal_controller_holds(self, reactor_study):
        a = reactor_study.automaton
        result = check_theorem1(a, universal_controller(a), 5)
        assert result.holds

    def test_candy_holds(self, candy_study):
        result = check_theorem1(candy_study.composed, candy_study.controller, 5)
        assert result.holds

    def test_loosening_the_controller_admits_more(self, reactor_study):
        from casys import accepts_actions

        a, strict = reactor_study.automaton, reactor_study.controller
        looser = make_controller(
            strict.name, strict.subject, states=strict.states,
            transitions=set(strict.transitions) | {("c1", "p4", "c0")},
            start=strict.start, terminals=strict.terminals,
        )
        hazard = ("c", "l")
        assert not accepts_actions(meta_compose(a, strict).automaton, hazard)
        assert accepts_actions(meta_compose(a, looser).automaton, hazard)
        # the equivalence still holds for the loosened combination
        assert check_theorem1(a, looser, 4).holds


class TestContainment:
    def test_reactor(self, reactor_study):
        a, c = reactor_study.automaton, reactor_study.controller
        assert check_containment(meta_compose(a, c), a, 8)

    def test_candy(self, candy_study):
        meta = meta_compose(candy_study.composed, candy_study.controller)
        assert check_containment(meta, candy_study.composed, 8)

    def test_universal_controller_language_equality(self, reactor_study):
        a = reactor_study.automaton
        meta = meta_compose(a, universal_controller(a))
        assert check_containment(meta, a, 6)
        assert enumerate_action_language(meta.automaton, 6) == enumerate_action_language(a, 6)

    def test_provenance_mismatch(self, reactor_study, candy_study):
        a, c = reactor_study.automaton, reactor_study.controller
        meta = meta_compose(a, c)
        with pytest.raises(SubjectMismatchError):
            check_containment(meta, candy_study.composed, 4)


class TestDiagnose:
    def test_reactor_flags_the_hazard(self, reactor_study):
        report = diagnose(reactor_study.automaton, reactor_study.controller)
        assert report.eliminated == frozenset({"p4"})
        assert report.retained == frozenset({"p1", "p2", "p3", "p5", "p6"})
        assert report.unreachable_subject_states == frozenset()

    def test_candy_flags_the_greedy_pushes(self, candy_study):
        report = diagnose(candy_study.composed, candy_study.controller)
        assert {"p11", "p12"} <= report.eliminated

    def test_partition_invariant(self, candy_study):
        report = diagnose(candy_study.composed, candy_study.controller)
        atoms = candy_study.composed.atoms()
        assert report.eliminated | report.retained == atoms
        assert not report.eliminated & report.retained

    def test_universal_controller_keeps_live_transitions(self):
        a = make_automaton(
            "partial",
            states=["s0", "s1", "z"],
            outputs=["x"],
            transitions=[("p1", "s0", "x", "s1"), ("p2", "z", "x", "z")],
            start=["s0"],
        )
        report = diagnose(a, universal_controller(a))
        assert report.eliminated == frozenset({"p2"})
        assert report.unreachable_subject_states == frozenset({"z"})

    def test_eliminated_atoms_never_appear_in_traces(self, reactor_study):
        a, c = reactor_study.automaton, reactor_study.controller
        report = diagnose(a, c)
        meta = meta_compose(a, c)
        for trace in enumerate_action_language(meta.automaton, 6):
            for run in run_of_actions(meta.automaton, trace):
                for name in run:
                    assert not (set(name) & report.eliminated)


# ------------------------------------------------------------- property tests

@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**9))
def test_random_combinations_contain_and_verify(seed):
    rng = Random(seed)
    a = random_automaton(rng)
    c = random_controller(rng, a)
    meta = meta_compose(a, c)
    assert check_containment(meta, a, 4)
    result = check_theorem1(a, c, 4)
    assert result.holds, result.detail


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10**9))
def test_diagnose_random_universal(seed):
    rng = Random(seed)
    a = random_automaton(rng)
    report = diagnose(a, universal_controller(a))
    from casys import reachable

    live = reachable(a)
    for t in a.transitions:
        if t.source in live:
            assert not (set(t.name) & report.eliminated)
