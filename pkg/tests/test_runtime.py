"""Driver-level checks: streaming delivery, metering, verdict plumbing."""

import pytest
from hypothesis import given, settings, strategies as st

from kumsim.engine import ModelKind, new_graph
from kumsim.runtime import (
    EventKind, Program, RealTimeReport, RejectReason, Registers, Runner,
    Verdict, assert_real_time, max_gap, mean_gap, real_time_report, run,
)


def toy_graph():
    return new_graph(ModelKind.KUM, 4, ("plain",), ("next",))


def make_toy(cadence=None, reject_at=None, steps_per_symbol=3,
             accept_early_at=None):
    """A trivial program that burns a fixed number of steps per symbol."""

    def on_start(g, r):
        r["cursor"] = g.initial_node

    def on_symbol(g, r, ch):
        for _ in range(steps_per_symbol):
            g.get_color(r["cursor"])
        if accept_early_at is not None and ch == accept_early_at:
            return Verdict.accept()
        if reject_at is not None and ch == reject_at:
            return Verdict.reject(RejectReason.FORMAT)
        return None

    def on_end(g, r):
        return Verdict.accept()

    return Program(register_names=("cursor", "count"),
                   graph_factory=toy_graph, cadence=cadence,
                   on_start=on_start, on_symbol=on_symbol, on_end=on_end)


def test_run_delivers_left_to_right_and_traces_gaps():
    seen = []
    prog = make_toy()

    def spy(g, r, ch):
        seen.append(ch)
        g.get_color(0)
        return None

    prog = Program(prog.register_names, toy_graph, prog.on_start, spy,
                   prog.on_end)
    res = run(prog, "01@#")
    assert seen == ["0", "1", "@", "#"]
    kinds = [k for k, _, _ in res.trace.events]
    assert kinds == [EventKind.READ_SYMBOL] * 4 + [EventKind.HALT]
    positions = [p for _, p, _ in res.trace.events]
    assert positions == [0, 1, 2, 3, 4]
    assert res.verdict.accepted


def test_trace_gap_sum_equals_total_steps():
    res = run(make_toy(), "0101")
    assert sum(res.trace.gaps()) == res.trace.total_steps


def test_bad_alphabet_rejects_at_offending_position():
    res = run(make_toy(), "01x2")
    assert res.verdict == Verdict.reject(RejectReason.BAD_ALPHABET)
    # two good reads, the offending read, then halt
    assert [p for _, p, _ in res.trace.events] == [0, 1, 2, 3]


def test_early_reject_stops_delivery():
    prog = make_toy(reject_at="@")
    res = run(prog, "00@11")
    assert res.verdict.reason is RejectReason.FORMAT
    read_events = [e for e in res.trace.events if e[0] is EventKind.READ_SYMBOL]
    assert len(read_events) == 3


def test_early_accept_is_a_machine_fault():
    res = run(make_toy(accept_early_at="1"), "010")
    assert res.verdict.reason is RejectReason.MACHINE_FAULT


def test_engine_error_surfaces_as_machine_fault():
    res = run(make_toy(steps_per_symbol=0), "0")
    assert res.verdict.accepted  # control: no fault without the bad op

    def bad_symbol(g, r, ch):
        g.link(0, 0, 0, 0)  # self-link on the same port is illegal
        return None

    prog = Program(("cursor",), toy_graph, lambda g, r: None, bad_symbol,
                   lambda g, r: Verdict.accept())
    res = run(prog, "0")
    assert res.verdict.reason is RejectReason.MACHINE_FAULT


def test_cadence_pads_every_symbol_to_the_same_gap():
    res = run(make_toy(cadence=9), "0101010")
    gaps = res.trace.gaps()
    # first gap is start-up work, inner gaps the padded budget,
    # final gap the padded last symbol (on_end adds nothing here)
    assert gaps[0] == 0
    assert set(gaps[1:]) == {9}
    assert max_gap(res.trace) == 9


def test_cadence_overrun_is_a_machine_fault():
    res = run(make_toy(cadence=2, steps_per_symbol=5), "01")
    assert res.verdict.reason is RejectReason.MACHINE_FAULT


def test_registers_reject_unknown_names():
    regs = Registers(("a", "b"))
    regs["a"] = 3
    with pytest.raises(KeyError):
        regs["c"] = 1
    assert regs["b"] is None


def test_program_register_cap():
    names = tuple("r%d" % i for i in range(33))
    with pytest.raises(ValueError):
        Program(names, toy_graph, None, None, None)


def test_max_gap_and_mean_gap():
    res = run(make_toy(steps_per_symbol=4), "000")
    assert max_gap(res.trace) == 4
    assert mean_gap(res.trace) == res.trace.total_steps / len(res.trace.events)
    empty = run(make_toy(), "")
    assert max_gap(empty.trace) == 0  # lone halt event, no work done


def test_runner_fork_explores_independent_futures():
    prog = make_toy(reject_at="@")
    base = Runner(prog)
    for ch in "0101":
        assert base.feed(ch) is None
    alt = base.fork()
    assert alt.feed("@") is not None
    assert base.feed("0") is None
    res_alt = alt.finish()
    res_base = base.finish()
    assert not res_alt.verdict.accepted
    assert res_base.verdict.accepted
    # forked trace shares the prefix but diverges afterwards
    assert res_alt.trace.events[:5] == res_base.trace.events[:5]


def test_replay_determinism():
    prog = make_toy(cadence=7)
    a = run(prog, "0@1#10")
    b = run(prog, "0@1#10")
    assert a.verdict == b.verdict
    assert a.trace.events == b.trace.events
    assert a.stats == b.stats


def test_real_time_report_aggregates_and_flags():
    res4 = [run(make_toy(cadence=6), "0101") for _ in range(3)]
    res8 = [run(make_toy(cadence=6), "01010101") for _ in range(2)]
    report = real_time_report([(4, r) for r in res4] + [(8, r) for r in res8])
    assert report.per_n[4]["max_gap"] == 6
    assert report.per_n[8]["max_gap"] == 6
    assert report.c_observed == 6
    assert report.constant_in_n
    assert assert_real_time(report, 6)
    assert assert_real_time(report, 64)
    assert not assert_real_time(report, 5)


def test_real_time_report_flags_growth():
    slow = run(make_toy(steps_per_symbol=9), "0000")
    fast = run(make_toy(steps_per_symbol=2), "00")
    report = real_time_report([(4, fast), (8, slow)])
    assert not report.constant_in_n
    assert report.c_observed == 9


def test_report_rejects_empty():
    with pytest.raises(ValueError):
        real_time_report([])


@given(st.text(alphabet="01@#", max_size=40), st.integers(1, 12))
@settings(max_examples=50, deadline=None)
def test_streaming_prefix_consistency(text, cut):
    """Feeding a prefix then forking equals running the prefix fresh."""
    prefix = text[:cut]
    prog = make_toy(cadence=8)
    r1 = Runner(prog)
    for ch in prefix:
        r1.feed(ch)
    direct = run(prog, prefix)
    forked = r1.fork().finish()
    assert forked.verdict == direct.verdict
    assert forked.trace.events == direct.trace.events
