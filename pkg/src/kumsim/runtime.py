"""Streaming driver: feeds a Program one symbol at a time and meters it.

The driver owns the input cursor, so a Program can never peek ahead; it
sees exactly one symbol per on_symbol() call and learns about end-of-input
only through on_end().  Between consecutive reads the driver counts engine
steps, records them as trace gaps, and optionally pads each symbol's work
up to a fixed per-symbol step budget (the cadence) with idle steps.  With
padding on, a correct recognizer shows the same gap on every symbol of
every input, which is what makes the real-time constant a single pinned
number instead of a distribution.

Gap semantics follow the usual real-time accounting: the reference tape
delivers one symbol per time unit, so the step gap between consecutive
reads is itself the real-time constant c for that interval.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from kumsim.engine import EngineError, StorageGraph

ALPHABET = frozenset("01@#")

MAX_REGISTERS = 32


class EventKind(enum.Enum):
    READ_SYMBOL = "read"
    HALT = "halt"


class RejectReason(enum.Enum):
    BAD_ALPHABET = "bad-alphabet"
    FORMAT = "format"
    PACING = "pacing"
    TRUNCATED = "truncated"
    BAD_SUFFIX = "bad-suffix"
    MACHINE_FAULT = "machine-fault"


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    reason: Optional[RejectReason] = None

    @staticmethod
    def accept() -> "Verdict":
        return _ACCEPT

    @staticmethod
    def reject(reason: RejectReason) -> "Verdict":
        return Verdict(False, reason)

    def __str__(self) -> str:
        return "accept" if self.accepted else "reject:%s" % self.reason.value


_ACCEPT = Verdict(True, None)


class Registers(dict):
    """Fixed-name map from register name to NodeRef or None.

    The name set is closed at construction; assigning an unnamed register
    raises KeyError.  Values are the machine's distinguished node handles
    (or None); reading and writing registers is finite control, not graph
    work, so it costs no steps.
    """

    __slots__ = ()

    def __init__(self, names: Iterable[str]):
        super().__init__((n, None) for n in names)

    def __setitem__(self, name, value):
        if name not in self:
            raise KeyError("unknown register %r" % (name,))
        dict.__setitem__(self, name, value)


class Trace:
    """Sequence of (EventKind, position, steps_since_previous_event).

    One READ_SYMBOL event is recorded immediately before each delivery,
    carrying the steps spent since the previous event; a single final HALT
    event carries the steps spent after the last read.  The positions of
    read events are the input indices; the halt position is one past the
    last delivered index.
    """

    __slots__ = ("events", "total_steps")

    def __init__(self):
        self.events: list[tuple[EventKind, int, int]] = []
        self.total_steps = 0

    def gaps(self) -> list[int]:
        return [gap for _, _, gap in self.events]


@dataclass(frozen=True)
class Program:
    """A machine program: a register file plus three handlers.

    Handlers act only through engine primitives on the given graph and
    through the register map.  on_symbol may return a rejecting Verdict to
    stop the run early; accepting early is a program bug (membership can
    depend on the unread suffix) and is reported as MACHINE_FAULT.  on_end
    must decide the final verdict.

    cadence, when set, is the fixed per-symbol step budget: after each
    on_symbol call the driver idles the graph up to exactly that many
    steps.  A handler that overruns the budget is not real-time at the
    declared rate; the driver reports that as MACHINE_FAULT too.
    """

    register_names: tuple
    graph_factory: Callable[[], StorageGraph]
    on_start: Callable
    on_symbol: Callable
    on_end: Callable
    cadence: Optional[int] = None

    def __post_init__(self):
        if len(self.register_names) > MAX_REGISTERS:
            raise ValueError("register file capped at %d names" % MAX_REGISTERS)
        if len(set(self.register_names)) != len(self.register_names):
            raise ValueError("duplicate register names")
        if self.cadence is not None and self.cadence < 1:
            raise ValueError("cadence must be positive")


@dataclass
class RunResult:
    verdict: Verdict
    trace: Trace
    stats: dict
    # introspection handles for the harness; not part of machine semantics
    graph: StorageGraph = field(repr=False, default=None)
    registers: Registers = field(repr=False, default=None)


class Runner:
    """Incremental run state: feed symbols one by one, then finish.

    run() is the one-shot wrapper.  fork() snapshots the whole machine
    mid-stream, which lets a harness explore many continuations of a
    common prefix without replaying it.
    """

    __slots__ = ("program", "graph", "registers", "trace",
                 "position", "_mark", "verdict")

    def __init__(self, program: Program):
        self.program = program
        self.graph = program.graph_factory()
        self.registers = Registers(program.register_names)
        self.trace = Trace()
        self.position = 0
        self.verdict: Optional[Verdict] = None
        self._mark = 0
        try:
            program.on_start(self.graph, self.registers)
        except EngineError:
            self._halt(Verdict.reject(RejectReason.MACHINE_FAULT))
        self._mark = self.graph.step_counter

    def feed(self, symbol: str) -> Optional[Verdict]:
        """Deliver one symbol; returns the verdict if the run just ended."""
        if self.verdict is not None:
            raise RuntimeError("run already halted")
        g = self.graph
        events = self.trace.events
        events.append((EventKind.READ_SYMBOL, self.position,
                       g.step_counter - self._mark))
        self._mark = g.step_counter
        self.position += 1
        if symbol not in ALPHABET:
            return self._halt(Verdict.reject(RejectReason.BAD_ALPHABET))
        try:
            early = self.program.on_symbol(g, self.registers, symbol)
        except EngineError:
            return self._halt(Verdict.reject(RejectReason.MACHINE_FAULT))
        if early is not None:
            if early.accepted:
                early = Verdict.reject(RejectReason.MACHINE_FAULT)
            return self._halt(early)
        cadence = self.program.cadence
        if cadence is not None:
            spent = g.step_counter - self._mark
            if spent > cadence:
                return self._halt(Verdict.reject(RejectReason.MACHINE_FAULT))
            g.idle(cadence - spent)
        return None

    def finish(self) -> RunResult:
        """Signal end-of-input and collect the result."""
        if self.verdict is None:
            try:
                verdict = self.program.on_end(self.graph, self.registers)
            except EngineError:
                verdict = Verdict.reject(RejectReason.MACHINE_FAULT)
            if verdict is None:
                verdict = Verdict.reject(RejectReason.MACHINE_FAULT)
            self._halt(verdict)
        return RunResult(self.verdict, self.trace, self.graph.graph_stats(),
                         self.graph, self.registers)

    def _halt(self, verdict: Verdict) -> Verdict:
        g = self.graph
        self.trace.events.append((EventKind.HALT, self.position,
                                  g.step_counter - self._mark))
        self._mark = g.step_counter
        self.trace.total_steps = g.step_counter
        self.verdict = verdict
        return verdict

    def fork(self) -> "Runner":
        """Independent copy of the current machine and trace state."""
        r = Runner.__new__(Runner)
        r.program = self.program
        r.graph = self.graph.fork()
        r.registers = Registers.__new__(Registers)
        dict.update(r.registers, self.registers)
        r.trace = Trace()
        r.trace.events = self.trace.events[:]
        r.trace.total_steps = self.trace.total_steps
        r.position = self.position
        r._mark = self._mark
        r.verdict = self.verdict
        return r


def run(program: Program, text: str) -> RunResult:
    """Run a Program over text, strictly left to right, one symbol each.

    Symbols outside {0,1,@,#} reject at the offending position without
    reaching the program.  Early rejection stops delivery; engine rule
    violations inside handlers surface as Reject(MACHINE_FAULT) rather
    than masquerading as input rejection.
    """
    runner = Runner(program)
    if runner.verdict is None:
        for symbol in text:
            if runner.feed(symbol) is not None:
                break
    return runner.finish()


def max_gap(trace: Trace) -> int:
    """Largest step gap in the trace (the observed real-time constant)."""
    if not trace.events:
        raise ValueError("empty trace")
    return max(gap for _, _, gap in trace.events)


def mean_gap(trace: Trace) -> float:
    if not trace.events:
        raise ValueError("empty trace")
    return trace.total_steps / len(trace.events)


@dataclass(frozen=True)
class RealTimeReport:
    """Per-size gap aggregates plus the single observed constant."""

    per_n: dict
    c_observed: int
    constant_in_n: bool


def real_time_report(results: Sequence[tuple]) -> RealTimeReport:
    """Aggregate (n, RunResult) pairs into a real-time report.

    per_n maps n to {"runs", "max_gap", "mean_gap"}; max_gap is the worst
    gap over all runs at that n and mean_gap averages every trace gap.
    c_observed is the global worst gap; constant_in_n is true when every
    n shows the same per-n max_gap.
    """
    if not results:
        raise ValueError("no results to aggregate")
    buckets: dict[int, list[Trace]] = {}
    for n, result in results:
        buckets.setdefault(n, []).append(result.trace)
    per_n = {}
    for n in sorted(buckets):
        traces = buckets[n]
        gaps = [g for t in traces for g in t.gaps()]
        per_n[n] = {
            "runs": len(traces),
            "max_gap": max(max_gap(t) for t in traces),
            "mean_gap": sum(gaps) / len(gaps),
        }
    maxima = [agg["max_gap"] for agg in per_n.values()]
    return RealTimeReport(per_n=per_n, c_observed=max(maxima),
                          constant_in_n=len(set(maxima)) == 1)


def assert_real_time(report: RealTimeReport, c: int) -> bool:
    """True iff every observed gap fits under the claimed constant c."""
    return report.c_observed <= c
