"""Upper nilpotent completion of N_r by a sequence of grafts.

Starting from the canonical graph of N_r in gl_n, the engine grafts columns
onto each other until the column heights spell out the target partition
``lam``.  Every graft adds a single strictly-upper-triangular one to the
matrix, so the final graph has matrix N_r + X with X binary and strictly
upper triangular, and (the graph being properly downward) nilpotent of type
``lam``.

Naming: ``t`` is the scion pointer, ``s`` the stock pointer, ``L`` the
multiset of long parts still to be built and ``S`` the short parts.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .errors import InvalidShape, NoCompletionExists, SumMismatch
from .graphs import GlnGraph, canonical_nr_graph, graft_inplace, matrix_of_graph
from .matrices import IntMatrix, make_nr
from .partitions import Partition, check_shape, mmax, remove_max


@dataclass
class RunOptions:
    check_invariants: bool = False
    trace: bool = True

    @classmethod
    def from_env(cls, **kwargs) -> "RunOptions":
        opts = cls(**kwargs)
        if os.environ.get("NILCOMPLETE_CHECK") == "1":
            opts.check_invariants = True
        return opts


@dataclass(frozen=True)
class TraceRecord:
    """One graft.  ``L``, ``S``, ``t`` and ``s`` are the engine state right
    after the graft and the pointer updates that accompany it."""

    k: int
    loop: str
    case: str
    graft_t: int
    graft_s: int
    graft_m: int
    L: Partition
    S: Partition
    t: int
    s: int

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "loop": self.loop,
            "case": self.case,
            "graft": {"t": self.graft_t, "s": self.graft_s, "m": self.graft_m},
            "L": list(self.L),
            "S": list(self.S),
            "t": self.t,
            "s_ptr": self.s,
        }


@dataclass
class Snapshot:
    matrix: IntMatrix
    L: Partition
    S: Partition
    t_height: int


@dataclass
class EngineState:
    n: int
    r: int
    rprime: int
    lam: Partition
    graph: GlnGraph
    t: int
    s: int
    L: Partition
    S: Partition
    end_const: int
    k: int = 0
    # set while the little loop of iteration k runs; L is then L^(k-1)
    in_little_loop: bool = False
    prev: Snapshot | None = None
    little_prev: Snapshot | None = None
    trace: list[TraceRecord] = field(default_factory=list)
    little_iterations: int = 0

    @property
    def floor(self) -> int:
        return self.n // self.r

    @property
    def ceil(self) -> int:
        return -(-self.n // self.r)

    def h(self, i: int) -> int:
        return self.graph.height(i)

    def snapshot(self) -> Snapshot:
        t_height = self.graph.height(self.t) if self.graph.in_domain(self.t) else 0
        return Snapshot(matrix_of_graph(self.graph), self.L, self.S, t_height)


def _validate(n: int, r: int, lam: Partition) -> None:
    check_shape(n, r)
    if lam.total != n:
        raise SumMismatch(f"partition {lam} has sum {lam.total}, expected {n}")
    if len(lam) > r:
        raise NoCompletionExists(f"no completion exists: |lambda| = {len(lam)} > r = {r}")


def initialize(n: int, r: int, lam: Partition) -> EngineState:
    _validate(n, r, lam)
    rp = n % r
    fl, ce = n // r, -(-n // r)
    L = Partition.from_counts({x: m for x, m in lam.items() if x > ce})
    if rp != 0 and lam.mult(ce) > rp:
        L = L + Partition.from_counts({ce: lam.mult(ce) - rp})
    S = Partition.from_counts({x: m for x, m in lam.items() if x < fl})
    if lam.mult(fl) > r - rp:
        S = S + Partition.from_counts({fl: lam.mult(fl) - (r - rp)})
    t = min(lam.mult(fl), r - rp) + 1
    end = r - min(rp, lam.mult(ce))
    return EngineState(n=n, r=r, rprime=rp, lam=lam, graph=canonical_nr_graph(n, r),
                       t=t, s=t + 1, L=L, S=S, end_const=end)


def _graft(state: EngineState, t: int, s: int, m: int, check: bool) -> None:
    graft_inplace(state.graph, t, s, m, validate=check)


def _record(state: EngineState, loop: str, case: str, t: int, s: int, m: int) -> TraceRecord:
    rec = TraceRecord(state.k, loop, case, t, s, m, state.L, state.S, state.t, state.s)
    state.trace.append(rec)
    return rec


def step_loop1(state: EngineState, check: bool = False) -> tuple[EngineState, TraceRecord]:
    """One iteration of the first primary loop (requires S nonempty)."""
    if not state.S:
        raise ValueError("step_loop1 needs a nonempty S")
    state.k += 1
    h = state.h
    t, s = state.t, state.s
    maxL, maxS = mmax(state.L), mmax(state.S)
    lhs = maxL - h(t)
    hs = h(s)
    # the second conjunct of 1a is only evaluated when the first holds, and
    # h(s+1) must then exist
    if lhs == hs - maxS + 1 and hs < h(s + 1):
        m = h(s + 1) - maxS
        _graft(state, t, s + 1, m, check)
        state.S = remove_max(state.S)
        state.L = remove_max(state.L)
        state.t, state.s = s, s + 2
        rec = _record(state, "loop1", "1a", t, s + 1, m)
    elif lhs > hs - maxS:
        m = hs - maxS
        _graft(state, t, s, m, check)
        state.S = remove_max(state.S)
        state.s = s + 1
        rec = _record(state, "loop1", "1b", t, s, m)
    elif lhs == hs - maxS:
        m = hs - maxS
        _graft(state, t, s, m, check)
        state.S = remove_max(state.S)
        state.L = remove_max(state.L)
        state.t, state.s = s + 1, s + 2
        rec = _record(state, "loop1", "1c", t, s, m)
    else:
        m = lhs
        _graft(state, t, s, m, check)
        state.L = remove_max(state.L)
        state.t, state.s = s, s + 1
        rec = _record(state, "loop1", "1d", t, s, m)
    return state, rec


def step_loop2(state: EngineState, check: bool = False) -> tuple[EngineState, list[TraceRecord]]:
    """One iteration of the second primary loop (requires S empty, L
    nonempty): the little loop runs to exhaustion, then one of cases 2a-2d,
    then max(L) is dropped."""
    if state.S or not state.L:
        raise ValueError("step_loop2 needs S empty and L nonempty")
    from .invariants import check_little

    state.k += 1
    records: list[TraceRecord] = []
    h = state.h
    t = state.t
    maxL = mmax(state.L)
    ce, fl = state.ceil, state.floor

    state.in_little_loop = True
    while maxL - h(t) > ce:
        s = state.s
        m = h(s)
        if check:
            state.little_prev = state.snapshot()
        _graft(state, t, s, m, check)
        state.s = s + 1
        state.little_iterations += 1
        records.append(_record(state, "little", "little", t, s, m))
        if check:
            check_little(state)
    state.in_little_loop = False

    s = state.s
    lhs = maxL - h(t)
    hs = h(s)
    if lhs > hs:
        hs1 = h(s + 1)
        if hs1 == ce:
            _graft(state, t, s + 1, hs1, check)
            state.t, state.s = s, s + 2
            case, grafted = "2a", [(t, s + 1, hs1)]
        elif hs1 == fl:
            _graft(state, t, s, hs, check)
            state.s = s + 1
            records.append(_record(state, "loop2", "2b", t, s, hs))
            _graft(state, t, s + 1, 1, check)
            if state.graph.in_domain(s + 1):
                state.t, state.s = s + 1, s + 2
            else:
                # floor(n/r) == 1: column s+1 was a single vertex and is gone,
                # so the next scion is the following untouched column
                state.t, state.s = s + 2, s + 3
            case, grafted = "2b", [(t, s + 1, 1)]
        else:
            raise InvalidShape(f"column {s + 1} has height {hs1}, expected {fl} or {ce}")
    elif lhs == hs:
        _graft(state, t, s, hs, check)
        state.t, state.s = s + 1, s + 2
        case, grafted = "2c", [(t, s, hs)]
    else:
        _graft(state, t, s, lhs, check)
        state.t, state.s = s, s + 1
        case, grafted = "2d", [(t, s, lhs)]
    state.L = remove_max(state.L)
    for gt, gs, gm in grafted:
        records.append(_record(state, "loop2", case, gt, gs, gm))
    return state, records


@dataclass
class RunResult:
    X: IntMatrix
    graph: GlnGraph
    trace: list[TraceRecord]
    little_iterations: int

    @property
    def graft_count(self) -> int:
        return len(self.trace)


def run(n: int, r: int, lam: Partition, options: RunOptions | None = None) -> RunResult:
    """Complete N_r in gl_n to a nilpotent matrix of type ``lam``.

    Returns X (binary, strictly upper triangular) with N_r + X of type
    ``lam``, the final graph and the graft trace.  With
    ``options.check_invariants`` every iteration boundary is audited and an
    InvariantViolation is raised on the first failure.
    """
    from .invariants import check_iteration

    opts = options or RunOptions()
    check = opts.check_invariants
    state = initialize(n, r, lam)
    if check:
        check_iteration(state)
    while state.S:
        if check:
            state.prev = state.snapshot()
        step_loop1(state, check)
        if check:
            check_iteration(state)
    while state.L:
        if check:
            state.prev = state.snapshot()
        step_loop2(state, check)
        if check:
            check_iteration(state)
    X = matrix_of_graph(state.graph) - make_nr(n, r)
    return RunResult(X, state.graph, state.trace if opts.trace else [], state.little_iterations)
