"""Checkable state predicates of the completion engine.

Primary-loop predicates ``P2``..``P10`` are evaluated on the state at the end
of an iteration (or right after initialization for ``k = 0``).  Little-loop
predicates ``LP2``..``LP8`` are evaluated after each little-loop graft, with
``L`` still equal to its value at the start of the primary iteration.
``P1`` (every instruction well defined) has no state form: it holds exactly
when no engine operation raised.
"""

from __future__ import annotations

from typing import Callable

from .engine import EngineState
from .errors import InvalidPosition, InvariantViolation, UnknownInvariant
from .graphs import (is_downward_path, is_properly_downward, is_typewriter_ordered,
                     vertices_in_window)
from .partitions import Partition


def _dom(state: EngineState) -> list[int]:
    return state.graph.domain()


def _outside_heights(state: EngineState) -> Partition:
    """Heights of columns outside [s, end] and other than t.

    Once t has moved past ``end`` (only possible after the last iteration,
    or with no iteration at all) it points into the finished columns and is
    no longer excluded.
    """
    g, s, end, t = state.graph, state.s, state.end_const, state.t
    skip_t = t <= end
    return Partition(g.height(i) for i in g.domain()
                     if not (s <= i <= end) and not (skip_t and i == t))


def _ord_or_none(state: EngineState, x: int, y: int) -> int | None:
    try:
        return state.graph.ord_at(x, y)
    except InvalidPosition:
        return None


def _window_ok(state: EngineState, long_bound: Partition | None, short_bound: Partition | None) -> bool:
    g, end = state.graph, state.end_const
    fl, ce = state.floor, state.ceil
    window = range(state.s, end + 1)
    for i in window:
        if not g.in_domain(i):
            return False
        if not is_downward_path(g, i):
            return False
        hi = g.height(i)
        if hi not in (fl, ce):
            return False
        if i + 1 <= end and g.in_domain(i + 1) and hi > g.height(i + 1):
            return False
        if short_bound and not hi > short_bound.max():
            return False
        if long_bound and not hi < long_bound.max():
            return False
    return is_typewriter_ordered(g, vertices_in_window(g, state.s, end))


def _ord_bound_long(state: EngineState, L: Partition) -> bool:
    g, t, s = state.graph, state.t, state.s
    ht, hs = g.height(t), g.height(s)
    a = _ord_or_none(state, t, ht)
    b = _ord_or_none(state, s, max(1, hs - (L.max() - ht) + 1))
    return a is not None and b is not None and a < b


def _upper_change(now, before) -> bool:
    return all(j > i for i, j in now.changed_entries(before))


# -- primary-loop predicates --------------------------------------------------

def p2(state: EngineState) -> bool:
    if state.prev is None:
        return True
    return _upper_change(state.graph.matrix(), state.prev.matrix)


def p3(state: EngineState) -> bool:
    if state.prev is None:
        return True
    S0, L0 = state.prev.S, state.prev.L
    if not (state.S.issubset(S0) and state.L.issubset(L0)):
        return False
    return state.S != S0 or state.L != L0


def p4(state: EngineState) -> bool:
    return is_properly_downward(state.graph)


def p5(state: EngineState) -> bool:
    return _outside_heights(state) == state.lam - (state.L + state.S)


def p6(state: EngineState) -> bool:
    return _window_ok(state, state.L, state.S)


def p7(state: EngineState) -> bool:
    if not state.t < state.s:
        return False
    if state.L:
        g = state.graph
        return g.in_domain(state.t) and g.in_domain(state.s) and state.s <= state.end_const
    return True


def p8(state: EngineState) -> bool:
    g, t, s = state.graph, state.t, state.s
    if state.S:
        a = _ord_or_none(state, t, g.height(t))
        b = _ord_or_none(state, s, state.S.max() + 1)
        if a is None or b is None or not a < b:
            return False
    if state.L:
        return _ord_bound_long(state, state.L)
    return True


def p9(state: EngineState) -> bool:
    return not state.S or state.graph.height(state.t) > state.S.max()


def p10(state: EngineState) -> bool:
    return not state.S or bool(state.L)


# -- little-loop predicates (L is the value at the start of the iteration) ----

def lp2(state: EngineState) -> bool:
    if state.little_prev is None:
        return True
    return _upper_change(state.graph.matrix(), state.little_prev.matrix)


def lp3(state: EngineState) -> bool:
    if state.little_prev is None:
        return True
    return state.graph.height(state.t) > state.little_prev.t_height


def lp5(state: EngineState) -> bool:
    return _outside_heights(state) == state.lam - state.L


def lp6(state: EngineState) -> bool:
    return _window_ok(state, state.L, None)


def lp7(state: EngineState) -> bool:
    g = state.graph
    return not g.height(state.t) < state.L.max() or state.s <= state.end_const


def lp8(state: EngineState) -> bool:
    return _ord_bound_long(state, state.L)


PRIMARY: dict[str, Callable[[EngineState], bool]] = {
    "P2": p2, "P3": p3, "P4": p4, "P5": p5, "P6": p6,
    "P7": p7, "P8": p8, "P9": p9, "P10": p10,
}
LITTLE: dict[str, Callable[[EngineState], bool]] = {
    "LP2": lp2, "LP3": lp3, "LP4": p4, "LP5": lp5,
    "LP6": lp6, "LP7": lp7, "LP8": lp8,
}
ALL = {**PRIMARY, **LITTLE}


def check_invariant(state: EngineState, which: str) -> bool:
    """Evaluate one named predicate on ``state``."""
    if which == "P1":
        # realized structurally: reaching a snapshot means nothing raised
        return True
    try:
        fn = ALL[which]
    except KeyError:
        raise UnknownInvariant(which) from None
    try:
        return fn(state)
    except InvalidPosition:
        # a predicate that needs a missing column or vertex is false
        return False


def applicable(state: EngineState) -> list[str]:
    names = ["P4", "P5", "P6", "P7", "P8", "P9", "P10"]
    if state.k >= 1:
        names = ["P2", "P3"] + names
    return names


def check_iteration(state: EngineState) -> None:
    """Raise InvariantViolation for the first failing primary predicate."""
    for name in applicable(state):
        if not check_invariant(state, name):
            raise InvariantViolation(name, state.k)


def check_little(state: EngineState) -> None:
    for name in LITTLE:
        if not check_invariant(state, name):
            raise InvariantViolation(name, state.k, "little loop")
