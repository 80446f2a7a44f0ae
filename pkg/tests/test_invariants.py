import dataclasses

import pytest

from nilcomplete.engine import RunOptions, initialize, run, step_loop1, step_loop2
from nilcomplete.errors import InvariantViolation, UnknownInvariant
from nilcomplete.invariants import ALL, LITTLE, PRIMARY, check_invariant, check_iteration
from nilcomplete.partitions import Partition as P, partitions


def instances(max_n):
    for n in range(2, max_n + 1):
        for r in range(1, n):
            for lam in partitions(n, max_parts=r):
                yield n, r, P(lam)


def test_registry_names():
    assert sorted(PRIMARY) == sorted(f"P{i}" for i in range(2, 11))
    assert sorted(LITTLE) == sorted(f"LP{i}" for i in range(2, 9))


def test_initialized_state_satisfies_p4_to_p10():
    for n, r, lam in instances(12):
        st = initialize(n, r, lam)
        for i in range(4, 11):
            assert check_invariant(st, f"P{i}"), (n, r, lam, i)


def test_p1_holds_structurally():
    assert check_invariant(initialize(10, 3, P([5, 4, 1])), "P1")


def test_unknown_invariant():
    with pytest.raises(UnknownInvariant):
        check_invariant(initialize(10, 3, P([5, 4, 1])), "P11")


def test_swapped_pointers_fail_p7():
    st = initialize(10, 3, P([5, 4, 1]))
    bad = dataclasses.replace(st, t=st.s, s=st.t)
    assert not check_invariant(bad, "P7")
    with pytest.raises(InvariantViolation) as info:
        check_iteration(bad)
    assert info.value.which in ALL


def test_shrinking_l_without_a_graft_fails_p5():
    st = initialize(10, 3, P([5, 4, 1]))
    assert not check_invariant(dataclasses.replace(st, L=P()), "P5")


def test_stepwise_checks_after_each_iteration():
    st = initialize(20, 7, P([9, 5, 3, 2, 1]))
    while st.S:
        st.prev = st.snapshot()
        step_loop1(st, check=True)
        check_iteration(st)
    while st.L:
        st.prev = st.snapshot()
        step_loop2(st, check=True)
        check_iteration(st)


def test_all_invariants_hold_up_to_14():
    # run() raises InvariantViolation on the first failing predicate
    count = 0
    for n, r, lam in instances(14):
        run(n, r, lam, RunOptions(check_invariants=True, trace=False))
        count += 1
    assert count == 3302


def test_little_loop_predicates_are_exercised():
    res = run(12, 5, P([12]), RunOptions(check_invariants=True))
    assert res.little_iterations > 0
