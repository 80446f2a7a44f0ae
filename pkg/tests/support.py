"""Shared helpers for the test suite: independent brute-force oracles and a
generator of random valid graft inputs."""

from __future__ import annotations

import random
from functools import lru_cache

from nilcomplete.graphs import (GlnGraph, canonical_nr_graph, graft_inplace, is_downward_path,
                                is_properly_downward, matrix_of_graph)


@lru_cache(maxsize=None)
def count_partitions(n: int, max_parts: int) -> int:
    """Partitions of n into at most max_parts parts, by the standard
    recurrence p(n, k) = p(n, k - 1) + p(n - k, k)."""
    if n == 0:
        return 1
    if n < 0 or max_parts == 0:
        return 0
    return count_partitions(n, max_parts - 1) + count_partitions(n - max_parts, max_parts)


def count_instances(max_n: int) -> int:
    return sum(count_partitions(n, r) for n in range(2, max_n + 1) for r in range(1, n))


def brute_partitions(n: int) -> list[tuple[int, ...]]:
    """All partitions of n from compositions, deduplicated; slow on purpose."""
    out = set()

    def rec(rest, acc):
        if rest == 0:
            out.add(tuple(sorted(acc, reverse=True)))
            return
        for k in range(1, rest + 1):
            rec(rest - k, acc + [k])

    rec(n, [])
    return sorted(out, reverse=True)


def dense_power(rows: list[list[int]], k: int) -> list[list[int]]:
    n = len(rows)
    out = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(k):
        out = [[sum(out[i][l] * rows[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
    return out


def graft_candidates(g: GlnGraph) -> list[tuple[int, int]]:
    dom = g.domain()
    return [(t, s) for s in dom if is_downward_path(g, s) for t in dom if t < s]


def random_graft_input(rng: random.Random, max_n: int = 16, max_prior: int = 4):
    """A properly downward graph reached from a canonical N_r graph by a few
    valid grafts, together with a valid graft (t, s, m) on it."""
    while True:
        n = rng.randint(2, max_n)
        r = rng.randint(1, n - 1)
        g = canonical_nr_graph(n, r)
        for _ in range(rng.randint(0, max_prior)):
            cands = graft_candidates(g)
            if not cands:
                break
            t, s = rng.choice(cands)
            trial = g.copy()
            graft_inplace(trial, t, s, rng.randint(1, g.height(s)), validate=False)
            if is_properly_downward(trial):
                g = trial
        cands = graft_candidates(g)
        if cands:
            t, s = rng.choice(cands)
            return g, t, s, rng.randint(1, g.height(s))


def graft_lemma_violations(g1: GlnGraph, g2: GlnGraph, t: int, s: int, m: int) -> list[str]:
    """Check the six conclusions of the graft lemma for g2 = graft(g1, t, s, m).
    Returns the names of the failed parts."""
    bad = []
    h1s, h1t = g1.height(s), g1.height(t)
    dom1 = set(g1.domain())
    expected = dom1 - {s} if m == h1s else dom1
    if set(g2.domain()) != expected:
        bad.append("part1-domain")

    if m < h1s and g2.height(s) != h1s - m:
        bad.append("part2-stock-height")
    if g2.height(t) != h1t + m:
        bad.append("part2-scion-height")
    if any(g2.height(i) != g1.height(i) for i in g2.domain() if i not in (s, t)):
        bad.append("part2-other-heights")

    for i in dom1 - {s, t}:
        if is_downward_path(g1, i) and not is_downward_path(g2, i):
            bad.append("part3-downward-path")
            break

    for i in range(1, m + 1):
        if g2.ord_at(t, h1t + i) != g1.ord_at(s, h1s - m + i):
            bad.append("part4-moved-ordinals")
            break
    if g2.ord_at(t, g2.height(t)) != g1.ord_at(s, h1s):
        bad.append("part4-top-ordinal")
    for v in g2.vertices:
        x, y = g2.position(v)
        if x != t and (g1.vertex_at(x, y) is None or g1.ord_at(x, y) != g2.ord_at(x, y)):
            bad.append("part4-fixed-ordinals")
            break

    if h1t > h1s - m and not is_properly_downward(g2):
        bad.append("part5-properly-downward")

    if g1.ord_at(t, h1t) < g1.ord_at(s, h1s - m + 1):
        a1, a2 = matrix_of_graph(g1), matrix_of_graph(g2)
        changed = list(a2.changed_entries(a1))
        if len(changed) != 1:
            bad.append("part6-single-entry")
        else:
            i, j = changed[0]
            if not (i < j and a1[i, j] == 0 and a2[i, j] == 1):
                bad.append("part6-upper-zero-to-one")

    if sorted(g1.ord(v) for v in g1.vertices) != sorted(g2.ord(v) for v in g2.vertices):
        bad.append("ordinal-image")
    return bad
