"""Exact nilpotency and Jordan-type certification from ranks of powers.

Two independent exact rank routes are provided:

* ``exact_rank`` runs Bareiss fraction-free elimination on a dense copy;
* ``rank_sequence`` tracks an echelon basis of im(A^k) with sparse integer
  vectors, applying A once per step.

``jordan_type`` uses the second; the tests cross-check the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NotNilpotent
from .matrices import IntMatrix
from .partitions import Partition


def exact_rank(a: IntMatrix) -> int:
    """Rank over Q by Bareiss elimination (all intermediate values are
    integers, divisions are exact)."""
    m = [row for row in a.to_rows() if any(row)]
    if not m:
        return 0
    ncols = a.n
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        prow = m[rank]
        for i in range(rank + 1, len(m)):
            row = m[i]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (p * row[j] - f * prow[j]) // prev
            row[c] = 0
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def _primitive(vec: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in vec.values():
        g = gcd(g, v)
        if g == 1:
            return vec
    return {k: v // g for k, v in vec.items()}


class _Echelon:
    """Sparse integer row echelon basis; rows are keyed by leading index."""

    def __init__(self):
        self.rows: dict[int, dict[int, int]] = {}

    def insert(self, vec: dict[int, int]) -> bool:
        vec = {k: v for k, v in vec.items() if v}
        while vec:
            lead = min(vec)
            piv = self.rows.get(lead)
            if piv is None:
                self.rows[lead] = _primitive(vec)
                return True
            a, b = piv[lead], vec[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            out = {k: a * v for k, v in vec.items()}
            for k, v in piv.items():
                nv = out.get(k, 0) - b * v
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
            vec = _primitive(out) if out else out
        return False

    def __len__(self) -> int:
        return len(self.rows)


def _apply(cols: dict[int, dict[int, int]], vec: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for k, v in vec.items():
        col = cols.get(k)
        if col:
            for i, a in col.items():
                out[i] = out.get(i, 0) + a * v
    return out


def rank_sequence(a: IntMatrix, stop_at_zero: bool = True) -> list[int]:
    """``[rank(A^0), rank(A^1), ...]`` up to ``A^n`` or the first zero rank.

    The image of A^k is spanned by A applied to a basis of the image of
    A^(k-1); each step re-reduces that set to an echelon basis.  Iteration
    also stops once the rank stabilises, since it then stays constant.
    """
    n = a.n
    cols: dict[int, dict[int, int]] = {}
    for i, j, v in a.entries():
        cols.setdefault(j, {})[i] = v
    basis = [{j: 1} for j in range(n)]
    ranks = [n]
    for _ in range(n):
        ech = _Echelon()
        for vec in basis:
            w = _apply(cols, vec)
            if w:
                ech.insert(w)
        basis = list(ech.rows.values())
        ranks.append(len(basis))
        if ranks[-1] == ranks[-2] or (stop_at_zero and ranks[-1] == 0):
            break
    return ranks


def is_nilpotent(a: IntMatrix) -> bool:
    """A^n == 0, computed exactly."""
    return (a ** a.n).is_zero()


@dataclass(frozen=True)
class JordanType:
    partition: Partition
    ranks: tuple[int, ...]

    def __str__(self) -> str:
        return str(self.partition)


def type_from_ranks(ranks: list[int]) -> Partition:
    """Blocks of size >= k number ranks[k-1] - ranks[k]; the partition is the
    conjugate of that count sequence."""
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    counts: dict[int, int] = {}
    for k, c in enumerate(at_least, start=1):
        nxt = at_least[k] if k < len(at_least) else 0
        if c - nxt:
            counts[k] = c - nxt
    return Partition.from_counts(counts)


def jordan_type(a: IntMatrix) -> JordanType:
    ranks = rank_sequence(a)
    if ranks[-1] != 0:
        raise NotNilpotent(f"rank sequence {ranks} does not reach 0")
    return JordanType(type_from_ranks(ranks), tuple(ranks))
