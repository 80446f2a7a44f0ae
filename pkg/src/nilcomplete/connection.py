"""Homogeneous Coxeter connections d + A(z) dz/z built from completions.

For 0 < r < n the coefficient is omega^{-r} + X = E_r z^{-1} + N_r + X with X
from the completion engine.  For r > n no completion is needed and X is the
strictly upper triangular Jordan form of type lambda.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd

from .engine import run
from .errors import NoCompletionExists, NotCoprime, SumMismatch
from .matrices import IntMatrix, LaurentMatrix, lpow, omega_inv
from .partitions import Partition


@dataclass(frozen=True)
class ConnectionForm:
    n: int
    coeff: LaurentMatrix
    slope_num: int
    slope_den: int

    @property
    def slope(self) -> str:
        return f"{self.slope_num}/{self.slope_den}"

    def to_json(self) -> dict:
        return {"n": self.n, "slope": self.slope, "coeff": self.coeff.to_json()}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict) -> "ConnectionForm":
        num, den = (int(x) for x in data["slope"].split("/"))
        return cls(data["n"], LaurentMatrix.from_json(data["coeff"]), num, den)

    def render(self) -> str:
        """e.g. ``d + (E_3 z^-1 + N_3 + X) dz/z`` followed by X as triplets."""
        n, r = self.n, self.slope_num
        base = lpow(omega_inv(n), r)
        X = self.coeff.coefficient(0) - base.coefficient(0)
        if r < n:
            head = f"E_{r} z^-1 + N_{r}"
        else:
            head = f"omega^-{r}"
        lines = [f"d + ({head} + X) dz/z    [n={n}, slope {self.slope}]"]
        lines.append("X (i j v):")
        lines.extend(f"{i} {j} {v}" for i, j, v in X.triplets())
        return "\n".join(lines) + "\n"


def jordan_block_matrix(lam: Partition) -> IntMatrix:
    """Nilpotent Jordan form of type ``lam``: ones on the superdiagonal inside
    each block, blocks in non-increasing size along the diagonal."""
    n = lam.total
    rows: dict[int, dict[int, int]] = {}
    start = 0
    for size in lam:
        for i in range(start, start + size - 1):
            rows[i] = {i + 1: 1}
        start += size
    return IntMatrix(n, rows)


def emit(n: int, r: int, lam: Partition) -> ConnectionForm:
    if gcd(r, n) != 1:
        raise NotCoprime(f"r and n are not coprime: gcd({r}, {n}) = {gcd(r, n)}")
    if lam.total != n:
        raise SumMismatch(f"partition {lam} has sum {lam.total}, expected {n}")
    formal = lpow(omega_inv(n), r)
    if r < n:
        if len(lam) > r:
            raise NoCompletionExists(f"no completion exists: |lambda| = {len(lam)} > r = {r}")
        X = run(n, r, lam).X
    else:
        X = jordan_block_matrix(lam)
    return ConnectionForm(n, formal + LaurentMatrix.monomial(X, 0), r, n)


def residue(c: ConnectionForm) -> IntMatrix:
    """The z^0 coefficient of A(z)."""
    return c.coeff.coefficient(0)
