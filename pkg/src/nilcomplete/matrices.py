"""Exact integer matrices and finite Laurent polynomials in z with integer
matrix coefficients.

Indices passed to ``IntMatrix.__getitem__`` and ``IntMatrix.from_entries`` are
0-based.  Text formats (triplets, dense) and the ``elementary`` constructor are
1-based, matching the usual ``e_{i,j}`` notation.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Mapping

from .errors import DimMismatch, InvalidShape
from .partitions import check_shape


class IntMatrix:
    """Square matrix of Python integers.

    Only nonzero entries are stored (row -> {col: value}).  Values are
    arbitrary-precision, so no arithmetic here ever rounds or overflows.
    Instances are treated as immutable.
    """

    __slots__ = ("n", "_rows")

    def __init__(self, n: int, rows: Mapping[int, Mapping[int, int]] | None = None):
        if n < 1:
            raise InvalidShape(f"dimension must be >= 1, got {n}")
        self.n = n
        clean: dict[int, dict[int, int]] = {}
        for i, row in (rows or {}).items():
            r = {j: v for j, v in row.items() if v}
            if not r:
                continue
            if not 0 <= i < n or any(not 0 <= j < n for j in r):
                raise InvalidShape(f"entry index out of range for n={n}")
            clean[i] = r
        self._rows = clean

    @classmethod
    def _wrap(cls, n: int, rows: dict[int, dict[int, int]]) -> "IntMatrix":
        # trusted internal path: rows already in range, no zeros, no empty rows
        obj = cls.__new__(cls)
        obj.n = n
        obj._rows = rows
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, n: int) -> "IntMatrix":
        return cls(n)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, {i: {i: 1} for i in range(n)})

    @classmethod
    def from_entries(cls, n: int, entries: Mapping[tuple[int, int], int]) -> "IntMatrix":
        rows: dict[int, dict[int, int]] = {}
        for (i, j), v in entries.items():
            rows.setdefault(i, {})[j] = v
        return cls(n, rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise InvalidShape("dense rows must form a nonempty square array")
        return cls(n, {i: {j: int(v) for j, v in enumerate(r) if v} for i, r in enumerate(rows)})

    @classmethod
    def from_triplets(cls, n: int, triplets: Iterable[tuple[int, int, int]]) -> "IntMatrix":
        rows: dict[int, dict[int, int]] = {}
        for i, j, v in triplets:
            if not (1 <= i <= n and 1 <= j <= n):
                raise InvalidShape(f"triplet ({i}, {j}) out of range for n={n}")
            rows.setdefault(i - 1, {})[j - 1] = v
        return cls(n, rows)

    @classmethod
    def elementary(cls, n: int, i: int, j: int) -> "IntMatrix":
        """The matrix unit e_{i,j} (1-based)."""
        return cls.from_triplets(n, [(i, j, 1)])

    # -- access -------------------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise IndexError(ij)
        return self._rows.get(i, {}).get(j, 0)

    def entries(self) -> Iterator[tuple[int, int, int]]:
        """Nonzero entries as 0-based ``(i, j, v)``, row-major."""
        for i in sorted(self._rows):
            row = self._rows[i]
            for j in sorted(row):
                yield i, j, row[j]

    def triplets(self) -> list[tuple[int, int, int]]:
        return [(i + 1, j + 1, v) for i, j, v in self.entries()]

    def to_rows(self) -> list[list[int]]:
        out = [[0] * self.n for _ in range(self.n)]
        for i, row in self._rows.items():
            for j, v in row.items():
                out[i][j] = v
        return out

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self._rows.values())

    def is_zero(self) -> bool:
        return not self._rows

    def is_binary(self) -> bool:
        return all(v == 1 for r in self._rows.values() for v in r.values())

    def is_strictly_upper(self) -> bool:
        return all(j > i for i, r in self._rows.items() for j in r)

    def changed_entries(self, other: "IntMatrix") -> Iterator[tuple[int, int]]:
        """0-based positions where ``self`` and ``other`` differ, without
        forming the difference."""
        empty: dict[int, int] = {}
        for i in self._rows.keys() | other._rows.keys():
            a, b = self._rows.get(i, empty), other._rows.get(i, empty)
            if a == b:
                continue
            for j in a.keys() | b.keys():
                if a.get(j, 0) != b.get(j, 0):
                    yield i, j

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "IntMatrix") -> None:
        if self.n != other.n:
            raise DimMismatch(f"{self.n} != {other.n}")

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check(other)
        rows = {i: dict(r) for i, r in self._rows.items()}
        for i, r in other._rows.items():
            tgt = rows.get(i)
            if tgt is None:
                rows[i] = dict(r)
                continue
            for j, v in r.items():
                nv = tgt.get(j, 0) + v
                if nv:
                    tgt[j] = nv
                else:
                    del tgt[j]
            if not tgt:
                del rows[i]
        return IntMatrix._wrap(self.n, rows)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix._wrap(self.n, {i: {j: -v for j, v in r.items()} for i, r in self._rows.items()})

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix(self.n, {i: {j: c * v for j, v in r.items()} for i, r in self._rows.items()})

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        self._check(other)
        orows = other._rows
        rows: dict[int, dict[int, int]] = {}
        for i, r in self._rows.items():
            acc: dict[int, int] = {}
            for k, a in r.items():
                ok = orows.get(k)
                if ok is None:
                    continue
                for j, b in ok.items():
                    acc[j] = acc.get(j, 0) + a * b
            acc = {j: v for j, v in acc.items() if v}
            if acc:
                rows[i] = acc
        return IntMatrix._wrap(self.n, rows)

    def __pow__(self, k: int) -> "IntMatrix":
        if k < 0:
            raise ValueError("negative matrix power")
        result = IntMatrix.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def transpose(self) -> "IntMatrix":
        rows: dict[int, dict[int, int]] = {}
        for i, r in self._rows.items():
            for j, v in r.items():
                rows.setdefault(j, {})[i] = v
        return IntMatrix(self.n, rows)

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.n == other.n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.entries())))

    def __repr__(self) -> str:
        return f"IntMatrix(n={self.n}, triplets={self.triplets()})"

    # -- text formats -------------------------------------------------------

    def to_dense_text(self) -> str:
        return "".join(" ".join(str(v) for v in row) + "\n" for row in self.to_rows())

    def to_triplet_text(self) -> str:
        return "".join(f"{i} {j} {v}\n" for i, j, v in self.triplets())


def make_nr(n: int, r: int) -> IntMatrix:
    """Ones on the r-th subdiagonal: entries (i+r, i), 1-based."""
    check_shape(n, r)
    return IntMatrix._wrap(n, {i + r: {i: 1} for i in range(n - r)})


def make_er(n: int, r: int) -> IntMatrix:
    """Ones on the (n-r)-th superdiagonal: entries (i, i+n-r), 1-based."""
    check_shape(n, r)
    return IntMatrix._wrap(n, {i: {i + n - r: 1} for i in range(r)})


def parse_dense(text: str) -> IntMatrix:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    try:
        return IntMatrix.from_rows([[int(x) for x in row] for row in rows])
    except ValueError as exc:
        raise InvalidShape(f"malformed dense matrix: {exc}") from exc


def parse_triplets(text: str, n: int | None = None) -> IntMatrix:
    """Parse ``i j v`` lines.  Without ``n`` the dimension is the largest
    index that appears."""
    trips = []
    for line in text.splitlines():
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        toks = line.split()
        if len(toks) != 3:
            raise InvalidShape(f"triplet line needs 3 fields: {line!r}")
        try:
            trips.append(tuple(int(t) for t in toks))
        except ValueError as exc:
            raise InvalidShape(f"malformed triplet line {line!r}") from exc
    if n is None:
        n = max((max(i, j) for i, j, _ in trips), default=0)
        if n == 0:
            raise InvalidShape("cannot infer dimension from an empty triplet list")
    return IntMatrix.from_triplets(n, trips)


class LaurentMatrix:
    """Finite Laurent polynomial sum_k M_k z^k with IntMatrix coefficients.

    Zero coefficients are never stored, so two equal polynomials have equal
    coefficient maps.
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[int, IntMatrix] | None = None):
        self.n = n
        clean = {}
        for k, m in (coeffs or {}).items():
            if m.n != n:
                raise DimMismatch(f"coefficient of z^{k} has dimension {m.n}, expected {n}")
            if not m.is_zero():
                clean[int(k)] = m
        self.coeffs: dict[int, IntMatrix] = dict(sorted(clean.items()))

    @classmethod
    def monomial(cls, m: IntMatrix, k: int = 0) -> "LaurentMatrix":
        return cls(m.n, {k: m})

    @classmethod
    def identity(cls, n: int) -> "LaurentMatrix":
        return cls.monomial(IntMatrix.identity(n))

    def coefficient(self, k: int) -> IntMatrix:
        return self.coeffs.get(k, IntMatrix.zeros(self.n))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(self.coeffs)

    def __add__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if self.n != other.n:
            raise DimMismatch(f"{self.n} != {other.n}")
        out = dict(self.coeffs)
        for k, m in other.coeffs.items():
            out[k] = out[k] + m if k in out else m
        return LaurentMatrix(self.n, out)

    def __sub__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        return self + LaurentMatrix(other.n, {k: -m for k, m in other.coeffs.items()})

    def __mul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        return lmul(self, other)

    def shift(self, d: int) -> "LaurentMatrix":
        """Multiply by z^d."""
        return LaurentMatrix(self.n, {k + d: m for k, m in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        terms = ", ".join(f"z^{k}: {m.triplets()}" for k, m in self.coeffs.items())
        return f"LaurentMatrix(n={self.n}, {{{terms}}})"

    def to_json(self) -> dict:
        return {"n": self.n, "coeffs": {str(k): m.to_rows() for k, m in self.coeffs.items()}}

    @classmethod
    def from_json(cls, data: dict) -> "LaurentMatrix":
        n = data["n"]
        coeffs = {int(k): IntMatrix.from_rows(rows) for k, rows in data["coeffs"].items()}
        return cls(n, coeffs)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def lmul(a: LaurentMatrix, b: LaurentMatrix) -> LaurentMatrix:
    """Cauchy product of coefficient sequences."""
    if a.n != b.n:
        raise DimMismatch(f"{a.n} != {b.n}")
    out: dict[int, IntMatrix] = {}
    for i, ma in a.coeffs.items():
        for j, mb in b.coeffs.items():
            p = ma @ mb
            out[i + j] = out[i + j] + p if i + j in out else p
    return LaurentMatrix(a.n, out)


def lpow(a: LaurentMatrix, k: int) -> LaurentMatrix:
    if k < 1:
        raise ValueError(f"exponent must be >= 1, got {k}")
    result = a
    for _ in range(k - 1):
        result = lmul(result, a)
    return result


def omega(n: int) -> LaurentMatrix:
    """Ones on the superdiagonal and z in the lower-left corner."""
    sup = IntMatrix(n, {i: {i + 1: 1} for i in range(n - 1)})
    corner = IntMatrix(n, {n - 1: {0: 1}})
    return LaurentMatrix(n, {0: sup, 1: corner})


def omega_inv(n: int) -> LaurentMatrix:
    """Inverse of ``omega(n)``: z^{-1} in the upper-right corner plus ones on
    the subdiagonal (E_1 z^{-1} + N_1 for n >= 2)."""
    corner = IntMatrix(n, {0: {n - 1: 1}})
    sub = IntMatrix(n, {i + 1: {i: 1} for i in range(n - 1)})
    return LaurentMatrix(n, {-1: corner, 0: sub})
