"""gl_n-graphs: weighted arrows on ordered vertices embedded in the positive
quadrant, the matrix <-> graph correspondence, structural predicates, the
canonical graph of N_r and graft transformations.

A vertex ``v`` sits at ``(x, y)`` = (position, level), both >= 1.  An arrow
``u -> v`` of weight ``w`` corresponds to matrix entry ``(ord(v), ord(u)) = w``.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Iterator, Mapping

from .errors import GraftPrecondition, InvalidGraph, InvalidPosition
from .matrices import IntMatrix
from .partitions import Partition, check_shape

Vertex = Hashable
Point = tuple[int, int]


class GlnGraph:
    """A gl_n-graph together with its embedding.

    Construction validates the ordinal bijection, the injectivity of the
    embedding and the arrow weights.  Apart from the in-place graft kernel
    used by the completion engine, instances are not mutated.
    """

    def __init__(
        self,
        ordinal: Mapping[Vertex, int],
        embed: Mapping[Vertex, Point],
        arrows: Iterable[tuple[Vertex, Vertex, int]] | Mapping[tuple[Vertex, Vertex], int] = (),
    ):
        n = len(ordinal)
        if n < 1:
            raise InvalidGraph("graph needs at least one vertex")
        if sorted(ordinal.values()) != list(range(1, n + 1)):
            raise InvalidGraph("ordinal function is not a bijection onto [1, n]")
        if set(embed) != set(ordinal):
            raise InvalidGraph("embedding and ordinal function have different vertex sets")
        at: dict[Point, Vertex] = {}
        for v, (x, y) in embed.items():
            if x < 1 or y < 1:
                raise InvalidGraph(f"vertex {v!r} embedded at non-positive point {(x, y)}")
            if (x, y) in at:
                raise InvalidGraph(f"embedding is not injective at {(x, y)}")
            at[(x, y)] = v
        if isinstance(arrows, Mapping):
            arrows = [(u, v, w) for (u, v), w in arrows.items()]
        out: dict[Vertex, dict[Vertex, int]] = {v: {} for v in ordinal}
        inn: dict[Vertex, set] = {v: set() for v in ordinal}
        for u, v, w in arrows:
            if u not in out or v not in out:
                raise InvalidGraph(f"arrow {u!r} -> {v!r} has an unknown endpoint")
            if not w:
                raise InvalidGraph(f"arrow {u!r} -> {v!r} has zero weight")
            if v in out[u]:
                raise InvalidGraph(f"duplicate arrow {u!r} -> {v!r}")
            out[u][v] = w
            inn[v].add(u)
        height: dict[int, int] = {}
        for x, y in at:
            if y > height.get(x, 0):
                height[x] = y
        self.n = n
        self._ord = dict(ordinal)
        self._pos = {v: tuple(p) for v, p in embed.items()}
        self._at = at
        self._out = out
        self._in = inn
        self._height = height

    def copy(self) -> "GlnGraph":
        g = GlnGraph.__new__(GlnGraph)
        g.n = self.n
        g._ord = self._ord
        g._pos = dict(self._pos)
        g._at = dict(self._at)
        g._out = {v: dict(d) for v, d in self._out.items()}
        g._in = {v: set(s) for v, s in self._in.items()}
        g._height = dict(self._height)
        return g

    # -- accessors ----------------------------------------------------------

    @property
    def vertices(self) -> list[Vertex]:
        return sorted(self._ord, key=self._ord.__getitem__)

    def ord(self, v: Vertex) -> int:
        return self._ord[v]

    def position(self, v: Vertex) -> Point:
        return self._pos[v]

    def vertex_at(self, x: int, y: int) -> Vertex | None:
        return self._at.get((x, y))

    def ord_at(self, x: int, y: int) -> int:
        v = self._at.get((x, y))
        if v is None:
            raise InvalidPosition(f"no vertex at {(x, y)}")
        return self._ord[v]

    def domain(self) -> list[int]:
        return sorted(self._height)

    def in_domain(self, i: int) -> bool:
        return i in self._height

    def height(self, i: int) -> int:
        try:
            return self._height[i]
        except KeyError:
            raise InvalidPosition(f"position {i} is not in the domain") from None

    def column(self, i: int) -> list[Vertex]:
        """Vertices at position ``i``, bottom to top."""
        return [v for (x, y), v in sorted(self._at.items(), key=lambda kv: kv[0][1]) if x == i]

    def arrows(self) -> Iterator[tuple[Vertex, Vertex, int]]:
        for u in self.vertices:
            for v, w in sorted(self._out[u].items(), key=lambda kv: self._ord[kv[0]]):
                yield u, v, w

    def successors(self, v: Vertex) -> dict[Vertex, int]:
        return self._out[v]

    def predecessors(self, v: Vertex) -> set:
        return self._in[v]

    @property
    def arrow_count(self) -> int:
        return sum(len(d) for d in self._out.values())

    def matrix(self) -> IntMatrix:
        return matrix_of_graph(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GlnGraph):
            return NotImplemented
        return (self._ord == other._ord and self._pos == other._pos
                and self._out == other._out)

    def __repr__(self) -> str:
        return f"GlnGraph(n={self.n}, domain={self.domain()}, arrows={self.arrow_count})"


def graph_of_matrix(a: IntMatrix, embed: Mapping[Vertex, Point],
                    ordinal: Mapping[Vertex, int] | None = None) -> GlnGraph:
    """Graph with an arrow u -> v of weight a[ord(v), ord(u)] for every
    nonzero entry.  Without ``ordinal`` the vertices are the ordinals 1..n."""
    if ordinal is None:
        ordinal = {v: v for v in embed}
    if len(ordinal) != a.n:
        raise InvalidGraph(f"ordinal function has {len(ordinal)} vertices, matrix has dimension {a.n}")
    try:
        by_ord = {o: v for v, o in ordinal.items()}
        arrows = [(by_ord[j + 1], by_ord[i + 1], w) for i, j, w in a.entries()]
    except KeyError as exc:
        raise InvalidGraph("ordinal function is not a bijection onto [1, n]") from exc
    return GlnGraph(ordinal, embed, arrows)


def matrix_of_graph(g: GlnGraph) -> IntMatrix:
    rows: dict[int, dict[int, int]] = {}
    ordf = g._ord
    for u, succ in g._out.items():
        ou = ordf[u] - 1
        for v, w in succ.items():
            rows.setdefault(ordf[v] - 1, {})[ou] = w
    return IntMatrix._wrap(g.n, rows)


def canonical_nr_graph(n: int, r: int) -> GlnGraph:
    """The unique properly downward graph of N_r whose columns 1..r are
    downward paths with non-decreasing heights in {floor(n/r), ceil(n/r)} and
    whose vertices are numbered in type-writer order.  Vertices are labelled
    by their ordinals."""
    check_shape(n, r)
    q, rp = divmod(n, r)
    heights = [q] * (r - rp) + [q + 1] * rp
    embed: dict[int, Point] = {}
    o = 0
    for y in range(max(heights), 0, -1):
        for x in range(1, r + 1):
            if heights[x - 1] >= y:
                o += 1
                embed[o] = (x, y)
    at = {p: v for v, p in embed.items()}
    arrows = [(v, at[(x, y - 1)], 1) for v, (x, y) in embed.items() if y > 1]
    return GlnGraph({v: v for v in embed}, embed, arrows)


def heights(g: GlnGraph) -> Partition:
    """Part(g): the multiset of column heights."""
    return Partition(g._height.values())


# -- structural predicates ----------------------------------------------------

def is_downward(g: GlnGraph) -> bool:
    pos = g._pos
    return all(pos[u][1] > pos[v][1] for u, succ in g._out.items() for v in succ)


def is_properly_downward(g: GlnGraph) -> bool:
    pos, at = g._pos, g._at
    for u, succ in g._out.items():
        xu, yu = pos[u]
        for v in succ:
            xv, yv = pos[v]
            if yu <= yv:
                return False
            if yu == yv + 1 and xu > xv:
                return False
        if yu > 1:
            below = at.get((xu, yu - 1))
            if below is None or below not in succ:
                return False
    return True


def is_downward_path(g: GlnGraph, i: int) -> bool:
    """Column ``i`` is a downward path: each vertex has exactly the arrow to
    the vertex below it (if any) and exactly the arrow from the vertex above
    it (if any)."""
    if i not in g._height:
        raise InvalidPosition(f"position {i} is not in the domain")
    at = g._at
    for y in range(1, g._height[i] + 1):
        v = at.get((i, y))
        if v is None:
            continue
        below = at.get((i, y - 1))
        above = at.get((i, y + 1))
        succ = g._out[v]
        if below is None:
            if succ:
                return False
        elif len(succ) != 1 or below not in succ:
            return False
        pred = g._in[v]
        if above is None:
            if pred:
                return False
        elif len(pred) != 1 or above not in pred:
            return False
    return True


def typewriter_key(g: GlnGraph, v: Vertex) -> tuple[int, int]:
    x, y = g._pos[v]
    return (-y, x)


def is_typewriter_ordered(g: GlnGraph, vertices: Iterable[Vertex] | None = None) -> bool:
    """Ordinal order on ``vertices`` agrees with reading levels top to bottom
    and positions left to right."""
    vs = list(g._ord if vertices is None else vertices)
    by_ord = sorted(vs, key=g._ord.__getitem__)
    keys = [typewriter_key(g, v) for v in by_ord]
    return all(a < b for a, b in zip(keys, keys[1:]))


def vertices_in_window(g: GlnGraph, lo: int, hi: int) -> list[Vertex]:
    return [v for v, (x, _) in g._pos.items() if lo <= x <= hi]


# -- grafts -------------------------------------------------------------------

def _check_graft(g: GlnGraph, t: int, s: int, m: int, full: bool) -> None:
    if t not in g._height:
        raise GraftPrecondition("t-not-in-domain", f"t={t}")
    if s not in g._height:
        raise GraftPrecondition("s-not-in-domain", f"s={s}")
    if not t < s:
        raise GraftPrecondition("t-not-less-than-s", f"t={t}, s={s}")
    if not 0 < m <= g._height[s]:
        raise GraftPrecondition("m-out-of-range", f"m={m}, h_s={g._height[s]}")
    if full:
        if not is_downward_path(g, s):
            raise GraftPrecondition("not-downward-path", f"column {s}")
        if not is_properly_downward(g):
            raise GraftPrecondition("not-properly-downward")


def graft_inplace(g: GlnGraph, t: int, s: int, m: int, validate: bool = True) -> tuple[Vertex, Vertex]:
    """Graft ``m`` vertices of column ``s`` onto column ``t``, mutating ``g``.

    With ``validate`` false only the O(1) preconditions are checked; the
    caller vouches for proper downwardness and the downward-path condition.
    Returns the added arrow ``(source, target)``.
    """
    _check_graft(g, t, s, m, validate)
    at, pos = g._at, g._pos
    hs, ht = g._height[s], g._height[t]
    base = hs - m + 1
    src = at.get((s, base))
    tgt = at.get((t, ht))
    if src is None or tgt is None:
        raise GraftPrecondition("not-downward-path", f"column {s} or {t} is not contiguous")
    if tgt in g._out[src]:
        raise GraftPrecondition("not-downward-path", f"arrow {src!r} -> {tgt!r} already present")
    # step 1: the connecting arrow
    g._out[src][tgt] = 1
    g._in[tgt].add(src)
    # step 2: translate the top m vertices of s onto t
    moved = []
    for i in range(1, m + 1):
        v = at.pop((s, hs - m + i), None)
        if v is None:
            raise GraftPrecondition("not-downward-path", f"column {s} has a gap")
        moved.append((v, (t, ht + i)))
    for v, p in moved:
        pos[v] = p
        at[p] = v
    g._height[t] = ht + m
    new_hs = hs - m
    while new_hs > 0 and (s, new_hs) not in at:
        new_hs -= 1
    if new_hs:
        g._height[s] = new_hs
    else:
        del g._height[s]
    return src, tgt


def graft(g: GlnGraph, t: int, s: int, m: int) -> GlnGraph:
    """Return the result of grafting ``m`` vertices from column ``s`` (the
    stock) to column ``t`` (the scion).  ``g`` is left untouched.

    Requires ``g`` properly downward, ``t < s`` both in the domain, column
    ``s`` a downward path and ``0 < m <= h(s)``; otherwise raises
    GraftPrecondition naming the failed clause.
    """
    _check_graft(g, t, s, m, True)
    out = g.copy()
    graft_inplace(out, t, s, m, validate=False)
    return out


# -- export -------------------------------------------------------------------

def to_dot(g: GlnGraph, name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    for v in g.vertices:
        x, y = g._pos[v]
        lines.append(f'  {g._ord[v]} [label="{g._ord[v]}", pos="{x},{y - 1}!"];')
    for u, v, w in g.arrows():
        attr = "" if w == 1 else f' [label="{w}"]'
        lines.append(f"  {g._ord[u]} -> {g._ord[v]}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_tikz(g: GlnGraph) -> str:
    """TikZ picture in the style of the usual figures; the bottom level is
    drawn at y = 0."""
    lines = ["\\begin{tikzpicture}", " [inner sep=0.5mm, place/.style={circle, draw}]"]
    for v in sorted(g._ord, key=lambda v: (g._pos[v][0], g._pos[v][1])):
        x, y = g._pos[v]
        o = g._ord[v]
        lines.append(f"\\node ({o}) at ({x},{y - 1}) [place] {{\\tiny{{{o}}}}};")
    for u, v, w in g.arrows():
        lines.append(f"\\draw [thick,->] ({g._ord[u]}) -- ({g._ord[v]});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"
