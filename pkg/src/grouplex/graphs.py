"""Graphs on groups: power, enhanced power, commuting and generating graphs."""
from __future__ import annotations

from typing import Iterable, Sequence

from .complex import SimplicialComplex
from .errors import LabelMismatch
from .group import FiniteGroup, bits
from .subgroups import sub_is_cyclic

GRAPH_KINDS = ("power", "enhanced_power", "commuting", "generating")


class SimpleGraph:
    """Undirected loopless graph; ``rows[i]`` is the neighbour bitmask of vertex ``i``."""

    def __init__(self, labels: Sequence[str], edges: Iterable[tuple[int, int]] = ()):
        self.labels: tuple[str, ...] = tuple(labels)
        rows = [0] * len(self.labels)
        for i, j in edges:
            if i == j:
                raise ValueError("loops are not allowed")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        self.rows: tuple[int, ...] = tuple(rows)

    @classmethod
    def _from_rows(cls, labels, rows) -> "SimpleGraph":
        gr = cls.__new__(cls)
        gr.labels = tuple(labels)
        gr.rows = tuple(rows)
        return gr

    @classmethod
    def from_complex(cls, c: SimplicialComplex) -> "SimpleGraph":
        """The 1-skeleton of a complex as a graph."""
        return cls(c.labels, c.edges())

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"SimpleGraph({len(self)} vertices, {self.num_edges} edges)"

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, r in enumerate(self.rows) for j in bits(r) if j > i]

    def edge_labels(self) -> set[frozenset[str]]:
        return {frozenset((self.labels[i], self.labels[j])) for i, j in self.edges()}

    def is_complete(self) -> bool:
        n = len(self)
        return all(r.bit_count() == n - 1 for r in self.rows)

    def complement(self) -> "SimpleGraph":
        full = (1 << len(self)) - 1
        return self._from_rows(self.labels, [full & ~r & ~(1 << i) for i, r in enumerate(self.rows)])

    def delete_vertex(self, v: int) -> "SimpleGraph":
        def squeeze(r: int) -> int:
            low = r & ((1 << v) - 1)
            return low | (r >> (v + 1) << v)

        rows = [squeeze(r) for i, r in enumerate(self.rows) if i != v]
        return self._from_rows(self.labels[:v] + self.labels[v + 1:], rows)

    def issubgraph(self, other: "SimpleGraph") -> bool:
        """Edge-set inclusion on identical vertex labels."""
        _require_same_vertices(self, other)
        return self.edge_labels() <= other.edge_labels()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        _require_same_vertices(self, other)
        if self.labels == other.labels:
            return self.rows == other.rows
        return self.edge_labels() == other.edge_labels()

    __hash__ = None  # type: ignore[assignment]

    def to_json(self) -> dict:
        return {"vertices": list(self.labels), "edges": [list(e) for e in self.edges()]}

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {_dot_id(name)} {{"]
        for i, lab in enumerate(self.labels):
            lines.append(f"  {i} [label={_dot_id(lab)}];")
        for i, j in self.edges():
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _require_same_vertices(a: SimpleGraph, b: SimpleGraph) -> None:
    if sorted(a.labels) != sorted(b.labels) or len(set(a.labels)) != len(a.labels):
        raise LabelMismatch("graphs are on different (or non-unique) vertex labels")


def complement(gr: SimpleGraph) -> SimpleGraph:
    return gr.complement()


def delete_vertex(gr: SimpleGraph, v: int) -> SimpleGraph:
    return gr.delete_vertex(v)


def equals(a: SimpleGraph, b: SimpleGraph) -> bool:
    return a == b


def group_graph(g: FiniteGroup, kind: str) -> SimpleGraph:
    """Graph on all elements of ``g`` (identity included)."""
    n = g.order
    rows = [0] * n
    if kind == "power":
        cyc = [g.span(1 << x) for x in range(n)]
        for x in range(n):
            for y in range(x + 1, n):
                if cyc[y] >> x & 1 or cyc[x] >> y & 1:
                    rows[x] |= 1 << y
                    rows[y] |= 1 << x
    elif kind == "enhanced_power":
        for x in range(n):
            for y in range(x + 1, n):
                if sub_is_cyclic(g, g.span(1 << x | 1 << y)):
                    rows[x] |= 1 << y
                    rows[y] |= 1 << x
    elif kind == "commuting":
        t = g.table
        sym = (t == t.T)
        for x in range(n):
            for y in range(x + 1, n):
                if sym[x, y]:
                    rows[x] |= 1 << y
                    rows[y] |= 1 << x
    elif kind == "generating":
        full = g.full_mask
        for x in range(n):
            for y in range(x + 1, n):
                if g.span(1 << x | 1 << y) == full:
                    rows[x] |= 1 << y
                    rows[y] |= 1 << x
    else:
        raise ValueError(f"unknown graph kind {kind!r}; expected one of {GRAPH_KINDS}")
    return SimpleGraph._from_rows(g.labels, rows)


def power_equals_enhanced(g: FiniteGroup) -> bool:
    return group_graph(g, "power") == group_graph(g, "enhanced_power")
