"""Loopless simple digraph backed by integer bitmask rows.

Row u is an n-bit integer whose bit v is set exactly when the arc
(u, v) is present.  Keeping whole out-neighborhoods as machine integers
makes the hot operations of this package (pairwise intersections and
their cardinalities) a single AND plus a popcount.

Vertices are dense 0-based indices.  Loops and parallel arcs are
rejected at insertion time rather than normalized away, so constructor
bugs surface as errors instead of silently wrong graphs.
"""
from __future__ import annotations

import json

from .errors import (
    BadVertex,
    DuplicateArc,
    InvalidOrder,
    LoopRejected,
    ParseError,
    SameVertex,
)


class Digraph:
    """Simple digraph on vertices 0..n-1 with no loops or parallel arcs."""

    __slots__ = ("n", "_rows")

    def __init__(self, n: int):
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise InvalidOrder(f"order must be an integer >= 1, got {n!r}")
        self.n = n
        self._rows = [0] * n

    @classmethod
    def from_arcs(cls, n: int, arcs) -> Digraph:
        """Build a digraph of order n containing exactly the given arcs."""
        d = cls(n)
        for u, v in arcs:
            d.add_arc(u, v)
        return d

    @classmethod
    def from_rows(cls, n: int, rows) -> Digraph:
        """Build a digraph directly from out-neighborhood bitmasks."""
        d = cls(n)
        rows = list(rows)
        if len(rows) != n:
            raise InvalidOrder(f"expected {n} rows, got {len(rows)}")
        width = (1 << n) - 1
        for u, row in enumerate(rows):
            if row & ~width:
                raise BadVertex(f"row {u} has bits outside [0, {n})")
            if (row >> u) & 1:
                raise LoopRejected(f"row {u} contains the loop bit")
        d._rows = rows
        return d

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self.n:
            raise BadVertex(f"vertex {v!r} not in [0, {self.n})")

    def add_arc(self, u: int, v: int) -> None:
        """Insert arc (u, v); duplicates and loops are errors."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise LoopRejected(f"loop ({u}, {v}) rejected")
        bit = 1 << v
        if self._rows[u] & bit:
            raise DuplicateArc(f"arc ({u}, {v}) already present")
        self._rows[u] |= bit

    def has_arc(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self._rows[u] >> v) & 1)

    def out_row(self, u: int) -> int:
        """Out-neighborhood of u as a bitmask."""
        self._check_vertex(u)
        return self._rows[u]

    def out_neighbors(self, v: int) -> set[int]:
        self._check_vertex(v)
        return _bits_to_set(self._rows[v])

    def in_neighbors(self, v: int) -> set[int]:
        self._check_vertex(v)
        return {u for u in range(self.n) if (self._rows[u] >> v) & 1}

    def out_degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._rows[v].bit_count()

    def in_degree(self, v: int) -> int:
        self._check_vertex(v)
        return sum((self._rows[u] >> v) & 1 for u in range(self.n))

    def common_out_neighbors(self, u: int, v: int) -> set[int]:
        """Vertices receiving an arc from both u and v."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise SameVertex(f"common out-neighbors need two distinct vertices, got {u} twice")
        return _bits_to_set(self._rows[u] & self._rows[v])

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs in lexicographic order."""
        return [
            (u, v)
            for u in range(self.n)
            for v in range(self.n)
            if (self._rows[u] >> v) & 1
        ]

    def arc_count(self) -> int:
        return sum(row.bit_count() for row in self._rows)

    def reverse(self) -> Digraph:
        """Digraph with every arc direction flipped."""
        rev = Digraph(self.n)
        for u, row in enumerate(self._rows):
            bit = 1 << u
            v = 0
            while row:
                if row & 1:
                    rev._rows[v] |= bit
                row >>= 1
                v += 1
        return rev

    def copy(self) -> Digraph:
        d = Digraph(self.n)
        d._rows = list(self._rows)
        return d

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self._rows == other._rows

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arcs()})"

    def to_json(self) -> str:
        """Serialize as {"n":..,"arcs":[[u,v],..]} with arcs sorted."""
        payload = {"n": self.n, "arcs": [[u, v] for u, v in self.arcs()]}
        return json.dumps(payload, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> Digraph:
        """Parse the JSON schema produced by to_json."""
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        if not isinstance(payload, dict) or set(payload) != {"n", "arcs"}:
            raise ParseError('digraph JSON must be an object with exactly "n" and "arcs"')
        n = payload["n"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise ParseError('"n" must be an integer')
        arcs = payload["arcs"]
        if not isinstance(arcs, list):
            raise ParseError('"arcs" must be a list of [u, v] pairs')
        d = cls(n)
        for arc in arcs:
            if (
                not isinstance(arc, list)
                or len(arc) != 2
                or any(not isinstance(x, int) or isinstance(x, bool) for x in arc)
            ):
                raise ParseError(f"arc {arc!r} is not a pair of integers")
            d.add_arc(arc[0], arc[1])
        return d

    def to_dot(self) -> str:
        """Render as a DOT digraph document, vertices as integers."""
        lines = ["digraph G {"]
        lines.extend(f"  {v};" for v in range(self.n))
        lines.extend(f"  {u} -> {v};" for u, v in self.arcs())
        lines.append("}")
        return "\n".join(lines) + "\n"


def _bits_to_set(mask: int) -> set[int]:
    out = set()
    v = 0
    while mask:
        if mask & 1:
            out.add(v)
        mask >>= 1
        v += 1
    return out
