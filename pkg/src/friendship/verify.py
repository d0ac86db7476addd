"""Structural checks on digraphs and the friendship classification.

is_friendship decides the defining property: every pair of distinct
vertices has exactly one common out-neighbor.  The check_* functions
probe consequences that every friendship digraph must satisfy; they run
on arbitrary digraphs and report a witness when the probed statement
fails, which makes them useful both as theorems-in-action on verified
inputs and as quick rejection filters elsewhere.

classify sorts any digraph into exactly one of three verdicts:
not a friendship digraph (with a witness pair), a fancy wheel (hub plus
disjoint cycles), or a k-regular friendship digraph on k*k-k+1 vertices.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .digraph import Digraph
from .errors import InternalInvariantBroken, NotDisjointCycles

NOT_FRIENDSHIP = "not_friendship"
FANCY_WHEEL = "fancy_wheel"
REGULAR = "regular"


@dataclass(frozen=True)
class PropertyReport:
    """One named check on one digraph; witness present exactly on failure."""

    name: str
    holds: bool
    witness: dict | None = None

    def to_json_dict(self) -> dict:
        return {"property": self.name, "holds": self.holds, "witness": self.witness}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))


def is_friendship(d: Digraph) -> PropertyReport:
    """Every pair of distinct vertices shares exactly one out-neighbor.

    A single vertex has no pairs to constrain; that degenerate case is
    reported as a failure so the classification stays total.
    """
    if d.n == 1:
        return PropertyReport("friendship", False, {"reason": "degenerate", "n": 1})
    rows = [d.out_row(u) for u in range(d.n)]
    for u in range(d.n):
        for v in range(u + 1, d.n):
            count = (rows[u] & rows[v]).bit_count()
            if count != 1:
                return PropertyReport(
                    "friendship", False, {"pair": [u, v], "count": count}
                )
    return PropertyReport("friendship", True)


def check_min_outdegree(d: Digraph) -> PropertyReport:
    """Minimum out-degree is at least 2; witness is a minimum-degree vertex."""
    degrees = [d.out_degree(v) for v in range(d.n)]
    lowest = min(degrees)
    if lowest >= 2:
        return PropertyReport("min_outdegree", True)
    vertex = degrees.index(lowest)
    return PropertyReport(
        "min_outdegree", False, {"vertex": vertex, "out_degree": lowest}
    )


def check_degree_balance(d: Digraph) -> PropertyReport:
    """Out-degree equals in-degree at every vertex."""
    for v in range(d.n):
        outd, ind = d.out_degree(v), d.in_degree(v)
        if outd != ind:
            return PropertyReport(
                "degree_balance",
                False,
                {"vertex": v, "out_degree": outd, "in_degree": ind},
            )
    return PropertyReport("degree_balance", True)


def check_sum_identity(d: Digraph) -> PropertyReport:
    """Sum of (in-degree - 1) over each vertex's out-neighbors equals n - 1."""
    in_degrees = [d.in_degree(v) for v in range(d.n)]
    expected = d.n - 1
    for v in range(d.n):
        total = sum(in_degrees[u] - 1 for u in d.out_neighbors(v))
        if total != expected:
            return PropertyReport(
                "sum_identity", False, {"vertex": v, "sum": total, "expected": expected}
            )
    return PropertyReport("sum_identity", True)


def check_reversal_friendship(d: Digraph) -> PropertyReport:
    """The friendship property is invariant under reversing every arc."""
    forward = is_friendship(d)
    backward = is_friendship(d.reverse())
    if forward.holds == backward.holds:
        return PropertyReport("reversal_friendship", True)
    return PropertyReport(
        "reversal_friendship",
        False,
        {
            "forward_holds": forward.holds,
            "reverse_holds": backward.holds,
            "forward_witness": forward.witness,
            "reverse_witness": backward.witness,
        },
    )


def check_product_bound(d: Digraph) -> PropertyReport:
    """(in-degree(u) - 1) * (in-degree(v) - 1) <= n - 2 for every pair."""
    in_degrees = [d.in_degree(v) for v in range(d.n)]
    bound = d.n - 2
    for u in range(d.n):
        for v in range(u + 1, d.n):
            product = (in_degrees[u] - 1) * (in_degrees[v] - 1)
            if product > bound:
                return PropertyReport(
                    "product_bound",
                    False,
                    {"pair": [u, v], "product": product, "bound": bound},
                )
    return PropertyReport("product_bound", True)


def check_nonadjacent_degree_equality(d: Digraph) -> PropertyReport:
    """Pairs not joined in both directions have equal out-degrees.

    The condition applies whenever at least one of the two possible arcs
    between u and v is absent.
    """
    degrees = [d.out_degree(v) for v in range(d.n)]
    for u in range(d.n):
        for v in range(u + 1, d.n):
            if not (d.has_arc(u, v) and d.has_arc(v, u)) and degrees[u] != degrees[v]:
                return PropertyReport(
                    "nonadjacent_degree_equality",
                    False,
                    {"pair": [u, v], "out_degrees": [degrees[u], degrees[v]]},
                )
    return PropertyReport("nonadjacent_degree_equality", True)


# Consequence checks that must all hold on any friendship digraph.
CONSEQUENCE_CHECKS = (
    check_min_outdegree,
    check_degree_balance,
    check_sum_identity,
    check_reversal_friendship,
    check_product_bound,
    check_nonadjacent_degree_equality,
)


@dataclass(frozen=True)
class Classification:
    """Verdict for one digraph: fancy wheel, regular, or not friendship."""

    verdict: str
    hub: int | None = None
    cycle_lengths: tuple[int, ...] | None = None
    k: int | None = None
    witness: dict | None = None

    def to_json_dict(self) -> dict:
        out: dict = {"verdict": self.verdict}
        if self.verdict == FANCY_WHEEL:
            out["hub"] = self.hub
            out["cycle_lengths"] = list(self.cycle_lengths)
        elif self.verdict == REGULAR:
            out["k"] = self.k
        else:
            out["witness"] = self.witness
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))


def wheel_cycle_lengths(d: Digraph, hub: int) -> tuple[int, ...]:
    """Cycle lengths of d minus the hub, in discovery order.

    Each non-hub vertex must have exactly one non-hub out-neighbor and
    the successor walks must close into vertex-disjoint cycles;
    otherwise NotDisjointCycles is raised.
    """
    hub_bit = 1 << hub
    successor = {}
    for v in range(d.n):
        if v == hub:
            continue
        rest = d.out_row(v) & ~hub_bit
        if rest.bit_count() != 1:
            raise NotDisjointCycles(
                f"vertex {v} has {rest.bit_count()} non-hub out-neighbors, needs exactly 1"
            )
        successor[v] = rest.bit_length() - 1
    lengths = []
    visited: set[int] = set()
    for start in sorted(successor):
        if start in visited:
            continue
        walk = start
        length = 0
        while True:
            visited.add(walk)
            length += 1
            walk = successor[walk]
            if walk == start:
                break
            if walk in visited:
                raise NotDisjointCycles(
                    f"successor walk from {start} re-enters {walk} without closing"
                )
        lengths.append(length)
    return tuple(lengths)


def classify(d: Digraph) -> Classification:
    """Total classification of a digraph under the friendship dichotomy.

    Non-friendship inputs get a witness verdict.  Friendship inputs are
    a fancy wheel exactly when some vertex reaches all others (maximum
    out-degree n - 1); everything else is k-regular on k*k-k+1 vertices.
    Consequences guaranteed for friendship inputs are re-asserted and
    raise InternalInvariantBroken if violated, since their failure would
    falsify this implementation rather than the input.
    """
    report = is_friendship(d)
    if not report.holds:
        return Classification(verdict=NOT_FRIENDSHIP, witness=report.witness)

    n = d.n
    degrees = [d.out_degree(v) for v in range(n)]
    if max(degrees) == n - 1:
        hub = degrees.index(n - 1)
        full = ((1 << n) - 1) & ~(1 << hub)
        in_row = sum(1 << u for u in d.in_neighbors(hub))
        if d.out_row(hub) != full or in_row != full:
            raise InternalInvariantBroken(
                f"vertex {hub} has out-degree {n - 1} but is not joined both ways to all"
            )
        for v in range(n):
            if v != hub and degrees[v] != 2:
                raise InternalInvariantBroken(
                    f"non-hub vertex {v} has out-degree {degrees[v]}, expected 2"
                )
        try:
            lengths = wheel_cycle_lengths(d, hub)
        except NotDisjointCycles as exc:
            raise InternalInvariantBroken(
                f"hub removal did not leave disjoint cycles: {exc}"
            ) from exc
        return Classification(
            verdict=FANCY_WHEEL, hub=hub, cycle_lengths=tuple(sorted(lengths))
        )

    k = degrees[0]
    if any(deg != k for deg in degrees) or any(d.in_degree(v) != k for v in range(n)):
        raise InternalInvariantBroken("friendship digraph without a hub must be regular")
    if k < 2 or n != k * k - k + 1:
        raise InternalInvariantBroken(
            f"regular friendship digraph has k={k}, n={n}, expected n = k*k-k+1"
        )
    return Classification(verdict=REGULAR, k=k)
