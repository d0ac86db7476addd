"""Builders for friendship digraphs and the matching machinery behind them.

Two constructions are provided.  fancy_wheel builds the hub-plus-cycles
family directly.  digraph_from_sbibd realizes a k-regular friendship
digraph from a symmetric (k*k-k+1, k, 1) design: pick one representative
outside each block, all distinct (a system of distinct representatives
of the block complements, found as a perfect bipartite matching), then
point every block at its representative.

All traversal orders are fixed (blocks ascending, candidate vertices
ascending) so outputs are reproducible; an optional seed shuffles the
candidate order to sample alternative representative systems.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .designs import Design, validate_sbibd
from .digraph import Digraph
from .errors import BadCycleLength, HallViolation, NotSbibd, TooLarge

_EXHAUSTIVE_HALL_LIMIT = 20


@dataclass(frozen=True)
class Matching:
    """Bipartite matching as (left, right) pairs, each side used at most once."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class Sdr:
    """Representative vertex per block index; pairwise distinct, outside the block."""

    rep: tuple[int, ...]


def fancy_wheel(cycle_lengths) -> Digraph:
    """Hub-and-cycles friendship digraph.

    Vertex 0 is the hub, joined to every other vertex in both
    directions.  The remaining vertices form consecutive directed
    cycles of the given lengths, each oriented i -> i+1 with wraparound.
    Cycle length 1 would force a loop, so every length must be >= 2.
    """
    lengths = list(cycle_lengths)
    if not lengths:
        raise BadCycleLength("at least one cycle is required")
    for length in lengths:
        if not isinstance(length, int) or isinstance(length, bool) or length < 2:
            raise BadCycleLength(f"cycle length {length!r} is not an integer >= 2")
    n = 1 + sum(lengths)
    d = Digraph(n)
    for v in range(1, n):
        d.add_arc(0, v)
        d.add_arc(v, 0)
    start = 1
    for length in lengths:
        for i in range(length):
            d.add_arc(start + i, start + (i + 1) % length)
        start += length
    return d


def _kuhn(adjacency: list[list[int]], right_count: int) -> tuple[list[int], list[int]]:
    """Augmenting-path maximum matching; deterministic for fixed adjacency order."""
    match_left = [-1] * len(adjacency)
    match_right = [-1] * right_count

    def augment(left: int, seen: list[bool]) -> bool:
        for r in adjacency[left]:
            if not seen[r]:
                seen[r] = True
                if match_right[r] == -1 or augment(match_right[r], seen):
                    match_right[r] = left
                    match_left[left] = r
                    return True
        return False

    for left in range(len(adjacency)):
        augment(left, [False] * right_count)
    return match_left, match_right


def _alternating_forest(
    adjacency: list[list[int]], match_left: list[int], match_right: list[int], roots
) -> list[int]:
    """Left vertices reachable from the given unmatched roots by alternating paths."""
    visited_left = set(roots)
    visited_right: set[int] = set()
    frontier = list(roots)
    while frontier:
        nxt = []
        for left in frontier:
            for r in adjacency[left]:
                if r not in visited_right:
                    visited_right.add(r)
                    partner = match_right[r]
                    if partner != -1 and partner not in visited_left:
                        visited_left.add(partner)
                        nxt.append(partner)
        frontier = nxt
    return sorted(visited_left)


def bipartite_max_matching(left_count: int, right_count: int, edges) -> Matching:
    """Maximum matching of the bipartite graph given as (left, right) edges."""
    adjacency: list[list[int]] = [[] for _ in range(left_count)]
    for left, right in sorted(set(edges)):
        if not 0 <= left < left_count or not 0 <= right < right_count:
            raise ValueError(f"edge ({left}, {right}) outside the vertex ranges")
        adjacency[left].append(right)
    match_left, _ = _kuhn(adjacency, right_count)
    pairs = tuple(
        (left, match_left[left]) for left in range(left_count) if match_left[left] != -1
    )
    return Matching(pairs=pairs)


def _complement_adjacency(design: Design, seed=None) -> list[list[int]]:
    adjacency = []
    for block in design.blocks:
        inside = set(block)
        candidates = [x for x in range(design.v) if x not in inside]
        adjacency.append(candidates)
    if seed is not None:
        rng = random.Random(seed)
        for candidates in adjacency:
            rng.shuffle(candidates)
    return adjacency


def complement_sdr(design: Design, seed=None) -> Sdr:
    """One representative outside each block, all representatives distinct.

    Solved as a perfect matching between blocks and varieties with an
    edge (t, x) whenever x is not in block t.  Raises HallViolation with
    a deficient block family when no perfect matching exists.
    """
    adjacency = _complement_adjacency(design, seed)
    match_left, match_right = _kuhn(adjacency, design.v)
    unmatched = [t for t, r in enumerate(match_left) if r == -1]
    if unmatched:
        deficient = _alternating_forest(adjacency, match_left, match_right, unmatched)
        union = set()
        for t in deficient:
            union.update(adjacency[t])
        raise HallViolation(deficient_blocks=deficient, union_size=len(union))
    rep = tuple(match_left)
    assert len(set(rep)) == len(rep)
    assert all(rep[t] not in design.blocks[t] for t in range(design.b))
    return Sdr(rep=rep)


@dataclass(frozen=True)
class HallReport:
    """Outcome of checking Hall's condition on a design's block complements.

    Exhaustive mode scans every nonempty block subset S and records the
    minimum slack |union of complements| - |S| (negative slack means a
    violation).  When all blocks share one size k, the minimum slack is
    also broken out by subset size: singletons, sizes 2..k, sizes
    above k.  Matching mode certifies Hall's condition via a maximum
    matching instead (perfect matching iff the condition holds).
    """

    holds: bool
    mode: str  # "exhaustive" | "matching"
    min_slack: int | None = None
    argmin_subset: tuple[int, ...] | None = None
    case_min_slack: dict[str, int] | None = None
    matching_size: int | None = None
    deficient_blocks: tuple[int, ...] | None = None

    def to_json_dict(self) -> dict:
        return {
            "holds": self.holds,
            "mode": self.mode,
            "min_slack": self.min_slack,
            "argmin_subset": list(self.argmin_subset) if self.argmin_subset else None,
            "case_min_slack": self.case_min_slack,
            "matching_size": self.matching_size,
            "deficient_blocks": (
                list(self.deficient_blocks) if self.deficient_blocks is not None else None
            ),
        }


def check_hall_condition(design: Design, exhaustive: bool = False) -> HallReport:
    """Verify that the block complements admit distinct representatives."""
    if exhaustive:
        return _hall_exhaustive(design)
    return _hall_by_matching(design)


def _hall_by_matching(design: Design) -> HallReport:
    adjacency = _complement_adjacency(design)
    match_left, match_right = _kuhn(adjacency, design.v)
    size = sum(1 for r in match_left if r != -1)
    if size == design.b:
        return HallReport(holds=True, mode="matching", matching_size=size)
    first_unmatched = next(t for t, r in enumerate(match_left) if r == -1)
    deficient = _alternating_forest(adjacency, match_left, match_right, [first_unmatched])
    return HallReport(
        holds=False,
        mode="matching",
        matching_size=size,
        deficient_blocks=tuple(deficient),
    )


def _hall_exhaustive(design: Design) -> HallReport:
    b, v = design.b, design.v
    if v > _EXHAUSTIVE_HALL_LIMIT or b > _EXHAUSTIVE_HALL_LIMIT:
        raise TooLarge(
            f"exhaustive subset scan is capped at {_EXHAUSTIVE_HALL_LIMIT} blocks/varieties"
        )
    if b == 0:
        return HallReport(holds=True, mode="exhaustive", min_slack=0, argmin_subset=())
    full = (1 << v) - 1
    comp = [full & ~sum(1 << x for x in block) for block in design.blocks]

    sizes = {len(block) for block in design.blocks}
    k = sizes.pop() if len(sizes) == 1 else None

    # union[mask] built incrementally from mask with its lowest bit cleared
    union = [0] * (1 << b)
    min_slack = None
    argmin = 0
    case_min: dict[str, int] = {}
    first_violation = None
    for mask in range(1, 1 << b):
        low = mask & -mask
        union[mask] = union[mask ^ low] | comp[low.bit_length() - 1]
        slack = union[mask].bit_count() - mask.bit_count()
        if min_slack is None or slack < min_slack:
            min_slack = slack
            argmin = mask
        if slack < 0 and first_violation is None:
            first_violation = mask
        if k is not None:
            size = mask.bit_count()
            case = "size_1" if size == 1 else ("size_2_to_k" if size <= k else "size_gt_k")
            if case not in case_min or slack < case_min[case]:
                case_min[case] = slack

    def mask_to_subset(mask: int) -> tuple[int, ...]:
        return tuple(t for t in range(b) if (mask >> t) & 1)

    return HallReport(
        holds=min_slack >= 0,
        mode="exhaustive",
        min_slack=min_slack,
        argmin_subset=mask_to_subset(argmin),
        case_min_slack=case_min or None,
        deficient_blocks=(
            mask_to_subset(first_violation) if first_violation is not None else None
        ),
    )


def digraph_from_sbibd(design: Design, seed=None) -> Digraph:
    """Friendship digraph realizing a symmetric (k*k-k+1, k, 1) design.

    Arcs run from every variety in block t to the block's representative,
    so each pair of varieties, lying in exactly one common block, gains
    exactly one common out-neighbor.
    """
    if design.b != design.v or not design.blocks:
        raise NotSbibd(f"need as many blocks as varieties, got b={design.b}, v={design.v}")
    k = len(design.blocks[0])
    if k < 2:
        raise NotSbibd(f"block size {k} is too small (need k >= 2)")
    if design.v != k * k - k + 1:
        raise NotSbibd(f"order {design.v} does not match k*k-k+1 = {k * k - k + 1} for k={k}")
    report = validate_sbibd(design, k, 1)
    if not report.ok:
        failed = ", ".join(c.condition for c in report.failures())
        raise NotSbibd(f"design fails validation: {failed}")
    sdr = complement_sdr(design, seed)
    d = Digraph(design.v)
    for t, block in enumerate(design.blocks):
        for x in block:
            d.add_arc(x, sdr.rep[t])
    return d
