"""Exhaustive enumeration of friendship digraphs by pruned backtracking.

Out-neighborhood rows are placed one vertex at a time.  Because a row
never changes once placed, the count of common out-neighbors of two
placed vertices is already final, so a candidate row survives only if
it meets every earlier row in exactly one bit.  Together with the
minimum out-degree bound (every friendship digraph has out-degree at
least 2 everywhere) this prunes on monotone conditions only, so the
enumeration is complete: it emits precisely the order-n digraphs in
which every vertex pair has one common out-neighbor.

Isomorphism handling uses a canonical form: the lexicographically
minimal row-major adjacency bit-string over all vertex relabelings.
Factorial cost caps that at order 8.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .digraph import Digraph
from .errors import InvalidOrder, TooLarge

FULL_SEARCH_LIMIT = 7
CANONICAL_LIMIT = 8


@dataclass(frozen=True)
class SearchConfig:
    """Parameters for one enumeration run.

    allow_large overrides the order cap on the backtracking engine;
    expect steep cost growth beyond it.  Canonical deduplication
    (modulo_iso) stays hard-capped regardless.
    """

    n: int
    max_results: int | None = None
    modulo_iso: bool = False
    allow_large: bool = False


def canonical_form(d: Digraph) -> int:
    """Minimal row-major adjacency encoding over all vertex relabelings."""
    n = d.n
    if n > CANONICAL_LIMIT:
        raise TooLarge(f"canonical form is capped at order {CANONICAL_LIMIT}, got {n}")
    rows = [d.out_row(u) for u in range(n)]
    best = None
    for perm in permutations(range(n)):
        value = 0
        for i in perm:
            row = rows[i]
            for j in perm:
                value = (value << 1) | ((row >> j) & 1)
        if best is None or value < best:
            best = value
    return best


def is_isomorphic(a: Digraph, b: Digraph) -> bool:
    """Whether some vertex bijection maps a's arc set onto b's."""
    if a.n > CANONICAL_LIMIT or b.n > CANONICAL_LIMIT:
        raise TooLarge(f"isomorphism testing is capped at order {CANONICAL_LIMIT}")
    if a.n != b.n or a.arc_count() != b.arc_count():
        return False
    degrees_a = sorted((a.out_degree(v), a.in_degree(v)) for v in range(a.n))
    degrees_b = sorted((b.out_degree(v), b.in_degree(v)) for v in range(b.n))
    if degrees_a != degrees_b:
        return False
    return canonical_form(a) == canonical_form(b)


def enumerate_friendship_digraphs(config: SearchConfig) -> list[Digraph]:
    """All order-n friendship digraphs, in ascending row-bitmask order.

    With modulo_iso, one representative per isomorphism class is kept
    (the first found).  max_results truncates the returned list.
    """
    n = config.n
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise InvalidOrder(f"search order must be an integer >= 2, got {n!r}")
    if n > FULL_SEARCH_LIMIT and not config.allow_large:
        raise TooLarge(
            f"full enumeration is capped at order {FULL_SEARCH_LIMIT}; "
            "pass allow_large to override"
        )
    if config.modulo_iso and n > CANONICAL_LIMIT:
        raise TooLarge(f"modulo_iso needs canonical forms, capped at order {CANONICAL_LIMIT}")

    # Minimum out-degree 2 holds in every friendship digraph, so rows
    # with fewer bits can be excluded from the start.
    candidates = [mask for mask in range(1 << n) if mask.bit_count() >= 2]
    results: list[Digraph] = []
    seen_forms: set[int] = set()
    rows = [0] * n
    cap = config.max_results

    def extend(depth: int, feasible: list[int]) -> bool:
        """Returns False once the result cap is reached, aborting the walk."""
        if depth == n:
            d = Digraph.from_rows(n, list(rows))
            if config.modulo_iso:
                form = canonical_form(d)
                if form in seen_forms:
                    return True
                seen_forms.add(form)
            results.append(d)
            return cap is None or len(results) < cap
        loop_bit = 1 << depth
        for candidate in feasible:
            if candidate & loop_bit:
                continue
            rows[depth] = candidate
            narrowed = [m for m in feasible if (m & candidate).bit_count() == 1]
            if not extend(depth + 1, narrowed):
                return False
        return True

    extend(0, candidates)
    return results
