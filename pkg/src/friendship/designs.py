"""Block designs: validation, projective-plane generation, digraph extraction.

A Design is a variety count v plus a sequence of blocks (sorted integer
tuples).  Nothing about the type forces design-theoretic balance;
validate_sbibd checks the symmetric (v, k, lambda) conditions explicitly
and reports witnesses for whichever condition fails.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .digraph import Digraph
from .errors import NotPrimePower, ParseError
from .gf import make_field


@dataclass(frozen=True)
class Design:
    """Variety set {0..v-1} plus a family of blocks.

    Blocks are normalized to sorted tuples; duplicate varieties inside a
    block are rejected.  Repeated blocks across the family are allowed
    (validation will refute them when lambda = 1).
    """

    v: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not isinstance(self.v, int) or isinstance(self.v, bool) or self.v < 1:
            raise ValueError(f"variety count must be an integer >= 1, got {self.v!r}")
        norm = []
        for t, block in enumerate(self.blocks):
            block = tuple(sorted(block))
            for x in block:
                if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < self.v:
                    raise ValueError(f"block {t} contains {x!r}, outside [0, {self.v})")
            if len(set(block)) != len(block):
                raise ValueError(f"block {t} repeats a variety: {block}")
            norm.append(block)
        object.__setattr__(self, "blocks", tuple(norm))

    @property
    def b(self) -> int:
        return len(self.blocks)

    def to_json(self) -> str:
        payload = {"v": self.v, "blocks": [list(block) for block in self.blocks]}
        return json.dumps(payload, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> Design:
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        if not isinstance(payload, dict) or set(payload) != {"v", "blocks"}:
            raise ParseError('design JSON must be an object with exactly "v" and "blocks"')
        v, blocks = payload["v"], payload["blocks"]
        if not isinstance(v, int) or isinstance(v, bool):
            raise ParseError('"v" must be an integer')
        if not isinstance(blocks, list) or any(not isinstance(bl, list) for bl in blocks):
            raise ParseError('"blocks" must be a list of lists')
        for bl in blocks:
            if any(not isinstance(x, int) or isinstance(x, bool) for x in bl):
                raise ParseError(f"block {bl!r} contains a non-integer")
        try:
            return cls(v, tuple(tuple(bl) for bl in blocks))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc


@dataclass(frozen=True)
class ConditionCheck:
    """Outcome of one symmetric-design condition, with a witness on failure."""

    condition: str
    holds: bool
    witness: dict | None = None

    def to_json_dict(self) -> dict:
        return {"condition": self.condition, "holds": self.holds, "witness": self.witness}


@dataclass(frozen=True)
class ValidationReport:
    """Per-condition results of a symmetric (v, k, lambda) design check."""

    v: int
    k: int
    lam: int
    checks: tuple[ConditionCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.checks)

    def failures(self) -> list[ConditionCheck]:
        return [c for c in self.checks if not c.holds]

    def to_json_dict(self) -> dict:
        return {
            "v": self.v,
            "k": self.k,
            "lambda": self.lam,
            "ok": self.ok,
            "checks": [c.to_json_dict() for c in self.checks],
        }


def validate_sbibd(design: Design, k: int, lam: int) -> ValidationReport:
    """Check the four symmetric design conditions, refuting with witnesses.

    Conditions: block count equals variety count, every block has size k,
    every variety lies in exactly k blocks, every unordered pair of
    varieties lies in exactly lam blocks.
    """
    v, blocks = design.v, design.blocks
    checks = []

    b = len(blocks)
    checks.append(
        ConditionCheck("block-count", b == v, None if b == v else {"b": b, "v": v})
    )

    size_witness = None
    for t, block in enumerate(blocks):
        if len(block) != k:
            size_witness = {"block": t, "size": len(block)}
            break
    checks.append(ConditionCheck("block-size", size_witness is None, size_witness))

    replication = [0] * v
    for block in blocks:
        for x in block:
            replication[x] += 1
    rep_witness = None
    for x in range(v):
        if replication[x] != k:
            rep_witness = {"variety": x, "count": replication[x]}
            break
    checks.append(ConditionCheck("replication", rep_witness is None, rep_witness))

    pair_count: dict[tuple[int, int], int] = {}
    for block in blocks:
        for pair in combinations(block, 2):
            pair_count[pair] = pair_count.get(pair, 0) + 1
    pair_witness = None
    for pair in combinations(range(v), 2):
        c = pair_count.get(pair, 0)
        if c != lam:
            pair_witness = {"pair": list(pair), "count": c}
            break
    checks.append(ConditionCheck("pair-balance", pair_witness is None, pair_witness))

    return ValidationReport(v=v, k=k, lam=lam, checks=tuple(checks))


def _prime_power(q: int) -> tuple[int, int]:
    """Factor q as p^m with p prime, or raise NotPrimePower."""
    if not isinstance(q, int) or isinstance(q, bool) or q < 2:
        raise NotPrimePower(f"plane order must be an integer >= 2, got {q!r}")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return q, 1  # q itself is prime
    m = 0
    rest = q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, m


def projective_plane(q: int) -> Design:
    """The point-line incidence design of the plane of prime-power order q.

    Points are nonzero coordinate triples over GF(q), scaled so the first
    nonzero coordinate is 1, sorted lexicographically and indexed
    0..q*q+q.  Lines use the same normalized triples; block t collects
    the points orthogonal to line t.  The result is a
    (q*q+q+1, q+1, 1) symmetric design.
    """
    p, m = _prime_power(q)
    field = make_field(p, m)

    # Normalized representatives in lexicographic order on element
    # indices: (0,0,1) < (0,1,z) < (1,y,z).  Index 0 is the zero
    # element, index 1 the one element.
    triples = [(0, 0, 1)]
    triples += [(0, 1, z) for z in range(q)]
    triples += [(1, y, z) for y in range(q) for z in range(q)]

    mul = field.mul_index
    add = field.add_index
    blocks = []
    for a0, a1, a2 in triples:
        block = [
            j
            for j, (x0, x1, x2) in enumerate(triples)
            if add(add(mul(a0, x0), mul(a1, x1)), mul(a2, x2)) == 0
        ]
        blocks.append(tuple(block))
    return Design(v=len(triples), blocks=tuple(blocks))


def design_from_digraph(d: Digraph) -> Design:
    """Design with the digraph's in-neighborhoods as blocks (block t = N-in(t))."""
    blocks = tuple(tuple(sorted(d.in_neighbors(t))) for t in range(d.n))
    return Design(v=d.n, blocks=blocks)
