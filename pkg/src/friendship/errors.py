"""Exception types shared across the toolkit.

Every error a caller can reasonably trigger has its own class, so tests
and the CLI can distinguish bad input from genuine bugs.  Errors that
can only arise from a broken invariant inside this package raise
InternalInvariantBroken instead.
"""


class ToolkitError(Exception):
    """Base class for all errors raised by this package."""


class InvalidOrder(ToolkitError):
    """Digraph order outside the accepted range (n must be >= 1)."""


class BadVertex(ToolkitError):
    """Vertex index outside [0, n)."""


class LoopRejected(ToolkitError):
    """Arc (v, v) requested; loops are not representable."""


class DuplicateArc(ToolkitError):
    """Arc already present; re-insertion is treated as a caller bug."""


class SameVertex(ToolkitError):
    """Pairwise query called with u == v."""


class ParseError(ToolkitError):
    """Serialized digraph or design text does not match the schema."""


class NotPrime(ToolkitError):
    """Field characteristic is not a prime number."""


class BadDegree(ToolkitError):
    """Field extension degree must be at least 1."""


class DivisionByZero(ToolkitError):
    """Multiplicative inverse of the zero field element requested."""


class FieldMismatch(ToolkitError):
    """Arithmetic attempted between elements of different fields."""


class NotPrimePower(ToolkitError):
    """Projective plane order is not a prime power."""


class BadCycleLength(ToolkitError):
    """Wheel cycle lengths must all be integers >= 2."""


class NotSbibd(ToolkitError):
    """Design does not validate as a symmetric (k*k-k+1, k, 1) design."""


class HallViolation(ToolkitError):
    """No system of distinct representatives exists.

    Carries a deficient family of block indices whose complements union
    to fewer vertices than there are blocks in the family.
    """

    def __init__(self, deficient_blocks, union_size):
        self.deficient_blocks = tuple(deficient_blocks)
        self.union_size = union_size
        super().__init__(
            f"no SDR: blocks {list(self.deficient_blocks)} have only "
            f"{union_size} candidate representatives between them"
        )


class TooLarge(ToolkitError):
    """Instance exceeds the size cap of an exhaustive procedure."""


class NotDisjointCycles(ToolkitError):
    """Hub removal does not leave a vertex-disjoint union of directed cycles."""


class InternalInvariantBroken(ToolkitError):
    """A consequence guaranteed by the theory failed; implementation bug."""
