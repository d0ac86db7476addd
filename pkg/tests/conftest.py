import pytest

from friendship import Design, Digraph, digraph_from_sbibd

# The classical (7,3,1) design: lines of the smallest projective plane.
FANO_BLOCKS = (
    (0, 1, 2),
    (0, 3, 4),
    (0, 5, 6),
    (1, 3, 5),
    (1, 4, 6),
    (2, 3, 6),
    (2, 4, 5),
)

TRIANGLE_BLOCKS = ((0, 1), (1, 2), (0, 2))


def circulant(n: int, offsets) -> Digraph:
    """Digraph with arcs (i, i+s mod n) for each offset s."""
    d = Digraph(n)
    for i in range(n):
        for s in offsets:
            d.add_arc(i, (i + s) % n)
    return d


def bidirected_triangle() -> Digraph:
    return Digraph.from_arcs(3, [(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)])


@pytest.fixture(scope="session")
def fano_design() -> Design:
    return Design(7, FANO_BLOCKS)


@pytest.fixture(scope="session")
def triangle_design() -> Design:
    return Design(3, TRIANGLE_BLOCKS)


@pytest.fixture(scope="session")
def fano_digraph(fano_design) -> Digraph:
    return digraph_from_sbibd(fano_design)
