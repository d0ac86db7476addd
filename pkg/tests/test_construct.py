from collections import Counter
from itertools import combinations

import pytest

from friendship import (
    Design,
    bipartite_max_matching,
    check_hall_condition,
    complement_sdr,
    design_from_digraph,
    digraph_from_sbibd,
    fancy_wheel,
    is_friendship,
    is_isomorphic,
    projective_plane,
)
from friendship.errors import BadCycleLength, HallViolation, NotSbibd, TooLarge

from .conftest import bidirected_triangle


def test_wheel_shape_order_ten():
    d = fancy_wheel([4, 3, 2])
    assert d.n == 10
    assert d.out_neighbors(0) == set(range(1, 10))
    assert d.in_neighbors(0) == set(range(1, 10))
    rim_arcs = {(u, v) for u, v in d.arcs() if 0 not in (u, v)}
    assert rim_arcs == {
        (1, 2), (2, 3), (3, 4), (4, 1),
        (5, 6), (6, 7), (7, 5),
        (8, 9), (9, 8),
    }
    assert is_friendship(d).holds


def test_wheel_with_single_two_cycle_is_the_triangle():
    assert is_isomorphic(fancy_wheel([2]), bidirected_triangle())


@pytest.mark.parametrize("lengths", [[1], [], [0], [3, 1], [-2], [2.5], [2, True]])
def test_bad_cycle_lengths_rejected(lengths):
    with pytest.raises(BadCycleLength):
        fancy_wheel(lengths)


def test_all_wheels_up_to_order_nine_are_friendship():
    def partitions(total, largest):
        if total == 0:
            yield []
            return
        for part in range(min(largest, total), 1, -1):
            if total - part == 0 or total - part >= 2:
                for rest in partitions(total - part, part):
                    yield [part] + rest

    for rim in range(2, 9):
        for lengths in partitions(rim, rim):
            assert is_friendship(fancy_wheel(lengths)).holds


def test_matching_complete_bipartite():
    edges = [(l, r) for l in range(3) for r in range(3)]
    m = bipartite_max_matching(3, 3, edges)
    assert m.size == 3


def test_matching_shared_right_vertex():
    assert bipartite_max_matching(2, 1, [(0, 0), (1, 0)]).size == 1


def test_matching_star_with_isolated_lefts():
    m = bipartite_max_matching(3, 3, [(0, 0), (0, 1), (0, 2)])
    assert m.size == 1
    assert m.pairs == ((0, 0),)


def test_matching_is_deterministic():
    edges = [(0, 1), (0, 0), (1, 1), (2, 0), (1, 2)]
    first = bipartite_max_matching(3, 3, edges)
    second = bipartite_max_matching(3, 3, list(reversed(edges)))
    assert first.pairs == second.pairs


def test_matching_rejects_out_of_range_edges():
    with pytest.raises(ValueError):
        bipartite_max_matching(2, 2, [(0, 5)])


def test_fano_complement_sdr(fano_design):
    sdr = complement_sdr(fano_design)
    assert len(set(sdr.rep)) == 7
    for t, block in enumerate(fano_design.blocks):
        assert sdr.rep[t] not in block


def test_triangle_sdr_is_forced(triangle_design):
    # complements are the singletons {2}, {0}, {1}
    assert complement_sdr(triangle_design).rep == (2, 0, 1)


def test_identical_full_blocks_violate_hall():
    design = Design(2, ((0, 1), (0, 1)))
    with pytest.raises(HallViolation) as excinfo:
        complement_sdr(design)
    assert excinfo.value.deficient_blocks == (0, 1)
    assert excinfo.value.union_size == 0


def _subset_scan(design):
    """Oracle: min slack per subset-size bucket by direct set arithmetic."""
    everything = set(range(design.v))
    complements = [everything - set(block) for block in design.blocks]
    k = len(design.blocks[0])
    best = {}
    overall = None
    for size in range(1, design.b + 1):
        bucket = "size_1" if size == 1 else ("size_2_to_k" if size <= k else "size_gt_k")
        for subset in combinations(range(design.b), size):
            union = set().union(*(complements[t] for t in subset))
            slack = len(union) - size
            if bucket not in best or slack < best[bucket]:
                best[bucket] = slack
            if overall is None or slack < overall:
                overall = slack
    return overall, best


def test_exhaustive_hall_on_fano(fano_design):
    report = check_hall_condition(fano_design, exhaustive=True)
    assert report.holds
    expected_overall, expected_cases = _subset_scan(fano_design)
    assert report.min_slack == expected_overall
    assert report.case_min_slack == expected_cases
    # singleton slack is (v - k) - 1 = (k-1)^2 - 1 = 3 for k = 3
    assert report.case_min_slack["size_1"] == 3


def test_exhaustive_hall_on_triangle(triangle_design):
    report = check_hall_condition(triangle_design, exhaustive=True)
    assert report.holds
    assert report.min_slack == 0
    assert report.argmin_subset == (0,)


def test_exhaustive_hall_failure_witnesses():
    report = check_hall_condition(Design(2, ((0, 1), (0, 1))), exhaustive=True)
    assert not report.holds
    assert report.min_slack == -2
    assert report.argmin_subset == (0, 1)
    assert report.deficient_blocks == (0,)  # first violating subset


def test_matching_hall_failure_witness():
    report = check_hall_condition(Design(2, ((0, 1), (0, 1))))
    assert not report.holds
    assert report.mode == "matching"
    assert report.matching_size == 0
    assert report.deficient_blocks == (0,)


def test_matching_hall_on_fano(fano_design):
    report = check_hall_condition(fano_design)
    assert report.holds
    assert report.matching_size == 7


def test_exhaustive_hall_too_large():
    design = Design(21, tuple((t,) for t in range(21)))
    with pytest.raises(TooLarge):
        check_hall_condition(design, exhaustive=True)


def test_fano_digraph_is_three_regular_friendship(fano_digraph):
    assert fano_digraph.n == 7
    assert all(fano_digraph.out_degree(v) == 3 for v in range(7))
    assert all(fano_digraph.in_degree(v) == 3 for v in range(7))
    assert is_friendship(fano_digraph).holds


def test_triangle_design_builds_the_triangle(triangle_design):
    assert digraph_from_sbibd(triangle_design) == bidirected_triangle()


def test_plane_of_order_three_builds_friendship_digraph():
    d = digraph_from_sbibd(projective_plane(3))
    assert d.n == 13
    assert all(d.out_degree(v) == 4 for v in range(13))
    assert is_friendship(d).holds


def test_invalid_design_rejected():
    from .conftest import FANO_BLOCKS

    blocks = list(FANO_BLOCKS)
    blocks[3] = (0, 1, 3)
    with pytest.raises(NotSbibd):
        digraph_from_sbibd(Design(7, tuple(blocks)))


def test_valid_design_with_wrong_order_rejected(fano_design):
    # complements of the Fano blocks form a (7,4,2) design; k=4 needs order 13
    complements = tuple(
        tuple(sorted(set(range(7)) - set(block))) for block in fano_design.blocks
    )
    with pytest.raises(NotSbibd):
        digraph_from_sbibd(Design(7, complements))


def test_block_count_mismatch_rejected():
    with pytest.raises(NotSbibd):
        digraph_from_sbibd(Design(3, ((0, 1), (1, 2))))


@pytest.mark.parametrize("seed", [0, 1, 2, 3, 4])
def test_seeded_construction_still_friendship(fano_design, seed):
    d = digraph_from_sbibd(fano_design, seed=seed)
    assert is_friendship(d).holds
    assert all(d.out_degree(v) == 3 for v in range(7))
    sdr = complement_sdr(fano_design, seed=seed)
    assert len(set(sdr.rep)) == 7
    assert all(sdr.rep[t] not in fano_design.blocks[t] for t in range(7))


def test_seeded_construction_is_reproducible(fano_design):
    assert digraph_from_sbibd(fano_design, seed=9) == digraph_from_sbibd(fano_design, seed=9)


@pytest.mark.parametrize("q", [2, 3])
def test_construction_round_trips_through_extraction(q):
    plane = projective_plane(q)
    rebuilt = design_from_digraph(digraph_from_sbibd(plane))
    assert Counter(rebuilt.blocks) == Counter(plane.blocks)
