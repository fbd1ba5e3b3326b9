from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings

from diagmon.core import (
    DiagramPartition,
    EquivalenceRelation,
    MonoidFamily,
    decompose_irreducible,
    family_check,
    format_diagram,
    identity,
    lambda_graph,
    make_partition,
    multiply,
    parse_diagram,
    profile,
)
from diagmon.errors import (
    CoverageError,
    DimensionMismatchError,
    EmptyBlockError,
    NotDecomposableError,
    NotPartialBrauerError,
    OverlapError,
)

from .conftest import diagram_pairs, diagrams
from .oracles import bfs_components, naive_join, naive_multiply, set_partitions

ALPHA = parse_diagram("1,4|2,3,4',5'|5,6|1',3',6'|2'")
BETA = parse_diagram("1,3|2,4,3'|5,4',5',6'|6|1'|2'")


# --------------------------------------------------------------------------
# construction and canonical form

def test_make_partition_identity_p1():
    assert make_partition(1, [{0, 1}]) == identity(1)


def test_make_partition_canonicalizes_order():
    a = make_partition(2, [[3, 1], [2, 0]])
    assert a.blocks == ((0, 2), (1, 3))


def test_make_partition_running_example():
    a = make_partition(6, [{0, 3}, {1, 2, 9, 10}, {4, 5}, {6, 8, 11}, {7}])
    assert a == ALPHA


def test_make_partition_overlap():
    with pytest.raises(OverlapError):
        make_partition(2, [{0, 1}, {1, 2, 3}])


def test_make_partition_coverage():
    with pytest.raises(CoverageError):
        make_partition(2, [{0, 1}])


def test_make_partition_empty_block():
    with pytest.raises(EmptyBlockError):
        make_partition(1, [[0, 1], []])


def test_make_partition_bad_vertex_is_index_error():
    with pytest.raises(IndexError):
        make_partition(2, [{0, 1}, {2, 3, 4}])


def test_empty_diagram_is_legal():
    empty = make_partition(0, [])
    assert empty.n == 0 and empty.blocks == ()
    assert multiply(empty, empty) == (empty, 0)


@given(diagrams())
def test_format_parse_round_trip(a: DiagramPartition):
    assert parse_diagram(format_diagram(a)) == a


def test_parse_is_whitespace_tolerant():
    assert parse_diagram(" 1 , 4 | 2,3, 4' ,5'|5,6|1',3',6'| 2' ") == ALPHA


def test_parse_empty_gives_empty_diagram():
    assert parse_diagram("") == identity(0)


# --------------------------------------------------------------------------
# multiplication

def test_multiply_running_example():
    product, m = multiply(ALPHA, BETA)
    assert product == parse_diagram("1,4|2,3,3',4',5',6'|5,6|1'|2'")
    assert m == 1


def test_multiply_identity_is_neutral(all_p3):
    e = identity(3)
    for x in all_p3[::7]:
        assert multiply(e, x) == (x, 0)
        assert multiply(x, e) == (x, 0)


def test_multiply_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        multiply(identity(2), identity(3))


def test_multiply_agrees_with_search_on_b3(all_b3):
    for a, b in itertools.product(all_b3, all_b3):
        assert multiply(a, b) == naive_multiply(a, b)


@settings(max_examples=150)
@given(diagram_pairs())
def test_multiply_agrees_with_search(pair):
    a, b = pair
    assert multiply(a, b) == naive_multiply(a, b)


def test_associativity_and_m_additivity_exhaustive_b3(all_b3):
    for a, b, c in itertools.product(all_b3, repeat=3):
        ab, m_ab = multiply(a, b)
        bc, m_bc = multiply(b, c)
        left, m_left = multiply(ab, c)
        right, m_right = multiply(a, bc)
        assert left == right
        assert m_ab + m_left == m_right + m_bc


def test_m_additivity_random_p4():
    rng = random.Random(7)
    pool = [_random_diagram(rng, 4) for _ in range(60)]
    for _ in range(2000):
        a, b, c = rng.choice(pool), rng.choice(pool), rng.choice(pool)
        ab, m_ab = multiply(a, b)
        bc, m_bc = multiply(b, c)
        _, m_left = multiply(ab, c)
        _, m_right = multiply(a, bc)
        assert m_ab + m_left == m_right + m_bc


def _random_diagram(rng: random.Random, n: int) -> DiagramPartition:
    blocks: list[list[int]] = []
    for v in range(2 * n):
        if blocks and rng.random() < 0.7:
            rng.choice(blocks).append(v)
        else:
            blocks.append([v])
    return DiagramPartition(n, tuple(tuple(sorted(b)) for b in sorted(blocks)))


@settings(max_examples=100)
@given(diagram_pairs(max_n=5))
def test_m_is_bounded_by_n(pair):
    a, b = pair
    _, m = multiply(a, b)
    assert 0 <= m <= a.n


def test_middle_row_components_match_kernel_join(all_pb3):
    # connectivity inside the glued row is the join of a's lower and b's
    # upper kernels, here recomputed with the naive component search
    for a, b in itertools.product(all_pb3[::5], all_pb3[::5]):
        lower = profile(a).lower_kernel.classes
        upper = profile(b).upper_kernel.classes
        expected = naive_join(3, lower, upper)
        edges = []
        for blk in lower:
            edges.extend((blk[0], v) for v in blk[1:])
        for blk in upper:
            edges.extend((blk[0], v) for v in blk[1:])
        got = tuple(
            sorted(tuple(sorted(c)) for c in bfs_components(list(range(1, 4)), edges))
        )
        assert got == expected


# --------------------------------------------------------------------------
# profiles and kernels

def test_profile_running_example():
    prof = profile(ALPHA)
    assert prof.rank == 1
    assert prof.upper_domain == {2, 3}
    assert prof.lower_domain == {4, 5}
    assert prof.upper_kernel.classes == ((1, 4), (2, 3), (5, 6))
    assert prof.lower_kernel.classes == ((1, 3, 6), (2,), (4, 5))
    assert prof.kernel.class_count == 1


def test_profile_identity():
    prof = profile(identity(4))
    assert prof.rank == 4
    assert prof.upper_domain == prof.lower_domain == {1, 2, 3, 4}
    assert prof.upper_kernel.is_discrete() and prof.lower_kernel.is_discrete()


def test_profile_beta_kernel():
    # the block list of BETA forces these classes: 1~3 and 2~4 above,
    # 4~5~6 below, so 2,4,5,6 merge and 1,3 stay separate
    prof = profile(BETA)
    assert prof.kernel.classes == ((1, 3), (2, 4, 5, 6))


@given(diagrams())
def test_kernel_join_matches_naive(a: DiagramPartition):
    prof = profile(a)
    assert prof.kernel.classes == naive_join(
        a.n, prof.upper_kernel.classes, prof.lower_kernel.classes
    )


def test_equivalence_relation_join():
    left = EquivalenceRelation.from_classes(4, [[1, 2], [3], [4]])
    right = EquivalenceRelation.from_classes(4, [[2, 3], [1], [4]])
    assert left.join(right).classes == ((1, 2, 3), (4,))


# --------------------------------------------------------------------------
# decomposition

def test_decompose_irreducible_alpha():
    pieces = decompose_irreducible(ALPHA)
    assert pieces == [((1, 2, 3, 4, 5, 6), ALPHA)]


def test_decompose_beta_fails():
    with pytest.raises(NotDecomposableError):
        decompose_irreducible(BETA)


def test_decompose_rank0_brauer():
    a = make_partition(2, [{0, 1}, {2, 3}])
    assert decompose_irreducible(a) == [((1, 2), a)]


def test_decompose_reassembles(all_pb3):
    for a in all_pb3:
        try:
            pieces = decompose_irreducible(a)
        except NotDecomposableError:
            continue
        rebuilt = []
        for cls, piece in pieces:
            m = piece.n
            for blk in piece.blocks:
                rebuilt.append(
                    tuple(
                        sorted(
                            cls[v] - 1 if v < m else cls[v - m] - 1 + a.n for v in blk
                        )
                    )
                )
        assert tuple(sorted(rebuilt)) == a.blocks


# --------------------------------------------------------------------------
# families

def test_family_check_identity_everywhere():
    e = identity(2)
    for fam in MonoidFamily:
        assert family_check(e, fam)


def test_family_check_rank0_brauer_element():
    a = parse_diagram("1,2|1',2'")
    answers = {
        MonoidFamily.P: True,
        MonoidFamily.B: True,
        MonoidFamily.PB: True,
        MonoidFamily.T: False,
        MonoidFamily.I: False,
        MonoidFamily.IDUAL: False,
    }
    for fam, expected in answers.items():
        assert family_check(a, fam) == expected


def test_family_check_single_point_gap():
    a = parse_diagram("1|1'")
    answers = {
        MonoidFamily.P: True,
        MonoidFamily.B: False,
        MonoidFamily.PB: True,
        MonoidFamily.T: False,
        MonoidFamily.I: True,
        MonoidFamily.IDUAL: False,
    }
    for fam, expected in answers.items():
        assert family_check(a, fam) == expected


def test_family_sizes_at_n2():
    everything = [
        DiagramPartition(2, p) for p in set_partitions((0, 1, 2, 3))
    ]
    sizes = {
        fam: sum(1 for a in everything if family_check(a, fam))
        for fam in MonoidFamily
    }
    assert sizes[MonoidFamily.P] == 15
    assert sizes[MonoidFamily.B] == 3
    assert sizes[MonoidFamily.PB] == 10
    assert sizes[MonoidFamily.T] == 4
    assert sizes[MonoidFamily.I] == 7
    assert sizes[MonoidFamily.IDUAL] == 3


# --------------------------------------------------------------------------
# lambda graphs

def test_lambda_graph_identity_is_empty():
    g = lambda_graph(identity(3))
    assert g.red_edges == g.blue_edges == ()
    assert g.red_loops == g.blue_loops == ()


def test_lambda_graph_loops_and_edge():
    g = lambda_graph(parse_diagram("1|2|1',2'"))
    assert g.red_loops == (1, 2)
    assert g.blue_edges == ((1, 2),)
    assert g.red_edges == () and g.blue_loops == ()


def test_lambda_graph_rejects_big_blocks():
    with pytest.raises(NotPartialBrauerError):
        lambda_graph(parse_diagram("1,2,3|1'|2'|3'"))


def test_lambda_upper_half_is_r_signature(all_pb3):
    # two partial Brauer elements share (upper domain, upper kernel) exactly
    # when their upper graph halves coincide
    for a, b in itertools.combinations(all_pb3, 2):
        pa, pb = profile(a), profile(b)
        same_sig = (pa.upper_domain, pa.upper_kernel) == (pb.upper_domain, pb.upper_kernel)
        same_half = lambda_graph(a).upper_half() == lambda_graph(b).upper_half()
        assert same_sig == same_half
