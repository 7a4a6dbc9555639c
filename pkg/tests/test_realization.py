import itertools
import random
from functools import lru_cache

import numpy as np
import pytest

import ref_impl
from degreebox.criteria import check_cdz, check_erdos_gallai_fixed
from degreebox.errors import LengthMismatch, LowerExceedsUpper, SearchBudgetExceeded
from degreebox.oracle import enumerate_instances
from degreebox.realize import (
    SimpleGraph,
    check_ryser_interval,
    find_graphic_in_box,
    graphic_vector_in_box,
    havel_hakimi_realize,
    interval_bipartite_realize,
    realize_pair,
    ryser_interval_system,
    verify_witness,
)
from degreebox.sequences import normalize_good_order, tilde_sequence, validate_and_clamp

CE = validate_and_clamp((5, 4, 3, 3, 3, 1), (5, 5, 3, 3, 3, 1))


def non_increasing_sequences(n, max_entry):
    yield from itertools.combinations_with_replacement(range(max_entry, -1, -1), n)


class TestHavelHakimi:
    def test_triangle(self):
        g = havel_hakimi_realize((2, 2, 2))
        assert g.edges == frozenset({(0, 1), (0, 2), (1, 2)})

    def test_non_graphic(self):
        assert havel_hakimi_realize((3, 3, 1, 1)) is None

    def test_single_edge(self):
        g = havel_hakimi_realize((1, 1))
        assert g.edges == frozenset({(0, 1)})

    def test_degrees_are_exact(self):
        for d in [(4, 3, 2, 2, 1), (3, 3, 2, 2, 2), (5, 5, 4, 4, 3, 3)]:
            g = havel_hakimi_realize(d)
            assert g is not None
            assert g.degrees() == d

    def test_agrees_with_erdos_gallai_small(self):
        for n in range(1, 7):
            for d in non_increasing_sequences(n, n - 1):
                got = havel_hakimi_realize(d)
                expect = check_erdos_gallai_fixed(d).holds
                assert (got is not None) == expect, d
                if got is not None:
                    assert got.degrees() == d

    def test_oversized_entry_fails_cleanly(self):
        assert havel_hakimi_realize((5, 1, 1, 1)) is None


class TestGraphicVectorSearch:
    def test_counterexample_box_has_no_graphic_vector(self):
        assert graphic_vector_in_box(CE) is None
        assert find_graphic_in_box(CE) is None

    def test_slack_box_takes_upper_bounds(self):
        pair = validate_and_clamp((1, 1, 1), (2, 2, 2))
        assert find_graphic_in_box(pair) == (2, 2, 2)

    def test_point_box(self):
        pair = validate_and_clamp((2, 2, 2), (2, 2, 2))
        assert find_graphic_in_box(pair) == (2, 2, 2)

    def test_complete_against_brute_force(self):
        """Search result matches direct enumeration of every in-box vector."""
        for n in range(0, 5):
            for pair in enumerate_instances(n):
                vec = graphic_vector_in_box(pair)
                expect = any(
                    ref_impl.ref_erdos_gallai(tuple(sorted(x, reverse=True)))
                    for x in itertools.product(
                        *(range(lo, hi + 1) for lo, hi in zip(pair.a, pair.b))
                    )
                )
                assert (vec is not None) == expect, pair
                if vec is not None:
                    assert all(
                        lo <= v <= hi for v, lo, hi in zip(vec, pair.a, pair.b)
                    )
                    assert ref_impl.ref_erdos_gallai(tuple(sorted(vec, reverse=True)))

    def test_budget_aborts_instead_of_guessing(self):
        pair = validate_and_clamp((0, 0, 0, 0, 0), (4, 4, 4, 4, 4))
        with pytest.raises(SearchBudgetExceeded):
            graphic_vector_in_box(pair, budget=1)


class TestRealizePair:
    def test_triangle(self):
        g = realize_pair(validate_and_clamp((2, 2, 2), (2, 2, 2)))
        assert g.edges == frozenset({(0, 1), (0, 2), (1, 2)})

    def test_counterexample_not_realizable(self):
        assert realize_pair(CE) is None

    def test_empty_lower_bounds(self):
        pair = validate_and_clamp((0, 0, 0), (2, 2, 2))
        g = realize_pair(pair)
        assert g is not None
        assert verify_witness(g, pair.a, pair.b)

    def test_relabeling_through_permutation(self):
        a, b = (0, 2, 1, 2), (1, 3, 1, 2)
        norm = normalize_good_order(a, b)
        g = realize_pair(norm.pair, norm.perm)
        assert g is not None
        assert verify_witness(g, a, b)

    def test_returns_iff_cdz_holds_small(self):
        for n in range(0, 4):
            for pair in enumerate_instances(n):
                assert (realize_pair(pair) is not None) == check_cdz(pair).holds


class TestVerifyWitness:
    def test_triangle_in_point_box(self):
        g = SimpleGraph(3, frozenset({(0, 1), (0, 2), (1, 2)}))
        assert verify_witness(g, (2, 2, 2), (2, 2, 2))

    def test_empty_graph_misses_lower_bounds(self):
        g = SimpleGraph(3, frozenset())
        assert not verify_witness(g, (1, 1, 1), (2, 2, 2))

    def test_single_edge_in_slack_box(self):
        g = SimpleGraph(2, frozenset({(0, 1)}))
        assert verify_witness(g, (0, 0), (1, 1))

    def test_length_mismatch(self):
        g = SimpleGraph(2, frozenset())
        with pytest.raises(LengthMismatch):
            verify_witness(g, (0, 0), (0,))


class TestSerialization:
    def test_edge_list_is_one_based_and_sorted(self):
        g = SimpleGraph(3, frozenset({(1, 2), (0, 1)}))
        assert g.to_edge_list() == "1 2\n2 3\n"

    def test_empty_edge_list(self):
        assert SimpleGraph(2, frozenset()).to_edge_list() == ""

    def test_dot_lists_isolated_vertices(self):
        g = SimpleGraph(3, frozenset({(0, 1)}))
        assert g.to_dot() == "graph witness {\n  3;\n  1 -- 2;\n}\n"


@lru_cache(maxsize=None)
def _bipartite_tables(ln, rn):
    m = ln * rn
    idx = np.arange(1 << m, dtype=np.uint32)
    left = np.zeros((1 << m, ln), dtype=np.int8)
    right = np.zeros((1 << m, rn), dtype=np.int8)
    for e in range(m):
        bit = ((idx >> e) & 1).astype(np.int8)
        left[:, e // rn] += bit
        right[:, e % rn] += bit
    return left, right


def brute_bipartite_feasible(left, right):
    """Ground truth by enumerating every bipartite edge subset."""
    lt, rt = _bipartite_tables(len(left), len(right))
    ok = np.ones(lt.shape[0], dtype=bool)
    for i, (lo, hi) in enumerate(left):
        ok &= (lt[:, i] >= lo) & (lt[:, i] <= hi)
    for j, (lo, hi) in enumerate(right):
        ok &= (rt[:, j] >= lo) & (rt[:, j] <= hi)
    return bool(ok.any())


class TestIntervalBipartite:
    def test_counterexample_tilde_system_witness_degrees(self):
        system = ryser_interval_system(CE)
        assert system == [(6, 6), (5, 6), (4, 4), (3, 3), (3, 3), (1, 1)]
        g = interval_bipartite_realize(system, system)
        assert g is not None
        assert g.left_degrees() == (6, 5, 4, 3, 3, 1)
        assert g.right_degrees() == (6, 5, 4, 3, 3, 1)

    def test_two_pendants_one_center(self):
        g = interval_bipartite_realize([(1, 1), (1, 1)], [(2, 2)])
        assert g is not None
        assert g.edges == frozenset({(0, 0), (1, 0)})

    def test_demand_without_supply(self):
        assert interval_bipartite_realize([(2, 2)], [(0, 0)]) is None

    def test_inverted_bounds_rejected(self):
        with pytest.raises(LowerExceedsUpper):
            interval_bipartite_realize([(2, 1)], [(0, 0)])

    def test_empty_parts(self):
        assert interval_bipartite_realize([], []) is not None

    def test_against_brute_force_random_systems(self):
        rng = random.Random(20260809)
        for _ in range(200):
            ln = rng.randint(1, 4)
            rn = rng.randint(1, 4)
            def draw(side_n, other_n):
                out = []
                for _ in range(side_n):
                    hi = rng.randint(0, other_n + 1)  # allow slack past part size
                    out.append((rng.randint(0, hi), hi))
                return out
            left = draw(ln, rn)
            right = draw(rn, ln)
            got = interval_bipartite_realize(left, right)
            expect = brute_bipartite_feasible(left, right)
            assert (got is not None) == expect, (left, right)
            if got is not None:
                ld, rd = got.left_degrees(), got.right_degrees()
                assert all(lo <= d <= hi for d, (lo, hi) in zip(ld, left))
                assert all(lo <= d <= hi for d, (lo, hi) in zip(rd, right))


class TestRyserInterval:
    def test_counterexample_holds_despite_unrealizability(self):
        assert check_ryser_interval(CE).holds

    def test_triangle(self):
        pair = validate_and_clamp((2, 2, 2), (2, 2, 2))
        assert tilde_sequence(pair.a) == (3, 3, 2)
        assert check_ryser_interval(pair).holds

    def test_empty(self):
        assert check_ryser_interval(validate_and_clamp((), ())).holds

    def test_fixed_sequence_equivalence_with_havel_hakimi(self):
        """Degenerate intervals reproduce the classical bipartite lift test.

        The equivalence is a statement about even-sum sequences; parity is
        not preserved by the lift (e.g. (1,1,1) is not graphic but lifts
        to the feasible system (2,1,1)).
        """
        for n in range(1, 7):
            for d in non_increasing_sequences(n, n - 1):
                lifted = tilde_sequence(d)
                system = [(x, x) for x in lifted]
                flow = interval_bipartite_realize(system, system)
                hh = havel_hakimi_realize(d)
                if sum(d) % 2 == 0:
                    assert (flow is not None) == (hh is not None), d
                else:
                    assert hh is None, d

    def test_odd_sum_lift_can_be_feasible(self):
        assert havel_hakimi_realize((1, 1, 1)) is None
        system = [(x, x) for x in tilde_sequence((1, 1, 1))]
        assert interval_bipartite_realize(system, system) is not None
