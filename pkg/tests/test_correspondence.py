import random

from outersix.autgroup import (
    enumerate_automorphisms,
    inner_and_outer,
    inner_witness,
    involutive_outer_count,
)
from outersix.correspondence import (
    cage_automorphisms,
    correspondence,
    graph_aut_to_group_aut,
    involutive_swaps_count,
    swaps_parts,
    transposition_factors,
)
from outersix.k6 import tutte_graph
from outersix.perms import Permutation, enumerate_sym, parse_cycles


def test_cage_automorphism_count():
    assert len(cage_automorphisms()) == 1440


def test_identity_maps_to_identity():
    graph = tutte_graph()
    identity = next(a for a in cage_automorphisms() if a.is_identity())
    assert graph_aut_to_group_aut(graph, identity).is_identity()


def test_transposition_factors_rebuild_the_permutation():
    rng = random.Random(0xDEC0)
    pool = list(enumerate_sym(5))
    for p in rng.sample(pool, 30):
        factors = transposition_factors(p)
        product = Permutation.identity(5)
        for factor in factors:
            assert factor.cycle_type() == (2, 1, 1, 1)
            product = product * factor
        assert product == p
    assert transposition_factors(Permutation.identity(5)) == []


def test_transposition_factors_frozen_example():
    p = parse_cycles("(1,2,3)", 4)
    factors = transposition_factors(p)
    assert [f.cycle_string() for f in factors] == ["(1,2)", "(2,3)"]


def test_correspondence_is_a_bijection_onto_aut():
    pairs = correspondence()
    assert len(pairs) == 1440
    tables = [table for _, table in pairs]
    assert len(set(tables)) == 1440
    assert set(tables) == set(enumerate_automorphisms(6))


def test_part_action_separates_inner_from_outer():
    inner, outer = inner_and_outer(6)
    inner_set, outer_set = set(inner), set(outer)
    preserving = set()
    swapping = set()
    for cage_aut, table in correspondence():
        (swapping if swaps_parts(cage_aut) else preserving).add(table)
    assert preserving == inner_set
    assert swapping == outer_set


def test_every_preserving_image_has_a_conjugation_witness():
    rng = random.Random(21)
    pairs = [pair for pair in correspondence() if not swaps_parts(pair[0])]
    for cage_aut, table in rng.sample(pairs, 25):
        witness = inner_witness(table)
        assert witness is not None


def test_involutive_swaps_match_involutive_outer():
    assert involutive_swaps_count() == 36
    assert involutive_swaps_count() == involutive_outer_count()


def test_correspondence_respects_composition():
    pairs = correspondence()
    by_graph_aut = {cage_aut: table for cage_aut, table in pairs}
    rng = random.Random(0xC0117)
    sample = rng.sample(pairs, 40)
    for (a, table_a), (b, table_b) in zip(sample, reversed(sample)):
        assert by_graph_aut[a * b] == table_a.compose(table_b)


def test_correspondence_respects_inverse():
    pairs = correspondence()
    by_graph_aut = {cage_aut: table for cage_aut, table in pairs}
    rng = random.Random(8)
    for cage_aut, table in rng.sample(pairs, 40):
        assert by_graph_aut[cage_aut.inverse()] == table.inverse()


def test_transposition_factor_count_is_degree_minus_cycle_count():
    for p in enumerate_sym(5):
        cycles = p.cycles(include_fixed=True)
        assert len(transposition_factors(p)) == 5 - len(cycles)
