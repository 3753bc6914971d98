"""Counting invariance across single generating moves.

The pairs in move_pairs.py differ by one move each (classical kinks,
pokes, slides; their detour versions; and the mixed slide).  A correct
role convention makes the count agree across every pair for every
verified structure.
"""

import pytest

from move_pairs import move_pairs
from tribrackets.coloring import brute_force_count, count_colorings
from tribrackets.diagram import traverse

PAIRS = move_pairs()


@pytest.fixture(scope="module", params=["table3", "ex3", "hopf3", "va312", "orient4"])
def structure(request):
    return request.getfixturevalue(request.param)


@pytest.mark.parametrize("name,before,after", PAIRS, ids=[p[0] for p in PAIRS])
def test_move_preserves_count(name, before, after, structure):
    a = count_colorings(before, structure).count
    b = count_colorings(after, structure).count
    assert a == b, (name, structure.name, a, b)


def test_moves_preserve_gauss_classical_content():
    # a move never changes the number of strand components
    for name, before, after in PAIRS:
        ga, gb = traverse(before), traverse(after)
        assert ga.n_components == gb.n_components, name


def test_kink_pair_against_brute_force(table3):
    name, before, after = PAIRS[0]
    assert (
        brute_force_count(before, table3).count
        == brute_force_count(after, table3).count
        == count_colorings(after, table3).count
    )
