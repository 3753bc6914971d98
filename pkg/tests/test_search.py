"""Exhaustive enumeration of small structures."""

import itertools

import pytest

from tribrackets.search import (
    SearchBoundExceeded,
    enumerate_classical_tables,
    enumerate_virtual_tribrackets,
)
from tribrackets.tables import (
    TernaryTable,
    VirtualTribracket,
    check_classical_axioms,
    is_three_determined,
    verify,
)


def _all_tables(n):
    cells = n ** 3
    for flat in itertools.product(range(1, n + 1), repeat=cells):
        mats = [
            [
                [flat[(a * n + b) * n + c] for c in range(n)]
                for b in range(n)
            ]
            for a in range(n)
        ]
        yield TernaryTable(mats)


def test_order_one_is_unique():
    found = list(enumerate_virtual_tribrackets(1))
    assert len(found) == 1
    s = found[0]
    assert s.classical(1, 1, 1) == 1 and s.virtual(1, 1, 1) == 1


def test_order_two_matches_brute_force():
    pruned = {
        (s.classical.entries, s.virtual.entries)
        for s in enumerate_virtual_tribrackets(2)
    }
    brute = set()
    for cl in _all_tables(2):
        if not is_three_determined(cl) or check_classical_axioms(cl):
            continue
        for vt in _all_tables(2):
            if not is_three_determined(vt):
                continue
            if verify(VirtualTribracket(cl, vt)).ok:
                brute.add((cl.entries, vt.entries))
    assert pruned == brute
    assert len(pruned) == 4


def test_classical_tables_order_two_match_brute_force():
    pruned = {t.entries for t in enumerate_classical_tables(2)}
    brute = {
        t.entries
        for t in _all_tables(2)
        if is_three_determined(t) and not check_classical_axioms(t)
    }
    assert pruned == brute


def test_order_three_contains_example_pair(ex3):
    match = None
    for s in enumerate_virtual_tribrackets(3):
        assert s.verify().ok
        if (
            s.classical.entries == ex3.classical.entries
            and s.virtual.entries == ex3.virtual.entries
        ):
            match = s
    assert match is not None


def test_enumeration_is_deterministic():
    a = [
        (s.classical.entries, s.virtual.entries)
        for s in enumerate_virtual_tribrackets(2)
    ]
    b = [
        (s.classical.entries, s.virtual.entries)
        for s in enumerate_virtual_tribrackets(2)
    ]
    assert a == b


def test_limit_truncates():
    assert len(list(enumerate_virtual_tribrackets(3, limit=5))) == 5


def test_work_bound():
    with pytest.raises(SearchBoundExceeded):
        list(enumerate_virtual_tribrackets(5))
    # explicit opt-in raises the bound (declined here only for size)
    with pytest.raises(SearchBoundExceeded):
        list(enumerate_virtual_tribrackets(6, work_bound=5))
