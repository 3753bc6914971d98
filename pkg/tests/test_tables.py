"""Ternary tables, axioms, the linear family, and the text format."""

import pytest

from tribrackets.tables import (
    AlexanderParams,
    NotThreeDetermined,
    TableError,
    TernaryTable,
    VirtualTribracket,
    admissible_alexander_params,
    alexander_classical,
    check_classical_axioms,
    check_virtual_axioms,
    format_structure,
    format_tables,
    invert,
    is_three_determined,
    parse_structure,
    verify,
    virtual_alexander,
)


def test_table_call_is_one_based(ex3):
    t = ex3.classical
    assert t(1, 1, 1) == t.entries[0][0][0]
    assert t(3, 2, 1) == t.entries[2][1][0]


def test_table_shape_validation():
    with pytest.raises(TableError):
        TernaryTable([])
    with pytest.raises(TableError):
        TernaryTable([[[1, 2], [2, 1]]])  # 1 matrix for order 2
    with pytest.raises(TableError):
        TernaryTable([[[1, 2], [2, 3]], [[1, 2], [2, 1]]])  # entry 3 > n


def test_three_determined_detection():
    latin = alexander_classical(3, 1, 1)
    assert is_three_determined(latin)
    constant = TernaryTable([[[1, 1], [1, 1]], [[1, 1], [1, 1]]])
    assert not is_three_determined(constant)
    with pytest.raises(NotThreeDetermined):
        check_classical_axioms(constant)


def test_inverse_tables_recover_arguments(table3):
    inv = invert(table3.classical)
    t = table3.classical
    n = t.order
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            for c in range(1, n + 1):
                d = t(a, b, c)
                assert inv.slot1(b, c, d) == a
                assert inv.slot2(a, c, d) == b
                assert inv.slot3(a, b, d) == c


def test_bundled_structures_verify(table3, table4, ex3, hopf3, orient4):
    for s in (table3, table4, ex3, hopf3, orient4):
        report = verify(s)
        assert report.ok, (s.name, str(report))


def test_example_pair_spot_values(ex3):
    assert ex3.classical(1, 3, 2) == 3
    assert ex3.virtual(2, 3, 3) == 2


def test_verify_reports_violations():
    # both tables are Latin cubes but the pair fails the mixed identities:
    # the virtual table is linear with v = 2 while the classical one has
    # x = y = 1, which the side condition rules out
    cl = alexander_classical(3, 1, 1)
    bad = VirtualTribracket(cl, alexander_classical(3, 2, 2))
    report = verify(bad)
    assert not report.ok
    assert report.violations


def test_classical_axioms_linear_family():
    for m, x, y in ((2, 1, 1), (3, 2, 2), (5, 3, 4), (7, 5, 2)):
        assert check_classical_axioms(alexander_classical(m, x, y)) == []


def test_virtual_axiom_checker_needs_matching_orders():
    with pytest.raises(TableError):
        check_virtual_axioms(
            alexander_classical(2, 1, 1), alexander_classical(3, 1, 1)
        )


def test_linear_side_condition():
    with pytest.raises(TableError):
        virtual_alexander(3, 1, 1, 2)
    with pytest.raises(TableError):
        AlexanderParams(3, 1, 1, 2)
    with pytest.raises(TableError):
        alexander_classical(4, 2, 1)  # 2 is not a unit mod 4
    p = AlexanderParams(3, 1, 2, 2)
    assert (p.v * p.v_inv) % p.modulus == 1


def test_admissible_params_all_verify():
    params = admissible_alexander_params(3)
    assert AlexanderParams(3, 1, 2, 2) in params
    for p in params:
        s = virtual_alexander(p.modulus, p.x, p.y, p.v)
        assert s.verify().ok


def test_negative_parameters_normalize():
    # x = -1 means the unit m-1
    a = alexander_classical(5, -1, 2)
    b = alexander_classical(5, 4, 2)
    assert a == b


def test_structure_text_roundtrip(ex3):
    text = format_structure(ex3, comment="roundtrip probe")
    again = parse_structure(text)
    assert again.classical == ex3.classical
    assert again.virtual == ex3.virtual


def test_classical_only_text_roundtrip():
    cl = alexander_classical(3, 1, 2)
    text = format_tables(cl, None, comment="classical only")
    with pytest.raises(TableError):
        parse_structure(text)  # a structure needs both tables


def test_structure_name_is_mutable(ex3):
    s = parse_structure(format_structure(ex3))
    s.name = "renamed"
    assert s.name == "renamed"


def test_verify_is_cached(ex3):
    assert verify(ex3) is verify(ex3)
