import random

import pytest

from sphsys.hilbert import DegreeCapExceeded, brute_force_minimal, hilbert_basis


def test_no_constraints_gives_units():
    assert hilbert_basis([], 3) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_single_strict_row():
    # x = 0 is forced when a row is strictly positive on the only variable
    assert hilbert_basis([(1,)], 1) == []


def test_balance_row():
    assert hilbert_basis([(1, -1)], 2) == [(1, 1)]


def test_double_ratio():
    assert hilbert_basis([(2, -1)], 2) == [(1, 2)]


def test_two_rows():
    rows = [(1, -2, 0), (0, 1, -3)]
    assert hilbert_basis(rows, 3) == [(6, 3, 1)]


def test_zero_column_is_free():
    assert hilbert_basis([(1, 0)], 2) == [(0, 1)]


def test_against_brute_force_fixed_cases():
    cases = [
        [(1, 1, -1)],
        [(1, -1), (1, -1)],
        [(2, -3)],
        [(1, -1, 1, -1)],
        [(1, 2, -2, 0), (0, -1, 1, -1)],
        [(2, 0, -1, -1), (-1, 1, 0, 0)],
    ]
    for rows in cases:
        n = len(rows[0])
        hb = hilbert_basis(rows, n)
        bf = brute_force_minimal(rows, n, 12)
        assert [x for x in hb if sum(x) <= 12] == bf


def test_against_brute_force_random():
    rng = random.Random(20240817)
    for _ in range(120):
        m = rng.randint(1, 3)
        n = rng.randint(1, 4)
        rows = [tuple(rng.randint(-2, 2) for _ in range(n)) for _ in range(m)]
        hb = hilbert_basis(rows, n)
        bf = brute_force_minimal(rows, n, 12)
        assert [x for x in hb if sum(x) <= 12] == bf, rows


def test_basis_elements_are_solutions_and_incomparable():
    rows = [(1, 2, -2, 0), (0, -1, 1, -1)]
    hb = hilbert_basis(rows, 4)
    for x in hb:
        assert all(sum(r[i] * x[i] for i in range(4)) == 0 for r in rows)
    for x in hb:
        for y in hb:
            if x != y:
                assert not all(a <= b for a, b in zip(x, y))


def test_degree_cap_raises():
    with pytest.raises(DegreeCapExceeded):
        hilbert_basis([(1, -2), (0, 0)], 2, degree_cap=2)
