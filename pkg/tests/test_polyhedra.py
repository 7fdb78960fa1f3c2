from sphsys.polyhedra import feasible, feasible_strict_nonneg


def test_trivial():
    assert feasible([], 0)
    assert feasible([((), 0)], 0)
    assert not feasible([((), 5)], 0)


def test_single_variable():
    assert feasible([((1,), 3)], 1)
    assert feasible([((1,), 3), ((-1,), -5)], 1)          # 3 <= x <= 5
    assert not feasible([((1,), 6), ((-1,), -5)], 1)      # 6 <= x <= 5


def test_two_variables():
    # x + y >= 2, -x >= -1, -y >= -1 forces x = y = 1
    cons = [((1, 1), 2), ((-1, 0), -1), ((0, -1), -1)]
    assert feasible(cons, 2)
    cons = [((1, 1), 3), ((-1, 0), -1), ((0, -1), -1)]
    assert not feasible(cons, 2)


def test_rational_point_only():
    # 2x >= 1 and -2x >= -1 forces x = 1/2: feasible over Q
    assert feasible([((2,), 1), ((-2,), -1)], 1)


def test_strict_nonneg():
    assert feasible_strict_nonneg([], 1)                 # no sigma constraints
    assert not feasible_strict_nonneg([], 0)             # empty subset
    assert feasible_strict_nonneg([(1,)], 1)
    assert not feasible_strict_nonneg([(-1,)], 1)
    assert feasible_strict_nonneg([(1, -1), (-1, 1)], 2)
    assert not feasible_strict_nonneg([(1, -2), (-1, 0)], 2)


def test_strict_nonneg_needs_all_strict():
    # row (0,-1): second color can never appear with positive coefficient
    assert not feasible_strict_nonneg([(0, -1)], 2)
    assert feasible_strict_nonneg([(0, 1)], 2)
