import pytest

from sphsys.quotients import (
    NotDistinguished,
    distinguished_subsets,
    good_quotient,
    is_distinguished,
    is_homogeneous,
    is_positive,
    minimal_distinguished_subsets,
    minimal_good_distinguished,
    quotient,
    quotient_sigma,
)
from sphsys.system import colors, defect, validate
from tests.conftest import make


def pos_of(cs, row):
    return next(i for i, c in enumerate(cs.colors) if c.row == row)


def test_is_positive(a1_a1, comb2_a2):
    cs = colors(a1_a1)
    assert is_positive(cs, {0: 1})
    assert is_positive(cs, {})
    cs2 = colors(comb2_a2)
    bad = pos_of(cs2, (1, -2))
    assert not is_positive(cs2, {bad: 1})


def test_is_distinguished(a1_a1, comb2_a2, aa_a1xa1, g2_gpp):
    assert is_distinguished(a1_a1, (0,))
    cs2 = colors(comb2_a2)
    assert not is_distinguished(comb2_a2, (pos_of(cs2, (1, -2)),))
    for s in (a1_a1, comb2_a2, aa_a1xa1, g2_gpp):
        full = tuple(range(len(colors(s))))
        assert is_distinguished(s, full)
    with pytest.raises(NotDistinguished):
        is_distinguished(a1_a1, ())


def test_quotient_sigma(a1_a1):
    xs, weights = quotient_sigma(a1_a1, (0,))
    assert weights == ()
    xs, weights = quotient_sigma(a1_a1, ())
    assert weights == ((1,),)


def test_quotient_sigma_pairing_kernel():
    # two orthogonal a(1) roots sharing a comb color: row (1,1); the unshared
    # colors have rows (1,-1) and (-1,1), whose common kernel is sigma1+sigma2
    s = make(
        "A1xA1",
        (),
        [(1, 0), (0, 1)],
        [({1, 2}, (1, 1)), ({1}, (1, -1)), ({2}, (-1, 1))],
    )
    assert validate(s) == []
    cs = colors(s)
    dp = (pos_of(cs, (1, -1)), pos_of(cs, (-1, 1)))
    xs, weights = quotient_sigma(s, dp)
    assert weights == ((1, 1),)
    res = quotient(s, dp)
    assert res.good
    assert res.system.sigma == ((1, 1),)
    assert res.arrow == "defect_decreasing"


def test_quotient_g2_gpp(g2_gpp):
    cs = colors(g2_gpp)
    dp = (pos_of(cs, (1,)),)  # the color attached to alpha2
    res = good_quotient(g2_gpp, dp)
    assert res.homogeneous
    assert res.system.sp == {2}
    assert len(colors(res.system)) == 1


def test_quotient_2a(two_a_a1):
    res = good_quotient(two_a_a1, (0,))
    assert res.system.sp == {1} and res.system.sigma == ()


def test_quotient_a1(a1_a1):
    res = good_quotient(a1_a1, (0,))
    assert res.good and res.system.sp == frozenset() and res.system.sigma == ()
    assert len(colors(res.system)) == 1


def test_quotient_requires_distinguished(comb2_a2):
    cs = colors(comb2_a2)
    with pytest.raises(NotDistinguished):
        quotient(comb2_a2, (pos_of(cs, (1, -2)),))


def test_is_homogeneous(a1_a1, g2_gpp):
    assert is_homogeneous(a1_a1, (0,))
    assert not is_homogeneous(a1_a1, ())
    cs = colors(g2_gpp)
    assert is_homogeneous(g2_gpp, (pos_of(cs, (1,)),))


def test_minimal_a1(a1_a1):
    res = minimal_good_distinguished(a1_a1)
    assert len(res) == 2
    assert all(r.good and r.homogeneous for r in res)
    res_auto = minimal_good_distinguished(a1_a1, up_to_automorphism=True)
    assert len(res_auto) == 1


def test_minimal_comb2(comb2_a2):
    res = minimal_good_distinguished(comb2_a2)
    assert len(res) == 1
    (r,) = res
    cs = colors(comb2_a2)
    assert r.delta_prime == (pos_of(cs, (1, 1)),)
    assert r.homogeneous


def test_distinguished_monotone_with_positive_additions(comb2_a2):
    # adding a positive-rowed color keeps a subset distinguished
    cs = colors(comb2_a2)
    comb = pos_of(cs, (1, 1))
    for sub in distinguished_subsets(comb2_a2):
        if comb not in sub:
            assert is_distinguished(comb2_a2, tuple(sorted(sub + (comb,))))


def test_full_color_set_good(a1_a1, two_a_a1, aa_a1xa1, comb2_a2, g2_gpp):
    for s in (a1_a1, two_a_a1, aa_a1xa1, comb2_a2, g2_gpp):
        full = tuple(range(len(colors(s))))
        res = good_quotient(s, full)
        assert res.good
        assert res.system.sigma == ()


def test_minimal_sets_are_minimal(comb2_a2, g2_gpp):
    for s in (comb2_a2, g2_gpp):
        mins = minimal_distinguished_subsets(s)
        for m in mins:
            for k in range(1, len(m)):
                import itertools

                for sub in itertools.combinations(m, k):
                    assert not is_distinguished(s, sub)
