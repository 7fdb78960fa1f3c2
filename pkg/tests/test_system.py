import pytest

from sphsys.roots import RootSystem, cartan_pairing, diagram_automorphisms
from sphsys.system import (
    AColor,
    SphericalSystem,
    apply_automorphism,
    canonical_key,
    colors,
    defect,
    direct_product,
    equal_up_to_automorphism,
    induce,
    is_cuspidal,
    is_direct_product,
    is_valid,
    localize,
    validate,
)
from tests.conftest import make


def test_a1_a1_valid(a1_a1):
    assert validate(a1_a1) == []


def test_single_color_violates_a2(a1_a1):
    broken = SphericalSystem.make(a1_a1.R, (), [(1,)], [({1}, (1,))])
    assert any("(A2)" in v for v in validate(broken))


def test_proportional_pair_flagged():
    s = make("A1", (), [(1,), (2,)], [({1}, (1, 0)), ({1}, (1, -2))])
    assert any("proportional" in v for v in validate(s))


def test_non_spherical_root_flagged():
    s = make("A2", (), [(2, 1)], [])
    assert any("not a spherical root" in v for v in validate(s))


def test_sigma1_violation():
    # 2a next to an a(1) with odd pairing: <alpha1^vee, alpha2> = -1
    s = make("A2", (), [(2, 0), (0, 1)], [({2}, (0, 1)), ({2}, (-2, 1))])
    assert any("Sigma1" in v for v in validate(s))


def test_compatibility_violation(a3_cuspidal):
    s = SphericalSystem.make(a3_cuspidal.R, set(), a3_cuspidal.sigma, ())
    assert any("(S)" in v for v in validate(s))


def test_colors_2a(two_a_a1):
    cs = colors(two_a_a1)
    assert len(cs) == 1
    assert cs.colors[0].kind == "2a" and cs.colors[0].row == (2,)


def test_colors_aa_identified(aa_a1xa1):
    cs = colors(aa_a1xa1)
    assert len(cs) == 1
    c = cs.colors[0]
    assert c.kind == "b" and c.row == (2,) and c.origin == {1, 2}
    assert cs.delta_of[1] == cs.delta_of[2] == (0,)


def test_colors_a1(a1_a1):
    cs = colors(a1_a1)
    assert len(cs) == 2 and all(c.kind == "a" for c in cs.colors)
    assert cs.delta_of[1] == (0, 1)


def test_defect(a1_a1, two_a_a1, comb2_a2):
    assert defect(a1_a1) == 1
    assert defect(two_a_a1) == 0
    assert defect(comb2_a2) == 1
    assert validate(comb2_a2) == []


def test_a2_axiom_holds_for_examples(a1_a1, comb2_a2):
    for s in (a1_a1, comb2_a2):
        for alpha in s.s_cap_sigma():
            pair = s.a_of(alpha)
            for j, v in enumerate(s.sigma):
                assert pair[0].row[j] + pair[1].row[j] == cartan_pairing(s.R, alpha, v)


def test_localize_identity(comb2_a2):
    loc = localize(comb2_a2, {1, 2})
    assert canonical_key(loc) == canonical_key(comb2_a2)


def test_localize_empty(comb2_a2):
    loc = localize(comb2_a2, set())
    assert loc.R.rank == 0 and loc.sigma == () and loc.acolors == ()


def test_localize_a3(a3_cuspidal):
    loc = localize(a3_cuspidal, {1, 2})
    assert loc.R.name() == "A2"
    assert loc.sigma == ()
    assert loc.sp == {2}


def test_localize_keeps_shared_colors(comb2_a2):
    loc = localize(comb2_a2, {1})
    assert loc.R.name() == "A1"
    assert len(loc.acolors) == 2
    assert sorted(c.row for c in loc.acolors) == [(1,), (1,)]


def test_induce_round_trip(a1_a1):
    A2 = RootSystem.parse("A2")
    big = induce(a1_a1, A2)
    assert is_valid(big) and not is_cuspidal(big)
    assert defect(big) == defect(a1_a1) + 1  # new color on alpha2
    back = localize(big, {1})
    assert canonical_key(back) == canonical_key(a1_a1)


def test_induce_embedding_mismatch(a1_a1):
    from sphsys.system import InvalidSystem

    with pytest.raises(InvalidSystem):
        # mapping both A1xA1 factors onto adjacent roots of A2 breaks Cartan data
        s = make("A1xA1", (), [(1, 1)], [])
        induce(s, RootSystem.parse("A2"), {1: 1, 2: 2})


def test_cuspidal(a3_cuspidal, a1_a1):
    assert is_cuspidal(a3_cuspidal)
    assert not is_cuspidal(induce(a1_a1, RootSystem.parse("A2")))
    assert not is_cuspidal(make("A1", (), [], []))


def test_direct_product(a1_a1, two_a_a1):
    p = direct_product(a1_a1, two_a_a1)
    assert p.R.name() == "A1xA1"
    assert validate(p) == []
    assert defect(p) == defect(a1_a1) + defect(two_a_a1)
    assert is_direct_product(p)


def test_product_of_a1_with_itself_decomposable(a1_a1):
    p = direct_product(a1_a1, a1_a1)
    assert p.rank == 2 and is_direct_product(p)


def test_not_a_product(aa_a1xa1, comb2_a2):
    assert not is_direct_product(aa_a1xa1)
    assert not is_direct_product(comb2_a2)
    # shared color across two A1 components: not a product either
    s = make("A1xA1", (), [(1, 0), (0, 1)],
             [({1, 2}, (1, 1)), ({1}, (1, -1)), ({2}, (-1, 1))])
    assert validate(s) == []
    assert not is_direct_product(s)


def test_validity_invariant_under_automorphisms(comb2_a2, aa_a1xa1):
    for s in (comb2_a2, aa_a1xa1):
        for p in diagram_automorphisms(s.R):
            assert validate(apply_automorphism(s, p)) == []


def test_equal_up_to_automorphism():
    left = make("A2", {2}, [], [])
    right = make("A2", {1}, [], [])
    assert canonical_key(left) != canonical_key(right)
    assert equal_up_to_automorphism(left, right)
    assert not equal_up_to_automorphism(left, make("A2", set(), [], []))
