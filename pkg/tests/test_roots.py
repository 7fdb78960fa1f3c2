import pytest

from sphsys.roots import (
    RootSystem,
    RootSystemError,
    cartan_pairing,
    diagram_automorphisms,
    linearly_independent,
    orthogonal,
    proportional,
    sub_root_system,
    support,
)


def W(R, **coeffs):
    v = [0] * R.rank
    for k, c in coeffs.items():
        v[int(k[1:]) - 1] = c
    return tuple(v)


def test_parse_and_canonicalize():
    assert RootSystem.parse("b2xa1").name() == "B2xA1"
    assert RootSystem.parse("C2").name() == "B2"
    assert RootSystem.parse("D3").name() == "A3"
    assert RootSystem.parse("E6").rank == 6
    with pytest.raises(RootSystemError):
        RootSystem.parse("E9")
    with pytest.raises(RootSystemError):
        RootSystem.parse("H4")
    with pytest.raises(RootSystemError):
        RootSystem.parse("D2")


def test_cartan_pairing_examples():
    A2 = RootSystem.parse("A2")
    assert cartan_pairing(A2, 1, (1, 1)) == 1
    for name in ("A3", "B3", "G2", "F4"):
        R = RootSystem.parse(name)
        for i in R.indices():
            assert cartan_pairing(R, i, R.alpha(i)) == 2
    G2 = RootSystem.parse("G2")
    assert cartan_pairing(G2, 1, (2, 1)) == 2 * 2 + (-3) * 1 == 1


def test_pairing_bilinear():
    B3 = RootSystem.parse("B3")
    v, w = (1, 2, 0), (0, 1, 3)
    s = tuple(a + b for a, b in zip(v, w))
    for i in B3.indices():
        assert cartan_pairing(B3, i, s) == cartan_pairing(B3, i, v) + cartan_pairing(B3, i, w)


def test_support():
    assert support((1, 2, 0)) == {1, 2}
    assert support((0, 0, 0)) == frozenset()
    assert support((2, 0, 0)) == {1}


def test_orthogonal_examples():
    A3 = RootSystem.parse("A3")
    assert orthogonal(A3, 2, (1, 1, 1))
    B3 = RootSystem.parse("B3")
    assert orthogonal(B3, 3, (0, 1, 1))
    A2 = RootSystem.parse("A2")
    assert not orthogonal(A2, 1, (0, 1))


def test_orthogonal_symmetric_on_simple_pairs():
    for name in ("A3", "B3", "F4", "G2", "B2xA1"):
        R = RootSystem.parse(name)
        for i in R.indices():
            for j in R.indices():
                assert orthogonal(R, i, R.alpha(j)) == orthogonal(R, j, R.alpha(i))


def test_diagram_automorphism_counts():
    assert len(diagram_automorphisms(RootSystem.parse("A3"))) == 2
    assert len(diagram_automorphisms(RootSystem.parse("D4"))) == 6
    assert len(diagram_automorphisms(RootSystem.parse("B3"))) == 1
    assert len(diagram_automorphisms(RootSystem.parse("E6"))) == 2
    assert len(diagram_automorphisms(RootSystem.parse("A1xA1"))) == 2
    assert len(diagram_automorphisms(RootSystem.parse("A2xA2"))) == 8


def test_automorphisms_form_group():
    R = RootSystem.parse("A2xA2")
    perms = set(diagram_automorphisms(R))
    ident = tuple(R.indices())
    assert ident in perms
    for p in perms:
        inv = [0] * len(p)
        for i, img in enumerate(p, start=1):
            inv[img - 1] = i
        assert tuple(inv) in perms
        for q in perms:
            comp = tuple(q[p[i - 1] - 1] for i in R.indices())
            assert comp in perms


def test_automorphisms_preserve_cartan():
    for name in ("D4", "B2xB2", "A1xA2"):
        R = RootSystem.parse(name)
        for p in diagram_automorphisms(R):
            for i in R.indices():
                for j in R.indices():
                    assert R.cartan(i, j) == R.cartan(p[i - 1], p[j - 1])


def test_sub_root_system():
    B3 = RootSystem.parse("B3")
    sub, tr = sub_root_system(B3, {1, 2})
    assert sub.name() == "A2"
    sub, tr = sub_root_system(B3, {2, 3})
    assert sub.name() == "B2"
    assert tr == {2: 1, 3: 2}
    sub, tr = sub_root_system(RootSystem.parse("A3"), set())
    assert sub.rank == 0

    F4 = RootSystem.parse("F4")
    assert sub_root_system(F4, {2, 3, 4})[0].name() == "C3"
    assert sub_root_system(F4, {1, 2, 3})[0].name() == "B3"
    assert sub_root_system(F4, {3, 4})[0].name() == "A2"
    assert sub_root_system(F4, {1, 3})[0].name() == "A1xA1"

    D5 = RootSystem.parse("D5")
    assert sub_root_system(D5, {2, 3, 4, 5})[0].name() == "D4"
    assert sub_root_system(D5, {3, 4, 5})[0].name() == "A3"

    E7 = RootSystem.parse("E7")
    assert sub_root_system(E7, {2, 4, 5})[0].name() == "A3"
    assert sub_root_system(E7, {1, 3, 4, 5, 6, 7})[0].name() == "A6"
    assert sub_root_system(E7, {2, 3, 4, 5})[0].name() == "D4"


def test_sub_root_system_full_is_identity_shape():
    for name in ("A3", "B3", "F4", "E6", "B2xA1"):
        R = RootSystem.parse(name)
        sub, tr = sub_root_system(R, set(R.indices()))
        assert sub.name() == R.name()
        for i in R.indices():
            for j in R.indices():
                assert R.cartan(i, j) == sub.cartan(tr[i], tr[j])


def test_linear_independence_and_proportional():
    assert linearly_independent([(1, 0), (1, 1)])
    assert not linearly_independent([(1, 1), (2, 2)])
    assert not linearly_independent([(1, 0), (0, 1), (1, 1)])
    assert linearly_independent([])
    assert proportional((1, 1, 0), (2, 2, 0))
    assert not proportional((1, 1, 0), (2, 1, 0))
    assert not proportional((1, 0, 0), (0, 1, 0))
