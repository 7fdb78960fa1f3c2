"""Spherical roots of adjoint type: enumeration, classification, compatibility bounds.

A spherical root is either a sum of two orthogonal simple roots (type aa)
or an instantiation of one of the irreducible table shapes on a connected
subdiagram.  Small-rank coincidences are folded into one canonical kind:
d(2)=aa, b(1)=a(1), 2b(1)=2a, c(2)=b(2).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .roots import (
    RootSystem,
    _classify_component,
    _component_automorphisms,
    cartan_pairing,
    connected_components,
    support,
)


class NotASphericalRoot(ValueError):
    pass


@dataclass(frozen=True)
class SphericalRoot:
    """A spherical root: coefficient vector plus its classified kind tag.

    Kind tags: "aa", "aN", "2a", "bN", "2bN", "bstar3", "cN", "dN", "f",
    "g", "2g", "gpp" (N = arity, e.g. "a3", "2b2").
    """

    vector: tuple
    kind: str

    @property
    def base(self):
        return self.kind.rstrip("0123456789")

    @property
    def arity(self):
        digits = self.kind[len(self.base):]
        return int(digits) if digits else None

    def __str__(self):
        return "(%s):%s" % (",".join(map(str, self.vector)), self.kind)


# table shapes: support type -> list of (local coefficient builder, kind base)
def _table_rows(letter, n):
    ones = (1,) * n
    rows = []
    if letter == "A":
        rows.append((ones, "a" if n > 1 else None))          # a(n); a(1) for n=1
        if n == 1:
            rows.append(((2,), "2a"))
        if n == 3:
            rows.append(((1, 2, 1), "d"))                    # d(3) via D3 = A3
    elif letter == "B":
        rows.append((ones, "b"))
        rows.append((tuple(2 for _ in range(n)), "2b"))
        if n == 3:
            rows.append(((1, 2, 3), "bstar"))
    elif letter == "C" and n >= 3:
        rows.append(((1,) + (2,) * (n - 2) + (1,), "c"))
    elif letter == "D" and n >= 4:
        rows.append(((2,) * (n - 2) + (1, 1), "d"))
    elif letter == "F":
        rows.append(((1, 2, 3, 2), "f"))
    elif letter == "G":
        rows.append(((2, 1), "g"))
        rows.append(((4, 2), "2g"))
        rows.append(((1, 1), "gpp"))
    return rows


def _kind_tag(base, n):
    if base in ("aa", "2a", "f", "g", "2g", "gpp"):
        return base
    if base == "a" and n == 1:
        return "a1"
    if base == "bstar":
        return "bstar3"
    return f"{base}{n}"


def _instantiations(R, comp):
    """All spherical roots whose support is exactly the connected subset `comp`."""
    letter, n, iso = _classify_component(R, comp)
    out = []
    autos = _component_automorphisms(letter, n)
    for coeffs, base in _table_rows(letter, n):
        if base is None:
            base = "a"
        seen = set()
        for auto in autos:
            vec = [0] * R.rank
            for loc in range(1, n + 1):
                vec[iso[auto[loc - 1]] - 1] = coeffs[loc - 1]
            vec = tuple(vec)
            if vec not in seen:
                seen.add(vec)
                out.append(SphericalRoot(vec, _kind_tag(base, n)))
    return out


def enumerate_spherical_roots(R):
    """The full set of spherical roots of adjoint type on R."""
    out = {}
    for i, j in itertools.combinations(R.indices(), 2):
        if R.cartan(i, j) == 0:
            vec = tuple(int(k in (i, j)) for k in R.indices())
            out[vec] = SphericalRoot(vec, "aa")
    for size in range(1, R.rank + 1):
        for comp in _connected_subsets(R, size):
            for sr in _instantiations(R, comp):
                out[sr.vector] = sr
    return sorted(out.values(), key=lambda s: s.vector)


def _connected_subsets(R, size):
    """All connected index subsets of the Dynkin diagram of a given size."""
    level = {frozenset({i}) for i in R.indices()}
    for _ in range(size - 1):
        level = {
            cur | {u}
            for cur in level
            for v in cur
            for u in R.indices()
            if u not in cur and R.adjacent(v, u)
        }
    return sorted(tuple(sorted(s)) for s in level)


def classify(R, w):
    """Classify a weight vector as a spherical root, or raise NotASphericalRoot."""
    supp = support(w)
    if not supp:
        raise NotASphericalRoot("zero vector")
    if any(c < 0 for c in w):
        raise NotASphericalRoot("negative coefficient")
    comps = connected_components(R, supp)
    if len(comps) == 2 and all(len(c) == 1 for c in comps):
        i, j = comps[0][0], comps[1][0]
        if w[i - 1] == 1 and w[j - 1] == 1 and R.cartan(i, j) == 0:
            return SphericalRoot(w, "aa")
        raise NotASphericalRoot(f"{w} is not an orthogonal pair of simple roots")
    if len(comps) != 1:
        raise NotASphericalRoot(f"support of {w} is neither connected nor an orthogonal pair")
    for sr in _instantiations(R, comps[0]):
        if sr.vector == w:
            return sr
    raise NotASphericalRoot(f"{w} matches no spherical root shape")


@dataclass(frozen=True)
class CompatibilityBounds:
    spp: frozenset
    sp_sigma: frozenset


def sp_bounds(R, sigma):
    """Lower bound S^pp(sigma) and upper bound S^p(sigma) for compatible S^p sets."""
    if not isinstance(sigma, SphericalRoot):
        sigma = classify(R, sigma)
    w = sigma.vector
    sp_sigma = frozenset(i for i in R.indices() if cartan_pairing(R, i, w) == 0)
    supp = support(w)
    spp = sp_sigma & supp
    if sigma.base == "b" and sigma.arity >= 2:
        spp = spp - {_short_end(R, supp)}
    elif sigma.base == "c":
        spp = spp - {_far_end(R, supp)}
    return CompatibilityBounds(frozenset(spp), sp_sigma)


def _short_end(R, supp):
    """The support vertex playing alpha_n in a B_n support (the short end)."""
    for v in supp:
        for u in supp:
            if u != v and R.cartan(v, u) == -2:
                return v
    raise NotASphericalRoot("no short end in support")


def _far_end(R, supp):
    """The support vertex playing alpha_1 in a C_n support (the end away from the long root)."""
    lng = None
    for v in supp:
        for u in supp:
            if u != v and R.cartan(v, u) == -2:
                lng = u
    ends = [v for v in supp if sum(1 for u in supp if u != v and R.cartan(v, u) != 0) == 1]
    far = [v for v in ends if v != lng]
    if len(far) != 1:
        raise NotASphericalRoot("ambiguous C-type support")
    return far[0]


def compatible(R, sp, sigma):
    """Axiom (S) for one root: S^pp(sigma) <= sp <= S^p(sigma)."""
    b = sp_bounds(R, sigma)
    sp = frozenset(sp)
    return b.spp <= sp <= b.sp_sigma
