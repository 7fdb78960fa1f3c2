"""The central triple (S^p, Sigma, A) over a root system: axioms, colors, localization.

A system is stored extensionally: each abstract color of A carries the set
of simple spherical roots moving it and its full restricted Cartan pairing
row.  Validation returns a report (list of violation strings); an empty
report means the triple is a spherical system.
"""

from __future__ import annotations

from dataclasses import dataclass

from .roots import (
    RootSystem,
    apply_permutation,
    cartan_pairing,
    diagram_automorphisms,
    linearly_independent,
    pairing_row,
    proportional,
    sub_root_system,
    support,
    translate_weight,
)
from .sroots import NotASphericalRoot, classify, compatible, sp_bounds


class InvalidSystem(ValueError):
    pass


@dataclass(frozen=True)
class AColor:
    moved: frozenset  # simple-root indices alpha with c(D, alpha) = 1
    row: tuple        # c(D, sigma_j) for each sigma_j, in sigma order


@dataclass(frozen=True)
class SphericalSystem:
    R: RootSystem
    sp: frozenset
    sigma: tuple      # weight vectors
    acolors: tuple    # of AColor

    @classmethod
    def make(cls, R, sp=(), sigma=(), acolors=()):
        ac = tuple(
            c if isinstance(c, AColor) else AColor(frozenset(c[0]), tuple(c[1]))
            for c in acolors
        )
        return cls(R, frozenset(sp), tuple(tuple(v) for v in sigma), ac)

    @property
    def rank(self):
        return len(self.sigma)

    def simple_positions(self):
        """Map sigma position -> simple-root index, for the sigma that lie in S."""
        out = {}
        for j, v in enumerate(self.sigma):
            supp = [i for i, c in enumerate(v, start=1) if c]
            if len(supp) == 1 and v[supp[0] - 1] == 1:
                out[j] = supp[0]
        return out

    def s_cap_sigma(self):
        return frozenset(self.simple_positions().values())

    def a_of(self, alpha):
        return [c for c in self.acolors if alpha in c.moved]

    def kinds(self):
        return tuple(classify(self.R, v).kind for v in self.sigma)


def validate(s):
    """Check all spherical-system axioms; returns a list of violations (empty = valid)."""
    report = []
    R = s.R
    n = R.rank
    for v in s.sigma:
        if len(v) != n:
            return [f"sigma entry {v} has wrong length for {R}"]
    for a in s.sp:
        if not 1 <= a <= n:
            return [f"S^p index {a} out of range"]
    for c in s.acolors:
        if len(c.row) != len(s.sigma):
            return [f"color row {c.row} has wrong arity (|Sigma| = {len(s.sigma)})"]
        for a in c.moved:
            if not 1 <= a <= n:
                return [f"moved index {a} out of range"]

    kinds = []
    for j, v in enumerate(s.sigma):
        try:
            kinds.append(classify(R, v))
        except NotASphericalRoot as exc:
            kinds.append(None)
            report.append(f"sigma[{j}] = {v}: not a spherical root ({exc})")

    for j in range(len(s.sigma)):
        for k in range(j + 1, len(s.sigma)):
            if proportional(s.sigma[j], s.sigma[k]):
                report.append(f"proportional pair sigma[{j}], sigma[{k}]")
    if s.sigma and not linearly_independent(s.sigma):
        report.append("sigma vectors are linearly dependent")

    simple = s.simple_positions()
    simple_rev = {alpha: j for j, alpha in simple.items()}

    # A1 and consistency of the stored moved-sets
    for ci, c in enumerate(s.acolors):
        for j, val in enumerate(c.row):
            if val > 1:
                report.append(f"(A1) c(A[{ci}], sigma[{j}]) = {val} > 1")
            elif val == 1 and j not in simple:
                report.append(f"(A1) c(A[{ci}], sigma[{j}]) = 1 but sigma[{j}] is not simple")
        derived = frozenset(simple[j] for j, val in enumerate(c.row) if val == 1 and j in simple)
        if derived != c.moved:
            report.append(f"A[{ci}] moved set {sorted(c.moved)} != roots paired 1 {sorted(derived)}")

    # A2
    for alpha in sorted(s.s_cap_sigma()):
        colors = s.a_of(alpha)
        if len(colors) != 2:
            report.append(f"(A2) card(A({alpha})) = {len(colors)} != 2")
            continue
        want = pairing_row(R, alpha, s.sigma)
        got = tuple(a + b for a, b in zip(colors[0].row, colors[1].row))
        if got != want:
            report.append(f"(A2) rows of A({alpha}) sum to {got}, expected {want}")

    # A3
    for ci, c in enumerate(s.acolors):
        if not c.moved:
            report.append(f"(A3) A[{ci}] moves no simple spherical root")

    # Sigma1: sigma = 2*alpha
    for j, v in enumerate(s.sigma):
        supp = sorted(support(v))
        if len(supp) == 1 and v[supp[0] - 1] == 2:
            alpha = supp[0]
            for k, w in enumerate(s.sigma):
                if k == j:
                    continue
                val = cartan_pairing(R, alpha, w)
                if val % 2 != 0 or val > 0:
                    report.append(f"(Sigma1) <alpha_{alpha}^vee, sigma[{k}]> = {val} not in 2*Z<=0")

    # Sigma2: sigma = alpha + beta orthogonal
    for j, sr in enumerate(kinds):
        if sr is not None and sr.kind == "aa":
            a, b = sorted(support(s.sigma[j]))
            for k, w in enumerate(s.sigma):
                if cartan_pairing(R, a, w) != cartan_pairing(R, b, w):
                    report.append(
                        f"(Sigma2) <alpha_{a}^vee, sigma[{k}]> != <alpha_{b}^vee, sigma[{k}]>"
                    )

    # S: compatibility
    for j, sr in enumerate(kinds):
        if sr is not None and not compatible(R, s.sp, sr):
            b = sp_bounds(R, sr)
            report.append(
                f"(S) S^p not compatible with sigma[{j}]: need {sorted(b.spp)} <= S^p <= {sorted(b.sp_sigma)}"
            )
    return report


def is_valid(s):
    return not validate(s)


def ensure_valid(s):
    rep = validate(s)
    if rep:
        raise InvalidSystem("; ".join(rep))
    return s


@dataclass(frozen=True)
class Color:
    kind: str         # "a", "2a" or "b"
    origin: frozenset  # simple roots this color is attached to
    row: tuple

    def sort_key(self):
        return (tuple(sorted(self.origin)), {"a": 0, "2a": 1, "b": 2}[self.kind], self.row)


@dataclass(frozen=True)
class ColorSet:
    colors: tuple     # canonical order
    delta_of: dict    # simple-root index -> tuple of color positions
    a_index: tuple    # position (in colors) of each original A-color, in acolors order

    def __len__(self):
        return len(self.colors)

    def rows(self):
        return [c.row for c in self.colors]


def colors(s):
    """The full color set Delta = Delta^a + Delta^{2a} + Delta^b with its Cartan pairing."""
    R = s.R
    s_a = s.s_cap_sigma()
    s_2a = frozenset(
        sorted(support(v))[0]
        for v in s.sigma
        if len(support(v)) == 1 and v[sorted(support(v))[0] - 1] == 2
    )
    s_b = frozenset(R.indices()) - s.sp - s_a - s_2a

    raw = []  # (Color, a_position or None)
    for ci, c in enumerate(s.acolors):
        raw.append((Color("a", c.moved, c.row), ci))
    for alpha in sorted(s_2a):
        row = tuple(cartan_pairing(R, alpha, v) // 2 for v in s.sigma)
        raw.append((Color("2a", frozenset({alpha}), row), None))
    # b-colors, identified when alpha ~ beta (orthogonal with alpha+beta in Sigma)
    sigma_set = set(s.sigma)
    classes = []
    for alpha in sorted(s_b):
        placed = False
        for cls in classes:
            if any(
                R.cartan(alpha, beta) == 0
                and tuple(
                    (1 if i in (alpha, beta) else 0) for i in R.indices()
                ) in sigma_set
                for beta in cls
            ):
                cls.add(alpha)
                placed = True
                break
        if not placed:
            classes.append({alpha})
    merged = True
    while merged:
        merged = False
        for i in range(len(classes)):
            for j in range(i + 1, len(classes)):
                if any(
                    R.cartan(a, b) == 0
                    and tuple((1 if k in (a, b) else 0) for k in R.indices()) in sigma_set
                    for a in classes[i]
                    for b in classes[j]
                ):
                    classes[i] |= classes.pop(j)
                    merged = True
                    break
            if merged:
                break
    for cls in classes:
        alpha = min(cls)
        row = tuple(cartan_pairing(R, alpha, v) for v in s.sigma)
        raw.append((Color("b", frozenset(cls), row), None))

    order = sorted(range(len(raw)), key=lambda i: raw[i][0].sort_key())
    cols = tuple(raw[i][0] for i in order)
    a_index = [None] * len(s.acolors)
    for pos, i in enumerate(order):
        if raw[i][1] is not None:
            a_index[raw[i][1]] = pos
    delta_of = {}
    for alpha in R.indices():
        delta_of[alpha] = tuple(
            pos for pos, c in enumerate(cols) if alpha in c.origin and alpha not in s.sp
        )
    return ColorSet(cols, delta_of, tuple(a_index))


def defect(s):
    return len(colors(s)) - len(s.sigma)


def localize(s, subset):
    return localize_with_map(s, subset)[0]


def localize_with_map(s, subset):
    """Localization to S' plus bookkeeping.

    Returns (system, index_translation, kept_sigma_positions, kept_acolor_positions).
    """
    subset = frozenset(subset)
    newR, tr = sub_root_system(s.R, subset)
    kept = [j for j, v in enumerate(s.sigma) if support(v) <= subset]
    new_sigma = tuple(translate_weight(s.sigma[j], tr, newR.rank) for j in kept)
    new_sp = frozenset(tr[a] for a in s.sp & subset)
    simple = s.s_cap_sigma() & subset
    kept_colors = [ci for ci, c in enumerate(s.acolors) if c.moved & simple]
    new_a = tuple(
        AColor(
            frozenset(tr[a] for a in s.acolors[ci].moved & subset),
            tuple(s.acolors[ci].row[j] for j in kept),
        )
        for ci in kept_colors
    )
    return SphericalSystem(newR, new_sp, new_sigma, new_a), tr, kept, kept_colors


def induce(s, R, embed=None):
    """Reinterpret a system over a bigger root system through an index embedding."""
    if embed is None:
        embed = {i: i for i in s.R.indices()}
    for i in s.R.indices():
        for j in s.R.indices():
            if s.R.cartan(i, j) != R.cartan(embed[i], embed[j]):
                raise InvalidSystem(
                    f"embedding mismatch at ({i},{j}): Cartan entries differ"
                )
    new_sigma = tuple(translate_weight(v, embed, R.rank) for v in s.sigma)
    new_sp = frozenset(embed[a] for a in s.sp)
    new_a = tuple(AColor(frozenset(embed[a] for a in c.moved), c.row) for c in s.acolors)
    return SphericalSystem(R, new_sp, new_sigma, new_a)


def is_cuspidal(s):
    covered = frozenset().union(*(support(v) for v in s.sigma)) if s.sigma else frozenset()
    return covered == frozenset(s.R.indices())


def direct_product(s1, s2):
    """Product system on the concatenation of the two root systems."""
    R = RootSystem(s1.R.components + s2.R.components)
    off = s1.R.rank
    shift = {i: i + off for i in s2.R.indices()}
    sigma = tuple(v + (0,) * s2.R.rank for v in s1.sigma) + tuple(
        (0,) * off + v for v in s2.sigma
    )
    z1, z2 = (0,) * len(s2.sigma), (0,) * len(s1.sigma)
    acolors = tuple(AColor(c.moved, c.row + z1) for c in s1.acolors) + tuple(
        AColor(frozenset(shift[a] for a in c.moved), z2 + c.row) for c in s2.acolors
    )
    return SphericalSystem(R, s1.sp | frozenset(shift[a] for a in s2.sp), sigma, acolors)


def product_splits(s):
    """Nontrivial splits of the components into two mutually silent halves.

    A split (K1, K2) of the component set qualifies if every sigma has support
    inside one half and every A-color row vanishes on the other half's sigma.
    """
    comps = range(len(s.R.components))
    if len(s.R.components) < 2:
        return []
    comp_of_sigma = []
    for v in s.sigma:
        ks = {s.R.component_of(i)[0] for i in support(v)}
        comp_of_sigma.append(ks)
    splits = []
    import itertools as _it

    for r in range(1, len(s.R.components)):
        for half in _it.combinations(comps, r):
            half = set(half)
            if 0 not in half:
                continue  # unordered: keep the half containing component 0
            sides = []
            ok = True
            for ks in comp_of_sigma:
                if ks <= half:
                    sides.append(0)
                elif ks & half:
                    ok = False
                    break
                else:
                    sides.append(1)
            if not ok:
                continue
            for c in s.acolors:
                cside = {0 if s.R.component_of(a)[0] in half else 1 for a in c.moved}
                if len(cside) != 1:
                    ok = False
                    break
                side = cside.pop()
                if any(val != 0 for j, val in enumerate(c.row) if sides[j] != side):
                    ok = False
                    break
            if ok:
                splits.append(frozenset(half))
    return splits


def is_direct_product(s):
    return bool(product_splits(s))


def canonical_key(s):
    """Canonical form: stable under color relabeling and sigma reordering."""
    order = sorted(range(len(s.sigma)), key=lambda j: s.sigma[j])
    sigma = tuple(s.sigma[j] for j in order)
    cols = tuple(
        sorted((tuple(sorted(c.moved)), tuple(c.row[j] for j in order)) for c in s.acolors)
    )
    return (s.R.name(), tuple(sorted(s.sp)), sigma, cols)


def apply_automorphism(s, perm):
    sigma = tuple(apply_permutation(perm, v) for v in s.sigma)
    sp = frozenset(perm[a - 1] for a in s.sp)
    acolors = tuple(AColor(frozenset(perm[a - 1] for a in c.moved), c.row) for c in s.acolors)
    return SphericalSystem(s.R, sp, sigma, acolors)


def equal_up_to_automorphism(s1, s2):
    if s1.R.name() != s2.R.name():
        return False
    k1 = canonical_key(s1)
    return any(canonical_key(apply_automorphism(s2, p)) == k1 for p in diagram_automorphisms(s2.R))


def automorphism_key(s):
    """Canonical form minimized over all diagram automorphisms."""
    return min(canonical_key(apply_automorphism(s, p)) for p in diagram_automorphisms(s.R))
