"""Finite reduced root systems at the simple-root level.

Everything here is exact integer arithmetic on Bourbaki Cartan matrices.
A root system is a product of irreducible components (types A-G); simple
roots get global 1-based indices, components concatenated in declaration
order.  Weights (integer combinations of simple roots) are dense tuples
of coefficients in global index order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}
MAX_RANK = {"A": None, "B": None, "C": None, "D": None, "E": 8, "F": 4, "G": 2}


def cartan_matrix(letter, n):
    """Bourbaki Cartan matrix of an irreducible type, entry [i][j] = <a_j, a_i^vee> (0-based)."""
    a = [[2 * (i == j) for j in range(n)] for i in range(n)]

    def chain(i, j):
        a[i][j] = a[j][i] = -1

    if letter in ("A", "B", "C"):
        for i in range(n - 1):
            chain(i, i + 1)
        if letter == "B":            # alpha_n short
            a[n - 1][n - 2] = -2
        elif letter == "C":          # alpha_n long
            a[n - 2][n - 1] = -2
    elif letter == "D":
        for i in range(n - 2):
            chain(i, i + 1)
        chain(n - 3, n - 1)
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        if n == 3:                   # D3: both forks hang off alpha_1
            a[0][2] = a[2][0] = -1
            a[0][1] = a[1][0] = -1
            a[1][2] = a[2][1] = 0
    elif letter == "E":
        # chain 1-3-4-5-6(-7-8), node 2 attached to 4
        for i, j in zip((1, 3, 4, 5, 6), (3, 4, 5, 6, 7)):
            if j <= n:
                chain(i - 1, j - 1)
        chain(2 - 1, 4 - 1)
    elif letter == "F":
        chain(0, 1)
        chain(2, 3)
        a[1][2] = -1
        a[2][1] = -2                 # alpha_3 short
    elif letter == "G":
        a[0][1] = -3                 # alpha_1 short
        a[1][0] = -1
    else:
        raise ValueError(f"unknown type {letter!r}")
    return tuple(tuple(row) for row in a)


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True)
class RootSystem:
    """Ordered product of irreducible components, e.g. RootSystem.parse("B2xA1")."""

    components: tuple  # of (letter, rank)

    def __post_init__(self):
        comps = []
        for letter, n in self.components:
            letter = letter.upper()
            if letter not in MIN_RANK:
                raise RootSystemError(f"unknown component type {letter!r}")
            if n < MIN_RANK[letter] or (MAX_RANK[letter] and n > MAX_RANK[letter]):
                raise RootSystemError(f"rank {n} out of range for type {letter}")
            # one canonical form per isomorphism class
            if (letter, n) == ("C", 2):
                letter = "B"
            elif (letter, n) == ("D", 3):
                letter, n = "A", 3
            comps.append((letter, n))
        object.__setattr__(self, "components", tuple(comps))

    @classmethod
    def parse(cls, text):
        """Parse a literal like "A3", "B2xA1" (case-insensitive)."""
        comps = []
        for part in text.strip().split("x"):
            part = part.strip()
            if len(part) < 2 or not part[1:].isdigit():
                raise RootSystemError(f"bad root system literal {part!r}")
            comps.append((part[0].upper(), int(part[1:])))
        if not comps or comps == [("", 0)]:
            raise RootSystemError("empty root system literal")
        return cls(tuple(comps))

    @classmethod
    def empty(cls):
        return cls(())

    @property
    def rank(self):
        return sum(n for _, n in self.components)

    def name(self):
        return "x".join(f"{t}{n}" for t, n in self.components) if self.components else "0"

    def __str__(self):
        return self.name()

    def component_of(self, i):
        """Global 1-based index -> (component position, local 1-based index)."""
        off = 0
        for k, (_, n) in enumerate(self.components):
            if i <= off + n:
                return k, i - off
            off += n
        raise IndexError(f"simple root index {i} out of range")

    def component_indices(self, k):
        """Global indices of component k, in order."""
        off = sum(n for _, n in self.components[:k])
        return list(range(off + 1, off + self.components[k][1] + 1))

    def cartan(self, i, j):
        """<alpha_j, alpha_i^vee> for global 1-based i, j."""
        ki, li = self.component_of(i)
        kj, lj = self.component_of(j)
        if ki != kj:
            return 0
        letter, n = self.components[ki]
        return cartan_matrix(letter, n)[li - 1][lj - 1]

    def indices(self):
        return range(1, self.rank + 1)

    def adjacent(self, i, j):
        return i != j and self.cartan(i, j) != 0

    def zero(self):
        return (0,) * self.rank

    def alpha(self, i):
        """The i-th simple root as a weight vector."""
        return tuple(int(j == i) for j in self.indices())


def support(w):
    """Indices of nonzero coefficients."""
    return frozenset(i for i, c in enumerate(w, start=1) if c)


def add_weights(*ws):
    return tuple(sum(t) for t in zip(*ws))


def scale_weight(c, w):
    return tuple(c * x for x in w)


def cartan_pairing(R, i, w):
    """<alpha_i^vee, w> = sum_j w_j <alpha_j, alpha_i^vee>."""
    if not 1 <= i <= R.rank:
        raise IndexError(f"simple root index {i} out of range for {R}")
    return sum(c * R.cartan(i, j) for j, c in enumerate(w, start=1) if c)


def pairing_row(R, i, weights):
    return tuple(cartan_pairing(R, i, w) for w in weights)


def orthogonal(R, i, w):
    return cartan_pairing(R, i, w) == 0


def _component_automorphisms(letter, n):
    """Diagram automorphisms of one component as local index permutations (1-based tuples)."""
    ident = tuple(range(1, n + 1))
    if letter == "A" and n >= 2:
        return [ident, tuple(range(n, 0, -1))]
    if letter == "D" and n == 4:
        perms = []
        for img in itertools.permutations((1, 3, 4)):
            p = {1: img[0], 3: img[1], 4: img[2], 2: 2}
            perms.append(tuple(p[i] for i in range(1, 5)))
        return perms
    if letter == "D" and n >= 5:
        swap = list(range(1, n + 1))
        swap[n - 2], swap[n - 1] = swap[n - 1], swap[n - 2]
        return [ident, tuple(swap)]
    if letter == "E" and n == 6:
        return [ident, (6, 2, 5, 4, 3, 1)]
    return [ident]


def diagram_automorphisms(R):
    """All permutations of global indices preserving the Cartan matrix (the full group)."""
    comps = R.components
    groups = {}
    for k, c in enumerate(comps):
        groups.setdefault(c, []).append(k)
    perms = []
    # ways to permute isomorphic components among themselves
    group_keys = list(groups)
    for images in itertools.product(*(itertools.permutations(groups[c]) for c in group_keys)):
        comp_image = {}
        for c, img in zip(group_keys, images):
            for src, dst in zip(groups[c], img):
                comp_image[src] = dst
        locals_per_comp = [_component_automorphisms(*comps[k]) for k in range(len(comps))]
        for choice in itertools.product(*locals_per_comp):
            perm = [0] * R.rank
            for k in range(len(comps)):
                src_idx = R.component_indices(k)
                dst_idx = R.component_indices(comp_image[k])
                loc = choice[k]
                for pos, g in enumerate(src_idx):
                    perm[g - 1] = dst_idx[loc[pos] - 1]
            perms.append(tuple(perm))
    return sorted(set(perms))


def apply_permutation(perm, w):
    """Push a weight through an index permutation (perm maps old index -> new index)."""
    out = [0] * len(w)
    for i, c in enumerate(w, start=1):
        out[perm[i - 1] - 1] = c
    return tuple(out)


def _classify_component(R, verts):
    """Classify the subdiagram on `verts` (connected): returns (letter, n, iso)
    where iso maps canonical local index (1-based) -> global index."""
    n = len(verts)
    degree = {v: sum(1 for u in verts if u != v and R.cartan(v, u) != 0) for v in verts}
    mults = [abs(R.cartan(v, u)) for v in verts for u in verts if u != v and R.cartan(v, u) != 0]
    max_mult = max(mults, default=0)
    max_deg = max(degree.values(), default=0)
    ends = [v for v in verts if degree[v] == 1]

    if max_mult == 3:
        letter = "G"
    elif max_mult == 2:
        # one double bond; <alpha_long, alpha_short^vee> = -2 identifies the short side
        short = next(v for v in verts for u in verts if u != v and R.cartan(v, u) == -2)
        lng = next(u for u in verts if u != short and R.cartan(short, u) == -2)
        if n == 2:
            letter = "B"
        elif short in ends:
            letter = "B"
        elif lng in ends:
            letter = "C"
        else:
            letter = "F"
    elif max_deg == 3:
        forks = [v for v in verts if degree[v] == 3]
        arms = sorted(_arm_lengths(R, verts, forks[0])) if len(forks) == 1 else []
        if len(arms) == 3 and arms[0] == 1 and arms[1] == 1:
            letter = "D"
        elif len(arms) == 3 and arms[0] == 1 and arms[1] == 2:
            letter = "E"
        else:
            raise RootSystemError(f"subdiagram on {sorted(verts)} is not of finite type")
    else:
        letter = "A"

    iso = _find_iso(R, verts, letter, n)
    if iso is None:
        raise RootSystemError(f"subdiagram on {sorted(verts)} is not of type {letter}{n}")
    return letter, n, iso


def _arm_lengths(R, verts, fork):
    lengths = []
    for u in verts:
        if u != fork and R.cartan(fork, u) != 0:
            ln, prev, cur = 1, fork, u
            while True:
                nxt = [w for w in verts if w not in (prev, cur) and R.cartan(cur, w) != 0]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                ln += 1
            lengths.append(ln)
    return lengths


def _find_iso(R, verts, letter, n):
    """Bijection canonical local index -> global vertex matching the Cartan matrix."""
    target = cartan_matrix(letter, n)
    verts = sorted(verts)

    def extend(assign):
        k = len(assign)
        if k == n:
            return assign
        for v in verts:
            if v in assign:
                continue
            ok = all(
                target[k][i] == R.cartan(v, assign[i]) and target[i][k] == R.cartan(assign[i], v)
                for i in range(k)
            )
            if ok:
                res = extend(assign + [v])
                if res:
                    return res
        return None

    res = extend([])
    return {i + 1: g for i, g in enumerate(res)} if res else None


def connected_components(R, verts):
    """Split an index set into connected subdiagram components (sorted by min index)."""
    verts = set(verts)
    comps = []
    while verts:
        seed = min(verts)
        comp, frontier = {seed}, [seed]
        while frontier:
            v = frontier.pop()
            for u in list(verts):
                if u not in comp and R.cartan(v, u) != 0:
                    comp.add(u)
                    frontier.append(u)
        verts -= comp
        comps.append(sorted(comp))
    return sorted(comps, key=min)


def sub_root_system(R, subset):
    """Root subsystem generated by a set of simple roots.

    Returns (RootSystem, translation) where translation maps old global index
    -> new global index of the sub-system (canonical Bourbaki labels per
    component, components ordered by minimal old index).
    """
    subset = sorted(set(subset))
    if not subset:
        return RootSystem.empty(), {}
    comps, translation, new_comps = connected_components(R, subset), {}, []
    off = 0
    for comp in comps:
        letter, n, iso = _classify_component(R, comp)
        # canonicalize C2 -> B2 and D3 -> A3 via RootSystem's constructor later;
        # build the translation against the canonical relabeling
        canon = RootSystem(((letter, n),)).components[0]
        if canon != (letter, n):
            iso = _recanonicalize_iso(R, comp, letter, n, canon)
            letter, n = canon
        for loc, g in iso.items():
            translation[g] = off + loc
        new_comps.append((letter, n))
        off += n
    return RootSystem(tuple(new_comps)), translation


def _recanonicalize_iso(R, comp, letter, n, canon):
    iso = _find_iso(R, comp, *canon)
    if iso is None:
        raise RootSystemError(f"cannot relabel {letter}{n} component as {canon[0]}{canon[1]}")
    return iso


def translate_weight(w, translation, new_rank):
    out = [0] * new_rank
    for i, c in enumerate(w, start=1):
        if c:
            out[translation[i] - 1] = c
    return tuple(out)


def linearly_independent(weights):
    """Exact rational row reduction."""
    mat = [[Fraction(c) for c in w] for w in weights]
    rank_count, ncols = 0, len(mat[0]) if mat else 0
    for col in range(ncols):
        piv = next((r for r in range(rank_count, len(mat)) if mat[r][col]), None)
        if piv is None:
            continue
        mat[rank_count], mat[piv] = mat[piv], mat[rank_count]
        pr = mat[rank_count]
        for r in range(len(mat)):
            if r != rank_count and mat[r][col]:
                f = mat[r][col] / pr[col]
                mat[r] = [x - f * y for x, y in zip(mat[r], pr)]
        rank_count += 1
    return rank_count == len(weights)


def proportional(v, w):
    """True if v = c*w or w = c*v for a rational c (both nonzero)."""
    if not any(v) or not any(w):
        return False
    if support(v) != support(w):
        return False
    ratios = {Fraction(a, b) for a, b in zip(v, w) if b}
    return len(ratios) == 1
