"""Structural classification: combs, tails, decompositions, primitivity, clans,
color-connectivity and erasability of localizations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .quotients import (
    is_distinguished,
    quotient,
    quotient_sigma,
)
from .roots import support
from .sroots import classify
from .system import colors, is_cuspidal, localize_with_map, validate


@dataclass(frozen=True)
class TailRecord:
    kind: str          # "b(2)", "2b(1)", "c(3)", "d(4)", "(aa,aa)", ...
    roots: tuple       # the weight vector(s) forming the tail
    delta_prime: tuple # a witnessing good distinguished subset


def positive_combs(s, cs=None):
    """All A-colors with nonnegative pairing row, as (canonical color position, |S_D|)."""
    cs = cs or colors(s)
    out = []
    for ci, c in enumerate(s.acolors):
        if all(v >= 0 for v in c.row):
            out.append((cs.a_index[ci], len(c.moved)))
    return sorted(out)


def _annihilator_subsets(s, cs, target_positions):
    """Subsets of colors pairing to zero with every target sigma position."""
    ann = [
        pos
        for pos, c in enumerate(cs.colors)
        if all(c.row[j] == 0 for j in target_positions)
    ]
    for r in range(1, len(ann) + 1):
        for sub in itertools.combinations(ann, r):
            yield sub


def _witness_quotient(s, cs, target_js):
    """A good distinguished subset with Sigma/Delta' exactly the given roots, or None."""
    target = tuple(sorted(s.sigma[j] for j in target_js))
    for sub in _annihilator_subsets(s, cs, target_js):
        if not is_distinguished(s, sub, cs):
            continue
        _, weights = quotient_sigma(s, sub, cs)
        if tuple(sorted(weights)) != target:
            continue
        if quotient(s, sub, cs).good:
            return sub
    return None


_EXCEPTIONAL_TAILS = {
    # component type -> (tail kind, local coefficient vectors)
    ("E", 6): ("(aa,aa)", ((1, 0, 0, 0, 0, 1), (0, 0, 1, 0, 1, 0))),
    ("E", 7): ("(d3,d3)", ((0, 1, 0, 2, 1, 0, 0), (0, 0, 0, 0, 1, 2, 1))),
    ("E", 8): ("(d5,d5)", ((2, 1, 2, 2, 1, 0, 0, 0), (0, 1, 1, 2, 2, 2, 0, 0))),
    ("F", 4): ("(2a,2a)", ((0, 0, 2, 0), (0, 0, 0, 2))),
}


def _tail_shapes(letter, n):
    """(kind, local coefficient vector, needs alpha_n in S^p, equal-rows condition) per m."""
    shapes = []
    if letter == "B":
        for m in range(1, n + 1):
            vec = tuple(0 if i <= n - m else 1 for i in range(1, n + 1))
            shapes.append((f"b({m})", vec, m > 1, m == 1))
            vec2 = tuple(0 if i <= n - m else 2 for i in range(1, n + 1))
            shapes.append((f"2b({m})", vec2, False, False))
    elif letter == "C":
        for m in range(2, n + 1):
            vec = [0] * n
            vec[n - m] = 1
            for i in range(n - m + 1, n - 1):
                vec[i] = 2
            vec[n - 1] = 1
            shapes.append((f"c({m})", tuple(vec), False, False))
    elif letter == "D":
        for m in range(2, n + 1):
            vec = [0] * n
            for i in range(n - m, n - 2):
                vec[i] = 2
            vec[n - 2] = vec[n - 1] = 1
            shapes.append((f"d({m})", tuple(vec), False, False))
    return shapes


def find_tails(s, cs=None):
    """All tails (ordinary and exceptional) with a witnessing good distinguished subset."""
    cs = cs or colors(s)
    out = []
    sigma_index = {v: j for j, v in enumerate(s.sigma)}
    for k, (letter, n) in enumerate(s.R.components):
        comp = s.R.component_indices(k)

        def globalize(local_vec):
            out_vec = [0] * s.R.rank
            for off, coeff in enumerate(local_vec):
                out_vec[comp[off] - 1] = coeff
            return tuple(out_vec)

        for kind, local_vec, need_sp, need_equal_rows in _tail_shapes(letter, n):
            vec = globalize(local_vec)
            j = sigma_index.get(vec)
            if j is None:
                continue
            alpha_n = comp[-1]
            if need_sp and alpha_n not in s.sp:
                continue
            if need_equal_rows:
                pair = s.a_of(alpha_n)
                if len(pair) != 2 or pair[0].row != pair[1].row:
                    continue
            witness = _witness_quotient(s, cs, (j,))
            if witness is not None:
                out.append(TailRecord(kind, (vec,), witness))
        exc = _EXCEPTIONAL_TAILS.get((letter, n))
        if exc:
            kind, locals_ = exc
            vecs = tuple(globalize(lv) for lv in locals_)
            js = tuple(sigma_index.get(v) for v in vecs)
            if None not in js:
                witness = _witness_quotient(s, cs, js)
                if witness is not None:
                    out.append(TailRecord(kind, vecs, witness))
    return out


def _good_distinguished_cache(s, cs):
    """Map subset -> (cover set of sigma positions, S^p gain) for all good distinguished subsets."""
    cache = {}
    ann = [frozenset(j for j, v in enumerate(c.row) if v == 0) for c in cs.colors]
    positions = range(len(cs.colors))
    for r in range(1, len(cs.colors) + 1):
        for sub in itertools.combinations(positions, r):
            if not is_distinguished(s, sub, cs):
                continue
            res = quotient(s, sub, cs)
            if not res.good:
                cache[sub] = None
                continue
            cover = frozenset(
                j for j in range(len(s.sigma)) if all(j in ann[p] for p in sub)
            )
            gain = res.system.sp - s.sp
            cache[sub] = (cover, gain)
    return cache


def decompositions(s, cs=None, early_exit=False):
    """All unordered pairs of good distinguished subsets decomposing the system."""
    cs = cs or colors(s)
    nsig = len(s.sigma)
    cache = _good_distinguished_cache(s, cs)
    goods = [(sub, info) for sub, info in cache.items() if info is not None]
    out = []
    seen = set()
    for (sub1, (cover1, gain1)), (sub2, (cover2, gain2)) in itertools.combinations_with_replacement(goods, 2):
        if cover1 | cover2 != frozenset(range(nsig)):
            continue
        if any(s.R.cartan(a, b) != 0 for a in gain1 for b in gain2):
            continue
        key = tuple(sorted((sub1, sub2)))
        if key in seen:
            continue
        seen.add(key)
        out.append(key)
        if early_exit:
            return out
    return out


def is_decomposable(s, cs=None):
    return bool(decompositions(s, cs, early_exit=True))


def is_primitive(s, cs=None):
    """Cuspidal, not decomposable, without positive combs, without tails."""
    cs = cs or colors(s)
    if not is_cuspidal(s):
        return False, "not cuspidal"
    if is_decomposable(s, cs):
        return False, "decomposable"
    combs = positive_combs(s, cs)
    if combs:
        return False, f"positive comb {combs[0]}"
    tails = find_tails(s, cs)
    if tails:
        return False, f"tail {tails[0].kind}"
    return True, ""


def clan(s, cs=None):
    """The clan (R, S or T) of a primitive system."""
    cs = cs or colors(s)
    prim, reason = is_primitive(s, cs)
    if not prim:
        raise ValueError(f"clan undefined: system is not primitive ({reason})")
    kinds = [classify(s.R, v) for v in s.sigma]
    supports = [support(v) for v in s.sigma]
    overlaps = [
        (j, k)
        for j in range(len(s.sigma))
        for k in range(j + 1, len(s.sigma))
        if supports[j] & supports[k]
    ]

    def overlapping(j):
        return any(j in pair for pair in overlaps)

    if any(k.base == "a" and overlapping(j) for j, k in enumerate(kinds)):
        return "T"
    s_like = all(
        k.base == "a" or (k.kind == "b2" and not (supports[j] & s.sp))
        for j, k in enumerate(kinds)
    )
    if s_like and not overlaps:
        return "S"
    has_r_marker = any(k.kind in ("aa", "2a") for k in kinds) or any(
        k.base == "d" and (k.arity or 0) >= 3 for k in kinds
    )
    if has_r_marker:
        return "R"
    raise ValueError("system matches no clan characterization")


def color_adjacent(s, cs, j, k):
    """Both-sided color adjacency of sigma_j and sigma_k."""

    def one_side(a_root, b_root):
        for alpha in support(s.sigma[a_root]):
            ds = cs.delta_of[alpha]
            if ds and all(cs.colors[p].row[b_root] != 0 for p in ds):
                return True
        return False

    return one_side(j, k) and one_side(k, j)


@dataclass(frozen=True)
class ConnectivityReport:
    adjacency: frozenset      # unordered position pairs
    weak_adjacency: frozenset
    components: tuple         # frozensets of sigma positions (under the chosen relation)


def _transitive_components(n, pairs):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    groups = {}
    for x in range(n):
        groups.setdefault(find(x), set()).add(x)
    return tuple(sorted((frozenset(g) for g in groups.values()), key=min))


def weak_plug_pair(s, cs, j, k):
    """Do sigma_j, sigma_k lie in a weak plug (through some third root)?"""
    supp_jk = support(s.sigma[j]) | support(s.sigma[k])
    for m in range(len(s.sigma)):
        if m in (j, k):
            continue
        s_prime = supp_jk | support(s.sigma[m])
        loc, tr, kept, _ = localize_with_map(s, s_prime)
        if sorted(kept) != sorted((j, k, m)):
            continue
        lj, lk, lm = kept.index(j), kept.index(k), kept.index(m)
        lcs = colors(loc)
        connected = support(s.sigma[j]) & support(s.sigma[k]) or _loc_connected(
            loc, lcs, lj, lk
        )
        if not connected:
            continue
        found = []
        for alpha in support(loc.sigma[lm]):
            for p in lcs.delta_of[alpha]:
                if lcs.colors[p].row[lj] != 0:
                    found.append((p, "j"))
                if lcs.colors[p].row[lk] != 0:
                    found.append((p, "k"))
        ps_j = {p for p, side in found if side == "j"}
        ps_k = {p for p, side in found if side == "k"}
        if any(pj != pk for pj in ps_j for pk in ps_k):
            return True
    return False


def _loc_connected(loc, lcs, a, b):
    n = len(loc.sigma)
    pairs = [
        (x, y)
        for x in range(n)
        for y in range(x + 1, n)
        if color_adjacent(loc, lcs, x, y)
    ]
    for comp in _transitive_components(n, pairs):
        if a in comp and b in comp:
            return True
    return False


def color_connectivity(s, weak=False, cs=None):
    """Adjacency/weak-adjacency relations on Sigma and their transitive components."""
    cs = cs or colors(s)
    n = len(s.sigma)
    adj = set()
    for j in range(n):
        for k in range(j + 1, n):
            if color_adjacent(s, cs, j, k):
                adj.add((j, k))
    weak_adj = set(adj)
    for j in range(n):
        for k in range(j + 1, n):
            if (j, k) in weak_adj:
                continue
            if support(s.sigma[j]) & support(s.sigma[k]):
                weak_adj.add((j, k))
            elif weak_plug_pair(s, cs, j, k):
                weak_adj.add((j, k))
    rel = weak_adj if weak else adj
    return ConnectivityReport(
        frozenset(adj), frozenset(weak_adj), _transitive_components(n, rel)
    )


def weak_components(s, cs=None):
    return color_connectivity(s, weak=True, cs=cs).components


def _localized_color_images(s, loc, tr, kept, kept_acolors, cs, lcs):
    """Map each localized color position to the matching global color position."""
    inv = {new: old for old, new in tr.items()}
    images = {}
    for lp, lc in enumerate(lcs.colors):
        if lc.kind == "a":
            ai = next(
                i
                for i, ci in enumerate(kept_acolors)
                if lcs.a_index[i] == lp
            )
            images[lp] = cs.a_index[kept_acolors[ai]]
        else:
            alpha = inv[min(lc.origin)]
            ds = cs.delta_of[alpha]
            images[lp] = ds[0]
    return images


def classify_localization(s, subset, cs=None):
    """Strongest label among isolated / erasable / quasi_erasable for a localization.

    Precondition: the localized spherical roots form a union of
    weakly-color-connected components of the ambient system.
    """
    cs = cs or colors(s)
    subset = frozenset(subset)
    loc, tr, kept, kept_acolors = localize_with_map(s, subset)
    comps = weak_components(s, cs)
    kept_set = frozenset(kept)
    if not all(comp <= kept_set or not (comp & kept_set) for comp in comps):
        raise ValueError("localization is not weakly-color-saturated")

    outside = [i for i in s.R.indices() if i not in subset]
    if all(s.R.cartan(a, b) == 0 for a in subset for b in outside):
        return "isolated"

    lcs = colors(loc)
    images = _localized_color_images(s, loc, tr, kept, kept_acolors, cs, lcs)
    outside_js = [j for j in range(len(s.sigma)) if j not in kept]
    annihilating = [
        lp
        for lp in range(len(lcs.colors))
        if all(cs.colors[images[lp]].row[j] == 0 for j in outside_js)
    ]
    best = "none"
    for r in range(1, len(annihilating) + 1):
        for sub in itertools.combinations(annihilating, r):
            if not is_distinguished(loc, sub, lcs):
                continue
            _, weights = quotient_sigma(loc, sub, lcs)
            if not weights and quotient(loc, sub, lcs).good:
                return "erasable"
            best = "quasi_erasable"
    return best
