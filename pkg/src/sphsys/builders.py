"""Constructive operations: composing along a shared quotient, joining positive
combs, and grafting tails onto an A-type component."""

from __future__ import annotations

from .quotients import good_quotient
from .roots import RootSystem, cartan_pairing, support
from .sroots import classify, sp_bounds
from .system import (
    AColor,
    SphericalSystem,
    canonical_key,
    colors,
    ensure_valid,
    validate,
)


class CompositionError(ValueError):
    pass


class JoinError(ValueError):
    pass


class TailError(ValueError):
    pass


def compose(s1, s2, delta2, delta1):
    """Compose two R-systems along equal quotients S1/delta2 = S2/delta1.

    delta2 indexes a good distinguished subset of s1's colors, delta1 of
    s2's (canonical positions).  The underlying proposition asserts the
    result is again a spherical system; that is re-checked and a failure
    surfaces as an internal error, not a user error.
    """
    if s1.R.name() != s2.R.name():
        raise CompositionError("systems live on different root systems")
    q1 = good_quotient(s1, delta2)
    q2 = good_quotient(s2, delta1)
    if canonical_key(q1.system) != canonical_key(q2.system):
        raise CompositionError("quotients differ; nothing to compose along")
    sp12 = q1.system.sp
    if any(s1.R.cartan(a, b) != 0 for a in sp12 - s1.sp for b in sp12 - s2.sp):
        raise CompositionError("orthogonality hypothesis fails")
    sig1, sig2 = set(s1.sigma), set(s2.sigma)
    sig12 = set(q1.system.sigma)
    if (sig1 - sig12) & (sig2 - sig12):
        raise CompositionError("disjointness hypothesis fails")

    sigma = tuple(sorted((sig1 - sig12) | (sig2 - sig12) | (sig1 & sig2)))

    # identify A1/delta2 with A2/delta1 through the shared quotient
    map1 = _quotient_color_match(s1, q1)
    map2 = _quotient_color_match(s2, q2)
    ident = {map2[key]: ci1 for key, ci1 in map1.items() if key in map2}

    cs1, cs2 = colors(s1), colors(s2)
    in_delta = {}  # merged slot -> is the color in the distinguished subset of its side
    merged = []    # (moved set, {sigma vector: value})
    slot_of_s1 = {}
    for ci, c in enumerate(s1.acolors):
        slot_of_s1[ci] = len(merged)
        in_delta[len(merged)] = cs1.a_index[ci] in delta2
        merged.append([set(c.moved), {v: c.row[j] for j, v in enumerate(s1.sigma)}])
    for ci, c in enumerate(s2.acolors):
        vals = {v: c.row[j] for j, v in enumerate(s2.sigma)}
        if ci in ident:
            slot = slot_of_s1[ident[ci]]
            moved, known = merged[slot]
            for v, x in vals.items():
                if v in known and known[v] != x:
                    raise CompositionError("identified colors disagree on a shared root")
                known[v] = x
            moved |= c.moved
        else:
            in_delta[len(merged)] = cs2.a_index[ci] in delta1
            merged.append([set(c.moved), vals])

    acolors = []
    for slot, (moved, known) in enumerate(merged):
        row = []
        for v in sigma:
            if v in known:
                row.append(known[v])
            elif in_delta.get(slot):
                row.append(0)
            else:
                # forced by the coroot pairing of any moving root
                vals = {cartan_pairing(s1.R, alpha, v) for alpha in moved}
                if len(vals) != 1:
                    raise CompositionError("ambiguous pairing for an unidentified color")
                row.append(vals.pop())
        acolors.append(AColor(frozenset(moved), tuple(row)))

    composed = SphericalSystem(s1.R, s1.sp & s2.sp, sigma, tuple(acolors))
    report = validate(composed)
    if report:
        raise AssertionError(
            "composition produced an invalid system (contradicts the composition "
            "proposition): " + "; ".join(report)
        )
    return composed


def _quotient_color_match(s, qres):
    """Map (moved simple roots, row over the quotient generators) -> acolor index."""
    q = qres.system
    out = {}
    alive = q.s_cap_sigma()
    for ci, c in enumerate(s.acolors):
        if not (c.moved & alive):
            continue
        row = tuple(
            sum(cnt * c.row[j] for j, cnt in enumerate(x)) for x in qres.x_generators
        )
        out[(tuple(sorted(c.moved & alive)), row)] = ci
    return out


def join_positive_combs(s, comb_acolor_indices, partition):
    """Replace positive combs (acolor indices) by new combs over the partition blocks."""
    combs = sorted(set(comb_acolor_indices))
    for ci in combs:
        if any(v < 0 for v in s.acolors[ci].row):
            raise JoinError(f"A-color {ci} is not a positive comb")
    old_union = [a for ci in combs for a in sorted(s.acolors[ci].moved)]
    if len(set(old_union)) != len(old_union):
        raise JoinError("comb moved-sets are not pairwise disjoint")
    blocks = [frozenset(b) for b in partition]
    flat = [a for b in blocks for a in sorted(b)]
    if sorted(flat) != sorted(old_union) or len(set(flat)) != len(flat):
        raise JoinError("partition does not cover the union of the combs")

    simple_pos = {alpha: j for j, alpha in s.simple_positions().items()}
    new_a = [c for ci, c in enumerate(s.acolors) if ci not in combs]
    for b in blocks:
        row = [0] * len(s.sigma)
        for a in b:
            row[simple_pos[a]] = 1
        new_a.append(AColor(b, tuple(row)))
    return ensure_valid(SphericalSystem(s.R, s.sp, s.sigma, tuple(new_a)))


_EXCEPTIONAL_SPECS = {
    # kind -> (target component, beta2 local index, beta1 local index, new local roots)
    "(aa,aa)": (("E", 6), 4, 2, ((1, 0, 0, 0, 0, 1), (0, 0, 1, 0, 1, 0))),
    "(d3,d3)": (("E", 7), 3, 1, ((0, 1, 0, 2, 1, 0, 0), (0, 0, 0, 0, 1, 2, 1))),
    "(d5,d5)": (("E", 8), 7, 8, ((2, 1, 2, 2, 1, 0, 0, 0), (0, 1, 1, 2, 2, 2, 0, 0))),
    "(2a,2a)": (("F", 4), 2, 1, ((0, 0, 2, 0), (0, 0, 0, 2))),
}

_TAIL_COEFFS = {
    "b": lambda m: [1] * m,
    "2b": lambda m: [2] * m,
    "c": lambda m: [1] + [2] * (m - 2) + [1],
    "d": lambda m: [2] * (m - 2) + [1, 1],
}


def _check_free_a_colors(s, sigp, alpha):
    """Hypotheses at the attachment root: sigma' of type a(k) with a free color.

    Returns the acolor index of D' when sigma' is simple (rows must then be
    amended); otherwise None (the derived color handles itself).
    """
    if not sigp:
        return None
    if len(sigp) > 1:
        raise TailError("more than one root through the attachment vertex")
    v = sigp[0]
    sr = classify(s.R, v)
    if sr.base != "a":
        raise TailError(f"root {v} at the attachment is not of type a(k)")
    j = s.sigma.index(v)
    if sr.kind == "a1":
        frees = [
            ci
            for ci, c in enumerate(s.acolors)
            if alpha in c.moved and sum(1 for val in c.row if val > 0) <= 1
        ]
        if not frees:
            raise TailError(f"no free color moved by alpha_{alpha}")
        return frees[0]
    # k > 1: the derived color D_alpha must be free and pair 1 with sigma'
    cs = colors(s)
    for p in cs.delta_of[alpha]:
        c = cs.colors[p]
        if c.row[j] == 1 and sum(1 for val in c.row if val > 0) <= 1:
            return None
    raise TailError(f"no free color at alpha_{alpha} pairing 1 with {v}")


def add_tail(s, kind, m=None, component=None, attach=None):
    """Extend an A-type component (or append a fresh component) by a tail.

    kind is "b", "2b", "c" or "d" with arity m, or one of the exceptional
    pair kinds "(aa,aa)", "(d3,d3)", "(d5,d5)", "(2a,2a)".  attach names
    the end of the A-component adjacent to the new vertices (defaults to
    its last simple root).
    """
    if kind in _EXCEPTIONAL_SPECS:
        return _add_exceptional_tail(s, kind, component, attach)
    if kind not in _TAIL_COEFFS:
        raise TailError(f"unknown tail kind {kind!r}")
    if m is None:
        raise TailError("ordinary tails need an arity m")
    letter = {"b": "B", "2b": "B", "c": "C", "d": "D"}[kind]
    if m < (2 if kind in ("c", "d") else 1):
        raise TailError(f"tail {kind}({m}) below the minimal arity")

    if component is None:
        n = m
        if kind == "c" and n < 3:
            raise TailError("a whole c-tail needs m >= 3")
        if kind == "d" and n < 3:
            raise TailError("a whole d-tail needs m >= 3")
        newR = RootSystem(s.R.components + ((letter, n),))
        embed = {i: i for i in s.R.indices()}
        return _graft(s, newR, embed, kind, m, n, s.R.rank, None)

    letterA, r = s.R.components[component]
    if letterA != "A":
        raise TailError("tails attach to a component of type A")
    comp_idx = s.R.component_indices(component)
    if attach is None:
        attach = comp_idx[-1]
    if attach not in (comp_idx[0], comp_idx[-1]):
        raise TailError("attachment vertex must be an end of the A-component")
    ordered = list(comp_idx) if attach == comp_idx[-1] else list(reversed(comp_idx))

    n = r + m if kind != "c" else r + m - 1
    if kind == "c" and n < 3:
        raise TailError("c-tails need a resulting component of rank >= 3")
    comps = list(s.R.components)
    comps[component] = (letter, n)
    newR = RootSystem(tuple(comps))

    base_new = sum(c[1] for c in comps[:component])
    embed = {}
    for pos, g in enumerate(ordered):
        embed[g] = base_new + pos + 1
    off = 0
    for k, (_, nk) in enumerate(s.R.components):
        if k != component:
            bn = sum(c[1] for c in comps[:k])
            for loc in range(1, nk + 1):
                embed[off + loc] = bn + loc
        off += nk

    if kind == "c":
        overlap = ordered[-1]
        if not any(overlap in support(v) for v in s.sigma):
            raise TailError("c-tail needs a root through the overlap vertex")
        pred = ordered[-2] if len(ordered) >= 2 else None
        sigp = [v for v in s.sigma if pred is not None and pred in support(v)]
    else:
        sigp = [v for v in s.sigma if ordered[-1] in support(v)]
    dprime_alpha = (ordered[-2] if kind == "c" else ordered[-1]) if sigp else None
    dprime = _check_free_a_colors(s, sigp, dprime_alpha) if sigp else None
    return _graft(s, newR, embed, kind, m, n, base_new, dprime)


def _translate(v, embed, new_rank):
    out = [0] * new_rank
    for i, c in enumerate(v, start=1):
        if c:
            out[embed[i] - 1] = c
    return tuple(out)


def _graft(s, newR, embed, kind, m, n, base_new, dprime):
    sigma_new = [0] * newR.rank
    for off, coeff in enumerate(_TAIL_COEFFS[kind](m)):
        sigma_new[base_new + (n - m) + off] = coeff
    sigma_new = tuple(sigma_new)

    translated = [_translate(v, embed, newR.rank) for v in s.sigma]
    sigma = tuple(translated) + (sigma_new,)

    sp = {embed[a] for a in s.sp}
    sp |= set(sp_bounds(newR, sigma_new).spp)
    if kind == "b" and m > 1:
        sp.add(base_new + n)

    acolors = []
    for ci, c in enumerate(s.acolors):
        moved = frozenset(embed[a] for a in c.moved)
        if dprime is not None and ci == dprime:
            alpha = next(iter(c.moved))
            extra = cartan_pairing(newR, embed[alpha], sigma_new)
        else:
            extra = 0
        acolors.append(AColor(moved, c.row + (extra,)))

    if kind == "b" and m == 1:
        alpha_n = base_new + n
        vals = [cartan_pairing(newR, alpha_n, v) for v in translated]
        if any(v % 2 for v in vals):
            raise TailError("b(1) tail needs even pairings at the new short root")
        row = tuple(v // 2 for v in vals) + (1,)
        acolors.append(AColor(frozenset({alpha_n}), row))
        acolors.append(AColor(frozenset({alpha_n}), row))

    out = SphericalSystem(newR, frozenset(sp), sigma, tuple(acolors))
    report = validate(out)
    if report:
        raise TailError("grafted system is invalid: " + "; ".join(report))
    return out


def _add_exceptional_tail(s, kind, component, attach):
    (letter, n), beta2_local, beta1_local, locals_ = _EXCEPTIONAL_SPECS[kind]
    if component is None:
        raise TailError("exceptional tails extend an A2 component")
    if s.R.components[component] != ("A", 2):
        raise TailError("exceptional tails attach to an A2 component")
    comp_idx = s.R.component_indices(component)
    if attach is None:
        attach = comp_idx[-1]
    beta1 = comp_idx[0] if attach == comp_idx[-1] else comp_idx[-1]

    comps = list(s.R.components)
    comps[component] = (letter, n)
    newR = RootSystem(tuple(comps))
    base_new = sum(c[1] for c in comps[:component])
    embed = {attach: base_new + beta2_local, beta1: base_new + beta1_local}
    off = 0
    for k, (_, nk) in enumerate(s.R.components):
        if k != component:
            bn = sum(c[1] for c in comps[:k])
            for loc in range(1, nk + 1):
                embed[off + loc] = bn + loc
        off += nk

    translated = [_translate(v, embed, newR.rank) for v in s.sigma]
    new_vecs = []
    for lv in locals_:
        vec = [0] * newR.rank
        for loc, coeff in enumerate(lv, start=1):
            vec[base_new + loc - 1] = coeff
        new_vecs.append(tuple(vec))
    sigma = tuple(translated) + tuple(new_vecs)

    sp = {embed[a] for a in s.sp}
    for vec in new_vecs:
        sp |= set(sp_bounds(newR, vec).spp)
    sp -= set(embed[a] for a in (attach, beta1))

    sigp = [v for v in s.sigma if attach in support(v)]
    dprime = _check_free_a_colors(s, sigp, attach) if sigp else None

    acolors = []
    for ci, c in enumerate(s.acolors):
        moved = frozenset(embed[a] for a in c.moved)
        if dprime is not None and ci == dprime:
            alpha = next(iter(c.moved))
            extras = tuple(cartan_pairing(newR, embed[alpha], vec) for vec in new_vecs)
        else:
            extras = (0, 0)
        acolors.append(AColor(moved, c.row + extras))

    out = SphericalSystem(newR, frozenset(sp), sigma, tuple(acolors))
    report = validate(out)
    if report:
        raise TailError("grafted system is invalid: " + "; ".join(report))
    return out
