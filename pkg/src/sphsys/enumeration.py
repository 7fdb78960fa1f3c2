"""Exhaustive enumeration of spherical systems on a fixed root system.

The search is staged: choose Sigma (a pairwise-consistent, linearly
independent set of spherical roots), choose S^p between the forced lower
bound and the orthogonality upper bound, then backtrack over the abstract
color structure and the remaining Cartan pairing entries.  Every emitted
system passes the full validator.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .roots import cartan_pairing, linearly_independent, pairing_row, proportional, support
from .sroots import enumerate_spherical_roots, sp_bounds
from .system import (
    AColor,
    SphericalSystem,
    automorphism_key,
    canonical_key,
    is_cuspidal,
    is_direct_product,
    validate,
)

DEFAULT_RANK_CAP = 9


@dataclass(frozen=True)
class EnumerationConstraints:
    cuspidal_only: bool = False
    rank_min: int = 0
    rank_max: int | None = None
    dedup: str = "iso"          # "none" | "iso" | "auto"
    limit: int | None = None
    rank_cap: int = DEFAULT_RANK_CAP

    def __post_init__(self):
        if self.rank_min < 0:
            raise ValueError("rank_min must be nonnegative")
        if self.dedup not in ("none", "iso", "auto"):
            raise ValueError(f"unknown dedup mode {self.dedup!r}")


def _sigma_compatible(R, chosen, new):
    """Pairwise axiom prefilters for adding `new` to the chosen spherical roots."""
    for old in chosen:
        if proportional(old.vector, new.vector):
            return False
    for a, b in itertools.chain(((o, new) for o in chosen), ((new, o) for o in chosen)):
        supp = sorted(support(a.vector))
        if len(supp) == 1 and a.vector[supp[0] - 1] == 2:  # Sigma1 for a = 2*alpha
            val = cartan_pairing(R, supp[0], b.vector)
            if val % 2 != 0 or val > 0:
                return False
        if a.kind == "aa":  # Sigma2
            i, j = sorted(support(a.vector))
            if cartan_pairing(R, i, b.vector) != cartan_pairing(R, j, b.vector):
                return False
    return True


def enumerate_sigma_sets(R, rank_max, cuspidal_only=False):
    """All subsets of Sigma_ad(R) passing the Sigma-level filters."""
    roots = enumerate_spherical_roots(R)
    bounds = {s.vector: sp_bounds(R, s) for s in roots}
    out = []

    def feasible_sp(chosen):
        if not chosen:
            return True
        lower = frozenset().union(*(bounds[s.vector].spp for s in chosen))
        upper = frozenset(R.indices()).intersection(
            *(bounds[s.vector].sp_sigma for s in chosen)
        )
        return lower <= upper

    def rec(start, chosen):
        if feasible_sp(chosen):
            out.append(tuple(chosen))
        if len(chosen) >= rank_max:
            return
        for k in range(start, len(roots)):
            cand = roots[k]
            if not _sigma_compatible(R, chosen, cand):
                continue
            if not linearly_independent([s.vector for s in chosen] + [cand.vector]):
                continue
            chosen.append(cand)
            rec(k + 1, chosen)
            chosen.pop()

    rec(0, [])
    if cuspidal_only:
        full = frozenset(R.indices())
        out = [
            sig
            for sig in out
            if sig and frozenset().union(*(support(s.vector) for s in sig)) == full
        ]
    return out


def _sp_choices(R, sigma_roots):
    if not sigma_roots:
        lower, upper = frozenset(), frozenset(R.indices())
    else:
        bnds = [sp_bounds(R, s) for s in sigma_roots]
        lower = frozenset().union(*(b.spp for b in bnds))
        upper = frozenset(R.indices()).intersection(*(b.sp_sigma for b in bnds))
    if not lower <= upper:
        return
    free = sorted(upper - lower)
    for r in range(len(free) + 1):
        for extra in itertools.combinations(free, r):
            yield lower | frozenset(extra)


def _moved_structures(simple_alphas):
    """All ways to attach two colors to each simple spherical root.

    Colors are numbered 0.. in creation order; yields lists of frozensets
    (the moved set of each color).
    """
    results = []

    def rec(i, moved):
        if i == len(simple_alphas):
            results.append([frozenset(m) for m in moved])
            return
        alpha = simple_alphas[i]
        ncur = len(moved)
        # two fresh colors
        moved.extend([{alpha}, {alpha}])
        rec(i + 1, moved)
        moved.pop()
        moved.pop()
        # one existing + one fresh
        for c in range(ncur):
            moved[c].add(alpha)
            moved.append({alpha})
            rec(i + 1, moved)
            moved.pop()
            moved[c].remove(alpha)
        # two existing
        for c, d in itertools.combinations(range(ncur), 2):
            moved[c].add(alpha)
            moved[d].add(alpha)
            rec(i + 1, moved)
            moved[d].remove(alpha)
            moved[c].remove(alpha)

    rec(0, [])
    return results


def _row_assignments(R, sigma, simple_pos, moved_sets):
    """Backtrack over the unknown pairing entries given the color structure."""
    nsig = len(sigma)
    ncol = len(moved_sets)
    pairings = {alpha: pairing_row(R, alpha, sigma) for alpha in set().union(*moved_sets)} if moved_sets else {}
    partner = {}
    for alpha in pairings:
        cols = [c for c in range(ncol) if alpha in moved_sets[c]]
        partner[alpha] = cols
    simple_of = {j: a for j, a in simple_pos.items()}

    rows = [[None] * nsig for _ in range(ncol)]
    for c in range(ncol):
        for j in range(nsig):
            if simple_of.get(j) in moved_sets[c]:
                rows[c][j] = 1

    unknowns = [(c, j) for c in range(ncol) for j in range(nsig) if rows[c][j] is None]
    out = []

    def check(c, j):
        # verify every completed A2 sum touching entry (c, j)
        for alpha in moved_sets[c]:
            d = next(x for x in partner[alpha] if x != c) if len(partner[alpha]) == 2 else None
            if d is None:
                return False
            other = rows[d][j]
            if other is not None and rows[c][j] + other != pairings[alpha][j]:
                return False
        return True

    def rec(k):
        if k == len(unknowns):
            out.append([tuple(r) for r in rows])
            return
        c, j = unknowns[k]
        lo = max(pairings[alpha][j] - 1 for alpha in moved_sets[c])
        for v in range(min(0, lo), 0 + 1):
            if v < lo:
                continue
            rows[c][j] = v
            if check(c, j):
                rec(k + 1)
            rows[c][j] = None

    rec(0)
    return out


def enumerate_systems(R, constraints=EnumerationConstraints()):
    """All valid spherical systems on R meeting the constraints."""
    if R.rank > constraints.rank_cap:
        raise ValueError(
            f"rank {R.rank} exceeds the cap {constraints.rank_cap}; raise rank_cap to override"
        )
    rank_max = constraints.rank_max if constraints.rank_max is not None else R.rank
    rank_max = min(rank_max, R.rank)
    seen = set()
    results = []
    for sigma_roots in enumerate_sigma_sets(R, rank_max, constraints.cuspidal_only):
        if len(sigma_roots) < constraints.rank_min:
            continue
        sigma = tuple(s.vector for s in sigma_roots)
        simple_pos = {
            j: sorted(support(v))[0]
            for j, v in enumerate(sigma)
            if len(support(v)) == 1 and v[sorted(support(v))[0] - 1] == 1
        }
        simple_alphas = sorted(simple_pos.values())
        structures = _moved_structures(simple_alphas)
        for sp in _sp_choices(R, sigma_roots):
            for moved_sets in structures:
                for rows in _row_assignments(R, sigma, simple_pos, moved_sets):
                    acolors = tuple(
                        AColor(m, tuple(r)) for m, r in zip(moved_sets, rows)
                    )
                    cand = SphericalSystem(R, sp, sigma, acolors)
                    if validate(cand):
                        continue
                    key = (
                        automorphism_key(cand)
                        if constraints.dedup == "auto"
                        else canonical_key(cand)
                    )
                    if key in seen:
                        continue
                    seen.add(key)
                    results.append((key, cand))
    results.sort(key=lambda kv: kv[0])
    systems = [cand for _, cand in results]
    if constraints.limit is not None:
        systems = systems[: constraints.limit]
    return systems


def systems_with_sigma(R, sigma, sp=None, dedup="iso"):
    """All valid systems with the given spherical roots (and S^p, when fixed).

    Targeted version of enumerate_systems: only the color structure and the
    free pairing entries are searched.
    """
    sigma = tuple(tuple(v) for v in sigma)
    simple_pos = {
        j: sorted(support(v))[0]
        for j, v in enumerate(sigma)
        if len(support(v)) == 1 and v[sorted(support(v))[0] - 1] == 1
    }
    simple_alphas = sorted(simple_pos.values())
    from .sroots import classify

    roots = [classify(R, v) for v in sigma]
    sp_options = [frozenset(sp)] if sp is not None else list(_sp_choices(R, roots))
    seen, out = set(), []
    for spc in sp_options:
        for moved_sets in _moved_structures(simple_alphas):
            for rows in _row_assignments(R, sigma, simple_pos, moved_sets):
                acolors = tuple(AColor(m, tuple(r)) for m, r in zip(moved_sets, rows))
                cand = SphericalSystem(R, spc, sigma, acolors)
                if validate(cand):
                    continue
                key = automorphism_key(cand) if dedup == "auto" else canonical_key(cand)
                if key not in seen:
                    seen.add(key)
                    out.append((key, cand))
    return [c for _, c in sorted(out)]


def rank_le2_catalog_report(R, rank_cap=DEFAULT_RANK_CAP):
    """Compare enumerated cuspidal rank <= 2 systems against the encoded templates.

    Rank-1 covers all cuspidal systems; rank-2 covers the cuspidal systems
    that are not direct products.  Matching is up to diagram automorphism.
    """
    from . import catalog

    enumerated = []
    cons = EnumerationConstraints(cuspidal_only=True, rank_min=1, rank_max=2, dedup="auto", rank_cap=rank_cap)
    for s in enumerate_systems(R, cons):
        if s.rank == 2 and is_direct_product(s):
            continue
        enumerated.append(s)
    templates = catalog.rank_le2_templates(R)

    enum_keys = {automorphism_key(s): s for s in enumerated}
    matched, missing_templates = [], []
    used = set()
    for tid, tsys in templates:
        key = automorphism_key(tsys)
        if key in enum_keys and key not in used:
            matched.append((tid, tsys))
            used.add(key)
        else:
            missing_templates.append((tid, tsys))
    unmatched_enum = [s for k, s in enum_keys.items() if k not in used]
    return {
        "root_system": R.name(),
        "enumerated": enumerated,
        "matched": matched,
        "unmatched_enumerated": unmatched_enum,
        "unmatched_templates": missing_templates,
    }
