"""Distinguished subsets of colors and quotient systems.

A subset of colors is distinguished when some strictly positive integer
combination of them pairs nonnegatively with every spherical root; this is
decided by exact rational feasibility.  The quotient triple is built from
the minimal generators of the annihilated sub-monoid of N Sigma (a Hilbert
basis computation) and validated; a distinguished subset is good exactly
when that validation passes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .hilbert import hilbert_basis
from .polyhedra import feasible_strict_nonneg
from .roots import add_weights, diagram_automorphisms, scale_weight, support
from .system import (
    AColor,
    SphericalSystem,
    apply_automorphism,
    canonical_key,
    colors,
    defect,
    validate,
)


class NotDistinguished(ValueError):
    pass


class NotGood(ValueError):
    def __init__(self, message, report):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class QuotientResult:
    delta_prime: tuple        # canonical color positions
    x_generators: tuple       # minimal generators in the Sigma basis
    generators: tuple         # the same, as weight vectors over S
    system: object            # quotient SphericalSystem (even when not good)
    violations: tuple         # nonempty iff not good
    arrow: str                # "defect_decreasing" / "defect_nondecreasing" (good only)

    @property
    def good(self):
        return not self.violations

    @property
    def homogeneous(self):
        return self.good and not self.generators


def is_positive(cs, combo):
    """Is sum_D combo[D]*D positive (pairs >= 0 with every sigma)?"""
    if not combo:
        return True
    nsigma = len(cs.colors[0].row) if cs.colors else 0
    for j in range(nsigma):
        if sum(coeff * cs.colors[pos].row[j] for pos, coeff in combo.items()) < 0:
            return False
    return True


def is_distinguished(s, delta_prime, cs=None):
    """Existence of a positive element with strictly positive coefficients on delta_prime."""
    delta_prime = sorted(set(delta_prime))
    if not delta_prime:
        raise NotDistinguished("empty subset of colors")
    cs = cs or colors(s)
    nsigma = len(s.sigma)
    rows = [tuple(cs.colors[pos].row[j] for pos in delta_prime) for j in range(nsigma)]
    return feasible_strict_nonneg(rows, len(delta_prime))


def quotient_sigma(s, delta_prime, cs=None):
    """Minimal generators of {x in N Sigma : c(D, x) = 0 for D in delta_prime}.

    Returns (x_vectors, weight_vectors), both in a fixed sorted order.
    """
    cs = cs or colors(s)
    rows = [cs.colors[pos].row for pos in sorted(set(delta_prime))]
    xs = hilbert_basis(rows, len(s.sigma))
    weights = []
    for x in xs:
        terms = [scale_weight(c, v) for c, v in zip(x, s.sigma) if c]
        weights.append(add_weights(*terms) if terms else s.R.zero())
    order = sorted(range(len(xs)), key=lambda i: weights[i])
    return tuple(xs[i] for i in order), tuple(weights[i] for i in order)


def quotient(s, delta_prime, cs=None):
    """Build S/Delta' and report goodness; raises NotDistinguished when applicable."""
    cs = cs or colors(s)
    delta_prime = tuple(sorted(set(delta_prime)))
    if not is_distinguished(s, delta_prime, cs):
        raise NotDistinguished(f"colors {delta_prime} admit no positive combination")
    xs, weights = quotient_sigma(s, delta_prime, cs)

    new_sp = frozenset(
        alpha
        for alpha in s.R.indices()
        if set(cs.delta_of[alpha]) <= set(delta_prime)
    )
    # A/Delta' = colors of A moved by the simple roots that survive in Sigma/Delta'
    new_simple = {}
    for gi, w in enumerate(weights):
        supp = sorted(support(w))
        if len(supp) == 1 and w[supp[0] - 1] == 1:
            new_simple[supp[0]] = gi
    kept = []
    for ci, c in enumerate(s.acolors):
        if c.moved & set(new_simple):
            kept.append(ci)
    new_a = []
    for ci in kept:
        row = tuple(
            sum(cnt * s.acolors[ci].row[j] for j, cnt in enumerate(x) if cnt) for x in xs
        )
        moved = frozenset(a for a, gi in new_simple.items() if row[gi] == 1)
        new_a.append(AColor(moved, row))
    q = SphericalSystem(s.R, new_sp, weights, tuple(new_a))
    report = validate(q)
    arrow = ""
    if not report:
        arrow = "defect_decreasing" if defect(q) < defect(s) else "defect_nondecreasing"
    return QuotientResult(delta_prime, xs, weights, q, tuple(report), arrow)


def good_quotient(s, delta_prime, cs=None):
    res = quotient(s, delta_prime, cs)
    if not res.good:
        raise NotGood(f"distinguished subset {delta_prime} is not good", res.violations)
    return res


def is_homogeneous(s, delta_prime, cs=None):
    _, weights = quotient_sigma(s, delta_prime, cs)
    return not weights


def distinguished_subsets(s, cs=None):
    """All nonempty distinguished subsets of colors, as sorted position tuples."""
    cs = cs or colors(s)
    out = []
    positions = range(len(cs.colors))
    for r in range(1, len(cs.colors) + 1):
        for sub in itertools.combinations(positions, r):
            if is_distinguished(s, sub, cs):
                out.append(sub)
    return out


def minimal_distinguished_subsets(s, cs=None):
    """Inclusion-minimal nonempty distinguished subsets."""
    cs = cs or colors(s)
    minimal = []
    positions = range(len(cs.colors))
    for r in range(1, len(cs.colors) + 1):
        for sub in itertools.combinations(positions, r):
            if any(set(m) <= set(sub) for m in minimal):
                continue
            if is_distinguished(s, sub, cs):
                minimal.append(sub)
    return minimal


def subset_symmetry_key(s, sub, cs=None):
    """Canonical content of a color subset, minimized over diagram automorphisms.

    Two subsets with equal keys are related by a symmetry of the system
    (a diagram automorphism fixing the triple composed with a permutation
    of indistinguishable colors), so they give isomorphic quotients.
    """
    cs = cs or colors(s)
    base = canonical_key(s)
    best = None
    for perm in diagram_automorphisms(s.R):
        if canonical_key(apply_automorphism(s, perm)) != base:
            continue
        sig_pos = {}
        ok = True
        for j, v in enumerate(s.sigma):
            target = _permute_weight(perm, v)
            if target in s.sigma:
                sig_pos[j] = s.sigma.index(target)
            else:
                ok = False
                break
        if not ok:
            continue
        contents = []
        for p in sub:
            c = cs.colors[p]
            origin = tuple(sorted(perm[a - 1] for a in c.origin))
            row = [0] * len(s.sigma)
            for j, val in enumerate(c.row):
                row[sig_pos[j]] = val
            contents.append((c.kind, origin, tuple(row)))
        key = tuple(sorted(contents))
        if best is None or key < best:
            best = key
    return best


def _permute_weight(perm, w):
    out = [0] * len(w)
    for i, c in enumerate(w, start=1):
        out[perm[i - 1] - 1] = c
    return tuple(out)


def minimal_good_distinguished(s, up_to_automorphism=False, cs=None):
    """Quotients by all inclusion-minimal distinguished subsets (each verified good)."""
    cs = cs or colors(s)
    subsets = minimal_distinguished_subsets(s, cs)
    if up_to_automorphism:
        seen, reps = set(), []
        for sub in subsets:
            key = subset_symmetry_key(s, sub, cs)
            if key not in seen:
                seen.add(key)
                reps.append(sub)
        subsets = reps
    return [quotient(s, sub, cs) for sub in subsets]
