"""Exact rational feasibility of linear inequality systems via Fourier-Motzkin.

Instances here are tiny (at most ~16 variables), so plain elimination with
gcd normalization and same-direction redundancy pruning is plenty.  All
arithmetic stays in Z: positive/negative rows are combined with positive
integer multipliers, so no fractions ever appear.
"""

from __future__ import annotations

from math import gcd


def _normalize(coeffs, rhs):
    g = 0
    for c in coeffs:
        g = gcd(g, abs(c))
    g = gcd(g, abs(rhs))
    if g > 1:
        coeffs = tuple(c // g for c in coeffs)
        rhs = rhs // g
    return coeffs, rhs


def _prune(rows):
    """Keep, per coefficient vector, only the strongest right-hand side."""
    best = {}
    for coeffs, rhs in rows:
        coeffs, rhs = _normalize(coeffs, rhs)
        if coeffs not in best or rhs > best[coeffs]:
            best[coeffs] = rhs
    return [(c, r) for c, r in best.items()]


def feasible(constraints, nvars):
    """Decide whether {x in Q^n : sum coeffs_i x_i >= rhs for each constraint} is nonempty."""
    rows = _prune([(tuple(c), r) for c, r in constraints])
    for var in range(nvars):
        pos = [(c, r) for c, r in rows if c[var] > 0]
        neg = [(c, r) for c, r in rows if c[var] < 0]
        zero = [(c, r) for c, r in rows if c[var] == 0]
        new = list(zero)
        for cp, rp in pos:
            for cn, rn in neg:
                a, b = cp[var], -cn[var]
                comb = tuple(b * x + a * y for x, y in zip(cp, cn))
                new.append((comb, b * rp + a * rn))
        rows = _prune(new)
        if any(not any(c) and r > 0 for c, r in rows):
            return False
    return all(r <= 0 for c, r in rows if not any(c))


def feasible_strict_nonneg(matrix_rows, nvars):
    """Is there x with every x_i >= 1 and (row . x) >= 0 for each row?

    Rational feasibility suffices: clearing denominators of a rational point
    yields a strictly positive integer witness.
    """
    if nvars == 0:
        return False
    cons = [(row, 0) for row in matrix_rows]
    for i in range(nvars):
        unit = tuple(int(j == i) for j in range(nvars))
        cons.append((unit, 1))
    return feasible(cons, nvars)
