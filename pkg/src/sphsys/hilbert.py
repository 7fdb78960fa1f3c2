"""Minimal generators of the monoid {x in N^n : A x = 0}.

The completion procedure grows vectors from the unit vectors in a graded
breadth-first search, extending x by a unit e_i only when that moves the
image A x back toward zero (<Ax, Ae_i> < 0), and keeps exactly the
solutions that are not componentwise above an earlier solution.  The set
of minimal solutions is finite, the search provably terminates, and a
hard degree cap turns a runaway search into a loud diagnostic instead of
a wrong answer.
"""

from __future__ import annotations


class DegreeCapExceeded(RuntimeError):
    pass


def _image(rows, x):
    return tuple(sum(r[i] * x[i] for i in range(len(x))) for r in rows)


def _dominated(x, basis):
    return any(all(a >= b for a, b in zip(x, m)) for m in basis)


def hilbert_basis(rows, nvars, degree_cap=64):
    """All componentwise-minimal nonzero solutions of rows . x = 0 over N^nvars."""
    rows = [tuple(r) for r in rows]
    cols = [tuple(r[i] for r in rows) for i in range(nvars)]
    basis = []
    frontier = {}
    for i in range(nvars):
        e = tuple(int(j == i) for j in range(nvars))
        if not any(cols[i]):
            basis.append(e)
        else:
            frontier[e] = cols[i]
    degree = 1
    while frontier:
        degree += 1
        if degree > degree_cap:
            raise DegreeCapExceeded(
                f"hilbert_basis exceeded degree cap {degree_cap} with {len(frontier)} pending vectors"
            )
        nxt = {}
        for x, v in frontier.items():
            for i in range(nvars):
                if sum(a * b for a, b in zip(v, cols[i])) >= 0:
                    continue
                y = tuple(c + int(j == i) for j, c in enumerate(x))
                if _dominated(y, basis) or y in nxt:
                    continue
                w = tuple(a + b for a, b in zip(v, cols[i]))
                if not any(w):
                    basis.append(y)
                else:
                    nxt[y] = w
        frontier = {y: w for y, w in nxt.items() if not _dominated(y, basis)}
    return sorted(basis)


def brute_force_minimal(rows, nvars, max_degree):
    """Oracle: all minimal nonzero solutions of total degree <= max_degree, by enumeration."""
    rows = [tuple(r) for r in rows]
    solutions = []
    for x in _compositions(nvars, max_degree):
        if any(x) and not any(_image(rows, x)):
            solutions.append(x)
    minimal = [
        x
        for x in solutions
        if not any(
            y != x and all(a <= b for a, b in zip(y, x)) for y in solutions
        )
    ]
    return sorted(minimal)


def _compositions(nvars, max_total):
    """All vectors in N^nvars with coordinate sum <= max_total."""
    if nvars == 0:
        yield ()
        return
    for head in range(max_total + 1):
        for tail in _compositions(nvars - 1, max_total - head):
            yield (head,) + tail
