"""Counting region colorings of diagrams by a coloring structure.

A coloring assigns an element of the carrier to every region of the diagram
complement.  Each crossing imposes table(a, b, c) = d on the four regions in
its corners, the classical table at 'P'/'N' crossings and the virtual table
at 'V' ones.  The number of colorings does not depend on the diagram chosen
for a given link, which is what makes it worth computing.

Three counters live here: a propagation-driven backtracker (the workhorse),
a plain brute force loop (the oracle for small diagrams), and a linear
algebra shortcut for the structures that come from row coefficients over
Z_m, where colorings form the kernel of an integer matrix and can be counted
through a Smith-style diagonalization.
"""

from dataclasses import dataclass
from itertools import product
from math import gcd, prod

from .diagram import crossing_roles, faces
from .tables import AlexanderParams, invert


class SearchSpaceTooLarge(ValueError):
    """Brute force domain would exceed the configured ceiling."""


@dataclass(frozen=True)
class ColoringCount:
    """Invariant value, optionally with the colorings themselves: tuples of
    colors indexed by region id, listed in lexicographic order."""

    count: int
    colorings: tuple = None


def _relations(d, structure, variant):
    fd = faces(d)
    rels = crossing_roles(d, fd, variant)
    inv_classical = invert(structure.classical)
    inv_virtual = invert(structure.virtual)
    compiled = []
    for rel in rels:
        if rel.kind == "V":
            compiled.append((structure.virtual, inv_virtual, rel))
        else:
            compiled.append((structure.classical, inv_classical, rel))
    return fd, compiled


def count_colorings(d, structure, with_colorings=False, variant=None):
    """Count region colorings by propagation and backtracking.

    Any crossing with three of its four corner regions colored forces the
    fourth through the slot inverses; the search branches on the lowest
    uncolored region only when nothing is forced.  Exact integer count.
    """
    fd, compiled = _relations(d, structure, variant)
    n = structure.order
    n_regions = fd.n_faces
    incident = [[] for _ in range(n_regions)]
    for idx, (_, _, rel) in enumerate(compiled):
        for r in (rel.a, rel.b, rel.c, rel.d):
            if idx not in incident[r]:
                incident[r].append(idx)

    color = [0] * n_regions
    trail = []

    def assign(r, v, queue):
        if color[r]:
            return color[r] == v
        color[r] = v
        trail.append(r)
        queue.extend(incident[r])
        return True

    def propagate(queue):
        while queue:
            idx = queue.pop()
            tab, inv, rel = compiled[idx]
            va, vb, vc, vd = (
                color[rel.a],
                color[rel.b],
                color[rel.c],
                color[rel.d],
            )
            missing = [
                s
                for s, v in enumerate((va, vb, vc, vd))
                if v == 0
            ]
            if not missing:
                if tab(va, vb, vc) != vd:
                    return False
                continue
            if len(missing) > 1:
                continue
            s = missing[0]
            if s == 0:
                ok = assign(rel.a, inv.slot1(vb, vc, vd), queue)
            elif s == 1:
                ok = assign(rel.b, inv.slot2(va, vc, vd), queue)
            elif s == 2:
                ok = assign(rel.c, inv.slot3(va, vb, vd), queue)
            else:
                ok = assign(rel.d, tab(va, vb, vc), queue)
            if not ok:
                return False
        return True

    found = []
    count = 0

    def search(lowest):
        nonlocal count
        r = lowest
        while r < n_regions and color[r]:
            r += 1
        if r == n_regions:
            count += 1
            if with_colorings:
                found.append(tuple(color))
            return
        for v in range(1, n + 1):
            mark = len(trail)
            queue = []
            if assign(r, v, queue) and propagate(queue):
                search(r + 1)
            while len(trail) > mark:
                color[trail.pop()] = 0

    search(0)
    return ColoringCount(count, tuple(sorted(found)) if with_colorings else None)


def brute_force_count(d, structure, limit=10**8, with_colorings=False,
                      variant=None):
    """Check every coloring of every region.  Oracle only: refuses domains
    larger than ``limit`` candidates."""
    fd, compiled = _relations(d, structure, variant)
    n = structure.order
    n_regions = fd.n_faces
    if n**n_regions > limit:
        raise SearchSpaceTooLarge(
            "%d^%d exceeds the brute force ceiling %d" % (n, n_regions, limit)
        )
    count = 0
    found = []
    for colors in product(range(1, n + 1), repeat=n_regions):
        ok = True
        for tab, _, rel in compiled:
            if tab(colors[rel.a], colors[rel.b], colors[rel.c]) != colors[rel.d]:
                ok = False
                break
        if ok:
            count += 1
            if with_colorings:
                found.append(colors)
    return ColoringCount(count, tuple(found) if with_colorings else None)


# --- linear structures: kernel counting --------------------------------------

@dataclass(frozen=True)
class ModularSystem:
    """Homogeneous linear system over Z_m whose solutions are the colorings
    (as residue vectors, color i standing for residue i-1)."""

    modulus: int
    rows: tuple
    n_cols: int


def build_modular_system(d, params, variant=None):
    """One row per crossing: classical crossings contribute coefficients
    (x, -x*y, y, -1) on regions (a, b, c, d), virtual ones (v, -1, v^-1, -1).
    Coefficients land in the same column when roles share a region."""
    if not isinstance(params, AlexanderParams):
        params = AlexanderParams(*params)
    fd = faces(d)
    rels = crossing_roles(d, fd, variant)
    m = params.modulus
    rows = []
    for rel in rels:
        if rel.kind == "V":
            coeffs = (params.v, -1, params.v_inv, -1)
        else:
            coeffs = (params.x, -params.x * params.y, params.y, -1)
        row = [0] * fd.n_faces
        for coef, region in zip(coeffs, (rel.a, rel.b, rel.c, rel.d)):
            row[region] = (row[region] + coef) % m
        rows.append(tuple(row))
    return ModularSystem(m, tuple(rows), fd.n_faces)


def smith_diagonal(rows, n_cols):
    """Diagonal of the Smith normal form of an integer matrix.

    Plain elementary row and column operations over the integers, smallest
    pivot first, followed by the gcd/lcm sweep that enforces the
    divisibility chain.  Returns the nonzero diagonal entries.
    """
    A = [list(r) for r in rows]
    R, C = len(A), n_cols
    diag = []
    t = 0
    while t < min(R, C):
        piv = None
        for i in range(t, R):
            for j in range(t, C):
                if A[i][j] and (
                    piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])
                ):
                    piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        A[t], A[i0] = A[i0], A[t]
        for row in A:
            row[t], row[j0] = row[j0], row[t]
        while True:
            if A[t][t] < 0:
                A[t] = [-v for v in A[t]]
            clean = True
            for i in range(t + 1, R):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    A[i] = [u - q * v for u, v in zip(A[i], A[t])]
                    if A[i][t]:
                        A[t], A[i] = A[i], A[t]
                        clean = False
                        break
            if not clean:
                continue
            for j in range(t + 1, C):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    for i in range(R):
                        A[i][j] -= q * A[i][t]
                    if A[t][j]:
                        for i in range(R):
                            A[i][t], A[i][j] = A[i][j], A[i][t]
                        clean = False
                        break
            if clean:
                break
        diag.append(abs(A[t][t]))
        t += 1
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            a, b = diag[i], diag[j]
            g = gcd(a, b)
            diag[i], diag[j] = g, a * b // g if g else 0
    return [v for v in diag if v]


def kernel_size(system):
    """Number of solutions of the homogeneous system over Z_m.

    With Smith diagonal s_1..s_r on n columns the kernel has
    m^(n - r) * prod(gcd(s_i, m)) elements; this stays valid for composite
    moduli, which rules out plain rank arguments.
    """
    m = system.modulus
    diag = smith_diagonal(system.rows, system.n_cols)
    r = len(diag)
    return m ** (system.n_cols - r) * prod(gcd(s, m) for s in diag)


def count_alexander(d, params, variant=None):
    """Invariant value for a linear structure via kernel counting."""
    return ColoringCount(kernel_size(build_modular_system(d, params, variant)))
