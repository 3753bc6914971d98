"""Exhaustive enumeration of small coloring structures.

Tables are generated in lexicographic entry order, entries read in (a, b, c)
order with the classical table before the virtual one, so runs are
reproducible and prefixes of a run with a higher limit.  The generator fills
one tensor entry at a time and prunes any assignment that breaks a Latin
line; virtual tables additionally prune against the return identity, which
says that for fixed outer arguments the middle slot acts as an involution.
Quantified identities that need the whole table are checked on completion.
"""

from .tables import (
    TernaryTable,
    VirtualTribracket,
    check_classical_axioms,
    check_virtual_axioms,
)


class SearchBoundExceeded(ValueError):
    """Requested order is past the configured work bound."""


def _latin_cubes(n, fiber_involution=False):
    """Yield flat 0-indexed entry tuples of all order-n Latin cubes, lex order.

    With ``fiber_involution`` the map b -> tab(a, b, c) is forced to be an
    involution for every fixed (a, c), pruning during the fill rather than
    after it.
    """
    total = n * n * n
    flat = [0] * total
    row = [[0] * n for _ in range(n)]  # values used along c for fixed (a,b)
    col = [[0] * n for _ in range(n)]  # values used along b for fixed (a,c)
    tube = [[0] * n for _ in range(n)]  # values used along a for fixed (b,c)
    inv = [[{} for _ in range(n)] for _ in range(n)] if fiber_involution else None

    def rec(pos):
        if pos == total:
            yield tuple(flat)
            return
        a, r = divmod(pos, n * n)
        b, c = divmod(r, n)
        fiber = inv[a][c] if fiber_involution else None
        if fiber is not None and b in fiber:
            candidates = (fiber[b],)
        else:
            candidates = range(n)
        for v in candidates:
            bit = 1 << v
            if (row[a][b] | col[a][c] | tube[b][c]) & bit:
                continue
            recorded = False
            if fiber is not None and b not in fiber:
                if v in fiber:
                    continue  # would force a non-involutive pairing
                fiber[b] = v
                fiber[v] = b
                recorded = True
            flat[pos] = v
            row[a][b] |= bit
            col[a][c] |= bit
            tube[b][c] |= bit
            yield from rec(pos + 1)
            row[a][b] &= ~bit
            col[a][c] &= ~bit
            tube[b][c] &= ~bit
            if recorded:
                del fiber[b]
                if v != b:
                    del fiber[v]

    yield from rec(0)


def _from_flat(n, flat):
    it = iter(flat)
    return TernaryTable(
        [[[next(it) + 1 for _ in range(n)] for _ in range(n)] for _ in range(n)]
    )


def enumerate_classical_tables(n, limit=None):
    """Latin cubes of order n passing the classical exchange identities."""
    found = 0
    for flat in _latin_cubes(n):
        tab = _from_flat(n, flat)
        if not check_classical_axioms(tab, max_violations=1):
            yield tab
            found += 1
            if limit is not None and found >= limit:
                return


def enumerate_virtual_tribrackets(n, limit=None, work_bound=4):
    """All valid structures of order n, lazily, in lexicographic order.

    The order is that of the concatenated entry string (classical entries
    first).  ``limit`` stops the stream after that many structures; orders
    above ``work_bound`` are declined up front since the raw search space
    grows like n^(2 n^3).
    """
    if n > work_bound:
        raise SearchBoundExceeded(
            "order %d exceeds the work bound %d" % (n, work_bound)
        )
    found = 0
    for classical in enumerate_classical_tables(n):
        for flat in _latin_cubes(n, fiber_involution=True):
            virtual = _from_flat(n, flat)
            if not check_virtual_axioms(classical, virtual, max_violations=1):
                yield VirtualTribracket(classical, virtual)
                found += 1
                if limit is not None and found >= limit:
                    return
