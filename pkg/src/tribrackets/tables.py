"""Ternary operation tables on {1..n} and the two-operation coloring structures.

A structure is a pair of ternary operations (classical, virtual) on the same
finite carrier.  Both operations must be three-determined: fixing any three
of a, b, c, d in op(a,b,c) = d determines the fourth, which is the same as
the defining 3-tensor being a Latin cube.  On top of that the pair has to
satisfy seven quantified identities (two for the classical operation alone,
three for the virtual one, two mixing the two); ``verify`` checks all of it.
"""

from dataclasses import dataclass, field
from math import gcd


class TableError(ValueError):
    """Malformed table data: bad shape, out-of-range entries, parse errors."""


class NotThreeDetermined(ValueError):
    """Table is not a Latin cube, so it cannot be inverted slot-wise."""


class TernaryTable:
    """A ternary operation on {1..n}, stored as n stacked n-by-n matrices.

    ``tab(a, b, c)`` is the entry in matrix a, row b, column c.  Entries are
    1-based throughout.  Instances are immutable.
    """

    __slots__ = ("order", "entries")

    def __init__(self, entries):
        mats = tuple(tuple(tuple(row) for row in mat) for mat in entries)
        n = len(mats)
        if n == 0:
            raise TableError("empty table")
        for mat in mats:
            if len(mat) != n or any(len(row) != n for row in mat):
                raise TableError("table must be n matrices of shape n x n")
            for row in mat:
                for v in row:
                    if not isinstance(v, int) or not 1 <= v <= n:
                        raise TableError(
                            "entries must be integers in 1..%d, got %r" % (n, v)
                        )
        object.__setattr__(self, "order", n)
        object.__setattr__(self, "entries", mats)

    def __call__(self, a, b, c):
        return self.entries[a - 1][b - 1][c - 1]

    def __eq__(self, other):
        return isinstance(other, TernaryTable) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "TernaryTable(order=%d)" % self.order

    def flat(self):
        """Entries in lexicographic (a, b, c) order, as a flat tuple."""
        return tuple(v for mat in self.entries for row in mat for v in row)


def is_three_determined(tab):
    """True iff every slot of ``tab`` can be solved for: a Latin cube.

    Checks that each line of the 3-tensor obtained by varying one argument
    while freezing the other two is a permutation of {1..n}.
    """
    n = tab.order
    full = frozenset(range(1, n + 1))
    rng = range(1, n + 1)
    for u in rng:
        for w in rng:
            if frozenset(tab(u, w, c) for c in rng) != full:
                return False
            if frozenset(tab(u, b, w) for b in rng) != full:
                return False
            if frozenset(tab(a, u, w) for a in rng) != full:
                return False
    return True


@dataclass(frozen=True)
class Violation:
    """One failed identity instance: its name and the witness (a, b, c, d)."""

    identity: str
    args: tuple

    def __str__(self):
        return "%s at %s" % (self.identity, self.args)


def _scan(n, name, lhs, rhs, out, cap):
    rng = range(1, n + 1)
    for a in rng:
        for b in rng:
            for c in rng:
                for d in rng:
                    if lhs(a, b, c, d) != rhs(a, b, c, d):
                        out.append(Violation(name, (a, b, c, d)))
                        if len(out) >= cap:
                            return
    return


def check_classical_axioms(tab, max_violations=16):
    """Violations of the two exchange identities the classical operation obeys.

    Raises NotThreeDetermined when ``tab`` is not a Latin cube, since the
    identities only characterise anything on invertible tables.  Returns a
    list of Violation records, at most ``max_violations`` of them.
    """
    if not is_three_determined(tab):
        raise NotThreeDetermined("classical table is not a Latin cube")
    T = tab
    out = []
    _scan(
        T.order,
        "classical-left-exchange",
        lambda a, b, c, d: T(a, b, T(b, c, d)),
        lambda a, b, c, d: T(a, T(a, b, c), T(T(a, b, c), c, d)),
        out,
        max_violations,
    )
    if len(out) < max_violations:
        _scan(
            T.order,
            "classical-right-exchange",
            lambda a, b, c, d: T(T(a, b, c), c, d),
            lambda a, b, c, d: T(T(a, b, T(b, c, d)), T(b, c, d), d),
            out,
            max_violations,
        )
    return out


def check_virtual_axioms(classical, virtual, max_violations=16):
    """Violations of the five identities involving the virtual operation.

    Three constrain the virtual operation alone (an involution-like return
    identity plus its own pair of exchange identities) and two mix the
    classical and virtual operations.  Both tables must be Latin cubes.
    """
    if classical.order != virtual.order:
        raise TableError("operations live on carriers of different sizes")
    if not is_three_determined(virtual):
        raise NotThreeDetermined("virtual table is not a Latin cube")
    if not is_three_determined(classical):
        raise NotThreeDetermined("classical table is not a Latin cube")
    T, S = classical, virtual
    n = T.order
    out = []
    rng = range(1, n + 1)
    for a in rng:
        for b in rng:
            for c in rng:
                if S(a, S(a, b, c), c) != b:
                    out.append(Violation("virtual-return", (a, b, c)))
                    if len(out) >= max_violations:
                        return out
    checks = [
        (
            "virtual-left-exchange",
            lambda a, b, c, d: S(a, b, S(b, c, d)),
            lambda a, b, c, d: S(a, S(a, b, c), S(S(a, b, c), c, d)),
        ),
        (
            "virtual-right-exchange",
            lambda a, b, c, d: S(S(a, b, c), c, d),
            lambda a, b, c, d: S(S(a, b, S(b, c, d)), S(b, c, d), d),
        ),
        (
            "mixed-left-exchange",
            lambda a, b, c, d: T(a, b, S(b, c, d)),
            lambda a, b, c, d: S(a, S(a, b, c), T(S(a, b, c), c, d)),
        ),
        (
            "mixed-right-exchange",
            lambda a, b, c, d: T(S(a, b, c), c, d),
            lambda a, b, c, d: S(T(a, b, S(b, c, d)), S(b, c, d), d),
        ),
    ]
    for name, lhs, rhs in checks:
        if len(out) >= max_violations:
            break
        _scan(n, name, lhs, rhs, out, max_violations)
    return out


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of a full structure check."""

    order: int
    classical_determined: bool
    virtual_determined: bool
    violations: tuple
    ok: bool

    def __str__(self):
        if self.ok:
            return "ok: valid structure of order %d" % self.order
        lines = ["invalid structure of order %d" % self.order]
        if not self.classical_determined:
            lines.append("  classical table is not a Latin cube")
        if not self.virtual_determined:
            lines.append("  virtual table is not a Latin cube")
        for v in self.violations:
            lines.append("  " + str(v))
        return "\n".join(lines)


class VirtualTribracket:
    """A verified-or-not pair of ternary operations on the same carrier.

    ``classical`` colors the regions around ordinary crossings, ``virtual``
    the regions around virtual ones.  ``name`` is a display label only and
    never takes part in equality.
    """

    __slots__ = ("classical", "virtual", "name", "_report")

    def __init__(self, classical, virtual, name=None):
        if not isinstance(classical, TernaryTable):
            classical = TernaryTable(classical)
        if not isinstance(virtual, TernaryTable):
            virtual = TernaryTable(virtual)
        if classical.order != virtual.order:
            raise TableError("operations live on carriers of different sizes")
        self.classical = classical
        self.virtual = virtual
        self.name = name
        self._report = None

    @property
    def order(self):
        return self.classical.order

    def __eq__(self, other):
        return (
            isinstance(other, VirtualTribracket)
            and self.classical == other.classical
            and self.virtual == other.virtual
        )

    def __hash__(self):
        return hash((self.classical, self.virtual))

    def __repr__(self):
        tag = " %r" % self.name if self.name else ""
        return "<VirtualTribracket%s order=%d>" % (tag, self.order)

    @property
    def verified(self):
        """True iff ``verify`` found no problems.  Cached after first call."""
        return self.verify().ok


def verify(structure, max_violations=16):
    """Run every axiom check on a structure and return a VerifyReport."""
    if isinstance(structure, VirtualTribracket) and structure._report is not None:
        return structure._report
    cl, vt = structure.classical, structure.virtual
    cl_det = is_three_determined(cl)
    vt_det = is_three_determined(vt)
    violations = []
    if cl_det:
        violations.extend(check_classical_axioms(cl, max_violations))
    if vt_det and cl_det and len(violations) < max_violations:
        violations.extend(
            check_virtual_axioms(cl, vt, max_violations - len(violations))
        )
    report = VerifyReport(
        order=cl.order,
        classical_determined=cl_det,
        virtual_determined=vt_det,
        violations=tuple(violations),
        ok=cl_det and vt_det and not violations,
    )
    if isinstance(structure, VirtualTribracket):
        structure._report = report
    return report


# VirtualTribracket.verify, for convenience at call sites that hold the pair.
VirtualTribracket.verify = lambda self, max_violations=16: verify(
    self, max_violations
)


@dataclass(frozen=True)
class InverseTables:
    """Slot-wise inverses of a three-determined table.

    slot1(b, c, d) = the unique a with op(a,b,c) = d, and likewise slot2,
    slot3 for the middle and right arguments.
    """

    order: int
    _slot1: tuple = field(repr=False)
    _slot2: tuple = field(repr=False)
    _slot3: tuple = field(repr=False)

    def slot1(self, b, c, d):
        return self._slot1[b - 1][c - 1][d - 1]

    def slot2(self, a, c, d):
        return self._slot2[a - 1][c - 1][d - 1]

    def slot3(self, a, b, d):
        return self._slot3[a - 1][b - 1][d - 1]


def invert(tab):
    """Build the three slot inverses of a Latin cube.

    Raises NotThreeDetermined if any line of the tensor repeats a value.
    """
    n = tab.order
    s1 = [[[0] * n for _ in range(n)] for _ in range(n)]
    s2 = [[[0] * n for _ in range(n)] for _ in range(n)]
    s3 = [[[0] * n for _ in range(n)] for _ in range(n)]
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            for c in range(1, n + 1):
                d = tab(a, b, c)
                for store, i, j in ((s1, b, c), (s2, a, c), (s3, a, b)):
                    if store[i - 1][j - 1][d - 1]:
                        raise NotThreeDetermined(
                            "table line repeats a value, cannot invert"
                        )
                s1[b - 1][c - 1][d - 1] = a
                s2[a - 1][c - 1][d - 1] = b
                s3[a - 1][b - 1][d - 1] = c
    freeze = lambda s: tuple(tuple(tuple(r) for r in m) for m in s)
    return InverseTables(n, freeze(s1), freeze(s2), freeze(s3))


# --- linear (Alexander-style) structures -----------------------------------

def _unit(value, m, what):
    v = value % m
    if gcd(v, m) != 1:
        raise TableError("%s = %d is not a unit mod %d" % (what, value, m))
    return v


def alexander_classical(m, x, y):
    """Linear classical operation on {1..m}: row (x, -x*y, y) over Z_m.

    Element i of the carrier stands for the residue i - 1.  The middle
    coefficient is forced to -x*y by the exchange identities, so the
    operation is op(a,b,c) = x*a - x*y*b + y*c on residues.  x and y must
    be units mod m.
    """
    x = _unit(x, m, "x")
    y = _unit(y, m, "y")
    mats = [
        [
            [(x * a - x * y * b + y * c) % m + 1 for c in range(m)]
            for b in range(m)
        ]
        for a in range(m)
    ]
    return TernaryTable(mats)


@dataclass(frozen=True)
class AlexanderParams:
    """Parameters (m, x, y, v) of a linear structure over Z_m.

    x, y, v must be units and satisfy 1 + x*y = v^-1 * x + v * y (mod m),
    the compatibility condition that makes the mixed identities hold.
    """

    modulus: int
    x: int
    y: int
    v: int

    def __post_init__(self):
        m = self.modulus
        if m < 1:
            raise TableError("modulus must be positive")
        x = _unit(self.x, m, "x")
        y = _unit(self.y, m, "y")
        v = _unit(self.v, m, "v")
        lhs = (1 + x * y) % m
        rhs = (pow(v, -1, m) * x + v * y) % m
        if lhs != rhs:
            raise TableError(
                "side condition fails mod %d: 1 + x*y = %d but "
                "v^-1*x + v*y = %d" % (m, lhs, rhs)
            )
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "v", v)

    @property
    def v_inv(self):
        return pow(self.v, -1, self.modulus)


def virtual_alexander(m, x, y, v):
    """Linear structure on {1..m}: classical row (x, -x*y, y), virtual row
    (v, -1, v^-1), subject to the AlexanderParams side condition.

    Returns a verified VirtualTribracket; construction fails loudly if the
    parameters are inadmissible.
    """
    p = AlexanderParams(m, x, y, v)
    vi = p.v_inv
    classical = alexander_classical(m, x, y)
    virtual = TernaryTable(
        [
            [
                [(p.v * a - b + vi * c) % m + 1 for c in range(m)]
                for b in range(m)
            ]
            for a in range(m)
        ]
    )
    pair = VirtualTribracket(
        classical, virtual, name="linear(m=%d,x=%d,y=%d,v=%d)" % (m, x, y, v)
    )
    report = verify(pair)
    if not report.ok:  # cannot happen for admissible parameters
        raise AssertionError("linear construction failed its own axioms:\n%s" % report)
    return pair


def admissible_alexander_params(m):
    """All (x, y, v) unit triples mod m passing the side condition."""
    units = [u for u in range(1, m + 1) if gcd(u % m, m) == 1]
    out = []
    for x in units:
        for y in units:
            for v in units:
                try:
                    out.append(AlexanderParams(m, x, y, v))
                except ValueError:
                    continue
    return out


# --- tensor file format -----------------------------------------------------
#
# Line 1: the order n.  Then n blocks for the classical operation and n more
# for the virtual one, each block n lines of n integers (matrix a, row b,
# column c).  '#' starts a comment, blank lines may separate blocks.  A file
# with only n blocks carries a single classical table.

def _tokens(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise TableError("line %d: expected integers, got %r" % (lineno, raw))
        yield lineno, values


def parse_tables(text):
    """Parse tensor text into (classical, virtual_or_None).

    Accepts one table (n matrices) or a pair (2n matrices) after the order
    line.  Raises TableError with a line number on malformed input.
    """
    stream = _tokens(text)
    try:
        lineno, head = next(stream)
    except StopIteration:
        raise TableError("empty tensor text")
    if len(head) != 1 or head[0] < 1:
        raise TableError("line %d: expected a single positive order" % lineno)
    n = head[0]
    rows = []
    for lineno, values in stream:
        if len(values) != n:
            raise TableError(
                "line %d: expected %d entries per row, got %d"
                % (lineno, n, len(values))
            )
        rows.append(values)
    mats = [rows[i * n : (i + 1) * n] for i in range(0, len(rows) // n)]
    if len(rows) == n * n:
        return TernaryTable(mats), None
    if len(rows) == 2 * n * n:
        return TernaryTable(mats[:n]), TernaryTable(mats[n:])
    raise TableError(
        "expected %d or %d matrix rows for order %d, got %d"
        % (n * n, 2 * n * n, n, len(rows))
    )


def parse_structure(text, name=None):
    """Parse tensor text that must contain a classical/virtual pair."""
    classical, virtual = parse_tables(text)
    if virtual is None:
        raise TableError("tensor text carries no virtual table")
    return VirtualTribracket(classical, virtual, name=name)


def format_tables(classical, virtual=None, comment=None):
    """Render tables in the tensor file format (inverse of parse_tables)."""
    lines = []
    if comment:
        for c in comment.splitlines():
            lines.append("# " + c)
    n = classical.order
    lines.append(str(n))
    tabs = [classical] if virtual is None else [classical, virtual]
    for tab in tabs:
        for mat in tab.entries:
            lines.append("")
            for row in mat:
                lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def format_structure(structure, comment=None):
    return format_tables(structure.classical, structure.virtual, comment)


def load_structure(path):
    """Read a classical/virtual pair from a tensor file."""
    from pathlib import Path

    p = Path(path)
    return parse_structure(p.read_text(), name=p.stem)
