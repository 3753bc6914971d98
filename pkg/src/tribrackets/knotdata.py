"""Bundled table of small virtual knots and links, plus batch computation.

The table file is line oriented: ``name<TAB>gauss-code``, ``#`` starts a
comment.  A comment on an entry line is kept as that entry's provenance
note.  Every code must parse, realize to a diagram, and read back off the
realized diagram unchanged; ``load_table`` enforces all of it up front so a
bad file fails loudly at ingestion rather than mid-run.

``batch_invariants`` runs the counting invariant for every (structure,
knot) pair, optionally on a process pool, and always reports rows in a
deterministic order.  ``write_csv`` serializes rows in the fixed
``structure,knot,count`` column layout used by the regression fixtures.
"""

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources

from .coloring import count_colorings
from .diagram import realize, traverse
from .gauss import GaussCodeError, parse_gauss

BUNDLED_TABLE = "virtual_knots.txt"


class KnotTableError(ValueError):
    """Malformed knot table file."""


@dataclass(frozen=True)
class KnotEntry:
    """One named code with its provenance note."""

    name: str
    code: object  # GaussCode
    note: str = ""

    @property
    def n_components(self):
        return len(self.code.components)

    @property
    def n_crossings(self):
        return self.code.n_crossings


class KnotTable:
    """Ordered collection of uniquely named Gauss codes."""

    def __init__(self, entries):
        self.entries = tuple(entries)
        self._by_name = {}
        for e in self.entries:
            if e.name in self._by_name:
                raise KnotTableError("duplicate knot name %r" % e.name)
            self._by_name[e.name] = e

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __contains__(self, name):
        return name in self._by_name

    def __getitem__(self, name):
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError("no knot named %r in table" % name) from None

    def names(self):
        return tuple(e.name for e in self.entries)


def parse_table(text, where="<string>"):
    """Parse table text; validate every entry (see module docstring)."""
    entries = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body, _, comment = raw.partition("#")
        line = body.strip()
        note = comment.strip()
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            parts = line.split(None, 1)
        if len(parts) != 2:
            raise KnotTableError(
                "%s:%d: expected 'name<TAB>code', got %r" % (where, lineno, raw)
            )
        name, code_text = parts[0].strip(), parts[1].strip()
        if name in seen:
            raise KnotTableError("%s:%d: duplicate name %r" % (where, lineno, name))
        seen.add(name)
        try:
            code = parse_gauss(code_text)
        except GaussCodeError as exc:
            raise KnotTableError("%s:%d: %s" % (where, lineno, exc)) from exc
        try:
            d = realize(code)
        except Exception as exc:
            raise KnotTableError(
                "%s:%d: code %r does not realize: %s" % (where, lineno, name, exc)
            ) from exc
        if str(traverse(d)) != str(code):
            raise KnotTableError(
                "%s:%d: code %r does not survive realize/traverse" % (where, lineno, name)
            )
        entries.append(KnotEntry(name, code, note))
    return KnotTable(entries)


def load_table(path):
    """Load and validate a table file."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_table(fh.read(), where=str(path))


def bundled_table():
    """The table shipped inside the package."""
    text = (
        resources.files("tribrackets").joinpath("data", BUNDLED_TABLE).read_text("utf-8")
    )
    return parse_table(text, where=BUNDLED_TABLE)


@dataclass(frozen=True)
class InvariantRow:
    """One computed value; error is None on success, else the row failed
    and carries the diagnostic instead of a count."""

    structure: str
    knot: str
    count: int
    error: str = None


def _structure_label(structure, index):
    return structure.name or ("structure-%d" % index)


def _compute_one(args):
    sname, kname, code_text, structure = args
    try:
        d = realize(parse_gauss(code_text))
        value = count_colorings(d, structure).count
        return InvariantRow(sname, kname, value)
    except Exception as exc:  # recorded, batch continues
        return InvariantRow(sname, kname, -1, error=str(exc))


def batch_invariants(table, structures, jobs=None):
    """Counting invariant of every table entry under every structure.

    ``structures``: VirtualTribracket list (names used in rows).  Rows come
    back sorted by (structure label, table order).  ``jobs``: worker process
    count; None or 1 computes in-process.
    """
    tasks = []
    for si, st in enumerate(structures):
        sname = _structure_label(st, si)
        for e in table:
            tasks.append((sname, e.name, str(e.code), st))
    if jobs is not None and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_compute_one, tasks))
    else:
        rows = [_compute_one(t) for t in tasks]
    order = {e.name: i for i, e in enumerate(table)}
    rows.sort(key=lambda r: (r.structure, order[r.knot]))
    return rows


def write_csv(rows, out):
    """``structure,knot,count`` with a header row, UTF-8, LF endings.

    Failed rows write their diagnostic into the count column as
    ``error: ...`` so the failure is visible in the artifact itself.
    """
    if isinstance(out, (str, bytes)):
        with open(out, "w", encoding="utf-8", newline="") as fh:
            return write_csv(rows, fh)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["structure", "knot", "count"])
    for r in rows:
        value = r.count if r.error is None else "error: %s" % r.error
        writer.writerow([r.structure, r.knot, value])


def csv_text(rows):
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()
