"""Signed Gauss codes for oriented virtual knots and links.

A code is a comma-separated list of components.  Each component is a word of
passages ``O<id><sign>`` or ``U<id><sign>``; a crossingless component is the
single letter ``o``.  Every crossing id must occur exactly twice, once over
and once under, with the same sign both times.  Only classical crossings
appear in a code; virtual ones are an artifact of drawing the code in the
plane and carry no combinatorial weight of their own.
"""

import re
from dataclasses import dataclass


class GaussCodeError(ValueError):
    """Malformed Gauss code text."""


@dataclass(frozen=True)
class Passage:
    """One strand visit to a classical crossing."""

    crossing: int
    over: bool
    sign: int  # +1 or -1

    def __str__(self):
        return "%s%d%s" % (
            "O" if self.over else "U",
            self.crossing,
            "+" if self.sign > 0 else "-",
        )


@dataclass(frozen=True)
class GaussCode:
    """Normalized signed Gauss code: components as tuples of passages.

    An empty component tuple is a crossingless circle.  Crossing ids are
    1..k in order of first appearance.
    """

    components: tuple

    @property
    def n_crossings(self):
        return max(
            (p.crossing for comp in self.components for p in comp), default=0
        )

    @property
    def n_components(self):
        return len(self.components)

    def __str__(self):
        return ",".join(
            "".join(str(p) for p in comp) if comp else "o"
            for comp in self.components
        )


_TOKEN = re.compile(r"\s*([OU])(\d+)([+-])\s*|\s*(o)\s*")


def _parse_component(text, where):
    if text.strip() == "o":
        return ()
    passages = []
    pos = 0
    stripped = text
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if not m or m.group(4):
            raise GaussCodeError(
                "%s: unexpected token at %r" % (where, stripped[pos : pos + 8])
            )
        over, ident, sign = m.group(1), int(m.group(2)), m.group(3)
        passages.append(Passage(ident, over == "O", 1 if sign == "+" else -1))
        pos = m.end()
    if not passages:
        raise GaussCodeError("%s: empty component" % where)
    return tuple(passages)


def parse_gauss(text):
    """Parse and normalize a signed Gauss code.

    Besides the grammar this enforces the pairing rules: each id appears
    once over and once under, both with the same sign.  Ids are renumbered
    1..k by first appearance across the code, left to right.
    """
    if not text.strip():
        raise GaussCodeError("empty code")
    comps = [
        _parse_component(part, "component %d" % (i + 1))
        for i, part in enumerate(text.split(","))
    ]
    seen = {}  # original id -> [over?, sign] list of visits
    order = []
    for comp in comps:
        for p in comp:
            if p.crossing not in seen:
                seen[p.crossing] = []
                order.append(p.crossing)
            seen[p.crossing].append(p)
    renum = {orig: i + 1 for i, orig in enumerate(order)}
    for orig, visits in seen.items():
        if len(visits) != 2:
            raise GaussCodeError(
                "crossing %d appears %d times, expected 2" % (orig, len(visits))
            )
        a, b = visits
        if a.over == b.over:
            raise GaussCodeError(
                "crossing %d must appear once over and once under" % orig
            )
        if a.sign != b.sign:
            raise GaussCodeError("crossing %d has mismatched signs" % orig)
    normalized = tuple(
        tuple(Passage(renum[p.crossing], p.over, p.sign) for p in comp)
        for comp in comps
    )
    return GaussCode(normalized)


def format_gauss(code):
    """Inverse of parse_gauss on normalized codes."""
    return str(code)
