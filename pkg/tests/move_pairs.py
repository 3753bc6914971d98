"""Hand-coded diagram pairs, one per generating move.

Each pair is (name, before, after) where the two diagrams differ by a
single move: classical kink (RI), classical poke (RII), classical slide
(RIII), virtual kink (vI), virtual poke (vII), virtual slide (vIII), or
the mixed slide of a doubly-virtual strand across a classical crossing.
Counting invariants must agree across every pair.

Geometry notes.  The poke fixtures overlap two rectangles so one edge of
the poking rectangle crosses one edge of the other twice; retracting it
gives disjoint rectangles.  The slide fixtures run three rectangles
through a shared zone where a detour edge of H2 forms a triangle with
the working edges of V and H1; the after-diagrams move the detour to the
far side of the stationary V x H1 crossing.  Closing the rectangles far
from the zone forces three extra intersections, which stay virtual and
identical on both sides of every slide pair.
"""

from tribrackets.diagram import draw

# one self-crossing at (4, 4): the strand hooks across its own earlier run
_HOOK = [(0, 0), (6, 0), (6, 4), (2, 4), (2, 2), (4, 2), (4, 6), (0, 6)]
_PLAIN = [(0, 0), (6, 0), (6, 6), (0, 6)]

# V's working edge runs north along x=10; H pokes across it from the west
_POKE_V = [(10, 0), (10, 10), (20, 10), (20, 0)]
_POKE_H = [(7, 3), (13, 3), (13, 6), (7, 6)]
_POKE_H_REV = [(7, 3), (7, 6), (13, 6), (13, 3)]
_POKE_H_AFTER = [(7, 3), (9, 3), (9, 6), (7, 6)]

# slide zone: V north along x=6, H1 east along y=2, H2's detour drops
# from y=3 to y=1 at x=3 (before) or x=9 (after)
_SLIDE_V = [(6, -2), (6, 10), (16, 10), (16, -2)]
_SLIDE_H1 = [(-2, 2), (22, 2), (22, -6), (-2, -6)]
_SLIDE_H2 = [(-4, 3), (3, 3), (3, 1), (24, 1), (24, -8), (-4, -8)]
_SLIDE_H2_AFTER = [(-4, 3), (9, 3), (9, 1), (24, 1), (24, -8), (-4, -8)]
_SPECTATORS = {(16, 2): "V", (16, 1): "V", (22, 1): "V"}


def _kink(kind):
    return (
        draw([_HOOK], {(4, 4): kind}),
        draw([_PLAIN]),
    )


def _poke(paths_h, kind1, kind2):
    return (
        draw([_POKE_V, paths_h], {(10, 3): kind1, (10, 6): kind2}),
        draw([_POKE_V, _POKE_H_AFTER]),
    )


def _slide(k_drop, k_mid, k_low):
    before = dict(_SPECTATORS)
    before.update({(3, 2): k_drop, (6, 2): k_mid, (6, 1): k_low})
    after = dict(_SPECTATORS)
    after.update({(9, 2): k_drop, (6, 2): k_mid, (6, 3): k_low})
    return (
        draw([_SLIDE_V, _SLIDE_H1, _SLIDE_H2], before),
        draw([_SLIDE_V, _SLIDE_H1, _SLIDE_H2_AFTER], after),
    )


def move_pairs():
    """All hand-coded move pairs as (name, before, after) triples."""
    pairs = []
    pairs.append(("RI-over", *_kink("P")))
    pairs.append(("RI-under", *_kink("N")))
    pairs.append(("vI", *_kink("V")))
    # poked strand over at both crossings or under at both, each in the
    # two relative orientations of the strands
    pairs.append(("RII-under-poke", *_poke(_POKE_H, "N", "P")))
    pairs.append(("RII-over-poke", *_poke(_POKE_H, "P", "N")))
    pairs.append(("RII-under-poke-rev", *_poke(_POKE_H_REV, "P", "N")))
    pairs.append(("RII-over-poke-rev", *_poke(_POKE_H_REV, "N", "P")))
    pairs.append(("vII", *_poke(_POKE_H, "V", "V")))
    pairs.append(("vII-rev", *_poke(_POKE_H_REV, "V", "V")))
    pairs.append(("RIII", *_slide("N", "N", "N")))
    pairs.append(("vIII", *_slide("V", "V", "V")))
    pairs.append(("mixed-over", *_slide("V", "N", "V")))
    pairs.append(("mixed-under", *_slide("V", "P", "V")))
    return pairs
