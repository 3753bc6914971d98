"""Figure output for batch invariant runs.

Renders the rows produced by ``batch_invariants`` as a value grid: one row
per structure, one column per knot, the cell holding the coloring count.
Uses the object-oriented matplotlib API with an explicit Agg canvas so no
global backend or pyplot state is touched; the figure lands wherever the
extension of the output path says (png, pdf, svg).
"""

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure
from matplotlib.patches import Rectangle


def _grid(rows):
    structures = []
    knots = []
    for r in rows:
        if r.structure not in structures:
            structures.append(r.structure)
        if r.knot not in knots:
            knots.append(r.knot)
    values = [[None] * len(knots) for _ in structures]
    for r in rows:
        si = structures.index(r.structure)
        ki = knots.index(r.knot)
        values[si][ki] = None if r.error is not None else r.count
    return structures, knots, values


def render_figure(rows, path, title="coloring counts"):
    """Draw the count grid and write it to ``path``.

    Failed rows draw as hatched cells.  Returns the output path.
    """
    structures, knots, values = _grid(rows)
    if not structures or not knots:
        raise ValueError("no rows to draw")

    width = max(6.0, 0.18 * len(knots) + 2.0)
    height = max(2.4, 0.5 * len(structures) + 1.6)
    fig = Figure(figsize=(width, height))
    FigureCanvasAgg(fig)
    ax = fig.add_subplot(111)

    finite = sorted({v for row in values for v in row if v is not None})
    vmax = finite[-1] if finite else 1
    data = [[v if v is not None else 0 for v in row] for row in values]
    mesh = ax.imshow(
        data,
        aspect="auto",
        interpolation="nearest",
        cmap="viridis",
        vmin=0,
        vmax=vmax,
    )
    for si, row in enumerate(values):
        for ki, v in enumerate(row):
            if v is None:
                ax.add_patch(
                    Rectangle(
                        (ki - 0.5, si - 0.5),
                        1,
                        1,
                        fill=False,
                        hatch="//",
                        edgecolor="red",
                        linewidth=0.0,
                    )
                )

    ax.set_yticks(range(len(structures)))
    ax.set_yticklabels(structures, fontsize=8)
    step = max(1, len(knots) // 48)
    ax.set_xticks(range(0, len(knots), step))
    ax.set_xticklabels(
        [knots[i] for i in range(0, len(knots), step)],
        fontsize=6,
        rotation=90,
    )
    ax.set_xlabel("knot")
    ax.set_ylabel("structure")
    ax.set_title(title)
    fig.colorbar(mesh, ax=ax, label="colorings", shrink=0.9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    return path
