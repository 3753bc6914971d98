"""Figure rendering for batch results."""

from tribrackets.knotdata import InvariantRow
from tribrackets.report import render_figure

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def _rows():
    return [
        InvariantRow("s1", "k1", 9),
        InvariantRow("s1", "k2", 27),
        InvariantRow("s2", "k1", 16),
        InvariantRow("s2", "k2", 64),
    ]


def test_render_writes_png(tmp_path):
    out = tmp_path / "grid.png"
    render_figure(_rows(), out)
    data = out.read_bytes()
    assert data[:8] == PNG_MAGIC
    assert len(data) > 1000


def test_render_marks_failed_rows(tmp_path):
    rows = _rows() + [InvariantRow("s2", "k3", -1, error="boom")]
    rows.insert(2, InvariantRow("s1", "k3", 9))
    out = tmp_path / "grid-err.png"
    render_figure(rows, out, title="with failures")
    assert out.read_bytes()[:8] == PNG_MAGIC


def test_render_single_cell(tmp_path):
    out = tmp_path / "one.png"
    render_figure([InvariantRow("s", "k", 5)], out)
    assert out.read_bytes()[:8] == PNG_MAGIC
