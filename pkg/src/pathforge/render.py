"""ASCII and SVG drawings of a path.

Output is a pure function of the path and the :class:`RenderSpec`, so it
can be compared byte for byte against stored fixtures.
"""
from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .checkmark import to_checkmarks
from .path import Path, turns
from .weighting import Band, bibanded_monomial, edge_bands, peak_monomial

BAND_FILL = "#dbe4f3"
PATH_STROKE = "#1f3b73"
PEAK_FILL = "#c0392b"
ARROW_FILL = "#c0392b"
LABEL_FILL = "#7f8c8d"


@dataclass(frozen=True)
class RenderSpec:
    format: str = "ascii"
    show_bands: bool = False
    show_peaks: bool = False
    show_checkmarks: bool = False
    cell_size: int = 20

    def __post_init__(self) -> None:
        if self.format not in ("ascii", "svg"):
            raise ValueError(f"unknown render format {self.format!r}")
        if self.format == "svg" and self.cell_size < 4:
            raise ValueError("cell_size must be at least 4 for svg")


def render(path: Path, spec: RenderSpec) -> str:
    if spec.format == "svg":
        return render_svg(path, spec)
    return render_ascii(path, spec)


def render_ascii(path: Path, spec: RenderSpec = RenderSpec()) -> str:
    """One column per vertex, one row per height, top row highest."""
    hs = path.heights
    peaks = set(turns(path).peaks) if spec.show_peaks else set()
    top, bottom = max(hs), min(hs)
    width = max(len(str(top)), len(str(bottom)))
    lines = []
    for row in range(top, bottom - 1, -1):
        cells = []
        for i, h in enumerate(hs):
            if h == row:
                cells.append("*" if i in peaks else "o")
            else:
                cells.append("-" if row == 0 else " ")
        lines.append(f"{row:>{width}} |{''.join(cells)}".rstrip())
    if spec.show_bands:
        letters = "".join("a" if b is Band.ODD else "b" for b in edge_bands(path))
        lines.append(f"bands: {letters}  w = {bibanded_monomial(path)}")
    if spec.show_peaks:
        lines.append(f"peaks: {len(peaks)}  w = {peak_monomial(path)}")
    if spec.show_checkmarks:
        lines.append(to_checkmarks(path).to_text())
    return "\n".join(lines) + "\n"


def render_svg(path: Path, spec: RenderSpec) -> str:
    n = path.n
    t = 2 * n
    c = spec.cell_size
    margin = 2 * c
    size = t * c + 2 * margin

    def x(i: int) -> int:
        return margin + i * c

    def y(h: int) -> int:
        # y grows downwards in SVG; height n sits at the top margin
        return margin + (n - h) * c

    hs = path.heights
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f"<title>{escape(str(path))}</title>",
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>',
    ]
    if spec.show_bands:
        out.append('<g class="bands">')
        for lo in range(min(hs), max(hs)):
            if lo % 2 == 0:
                out.append(
                    f'<rect class="odd-band" x="{x(0)}" y="{y(lo + 1)}" '
                    f'width="{t * c}" height="{c}" fill="{BAND_FILL}"/>'
                )
        out.append("</g>")
    if spec.show_checkmarks:
        corners = [(0, 0), (n, n), (t, 0), (n, -n)]
        pts = " ".join(f"{x(i)},{y(h)}" for i, h in corners)
        out.append(
            f'<polygon class="bounding-box" points="{pts}" fill="none" '
            f'stroke="{LABEL_FILL}" stroke-dasharray="4 3"/>'
        )
    out.append(
        f'<line class="baseline" x1="{x(0)}" y1="{y(0)}" x2="{x(t)}" y2="{y(0)}" '
        'stroke="black" stroke-width="2"/>'
    )
    pts = " ".join(f"{x(i)},{y(h)}" for i, h in enumerate(hs))
    out.append(
        f'<polyline class="path" points="{pts}" fill="none" '
        f'stroke="{PATH_STROKE}" stroke-width="3" stroke-linejoin="round"/>'
    )
    if spec.show_peaks:
        r = max(2, c // 5)
        out.append('<g class="peaks">')
        for i in turns(path).peaks:
            out.append(f'<circle cx="{x(i)}" cy="{y(hs[i])}" r="{r}" fill="{PEAK_FILL}"/>')
        out.append("</g>")
    if spec.show_checkmarks:
        pair = to_checkmarks(path)
        font = max(8, c // 2)
        out.append(f'<g class="checkmarks" font-family="sans-serif" font-size="{font}">')
        for k, arrow in enumerate(pair.nw, start=1):
            cls, fill = ("nw arrow", ARROW_FILL) if arrow else ("nw", LABEL_FILL)
            out.append(
                f'<text class="{cls}" x="{x(k - 1) - c // 2}" y="{y(k - 1) - c // 4}" '
                f'text-anchor="end" fill="{fill}">{k}</text>'
            )
        for k, arrow in enumerate(pair.sw, start=1):
            cls, fill = ("sw arrow", ARROW_FILL) if arrow else ("sw", LABEL_FILL)
            out.append(
                f'<text class="{cls}" x="{x(k) - c // 2}" y="{y(-k) + c // 2 + font // 2}" '
                f'text-anchor="end" fill="{fill}">{k}</text>'
            )
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
