"""Static drawings of bar layouts: hand-written SVG and matplotlib figures."""

from __future__ import annotations

from pathlib import Path
from xml.sax.saxutils import escape

from .bars import BarLayout
from .oracle import sightings

UNIT = 24
MARGIN = 12
BAR_HEIGHT = 0.5


def layout_svg(layout: BarLayout, overlay: bool = False) -> str:
    """SVG text with one ``rect.bar`` per bar and, with ``overlay``, one
    ``rect.channel`` per pair of distinct vertices that see each other."""
    xmin, xmax, ymin, ymax = layout.extent()
    width = (xmax - xmin) * UNIT + 2 * MARGIN
    height = (ymax - ymin + BAR_HEIGHT) * UNIT + 2 * MARGIN

    def sx(x: int) -> float:
        return (x - xmin) * UNIT + MARGIN

    def sy(y: int) -> float:
        return (ymax - y) * UNIT + MARGIN

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height:g}" '
        f'viewBox="0 0 {width:g} {height:g}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    if overlay:
        drawn = set()
        for s in sightings(layout):
            key = tuple(sorted((s.lower.owner, s.upper.owner)))
            if s.lower.owner == s.upper.owner or key in drawn:
                continue
            drawn.add(key)
            top = sy(s.upper.y) + BAR_HEIGHT * UNIT
            out.append(
                f'<rect class="channel" x="{sx(s.x1):g}" y="{top:g}" width="{(s.x2 - s.x1) * UNIT:g}" '
                f'height="{sy(s.lower.y) - top:g}" fill="#9ecae1" fill-opacity="0.5">'
                f"<title>{escape(key[0])} {escape(key[1])}</title></rect>"
            )
    for b in layout:
        x, y, w = sx(b.xl), sy(b.y), (b.xr - b.xl) * UNIT
        out.append(
            f'<rect class="bar" x="{x:g}" y="{y:g}" width="{w:g}" height="{BAR_HEIGHT * UNIT:g}" '
            f'fill="#3182bd" stroke="black" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{x + w / 2:g}" y="{y + BAR_HEIGHT * UNIT * 0.75:g}" font-size="{UNIT * 0.4:g}" '
            f'text-anchor="middle" fill="white" font-family="sans-serif">{escape(b.owner)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def plot_layout(layout: BarLayout, ax=None, overlay: bool = False, title: str | None = None):
    """Draw the layout on a matplotlib axes (created if not given) and return it."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.patches import Rectangle

    if ax is None:
        xmin, xmax, ymin, ymax = layout.extent()
        w = max(4.0, 0.35 * (xmax - xmin))
        h = max(3.0, 0.35 * (ymax - ymin + 1))
        _, ax = plt.subplots(figsize=(min(w, 30), min(h, 30)))
    if overlay:
        for s in sightings(layout):
            if s.lower.owner == s.upper.owner:
                continue
            ax.add_patch(Rectangle((s.x1, s.lower.y), s.x2 - s.x1, s.upper.y - s.lower.y, color="#9ecae1", alpha=0.4, lw=0))
    for b in layout:
        ax.add_patch(Rectangle((b.xl, b.y - BAR_HEIGHT / 2), b.xr - b.xl, BAR_HEIGHT, facecolor="#3182bd", edgecolor="black"))
        ax.text((b.xl + b.xr) / 2, b.y, b.owner, ha="center", va="center", color="white", fontsize=8)
    xmin, xmax, ymin, ymax = layout.extent()
    ax.set_xlim(xmin - 0.5, xmax + 0.5)
    ax.set_ylim(ymin - 1, ymax + 1)
    ax.set_xlabel("x")
    ax.set_ylabel("level")
    if title:
        ax.set_title(title)
    return ax


def save_figure(layout: BarLayout, path: str | Path, overlay: bool = False, title: str | None = None) -> None:
    """Write a raster/vector figure via matplotlib; SVG goes through :func:`layout_svg`."""
    path = Path(path)
    if path.suffix.lower() == ".svg":
        path.write_text(layout_svg(layout, overlay))
        return
    import matplotlib.pyplot as plt

    ax = plot_layout(layout, overlay=overlay, title=title)
    ax.figure.tight_layout()
    ax.figure.savefig(path, dpi=150, metadata={"Software": None} if path.suffix.lower() == ".png" else None)
    plt.close(ax.figure)
