"""Matplotlib rendering of fitted arc splines."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .arc_spline import ArcSpline, Polyline  # noqa: E402

JOINT_COLOR = "tab:green"
FALLBACK_COLOR = "tab:orange"


def plot_spline(spline: ArcSpline, ax=None, polyline: Polyline | None = None, samples: int = 48):
    """Draw the spline, its base polygon and the biarc joints.

    Joints of edges that fell back to another strategy are drawn orange.
    """
    if ax is None:
        _, ax = plt.subplots(figsize=(6, 6))
    for seg in spline.segments:
        pts = seg.sample(samples) if seg.is_arc else [seg.start, seg.end]
        ax.plot([p.x for p in pts], [p.y for p in pts], color="black", lw=1.2)
    if polyline is not None:
        vs = list(polyline.vertices)
        if polyline.closed:
            vs.append(vs[0])
        ax.plot([v.x for v in vs], [v.y for v in vs], color="0.75", lw=0.8, ls="--", zorder=0)
        ax.scatter([v.x for v in polyline.vertices], [v.y for v in polyline.vertices], s=12, color="0.6")
    for e in spline.edges:
        j = e.biarc.joint
        ax.scatter([j.x], [j.y], s=18, color=FALLBACK_COLOR if e.fell_back else JOINT_COLOR, zorder=3)
    ax.set_aspect("equal")
    ax.set_axis_off()
    return ax


def save_figure(spline: ArcSpline, path: str | Path, polyline: Polyline | None = None, title: str | None = None) -> Path:
    fig, ax = plt.subplots(figsize=(6, 6))
    plot_spline(spline, ax, polyline)
    if title:
        ax.set_title(title, fontsize=10)
    path = Path(path)
    fig.savefig(path, dpi=150, bbox_inches="tight", metadata={"Software": None})
    plt.close(fig)
    return path
