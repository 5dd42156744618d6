"""Five stacked panels: the defect against a logarithmic n-axis on top, then
the four growth ratios slowest-root first, each ratio panel annotated with the
direction its decile means drift.
"""

from __future__ import annotations

from matplotlib.figure import Figure

from .ratios import RatioTable, trend

# Top to bottom below the defect panel. r5 divides by the slowest-growing
# root, so it drifts up the hardest and earns the first slot.
PANEL_KS = (5, 4, 3, 2)

DEFECT_COLOR = "#1f4e79"
RATIO_COLOR = "#a03123"


def build_figure(table: RatioTable) -> Figure:
    """Build the five-panel figure. Pure: same table, same plotted series."""
    if len(table) == 0:
        raise ValueError("ratio table is empty")
    fig = Figure(figsize=(7.0, 11.0), constrained_layout=True)
    axes = fig.subplots(5, 1)

    top = axes[0]
    top.plot(table.n, table.b, color=DEFECT_COLOR, linewidth=1.0)
    top.set_xscale("log")
    top.set_ylabel("b_n = a_n - n")
    top.set_title(f"defect growth through n = {table.n[-1]}")

    for ax, k in zip(axes[1:], PANEL_KS):
        series = table.ratio_series(k)
        ax.plot(table.n, series, color=RATIO_COLOR, linewidth=0.9)
        ax.set_ylabel(f"b_n / n^(1/{k})")
        direction = trend(series)
        if direction is not None:
            ax.text(
                0.98,
                0.88,
                f"r{k} {direction}",
                transform=ax.transAxes,
                ha="right",
                va="top",
                fontsize=9,
            )
    axes[-1].set_xlabel("n")
    return fig


def render(table: RatioTable, out_path) -> None:
    """Render the figure to out_path; format follows the suffix (png, svg)."""
    build_figure(table).savefig(out_path)
