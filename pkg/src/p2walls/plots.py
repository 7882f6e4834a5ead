"""Matplotlib figures for sweep reports, written to files next to the stream."""

from __future__ import annotations


def render_sweep_figure(items: list[dict], path: str) -> None:
    """Plot the wall right endpoint against the discriminant, one line per
    (rank, slope) column of the sweep; strict monotonicity is visible at a
    glance.  Items carrying embedded errors are skipped."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    columns: dict[str, tuple[list[float], list[float]]] = {}
    for item in items:
        report = item.get("report")
        if report is None:
            continue
        key = f"r={item['input']['r']}, mu={item['input']['mu']}"
        xs, ys = columns.setdefault(key, ([], []))
        from fractions import Fraction

        xs.append(float(Fraction(item["input"]["disc"])))
        ys.append(float(report["gieseker"]["wall"]["x_plus"]["decimal"]))

    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for key in sorted(columns):
        xs, ys = columns[key]
        ax.plot(xs, ys, marker="o", markersize=3, linewidth=1.2, label=key)
    ax.set_xlabel("discriminant")
    ax.set_ylabel("wall right endpoint")
    ax.set_title("right endpoint growth along discriminant sweeps")
    if columns:
        ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
