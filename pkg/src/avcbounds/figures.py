"""Matplotlib companions to the delimited reports.

Pure renderers: every function takes already-computed data and a path,
writes one PNG (or whatever the extension asks for), and returns the
path.  Nothing here computes bounds, so the CLI can always produce its
CSV/JSON even when rendering is skipped.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

__all__ = ["save_footprint_grid", "save_table_heatmap", "save_sweep_lines"]


def _finish(fig, path: str) -> str:
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_footprint_grid(curve, path: str) -> str:
    """Basis monomials on the (x-exponent, y-exponent) grid, annotated
    with index and weight."""
    xs = [m.alpha for m in curve.footprint]
    ys = [m.beta for m in curve.footprint]
    side = max(4.0, 0.75 * (max(xs) + 1), 0.45 * (max(ys) + 1))
    fig, ax = plt.subplots(figsize=(side, side))
    ax.scatter(xs, ys, s=12, color="#888888", zorder=1)
    small = curve.n <= 64
    if small:
        for i, m in enumerate(curve.footprint, start=1):
            ax.annotate(
                f"{i}\nw{int(curve.weights[i])}",
                (m.alpha, m.beta),
                textcoords="offset points",
                xytext=(0, 6),
                ha="center",
                fontsize=7,
            )
    ax.set_xlabel("X exponent")
    ax.set_ylabel("Y exponent")
    ax.set_title(f"{curve.name}: {curve.n} basis monomials")
    ax.set_xticks(range(max(xs) + 1))
    ax.grid(True, linewidth=0.3, alpha=0.5)
    return _finish(fig, path)


def save_table_heatmap(table, path: str, *, name: str = "") -> str:
    """Heatmap of the full product-order table."""
    fig, ax = plt.subplots(figsize=(6, 5))
    im = ax.imshow(
        table.rho[1:, 1:], origin="lower", extent=(1, table.n, 1, table.n),
        cmap="viridis", interpolation="nearest",
    )
    fig.colorbar(im, ax=ax, label="first-hit index")
    ax.set_xlabel("j")
    ax.set_ylabel("i")
    ax.set_title(f"product order table{f' ({name})' if name else ''}")
    return _finish(fig, path)


def save_sweep_lines(rows, path: str, *, title: str = "") -> str:
    """Per-method bound curves over a parity-size sweep.

    rows: iterable of (s, k, method_token, value) in emission order.
    """
    series: dict[str, tuple[list[int], list[int]]] = {}
    for s, _k, token, value in rows:
        xs, ys = series.setdefault(token, ([], []))
        xs.append(s)
        ys.append(value)
    fig, ax = plt.subplots(figsize=(7, 5))
    for token in sorted(series):
        xs, ys = series[token]
        ax.plot(xs, ys, marker="o", markersize=3, linewidth=1, label=token)
    ax.set_xlabel("parity prefix size s")
    ax.set_ylabel("bound value")
    if title:
        ax.set_title(title)
    ax.legend()
    ax.grid(True, linewidth=0.3, alpha=0.5)
    return _finish(fig, path)
