"""Static figure rendering for benchmark outputs."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def plot_convergence(records, path: str) -> None:
    """RMSE and MAE against data size on log-log axes."""
    fig, ax = plt.subplots(figsize=(5.5, 4))
    ns = [r.n for r in records]
    ax.loglog(ns, [r.rmse for r in records], "o-", label="RMSE")
    ax.loglog(ns, [r.mae for r in records], "s--", label="MAE")
    ax.set_xlabel("data points n")
    ax.set_ylabel("error")
    ax.set_title(records[0].domain if records else "")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_sweep(series, path: str) -> None:
    """RMSE against kernel shape parameter on log-log axes."""
    fig, ax = plt.subplots(figsize=(5.5, 4))
    shapes = [s for s, _ in series]
    ax.loglog(shapes, [rec.rmse for _, rec in series], "o-")
    ax.set_xlabel("kernel shape")
    ax.set_ylabel("RMSE")
    ax.set_title(series[0][1].domain if series else "")
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_error_field(points, abserr, path: str) -> None:
    """Scatter of evaluation points colored by absolute error."""
    dim = points.shape[1]
    if dim == 2:
        fig, ax = plt.subplots(figsize=(5.5, 4.5))
        sc = ax.scatter(points[:, 0], points[:, 1], c=abserr, s=8, cmap="viridis")
        ax.set_aspect("equal")
        ax.set_xlabel("x1")
        ax.set_ylabel("x2")
    else:
        fig = plt.figure(figsize=(5.5, 4.5))
        ax = fig.add_subplot(projection="3d")
        sc = ax.scatter(points[:, 0], points[:, 1], points[:, 2], c=abserr, s=4,
                        cmap="viridis")
        ax.set_xlabel("x1")
        ax.set_ylabel("x2")
        ax.set_zlabel("x3")
    fig.colorbar(sc, ax=ax, label="|error|")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
