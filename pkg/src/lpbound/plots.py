"""Figure rendering for CLI reports.

Each function takes already-computed report rows (the same data the CSV/JSON
emitters see) and writes one PNG/PDF/SVG file; nothing here recomputes
bounds.  matplotlib is imported lazily with the Agg backend so that plain
CSV runs never touch a display stack.
"""

from __future__ import annotations

from typing import Optional, Sequence


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def plot_curve(rows: Sequence[dict], path: str, n_finite: Optional[int] = None) -> None:
    """Rate-vs-distance curves: GV floor, the entropy ceiling, and the
    finite-n certificate exponents when present."""
    plt = _pyplot()
    deltas = [row["delta"] for row in rows]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(deltas, [row["gv"] for row in rows], label="GV lower bound", color="#2a7")
    ax.plot(
        deltas,
        [row["mrrw1"] for row in rows],
        label="entropy upper bound",
        color="#d43",
    )
    if any(row.get("cert_exponent") is not None for row in rows):
        pts = [
            (row["delta"], row["cert_exponent"])
            for row in rows
            if row.get("cert_exponent") is not None
        ]
        label = f"certificate exponent (n={n_finite})" if n_finite else "certificate exponent"
        ax.plot(
            [p[0] for p in pts],
            [p[1] for p in pts],
            "o--",
            label=label,
            color="#36c",
            markersize=4,
        )
    ax.set_xlabel("relative distance  d/n")
    ax.set_ylabel("rate  log2(size)/n")
    ax.set_xlim(0, 0.5)
    ax.set_ylim(bottom=0)
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_walks(n: int, r: int, m: int, counts: Sequence[int], path: str) -> None:
    """Bar chart of end-level walk counts (log scale above zero)."""
    plt = _pyplot()
    levels = [lev for lev, c in enumerate(counts) if c > 0]
    values = [float(counts[lev]) for lev in levels]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar(levels, values, color="#36c", width=0.8)
    if values:
        ax.set_yscale("log")
    ax.set_xlabel("end level")
    ax.set_ylabel("walks")
    ax.set_title(f"length-{m} walks from level {r} in the {n}-cube")
    ax.grid(True, axis="y", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_sweep(rows: Sequence[dict], methods: Sequence[str], path: str) -> None:
    """Exponent-vs-distance lines, one per method, grouped by n."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ns = sorted({row["n"] for row in rows})
    styles = {"certificate": "o-", "lp": "s--", "support": "^:", "oracle": "d-."}
    for n in ns:
        sub = [row for row in rows if row["n"] == n]
        for method in methods:
            key = f"{method}_exponent"
            pts = [
                (row["d"] / row["n"], row[key])
                for row in sub
                if row.get(key) is not None
            ]
            if not pts:
                continue
            ax.plot(
                [p[0] for p in pts],
                [p[1] for p in pts],
                styles.get(method, "x-"),
                markersize=4,
                label=f"{method}, n={n}",
            )
    ax.set_xlabel("relative distance  d/n")
    ax.set_ylabel("exponent  log2(bound)/n")
    ax.grid(True, alpha=0.3)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
