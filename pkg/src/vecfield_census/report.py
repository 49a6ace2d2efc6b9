"""Growth-rate report: CSV table and matplotlib figure of the n-th roots.

The two class counts grow like c^n up to polynomial factors; their n-th
roots climb towards 4 (generic) and 2/(5*sqrt(5)-11) ~ 11.09 (full family).
At desk scale the roots sit well below the limits, so the report shows the
trend rather than the asymptote.
"""

from __future__ import annotations

import csv
import io
from pathlib import Path

from .formulas import (
    P_PLUS_GROWTH_LIMIT,
    SIGMA_GROWTH_LIMIT,
    growth_estimates,
)

__all__ = ["growth_csv", "write_growth_report"]

_HEADER = ["n", "sigma_nth_root", "p_plus_nth_root"]


def growth_csv(n_max: int) -> str:
    """The growth table as CSV text (deterministic for a fixed n_max)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_HEADER)
    for n, s_root, p_root in growth_estimates(n_max):
        writer.writerow([n, f"{s_root:.10f}", f"{p_root:.10f}"])
    return buf.getvalue()


def _growth_figure(n_max: int):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    rows = growth_estimates(n_max)
    ns = [r[0] for r in rows]
    s_roots = [r[1] for r in rows]
    p_roots = [r[2] for r in rows]

    fig, (ax_s, ax_p) = plt.subplots(1, 2, figsize=(9, 3.6))
    ax_s.plot(ns, s_roots, color="tab:blue", lw=1.5, label="generic")
    ax_s.axhline(SIGMA_GROWTH_LIMIT, color="gray", ls="--", lw=1, label="limit 4")
    ax_s.set_xlabel("n")
    ax_s.set_ylabel("n-th root of class count")
    ax_s.set_title("generic classes")
    ax_s.legend(loc="lower right", frameon=False)

    ax_p.plot(ns, p_roots, color="tab:red", lw=1.5, label="full family")
    ax_p.axhline(
        P_PLUS_GROWTH_LIMIT,
        color="gray",
        ls="--",
        lw=1,
        label=f"limit {P_PLUS_GROWTH_LIMIT:.4f}",
    )
    ax_p.set_xlabel("n")
    ax_p.set_title("all classes")
    ax_p.legend(loc="lower right", frameon=False)

    fig.tight_layout()
    return fig


def write_growth_report(n_max: int, out_dir: str | Path) -> tuple[Path, Path]:
    """Write growth.csv and growth.png under ``out_dir``; return both paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / "growth.csv"
    csv_path.write_text(growth_csv(n_max))
    png_path = out / "growth.png"
    fig = _growth_figure(n_max)
    fig.savefig(png_path, dpi=150)
    return csv_path, png_path
