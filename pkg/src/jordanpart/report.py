"""Survey report: delimited files plus figures rendered to disk.

Writes the deviation tables and the census summary as CSV, and two
matplotlib figures alongside them: the census growth against its
2^(r-1) ceiling, and the family of deviation vectors at the largest
surveyed rank. Batch output only; no display backend is touched.
"""

from __future__ import annotations

import csv
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .survey import check_bound, deviation_table, enumerate_deviation_vectors

__all__ = ["write_report"]


def write_report(out_dir: str, table_max: int = 5, census_max: int = 12) -> list[str]:
    """Write survey CSVs and figures into out_dir; returns written paths."""
    if table_max < 1 or census_max < 1:
        raise ValueError("table_max and census_max must be positive")
    os.makedirs(out_dir, exist_ok=True)
    written: list[str] = []

    tables_path = os.path.join(out_dir, "deviation_tables.csv")
    with open(tables_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["r", "p", "class", "epsilon"])
        for r in range(1, table_max + 1):
            for row in deviation_table(r).rows:
                p_label = "p'" if row.p is None else row.p
                writer.writerow([r, p_label, row.residue, row.epsilon.render()])
    written.append(tables_path)

    censuses = [enumerate_deviation_vectors(r) for r in range(1, census_max + 1)]
    census_path = os.path.join(out_dir, "census.csv")
    with open(census_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["r", "n", "bound", "prime_bound", "bound_ok"])
        for census in censuses:
            writer.writerow(
                [census.r, census.n, 2 ** (census.r - 1), census.prime_bound, check_bound(census)]
            )
    written.append(census_path)

    growth_path = os.path.join(out_dir, "census_growth.png")
    ranks = [c.r for c in censuses]
    counts = [c.n for c in censuses]
    bounds = [2 ** (r - 1) for r in ranks]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogy(ranks, counts, "o-", label="distinct deviation vectors")
    ax.semilogy(ranks, bounds, "s--", label="ceiling $2^{r-1}$")
    ax.set_xlabel("rank r")
    ax.set_ylabel("count")
    ax.set_title("Census of deviation vectors")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(growth_path, dpi=150)
    plt.close(fig)
    written.append(growth_path)

    vectors_path = os.path.join(out_dir, f"deviation_vectors_r{table_max}.png")
    census = censuses[table_max - 1] if table_max <= census_max else enumerate_deviation_vectors(table_max)
    fig, ax = plt.subplots(figsize=(6, 4))
    positions = range(1, table_max + 1)
    for vec in census.vectors:
        ax.plot(positions, vec.entries, "o-", alpha=0.6, linewidth=1)
    ax.set_xticks(list(positions))
    ax.set_xlabel("part index i")
    ax.set_ylabel("deviation from s")
    ax.set_title(f"All {census.n} deviation vectors at rank {table_max}")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(vectors_path, dpi=150)
    plt.close(fig)
    written.append(vectors_path)

    return written
