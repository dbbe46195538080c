"""Figure rendering for the report-producing commands.

Every report path that writes delimited output can also drop a PNG next to
it; these helpers own the matplotlib side so the rest of the package stays
import-light.  All figures use the Agg backend and never open a window.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def save_experiment_figure(report, path) -> None:
    """Empirical non-goodness rate per n against the n^-2 reference line."""
    rows = [r for r in report.rows if r.status == "ok"]
    fig, ax = plt.subplots(figsize=(6, 4))
    ns = [r.n for r in rows]
    ax.plot(ns, [r.rate for r in rows], "o-", label="observed rate")
    ax.plot(ns, [r.n_pow_minus_2 for r in rows], "--", label=r"$n^{-2}$ reference")
    ax.set_xlabel("n")
    ax.set_ylabel("fraction of trials violating")
    ax.set_yscale("symlog", linthresh=1e-6)
    ax.set_title("Goodness of sparse random graphs")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_ledger_figure(report, path) -> None:
    """Exponent ratio along the size grid, with the crossover marked."""
    fig, ax = plt.subplots(figsize=(6, 4))
    ns = [r.n for r in report.rows]
    ax.plot(ns, [r.ratio for r in report.rows], "o-", label="exponent ratio")
    ax.axhline(1.0, color="gray", linestyle=":", label="parity")
    ax.axhline(2.0, color="black", linestyle="--", label="limit 2")
    if report.crossover_n is not None:
        ax.axvline(report.crossover_n, color="red", linestyle=":", label="crossover")
    ax.set_xscale("log", base=2)
    ax.set_xlabel("n")
    ax.set_ylabel("good count / coverable count (log-space ratio)")
    ax.set_title(f"Counting ledger, f = {report.f_spec}, gamma = {report.gamma:g}")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_transfer_figure(report, path) -> None:
    """Frequencies under both models plus the scaled comparison level."""
    fig, ax = plt.subplots(figsize=(6, 4))
    rows = [report.fixed_count, report.independent]
    xs = range(len(rows))
    ax.bar(xs, [r.frequency for r in rows], width=0.6, color=["tab:blue", "tab:orange"])
    for x, r in zip(xs, rows):
        ax.plot([x, x], [r.wilson_low, r.wilson_high], color="black")
    level = report.factor * report.independent.frequency
    ax.axhline(min(level, 1.05), color="red", linestyle="--",
               label=f"{report.factor:.1f} x independent")
    ax.set_xticks(list(xs))
    ax.set_xticklabels([r.model for r in rows])
    ax.set_ylabel(f"P[{report.property_name}]")
    ax.set_title(f"Model transfer, n={report.n}, p={report.p:g}, m={report.m}")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_census_figure(table, probe, path) -> None:
    """Class counts per level and the smallness constant trend."""
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 4))
    rows = [r for r in table.rows if r.n >= 1]
    ns = [r.n for r in rows]
    ax1.plot(ns, [r.unlabeled for r in rows], "o-", label="unlabeled")
    ax1.plot(ns, [r.labeled for r in rows], "s-", label="labeled")
    ax1.set_yscale("log")
    ax1.set_xlabel("n")
    ax1.set_ylabel("count")
    ax1.set_title("Closure census")
    ax1.legend()
    ax2.plot([n for n, _ in probe], [c for _, c in probe], "o-")
    ax2.set_xlabel("n")
    ax2.set_ylabel(r"$(|X_n|/n!)^{1/n}$")
    ax2.set_title("Smallness constant")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
