"""Matplotlib rendering of the emitted tables.

Figures are written straight to files (Agg backend); the data files remain
the primary output and the plots are a convenience view of the same rows.
"""

from __future__ import annotations

import math
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .output import CycleRecord, MeanFieldRow, SpectrumTable


def plot_spectrum(table: SpectrumTable, path: str, title: str | None = None) -> None:
    """Energy levels against the coupling, one line per sorted level."""
    couplings = np.asarray(table.couplings)
    energies = np.asarray(table.energies)
    fig, ax = plt.subplots(figsize=(6, 4.5))
    ax.plot(couplings, energies, lw=0.8)
    ax.set_xlabel(r"$\lambda$")
    ax.set_ylabel("energy")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=160)
    plt.close(fig)


def _efficiency_lines(records: Sequence[CycleRecord], ax) -> None:
    by_group: dict[tuple, list[CycleRecord]] = {}
    for record in records:
        by_group.setdefault((record.n_particles, record.gamma), []).append(record)
    for (n_particles, gamma), rows in sorted(by_group.items(), key=lambda kv: str(kv[0])):
        lam2 = [r.lambda2 for r in rows]
        eta = [r.efficiency if math.isfinite(r.efficiency) else np.nan for r in rows]
        label = []
        if n_particles is not None:
            label.append(f"N={n_particles}")
        if gamma is not None:
            label.append(rf"$\gamma$={gamma:g}")
        ax.plot(lam2, eta, lw=1.2, label=" ".join(label) or None)
    carnot = records[0].carnot
    ax.axhline(carnot, color="0.6", lw=1.0, ls="--", label="Carnot")
    ax.set_xlabel(r"$\lambda_2$")
    ax.set_ylabel(r"$\eta$")
    if any(r.n_particles is not None or r.gamma is not None for r in records) or True:
        ax.legend(fontsize=8, ncol=2)


def plot_efficiency(records: Sequence[CycleRecord], path: str) -> None:
    """Efficiency against lambda2.

    With a swept gamma the records form a surface and are rendered as one
    heatmap per N; otherwise as one curve per (N, gamma) with the Carnot
    bound marked.
    """
    if not records:
        raise ValueError("no records to plot")
    gammas = sorted({r.gamma for r in records if r.gamma is not None})
    lambda2s = sorted({r.lambda2 for r in records})
    if len(gammas) > 1 and len(lambda2s) > 1:
        _plot_surface(records, gammas, lambda2s, path)
        return
    fig, ax = plt.subplots(figsize=(6, 4.5))
    _efficiency_lines(records, ax)
    fig.tight_layout()
    fig.savefig(path, dpi=160)
    plt.close(fig)


def _plot_surface(records: Sequence[CycleRecord], gammas, lambda2s, path: str) -> None:
    n_values = sorted({r.n_particles for r in records})
    fig, axes = plt.subplots(
        1, len(n_values), figsize=(5.5 * len(n_values), 4.2), squeeze=False
    )
    gamma_index = {g: i for i, g in enumerate(gammas)}
    lam_index = {l: i for i, l in enumerate(lambda2s)}
    for ax, n_particles in zip(axes[0], n_values):
        grid = np.full((len(gammas), len(lambda2s)), np.nan)
        for record in records:
            if record.n_particles != n_particles:
                continue
            if math.isfinite(record.efficiency):
                grid[gamma_index[record.gamma], lam_index[record.lambda2]] = record.efficiency
        mesh = ax.pcolormesh(lambda2s, gammas, grid, shading="nearest", cmap="viridis")
        fig.colorbar(mesh, ax=ax, label=r"$\eta$")
        ax.set_xlabel(r"$\lambda_2$")
        ax.set_ylabel(r"$\gamma$")
        ax.set_title(f"N={n_particles}")
    fig.tight_layout()
    fig.savefig(path, dpi=160)
    plt.close(fig)


def plot_heats(records: Sequence[CycleRecord], path: str) -> None:
    """The four heats against lambda2 for a single (N, gamma) group."""
    fig, ax = plt.subplots(figsize=(6, 4.5))
    lam2 = [r.lambda2 for r in records]
    for name, values in (
        ("$Q_{AB}$", [r.q_ab for r in records]),
        ("$Q_{BC}$", [r.q_bc for r in records]),
        ("$Q_{CD}$", [r.q_cd for r in records]),
        ("$Q_{DA}$", [r.q_da for r in records]),
    ):
        ax.plot(lam2, values, lw=1.2, label=name)
    ax.axhline(0.0, color="0.8", lw=0.8)
    ax.set_xlabel(r"$\lambda_2$")
    ax.set_ylabel("heat")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=160)
    plt.close(fig)


def plot_meanfield(rows: Sequence[MeanFieldRow], path: str) -> None:
    """Energy per particle and its finite-difference curvature, stacked."""
    couplings = [r.coupling for r in rows]
    fig, (ax_top, ax_bottom) = plt.subplots(2, 1, figsize=(6, 6), sharex=True)
    ax_top.plot(couplings, [r.energy_per_particle for r in rows], lw=1.4)
    ax_top.set_ylabel("$U/N$")
    ax_bottom.plot(couplings, [r.d2_energy for r in rows], lw=1.4, color="tab:red")
    ax_bottom.set_ylabel(r"$d^2(U/N)/d\lambda^2$")
    ax_bottom.set_xlabel(r"$\lambda$")
    fig.tight_layout()
    fig.savefig(path, dpi=160)
    plt.close(fig)
