"""Tabular emission: the CSV/JSON record contract shared by all commands.

The cycle-record column order is fixed and floating-point values are printed
with 12 significant digits, so identical runs produce byte-identical files
fit for golden-file comparison.  Non-finite values (an efficiency without
positive absorbed heat, or a failed sweep point) print as empty CSV cells and
JSON nulls.
"""

from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass
from typing import Iterable, Sequence

from .stirling import STATUS_ERROR, CARNOT_SLACK, FIRST_LAW_RTOL, CycleResult

CYCLE_COLUMNS = (
    "model",
    "N",
    "gamma",
    "lambda1",
    "lambda2",
    "beta_hot",
    "beta_cold",
    "cutoff",
    "q_ab",
    "q_bc",
    "q_cd",
    "q_da",
    "work",
    "efficiency",
    "carnot",
    "status",
)


@dataclass(frozen=True)
class CycleRecord:
    """One output row of the cycle, sweep, toy and converge-cutoff commands."""

    model: str
    n_particles: int | None
    gamma: float | None
    lambda1: float
    lambda2: float
    beta_hot: float
    beta_cold: float
    cutoff: int | None
    q_ab: float
    q_bc: float
    q_cd: float
    q_da: float
    work: float
    efficiency: float
    carnot: float
    status: str


def record_from_cycle(
    result: CycleResult,
    *,
    model: str,
    lambda1: float,
    lambda2: float,
    beta_hot: float,
    beta_cold: float,
    n_particles: int | None = None,
    gamma: float | None = None,
    cutoff: int | None = None,
) -> CycleRecord:
    """Flatten a CycleResult into a record, re-checking the physics gates.

    Emission re-asserts first-law closure and the Carnot bound so a corrupt
    row can never reach a data file.
    """
    if result.status != STATUS_ERROR:
        heat_sum = result.q_ab + result.q_bc + result.q_cd + result.q_da
        if abs(result.work - heat_sum) > FIRST_LAW_RTOL * (1.0 + abs(result.work)):
            raise ArithmeticError(f"record rejected: work {result.work!r} != heat sum {heat_sum!r}")
        if result.absorbed_heat > 0 and result.efficiency > result.carnot + CARNOT_SLACK:
            raise ArithmeticError(
                f"record rejected: efficiency {result.efficiency!r} above Carnot {result.carnot!r}"
            )
    return CycleRecord(
        model=model,
        n_particles=n_particles,
        gamma=gamma,
        lambda1=lambda1,
        lambda2=lambda2,
        beta_hot=beta_hot,
        beta_cold=beta_cold,
        cutoff=cutoff,
        q_ab=result.q_ab,
        q_bc=result.q_bc,
        q_cd=result.q_cd,
        q_da=result.q_da,
        work=result.work,
        efficiency=result.efficiency,
        carnot=result.carnot,
        status=result.status,
    )


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if not math.isfinite(value):
        return ""
    if value == 0.0:
        value = 0.0  # normalize -0.0
    return f"{value:.12g}"


def _json_value(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def _record_cells(record: CycleRecord) -> list:
    return [
        record.model,
        record.n_particles,
        record.gamma,
        record.lambda1,
        record.lambda2,
        record.beta_hot,
        record.beta_cold,
        record.cutoff,
        record.q_ab,
        record.q_bc,
        record.q_cd,
        record.q_da,
        record.work,
        record.efficiency,
        record.carnot,
        record.status,
    ]


def cycle_records_to_csv(records: Iterable[CycleRecord]) -> str:
    lines = [",".join(CYCLE_COLUMNS)]
    for record in records:
        lines.append(",".join(_cell(value) for value in _record_cells(record)))
    return "\n".join(lines) + "\n"


def cycle_records_to_json(records: Iterable[CycleRecord]) -> str:
    rows = [
        {column: _json_value(value) for column, value in zip(CYCLE_COLUMNS, _record_cells(record))}
        for record in records
    ]
    return json.dumps(rows, indent=2, allow_nan=False) + "\n"


@dataclass(frozen=True)
class SpectrumTable:
    """Eigenvalues on a coupling grid: one row per coupling, ascending energies."""

    couplings: Sequence[float]
    energies: Sequence[Sequence[float]]  # energies[i][k] = k-th eigenvalue at couplings[i]


def spectrum_to_csv(table: SpectrumTable) -> str:
    dim = len(table.energies[0])
    lines = [",".join(["lambda"] + [f"E{k}" for k in range(dim)])]
    for coupling, row in zip(table.couplings, table.energies):
        lines.append(",".join([_cell(float(coupling))] + [_cell(float(e)) for e in row]))
    return "\n".join(lines) + "\n"


def spectrum_to_json(table: SpectrumTable) -> str:
    rows = [
        {"lambda": _json_value(float(coupling)), "eigenvalues": [float(e) for e in row]}
        for coupling, row in zip(table.couplings, table.energies)
    ]
    return json.dumps(rows, indent=2, allow_nan=False) + "\n"


@dataclass(frozen=True)
class MeanFieldRow:
    """Energy per particle and its finite-difference curvature at one coupling."""

    coupling: float
    energy_per_particle: float
    d2_energy: float  # NaN at the grid edges (no central difference there)
    phase: str


MEANFIELD_COLUMNS = ("lambda", "energy_per_particle", "d2_energy_per_particle", "phase")


def meanfield_to_csv(rows: Iterable[MeanFieldRow]) -> str:
    lines = [",".join(MEANFIELD_COLUMNS)]
    for row in rows:
        lines.append(
            ",".join(
                [_cell(row.coupling), _cell(row.energy_per_particle), _cell(row.d2_energy), row.phase]
            )
        )
    return "\n".join(lines) + "\n"


def meanfield_to_json(rows: Iterable[MeanFieldRow]) -> str:
    payload = [
        {
            "lambda": row.coupling,
            "energy_per_particle": row.energy_per_particle,
            "d2_energy_per_particle": _json_value(row.d2_energy),
            "phase": row.phase,
        }
        for row in rows
    ]
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def write_text(path: str, text: str) -> None:
    """Write to a file, or to stdout when path is '-'."""
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
