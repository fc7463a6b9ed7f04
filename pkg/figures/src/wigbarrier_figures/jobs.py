"""Figure job description and CSV loading with schema validation.

Each figure kind is tied to the CSV schema of the wigbarrier subcommand
that produces its input; nothing is ever recomputed here, every plotted
number comes out of the file.
"""

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

FIGURE_KINDS = ("transmission_curve", "wigner_surface", "coefficient_panels")

# required leading columns per figure kind; extra columns (e.g. the
# T_integral,abs_diff pair of `transmit --method both`) are permitted
REQUIRED_COLUMNS = {
    "transmission_curve": ("epsilon", "T", "R"),
    "wigner_surface": ("X", "P", "W"),
    "coefficient_panels": ("epsilon", "T", "R"),
}


class FigureInputError(ValueError):
    """Input CSV is unreadable or does not match the expected schema."""


@dataclass(frozen=True)
class FigureJob:
    input_csv: Path
    figure_kind: str
    output_image: Path

    def __post_init__(self):
        if self.figure_kind not in FIGURE_KINDS:
            raise FigureInputError(
                f"unknown figure kind {self.figure_kind!r}; expected one of {FIGURE_KINDS}"
            )


def load_table(job):
    """Columns of the job's CSV as a dict of float arrays, schema-checked."""
    path = Path(job.input_csv)
    if not path.is_file():
        raise FigureInputError(f"input CSV not found: {path}")
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise FigureInputError(f"{path}: empty file, expected a CSV header") from None
        rows = list(reader)

    required = REQUIRED_COLUMNS[job.figure_kind]
    if tuple(header[: len(required)]) != required:
        raise FigureInputError(
            f"{path}: header {','.join(header)!r} does not match the "
            f"{job.figure_kind} schema {','.join(required)!r}"
        )
    if not rows:
        raise FigureInputError(f"{path}: no data rows")

    columns = {name: np.empty(len(rows)) for name in header}
    for i, row in enumerate(rows):
        if len(row) != len(header):
            raise FigureInputError(f"{path}: row {i + 2} has {len(row)} fields, expected {len(header)}")
        for name, field in zip(header, row):
            try:
                columns[name][i] = float(field)
            except ValueError:
                raise FigureInputError(f"{path}: row {i + 2}: {field!r} is not a number") from None
    return columns


def surface_arrays(columns):
    """Reshape long-format X,P,W columns into lattice arrays.

    Expects the wigbarrier grid layout: X varying fastest, P ascending by
    block. Returns (x_axis, p_axis, W) with W shaped (len(p), len(x)).
    """
    x, p, w = columns["X"], columns["P"], columns["W"]
    x_axis = np.unique(x)
    p_axis = np.unique(p)
    if x_axis.size * p_axis.size != w.size:
        raise FigureInputError("grid CSV does not cover a complete rectangular lattice")
    expected_x = np.tile(x_axis, p_axis.size)
    expected_p = np.repeat(p_axis, x_axis.size)
    if not (np.array_equal(x, expected_x) and np.array_equal(p, expected_p)):
        raise FigureInputError("grid CSV rows are not in X-fastest, P-ascending order")
    return x_axis, p_axis, w.reshape(p_axis.size, x_axis.size)
