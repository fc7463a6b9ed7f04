"""Rendering tests driven by CSVs produced by the wigbarrier CLI."""

import subprocess
import sys
from pathlib import Path

import pytest

from wigbarrier_figures import FigureInputError, FigureJob, MirrorAssertionError, render
from wigbarrier_figures.cli import main


def wigbarrier(*args, out):
    subprocess.run(
        [sys.executable, "-m", "wigbarrier", *args, "--out", str(out)],
        check=True,
        capture_output=True,
    )
    return out


@pytest.fixture(scope="module")
def transmit_csv(tmp_path_factory):
    out = tmp_path_factory.mktemp("data") / "transmit.csv"
    return wigbarrier(
        "transmit", "--eps-min", "-2", "--eps-max", "2", "--steps", "81",
        "--method", "both", out=out,
    )


@pytest.fixture(scope="module")
def grid_csv(tmp_path_factory):
    out = tmp_path_factory.mktemp("data") / "grid.csv"
    return wigbarrier(
        "grid", "--eps", "-0.4", "--side", "left",
        "--x-min", "-2", "--x-max", "2", "--p-min", "-2", "--p-max", "2",
        "--nx", "31", "--np", "31", out=out,
    )


class TestRenderKinds:
    def test_transmission_curve(self, transmit_csv, tmp_path):
        image = tmp_path / "curve.png"
        job = FigureJob(transmit_csv, "transmission_curve", image)
        render(job)
        assert image.is_file() and image.stat().st_size > 0

    def test_wigner_surface(self, grid_csv, tmp_path):
        image = tmp_path / "surface.png"
        job = FigureJob(grid_csv, "wigner_surface", image)
        render(job, view_elev=25.0, view_azim=-120.0)
        assert image.is_file() and image.stat().st_size > 0

    def test_coefficient_panels(self, transmit_csv, tmp_path):
        image = tmp_path / "panels.png"
        job = FigureJob(transmit_csv, "coefficient_panels", image)
        render(job)
        assert image.is_file() and image.stat().st_size > 0

    def test_rendering_is_deterministic(self, transmit_csv, tmp_path):
        a, b = tmp_path / "a.png", tmp_path / "b.png"
        render(FigureJob(transmit_csv, "transmission_curve", a))
        render(FigureJob(transmit_csv, "transmission_curve", b))
        assert a.read_bytes() == b.read_bytes()


class TestCli:
    def test_cli_renders(self, transmit_csv, tmp_path):
        image = tmp_path / "cli.png"
        code = main(
            ["transmission_curve", "--in", str(transmit_csv), "--out", str(image),
             "--dpi", "100"]
        )
        assert code == 0
        assert image.is_file()

    def test_unknown_kind_exits_2(self, transmit_csv, tmp_path):
        with pytest.raises(SystemExit) as err:
            main(["sideways_view", "--in", str(transmit_csv), "--out", str(tmp_path / "x.png")])
        assert err.value.code == 2

    def test_missing_input_exits_1(self, tmp_path, capsys):
        code = main(
            ["transmission_curve", "--in", str(tmp_path / "absent.csv"),
             "--out", str(tmp_path / "x.png")]
        )
        assert code == 1
        assert "not found" in capsys.readouterr().err


class TestValidation:
    def test_schema_mismatch_rejected(self, grid_csv, tmp_path):
        job = FigureJob(grid_csv, "transmission_curve", tmp_path / "x.png")
        with pytest.raises(FigureInputError, match="schema"):
            render(job)

    def test_unknown_kind_rejected(self, transmit_csv, tmp_path):
        with pytest.raises(FigureInputError):
            FigureJob(transmit_csv, "pie_chart", tmp_path / "x.png")

    def test_incomplete_grid_rejected(self, grid_csv, tmp_path):
        truncated = tmp_path / "truncated.csv"
        lines = grid_csv.read_text().splitlines()
        truncated.write_text("\n".join(lines[:-3]) + "\n")
        job = FigureJob(truncated, "wigner_surface", tmp_path / "x.png")
        with pytest.raises(FigureInputError, match="lattice|order"):
            render(job)

    def test_mirror_violation_fails_loudly(self, tmp_path, capsys):
        bad = tmp_path / "bad.csv"
        rows = ["epsilon,T,R"]
        for eps in (-1.0, -0.5, 0.0, 0.5, 1.0):
            t = 0.5 * (1.0 + eps / 2.0)
            r = 1.0 - t + (1e-3 if eps == 0.5 else 0.0)  # break the mirror
            rows.append(f"{eps},{t},{r}")
        bad.write_text("\n".join(rows) + "\n")
        job = FigureJob(bad, "coefficient_panels", tmp_path / "x.png")
        with pytest.raises(MirrorAssertionError):
            render(job)
        code = main(["coefficient_panels", "--in", str(bad), "--out", str(tmp_path / "y.png")])
        assert code == 1
        assert "R(eps) - T(-eps)" in capsys.readouterr().err

    def test_asymmetric_grid_rejected(self, tmp_path):
        bad = tmp_path / "asym.csv"
        bad.write_text("epsilon,T,R\n0.0,0.5,0.5\n1.0,0.9,0.1\n")
        job = FigureJob(bad, "coefficient_panels", tmp_path / "x.png")
        with pytest.raises(FigureInputError, match="symmetric"):
            render(job)
