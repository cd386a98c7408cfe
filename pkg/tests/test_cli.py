##    _____  _____
##   |  __ \|  __ \    AUTHOR: Pedro Rivero
##   | |__) | |__) |   ---------------------------------
##   |  ___/|  _  /    DATE: October 4, 2021
##   | |    | | \ \    ---------------------------------
##   |_|    |_|  \_\   https://github.com/pedrorrivero
##

## Copyright 2021 Pedro Rivero
##
## Licensed under the Apache License, Version 2.0 (the "License");
## you may not use this file except in compliance with the License.
## You may obtain a copy of the License at
##
## http://www.apache.org/licenses/LICENSE-2.0
##
## Unless required by applicable law or agreed to in writing, software
## distributed under the License is distributed on an "AS IS" BASIS,
## WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
## See the License for the specific language governing permissions and
## limitations under the License.

import json

import pytest

from fracruin.cli import build_parser, main
from fracruin.solver import RuinSolution

CLASSICAL = {
    "premium_rate": 1.2,
    "interarrival": {"gammas": [{"shape": 1.0, "rate": 1.0}]},
    "claims": {"gammas": [{"shape": 1.0, "rate": 1.0}]},
}


@pytest.fixture
def model(tmp_path):
    path = tmp_path / "model.json"
    path.write_text(json.dumps(CLASSICAL))
    return str(path)


def read_rows(path):
    return [line.split(",") for line in path.read_text().splitlines()]


###############################################################################
## PARSER
###############################################################################
class TestParser:
    def test_defaults(self):
        args = build_parser().parse_args(["simulate", "--spec", "m.json"])
        assert args.paths == 100_000
        assert args.seed == 0
        assert args.max_claims == 10_000
        assert args.horizon is None

    def test_verbosity_exclusive(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["-v", "-q", "figure1a", "--out", "x"])

    def test_command_required(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args([])


###############################################################################
## SOLVE
###############################################################################
class TestSolve:
    def test_outputs(self, model, tmp_path):
        out = tmp_path / "out"
        assert main(["solve", "--spec", model, "--out", str(out)]) == 0
        rows = read_rows(out / "psi.csv")
        assert rows[0] == ["u", "psi"]
        assert len(rows) == 302
        assert float(rows[1][1]) == pytest.approx(1.0 / 1.2, abs=1e-12)
        solution = RuinSolution.from_json((out / "solution.json").read_text())
        assert solution.psi(0.0) == pytest.approx(1.0 / 1.2, abs=1e-12)
        assert "\r" not in (out / "psi.csv").read_text()

    def test_confirm_roots(self, model, tmp_path):
        out = tmp_path / "out"
        argv = ["solve", "--spec", model, "--out", str(out), "--confirm-roots"]
        assert main(argv) == 0

    def test_negative_rate(self, tmp_path, caplog):
        raw = json.loads(json.dumps(CLASSICAL))
        raw["claims"]["gammas"][0]["rate"] = -1.0
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(raw))
        argv = ["solve", "--spec", str(path), "--out", str(tmp_path / "o")]
        assert main(argv) == 2
        assert "claims.gammas[0].rate" in caplog.text

    @pytest.mark.parametrize("override", ["c", "mu=0.5", "c=abc", "c=1.0"])
    def test_bad_override(self, model, tmp_path, override):
        argv = [
            "solve",
            "--spec",
            model,
            "--out",
            str(tmp_path / "o"),
            "--override",
            override,
        ]
        assert main(argv) == 2

    def test_missing_model(self, tmp_path):
        argv = [
            "solve",
            "--spec",
            str(tmp_path / "absent.json"),
            "--out",
            str(tmp_path / "o"),
        ]
        assert main(argv) == 2


###############################################################################
## SIMULATE
###############################################################################
class TestSimulate:
    def test_reproducible(self, model, tmp_path):
        outputs = []
        for name in ("a.json", "b.json"):
            out = tmp_path / name
            argv = ["simulate", "--spec", model, "--paths", "2000"]
            assert main(argv + ["--u", "1", "--out", str(out)]) == 0
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]
        data = json.loads(outputs[0])
        assert data["paths"] == 2000
        assert data["seed"] == 0

    def test_prints(self, model, capsys):
        argv = ["simulate", "--spec", model, "--paths", "500"]
        assert main(argv + ["--analytic-level"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert 0.0 <= data["p_hat"] <= 1.0

    def test_time_horizon(self, model, tmp_path):
        out = tmp_path / "mc.json"
        argv = ["simulate", "--spec", model, "--paths", "200", "--u", "50"]
        assert main(argv + ["--horizon", "1", "--out", str(out)]) == 0
        assert json.loads(out.read_text())["lower_bound"]


###############################################################################
## U5 GRID
###############################################################################
class TestU5Grid:
    def test_missing_cells(self, model, tmp_path):
        out = tmp_path / "grid.csv"
        argv = ["u5-grid", "--spec", model, "--out", str(out)]
        assert main(argv + ["--grid", "r:0.5:1:2,lambda1:1:1:1"]) == 0
        rows = read_rows(out)
        assert rows[0] == ["lambda1\\r", "0.5", "1"]
        assert rows[1][:2] == ["1", ""]
        assert float(rows[1][2]) == pytest.approx(2.8261570, abs=1e-6)

    def test_bad_grid(self, model, tmp_path):
        argv = ["u5-grid", "--spec", model, "--out", str(tmp_path / "g")]
        assert main(argv + ["--grid", "r:0.5:1"]) == 2


###############################################################################
## VERIFICATION
###############################################################################
class TestVerify:
    def test_density(self, model, tmp_path):
        out = tmp_path / "density.csv"
        argv = ["verify-density", "--spec", model, "--out", str(out)]
        assert main(argv) == 0
        assert read_rows(out)[0] == ["x", "interarrival", "claims"]

    def test_renewal(self, model, tmp_path):
        out = tmp_path / "renewal.json"
        argv = ["verify-renewal", "--spec", model, "--u", "0,1"]
        assert main(argv + ["--out", str(out)]) == 0
        report = json.loads(out.read_text())
        assert report["passed"]
        assert report["tol"] == 1e-4

    def test_renewal_bad_capitals(self, model):
        argv = ["verify-renewal", "--spec", model, "--u", "0,x"]
        assert main(argv) == 2


###############################################################################
## FIGURES
###############################################################################
class TestFigures:
    def test_figure1a(self, tmp_path):
        out = tmp_path / "f1a.csv"
        argv = ["figure1a", "--out", str(out), "--u-max", "5"]
        assert main(argv + ["--u-steps", "10"]) == 0
        rows = read_rows(out)
        assert rows[0] == [
            "u",
            "psi_r=0.5",
            "psi_r=1",
            "psi_r=1.5",
            "psi_r=2",
            "psi_r=2.5",
        ]
        assert len(rows) == 12

    def test_figure2a(self, tmp_path):
        out = tmp_path / "f2a.csv"
        argv = ["figure2a", "--out", str(out), "--u-max", "5"]
        assert main(argv + ["--u-steps", "10"]) == 0
        rows = read_rows(out)
        assert rows[0][-1] == "psi_0"
        assert float(rows[1][-1]) == pytest.approx(0.5)
