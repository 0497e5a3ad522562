import json
import math

import numpy as np
import pytest

from stokes_squeeze.cli import SWEEP_FIELDS, main, sweep_samples

SQRT3 = math.sqrt(3.0)


def _rows(csv_text):
    lines = csv_text.strip().split("\n")
    header = lines[0].split(",")
    return header, [dict(zip(header, line.split(","))) for line in lines[1:]]


class TestSweep:
    def test_csv_schema_and_landmarks(self, tmp_path):
        out = tmp_path / "sweep.csv"
        assert main(["sweep", "--t-min", "0", "--t-max", "1.8", "--steps", "181",
                     "--output", str(out)]) == 0
        header, rows = _rows(out.read_text())
        assert header == list(SWEEP_FIELDS)

        unit = [r for r in rows if r["T"] == "1"]
        assert len(unit) == 1
        assert float(unit[0]["xi2"]) == pytest.approx(1 / 3, abs=1e-10)
        assert unit[0]["xi2_db"] == "-4.7712125472"
        assert float(unit[0]["chi2"]) == pytest.approx(3 / 7, abs=1e-10)
        assert float(unit[0]["vpp_success_probability"]) == pytest.approx(1.0)

        # the 12-significant-digit rendering reparses ~1e-12 away from sqrt(3)
        noon = [r for r in rows if abs(float(r["T"]) - SQRT3) < 1e-11]
        assert len(noon) == 1
        assert float(noon[0]["chi2"]) == pytest.approx(1 / 3, abs=1e-10)
        assert noon[0]["zeta2"] == ""  # unbounded renders as an empty field
        assert noon[0]["zeta2_unbounded"] == "true"

    def test_deterministic_output(self, tmp_path):
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        argv = ["sweep", "--steps", "50", "--output"]
        assert main(argv + [str(first)]) == 0
        assert main(argv + [str(second)]) == 0
        assert first.read_bytes() == second.read_bytes()

    def test_threaded_run_matches_serial(self, tmp_path, monkeypatch):
        serial, threaded = tmp_path / "serial.csv", tmp_path / "threaded.csv"
        assert main(["sweep", "--steps", "40", "--output", str(serial)]) == 0
        monkeypatch.setenv("STOKES_SQUEEZE_THREADS", "4")
        assert main(["sweep", "--steps", "40", "--output", str(threaded)]) == 0
        assert serial.read_bytes() == threaded.read_bytes()

    def test_bad_thread_env_rejected(self, tmp_path, monkeypatch):
        monkeypatch.setenv("STOKES_SQUEEZE_THREADS", "zero")
        assert main(["sweep", "--steps", "5", "--output", str(tmp_path / "x.csv")]) == 1

    def test_json_schema(self, tmp_path):
        out = tmp_path / "sweep.json"
        assert main(["sweep", "--steps", "10", "--format", "json",
                     "--output", str(out)]) == 0
        payload = json.loads(out.read_text())
        assert payload["meta"]["command"] == "sweep"
        assert payload["meta"]["spin"] == 1.5
        assert payload["meta"]["dimension"] == 4
        assert payload["meta"]["parameters"]["steps"] == 10
        assert len(payload["records"]) >= 10
        record = payload["records"][0]
        assert list(record.keys()) == list(SWEEP_FIELDS)
        noon = [r for r in payload["records"] if abs(r["T"] - SQRT3) < 1e-12]
        assert noon and noon[0]["zeta2"] is None and noon[0]["zeta2_unbounded"]

    def test_invalid_ranges_rejected(self, tmp_path, capsys):
        out = str(tmp_path / "x.csv")
        assert main(["sweep", "--t-min", "0", "--t-max", "0", "--output", out]) == 1
        assert "error:" in capsys.readouterr().err
        assert main(["sweep", "--t-min", "-1", "--t-max", "1", "--output", out]) == 1
        assert main(["sweep", "--steps", "1", "--output", out]) == 1

    def test_unwritable_path_rejected(self, tmp_path):
        missing = tmp_path / "no" / "such" / "dir" / "out.csv"
        assert main(["sweep", "--steps", "5", "--output", str(missing)]) == 1

    def test_sample_builder(self):
        samples = sweep_samples(0.0, 1.8, 10)
        assert 1.0 in samples and SQRT3 in samples
        assert samples == sorted(samples)
        assert samples[0] == 0.0 and samples[-1] == 1.8
        narrow = sweep_samples(0.0, 0.5, 5)
        assert 1.0 not in narrow and len(narrow) == 5


class TestState:
    def test_noon_point_amplitudes(self, capsys):
        assert main(["state", "--T", repr(SQRT3)]) == 0
        text = capsys.readouterr().out
        assert "|3,0>_HV" in text and "|0,3>_HV" in text
        c2 = float(text.split("c2 = ")[1].split("\n")[0])
        c3 = float(text.split("c3 = ")[1].split("\n")[0])
        assert abs(c2) < 1e-15
        assert c3 == pytest.approx(1 / np.sqrt(2), abs=1e-12)
        assert "zeta2      = unbounded" in text

    def test_coherent_point_report(self, capsys):
        assert main(["state", "--T", "0"]) == 0
        text = capsys.readouterr().out
        for name in ("xi2", "zeta2", "chi2"):
            value = float(text.split(f"{name}")[1].split("=")[1].split()[0])
            assert value == pytest.approx(1.0, abs=1e-10)

    def test_equal_population_point(self, capsys):
        t_equal = 3 ** 0.25 * (2 - SQRT3) ** 0.5
        assert main(["state", "--T", repr(t_equal)]) == 0
        text = capsys.readouterr().out
        c2 = float(text.split("c2 = ")[1].split("\n")[0])
        c3 = float(text.split("c3 = ")[1].split("\n")[0])
        assert c2 == pytest.approx(0.5, abs=1e-6)
        assert c3 == pytest.approx(0.5, abs=1e-6)

    def test_json_format(self, capsys):
        assert main(["state", "--T", "1", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["report"]["xi2"] == pytest.approx(1 / 3, abs=1e-12)
        assert len(payload["amplitudes"]) == 4
        assert payload["amplitudes"][0]["label"] == "|3,0>_HV"

    def test_negative_ratio_rejected(self, capsys):
        assert main(["state", "--T", "-2"]) == 1
        assert "error:" in capsys.readouterr().err


class TestNoon:
    @pytest.mark.parametrize("num, chi2", [(3, 1 / 3), (5, 0.2), (1, 1.0)])
    def test_heisenberg_values(self, capsys, num, chi2):
        assert main(["noon", "--N", str(num), "--noon-phase", repr(-np.pi / 2)]) == 0
        text = capsys.readouterr().out
        value = float(text.split("chi2")[1].split("=")[1].split()[0])
        assert value == pytest.approx(chi2, abs=1e-10)

    def test_metrics_block(self, capsys):
        assert main(["noon", "--N", "3", "--noon-phase", repr(-np.pi / 2),
                     "--format", "json"]) == 0
        report = json.loads(capsys.readouterr().out)["report"]
        assert report["v_plus"] == pytest.approx(2.25, abs=1e-10)
        assert report["v_minus"] == pytest.approx(0.75, abs=1e-10)
        assert report["xi2"] == pytest.approx(1.0, abs=1e-10)
        assert report["zeta2"] is None and report["zeta2_unbounded"]
        assert report["qfi"] == pytest.approx(9.0, abs=1e-10)

    def test_zero_photons_rejected(self, capsys):
        assert main(["noon", "--N", "0"]) == 1
        assert "error:" in capsys.readouterr().err


class TestHusimi:
    def test_pgm_threefold_symmetry(self, tmp_path):
        out = tmp_path / "noon.pgm"
        assert main(["husimi", "--T", repr(SQRT3), "--n-theta", "61",
                     "--n-phi", "120", "--output", str(out), "--format", "pgm"]) == 0
        blob = out.read_bytes()
        header, rest = blob.split(b"\n", 1)
        assert header == b"P5"
        dims, rest = rest.split(b"\n", 1)
        assert dims == b"120 61"
        maxval, pixels = rest.split(b"\n", 1)
        assert maxval == b"255"
        image = np.frombuffer(pixels, dtype=np.uint8).reshape(61, 120)
        np.testing.assert_array_equal(image, np.roll(image, 40, axis=1))
        assert image.max() == 255

    def test_csv_argmax_at_equator(self, tmp_path):
        out = tmp_path / "q.csv"
        assert main(["husimi", "--T", "0", "--n-theta", "91", "--n-phi", "120",
                     "--output", str(out)]) == 0
        header, rows = _rows(out.read_text())
        assert header == ["theta", "phi", "p", "Q"]
        assert len(rows) == 91 * 120
        best = max(rows, key=lambda r: float(r["Q"]))
        assert float(best["theta"]) == pytest.approx(np.pi / 2, abs=1e-9)
        assert float(best["phi"]) == pytest.approx(np.pi / 2, abs=1e-9)
        assert float(best["p"]) == pytest.approx(0.0, abs=1e-12)

    def test_noon_selector(self, tmp_path):
        out = tmp_path / "noon.csv"
        assert main(["husimi", "--N", "3", "--noon-phase", repr(-np.pi / 2),
                     "--n-theta", "21", "--n-phi", "24", "--output", str(out)]) == 0
        header, rows = _rows(out.read_text())
        best = max(rows, key=lambda r: float(r["Q"]))
        assert abs(float(best["p"])) == pytest.approx(1.0, abs=1e-12)

    def test_selector_validation(self, tmp_path, capsys):
        out = str(tmp_path / "x.csv")
        assert main(["husimi", "--output", out]) == 1
        assert main(["husimi", "--T", "1", "--N", "3", "--output", out]) == 1

    def test_tiny_grid_rejected(self, tmp_path):
        assert main(["husimi", "--T", "1", "--n-theta", "1",
                     "--output", str(tmp_path / "x.csv")]) == 1

    def test_deterministic_pgm(self, tmp_path):
        argv = ["husimi", "--T", "1", "--n-theta", "31", "--n-phi", "36",
                "--format", "pgm", "--output"]
        a, b = tmp_path / "a.pgm", tmp_path / "b.pgm"
        assert main(argv + [str(a)]) == 0
        assert main(argv + [str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()


class TestVerify:
    def test_fresh_build_passes(self, capsys):
        assert main(["verify"]) == 0
        text = capsys.readouterr().out
        assert "FAIL" not in text
        assert text.strip().endswith("checks passed")

    def test_output_is_deterministic(self, capsys):
        main(["verify"])
        first = capsys.readouterr().out
        main(["verify"])
        second = capsys.readouterr().out
        assert first == second

    def test_perturbed_ladder_detected(self, capsys):
        assert main(["verify", "--perturb-ladder", "1e-6"]) == 1
        text = capsys.readouterr().out
        assert "FAIL  su2-commutators" in text
