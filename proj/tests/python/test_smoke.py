import json
import math
import os
import subprocess

import pytest

import srs_whitham as sw


def test_constants():
    c = sw.constants(-0.5, 0.5)
    assert abs(c.xi0 - 6.69721619783448692) < 1e-12
    assert abs(abs(c.E) - 1.0) < 1e-15
    assert c.xi_disp == pytest.approx(1.0)


def test_regions_and_roots():
    c = sw.constants()
    assert sw.region(0.5, c) == "dispersive"
    assert sw.region(3.0, c) == "elliptic"
    assert sw.region(10.0, c) == "plane"
    lm, lmid, lp = sw.genus0(10.0, c)
    assert lm == pytest.approx(-6.03797515891135139, rel=1e-13)
    assert lp == pytest.approx(7.69129758340757211, rel=1e-13)
    g = sw.genus1(3.0, c)
    assert max(abs(r) for r in g["residuals"]) < 1e-9
    with pytest.raises(sw.BorderError):
        sw.genus1(1.0, c)
    with pytest.raises(sw.SrsError):
        sw.constants(0.5, 0.5)


def test_frame():
    f = sw.elliptic_frame(3.0, sw.constants())
    assert f["tau"].imag == pytest.approx(0.65060493, abs=1e-7)
    assert f["B_g"] == pytest.approx(-0.16553007, abs=1e-7)


def test_positivity():
    a0, x0 = sw.alpha0_x0(0.25)
    assert a0 == pytest.approx(44.8527048005366215, rel=1e-13)
    assert sw.polynomial_P(1.0, 1.0, 0.3) == pytest.approx(16 * 0.7, abs=1e-12)
    assert sw.certify(0.5)["status"] == "proved"


def test_fields_and_integrator():
    ev = sw.FieldEvaluator(sw.constants())
    q, mu, nu = ev(100.0 / (4 * 100.0), 100.0)
    assert abs(q) == pytest.approx(math.sqrt(0.75), rel=1e-12)
    assert ev.region(100.0 / 36.0, 100.0) == "elliptic"
    r = sw.integrate(x_max=4.0, t_max=2.0)
    assert r["max_conservation"] < 1e-6
    assert len(r["q"]) == len(r["x"])


@pytest.mark.skipif("SRS_CLI" not in os.environ, reason="CLI path not provided")
def test_cli(tmp_path):
    cli = os.environ["SRS_CLI"]
    out = tmp_path / "run"
    rc = subprocess.run([cli, "--xi-steps", "3", "params-sweep", "--out", str(out)]).returncode
    assert rc == 0
    meta = json.loads((out / "run.json").read_text())
    assert meta["config"]["xi_steps"] == 3
    assert subprocess.run([cli, "certify", "--beta", "2"], capture_output=True).returncode == 2
