import numpy as np
import pytest

from chernatom.cli import _load_config_file, main


def _read_csv(path):
    header = path.read_text().splitlines()[0]
    assert header.startswith("# ")
    cols = [c.strip() for c in header[2:].split(",")]
    data = np.loadtxt(path, delimiter=",", comments="#", ndmin=2)
    return cols, data


def test_shift_nondispersive(tmp_path):
    out = tmp_path / "shift.csv"
    rc = main(
        [
            "shift", "--nondispersive", "--chern", "1",
            "--polarization", "circ+",
            "--eta-min", "1.0", "--eta-max", "2.0", "--eta-step", "0.5",
            "--reference-nondispersive",
            "--out", str(out),
        ]
    )
    assert rc == 0
    cols, data = _read_csv(out)
    assert cols == ["eta", "shift_res", "shift_res_nondispersive"]
    assert data.shape == (3, 3)
    np.testing.assert_allclose(data[:, 0], [1.0, 1.5, 2.0])
    # quadrature column must agree with the closed-form reference column
    np.testing.assert_allclose(data[:, 1], data[:, 2], rtol=1e-8)
    meta = (tmp_path / "shift.csv.meta").read_text()
    assert "subcommand=shift" in meta
    assert "chern=1" in meta


def test_shift_with_nonresonant_columns(tmp_path):
    out = tmp_path / "s.csv"
    rc = main(
        [
            "shift", "--nondispersive", "--chern", "-1",
            "--polarization", "perp",
            "--eta-min", "1.0", "--eta-max", "1.0", "--eta-step", "1.0",
            "--nonresonant", "--out", str(out),
        ]
    )
    assert rc == 0
    cols, data = _read_csv(out)
    assert cols == ["eta", "shift_res", "shift_nres", "shift_total"]
    assert data[0, 3] == pytest.approx(data[0, 1] + data[0, 2])


def test_shift_multiple_frequencies(tmp_path):
    out = tmp_path / "multi.csv"
    rc = main(
        [
            "shift", "--nondispersive", "--chern", "1",
            "--omega10-over-t", "1.0,2.0",
            "--eta-min", "1.0", "--eta-max", "1.0", "--eta-step", "1.0",
            "--out", str(out),
        ]
    )
    assert rc == 0
    assert (tmp_path / "multi_w1.csv").exists()
    assert (tmp_path / "multi_w2.csv").exists()


def test_conductivity_output(tmp_path):
    out = tmp_path / "sigma.csv"
    rc = main(
        [
            "conductivity", "--u-over-t", "-1", "--bz-grid", "64",
            "--omega-min", "1.0", "--omega-max", "2.0", "--omega-step", "0.5",
            "--out", str(out),
        ]
    )
    assert rc == 0
    header = out.read_text().splitlines()[0]
    assert header == "# omega_over_t, re_sxx, im_sxx, re_sxy, im_sxy"
    _, data = _read_csv(out)
    assert data.shape == (3, 5)


def test_reflection_output(tmp_path):
    out = tmp_path / "refl.csv"
    rc = main(
        [
            "reflection", "--nondispersive", "--chern", "1",
            "--k-par-min", "0", "--k-par-max", "2", "--k-par-step", "0.5",
            "--out", str(out),
        ]
    )
    assert rc == 0
    cols, data = _read_csv(out)
    assert cols[0] == "k_par"
    assert data.shape == (5, 7)


def test_green_output(tmp_path):
    out = tmp_path / "green.csv"
    rc = main(
        [
            "green", "--nondispersive", "--chern", "1",
            "--eta-min", "1.0", "--eta-max", "2.0", "--eta-step", "1.0",
            "--out", str(out),
        ]
    )
    assert rc == 0
    cols, data = _read_csv(out)
    assert cols == ["eta", "re_gxx", "im_gxx", "re_gxy", "im_gxy", "re_gzz", "im_gzz"]
    assert data.shape == (2, 7)


def test_integrand_output(tmp_path):
    out = tmp_path / "prof.csv"
    rc = main(
        [
            "integrand", "--nondispersive", "--chern", "1", "--eta", "1.0",
            "--k-par-min", "0", "--k-par-max", "2", "--k-par-step", "0.25",
            "--out", str(out),
        ]
    )
    assert rc == 0
    cols, data = _read_csv(out)
    assert cols == ["k_par", "integrand"]
    assert np.all(np.isfinite(data))


def test_config_file_defaults_and_precedence(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(
        "# defaults for quick runs\n"
        "eta-min = 1.0\n"
        "eta-max = 3.0\n"
        "eta_step = 1.0\n"
        "nondispersive = true\n"
        "chern = 1\n"
    )
    out = tmp_path / "a.csv"
    rc = main(["shift", "--config", str(cfg), "--eta-max", "2.0", "--out", str(out)])
    assert rc == 0
    _, data = _read_csv(out)
    # eta-max from the command line wins over the config file
    np.testing.assert_allclose(data[:, 0], [1.0, 2.0])


def test_config_file_unknown_key(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("etamin = 1.0\n")
    with pytest.raises(ValueError, match="unknown config key"):
        _load_config_file(str(cfg))


def test_bad_grid_exits_with_usage_error(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(
            [
                "shift", "--nondispersive", "--chern", "1",
                "--eta-step", "0", "--out", str(tmp_path / "x.csv"),
            ]
        )
    assert exc.value.code == 2


def test_determinism(tmp_path):
    outs = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for out in outs:
        rc = main(
            [
                "green", "--nondispersive", "--chern", "-1",
                "--eta-min", "0.5", "--eta-max", "1.5", "--eta-step", "0.5",
                "--out", str(out),
            ]
        )
        assert rc == 0
    assert outs[0].read_bytes() == outs[1].read_bytes()
