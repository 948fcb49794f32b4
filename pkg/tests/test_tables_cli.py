import json

import numpy as np
import pytest

from critsqueeze.cli import main
from critsqueeze.errors import SchemaError
from critsqueeze.sweep import RunConfig, phase_diagram_table, run_sweep
from critsqueeze.tables import Column, ResultTable, read_table, write_table


def test_csv_golden_format(tmp_path):
    t = ResultTable([Column("delta"), Column("period_T", "1/g"), Column("region", None)],
                    [[0.1, 1 / 3, "normal"], [2, True, "superradiant"]])
    path = write_table(t, tmp_path / "t.csv")
    assert path.read_bytes() == (
        b"delta[1],period_T[1/g],region\n"
        b"0.1,0.3333333333333333,normal\n"
        b"2,1,superradiant\n"
    )
    meta = json.loads((tmp_path / "t.csv.json").read_text())
    assert meta["row_count"] == 2 and {"timestamp", "code_version"} <= meta.keys()
    assert meta["columns"][1] == {"name": "period_T", "unit": "1/g"}


def test_round_trip(tmp_path):
    vals = [0.1, 1e-300, 123456.789, -2.5e-17]
    t = ResultTable([Column("x"), Column("label", None)], [[v, f"r{i}"] for i, v in enumerate(vals)])
    write_table(t, tmp_path / "r.csv", sidecar=False)
    data, units = read_table(tmp_path / "r.csv", required=["x"])
    assert list(data["x"]) == vals
    assert data["label"] == ["r0", "r1", "r2", "r3"]
    assert units == {"x": "1", "label": None}
    assert not (tmp_path / "r.csv.json").exists()


@pytest.mark.parametrize("text,column", [
    ("delta[1],zeta_min[1]\n0.1,abc\n", "zeta_min"),
    ("delta[1]\n0.1\n", "zeta_min"),
    ("delta[1],zeta_min[1]\n0.1\n", "delta"),
])
def test_schema_errors_name_the_column(tmp_path, text, column):
    p = tmp_path / "bad.csv"
    p.write_text(text)
    with pytest.raises(SchemaError) as exc:
        read_table(p, required=["delta", "zeta_min"])
    assert exc.value.column == column


def test_row_width_checked():
    with pytest.raises(SchemaError):
        ResultTable([Column("a")], [[1.0, 2.0]]).to_csv()


def test_config_rejects_unknown_keys():
    with pytest.raises(ValueError):
        RunConfig.from_dict({"model": "oat", "bogus": 1})


def test_cli_sweep_and_fit(tmp_path, capsys):
    rc = main(["sweep", "--model", "oat", "--side", "ordered", "--delta-range", "1e-4", "1e-2", "7",
               "--outdir", str(tmp_path), "--workers", "1"])
    assert rc == 0
    csv = tmp_path / "oat_ordered_sweep.csv"
    assert csv.read_text().splitlines()[0] == "xi[1],delta[1],period_T[1/(2kJ)],zeta_min[1],t_min[1/(2kJ)]"
    rep = tmp_path / "fit.json"
    assert main(["fit", str(csv), "--column", "period_T", "--out", str(rep)]) == 0
    fit = json.loads(rep.read_text())[0]
    assert fit["exponent"] == pytest.approx(-0.5, abs=2e-3)
    assert "exponent" in capsys.readouterr().out


def test_cli_config_file_overridden_by_flags(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"model": "oat", "side": "disordered", "deltas": [0.3], "prefix": "cfg"}))
    assert main(["sweep", "--config", str(cfg), "--delta", "0.2", "--outdir", str(tmp_path)]) == 0
    data, _ = read_table(tmp_path / "cfg_sweep.csv")
    assert list(data["delta"]) == [0.2]
    assert data["xi"][0] > 1


@pytest.mark.parametrize("argv,code", [
    (["sweep", "--model", "oat", "--delta", "0"], 1),
    (["sweep", "--model", "oat", "--delta", "-0.1"], 2),
    (["sweep", "--model", "oat"], 2),
    (["sweep", "--model", "nonsense", "--delta", "0.1"], 2),
    (["timeseries", "--model", "oat"], 2),
    (["fit"], 2),
])
def test_cli_exit_codes(tmp_path, argv, code):
    assert main(argv + (["--outdir", str(tmp_path)] if argv[0] != "fit" else [])) == code


def test_cli_fit_bad_schema_exits_2(tmp_path, capsys):
    p = tmp_path / "bad.csv"
    p.write_text("xi[1],delta[1]\n0.9,0.1\n")
    assert main(["fit", str(p), "--column", "zeta_min"]) == 2
    assert "zeta_min" in capsys.readouterr().err


def test_cli_missing_config_exits_2(tmp_path):
    assert main(["sweep", "--config", str(tmp_path / "nope.json")]) == 2


def test_cli_timeseries_writes_one_file_per_delta(tmp_path):
    rc = main(["timeseries", "--model", "oat", "--side", "ordered", "--delta", "0.1", "0.2",
               "--points-per-period", "200", "--outdir", str(tmp_path)])
    assert rc == 0
    files = sorted(tmp_path.glob("*_ts_*.csv"))
    assert len(files) == 2
    data, _ = read_table(files[0], required=["t", "zeta", "phi_min"])
    assert data["zeta"][0] == pytest.approx(1.0)


def test_phase_diagram_labels(tmp_path):
    t = phase_diagram_table((0.5, 2.0), 5, [(1.0, 1.0), (0.5, 0.0), (2.0, 0.0)])
    region = t.column("region")
    assert region[:5] == ["boundary"] * 5
    assert region[5:] == ["critical", "superradiant", "normal"]
    w, e = np.array(t.column("omega")[:5]), np.array(t.column("epsilon")[:5])
    np.testing.assert_allclose(w * e, 1.0, rtol=1e-14)
    out = tmp_path / "pd.csv"
    assert main(["phase-diagram", "--count", "5", "--point", "1", "1", "--out", str(out)]) == 0
    assert out.read_text().splitlines()[-1].endswith(",critical")


def test_sweep_bytes_independent_of_width():
    cfg = RunConfig(model="oat", side="disordered", delta_range=[1e-3, 1e-1, 9])
    outs = {run_sweep(cfg, workers=w).to_csv() for w in (1, 4, 8)}
    assert len(outs) == 1


def test_photon_sweep_mirrors_spin_in_normal_phase():
    base = dict(model="dicke", side="normal", delta_range=[2e-3, 2e-2, 3], points_per_period=400)
    photon = run_sweep(RunConfig(Delta=0.9, observable="photon", **base), workers=1)
    spin = run_sweep(RunConfig(Delta=-0.9, observable="spin", **base), workers=1)
    np.testing.assert_allclose(photon.column("zeta_min"), spin.column("zeta_min"), rtol=1e-12)
