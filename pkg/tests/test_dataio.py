import numpy as np
import pandas as pd
import pytest

from epimeld import dataio
from epimeld.core import Covariates, Geography, SurveillancePanel


@pytest.fixture
def geo():
    adj = np.zeros((3, 3))
    adj[0, 1] = adj[1, 0] = 1
    adj[1, 2] = adj[2, 1] = 1
    return Geography(("a", "b", "c"), {"a": "R1", "b": "R1", "c": "R2"},
                     {"a": 1000, "b": 2000, "c": 1500}, adj)


def test_geography_roundtrip(tmp_path, geo):
    dataio.write_geography(geo, tmp_path)
    back = dataio.load_geography(tmp_path)
    assert back.ltla_ids == geo.ltla_ids
    assert back.population == geo.population
    np.testing.assert_array_equal(back.adjacency, geo.adjacency)


def test_panel_roundtrip(tmp_path, geo):
    panel = SurveillancePanel(
        randomized={("R1", 1): (5, 500), ("R1", 2): (7, 400)},
        targeted={("a", 1): (3, 30), ("b", 2): (4, 40)},
    )
    dataio.write_panel(panel, tmp_path)
    back = dataio.load_panel(tmp_path, geography=geo)
    assert back.randomized == panel.randomized
    assert back.targeted == panel.targeted


def test_covariates_roundtrip(tmp_path, geo):
    cov = Covariates(bame={"a": 0.1, "b": 0.2, "c": 0.3},
                     imd={"a": 1.0, "b": 2.0, "c": 3.0})
    dataio.write_covariates(cov, geo.ltla_ids, tmp_path)
    back = dataio.load_covariates(tmp_path, geography=geo)
    assert back.bame == cov.bame and back.imd == cov.imd


def test_flux_roundtrip_and_row_sums(tmp_path, geo):
    F = np.array([[0.9, 0.1, 0.0], [0.05, 0.9, 0.05], [0.0, 0.1, 0.9]])
    path = tmp_path / "flux.csv"
    dataio.write_flux(F, geo.ltla_ids, path)
    back = dataio.load_flux(path, geo.ltla_ids)
    np.testing.assert_allclose(back, F, atol=1e-12)
    bad = F.copy()
    bad[0, 0] = 0.5
    dataio.write_flux(bad, geo.ltla_ids, path)
    with pytest.raises(dataio.SchemaError, match="summing"):
        dataio.load_flux(path, geo.ltla_ids)


def test_missing_column_reported(tmp_path):
    pd.DataFrame({"region": ["R1"], "week": [1], "positives": [1]}).to_csv(
        tmp_path / "randomized.csv", index=False)
    with pytest.raises(dataio.SchemaError, match="total"):
        dataio.read_table(tmp_path / "randomized.csv")


def test_non_integer_counts_rejected(tmp_path):
    pd.DataFrame({"region": ["R1"], "week": [1], "positives": [1.5],
                  "total": [10]}).to_csv(tmp_path / "randomized.csv", index=False)
    with pytest.raises(dataio.SchemaError, match="non-integer"):
        dataio.read_table(tmp_path / "randomized.csv")


def test_positives_above_total_rejected(tmp_path, geo):
    dataio.write_geography(geo, tmp_path)
    pd.DataFrame({"region": ["R1"], "week": [1], "positives": [11],
                  "total": [10]}).to_csv(tmp_path / "randomized.csv", index=False)
    pd.DataFrame({"ltla": ["a"], "week": [1], "positives": [0],
                  "total": [1]}).to_csv(tmp_path / "targeted.csv", index=False)
    with pytest.raises(dataio.SchemaError, match="positives > total"):
        dataio.load_panel(tmp_path)


def test_unknown_ltla_in_adjacency(tmp_path, geo):
    dataio.write_geography(geo, tmp_path)
    pd.DataFrame({"ltla_a": ["a"], "ltla_b": ["zz"]}).to_csv(
        tmp_path / "adjacency.csv", index=False)
    with pytest.raises(dataio.SchemaError, match="unknown LTLA"):
        dataio.load_geography(tmp_path)


def test_interface_schema_rejects_bad_sd(tmp_path):
    p = tmp_path / "interface.csv"
    pd.DataFrame({"ltla": ["a"], "week": [1], "logit_mean": [-2.0],
                  "logit_sd": [0.0]}).to_csv(p, index=False)
    with pytest.raises(dataio.SchemaError, match="logit_sd"):
        dataio.load_interface(p)


def test_write_is_deterministic(tmp_path, geo):
    df = pd.DataFrame({"ltla": ["a", "b"], "week": [1, 1],
                       "logit_mean": [-2.123456789, -3.0],
                       "logit_sd": [0.1, 0.2]})
    p1, p2 = tmp_path / "i1" / "interface.csv", tmp_path / "i2" / "interface.csv"
    dataio.write_table(df, p1, name="interface.csv")
    dataio.write_table(df.copy(), p2, name="interface.csv")
    assert p1.read_bytes() == p2.read_bytes()
