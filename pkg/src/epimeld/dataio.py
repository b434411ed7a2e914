"""Delimited-file schemas for surveillance inputs and model outputs.

Every loader validates column names, dtypes and row-level constraints and
raises SchemaError with row diagnostics on malformed input. Writers fix the
column order so reruns are byte-identical.
"""
from __future__ import annotations

from pathlib import Path

import numpy as np
import pandas as pd

from .core import Covariates, Geography, SurveillancePanel

__all__ = [
    "SchemaError",
    "read_table",
    "write_table",
    "load_geography",
    "load_panel",
    "load_covariates",
    "load_flux",
    "load_interface",
    "load_daily_counts",
    "write_geography",
    "write_panel",
    "write_covariates",
    "write_flux",
]

#: column -> pandas dtype kind expected after coercion
SCHEMAS = {
    "randomized.csv": {"region": "str", "week": "int", "positives": "int", "total": "int"},
    "targeted.csv": {"ltla": "str", "week": "int", "positives": "int", "total": "int"},
    "geography.csv": {"ltla": "str", "region": "str", "population": "int"},
    "adjacency.csv": {"ltla_a": "str", "ltla_b": "str"},
    "covariates.csv": {"ltla": "str", "bame": "float", "imd": "float"},
    "flux.csv": {"from_ltla": "str", "to_ltla": "str", "probability": "float"},
    "interface.csv": {"ltla": "str", "week": "int", "logit_mean": "float", "logit_sd": "float"},
    "exact_interface.csv": {
        "ltla": "str", "week": "int", "positives": "int", "total": "int",
        "population": "int", "delta_mean": "float", "delta_sd": "float",
    },
    "daily_counts.csv": {"ltla": "str", "day": "int", "positives": "int"},
    "history.csv": {"ltla": "str", "day": "int", "infections": "float"},
}


class SchemaError(Exception):
    """Malformed input table (missing columns, bad dtypes, invalid rows)."""


def _coerce(df, name, schema):
    missing = [c for c in schema if c not in df.columns]
    if missing:
        raise SchemaError(f"{name}: missing columns {missing}; found {list(df.columns)}")
    extra = [c for c in df.columns if c not in schema]
    if extra:
        raise SchemaError(f"{name}: unexpected columns {extra}")
    out = {}
    for col, kind in schema.items():
        s = df[col]
        if s.isna().any():
            rows = list(df.index[s.isna()][:5])
            raise SchemaError(f"{name}: missing values in {col!r} at rows {rows}")
        try:
            if kind == "int":
                f = s.astype(float)
                if np.any(f != np.floor(f)):
                    rows = list(df.index[f != np.floor(f)][:5])
                    raise SchemaError(f"{name}: non-integer {col!r} at rows {rows}")
                out[col] = f.astype(np.int64)
            elif kind == "float":
                out[col] = s.astype(float)
            else:
                out[col] = s.astype(str)
        except (ValueError, TypeError) as e:
            raise SchemaError(f"{name}: column {col!r} not {kind}: {e}") from None
    return pd.DataFrame(out)[list(schema)]


def read_table(path, name=None):
    """Read and validate one of the known CSV schemas."""
    path = Path(path)
    name = name or path.name
    if name not in SCHEMAS:
        raise SchemaError(f"no schema registered for {name!r}")
    if not path.exists():
        raise SchemaError(f"{path}: file not found")
    try:
        df = pd.read_csv(path)
    except Exception as e:
        raise SchemaError(f"{path}: unreadable csv: {e}") from None
    return _coerce(df, name, SCHEMAS[name])


def write_table(df, path, name=None):
    path = Path(path)
    name = name or path.name
    if name in SCHEMAS:
        df = df[list(SCHEMAS[name])]
    path.parent.mkdir(parents=True, exist_ok=True)
    df.to_csv(path, index=False, lineterminator="\n", float_format="%.12g")
    return path


def load_geography(directory):
    """Build a Geography from geography.csv + adjacency.csv in `directory`."""
    directory = Path(directory)
    geo = read_table(directory / "geography.csv")
    if geo["ltla"].duplicated().any():
        dup = sorted(geo.loc[geo["ltla"].duplicated(), "ltla"])
        raise SchemaError(f"geography.csv: duplicate LTLAs {dup}")
    ids = tuple(geo["ltla"])
    region_of = dict(zip(geo["ltla"], geo["region"]))
    population = dict(zip(geo["ltla"], (int(x) for x in geo["population"])))
    adj_df = read_table(directory / "adjacency.csv")
    idx = {l: k for k, l in enumerate(ids)}
    adj = np.zeros((len(ids), len(ids)))
    for row, (a, b) in enumerate(zip(adj_df["ltla_a"], adj_df["ltla_b"])):
        if a not in idx or b not in idx:
            raise SchemaError(f"adjacency.csv row {row}: unknown LTLA {a!r} or {b!r}")
        if a == b:
            raise SchemaError(f"adjacency.csv row {row}: self-edge {a!r}")
        adj[idx[a], idx[b]] = adj[idx[b], idx[a]] = 1.0
    try:
        return Geography(ltla_ids=ids, region_of=region_of, population=population, adjacency=adj)
    except ValueError as e:
        raise SchemaError(f"geography: {e}") from None


def load_panel(directory, geography=None):
    directory = Path(directory)
    rnd = read_table(directory / "randomized.csv")
    tgt = read_table(directory / "targeted.csv")
    for nm, df, keys in (("randomized.csv", rnd, ["region", "week"]),
                         ("targeted.csv", tgt, ["ltla", "week"])):
        if df.duplicated(keys).any():
            raise SchemaError(f"{nm}: duplicate {keys} rows")
        bad = df.index[df["positives"] > df["total"]]
        if len(bad):
            raise SchemaError(f"{nm}: positives > total at rows {list(bad[:5])}")
    panel = SurveillancePanel(
        randomized={(r, int(w)): (int(p), int(t))
                    for r, w, p, t in rnd.itertuples(index=False)},
        targeted={(l, int(w)): (int(p), int(t))
                  for l, w, p, t in tgt.itertuples(index=False)},
    )
    if geography is not None:
        try:
            panel.validate_against(geography)
        except ValueError as e:
            raise SchemaError(str(e)) from None
    return panel


def load_covariates(directory, geography=None):
    df = read_table(Path(directory) / "covariates.csv")
    if df["ltla"].duplicated().any():
        raise SchemaError("covariates.csv: duplicate LTLA rows")
    cov = Covariates(bame=dict(zip(df["ltla"], df["bame"])),
                     imd=dict(zip(df["ltla"], df["imd"])))
    if geography is not None:
        missing = [i for i in geography.ltla_ids if i not in cov.bame]
        if missing:
            raise SchemaError(f"covariates.csv: LTLAs without covariates {missing}")
    return cov


def load_flux(path, ltla_ids, tol=1e-9):
    """Read flux.csv into a dense row-stochastic matrix ordered by ltla_ids.

    Missing (from, to) pairs are zero. Probability of staying put must be
    included explicitly; every row must sum to 1 within `tol`.
    """
    df = read_table(path, name="flux.csv")
    idx = {l: k for k, l in enumerate(ltla_ids)}
    F = np.zeros((len(ltla_ids), len(ltla_ids)))
    for row, (a, b, p) in enumerate(zip(df["from_ltla"], df["to_ltla"], df["probability"])):
        if a not in idx or b not in idx:
            raise SchemaError(f"flux.csv row {row}: unknown LTLA {a!r} or {b!r}")
        if not 0.0 <= p <= 1.0:
            raise SchemaError(f"flux.csv row {row}: probability {p} outside [0, 1]")
        if F[idx[a], idx[b]] != 0.0:
            raise SchemaError(f"flux.csv row {row}: duplicate pair ({a!r}, {b!r})")
        F[idx[a], idx[b]] = p
    sums = F.sum(axis=1)
    bad = [ltla_ids[k] for k in np.nonzero(np.abs(sums - 1.0) > tol)[0]]
    if bad:
        raise SchemaError(f"flux.csv: rows not summing to 1: {bad}")
    return F


def load_interface(path):
    """interface.csv rows; sd must be positive."""
    df = read_table(path, name="interface.csv")
    if (df["logit_sd"] <= 0).any():
        rows = list(df.index[df["logit_sd"] <= 0][:5])
        raise SchemaError(f"interface.csv: non-positive logit_sd at rows {rows}")
    return df


def load_daily_counts(path):
    df = read_table(path, name="daily_counts.csv")
    if (df["positives"] < 0).any():
        raise SchemaError("daily_counts.csv: negative counts")
    return df


def write_geography(geography, directory):
    directory = Path(directory)
    rows = [(i, geography.region_of[i], geography.population[i]) for i in geography.ltla_ids]
    write_table(pd.DataFrame(rows, columns=["ltla", "region", "population"]),
                directory / "geography.csv")
    a, b = np.nonzero(np.triu(geography.adjacency))
    edges = [(geography.ltla_ids[i], geography.ltla_ids[j]) for i, j in zip(a, b)]
    write_table(pd.DataFrame(edges, columns=["ltla_a", "ltla_b"]),
                directory / "adjacency.csv")


def write_panel(panel, directory):
    directory = Path(directory)
    rnd = sorted((r, w, p, t) for (r, w), (p, t) in panel.randomized.items())
    tgt = sorted((l, w, p, t) for (l, w), (p, t) in panel.targeted.items())
    write_table(pd.DataFrame(rnd, columns=["region", "week", "positives", "total"]),
                directory / "randomized.csv")
    write_table(pd.DataFrame(tgt, columns=["ltla", "week", "positives", "total"]),
                directory / "targeted.csv")


def write_covariates(cov, ltla_ids, directory):
    rows = [(i, cov.bame[i], cov.imd[i]) for i in ltla_ids]
    write_table(pd.DataFrame(rows, columns=["ltla", "bame", "imd"]),
                Path(directory) / "covariates.csv")


def write_flux(F, ltla_ids, path):
    rows = []
    for a, i in zip(ltla_ids, range(len(ltla_ids))):
        for b, j in zip(ltla_ids, range(len(ltla_ids))):
            if F[i, j] != 0.0:
                rows.append((a, b, F[i, j]))
    write_table(pd.DataFrame(rows, columns=["from_ltla", "to_ltla", "probability"]), path)
