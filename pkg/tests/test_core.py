import numpy as np
import pytest

from epimeld.core import (
    Covariates,
    GaussianSummary,
    Geography,
    Grid1D,
    SurveillancePanel,
    TimeIndex,
    inverse_logit,
    logit,
    logsumexp,
)


def test_logit_inverse_roundtrip():
    p = np.array([1e-9, 0.01, 0.5, 0.99, 1 - 1e-9])
    np.testing.assert_allclose(inverse_logit(logit(p)), p, rtol=1e-9)


def test_logit_domain_errors():
    for bad in (0.0, 1.0, -0.2, 1.3, np.nan):
        with pytest.raises(ValueError):
            logit(bad)


def test_inverse_logit_extremes():
    assert inverse_logit(-1e6) == 0.0
    assert inverse_logit(1e6) == 1.0
    with pytest.raises(ValueError):
        inverse_logit(np.nan)


def test_logsumexp_matches_naive_and_handles_inf():
    xs = np.array([-3.0, 0.1, 2.2])
    assert np.isclose(logsumexp(xs), np.log(np.exp(xs).sum()))
    assert logsumexp(np.array([-np.inf, -np.inf])) == -np.inf
    ## no overflow for large inputs
    assert np.isclose(logsumexp(np.array([1000.0, 1000.0])), 1000.0 + np.log(2))
    with pytest.raises(ValueError):
        logsumexp(np.array([]))
    with pytest.raises(ValueError):
        logsumexp(np.array([0.0, np.inf]))


def _geo():
    adj = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=float)
    return Geography(
        ltla_ids=("a", "b", "c"),
        region_of={"a": "R1", "b": "R1", "c": "R2"},
        population={"a": 100, "b": 200, "c": 300},
        adjacency=adj,
    )


def test_geography_accessors():
    g = _geo()
    assert g.regions == ("R1", "R2")
    assert g.ltlas_in("R1") == ("a", "b")
    assert g.region_population("R1") == 300
    assert g.index("c") == 2
    assert g.n_components() == 1
    with pytest.raises(KeyError):
        g.index("zz")


def test_geography_rejects_bad_adjacency():
    adj = np.array([[0, 1], [0, 0]], dtype=float)  # asymmetric
    with pytest.raises(ValueError):
        Geography(("a", "b"), {"a": "R", "b": "R"}, {"a": 1, "b": 1}, adj)
    adj = np.array([[1, 0], [0, 0]], dtype=float)  # diagonal
    with pytest.raises(ValueError):
        Geography(("a", "b"), {"a": "R", "b": "R"}, {"a": 1, "b": 1}, adj)
    with pytest.raises(ValueError):
        Geography(("a", "b"), {"a": "R", "b": "R"}, {"a": 0, "b": 1},
                  np.zeros((2, 2)))


def test_timeindex_weekly():
    ti = TimeIndex.weekly(3)
    assert ti.n_weeks == 3 and ti.n_days == 21
    assert ti.week_of(8) == 2
    assert ti.days_in(1) == tuple(range(1, 8))
    assert ti.boundary_weeks == {}


def test_timeindex_boundary_weeks_allowed_interior_not():
    days = tuple(range(1, 17))  # 2 + 7 + 7
    d2w = {d: (1 if d <= 2 else (2 if d <= 9 else 3)) for d in days}
    ti = TimeIndex(weeks=(1, 2, 3), days=days, day_to_week=d2w)
    assert ti.boundary_weeks == {1: 2}
    bad = {d: (1 if d <= 2 else (2 if d <= 5 else 3)) for d in days}
    with pytest.raises(ValueError):
        TimeIndex(weeks=(1, 2, 3), days=days, day_to_week=bad)


def test_timeindex_rejects_nonmonotone():
    days = (1, 2, 3)
    with pytest.raises(ValueError):
        TimeIndex(weeks=(1, 2), days=days, day_to_week={1: 2, 2: 1, 3: 2})


def test_panel_counts_and_aggregation():
    g = _geo()
    panel = SurveillancePanel(
        randomized={("R1", 1): (5, 50)},
        targeted={("a", 1): (3, 30), ("b", 1): (4, 40), ("c", 1): (1, 10)},
    )
    assert panel.survey_weeks("R1") == {1}
    assert panel.region_targeted(g, "R1", 1) == (7, 70)
    assert panel.region_targeted(g, "R2", 2) is None
    panel.validate_against(g)
    with pytest.raises(ValueError):
        SurveillancePanel(randomized={("R1", 1): (5, 4)}, targeted={})
    bad = SurveillancePanel(randomized={("R1", 1): (5, 5000)}, targeted={})
    with pytest.raises(ValueError):
        bad.validate_against(g)


def test_covariates_standardize():
    cov = Covariates(bame={"a": 0.1, "b": 0.3, "c": 0.2},
                     imd={"a": 10.0, "b": 30.0, "c": 20.0})
    assert not cov.bame_standardized
    z = cov.standardized(("a", "b", "c"))
    assert z.bame_standardized and z.imd_standardized
    vals = np.array([z.imd[i] for i in ("a", "b", "c")])
    assert abs(vals.mean()) < 1e-12 and abs(vals.std() - 1.0) < 1e-12
    with pytest.raises(ValueError):
        Covariates(bame={"a": 1.4}, imd={"a": 0.0})


def test_gaussian_summary_validation():
    GaussianSummary(0.0, 1.0)
    for mean, sd in ((np.nan, 1.0), (0.0, 0.0), (0.0, -1.0), (0.0, np.inf)):
        with pytest.raises(ValueError):
            GaussianSummary(mean, sd)


def test_grid1d_moments_and_quantiles():
    ## two-point distribution: mass 0.25 at 0, 0.75 at 4
    g = Grid1D(np.array([0.0, 4.0]), np.log(np.array([0.25, 0.75])))
    assert np.isclose(g.mean(), 3.0)
    assert np.isclose(g.var(), 0.25 * 9 + 0.75 * 1)
    assert g.quantile(0.2) == 0.0
    assert g.quantile(0.5) == 4.0
    assert g.quantile(1.0) == 4.0
    with pytest.raises(ValueError):
        Grid1D(np.array([1.0, 1.0]), np.zeros(2))  # non-increasing support
    with pytest.raises(ValueError):
        Grid1D(np.array([0.0, 1.0]), np.array([-np.inf, -np.inf]))  # no mass
