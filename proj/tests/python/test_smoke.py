"""Smoke tests for the revival_lab python bindings."""

import math

import pytest

import revival_lab as rl


def test_rydberg_time_scales():
    ts = rl.time_scales(rl.SpectrumModel.rydberg(), 10.0)
    assert ts.t_cl == pytest.approx(2000.0 * math.pi, rel=1e-12)
    assert ts.t_rev == pytest.approx((4.0 / 3.0) * 1e4 * math.pi, rel=1e-12)
    assert ts.t_sr == pytest.approx(1e5 * math.pi, rel=1e-12)


def test_harmonic_scales_absent():
    ts = rl.time_scales(rl.SpectrumModel.harmonic(1.0), 5.0)
    assert ts.t_cl == pytest.approx(2.0 * math.pi, rel=1e-12)
    assert ts.t_rev is None
    assert ts.t_sr is None


def test_classification():
    assert rl.classify(rl.SpectrumModel.harmonic(1.0), 5.0) == rl.RevivalClass.TypeI_Periodic
    assert (
        rl.classify(rl.SpectrumModel.box1d(1.0, math.pi), 5.0)
        == rl.RevivalClass.TypeII_PerfectRevival
    )
    assert rl.classify(rl.SpectrumModel.rydberg(), 5.0) == rl.RevivalClass.TypeIII_General


def test_energy_floor_raises():
    with pytest.raises(ValueError):
        rl.SpectrumModel.rydberg().energy(0)


def test_autocorrelation_starts_at_one():
    coeffs = rl.gaussian_coefficients(rl.PacketSpec(10.0, 1.5, 1, 30))
    model = rl.SpectrumModel.box1d(1.0, math.pi)
    series = rl.autocorrelation(coeffs, model, rl.TimeGrid(0.0, 10.0, 64))
    assert abs(series.values[0] - 1.0) < 1e-12
    assert max(series.abs2()) <= 1.0 + 1e-12


def test_perfect_box_revival():
    model = rl.SpectrumModel.box1d(1.0, math.pi)
    coeffs = rl.gaussian_coefficients(rl.PacketSpec(10.0, 1.5, 1, 30))
    t_rev = rl.time_scales(model, 10.0).t_rev
    series = rl.autocorrelation(coeffs, model, rl.TimeGrid(0.0, t_rev, 2))
    assert abs(series.values[1]) >= 1.0 - 1e-10


def test_detect_and_label():
    model = rl.SpectrumModel.box1d(1.0, math.pi)
    coeffs = rl.gaussian_coefficients(rl.PacketSpec(10.0, 1.5, 1, 30))
    scales = rl.time_scales(model, 10.0)
    series = rl.autocorrelation(coeffs, model, rl.TimeGrid(0.0, 1.05 * scales.t_rev, 4096))
    events = rl.detect_revivals(series, 0.5, scales.t_cl / 2.0)
    labels = [rl.label_fraction(e.t, scales.t_rev, 10, 0.01) for e in events]
    assert any(lbl is not None and lbl.value == rl.Rational(1, 1) for lbl in labels)


def test_commensurate_and_tuning():
    assert rl.tune_box_ratio(rl.Rational(2, 1)) == pytest.approx(math.sqrt(2.0), rel=1e-15)
    ratio = rl.commensurate(4.0 * math.pi, 2.0 * math.pi, 10, 1e-9)
    assert ratio == rl.Rational(2, 1)
    assert rl.common_revival(4.0 * math.pi, 2.0 * math.pi, ratio) == pytest.approx(
        4.0 * math.pi, rel=1e-15
    )
    assert rl.commensurate(math.sqrt(2.0), 1.0, 10, 1e-6) is None


def test_scenario_roundtrip(tmp_path):
    document = """{
      "model": {"kind": "box1d", "mass": 1.0, "length": 3.141592653589793},
      "packet": {"n_bar": 10.0, "sigma": 1.5, "n_min": 1, "n_max": 30},
      "time": {"t_end": "1.05 t_rev", "samples": 256},
      "outputs": {"series": "series.csv", "events": "events.csv"}
    }"""
    scenario = rl.parse_scenario(document)
    scenario.series_path = tmp_path / "series.csv"
    scenario.events_path = tmp_path / "events.csv"
    report = rl.run_scenario(scenario)
    assert report.event_count >= 1
    assert (tmp_path / "series.csv").exists()
    text = (tmp_path / "series.csv").read_text()
    assert text.startswith("t,re_A,im_A,abs_A2\n")
    assert len(text.splitlines()) == 257


def test_scenario_validation_error():
    with pytest.raises(rl.ScenarioError):
        rl.parse_scenario('{"model": {"kind": "ZBox"}}')


def test_carpet_dimensions():
    coeffs = rl.gaussian_coefficients(rl.PacketSpec(6.0, 1.0, 1, 16))
    grid = rl.TimeGrid(0.0, 2.0, 5)
    dg = rl.carpet(coeffs, 1.0, math.pi, 33, grid)
    assert dg.x_samples == 33
    assert len(dg.values) == 5 * 33
    assert dg.at(0, 16) == pytest.approx(
        rl.box_density(coeffs, 1.0, math.pi, dg.x(16), 0.0), rel=1e-12
    )
