"""Wave-packet revival simulation and analysis toolkit."""

from ._core import (
    BeatPeak,
    BeatReport,
    Coefficients,
    Coefficients2D,
    ComplexSeries,
    DensityGrid,
    FractionLabel,
    IoError,
    PacketMoments,
    PacketSpec,
    Rational,
    RevivalClass,
    RevivalEvent,
    RunReport,
    Scenario,
    ScenarioError,
    SpectrumKind,
    SpectrumModel,
    SpectrumModel2D,
    TimeGrid,
    TimeScales,
    TimeScales2D,
    autocorrelation,
    autocorrelation_2d,
    box_density,
    carpet,
    classify,
    commensurate,
    common_revival,
    detect_revivals,
    format_double,
    gaussian_coefficients,
    label_fraction,
    load_scenario_file,
    packet_moments,
    parse_scenario,
    periodogram_beats,
    product_coefficients_2d,
    run_scenario,
    time_scales,
    time_scales_2d,
    tune_box_ratio,
)

__all__ = [
    "BeatPeak",
    "BeatReport",
    "Coefficients",
    "Coefficients2D",
    "ComplexSeries",
    "DensityGrid",
    "FractionLabel",
    "IoError",
    "PacketMoments",
    "PacketSpec",
    "Rational",
    "RevivalClass",
    "RevivalEvent",
    "RunReport",
    "Scenario",
    "ScenarioError",
    "SpectrumKind",
    "SpectrumModel",
    "SpectrumModel2D",
    "TimeGrid",
    "TimeScales",
    "TimeScales2D",
    "autocorrelation",
    "autocorrelation_2d",
    "box_density",
    "carpet",
    "classify",
    "commensurate",
    "common_revival",
    "detect_revivals",
    "format_double",
    "gaussian_coefficients",
    "label_fraction",
    "load_scenario_file",
    "packet_moments",
    "parse_scenario",
    "periodogram_beats",
    "product_coefficients_2d",
    "run_scenario",
    "time_scales",
    "time_scales_2d",
    "tune_box_ratio",
]

__version__ = "0.1.0"
