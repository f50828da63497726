import numpy as np
import pytest

from cavity.analyzers import AnalysisContext, AnalyzerChainBuilder, AnalyzerRegistry, BaseAnalyzer
from cavity.dynamics import Family
from cavity.entanglement import ConcurrenceSeries, EsdReport
from cavity.exceptions import ConfigError, SeriesError
from cavity.presets import DEFAULT_PRESETS, PresetRegistry


@pytest.fixture
def dip_series():
    gts = np.linspace(0.0, 1.0, 21)
    values = np.full(21, 0.5)
    values[8:13] = 0.0
    return ConcurrenceSeries(gts, values)


def test_registered_analyzers():
    assert {'esd', 'mean'} <= set(AnalyzerRegistry.names())
    with pytest.raises(ConfigError):
        AnalyzerRegistry.get_analyzer_class('sharpe')


def test_chain_runs_enabled_analyzers(dip_series):
    results = AnalyzerChainBuilder.run(dip_series, AnalysisContext())
    assert set(results) == {'esd', 'mean'}
    assert results['esd']['n_windows'] == 1
    assert isinstance(results['esd']['report'], EsdReport)
    assert results['esd']['windows'][0] == pytest.approx((0.4, 0.6))


def test_disabled_analyzer_is_skipped(dip_series):
    try:
        AnalyzerChainBuilder.setup_analyzers({'mean': False})
        assert set(AnalyzerChainBuilder.run(dip_series, AnalysisContext())) == {'esd'}
    finally:
        AnalyzerChainBuilder.setup_analyzers()


def test_mean_analyzer_uses_trapezoid():
    series = ConcurrenceSeries(np.linspace(0.0, 2.0, 5), np.linspace(0.0, 1.0, 5))
    result = AnalyzerRegistry.get_analyzer_class('mean')().analyze(series, AnalysisContext())
    assert result['mean_concurrence'] == pytest.approx(0.5)
    assert result['max_concurrence'] == 1.0
    assert result['min_concurrence'] == 0.0


def test_mean_of_single_point():
    series = ConcurrenceSeries([0.0], [0.25])
    result = AnalyzerRegistry.get_analyzer_class('mean')().analyze(series, AnalysisContext())
    assert result['mean_concurrence'] == 0.25


def test_analyzer_errors_propagate():
    series = ConcurrenceSeries(np.linspace(0.0, 1.0, 3), [0.0, 0.0, 0.0])
    with pytest.raises(SeriesError):
        AnalyzerRegistry.get_analyzer_class('esd')().analyze(series, AnalysisContext(min_window=0.1))


def test_base_analyzer_requires_override(dip_series):
    with pytest.raises(NotImplementedError):
        BaseAnalyzer().analyze(dip_series, AnalysisContext())


def test_presets():
    assert PresetRegistry.names() == sorted(
        ['w-family1', 'family1-heavy-a', 'w-family2', 'family2-heavy-b', 'family2-heavy-c'])
    for name in PresetRegistry.names():
        spec = PresetRegistry.get(name)
        assert spec.norm_squared == pytest.approx(1.0, abs=1e-12)
        assert PresetRegistry.describe(name)
    assert PresetRegistry.get('family2-heavy-b').b == pytest.approx(np.sqrt(2 / 3))
    assert PresetRegistry.get('family2-heavy-c').c == pytest.approx(np.sqrt(2 / 3))


def test_unknown_preset():
    with pytest.raises(ConfigError):
        PresetRegistry.get('fig3')


def test_default_presets_match_family():
    for family, name in DEFAULT_PRESETS.items():
        assert PresetRegistry.get(name).family is family
    assert set(DEFAULT_PRESETS) == set(Family)
