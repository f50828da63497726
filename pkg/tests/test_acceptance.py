"""定性复现两幅图的结论"""
import numpy as np
import pytest

from cavity.entanglement import concurrence_wootters, concurrence_xstate, reduced_density
from cavity.presets import PresetRegistry
from cavity.runner import run_series, run_sweep
from utils.event_bus import EventBus


@pytest.fixture(scope='module')
def runs():
    gts = np.linspace(0.0, 25.0, 2001)
    return {
        (name, alpha): run_series(PresetRegistry.get(name), alpha, gts, publish=False)
        for name in ('w-family1', 'w-family2')
        for alpha in (0.0, 6.0)
    }


def test_every_sample_stays_normalized(runs):
    for result in runs.values():
        assert max(x.norm_deviation for x in result.amplitudes) <= 1e-10


def test_closed_form_concurrence_equals_wootters(runs):
    for result in runs.values():
        for amps in result.amplitudes[::10]:
            assert concurrence_xstate(amps) == pytest.approx(
                concurrence_wootters(reduced_density(amps)), abs=1e-10)


@pytest.mark.parametrize('alpha', [0.0, 6.0])
def test_family1_has_no_sudden_death(runs, alpha):
    assert runs[('w-family1', alpha)].esd.n_windows == 0


def test_dipole_coupling_raises_mean_concurrence(runs):
    assert runs[('w-family1', 6.0)].mean_concurrence > runs[('w-family1', 0.0)].mean_concurrence


def test_family2_dies_without_dipole_coupling(runs):
    report = runs[('w-family2', 0.0)].esd
    assert report.n_windows >= 1
    assert report.first_death > 0
    assert all(end - start >= 0.05 for start, end in report.windows)


def test_strong_dipole_coupling_removes_sudden_death(runs):
    assert runs[('w-family2', 6.0)].esd.n_windows == 0


def test_alpha_sweep_reaches_death_free_regime():
    spec = PresetRegistry.get('w-family2')
    summaries = []
    EventBus.get_instance().subscribe('final_result', summaries.append)
    rows = run_sweep(spec, range(7), np.linspace(0.0, 25.0, 2001))

    counts = [row.n_windows for row in rows]
    assert counts[0] >= 1
    assert counts[-1] == 0
    # 窗口会分裂，个数不单调；总死亡时长随 α 单调不增
    dark = [row.total_dark_time for row in rows]
    assert all(later <= earlier for earlier, later in zip(dark, dark[1:]))
    assert dark[0] > 0

    crossover = summaries[-1]['esd_free_from_alpha']
    assert crossover is not None
    assert all(row.n_windows == 0 for row in rows if row.alpha >= crossover)
    assert rows[int(crossover) - 1].n_windows > 0
