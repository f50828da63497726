"""CSV 读写

列顺序固定，浮点数用最短的可精确回读表示，UTF-8、LF 换行、无索引列。
"""
import io
import sys
from typing import Dict, Iterable, Optional, TYPE_CHECKING, Union

import pandas as pd

from utils.logger import Logger
from ..entanglement import ConcurrenceSeries
from ..exceptions import OutputError, SeriesError

if TYPE_CHECKING:
    from ..runner import SeriesResult, SweepRow

logger = Logger.get_logger(__name__)

SWEEP_COLUMNS = ['alpha', 'n_windows', 'total_dark_time', 'mean_concurrence']
STDOUT = '-'


def series_frame(result: 'SeriesResult') -> pd.DataFrame:
    """gt, concurrence, x1_re, x1_im, ..."""
    data = {
        'gt': result.series.gts,
        'concurrence': result.series.values,
    }
    amps = [x.amps for x in result.amplitudes]
    for i in range(len(amps[0]) if amps else 0):
        data[f'x{i + 1}_re'] = [float(a[i].real) for a in amps]
        data[f'x{i + 1}_im'] = [float(a[i].imag) for a in amps]
    return pd.DataFrame(data)


def sweep_frame(rows: Iterable['SweepRow']) -> pd.DataFrame:
    return pd.DataFrame(
        [[row.alpha, row.n_windows, row.total_dark_time, row.mean_concurrence] for row in rows],
        columns=SWEEP_COLUMNS,
    )


def figure_column(alpha: float) -> str:
    return f'concurrence_alpha_{alpha:g}'


def figure_frame(results: Dict[float, 'SeriesResult']) -> pd.DataFrame:
    """同一网格上不同 α 的并发度并列"""
    if not results:
        raise SeriesError("没有可写出的曲线")
    grids = [r.series.gts for r in results.values()]
    first = grids[0]
    if any(len(g) != len(first) or (g != first).any() for g in grids[1:]):
        raise SeriesError("各条曲线的时间网格不一致")

    data = {'gt': first}
    for alpha, result in results.items():
        data[figure_column(alpha)] = result.series.values
    return pd.DataFrame(data)


def to_csv_text(frame: pd.DataFrame) -> str:
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, lineterminator='\n')
    return buffer.getvalue()


def write_csv(frame: pd.DataFrame, path: Optional[str] = None) -> None:
    """写出 CSV，path 为空或 '-' 时写到标准输出"""
    text = to_csv_text(frame)
    if path in (None, '', STDOUT):
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        with open(path, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
    except OSError as e:
        raise OutputError(f"无法写入输出文件 {path}: {e.strerror or e}") from e
    logger.debug(f"写出 {len(frame)} 行到 {path}")


def read_frame(source: Union[str, io.TextIOBase]) -> pd.DataFrame:
    try:
        return pd.read_csv(source, float_precision='round_trip')
    except OSError as e:
        raise OutputError(f"无法读取 CSV {source}: {e.strerror or e}") from e


def read_series(source: Union[str, io.TextIOBase]) -> ConcurrenceSeries:
    """从 series CSV 恢复并发度序列"""
    frame = read_frame(source)
    missing = {'gt', 'concurrence'} - set(frame.columns)
    if missing:
        raise SeriesError(f"CSV 缺少列: {', '.join(sorted(missing))}")
    return ConcurrenceSeries(frame['gt'].to_numpy(dtype=float),
                             frame['concurrence'].to_numpy(dtype=float))
