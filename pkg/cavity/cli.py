"""命令行入口

    tc-entangle series   --family 2 --coeffs 0.57735,0.57735,0.57735 --alpha 0
    tc-entangle sweep    --preset w-family2 --alpha-grid 0:6:1
    tc-entangle figure   --preset family1-heavy-a --alphas 0,6 --out family1-heavy-a.csv
    tc-entangle validate --families 1,2 --alphas 0,1,6

配置优先级: 命令行参数 > --config 指定的 key=value 文件 > config/application.yaml > 内置默认值。
退出码: 0 成功, 2 参数/配置错误, 3 输入输出错误, 4 解析解验证失败。
"""
import argparse
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np
from dotenv import dotenv_values

from utils.config import Config
from utils.log_config import LogConfig
from utils.logger import Logger
from .dynamics import Family, WStateSpec
from .exceptions import (
    CavityError, ConfigError, NormalizationError, OutputError, ValidationFailure,
)
from .kernels import MiddleTermReading
from .output import csv_io
from .output.handlers import ConsoleHandler, DetailHandler
from .presets import DEFAULT_PRESETS, PresetRegistry
from .runner import (
    VALIDATION_TOLERANCE, run_figure, run_series, run_sweep, run_validation, uniform_grid,
)

logger = Logger.get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_VALIDATION = 4

# 系数模长平方与 1 的偏差小于此值时自动归一化
AUTO_NORMALIZE_LIMIT = 1e-6
EXACT_NORM_TOLERANCE = 1e-12

DEFAULTS: Dict[str, Any] = {
    'family': 1,
    'coeffs': None,
    'preset': None,
    'alpha': 0.0,
    'alpha_grid': '0:6:1',
    'alphas': '0,6',
    'gt_max': 25.0,
    'steps': 2001,
    'zero_threshold': 1e-9,
    'min_window': 0.05,
    'out': None,
    'log_level': 'INFO',
    'log_dir': None,
    'families': '1,2',
    'validate_alphas': '0,1,6',
    'points': 200,
    'validate_gt_max': 25.0,
    'tolerance': VALIDATION_TOLERANCE,
    'middle_term': MiddleTermReading.DERIVED.value,
}

# application.yaml 的 (段, 键) 到设置项的映射
YAML_KEYS = {
    ('grid', 'gt_max'): 'gt_max',
    ('grid', 'steps'): 'steps',
    ('esd', 'zero_threshold'): 'zero_threshold',
    ('esd', 'min_window'): 'min_window',
    ('sweep', 'alpha_grid'): 'alpha_grid',
    ('figure', 'alphas'): 'alphas',
    ('validation', 'families'): 'families',
    ('validation', 'alphas'): 'validate_alphas',
    ('validation', 'points'): 'points',
    ('validation', 'gt_max'): 'validate_gt_max',
    ('validation', 'tolerance'): 'tolerance',
    ('logging', 'level'): 'log_level',
    ('logging', 'log_dir'): 'log_dir',
    ('defaults', 'family'): 'family',
    ('defaults', 'preset'): 'preset',
}


@dataclass
class RunConfig:
    """一次 series / sweep / figure 运行的完整参数"""

    spec: WStateSpec
    alpha: float = 0.0
    gt_max: float = 25.0
    steps: int = 2001
    zero_threshold: float = 1e-9
    min_window: float = 0.05
    output_path: Optional[str] = None
    alpha_grid: List[float] = field(default_factory=list)

    @property
    def family(self) -> Family:
        return self.spec.family

    def grid(self) -> np.ndarray:
        return uniform_grid(self.gt_max, self.steps)


# ---- 参数解析 ----

def parse_complex(text: str) -> complex:
    """解析 "re" 或 "re+imj" 形式的复数"""
    try:
        return complex(str(text).strip().replace(' ', ''))
    except ValueError:
        raise ConfigError(f"无法解析复数: {text!r}")


def _split_list(text: Any) -> List[str]:
    if isinstance(text, (list, tuple)):
        return [str(item) for item in text]
    return [item.strip() for item in str(text).split(',') if item.strip()]


def parse_coeffs(text: Any, family) -> WStateSpec:
    """解析 a,b,c；模长略有偏差时归一化并告警，偏差过大时报错"""
    parts = _split_list(text)
    if len(parts) != 3:
        raise ConfigError(f"--coeffs 需要 3 个系数 a,b,c: {text!r}")
    a, b, c = (parse_complex(part) for part in parts)
    family = Family.parse(family)

    norm_squared = abs(a) ** 2 + abs(b) ** 2 + abs(c) ** 2
    deviation = abs(norm_squared - 1.0)
    if deviation <= EXACT_NORM_TOLERANCE:
        return WStateSpec(family, a, b, c)
    if deviation < AUTO_NORMALIZE_LIMIT:
        logger.warning(f"初态系数模长平方为 {norm_squared:.12g}，已自动归一化")
        return WStateSpec.normalized(family, a, b, c)
    raise NormalizationError(f"初态系数未归一化: |a|²+|b|²+|c|² = {norm_squared:.12g}")


def parse_alpha_list(text: Any) -> List[float]:
    """解析 α 列表: "x0:x1:step" (含端点) 或逗号分隔的列表"""
    if isinstance(text, (int, float)) and not isinstance(text, bool):
        values = [float(text)]
    elif isinstance(text, str) and ':' in text:
        parts = text.split(':')
        if len(parts) != 3:
            raise ConfigError(f"α 网格格式应为 x0:x1:step: {text!r}")
        try:
            start, stop, step = (float(p) for p in parts)
        except ValueError:
            raise ConfigError(f"无法解析 α 网格: {text!r}")
        if not step > 0 or stop < start:
            raise ConfigError(f"α 网格需要 step > 0 且 x1 ≥ x0: {text!r}")
        count = int(np.floor((stop - start) / step + 1e-9)) + 1
        values = [round(start + k * step, 12) for k in range(count)]
    else:
        try:
            values = [float(item) for item in _split_list(text)]
        except ValueError:
            raise ConfigError(f"无法解析 α 列表: {text!r}")

    if not values:
        raise ConfigError("α 列表不能为空")
    for value in values:
        if not np.isfinite(value) or value < 0:
            raise ConfigError(f"α 必须是非负有限实数: {value}")
    return values


def parse_families(text: Any) -> List[Family]:
    items = _split_list(text)
    if not items:
        raise ConfigError("初态族列表不能为空")
    try:
        return [Family.parse(item) for item in items]
    except CavityError as e:
        raise ConfigError(str(e))


def _as_number(key: str, value: Any, cast: Callable) -> Any:
    try:
        number = cast(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{key} 不是合法数值: {value!r}")
    if cast is int and float(value) != number:
        raise ConfigError(f"{key} 必须是整数: {value!r}")
    return number


# ---- 配置分层 ----

def _yaml_settings() -> Dict[str, Any]:
    settings = {}
    for (section, key), name in YAML_KEYS.items():
        value = Config.get_section(section).get(key)
        if value is not None:
            settings[name] = value
    return settings


def _file_settings(path: Optional[str]) -> Dict[str, Any]:
    """读取 key=value 配置文件，键名不区分大小写"""
    if not path:
        return {}
    if not os.path.isfile(path):
        raise ConfigError(f"配置文件不存在: {path}")

    settings = {}
    for key, value in dotenv_values(path).items():
        name = key.strip().lower().replace('-', '_')
        if name not in DEFAULTS:
            raise ConfigError(f"配置文件 {path} 中有未知的键: {key}")
        if value is None or value == '':
            continue
        settings[name] = value
    if settings.get('coeffs') and settings.get('preset'):
        raise ConfigError(f"配置文件 {path} 不能同时指定 coeffs 与 preset")
    logger.debug(f"读取配置文件 {path}: {sorted(settings)}")
    return settings


def _flag_settings(args: argparse.Namespace) -> Dict[str, Any]:
    return {
        name: value for name, value in vars(args).items()
        if name in DEFAULTS and value is not None
    }


def resolve_settings(args: argparse.Namespace) -> Dict[str, Any]:
    """按优先级合并各层设置，并记录显式给出的初态族"""
    settings = dict(DEFAULTS)
    explicit_family = None
    for layer, is_explicit in ((_yaml_settings(), False),
                               (_file_settings(getattr(args, 'config', None)), True),
                               (_flag_settings(args), True)):
        if layer.get('coeffs'):
            settings['preset'] = None
        if layer.get('preset'):
            settings['coeffs'] = None
        if is_explicit and 'family' in layer:
            explicit_family = layer['family']
        settings.update(layer)
    settings['explicit_family'] = explicit_family
    return settings


def select_state(settings: Dict[str, Any]) -> WStateSpec:
    """系数 > 预设 > 初态族默认预设"""
    family = Family.parse(settings['family'])
    if settings.get('coeffs'):
        return parse_coeffs(settings['coeffs'], family)

    if settings.get('preset'):
        spec = PresetRegistry.get(settings['preset'])
        explicit = settings.get('explicit_family')
        if explicit is not None and Family.parse(explicit) is not spec.family:
            raise ConfigError(f"预设 {settings['preset']} 属于初态族 {spec.family.value}，"
                              f"与 --family {explicit} 冲突")
        return spec

    return PresetRegistry.get(DEFAULT_PRESETS[family])


def build_run_config(settings: Dict[str, Any], alpha_key: str = 'alpha_grid') -> RunConfig:
    config = RunConfig(
        spec=select_state(settings),
        alpha=_as_number('alpha', settings['alpha'], float),
        gt_max=_as_number('gt_max', settings['gt_max'], float),
        steps=_as_number('steps', settings['steps'], int),
        zero_threshold=_as_number('zero_threshold', settings['zero_threshold'], float),
        min_window=_as_number('min_window', settings['min_window'], float),
        output_path=settings.get('out'),
        alpha_grid=parse_alpha_list(settings[alpha_key]),
    )
    if not (np.isfinite(config.gt_max) and config.gt_max > 0):
        raise ConfigError(f"gt_max 必须为正: {config.gt_max}")
    if config.steps < 2:
        raise ConfigError(f"steps 至少为 2: {config.steps}")
    if not (np.isfinite(config.zero_threshold) and config.zero_threshold > 0):
        raise ConfigError(f"zero_threshold 必须为正: {config.zero_threshold}")
    spacing = config.gt_max / (config.steps - 1)
    if not np.isfinite(config.min_window):
        raise ConfigError(f"min_window 必须是有限实数: {config.min_window}")
    if config.min_window < spacing:
        raise ConfigError(f"min_window={config.min_window} 小于网格间隔 {spacing:g}")
    return config


# ---- 子命令 ----

def cmd_series(config: RunConfig) -> int:
    result = run_series(config.spec, config.alpha, config.grid(),
                        config.zero_threshold, config.min_window)
    csv_io.write_csv(csv_io.series_frame(result), config.output_path)
    return EXIT_OK


def cmd_sweep(config: RunConfig) -> int:
    rows = run_sweep(config.spec, config.alpha_grid, config.grid(),
                     config.zero_threshold, config.min_window)
    csv_io.write_csv(csv_io.sweep_frame(rows), config.output_path)
    return EXIT_OK


def cmd_figure(config: RunConfig) -> int:
    results = run_figure(config.spec, config.alpha_grid, config.grid(),
                         config.zero_threshold, config.min_window)
    csv_io.write_csv(csv_io.figure_frame(results), config.output_path)
    return EXIT_OK


def cmd_validate(settings: Dict[str, Any]) -> int:
    families = parse_families(settings['families'])
    alphas = parse_alpha_list(settings['validate_alphas'])
    points = _as_number('points', settings['points'], int)
    gt_max = _as_number('gt_max', settings['validate_gt_max'], float)
    tolerance = _as_number('tolerance', settings['tolerance'], float)
    try:
        reading = MiddleTermReading(settings['middle_term'])
    except ValueError:
        raise ConfigError(f"未知的中间项读法: {settings['middle_term']!r}")
    if points < 1:
        raise ConfigError(f"points 必须为正: {points}")

    entries = run_validation(families, alphas, uniform_grid(gt_max, points), tolerance, reading)

    lines = ['family,alpha,max_deviation,status']
    lines += [f"{e.family.value},{e.alpha!r},{e.deviation:.3e},{'ok' if e.passed else 'FAIL'}"
              for e in entries]
    _write_text('\n'.join(lines) + '\n', settings.get('out'))

    failed = [e for e in entries if not e.passed]
    if failed:
        raise ValidationFailure(
            f"{len(failed)}/{len(entries)} 项超出容差 {tolerance:g} (读法 {reading.value})")
    return EXIT_OK


def _write_text(text: str, path: Optional[str]) -> None:
    if path in (None, '', csv_io.STDOUT):
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        with open(path, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
    except OSError as e:
        raise OutputError(f"无法写入输出文件 {path}: {e.strerror or e}") from e


# ---- 参数定义 ----

def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', metavar='FILE', help='key=value 配置文件')
    common.add_argument('--log-level', dest='log_level',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], type=str.upper)
    common.add_argument('--log-dir', dest='log_dir', metavar='DIR')
    common.add_argument('--out', metavar='PATH', help='输出路径，默认标准输出')
    return common


def _state_parser() -> argparse.ArgumentParser:
    state = argparse.ArgumentParser(add_help=False)
    state.add_argument('--family', type=int, choices=[1, 2])
    group = state.add_mutually_exclusive_group()
    group.add_argument('--coeffs', metavar='a,b,c', help='初态系数，如 0.5,0.5,0.70710678+0j')
    group.add_argument('--preset', choices=PresetRegistry.names())
    state.add_argument('--gt-max', dest='gt_max', type=float)
    state.add_argument('--steps', type=int)
    state.add_argument('--zero-threshold', dest='zero_threshold', type=float)
    state.add_argument('--min-window', dest='min_window', type=float)
    return state


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='tc-entangle',
        description='双光子 Tavis-Cummings 模型中两原子纠缠演化',
    )
    subparsers = parser.add_subparsers(dest='command', required=True)
    common, state = _common_parser(), _state_parser()

    series = subparsers.add_parser('series', parents=[common, state], help='并发度时间序列')
    series.add_argument('--alpha', type=float)

    sweep = subparsers.add_parser('sweep', parents=[common, state], help='α 扫描死亡窗口')
    sweep.add_argument('--alpha-grid', dest='alpha_grid', metavar='x0:x1:step|a,b,...')

    figure = subparsers.add_parser('figure', parents=[common, state], help='一幅图的曲线数据')
    figure.add_argument('--alphas', metavar='a,b,...')

    validate = subparsers.add_parser('validate', parents=[common], help='解析解与数值基准比较')
    validate.add_argument('--families', metavar='1,2')
    validate.add_argument('--alphas', dest='validate_alphas', metavar='a,b,...')
    validate.add_argument('--points', type=int)
    validate.add_argument('--gt-max', dest='validate_gt_max', type=float)
    validate.add_argument('--tolerance', type=float)
    validate.add_argument('--middle-term', dest='middle_term',
                          choices=[reading.value for reading in MiddleTermReading])
    return parser


def _dispatch(command: str, settings: Dict[str, Any]) -> int:
    if command == 'validate':
        return cmd_validate(settings)
    if command == 'series':
        return cmd_series(build_run_config(settings))
    if command == 'sweep':
        return cmd_sweep(build_run_config(settings, 'alpha_grid'))
    return cmd_figure(build_run_config(settings, 'alphas'))


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    handlers = []
    try:
        settings = resolve_settings(args)
        LogConfig.setup_logging(settings['log_level'], settings['log_dir'])
        handlers.append(ConsoleHandler())
        if str(settings['log_level']).upper() == 'DEBUG':
            handlers.append(DetailHandler())
        return _dispatch(args.command, settings)
    except ValidationFailure as e:
        logger.error(f"解析解验证失败: {str(e)}")
        return EXIT_VALIDATION
    except OutputError as e:
        logger.error(f"输出失败: {str(e)}")
        return EXIT_IO
    except (CavityError, ValueError) as e:
        logger.error(f"参数错误: {str(e)}")
        return EXIT_USAGE
    finally:
        for handler in handlers:
            handler.unsubscribe_all()


if __name__ == '__main__':
    sys.exit(main())
