import os
import sys

from cavity.cli import main as cli_main
from utils.log_config import LogConfig
from utils.logger import Logger

logger = Logger.get_logger(__name__)

# 每条曲线数据: (输出文件名, 初态预设)
PANELS = [
    ('w-family1.csv', 'w-family1'),
    ('family1-heavy-a.csv', 'family1-heavy-a'),
    ('w-family2.csv', 'w-family2'),
    ('family2-heavy-b.csv', 'family2-heavy-b'),
    ('family2-heavy-c.csv', 'family2-heavy-c'),
]


def main(out_dir: str = 'results') -> int:
    """为每个预设生成 α = 0 与 α = 6 的并发度曲线，最后跑一遍解析解验证"""
    LogConfig.setup_logging(log_level='INFO')
    os.makedirs(out_dir, exist_ok=True)

    for filename, preset in PANELS:
        path = os.path.join(out_dir, filename)
        status = cli_main(['figure', '--preset', preset, '--alphas', '0,6', '--out', path])
        if status != 0:
            logger.error(f"生成 {path} 失败, 退出码 {status}")
            return status
        logger.info(f"已写出 {path}")

    return cli_main(['validate'])


if __name__ == '__main__':
    sys.exit(main(*sys.argv[1:2]))
