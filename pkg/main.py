"""
superhc - exact Harish-Chandra computations for the gl(2|2) symmetric pair
Main entry point

Usage:
    python main.py interp --p 1 --q 1 --mu 2
    python main.py verify-all
"""

import logging
import sys
from typing import Optional
from dotenv import load_dotenv

from src.core.config import Config
from src.interfaces.cli import run_subcommand

logger = logging.getLogger(__name__)


def configure_logging(config: Config):
    logging.basicConfig(
        level=getattr(logging, str(config.get('logging.level', 'INFO')).upper(), logging.INFO),
        format=config.get('logging.format', '%(asctime)s - %(name)s - %(levelname)s - %(message)s'),
        stream=sys.stderr,
    )


def _config_flag(argv) -> Optional[str]:
    for n, arg in enumerate(argv):
        if arg == "--config" and n + 1 < len(argv):
            return argv[n + 1]
        if arg.startswith("--config="):
            return arg.split("=", 1)[1]
    return None


def main() -> int:
    """Main entry point"""
    # Environment first so SUPERHC_* overrides reach the config
    load_dotenv()

    argv = sys.argv[1:]
    try:
        config = Config.locate(_config_flag(argv))
    except (FileNotFoundError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    configure_logging(config)
    logger.info(f"✓ Configuration loaded (v{config.get('app.version')})")

    try:
        return run_subcommand(argv, config)
    except KeyboardInterrupt:
        logger.info("Interrupted")
        return 130


if __name__ == "__main__":
    sys.exit(main())
