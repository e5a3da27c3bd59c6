import argparse
import logging
from pathlib import Path

from components.config__pydantic.loader import load_run_config
from components.config__pydantic.run_config import RunConfig

logger = logging.getLogger(__name__)


def add_config_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, default=None, help="JSON run configuration")
    parser.add_argument("--seed", type=int, default=None, help="shorthand for the seed=<n> override")
    parser.add_argument("overrides", nargs="*", metavar="section.key=value", help="dotted config overrides")


def resolve_config(args: argparse.Namespace) -> RunConfig:
    overrides = list(args.overrides)
    if args.seed is not None:
        overrides.append(f"seed={args.seed}")
    config = load_run_config(args.config, overrides)
    config.validate_paths()
    return config


def echo_config(config: RunConfig) -> None:
    """Effective config goes to the log; its hash and seed go to stdout."""
    logger.info("Effective config: %s", config.model_dump_json())
    print(f"config_hash={config.config_hash()}")
    print(f"seed={config.seed}")
