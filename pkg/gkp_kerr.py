# GKP Kerr - reproduction driver: python gkp_kerr.py <command> [--config PATH] [--out PATH] [--override KEY=VALUE] [--jobs N]
import argparse
import asyncio
import sys
from pathlib import Path

from loguru import logger

from config import GKP_JOBS, GKP_LOG_LEVEL
from src.commands import register_default_commands
from src.commands.command_registry import CommandRegistry
from src.commands.experiment_config import load_experiment_config
from src.utils.exceptions import ConfigError, GKPKerrError
from src.utils.log import configure_logging

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_NUMERIC = 2


def build_parser(registry: CommandRegistry) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gkp_kerr",
        description="GKP qubit generation by cross-Kerr interaction with a Fock-state ancilla",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, command in registry.list_commands().items():
        cmd = sub.add_parser(name, help=command.description)
        cmd.add_argument("--config", type=Path, default=None, help="experiment config file (dotenv format)")
        cmd.add_argument("--out", type=Path, default=None, help="output CSV path")
        cmd.add_argument("--override", action="append", default=[], metavar="KEY=VALUE",
                         help="replace one config value; repeatable")
        cmd.add_argument("--jobs", type=int, default=GKP_JOBS, help="parallel worker threads")
    return parser


def main(argv=None) -> int:
    registry = CommandRegistry()
    register_default_commands(registry)
    args = build_parser(registry).parse_args(argv)
    configure_logging(GKP_LOG_LEVEL)

    command = registry.get_command(args.command)
    try:
        config = load_experiment_config(args.config, args.override)
    except ConfigError as e:
        logger.error(f"   ERROR: {e}")
        return EXIT_CONFIG

    out = args.out or command.default_output(config)
    try:
        return asyncio.run(command.execute(config, out, max(1, args.jobs)))
    except GKPKerrError as e:
        logger.error(f"   ERROR: {e}")
        return EXIT_NUMERIC
    except KeyboardInterrupt:
        logger.warning("\nRun interrupted.")
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
