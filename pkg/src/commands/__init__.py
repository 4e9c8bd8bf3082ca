from src.commands.command.baseline import BaselineCommand
from src.commands.command.fig3 import Fig3Command
from src.commands.command.fig4 import Fig4Command
from src.commands.command.meanfid import MeanFidCommand
from src.commands.command.oracle_check import OracleCheckCommand
from src.commands.command_registry import CommandRegistry


def register_default_commands(registry: CommandRegistry):
    registry.register(Fig3Command())
    registry.register(Fig4Command())
    registry.register(MeanFidCommand())
    registry.register(OracleCheckCommand())
    registry.register(BaselineCommand())
