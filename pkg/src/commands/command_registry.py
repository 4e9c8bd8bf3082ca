from typing import Dict, Optional

from src.commands.base_command import BaseCommand


class CommandRegistry:
    def __init__(self):
        self._commands: Dict[str, BaseCommand] = {}

    def register(self, command: BaseCommand):
        self._commands[command.name] = command

    def get_command(self, name: str) -> Optional[BaseCommand]:
        return self._commands.get(name)

    def list_commands(self) -> Dict[str, BaseCommand]:
        return dict(self._commands)
