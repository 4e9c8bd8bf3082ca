from abc import ABC, abstractmethod
from pathlib import Path

from src.commands.experiment_config import ExperimentConfig


class BaseCommand(ABC):
    @property
    @abstractmethod
    def name(self) -> str:
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        pass

    def default_output(self, config: ExperimentConfig) -> Path:
        return Path(config.output.dir) / f"{self.name.replace('-', '_')}.csv"

    @abstractmethod
    async def execute(self, config: ExperimentConfig, out: Path, jobs: int) -> int:
        """Run the command and return the process exit code."""
        pass
