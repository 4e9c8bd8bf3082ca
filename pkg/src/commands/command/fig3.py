from pathlib import Path

from loguru import logger

from src.comb.squeeze import squeeze_convert
from src.commands.base_command import BaseCommand
from src.commands.experiment_config import ExperimentConfig
from src.commands.sweep import run_sweep
from src.commands.table_writer import write_table
from src.metrics.fidelity import fidelity_at
from src.protocol.branches import diagonal_density, homodyne_density
from src.protocol.params import ProtocolParams
from src.protocol.runner import target_state

COLUMNS = ["s_db", "m", "x", "F", "p_exact", "p_paper"]


def fig3_row(item) -> tuple:
    s_db, m, beta, target_kind, x = item
    params = ProtocolParams(sp=squeeze_convert(s_db), m=m, beta=beta)
    target = target_state(params, target_kind)
    return (s_db, m, x, fidelity_at(params, x, target), homodyne_density(params, x), diagonal_density(params, x))


class Fig3Command(BaseCommand):
    @property
    def name(self) -> str:
        return "fig3"

    @property
    def description(self) -> str:
        return "Fidelity F(x) against the homodyne outcome for each squeezing level"

    async def execute(self, config: ExperimentConfig, out: Path, jobs: int) -> int:
        section = config.fig3
        items = [
            (s_db, section.m, section.beta, section.target, x)
            for s_db in section.levels_db
            for x in section.x_grid
        ]
        logger.info(f"-> fig3: {len(section.levels_db)} levels x {len(section.x_grid)} outcomes, m={section.m}")
        rows = await run_sweep(fig3_row, items, jobs)
        write_table(out, self.name, config.digest(), COLUMNS, rows, config.output.digits)
        return 0
