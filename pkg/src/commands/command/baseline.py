from pathlib import Path

import numpy as np
from loguru import logger

from src.baseline.conventional import BaselineParams, conventional_wavefn_p, conventional_wavefn_q
from src.baseline.spacing import peak_spacing
from src.commands.base_command import BaseCommand
from src.commands.experiment_config import ExperimentConfig
from src.commands.sweep import run_sweep
from src.commands.table_writer import sidecar_path, write_table
from src.utils.exceptions import InsufficientPeaksError

COLUMNS = ["tau", "alpha", "x", "q_spacing", "p_spacing", "status"]
PROFILE_COLUMNS = ["tau", "alpha", "x", "axis", "coord", "density"]


def baseline_row(item) -> tuple:
    tau, alpha, x, weights, q_grid, p_grid = item
    params = BaselineParams(alpha=alpha, tau=tau, x=x, weights=weights)
    q_density = np.abs(conventional_wavefn_q(params, q_grid)) ** 2
    p_density = np.abs(conventional_wavefn_p(params, p_grid)) ** 2
    spacings = []
    status = "ok"
    for density, grid in ((q_density, q_grid), (p_density, p_grid)):
        try:
            spacings.append(peak_spacing(density, grid))
        except InsufficientPeaksError:
            spacings.append(None)
            status = "single peak"
    profiles = [(tau, alpha, x, "q", q, d) for q, d in zip(q_grid, q_density)]
    profiles += [(tau, alpha, x, "p", p, d) for p, d in zip(p_grid, p_density)]
    return (tau, alpha, x, spacings[0], spacings[1], status), profiles


class BaselineCommand(BaseCommand):
    @property
    def name(self) -> str:
        return "baseline"

    @property
    def description(self) -> str:
        return "Codeword spacings of the conventional coherent-state method"

    async def execute(self, config: ExperimentConfig, out: Path, jobs: int) -> int:
        section = config.baseline
        q_grid = np.array(section.q_grid)
        p_grid = np.array(section.p_grid)
        items = [
            (tau, alpha, x, section.weights, q_grid, p_grid)
            for tau in section.taus
            for alpha in section.alphas
            for x in section.x_values
        ]
        logger.info(f"-> baseline: {len(items)} (tau, alpha, x) points")
        results = await run_sweep(baseline_row, items, jobs)
        rows = [row for row, _ in results]
        for row in rows:
            if row[5] != "ok":
                logger.warning(f"   tau={row[0]:g} alpha={row[1]:g} x={row[2]:g}: {row[5]}")
        write_table(out, self.name, config.digest(), COLUMNS, rows, config.output.digits)
        if config.output.profiles:
            profiles = [line for _, block in results for line in block]
            write_table(sidecar_path(out, "profiles"), self.name, config.digest(), PROFILE_COLUMNS, profiles,
                        config.output.digits)
        return 0
