from pathlib import Path

from loguru import logger

from src.comb.squeeze import squeeze_convert
from src.commands.base_command import BaseCommand
from src.commands.experiment_config import ExperimentConfig
from src.commands.sweep import run_sweep
from src.commands.table_writer import sidecar_path, write_table
from src.metrics.fidelity import fidelity_at
from src.metrics.selection import mean_fidelity, selection_row, v_up_for_success
from src.protocol.params import ProtocolParams
from src.protocol.runner import target_state

COLUMNS = ["s_db", "m", "v_up", "P_suc", "mean_F", "P_suc_paper", "mean_F_paper"]
TARGET_COLUMNS = ["s_db", "m", "p_target", "v_up", "mean_F"]
ORIGIN_COLUMNS = ["s_db", "m", "F_x0", "F_x0_reference", "difference"]

# v_up -> 0 fidelity at m=3 the sweep is compared against
REFERENCE_ORIGIN_FIDELITY = {10.0: 0.99998, 11.0: 0.99986, 12.0: 0.99938}


def meanfid_row(item) -> tuple:
    s_db, m, v_up = item
    params = ProtocolParams(sp=squeeze_convert(s_db), m=m)
    row = selection_row(params, v_up)
    return (s_db, m, v_up, row.p_suc, row.mean_fidelity, row.p_suc_diagonal, row.mean_fidelity_diagonal)


def target_row(item) -> tuple:
    s_db, m, p_target = item
    params = ProtocolParams(sp=squeeze_convert(s_db), m=m)
    v_up = v_up_for_success(params, p_target)
    return (s_db, m, p_target, v_up, mean_fidelity(params, v_up, target=target_state(params)))


def origin_row(item) -> tuple:
    s_db, m = item
    params = ProtocolParams(sp=squeeze_convert(s_db), m=m)
    fidelity = fidelity_at(params, 0.0, target_state(params))
    reference = REFERENCE_ORIGIN_FIDELITY.get(float(s_db)) if m == 3 else None
    difference = None if reference is None else fidelity - reference
    return (s_db, m, fidelity, reference, difference)


class MeanFidCommand(BaseCommand):
    @property
    def name(self) -> str:
        return "meanfid"

    @property
    def description(self) -> str:
        return "Success probability and mean fidelity against the post-selection window"

    async def execute(self, config: ExperimentConfig, out: Path, jobs: int) -> int:
        section = config.meanfid
        items = [(s_db, section.m, v) for s_db in section.levels_db for v in section.v_grid]
        logger.info(f"-> meanfid: {len(section.levels_db)} levels x {len(section.v_grid)} windows, m={section.m}")
        rows = await run_sweep(meanfid_row, items, jobs)
        write_table(out, self.name, config.digest(), COLUMNS, rows, config.output.digits)

        origins = await run_sweep(origin_row, [(s, section.m) for s in section.levels_db], jobs)
        for s_db, m, fidelity, reference, difference in origins:
            if reference is None:
                logger.info(f"   {s_db:g} dB: F(x=0)={fidelity:.7f}")
            else:
                logger.info(f"   {s_db:g} dB: F(x=0)={fidelity:.7f}, reference {reference:.5f}, "
                            f"difference {difference:+.2e}")
        write_table(sidecar_path(out, "origin"), self.name, config.digest(), ORIGIN_COLUMNS, origins,
                    config.output.digits)

        if section.p_target > 0:
            targets = await run_sweep(target_row, [(s, section.m, section.p_target) for s in section.levels_db], jobs)
            for s_db, _, _, v_up, fidelity in targets:
                logger.info(f"   {s_db:g} dB: P_suc={section.p_target:g} at v_up={v_up:.4f}, mean F={fidelity:.6f}")
            write_table(sidecar_path(out, "target"), self.name, config.digest(), TARGET_COLUMNS, targets,
                        config.output.digits)
        return 0
