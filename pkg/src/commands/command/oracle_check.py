from pathlib import Path

from loguru import logger

from src.comb.fock_bridge import to_fock
from src.comb.gaussian_comb import comb_fidelity
from src.comb.squeeze import squeeze_convert
from src.comb.states import HermiteOrder
from src.commands.base_command import BaseCommand
from src.commands.experiment_config import ExperimentConfig, OracleConfig
from src.commands.sweep import run_sweep
from src.commands.table_writer import write_table
from src.fock.operators import schmidt_coefficients
from src.fock.states import fock_fidelity
from src.protocol.branches import run_branch_oracle
from src.protocol.fock_oracle import pre_measurement_joint, run_fock_oracle
from src.protocol.params import DeltaMode, ProtocolParams
from src.protocol.runner import run_analytic
from src.utils.exceptions import ToleranceViolationError

COLUMNS = ["check", "m", "s_db", "x", "delta", "infidelity", "tolerance", "ok"]
INFIDELITY, TOLERANCE, OK = 5, 6, 7


def analytic_vs_branch(item) -> tuple:
    m, s_db, x, delta, order, tolerance = item
    params = ProtocolParams(
        sp=squeeze_convert(s_db),
        m=m,
        delta_mode=DeltaMode.FORCED_VALUE,
        forced_delta=delta,
        hermite_order=HermiteOrder(order),
    )
    infidelity = 1.0 - comb_fidelity(run_analytic(params, x), run_branch_oracle(params, x))
    return ("analytic-branch", m, s_db, x, delta, infidelity, tolerance, infidelity <= tolerance)


def _toy_params(section: OracleConfig) -> ProtocolParams:
    return ProtocolParams(
        sp=squeeze_convert(section.fock_db),
        m=section.fock_m,
        beta=section.fock_beta,
        gamma=section.fock_gamma,
        delta_mode=DeltaMode.EXACT,
        phase_lock=False,
    )


def branch_vs_fock(item) -> tuple:
    section, x = item
    params = _toy_params(section)
    branch = to_fock(run_branch_oracle(params, x), section.fock_dim)
    infidelity = 1.0 - fock_fidelity(branch, run_fock_oracle(params, x, section.fock_dim))
    return ("branch-fock", params.m, section.fock_db, x, params.delta, infidelity, section.fock_tolerance,
            infidelity <= section.fock_tolerance)


def disentanglement(section: OracleConfig) -> tuple:
    """Kerr then inverse Kerr with nothing in between leaves a product state."""
    params = _toy_params(section).with_(beta=0.0, gamma=0.0, theta=section.kerr_theta)
    joint = pre_measurement_joint(params, section.fock_dim)
    deviation = 1.0 - float(schmidt_coefficients(joint)[0])
    return ("disentangle", params.m, section.fock_db, None, None, deviation, 1e-12, deviation <= 1e-12)


class OracleCheckCommand(BaseCommand):
    @property
    def name(self) -> str:
        return "oracle-check"

    @property
    def description(self) -> str:
        return "Cross-check the closed-form heralded state against the branch and Fock oracles"

    async def execute(self, config: ExperimentConfig, out: Path, jobs: int) -> int:
        section = config.oracle
        grid = [
            (m, s_db, x, delta, section.hermite_order, section.tolerance)
            for m in section.m_values
            for s_db in section.levels_db
            for x in section.x_values
            for delta in section.deltas
        ]
        logger.info(f"-> oracle-check: {len(grid)} analytic/branch points, "
                    f"{len(section.fock_x_values)} branch/Fock points")
        rows = await run_sweep(analytic_vs_branch, grid, jobs)
        rows += await run_sweep(branch_vs_fock, [(section, x) for x in section.fock_x_values], jobs)
        rows.append(disentanglement(section))
        write_table(out, self.name, config.digest(), COLUMNS, rows, config.output.digits)

        for check in ("analytic-branch", "branch-fock", "disentangle"):
            worst = max((row for row in rows if row[0] == check), key=lambda row: row[INFIDELITY])
            logger.info(f"   {check:<16} worst infidelity {worst[INFIDELITY]:.3e} (tolerance {worst[TOLERANCE]:.0e})")

        failures = [row for row in rows if not row[OK]]
        if failures:
            worst = max(failures, key=lambda row: row[INFIDELITY] / row[TOLERANCE])
            point = dict(zip(COLUMNS[:INFIDELITY], worst[:INFIDELITY]))
            raise ToleranceViolationError(point, worst[INFIDELITY], worst[TOLERANCE])
        return 0
