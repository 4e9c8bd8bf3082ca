import csv
import io
from pathlib import Path

from loguru import logger

from config import GKP_VERSION


def format_cell(value, digits: int = 12) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value + 0.0:.{digits}g}"
    return str(value)


def render_table(command: str, digest: str, columns: list, rows: list, digits: int = 12) -> str:
    """'#' metadata lines, a header row, then rows; no timestamps."""
    buffer = io.StringIO()
    buffer.write(f"# tool: gkp-kerr {GKP_VERSION}\n")
    buffer.write(f"# command: {command}\n")
    buffer.write(f"# config_sha256: {digest}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_cell(value, digits) for value in row])
    return buffer.getvalue()


def write_table(path: Path, command: str, digest: str, columns: list, rows: list, digits: int = 12) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_table(command, digest, columns, rows, digits), encoding="utf-8")
    logger.info(f"   wrote {len(rows)} rows to {path}")
    return path


def sidecar_path(path: Path, suffix: str) -> Path:
    path = Path(path)
    return path.with_name(f"{path.stem}_{suffix}{path.suffix or '.csv'}")
