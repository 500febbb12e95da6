"""
Excel export for LDSC reports.

Single Responsibility: Write named report frames to one workbook ONLY
- One sheet per frame (sheet names cut to Excel's 31 characters)
- Hands the file to ExcelFormatter afterwards
- Does NOT decide which frames a report has (reports.report_frames does this)
"""

from pathlib import Path
from typing import Mapping, Optional, Union

import pandas as pd

from src.export.formatters import ExcelFormatter
from src.utils.file_utils import ensure_directory
from src.utils.log_utils import log_file_operation, log_frame_shape
from src.utils.logger import get_logger

logger = get_logger(__name__)

# Excel sheet-name limit
SHEET_NAME_LIMIT = 31


class ExcelExporter:
    """
    Writes frames to an .xlsx workbook with the openpyxl engine.

    Responsibilities:
    - Create the output directory
    - Write every non-empty frame to its own sheet
    - Apply workbook formatting

    Does NOT:
    - Run experiments or shape report data
    """

    def __init__(self, formatter: Optional[ExcelFormatter] = None):
        self.formatter = formatter or ExcelFormatter()

    def export_frames(self, frames: Mapping[str, pd.DataFrame], output_path: Union[str, Path]) -> Path:
        """
        Write frames to output_path, one sheet each.

        Returns:
            Path of the written workbook

        Example:
            ExcelExporter().export_frames({'summary': df}, 'outputs/bench.xlsx')
        """
        path = Path(output_path)
        ensure_directory(path.parent)

        with pd.ExcelWriter(path, engine='openpyxl') as writer:
            for name, frame in frames.items():
                if frame.empty:
                    logger.debug(f"Skipping empty sheet '{name}'")
                    continue
                sheet_name = name[:SHEET_NAME_LIMIT]
                frame.to_excel(writer, sheet_name=sheet_name, index=False)
                log_frame_shape(logger, f"sheet '{sheet_name}'", frame, action='Exported')

        self.formatter.format_workbook(path)
        log_file_operation(logger, 'Saved workbook', path)
        return path


__all__ = ['ExcelExporter']
