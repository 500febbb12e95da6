"""
Workbook formatting for LDSC report exports.

Single Responsibility: Format written workbooks ONLY
- Autofilter over each sheet's data range
- Column widths fitted to content
- Frozen header row
- Does NOT build frames or write data (excel/reports do this)
"""

from pathlib import Path
from typing import Union

from openpyxl import load_workbook
from openpyxl.worksheet.worksheet import Worksheet

from src.utils.logger import get_logger

logger = get_logger(__name__)


class ExcelFormatter:
    """
    Formats report workbooks in place.

    Args:
        max_width: Widest column, in characters
        min_width: Narrowest column, in characters
    """

    def __init__(self, max_width: int = 50, min_width: int = 10):
        self.max_width = max_width
        self.min_width = min_width

    def format_workbook(self, file_path: Union[str, Path]) -> None:
        wb = load_workbook(file_path)
        for ws in wb.worksheets:
            self._format_sheet(ws)
        wb.save(file_path)
        wb.close()
        logger.debug(f"Formatted workbook: {file_path} ({len(wb.sheetnames)} sheets)")

    def _format_sheet(self, worksheet: Worksheet) -> None:
        if worksheet.max_row < 1 or worksheet.max_column < 1:
            return
        worksheet.auto_filter.ref = worksheet.dimensions
        worksheet.freeze_panes = 'A2'
        self._adjust_column_widths(worksheet)

    def _adjust_column_widths(self, worksheet: Worksheet) -> None:
        for column in worksheet.columns:
            longest = max((len(str(cell.value)) for cell in column if cell.value is not None), default=0)
            width = min(max(longest + 2, self.min_width), self.max_width)
            worksheet.column_dimensions[column[0].column_letter].width = width


__all__ = ['ExcelFormatter']
