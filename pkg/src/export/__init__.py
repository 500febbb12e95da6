"""
LDSC Export Package

Modules:
- formatters: workbook formatting (autofilter, column widths, frozen header)
- excel: frames to a formatted .xlsx workbook
- reports: report objects to JSON / CSV / Excel
"""

from src.export.formatters import ExcelFormatter
from src.export.excel import ExcelExporter
from src.export.reports import ReportExporter, report_frames, row_frame

__all__ = [
    'ExcelFormatter',
    'ExcelExporter',
    'ReportExporter',
    'report_frames',
    'row_frame',
]
