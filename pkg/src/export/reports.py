"""
Report export: JSON, CSV and Excel renderings of experiment results.

Any object with to_dict() (BoundsReport, LengthStats, ScalingResult,
VerificationReport, ProtocolCostReport, SandwichResult, Transcript) can be
exported, alone or as a list (one row per report).

Frames:
- summary: one row per report holding its scalar fields; list fields of
  scalars are joined with spaces
- <field>: one frame per mapping field (key, value) or list-of-records field

CSV writes the "row" frame: the records of the first list-of-records field
with the report's scalar fields repeated on every row, or the summary row
when the report has no such field. The header row is the field names.

Usage:
    from src.export.reports import ReportExporter

    exporter = ReportExporter()
    exporter.export(stats, 'csv', 'outputs/mc.csv')
    text = exporter.render(report, 'json')
"""

from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import pandas as pd

from src.core.constants import REPORT_FORMATS
from src.core.errors import InvalidParameterError
from src.export.excel import ExcelExporter
from src.utils.file_utils import ensure_directory, save_json, to_json_text
from src.utils.log_utils import log_file_operation, log_frame_shape
from src.utils.logger import get_logger

logger = get_logger(__name__)

Report = Any
Reports = Union[Report, Sequence[Report]]


def _as_list(reports: Reports) -> List[Report]:
    if isinstance(reports, (list, tuple)):
        return list(reports)
    return [reports]


def _as_dict(report: Report) -> Dict[str, Any]:
    if isinstance(report, dict):
        return report
    return report.to_dict()


def _is_records(value: Any) -> bool:
    return isinstance(value, list) and bool(value) and all(isinstance(v, dict) for v in value)


def _split(data: Dict[str, Any]):
    scalars: Dict[str, Any] = {}
    tables: Dict[str, pd.DataFrame] = {}
    for key, value in data.items():
        if isinstance(value, dict):
            tables[key] = pd.DataFrame({'key': list(value.keys()), 'value': list(value.values())})
        elif _is_records(value):
            tables[key] = pd.DataFrame(value)
        elif isinstance(value, (list, tuple)):
            scalars[key] = ' '.join(str(v) for v in value)
        else:
            scalars[key] = value
    return scalars, tables


def report_frames(reports: Reports) -> Dict[str, pd.DataFrame]:
    """
    Summary frame plus one frame per table-valued field.

    Table frames of several reports are stacked with a 'report' column
    holding the report's position.
    """
    items = _as_list(reports)
    summary_rows = []
    tables: Dict[str, List[pd.DataFrame]] = {}
    for position, report in enumerate(items):
        scalars, report_tables = _split(_as_dict(report))
        summary_rows.append(scalars)
        for name, frame in report_tables.items():
            if len(items) > 1:
                frame.insert(0, 'report', position)
            tables.setdefault(name, []).append(frame)

    frames = {'summary': pd.DataFrame(summary_rows)}
    for name, parts in tables.items():
        frames[name] = pd.concat(parts, ignore_index=True)
    for name, frame in frames.items():
        log_frame_shape(logger, name, frame)
    return frames


def row_frame(reports: Reports) -> pd.DataFrame:
    """One row per trial group (see module docstring)."""
    rows = []
    for report in _as_list(reports):
        data = _as_dict(report)
        scalars, _ = _split(data)
        records = next((v for v in data.values() if _is_records(v)), None)
        if records is None:
            rows.append(scalars)
        else:
            rows.extend({**scalars, **record} for record in records)
    return pd.DataFrame(rows)


def _json_data(reports: Reports) -> Any:
    if isinstance(reports, (list, tuple)):
        return [_as_dict(r) for r in reports]
    return _as_dict(reports)


class ReportExporter:
    """
    Writes reports as JSON, CSV or Excel.

    Responsibilities:
    - Render reports to text (json, csv) for stdout
    - Write reports to files in any REPORT_FORMATS format

    Does NOT:
    - Run experiments
    - Format workbooks (ExcelFormatter via ExcelExporter does this)
    """

    def __init__(self, excel: Optional[ExcelExporter] = None):
        self.excel = excel or ExcelExporter()

    @staticmethod
    def check_format(fmt: str) -> str:
        if fmt not in REPORT_FORMATS:
            raise InvalidParameterError(f"Unknown report format '{fmt}', expected one of {list(REPORT_FORMATS)}")
        return fmt

    def render(self, reports: Reports, fmt: str = 'json') -> str:
        """
        Report text in json or csv.

        Raises:
            InvalidParameterError: For xlsx (binary) or unknown formats
        """
        self.check_format(fmt)
        if fmt == 'json':
            return to_json_text(_json_data(reports)) + '\n'
        if fmt == 'csv':
            return row_frame(reports).to_csv(index=False)
        raise InvalidParameterError("xlsx reports need an output path")

    def to_json(self, reports: Reports, path: Union[str, Path]) -> Path:
        path = Path(path)
        save_json(_json_data(reports), path, logger=logger)
        log_file_operation(logger, 'Saved report', path)
        return path

    def to_csv(self, reports: Reports, path: Union[str, Path]) -> Path:
        return self._write_text(self.render(reports, 'csv'), path)

    def to_excel(self, reports: Reports, path: Union[str, Path]) -> Path:
        return self.excel.export_frames(report_frames(reports), path)

    def export(self, reports: Reports, fmt: str, path: Union[str, Path]) -> Path:
        """Write reports to path in fmt."""
        writers = {'json': self.to_json, 'csv': self.to_csv, 'xlsx': self.to_excel}
        return writers[self.check_format(fmt)](reports, path)

    @staticmethod
    def _write_text(text: str, path: Union[str, Path]) -> Path:
        path = Path(path)
        ensure_directory(path.parent)
        path.write_text(text, encoding='utf-8')
        log_file_operation(logger, 'Saved report', path)
        return path


__all__ = ['ReportExporter', 'report_frames', 'row_frame']
