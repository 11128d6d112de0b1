import csv
import io
import json
import logging
import sys
from typing import Mapping, Optional, Union

from .audit import CHECK_NAMES, AuditReport
from .errors import InvalidParameter, IoError
from .report import DavenportReport

logger = logging.getLogger(__name__)

FORMATS = ('json', 'csv', 'text')
AUDIT_CSV_HEADER = ['gap_id', 'name', 'order', 'd', 'beta', 'D'] + list(CHECK_NAMES)
LEVEL_CSV_HEADER = ['group', 'kind', 'k', 'count', 'classes']

Report = Union[DavenportReport, AuditReport, Mapping]


def _blank(value) -> str:
    return '' if value is None else str(value)


def to_json(report: Report, include_timing: bool = False) -> str:
    """Keys sorted, non-ASCII kept, newline-terminated."""
    if isinstance(report, DavenportReport):
        document = report.to_dict(include_timing=include_timing)
    elif isinstance(report, AuditReport):
        document = report.to_dict()
    else:
        document = dict(report)
    return json.dumps(document, sort_keys=True, ensure_ascii=False, indent=2) + '\n'


def to_csv(report: Report) -> str:
    """
    One row per group for audit reports, one row per level for Davenport reports, a key row and a value row for mappings.

    Audit rows carry the status of every check in its own column, empty when the check was not run for the group.

    Args:
        report (Report): The report.

    Returns:
        str: The CSV document with a header line.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    if isinstance(report, AuditReport):
        writer.writerow(AUDIT_CSV_HEADER)
        for row in report.rows:
            writer.writerow([f"{row.gap_id[0]}:{row.gap_id[1]}", row.name, row.order,
                             _blank(row.d), _blank(row.beta), _blank(row.D)]
                            + [_blank(row.status_of(name)) for name in CHECK_NAMES])
    elif isinstance(report, DavenportReport):
        writer.writerow(LEVEL_CSV_HEADER)
        for stats in report.levels:
            writer.writerow([report.group_name, report.kind.value, stats.k, stats.count, stats.classes])
    else:
        writer.writerow(list(report))
        writer.writerow([_blank(value) for value in report.values()])
    return buffer.getvalue()


def to_text(report: Report, include_timing: bool = False) -> str:
    if isinstance(report, AuditReport):
        return _audit_text(report)
    if not isinstance(report, DavenportReport):
        return ''.join(f"{key}: {value}\n" for key, value in report.items())
    lines = [f"{report.group_name} (order {report.order}): {report.kind.value} Davenport constant = {report.constant}"
             + ("" if report.complete else " (incomplete)")]
    for stats in report.levels:
        lines.append(f"  k={stats.k:<3} count={stats.count:<10} classes={stats.classes}")
    lines.append(f"  total count={report.total_count()} classes={report.total_classes()}")
    if include_timing:
        lines.append(f"  wall time {report.wall_time:.3f}s")
    return '\n'.join(lines) + '\n'


def _audit_text(report: AuditReport) -> str:
    header = f"{'GAP id':<9} {'G':<14} {'d':>3} {'beta':>5} {'D':>4}  checks"
    lines = [header, '-' * len(header)]
    for row in report.rows:
        failed = [f"{check.name}: {check.status()} ({check.detail})" for check in row.checks if check.status() != 'pass']
        gap_id = f"({row.gap_id[0]},{row.gap_id[1]})"
        lines.append(f"{gap_id:<9} {row.name:<14} {_blank(row.d):>3} {_blank(row.beta):>5} {_blank(row.D):>4}  "
                     + ('; '.join(failed) if failed else 'ok'))
    lines.append(f"{len(report.rows)} groups, {len(report.failures())} failing checks")
    return '\n'.join(lines) + '\n'


def render(report: Report, fmt: str, include_timing: bool = False) -> str:
    if fmt == 'json':
        return to_json(report, include_timing)
    if fmt == 'csv':
        return to_csv(report)
    if fmt == 'text':
        return to_text(report, include_timing)
    raise InvalidParameter(f"unknown output format {fmt!r}, expected one of {FORMATS}")


def emit(report: Report, fmt: str = 'text', path: Optional[str] = None, include_timing: bool = False) -> str:
    """
    Write a report in one of the output formats.

    Args:
        report (Report): A Davenport report, an audit report or a mapping of plain values.
        fmt (str): "json", "csv" or "text".
        path (Optional[str]): Output file, standard output if None.
        include_timing (bool): Add wall times to JSON and text output.

    Returns:
        str: The written document.

    Raises:
        IoError: If the file cannot be written.
    """
    document = render(report, fmt, include_timing)
    if path is None:
        sys.stdout.write(document)
        return document
    try:
        with open(path, 'w', encoding='utf-8', newline='') as handle:
            handle.write(document)
    except OSError as error:
        raise IoError(f"cannot write {path}: {error}") from error
    logger.debug("wrote %s report to %s", fmt, path)
    return document
