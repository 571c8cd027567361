import csv
import io
import os
from typing import List, Union

from .._exceptions import FormatError, InvalidArgumentError, ReportIOError
from .._misc import _json_dumps, _json_loads, _require, _write_text_file
from .EvalReport import EvalReport, PairResult
from ._evaluate import _aggregate

REPORT_FORMATS = ('csv', 'json')
CSV_COLUMNS = ('class_i', 'class_j', 'accuracy', 'tp', 'fp', 'fn', 'tn')
REPORT_FORMAT_VERSION = 1


def _report_format_for(path: str, format: Union[str, None]) -> str:
    if format is None:
        ext = os.path.splitext(path)[1].lower().lstrip('.')
        format = ext if ext in REPORT_FORMATS else 'csv'
    if format not in REPORT_FORMATS:
        raise InvalidArgumentError(f'Unknown report format: {format} (expected one of {REPORT_FORMATS})')
    return format

def _report_to_dict(report: EvalReport) -> dict:
    return {
        'format_version': REPORT_FORMAT_VERSION,
        'dataset_id': report.dataset_id,
        'network_kind': report.network_kind,
        'config': report.config,
        'rows': [r.to_dict() for r in report.rows],
        'aggregates': report.aggregates.to_dict()
    }

def _report_to_csv(report: EvalReport) -> str:
    buf = io.StringIO()
    # config echo on leading comment lines
    buf.write(f'# dataset_id: {report.dataset_id}\n')
    buf.write(f'# network_kind: {report.network_kind}\n')
    buf.write(f'# config: {_json_dumps(report.config)}\n')
    w = csv.writer(buf, lineterminator='\n')
    w.writerow(CSV_COLUMNS)
    for r in report.rows:
        d = r.to_dict()
        w.writerow([repr(d[c]) if isinstance(d[c], float) else d[c] for c in CSV_COLUMNS])
    return buf.getvalue()

def _write_report(report: EvalReport, path: str, format: Union[str, None]=None) -> None:
    format = _report_format_for(path, format)
    text = _json_dumps(_report_to_dict(report), indent=2) if format == 'json' else _report_to_csv(report)
    try:
        _write_text_file(path, text)
    except OSError as e:
        raise ReportIOError(f'Unable to write report to {path}: {e}')

def _read_report(path: str, format: Union[str, None]=None) -> EvalReport:
    format = _report_format_for(path, format)
    try:
        with open(path, 'r') as f:
            text = f.read()
    except OSError as e:
        raise ReportIOError(f'Unable to read report {path}: {e}')
    if format == 'json':
        x = _json_loads(text, what='report')
        rows = [PairResult.from_dict(r) for r in _require(x, 'rows', what='report')]
        dataset_id = str(_require(x, 'dataset_id', what='report'))
        network_kind = str(_require(x, 'network_kind', what='report'))
        config = x.get('config', {})
        stored = x.get('aggregates', None)
        if stored is not None and len(rows) > 0 and stored != _aggregate(rows).to_dict():
            raise FormatError(f'Stored aggregates in {path} do not match its rows')
    else:
        header = {}
        lines: List[str] = []
        for line in text.splitlines():
            if line.startswith('# '):
                key, _, value = line[2:].partition(': ')
                header[key] = value
            elif line.strip() != '':
                lines.append(line)
        reader = csv.DictReader(lines)
        if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
            raise FormatError(f'Unexpected CSV columns in {path}: {reader.fieldnames}')
        rows = [PairResult.from_dict(r) for r in reader]
        dataset_id = header.get('dataset_id', '')
        network_kind = header.get('network_kind', '')
        config = _json_loads(header['config'], what='report config') if 'config' in header else {}
    return EvalReport(
        dataset_id=dataset_id,
        network_kind=network_kind,
        rows=tuple(rows),
        aggregates=_aggregate(rows),
        config=config
    )
