"""Report and table writers.

report.json   summary, per-sample records and ROC points
report.csv    per-sample dump (id, score, label, prediction, config_hash),
              with the ROC series next to it in <stem>_roc.csv
table.csv     one row per method with metrics, ablation flags and components
*.md          rendered from the templates directory
"""

import csv
import json
from collections.abc import Sequence
from dataclasses import asdict
from functools import lru_cache
from pathlib import Path
from typing import Any

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from components.domain__evaluation.entities import MetricsReport, ReportFormat, TableRow
from components.domain__evaluation.errors import EvaluationError

FLAG_COLUMNS = ("use_combiner", "use_two_stage", "use_textual_inversion")
FLAG_TITLES = {"use_combiner": "Combiner", "use_two_stage": "2-stage", "use_textual_inversion": "TI"}


def format_number(value: float) -> str:
    """17 significant digits, enough for an exact float64 round trip."""
    return f"{value:.17g}"


@lru_cache
def get_environment() -> Environment:
    environment = Environment(
        loader=FileSystemLoader(Path(__file__).resolve().parent / "templates"),
        undefined=StrictUndefined,
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
    )
    environment.filters["percent"] = lambda value: f"{100.0 * value:.2f}"
    environment.filters["digits"] = format_number
    environment.globals["flag_title"] = FLAG_TITLES.get
    return environment


def _write_text(path: Path, text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    return path


def _write_csv(path: Path, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    return path


def report_payload(report: MetricsReport) -> dict[str, Any]:
    return {
        "split": report.split,
        "n": report.n,
        "accuracy": report.accuracy,
        "auroc": report.auroc,
        "config_hash": report.config_hash,
        "notes": list(report.notes),
        "records": [asdict(record) for record in report.records],
        "roc_points": [asdict(point) for point in report.roc_points],
    }


def roc_path_for(path: Path) -> Path:
    path = Path(path)
    return path.with_name(f"{path.stem}_roc.csv")


def emit_report(report: MetricsReport, format: ReportFormat, path: Path) -> Path:
    if format == "json":
        return _write_text(path, json.dumps(report_payload(report), indent=2) + "\n")
    if format == "csv":
        _write_csv(
            roc_path_for(path),
            ("fpr", "tpr"),
            [(format_number(point.fpr), format_number(point.tpr)) for point in report.roc_points],
        )
        return _write_csv(
            path,
            ("id", "score", "label", "prediction", "config_hash"),
            [
                (record.id, format_number(record.score), record.label, record.prediction, report.config_hash)
                for record in report.records
            ],
        )
    if format == "markdown":
        return _write_text(path, get_environment().get_template("report.md.j2").render(report=report))
    raise EvaluationError(f"Unknown report format {format!r}")


def emit_table(rows: Sequence[TableRow], format: ReportFormat, path: Path) -> Path:
    if format == "json":
        return _write_text(path, json.dumps([asdict(row) for row in rows], indent=2) + "\n")
    if format == "csv":
        return _write_csv(
            path,
            ("method", "accuracy", "auroc", *FLAG_COLUMNS, "components", "config_hash"),
            [
                (
                    row.method,
                    format_number(row.accuracy),
                    format_number(row.auroc),
                    *(int(row.flags.get(flag, False)) for flag in FLAG_COLUMNS),
                    " ".join(row.components),
                    row.config_hash,
                )
                for row in rows
            ],
        )
    if format == "markdown":
        flags = [flag for flag in FLAG_COLUMNS if any(flag in row.flags for row in rows)]
        text = get_environment().get_template("table.md.j2").render(rows=rows, flags=flags)
        return _write_text(path, text)
    raise EvaluationError(f"Unknown table format {format!r}")


def summary_lines(report: MetricsReport) -> list[str]:
    """Two-column key=value summary printed on stdout."""
    return [
        f"split={report.split}",
        f"n={report.n}",
        f"accuracy={format_number(report.accuracy)}",
        f"auroc={format_number(report.auroc)}",
        f"config_hash={report.config_hash}",
    ]
