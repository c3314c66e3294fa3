# repositories/report_repository.py
"""
CSV and JSON report writers
"""
from pathlib import Path
from typing import Any, Iterable, List, Sequence, Tuple
import csv
import logging

from domains.entities import BitflipPoint, BitflipSummaryRow, CrossValidationResult, EvaluationRow
from dtos.report_dto import BitflipSummaryDTO, EvaluationRowDTO, EvaluationSummaryDTO

logger = logging.getLogger(__name__)


def format_value(value: Any) -> str:
    """Shortest round-trip text for floats, empty for missing values"""
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


class ReportRepository:
    """Writes every tabular output of the command line"""

    @staticmethod
    def _write_csv(path: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> int:
        count = 0
        with open(path, "w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                writer.writerow([format_value(v) for v in row])
                count += 1
        logger.info(f"✅ Wrote {count} rows to {path}")
        return count

    @staticmethod
    def write_evaluation(path: str, rows: Sequence[EvaluationRow]) -> int:
        header = list(EvaluationRowDTO.model_fields)
        dtos = [EvaluationRowDTO.from_row(r) for r in sorted(rows, key=lambda r: r.series_id)]
        return ReportRepository._write_csv(
            path, header, ([getattr(d, f) for f in header] for d in dtos)
        )

    @staticmethod
    def write_bitflip(path: str, rows: Sequence[BitflipSummaryRow]) -> int:
        header = list(BitflipSummaryDTO.model_fields)
        dtos = [BitflipSummaryDTO.from_row(r) for r in rows]
        return ReportRepository._write_csv(
            path, header, ([getattr(d, f) for f in header] for d in dtos)
        )

    @staticmethod
    def write_bitflip_tables(path: str, tables: Sequence[Tuple[str, List[BitflipPoint]]]) -> int:
        """Per-series bit-flip accuracies"""
        rows = (
            (series_id, p.q, p.csm_accuracy, p.esn_accuracy)
            for series_id, points in sorted(tables, key=lambda t: t[0])
            for p in points
        )
        return ReportRepository._write_csv(path, ("series_id", "q", "csm_acc", "esn_acc"), rows)

    @staticmethod
    def write_cv(path: str, results: Sequence[Tuple[str, CrossValidationResult]]) -> int:
        rows = (
            (series_id, L, score, int(L == result.selected_L))
            for series_id, result in sorted(results, key=lambda t: t[0])
            for L, score in sorted(result.mean_accuracy.items())
        )
        return ReportRepository._write_csv(path, ("series_id", "L", "mean_accuracy", "selected"), rows)

    @staticmethod
    def write_entropy_table(path: str, table: Sequence[Tuple[int, float]]) -> int:
        return ReportRepository._write_csv(path, ("L", "H_L"), table)

    @staticmethod
    def write_rates(path: str, rates: Sequence[Tuple[str, float, float]]) -> int:
        return ReportRepository._write_csv(
            path, ("user_id", "tweet_rate", "seconds_tweet_rate"), rates
        )

    @staticmethod
    def write_summary(path: str, summary: EvaluationSummaryDTO) -> None:
        Path(path).write_text(summary.model_dump_json(indent=2) + "\n", encoding="utf-8")
        logger.info(f"✅ Wrote summary to {path}")
