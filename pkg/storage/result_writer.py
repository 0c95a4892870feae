"""Writers for survey tables, presentations and verification reports."""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, TextIO, Union

import pandas as pd
from jsonschema import ValidationError, validate

from config import ConfigParser
from config.config_schema import VERIFY_REPORT_SCHEMA
from core.exceptions import ConfigValidationError
from core.pipeline import SURVEY_COLUMNS, SurveyRow
from suites.report import SuiteReport


logger = logging.getLogger(__name__)

Destination = Union[str, Path, TextIO]


def survey_frame(rows: Iterable[SurveyRow]) -> pd.DataFrame:
    """Rows in the fixed survey column order."""
    return pd.DataFrame([r.to_dict() for r in rows], columns=list(SURVEY_COLUMNS))


def virdim_multiset(frame: pd.DataFrame) -> Dict[str, int]:
    """How often each virtual dimension occurs, finite values first."""
    counts = frame["virdim"].value_counts()

    def order(key: str) -> Any:
        return (0, int(key)) if key.isdigit() else (1, key)

    return {k: int(counts[k]) for k in sorted(counts.index, key=order)}


class ResultWriter:
    """Serializes run output as TSV or UTF-8 JSON with sorted keys."""

    def __init__(self, parser: Optional[ConfigParser] = None):
        self.parser = parser or ConfigParser()

    def write_survey_tsv(self, rows: List[SurveyRow], destination: Destination) -> pd.DataFrame:
        frame = survey_frame(rows)
        text = frame.to_csv(sep="\t", index=False)
        self._write_text(text, destination)
        logger.info(f"Wrote survey table with {len(frame)} rows")
        return frame

    def survey_footer(self, frame: pd.DataFrame) -> str:
        """One line per distinct virdim, for the end of the survey output."""
        return "\n".join(f"# virdim {k}: {n}" for k, n in virdim_multiset(frame).items())

    def write_presentation_json(self, data: Dict[str, Any], destination: Destination) -> None:
        self.parser.validate_presentation(data)
        self._write_json(data, destination)

    def write_report_json(self, reports: List[SuiteReport], destination: Destination) -> None:
        payload = [r.to_dict() for r in reports]
        for item in payload:
            try:
                validate(instance=item, schema=VERIFY_REPORT_SCHEMA)
            except ValidationError as e:
                logger.error(f"Report for suite {item.get('suite')} is malformed: {e.message}")
                raise ConfigValidationError(f"Report is malformed: {e.message}") from e
        self._write_json(payload[0] if len(payload) == 1 else payload, destination)

    def _write_json(self, data: Any, destination: Destination) -> None:
        self._write_text(json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n", destination)

    def _write_text(self, text: str, destination: Destination) -> None:
        if isinstance(destination, (str, Path)):
            path = Path(destination)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
        else:
            destination.write(text)
