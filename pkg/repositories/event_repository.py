# repositories/event_repository.py
"""
Event file repository (CSV `user_id,epoch_second` or JSON lines)
"""
from collections import OrderedDict
from pathlib import Path
from typing import Dict, List, Optional
import json
import logging

from pydantic import ValidationError

from core.exceptions import DataError
from domains.entities import EventLog
from domains.enums import EventFormat
from dtos.model_dto import EventLogDTO

logger = logging.getLogger(__name__)


class EventRepository:
    """Reads per-user event logs; malformed lines and unsorted users are skipped with warnings"""

    @staticmethod
    def load(path: str, fmt: Optional[EventFormat] = None) -> List[EventLog]:
        """Event logs sorted by user id"""
        file = Path(path)
        if not file.exists():
            raise FileNotFoundError(f"Events file not found: {path}")
        fmt = EventFormat(fmt) if fmt else EventFormat.from_path(path)

        with file.open("r", encoding="utf-8") as handle:
            lines = handle.readlines()

        if fmt is EventFormat.JSONL:
            logs = EventRepository._parse_jsonl(lines, path)
        else:
            logs = EventRepository._parse_csv(lines, path)

        if not logs:
            raise DataError(f"No valid users in {path}")
        logger.info(f"✅ Loaded {len(logs)} users from {path}")
        return sorted(logs, key=lambda log: log.user_id)

    @staticmethod
    def _parse_csv(lines: List[str], path: str) -> List[EventLog]:
        stamps: Dict[str, List[float]] = OrderedDict()
        first_record = True
        for number, raw in enumerate(lines, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = [p.strip() for p in line.split(",")]
            header_allowed, first_record = first_record, False
            if len(parts) != 2 or not parts[0]:
                logger.warning(f"{path}:{number}: expected `user_id,epoch_second`, skipping")
                continue
            try:
                value = float(parts[1])
            except ValueError:
                if header_allowed:
                    continue  # header
                logger.warning(f"{path}:{number}: invalid timestamp {parts[1]!r}, skipping")
                continue
            stamps.setdefault(parts[0], []).append(value)

        logs = []
        for user_id, values in stamps.items():
            try:
                logs.append(EventLog(user_id=user_id, timestamps=values))
            except DataError as e:
                logger.warning(f"{path}: rejecting user {user_id}: {e}")
        return logs

    @staticmethod
    def _parse_jsonl(lines: List[str], path: str) -> List[EventLog]:
        logs = []
        for number, raw in enumerate(lines, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                logs.append(EventLogDTO(**json.loads(line)).to_entity())
            except (json.JSONDecodeError, TypeError, ValidationError) as e:
                logger.warning(f"{path}:{number}: malformed record, skipping: {e}")
            except DataError as e:
                logger.warning(f"{path}:{number}: rejecting record: {e}")
        return logs
