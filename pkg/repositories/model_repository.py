# repositories/model_repository.py
"""
Model JSON repository
"""
from pathlib import Path
from typing import Any, Dict, Optional, Union
import json
import logging

from pydantic import ValidationError

from core.exceptions import DataError
from domains.entities import CausalStateModel, EchoStateModel
from dtos.model_dto import CausalStateModelDTO, EchoStateModelDTO

logger = logging.getLogger(__name__)


class ModelRepository:
    """Saves and loads causal state models and echo state networks"""

    @staticmethod
    def save_causal_state_model(
        path: str, model: CausalStateModel, metadata: Optional[Dict[str, Any]] = None
    ) -> None:
        dto = CausalStateModelDTO.from_entity(model, metadata)
        Path(path).write_text(dto.model_dump_json(indent=2) + "\n", encoding="utf-8")
        logger.info(f"✅ Saved {model.n_states}-state model to {path}")

    @staticmethod
    def save_echo_state_model(path: str, model: EchoStateModel) -> None:
        dto = EchoStateModelDTO.from_entity(model)
        Path(path).write_text(dto.model_dump_json() + "\n", encoding="utf-8")
        logger.info(f"✅ Saved {model.n_reservoir}-node network to {path}")

    @staticmethod
    def load(path: str) -> Union[CausalStateModel, EchoStateModel]:
        """Load either model type, dispatching on `model_type`"""
        file = Path(path)
        if not file.exists():
            raise FileNotFoundError(f"Model file not found: {path}")
        try:
            data = json.loads(file.read_text(encoding="utf-8"))
            if data.get("model_type") == "echo_state_model":
                return EchoStateModelDTO(**data).to_entity()
            return CausalStateModelDTO(**data).to_entity()
        except (json.JSONDecodeError, AttributeError, ValidationError) as e:
            raise DataError(f"Invalid model file {path}: {e}") from e
