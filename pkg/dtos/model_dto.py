# dtos/model_dto.py
"""
Persisted model and event DTOs
"""
from typing import Any, Dict, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field, field_validator

from domains.entities import CausalStateModel, EchoStateModel, EventLog
from domains.enums import HomogeneityTest
from dtos.config_dto import EsnConfig


class TransitionDTO(BaseModel):
    state: str
    symbol: int = Field(ge=0, le=1)
    target: str


class CausalStateModelDTO(BaseModel):
    """JSON form of a causal state model (inferred or ground truth)"""
    model_type: Literal["causal_state_model"] = "causal_state_model"
    states: List[str]
    emit: Dict[str, float]
    transitions: List[TransitionDTO] = Field(default_factory=list)
    suffix_map: Dict[str, str] = Field(default_factory=dict)
    history_length: int = Field(ge=0)
    alpha: float = Field(gt=0.0, lt=1.0)
    test: HomogeneityTest = HomogeneityTest.CHI_SQUARED
    state_counts: Dict[str, Tuple[int, int]] = Field(default_factory=dict)
    metadata: Dict[str, Any] = Field(default_factory=dict)

    @field_validator("emit")
    @classmethod
    def validate_emit(cls, v):
        for state, p in v.items():
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"Emit probability {p} of state {state} outside [0, 1]")
        return v

    @classmethod
    def from_entity(
        cls, model: CausalStateModel, metadata: Optional[Dict[str, Any]] = None
    ) -> "CausalStateModelDTO":
        return cls(
            states=list(model.states),
            emit={s: float(model.emit[s]) for s in model.states},
            transitions=[
                TransitionDTO(state=s, symbol=x, target=t)
                for (s, x), t in sorted(model.transitions.items())
            ],
            suffix_map=dict(sorted(model.suffix_map.items(), key=lambda kv: (len(kv[0]), kv[0]))),
            history_length=model.history_length,
            alpha=model.alpha,
            test=model.test,
            state_counts={s: tuple(c) for s, c in model.state_counts.items()},
            metadata=metadata or {},
        )

    def to_entity(self) -> CausalStateModel:
        return CausalStateModel(
            states=tuple(self.states),
            emit=dict(self.emit),
            transitions={(t.state, t.symbol): t.target for t in self.transitions},
            suffix_map=dict(self.suffix_map),
            history_length=self.history_length,
            alpha=self.alpha,
            test=self.test,
            state_counts={s: tuple(c) for s, c in self.state_counts.items()},
        )


class EchoStateModelDTO(BaseModel):
    """JSON form of an echo state network; matrices row-major"""
    model_type: Literal["echo_state_model"] = "echo_state_model"
    config: EsnConfig
    W: List[List[float]]
    W_in: List[List[float]]
    W_fb: List[float]
    W_out: Optional[List[float]] = None

    @classmethod
    def from_entity(cls, model: EchoStateModel) -> "EchoStateModelDTO":
        return cls(
            config=model.config,
            W=model.W.tolist(),
            W_in=model.W_in.tolist(),
            W_fb=model.W_fb.tolist(),
            W_out=model.W_out.tolist() if model.W_out is not None else None,
        )

    def to_entity(self) -> EchoStateModel:
        return EchoStateModel(
            config=self.config,
            W=np.array(self.W, dtype=float),
            W_in=np.array(self.W_in, dtype=float),
            W_fb=np.array(self.W_fb, dtype=float),
            W_out=np.array(self.W_out, dtype=float) if self.W_out is not None else None,
        )


class EventLogDTO(BaseModel):
    """One JSON-lines event record"""
    user_id: str
    timestamps: List[float]

    @field_validator("user_id")
    @classmethod
    def validate_user_id(cls, v):
        if not v or not v.strip():
            raise ValueError("user_id cannot be empty")
        return v.strip()

    def to_entity(self) -> EventLog:
        return EventLog(user_id=self.user_id, timestamps=np.asarray(self.timestamps))
