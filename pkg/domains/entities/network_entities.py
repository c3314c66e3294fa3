"""
Echo state network entities
"""
from dataclasses import dataclass, replace
from typing import TYPE_CHECKING, Optional

import numpy as np

if TYPE_CHECKING:
    from dtos.config_dto import EsnConfig


@dataclass(eq=False)
class EchoStateModel:
    """
    Reservoir, input and feedback weights plus the trained readout.

    `y` is the all-zero reset state until the first step; every state produced
    by a step lies strictly inside (0, 1).
    """
    config: "EsnConfig"
    W: np.ndarray  # n_reservoir x n_reservoir
    W_in: np.ndarray  # n_reservoir x n_inputs
    W_fb: np.ndarray  # n_reservoir
    W_out: Optional[np.ndarray] = None  # n_inputs + n_reservoir
    y: Optional[np.ndarray] = None
    z_prev: float = 0.0

    def __post_init__(self):
        if self.y is None:
            self.y = np.zeros(self.W.shape[0])

    @property
    def n_reservoir(self) -> int:
        return int(self.W.shape[0])

    @property
    def n_inputs(self) -> int:
        return int(self.W_in.shape[1])

    @property
    def is_trained(self) -> bool:
        return self.W_out is not None

    def reset_state(self) -> None:
        self.y = np.zeros(self.n_reservoir)
        self.z_prev = 0.0

    def clone(self) -> "EchoStateModel":
        """Copy sharing the (read-only) weights with a private running state"""
        return replace(self, y=self.y.copy())
