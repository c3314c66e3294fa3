"""
Model-related enums
"""
from enum import Enum


class HomogeneityTest(str, Enum):
    CHI_SQUARED = "chi-squared"
    KS = "ks"


class ProcessKind(str, Enum):
    BERNOULLI = "bernoulli"
    BURSTING = "bursting"
    THREE_STATE = "three_state"
    FOUR_STATE = "four_state"
    PERIODIC = "periodic"

    @property
    def n_states(self) -> int:
        """Number of recurrent states for the fixed topologies (0 when pattern-dependent)"""
        counts = {
            ProcessKind.BERNOULLI: 1,
            ProcessKind.BURSTING: 2,
            ProcessKind.THREE_STATE: 3,
            ProcessKind.FOUR_STATE: 4,
            ProcessKind.PERIODIC: 0,
        }
        return counts[self]


class EntropyEstimator(str, Enum):
    PER_SYMBOL = "per_symbol"
    CONDITIONAL = "conditional"


class EsnFeedback(str, Enum):
    """Value fed back to the reservoir at prediction time"""

    OBSERVED = "observed"  # clipped previous bit, as in training
    PREDICTED = "predicted"  # clipped rounding of the previous output
