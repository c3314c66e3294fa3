"""
Causal state machine entities
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from core.exceptions import ArgumentError
from domains.enums import HomogeneityTest, ProcessKind

SYMBOLS = (0, 1)


@dataclass(frozen=True, eq=False)
class SuffixStats:
    """Next-symbol counts for every observed history of length <= max_length"""
    max_length: int
    next_counts: Dict[str, np.ndarray]

    def counts(self, suffix: str) -> np.ndarray:
        """[followed by 0, followed by 1]; zeros when never observed"""
        found = self.next_counts.get(suffix)
        return found.copy() if found is not None else np.zeros(2, dtype=np.int64)

    def count(self, suffix: str) -> int:
        return int(self.counts(suffix).sum())

    def distribution(self, suffix: str) -> Optional[np.ndarray]:
        counts = self.counts(suffix)
        total = counts.sum()
        return counts / total if total else None

    def suffixes(self, length: int) -> List[str]:
        return sorted(s for s in self.next_counts if len(s) == length)

    def __contains__(self, suffix: str) -> bool:
        return suffix in self.next_counts


@dataclass(frozen=True, eq=False)
class CausalStateModel:
    """
    Inferred causal state model.

    emit holds P(X = 1 | S = s); transitions is the deterministic partial map
    (state, symbol) -> state; suffix_map assigns observed histories to states.
    """
    states: Tuple[str, ...]
    emit: Dict[str, float]
    transitions: Dict[Tuple[str, int], str]
    suffix_map: Dict[str, str]
    history_length: int
    alpha: float = 0.001
    test: HomogeneityTest = HomogeneityTest.CHI_SQUARED
    state_counts: Dict[str, Tuple[int, int]] = field(default_factory=dict)

    @property
    def n_states(self) -> int:
        return len(self.states)

    def successor(self, state: str, symbol: int) -> Optional[str]:
        return self.transitions.get((state, int(symbol)))

    def emit_distribution(self, state: str) -> np.ndarray:
        p = self.emit[state]
        return np.array([1.0 - p, p])

    def transition_matrix(self) -> np.ndarray:
        """Symbol-marginalized state transition matrix, rows renormalized over kept edges"""
        index = {s: i for i, s in enumerate(self.states)}
        matrix = np.zeros((self.n_states, self.n_states))
        for state in self.states:
            dist = self.emit_distribution(state)
            for symbol in SYMBOLS:
                target = self.successor(state, symbol)
                if target is not None and dist[symbol] > 0:
                    matrix[index[state], index[target]] += dist[symbol]
        row_sums = matrix.sum(axis=1, keepdims=True)
        empty = row_sums[:, 0] == 0
        matrix[empty, np.flatnonzero(empty)] = 1.0
        row_sums[empty] = 1.0
        return matrix / row_sums


@dataclass(frozen=True, eq=False)
class ProcessSpec:
    """Ground-truth unifilar generator: (state, symbol) -> (next state, probability)"""
    kind: ProcessKind
    states: Tuple[str, ...]
    transitions: Dict[Tuple[str, int], Tuple[str, float]]
    start: Optional[str] = None
    params: Dict[str, Union[float, str]] = field(default_factory=dict)

    def __post_init__(self):
        if not self.states:
            raise ArgumentError("A process spec needs at least one state")
        for (state, symbol), (target, prob) in self.transitions.items():
            if state not in self.states or target not in self.states:
                raise ArgumentError(f"Edge {state}-{symbol}->{target} uses an unknown state")
            if symbol not in SYMBOLS:
                raise ArgumentError(f"Symbol {symbol} is not binary")
            if not 0.0 <= prob <= 1.0:
                raise ArgumentError(f"Invalid probability {prob} on edge {state}-{symbol}")
        for state in self.states:
            total = sum(self.edge_probability(state, symbol) for symbol in SYMBOLS)
            if abs(total - 1.0) > 1e-9:
                raise ArgumentError(f"Outgoing probabilities of state {state} sum to {total}")
        if self.start is not None and self.start not in self.states:
            raise ArgumentError(f"Unknown start state {self.start}")

    @property
    def n_states(self) -> int:
        return len(self.states)

    def edge_probability(self, state: str, symbol: int) -> float:
        edge = self.transitions.get((state, symbol))
        return edge[1] if edge else 0.0

    def emit_probability(self, state: str) -> float:
        """P(X = 1 | S = state)"""
        return self.edge_probability(state, 1)

    def transition_matrix(self) -> np.ndarray:
        index = {s: i for i, s in enumerate(self.states)}
        matrix = np.zeros((self.n_states, self.n_states))
        for (state, _), (target, prob) in self.transitions.items():
            matrix[index[state], index[target]] += prob
        return matrix
