# services/synth_service.py
"""
Ground-truth unifilar generators and their analytic oracles
"""
from typing import Dict, List, Optional, Tuple
import logging

import networkx as nx
import numpy as np
from scipy.linalg import null_space

from core.exceptions import ArgumentError, ConfigurationError, NumericalError
from domains.entities import BinarySeries, CausalStateModel, ProcessSpec
from domains.enums import ProcessKind
from services.infotheory_service import InfoTheoryService
from utils.seeding import derive_seed

logger = logging.getLogger(__name__)

DEFAULT_PARAMS: Dict[ProcessKind, Dict[str, float]] = {
    ProcessKind.BERNOULLI: {"p": 0.5},
    ProcessKind.BURSTING: {"p_AA": 0.9, "p_PP": 0.8},
    ProcessKind.THREE_STATE: {"a_stay": 0.7, "p_to_a": 0.5, "r_stay": 0.8},
    ProcessKind.FOUR_STATE: {"a_stay": 0.7, "p_to_a": 0.5, "r_stay": 0.8, "i_to_a": 0.5},
}


def _check_probability(name: str, value: float) -> float:
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise ArgumentError(f"{name} must lie in [0, 1], got {value}")
    return value


def primitive_period(pattern: str) -> str:
    """Shortest block whose repetition reproduces `pattern`"""
    n = len(pattern)
    for d in range(1, n + 1):
        if n % d == 0 and pattern[:d] * (n // d) == pattern:
            return pattern[:d]
    return pattern


class SynthService:
    """Builds process specs, samples them and computes their exact properties"""

    @staticmethod
    def _edges(
        edges: List[Tuple[str, int, str, float]]
    ) -> Dict[Tuple[str, int], Tuple[str, float]]:
        # Zero-probability edges are left out of the machine
        return {(s, x): (t, p) for s, x, t, p in edges if p > 0}

    @staticmethod
    def make_spec(kind: ProcessKind, pattern: Optional[str] = None, **params: float) -> ProcessSpec:
        """Unifilar machine of the requested topology; missing parameters take defaults"""
        kind = ProcessKind(kind)
        if kind is ProcessKind.PERIODIC:
            return SynthService.periodic(pattern or "")

        unknown = set(params) - set(DEFAULT_PARAMS[kind])
        if unknown:
            raise ArgumentError(f"Unknown parameters for {kind.value}: {sorted(unknown)}")
        values = {**DEFAULT_PARAMS[kind], **params}
        values = {name: _check_probability(name, v) for name, v in values.items()}

        if kind is ProcessKind.BERNOULLI:
            p = values["p"]
            states = ("A",)
            edges = [("A", 1, "A", p), ("A", 0, "A", 1.0 - p)]
        elif kind is ProcessKind.BURSTING:
            p_aa, p_pp = values["p_AA"], values["p_PP"]
            states = ("A", "P")
            edges = [
                ("A", 1, "A", p_aa),
                ("A", 0, "P", 1.0 - p_aa),
                ("P", 0, "P", p_pp),
                ("P", 1, "A", 1.0 - p_pp),
            ]
        else:
            a_stay, p_to_a, r_stay = values["a_stay"], values["p_to_a"], values["r_stay"]
            p_down = "I" if kind is ProcessKind.FOUR_STATE else "R"
            edges = [
                ("A", 1, "A", a_stay),
                ("A", 0, "P", 1.0 - a_stay),
                ("P", 1, "A", p_to_a),
                ("P", 0, p_down, 1.0 - p_to_a),
                ("R", 0, "R", r_stay),
                ("R", 1, "A", 1.0 - r_stay),
            ]
            states = ("A", "P", "R")
            if kind is ProcessKind.FOUR_STATE:
                i_to_a = values["i_to_a"]
                edges += [("I", 1, "A", i_to_a), ("I", 0, "R", 1.0 - i_to_a)]
                states = ("A", "P", "I", "R")

        return ProcessSpec(
            kind=kind,
            states=states,
            transitions=SynthService._edges(edges),
            params=values,
        )

    @staticmethod
    def periodic(pattern: str) -> ProcessSpec:
        """Deterministic cycle through the primitive period of `pattern`"""
        if not pattern or set(pattern) - {"0", "1"}:
            raise ArgumentError(f"Periodic pattern must be a non-empty bitstring, got {pattern!r}")
        period = primitive_period(pattern)
        states = tuple(f"T{k}" for k in range(len(period)))
        transitions = {
            (states[k], int(bit)): (states[(k + 1) % len(period)], 1.0)
            for k, bit in enumerate(period)
        }
        return ProcessSpec(
            kind=ProcessKind.PERIODIC,
            states=states,
            transitions=transitions,
            params={"pattern": period},
        )

    @staticmethod
    def recurrent_states(spec: ProcessSpec) -> List[str]:
        """States of the attracting component (the first, in state order, if several)"""
        graph = nx.DiGraph()
        graph.add_nodes_from(spec.states)
        graph.add_edges_from(
            (s, t) for (s, _), (t, p) in spec.transitions.items() if p > 0
        )
        components = [c for c in nx.attracting_components(graph)]
        if len(components) > 1:
            logger.warning(f"{spec.kind.value} spec has {len(components)} attracting components")
        order = {s: i for i, s in enumerate(spec.states)}
        best = min(components, key=lambda c: min(order[s] for s in c))
        return sorted(best, key=order.get)

    @staticmethod
    def stationary(spec: ProcessSpec) -> np.ndarray:
        """Exact stationary distribution over spec.states, zero off the recurrent component"""
        recurrent = SynthService.recurrent_states(spec)
        index = [spec.states.index(s) for s in recurrent]
        T = spec.transition_matrix()[np.ix_(index, index)]

        basis = null_space(T.T - np.eye(len(index)))
        if basis.shape[1] != 1:
            raise NumericalError(
                "Balance equations do not have a unique solution",
                diagnostics={"kind": spec.kind.value, "dimension": basis.shape[1]},
            )
        vector = np.abs(basis[:, 0])
        pi = np.zeros(spec.n_states)
        pi[index] = vector / vector.sum()
        return pi

    @staticmethod
    def _recurrent_emits(spec: ProcessSpec) -> Tuple[np.ndarray, np.ndarray]:
        pi = SynthService.stationary(spec)
        emit = np.array([spec.emit_probability(s) for s in spec.states])
        keep = pi > 0
        return pi[keep], emit[keep]

    @staticmethod
    def oracle_complexity(spec: ProcessSpec) -> float:
        pi, _ = SynthService._recurrent_emits(spec)
        return InfoTheoryService.shannon_entropy(pi / pi.sum())

    @staticmethod
    def oracle_entropy_rate(spec: ProcessSpec) -> float:
        """sum_s pi(s) H(emit_s)"""
        pi, emit = SynthService._recurrent_emits(spec)
        return float(
            sum(w * InfoTheoryService.shannon_entropy([1.0 - e, e]) for w, e in zip(pi, emit))
        )

    @staticmethod
    def oracle_optimal_accuracy(spec: ProcessSpec) -> float:
        """Accuracy of predicting the likelier symbol of the true current state"""
        pi, emit = SynthService._recurrent_emits(spec)
        return float(np.sum(pi * np.maximum(emit, 1.0 - emit)))

    @staticmethod
    def to_model(spec: ProcessSpec) -> CausalStateModel:
        """Recurrent part of a spec in causal-state-model form"""
        recurrent = SynthService.recurrent_states(spec)
        return CausalStateModel(
            states=tuple(recurrent),
            emit={s: spec.emit_probability(s) for s in recurrent},
            transitions={
                (s, x): t
                for (s, x), (t, p) in sorted(spec.transitions.items())
                if s in recurrent and p > 0
            },
            suffix_map={},
            history_length=0,
        )

    @staticmethod
    def _walk(spec: ProcessSpec, n_days: int, bins_per_day: int, rng: np.random.Generator) -> np.ndarray:
        n = spec.n_states
        emit = np.array([spec.emit_probability(s) for s in spec.states])
        successor = np.zeros((n, 2), dtype=np.int64)
        for (s, x), (t, _) in spec.transitions.items():
            successor[spec.states.index(s), x] = spec.states.index(t)

        if spec.start is not None:
            start = np.zeros(n)
            start[spec.states.index(spec.start)] = 1.0
        else:
            start = SynthService.stationary(spec)

        bits = np.empty((n_days, bins_per_day), dtype=np.uint8)
        for d in range(n_days):
            state = rng.choice(n, p=start)
            draws = rng.random(bins_per_day)
            for t in range(bins_per_day):
                bit = int(draws[t] < emit[state])
                bits[d, t] = bit
                state = successor[state, bit]
        return bits.ravel()

    @staticmethod
    def generate(
        spec: ProcessSpec,
        n_days: int,
        bins_per_day: int,
        seed: int,
        series_id: str = "",
        bin_seconds: int = 600,
    ) -> BinarySeries:
        """Each day starts from the stationary distribution and walks the machine"""
        if n_days < 1 or bins_per_day < 1:
            raise ConfigurationError("n_days and bins_per_day must be positive")
        rng = np.random.default_rng(seed)
        return BinarySeries(
            bits=SynthService._walk(spec, n_days, bins_per_day, rng),
            bin_seconds=bin_seconds,
            bins_per_day=bins_per_day,
            n_days=n_days,
            series_id=series_id,
        )

    @staticmethod
    def generate_drifted(
        spec: ProcessSpec,
        drift_spec: ProcessSpec,
        n_days: int,
        drift_days: int,
        bins_per_day: int,
        seed: int,
        series_id: str = "",
        bin_seconds: int = 600,
    ) -> BinarySeries:
        """Series whose last `drift_days` days are sampled from `drift_spec`"""
        if not 0 <= drift_days <= n_days:
            raise ConfigurationError(f"drift_days must lie in [0, {n_days}], got {drift_days}")
        head = SynthService._walk(
            spec, n_days - drift_days, bins_per_day, np.random.default_rng(derive_seed(seed, 0))
        )
        tail = SynthService._walk(
            drift_spec, drift_days, bins_per_day, np.random.default_rng(derive_seed(seed, 1))
        )
        return BinarySeries(
            bits=np.concatenate([head, tail]),
            bin_seconds=bin_seconds,
            bins_per_day=bins_per_day,
            n_days=n_days,
            series_id=series_id,
        )
