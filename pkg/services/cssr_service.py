# services/cssr_service.py
"""
Causal State Splitting Reconstruction and causal-state prediction
"""
from collections import defaultdict
from typing import Dict, List, Optional, Sequence, Tuple, Union
import logging

import networkx as nx
import numpy as np

from core.exceptions import ArgumentError, ConfigurationError, DataError
from core.homogeneity import homogeneity_pvalue
from core.linalg import left_fixed_point
from domains.entities import BinarySeries, CausalStateModel, SuffixStats, SYMBOLS
from dtos.config_dto import CssrConfig
from services.infotheory_service import InfoTheoryService, window_codes
from utils.monitoring import measure_time, track_metric

logger = logging.getLogger(__name__)

History = Union[str, Sequence[int], np.ndarray]


class _StatePartition:
    """Mutable suffix -> state assignment used while a model is being reconstructed"""

    def __init__(self, stats: SuffixStats, config: CssrConfig):
        self.stats = stats
        self.config = config
        self.assignment: Dict[str, int] = {}
        self.members: Dict[int, List[str]] = {}
        self.pooled: Dict[int, np.ndarray] = {}
        self._next_id = 0

    # -- bookkeeping --------------------------------------------------------

    def _new_state(self, suffix: str) -> int:
        state = self._next_id
        self._next_id += 1
        self.members[state] = []
        self.pooled[state] = np.zeros(2, dtype=np.int64)
        self._add(suffix, state)
        return state

    def _add(self, suffix: str, state: int) -> None:
        self.assignment[suffix] = state
        self.members[state].append(suffix)
        self.pooled[state] += self.stats.counts(suffix)

    def _repool(self, state: int) -> None:
        self.pooled[state] = sum(
            (self.stats.counts(m) for m in self.members[state]),
            np.zeros(2, dtype=np.int64),
        )

    def _matches(self, counts: np.ndarray, state: int) -> bool:
        pvalue = homogeneity_pvalue(self.config.test, counts, self.pooled[state])
        return pvalue >= self.config.alpha

    def _lookup(self, history: str) -> int:
        """State of the longest assigned suffix of `history` ("" is always assigned)"""
        for start in range(len(history) + 1):
            state = self.assignment.get(history[start:])
            if state is not None:
                return state
        raise DataError(f"No assigned suffix for history {history!r}")

    def _long_members(self, state: int, length: int) -> List[str]:
        return [m for m in self.members[state] if len(m) == length]

    def _count(self, suffixes: Sequence[str]) -> int:
        return sum(self.stats.count(s) for s in suffixes)

    # -- phase II: splitting ------------------------------------------------

    def grow(self, history_length: int) -> None:
        """Extend every suffix one symbol into the past until length L"""
        self._new_state("")
        for length in range(history_length):
            for suffix in self.stats.suffixes(length):
                parent = self.assignment[suffix]
                for symbol in SYMBOLS:
                    child = f"{symbol}{suffix}"
                    if child in self.stats:
                        self._place(child, parent)

    def _place(self, child: str, parent: int) -> None:
        counts = self.stats.counts(child)
        # Rare histories inherit their parent state
        if counts.sum() < self.config.min_count or self._matches(counts, parent):
            self._add(child, parent)
            return

        candidates = [s for s in self.members if s != parent and self._matches(counts, s)]
        if candidates:
            best = max(candidates, key=lambda s: (int(self.pooled[s].sum()), -s))
            self._add(child, best)
        else:
            new = self._new_state(child)
            logger.debug(f"History {child!r} split from state {parent} into state {new}")

    # -- phase III: determinization -----------------------------------------

    def _successor_groups(self, state: int, symbol: int, length: int) -> Dict[int, List[str]]:
        """Length-L members grouped by the state reached on `symbol`; unseen transitions omitted"""
        groups: Dict[int, List[str]] = defaultdict(list)
        for history in self._long_members(state, length):
            if self.stats.counts(history)[symbol] == 0:
                continue
            extended = f"{history}{symbol}"
            target = self._lookup(extended[len(extended) - length:] if length else "")
            groups[target].append(history)
        return groups

    def _split(self, state: int, groups: Dict[int, List[str]], length: int) -> None:
        ranked = sorted(groups.values(), key=lambda g: (-self._count(g), min(g)))
        grouped = {h for g in ranked for h in g}
        # Histories never followed by the symbol fit any successor: they join the largest group
        keep = set(ranked[0]) | {
            m for m in self._long_members(state, length) if m not in grouped
        }
        self.members[state] = [m for m in self.members[state] if len(m) < length or m in keep]
        self._repool(state)
        for group in ranked[1:]:
            new = self._new_state(group[0])
            for history in group[1:]:
                self._add(history, new)
        logger.debug(f"Determinization split state {state} into {len(ranked)} states")

    def determinize(self, history_length: int) -> None:
        changed = True
        while changed:
            changed = False
            for state in sorted(self.members):
                for symbol in SYMBOLS:
                    groups = self._successor_groups(state, symbol, history_length)
                    if len(groups) > 1:
                        self._split(state, groups, history_length)
                        changed = True
                        break
                if changed:
                    break

    # -- assembly -----------------------------------------------------------

    def _recurrent_states(self, transitions: Dict[Tuple[int, int], int]) -> List[int]:
        graph = nx.DiGraph()
        graph.add_nodes_from({s for s, _ in transitions} | set(transitions.values()))
        graph.add_edges_from((s, t) for (s, _), t in transitions.items())

        revisitable = [
            component
            for component in nx.strongly_connected_components(graph)
            if len(component) > 1 or any(graph.has_edge(s, s) for s in component)
        ]
        if not revisitable:
            return []
        best = max(
            revisitable,
            key=lambda c: (sum(int(self.pooled[s].sum()) for s in c), -min(c)),
        )
        return sorted(best)

    def to_model(self, history_length: int) -> CausalStateModel:
        candidates = [s for s in self.members if self._long_members(s, history_length)]
        for state in candidates:
            self.pooled[state] = sum(
                (self.stats.counts(m) for m in self._long_members(state, history_length)),
                np.zeros(2, dtype=np.int64),
            )

        transitions: Dict[Tuple[int, int], int] = {}
        for state in candidates:
            for symbol in SYMBOLS:
                groups = self._successor_groups(state, symbol, history_length)
                targets = [t for t in groups if t in candidates]
                if len(targets) == 1:
                    transitions[(state, symbol)] = targets[0]

        kept = self._recurrent_states(transitions)
        if not kept:
            largest = max(candidates, key=lambda s: (int(self.pooled[s].sum()), -s))
            logger.warning("No recurrent component found; keeping the most visited state only")
            kept = [largest]

        order = sorted(kept, key=lambda s: min((len(m), m) for m in self.members[s]))
        labels = {state: f"S{i}" for i, state in enumerate(order)}

        emit, state_counts = {}, {}
        for state in order:
            c0, c1 = (int(c) for c in self.pooled[state])
            emit[labels[state]] = c1 / (c0 + c1)
            state_counts[labels[state]] = (c0, c1)

        return CausalStateModel(
            states=tuple(labels[s] for s in order),
            emit=emit,
            transitions={
                (labels[s], symbol): labels[t]
                for (s, symbol), t in sorted(transitions.items())
                if s in labels and t in labels
            },
            suffix_map={m: labels[s] for s in order for m in sorted(self.members[s])},
            history_length=history_length,
            alpha=self.config.alpha,
            test=self.config.test,
            state_counts=state_counts,
        )


class CssrService:
    """CSSR inference plus causal-state prediction and complexity"""

    @staticmethod
    def count_suffixes(series: BinarySeries, L: int) -> SuffixStats:
        """Next-symbol counts of every within-day history of length 0..L"""
        if L < 0:
            raise ArgumentError(f"History length must be >= 0, got {L}")
        if L >= series.bins_per_day:
            raise ConfigurationError(
                f"History length {L} must be below the {series.bins_per_day} bins of a day"
            )
        if len(series) <= L:
            raise DataError(f"Series of length {len(series)} is too short for L={L}")

        next_counts: Dict[str, np.ndarray] = {}
        for length in range(L + 1):
            codes, counts = np.unique(window_codes(series, length + 1), return_counts=True)
            for code, count in zip(codes.tolist(), counts.tolist()):
                suffix = format(code >> 1, f"0{length}b") if length else ""
                entry = next_counts.setdefault(suffix, np.zeros(2, dtype=np.int64))
                entry[code & 1] += count
        return SuffixStats(max_length=L, next_counts=next_counts)

    @staticmethod
    @measure_time("cssr_infer")
    def infer(series: BinarySeries, config: CssrConfig) -> CausalStateModel:
        """Reconstruct the causal state model of `series` at history length config.history_length"""
        L = config.history_length
        if L is None:
            raise ConfigurationError("CSSR inference needs an explicit history length")
        stats = CssrService.count_suffixes(series, L)

        ones = int(series.bits.sum())
        if ones in (0, len(series)):
            return CssrService._constant_model(stats, config, symbol=int(ones > 0))

        partition = _StatePartition(stats, config)
        partition.grow(L)
        partition.determinize(L)
        model = partition.to_model(L)

        track_metric("cssr_states", model.n_states, {"L": str(L)})
        logger.debug(f"Inferred {model.n_states} states for {series.series_id!r} at L={L}")
        return model

    @staticmethod
    def _constant_model(stats: SuffixStats, config: CssrConfig, symbol: int) -> CausalStateModel:
        total = stats.count("")
        return CausalStateModel(
            states=("S0",),
            emit={"S0": float(symbol)},
            transitions={("S0", symbol): "S0"},
            suffix_map={s: "S0" for s in sorted(stats.next_counts, key=lambda s: (len(s), s))},
            history_length=stats.max_length,
            alpha=config.alpha,
            test=config.test,
            state_counts={"S0": (0, total) if symbol else (total, 0)},
        )

    @staticmethod
    def _as_history(history: History) -> str:
        if isinstance(history, str):
            return history
        return "".join(str(int(b)) for b in np.asarray(history).ravel())

    @staticmethod
    def _state_emit(model: CausalStateModel, history: str) -> Optional[float]:
        """Emit probability of the state of the longest known suffix of `history`"""
        tail = history[max(0, len(history) - model.history_length):]
        for start in range(len(tail) + 1):
            state = model.suffix_map.get(tail[start:])
            if state is not None:
                return model.emit[state]
        return None

    @staticmethod
    def stationary_distribution(model: CausalStateModel) -> np.ndarray:
        """Left fixed point of the symbol-marginalized state transition matrix"""
        if model.n_states == 0:
            raise DataError("Model has no recurrent states")
        return left_fixed_point(model.transition_matrix())

    @staticmethod
    def statistical_complexity(model: CausalStateModel) -> float:
        """Entropy in bits of the stationary state distribution"""
        return InfoTheoryService.shannon_entropy(CssrService.stationary_distribution(model))

    @staticmethod
    def stationary_emit(model: CausalStateModel) -> float:
        pi = CssrService.stationary_distribution(model)
        return float(sum(p * model.emit[s] for p, s in zip(pi, model.states)))

    @staticmethod
    def predict_distribution(model: CausalStateModel, history: History) -> float:
        """P(next symbol = 1 | history); unknown histories get the stationary average"""
        p = CssrService._state_emit(model, CssrService._as_history(history))
        return p if p is not None else CssrService.stationary_emit(model)

    @staticmethod
    def predict_next(model: CausalStateModel, history: History) -> int:
        # Exactly 0.5 predicts 0
        return int(CssrService.predict_distribution(model, history) > 0.5)

    @staticmethod
    def predict_series(model: CausalStateModel, series: BinarySeries) -> Tuple[np.ndarray, np.ndarray]:
        """Predicted bits and P(1) for every bin; histories restart each day"""
        L = model.history_length
        probs = np.empty(len(series))
        cache: Dict[str, float] = {}
        fallback: Optional[float] = None

        i = 0
        for day in series.day_strings():
            for t in range(len(day)):
                history = day[max(0, t - L):t]
                p = cache.get(history)
                if p is None:
                    p = CssrService._state_emit(model, history)
                    if p is None:
                        if fallback is None:
                            fallback = CssrService.stationary_emit(model)
                        p = fallback
                    cache[history] = p
                probs[i] = p
                i += 1

        return (probs > 0.5).astype(np.uint8), probs
