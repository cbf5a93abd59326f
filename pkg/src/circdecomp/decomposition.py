"""Value types for Hamilton decompositions and odd alternating 4-cycle witnesses."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import InvalidSpec
from .graph_core import Edge, canon


@dataclass(frozen=True)
class Decomposition:
    cycles: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(tuple(c) for c in self.cycles))

    def __len__(self) -> int:
        return len(self.cycles)

    def cycle_edges(self, index: int) -> list[Edge]:
        cyc = self.cycles[index]
        return [canon(cyc[t], cyc[(t + 1) % len(cyc)]) for t in range(len(cyc))]

    def edge_counter(self) -> Counter[Edge]:
        total: Counter[Edge] = Counter()
        for i in range(len(self.cycles)):
            total.update(self.cycle_edges(i))
        return total

    def owner(self) -> dict[Edge, int]:
        """Edge -> index of the cycle containing it (simple hosts only)."""
        return {e: i for i in range(len(self.cycles)) for e in self.cycle_edges(i)}

    def relabeled(self, mapping: Sequence[int] | Mapping[int, int]) -> "Decomposition":
        return Decomposition(tuple(tuple(mapping[v] for v in c) for c in self.cycles))

    def to_json(self) -> dict:
        return {"cycles": [list(c) for c in self.cycles]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Decomposition":
        try:
            return cls(tuple(tuple(int(v) for v in c) for c in data["cycles"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidSpec(f"malformed decomposition JSON: {exc}") from exc


@dataclass(frozen=True)
class Q2Certificate:
    """An odd alternating 4-cycle.

    ``quad = (v1, v2, v3, v4)``; edges v1v2 and v3v4 lie in cycle
    ``pairing[0]``, edges v2v3 and v4v1 in cycle ``pairing[1]``. ``diagonal``
    is the opposite pair at odd distance along both cycles.
    """

    quad: tuple[int, int, int, int]
    pairing: tuple[int, int]
    diagonal: tuple[int, int]

    def relabeled(self, mapping: Sequence[int] | Mapping[int, int]) -> "Q2Certificate":
        return Q2Certificate(
            tuple(mapping[v] for v in self.quad),
            self.pairing,
            tuple(mapping[v] for v in self.diagonal),
        )

    def to_json(self) -> dict:
        return {
            "quad": list(self.quad),
            "pairing": list(self.pairing),
            "diagonal": list(self.diagonal),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Q2Certificate":
        try:
            return cls(
                tuple(int(v) for v in data["quad"]),
                tuple(int(v) for v in data["pairing"]),
                tuple(int(v) for v in data["diagonal"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidSpec(f"malformed certificate JSON: {exc}") from exc


def trace_cycle(edges: Iterable[Edge], vertex_count: int) -> tuple[int, ...] | None:
    """Order an edge set as a spanning cycle starting at 0, or None if it is not one."""
    adj: dict[int, list[int]] = defaultdict(list)
    count = 0
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
        count += 1
    if count != vertex_count or any(len(adj[v]) != 2 for v in range(vertex_count)):
        return None
    seq = [0]
    prev, cur = -1, 0
    while True:
        a, b = adj[cur]
        nxt = b if a == prev else a
        if nxt == 0:
            break
        seq.append(nxt)
        prev, cur = cur, nxt
        if len(seq) > vertex_count:
            return None
    return tuple(seq) if len(seq) == vertex_count else None
