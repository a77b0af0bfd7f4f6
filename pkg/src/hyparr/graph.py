"""Simple graphs on vertices 1..n."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidSpec


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        norm = set()
        for e in self.edges:
            i, j = sorted(e)
            if i == j:
                raise InvalidSpec(f"loop at vertex {i}")
            if not (1 <= i and j <= self.n):
                raise InvalidSpec(f"edge {(i, j)} out of range for {self.n} vertices")
            if (i, j) in norm:
                raise InvalidSpec(f"repeated edge {(i, j)}")
            norm.add((i, j))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, tuple(combinations(range(1, n + 1), 2)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, tuple((i, i + 1) for i in range(1, n)))

    def __str__(self):
        return f"G(n={self.n}, edges={list(self.edges)})"


def all_graphs(n: int):
    """Every labelled simple graph on ``n`` vertices."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(p for b, p in enumerate(pairs) if mask >> b & 1))
